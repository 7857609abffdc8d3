#include "uclab/report_json.hpp"

#include <string>

#include "uclab/error.hpp"

namespace uclab {

using nlohmann::json;

json rational_json(const Rational& r) {
  return json{{"num", r.num().get_str()}, {"den", r.den().get_str()}, {"approx", r.to_double()}};
}

json to_json(const MetricsReport& r) {
  json j;
  j["n"] = r.universe_n;
  j["size"] = r.size;
  j["aod"] = rational_json(r.aod);
  j["avg_abundance"] = rational_json(r.avg_abundance);
  j["max_abundance"] = {{"element", r.max_abundance.element},
                        {"num", r.max_abundance.gamma.num().get_str()},
                        {"den", r.max_abundance.gamma.den().get_str()}};
  j["knill_ratio"] = r.knill_ratio ? json(*r.knill_ratio) : json(nullptr);
  j["is_union_closed"] = r.is_union_closed;
  j["separates"] = r.separates;
  return j;
}

json to_json(const BlockFamily& bf) {
  json t_sets = json::array();
  for (const auto& t : bf.t_sets()) {
    json row = json::array();
    for (std::size_t x : t) row.push_back(x + 1);
    t_sets.push_back(std::move(row));
  }
  const BlockParams& p = bf.params();
  return json{{"k", p.k}, {"m", p.m}, {"s", p.s}, {"t_sets", std::move(t_sets)}};
}

BlockFamily block_family_from_json(const json& j) {
  try {
    BlockParams p{j.at("k").get<std::size_t>(), j.at("m").get<std::size_t>(),
                  j.at("s").get<std::size_t>()};
    std::optional<std::vector<std::vector<std::size_t>>> t;
    if (j.contains("t_sets")) t = j.at("t_sets").get<std::vector<std::vector<std::size_t>>>();
    return build_block_family(p, std::move(t));
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("block family JSON: ") + e.what());
  }
}

json to_json(const CountTable& c) {
  json n_j = json::array();
  json p_j = json::array();
  for (const BigInt& v : c.n_j) n_j.push_back(v.get_str());
  for (const Rational& p : c.p_j) p_j.push_back(rational_json(p));
  return json{{"N_j", n_j}, {"N", c.total.get_str()}, {"p_j", p_j}, {"tau", rational_json(c.tau)}};
}

json to_json(const BlockMetrics& m) {
  return json{{"gamma_out", rational_json(m.gamma_out)},
              {"gamma_in", rational_json(m.gamma_in)},
              {"avg_abundance", rational_json(m.avg_abundance)},
              {"aod", rational_json(m.aod)}};
}

json to_json(const BoundReport& b) {
  return json{{"tau", rational_json(b.tau)},
              {"tau_ok", b.tau_ok},
              {"gamma_out_lower", b.gamma_out_lower},
              {"gamma_out_series", b.gamma_out_series},
              {"gamma_out_linear", b.gamma_out_linear},
              {"gamma_out_two_over_m", b.gamma_out_two_over_m},
              {"gamma_in_range", b.gamma_in_range},
              {"max_t_fraction", rational_json(b.max_t_fraction)},
              {"t_fraction_ok", b.t_fraction_ok},
              {"aod_lower", b.aod_lower},
              {"aod_mixture_upper", b.aod_mixture_upper},
              {"aod_simple_upper", b.aod_simple_upper},
              {"unconditional_true", b.unconditional_true()},
              {"all_true", b.all_true()}};
}

json to_json(const SeparationReport& r) {
  json pairs = json::array();
  for (const auto& [i, j] : r.witness_pairs) pairs.push_back({i, j});
  return json{{"separates", r.separates}, {"witness_pairs", std::move(pairs)}};
}

json to_json(const BandReport& b) {
  return json{{"quantity", to_string(b.quantity)}, {"min_ratio", b.min_ratio},
              {"max_ratio", b.max_ratio},          {"first_last_ratio", b.first_last_ratio},
              {"spread", b.spread},                {"band_ok", b.band_ok}};
}

}  // namespace uclab
