#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "oracle_check.hpp"
#include "uclab/asymptotics.hpp"
#include "uclab/construction.hpp"
#include "uclab/error.hpp"
#include "uclab/family.hpp"
#include "uclab/metrics.hpp"
#include "uclab/report_json.hpp"

namespace uclab::cli {

namespace {

using nlohmann::json;

constexpr const char* kFamilyFormatVersion = "1";
constexpr const char* kSweepCsvVersion = "1";
constexpr const char* kReportJsonVersion = "1";
constexpr std::size_t kOracleDefaultCap = 100'000;

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::CapExceeded: return kCapExceeded;
    case ErrorKind::InternalInconsistency: return kInternal;
    case ErrorKind::TooFewRecords: return kBandFailed;
    default: return kInputError;
  }
}

/// Materialization cap: --cap, else $UCLAB_CAP, else the library default.
std::size_t resolve_cap(const std::optional<std::size_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("UCLAB_CAP"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (*end != '\0' || v == 0) {
      throw Error(ErrorKind::PreconditionFailed, std::string("UCLAB_CAP is not a positive integer: ") + env);
    }
    return static_cast<std::size_t>(v);
  }
  return kDefaultClosureCap;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::PreconditionFailed, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::PreconditionFailed, "cannot write " + path);
  f << text;
}

std::optional<std::vector<std::vector<std::size_t>>> parse_t_sets(const std::string& text) {
  if (text.empty()) return std::nullopt;
  try {
    return json::parse(text).get<std::vector<std::vector<std::size_t>>>();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("--t-sets: ") + e.what());
  }
}

// Parameters shared by the commands that accept --k --m --s.
struct ParamFlags {
  std::size_t k = 0;
  std::size_t m = 0;
  std::size_t s = 0;
  std::string t_sets;
  CLI::Option* k_opt = nullptr;

  void add_to(CLI::App& cmd, bool required) {
    k_opt = cmd.add_option("--k", k, "block size");
    auto* m_opt = cmd.add_option("--m", m, "number of blocks");
    auto* s_opt = cmd.add_option("--s", s, "size of each T_i");
    k_opt->needs(m_opt)->needs(s_opt);
    m_opt->needs(k_opt);
    s_opt->needs(k_opt);
    if (required) {
      k_opt->required();
      m_opt->required();
      s_opt->required();
    }
    cmd.add_option("--t-sets", t_sets, "JSON list of T_i (1-based), e.g. [[1],[4]]");
  }
  [[nodiscard]] bool given() const { return k_opt != nullptr && k_opt->count() > 0; }
  [[nodiscard]] BlockFamily build() const { return build_block_family({k, m, s}, parse_t_sets(t_sets)); }
};

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json size_json(const BigInt& v) {
  if (v.fits_ulong_p()) return v.get_ui();
  return v.get_str();
}

// ---------------------------------------------------------------------------

int cmd_construct(const ParamFlags& p, bool materialize_flag, const std::optional<std::size_t>& cap_flag,
                  const std::string& out_path, std::ostream& out) {
  const BlockFamily bf = p.build();
  if (materialize_flag) {
    write_output(out_path, serialize_family(materialize(bf, resolve_cap(cap_flag))), out);
  } else {
    write_output(out_path, dump(to_json(bf)), out);
  }
  return kOk;
}

int cmd_analyze_file(const std::string& path, unsigned workers, std::ostream& out) {
  const Family f = parse_family(read_file(path));
  out << dump(to_json(analyze_family(f, workers)));
  return kOk;
}

int cmd_analyze_params(const ParamFlags& p, std::ostream& out) {
  const BlockFamily bf = p.build();
  const BlockParams& params = bf.params();
  const CountTable counts = count_table(params);
  const BlockMetrics metrics = exact_metrics(params);
  const BoundReport bounds = verify_bounds(params, metrics);

  // gamma_in > gamma_out, so the most abundant element is the smallest in T.
  const std::size_t top = bf.t_union().elements().front() + 1;
  json j;
  j["n"] = params.n();
  j["size"] = size_json(counts.total);
  j["aod"] = rational_json(metrics.aod);
  j["avg_abundance"] = rational_json(metrics.avg_abundance);
  j["max_abundance"] = {{"element", top},
                        {"num", metrics.gamma_in.num().get_str()},
                        {"den", metrics.gamma_in.den().get_str()}};
  j["knill_ratio"] = metrics.gamma_in.to_double() * log2_big(counts.total);
  j["is_union_closed"] = true;
  // The k - s >= 2 elements of B_1 outside T_1 always appear together.
  j["separates"] = false;
  j["block_family"] = to_json(bf);
  j["counts"] = to_json(counts);
  j["gamma_out"] = rational_json(metrics.gamma_out);
  j["gamma_in"] = rational_json(metrics.gamma_in);
  j["bounds"] = to_json(bounds);
  out << dump(j);
  return kOk;
}

int cmd_oracle_check(std::size_t k_max, std::size_t m_max, std::size_t cap, bool inject_fault,
                     std::ostream& out) {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t skip = 0;
  for (std::size_t k = 3; k <= k_max; ++k) {
    for (std::size_t m = 2; m <= m_max; ++m) {
      for (std::size_t s = 1; s + 2 <= k; ++s) {
        const CellResult r =
            check_cell({k, m, s}, cap, inject_fault ? FamilyFault(drop_last_member) : FamilyFault{});
        out << "k=" << k << " m=" << m << " s=" << s << " N=" << r.total << ' ';
        switch (r.status) {
          case CellStatus::Pass: out << "PASS\n"; ++pass; break;
          case CellStatus::Skip: out << "SKIP (" << r.detail << ")\n"; ++skip; break;
          case CellStatus::Fail: out << "FAIL: " << r.detail << '\n'; ++fail; break;
        }
      }
    }
  }
  out << "summary: " << pass << " pass, " << fail << " fail, " << skip << " skip\n";
  return fail == 0 ? kOk : kCheckFailed;
}

int cmd_sweep(unsigned from, unsigned to, double spread, const std::string& csv_path, unsigned workers,
              std::ostream& out, std::ostream& err) {
  if (from > to || to > 40) {
    throw Error(ErrorKind::PreconditionFailed, "need from <= to <= 40");
  }
  const std::vector<std::size_t> targets = power_of_two_targets(from, to);
  const std::vector<SweepRow> rows = sweep(targets, workers);

  std::vector<SweepRecord> records;
  json infeasible = json::array();
  for (const SweepRow& row : rows) {
    if (row.record) {
      records.push_back(*row.record);
    } else {
      infeasible.push_back({{"n_target", row.n_target}, {"error", row.error}});
    }
  }

  std::ostream* json_out = &out;
  if (csv_path == "-") {
    write_sweep_csv(out, rows);
    json_out = &err;
  } else if (!csv_path.empty()) {
    std::ostringstream csv;
    write_sweep_csv(csv, rows);
    write_output(csv_path, csv.str(), out);
  }

  json report;
  report["rows"] = records.size();
  report["infeasible"] = infeasible;
  bool ok = true;
  for (BandQuantity q : {BandQuantity::Aod, BandQuantity::AvgAbundance}) {
    try {
      const BandReport band = theta_band(records, q, spread);
      report[to_string(q)] = to_json(band);
      ok = ok && band.band_ok;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::TooFewRecords) throw;
      report[to_string(q)] = {{"band_ok", false}, {"error", e.what()}};
      ok = false;
    }
  }
  report["band_ok"] = ok;
  *json_out << dump(report);
  return ok ? kOk : kBandFailed;
}

json side_json(const Family& f) {
  json j;
  j["size"] = f.size();
  j["separation"] = to_json(separates_points(f));
  j["aod"] = rational_json(aod(f, AodMethod::GammaWeighted));
  j["avg_abundance"] = rational_json(average_abundance(f));
  return j;
}

Rational relative_change(const Rational& before, const Rational& after) {
  Rational d = after - before;
  if (d < Rational(0)) d = Rational(0) - d;
  return d / before;
}

int cmd_separate(const Family& f, std::ostream& out) {
  if (!is_union_closed(f)) {
    throw Error(ErrorKind::PreconditionFailed, "input family is not union-closed");
  }
  const Family after = augment_cosingletons(f);
  json j;
  j["n"] = f.universe_n();
  j["before"] = side_json(f);
  j["after"] = side_json(after);
  j["after"]["is_union_closed"] = is_union_closed(after);
  j["relative_aod_change"] =
      rational_json(relative_change(aod(f, AodMethod::GammaWeighted), aod(after, AodMethod::GammaWeighted)));
  j["relative_avg_abundance_change"] =
      rational_json(relative_change(average_abundance(f), average_abundance(after)));
  out << dump(j);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Union-closed block families: construction, exact metrics, oracle checks, sweeps", "uclab"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("uclab ") + UCLAB_VERSION_STRING +
                                        " (family format " + kFamilyFormatVersion + ", sweep csv " +
                                        kSweepCsvVersion + ", report json " + kReportJsonVersion + ")");

  // construct
  auto* construct = app.add_subcommand("construct", "build a block family (implicit JSON or materialized file)");
  ParamFlags construct_params;
  construct_params.add_to(*construct, true);
  bool construct_materialize = false;
  std::optional<std::size_t> construct_cap;
  std::string construct_out;
  construct->add_flag("--materialize", construct_materialize, "enumerate every member");
  construct->add_option("--cap", construct_cap, "maximum number of members to materialize");
  construct->add_option("--out", construct_out, "output file (default stdout)");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "exact metrics of a family file or of block parameters");
  std::string analyze_file;
  ParamFlags analyze_params;
  unsigned analyze_workers = 1;
  auto* file_opt = analyze->add_option("file", analyze_file, "family file");
  analyze_params.add_to(*analyze, false);
  file_opt->excludes(analyze_params.k_opt);
  analyze->add_option("--workers", analyze_workers, "threads for the pairwise AOD")->check(CLI::PositiveNumber);

  // oracle-check
  auto* oracle = app.add_subcommand("oracle-check", "compare the structured family with the union-closure oracle");
  std::size_t k_max = 6;
  std::size_t m_max = 3;
  std::size_t oracle_cap = kOracleDefaultCap;
  bool inject_fault = false;
  oracle->add_option("--k-max", k_max, "largest block size")->capture_default_str();
  oracle->add_option("--m-max", m_max, "largest number of blocks")->capture_default_str();
  oracle->add_option("--cap", oracle_cap, "skip cells with more members")->capture_default_str();
  oracle->add_flag("--inject-fault", inject_fault)->group("");

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "asymptotic sweep over n_target = 2^from .. 2^to");
  unsigned from = 0;
  unsigned to = 0;
  double spread = kDefaultSpread;
  std::string csv_path;
  unsigned sweep_workers = 1;
  sweep_cmd->add_option("--from", from, "first exponent")->required();
  sweep_cmd->add_option("--to", to, "last exponent")->required();
  sweep_cmd->add_option("--spread", spread, "allowed max/min ratio of the theta ratios")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--csv", csv_path, "CSV output file ('-' for stdout)");
  sweep_cmd->add_option("--workers", sweep_workers, "rows computed in parallel")->check(CLI::PositiveNumber);

  // separate
  auto* separate = app.add_subcommand("separate", "point separation before/after adding co-singletons");
  std::string separate_file;
  ParamFlags separate_params;
  bool separate_materialize = false;
  std::optional<std::size_t> separate_cap;
  auto* sep_file_opt = separate->add_option("file", separate_file, "family file");
  separate_params.add_to(*separate, false);
  sep_file_opt->excludes(separate_params.k_opt);
  separate->add_flag("--materialize", separate_materialize, "implied in parameter mode");
  separate->add_option("--cap", separate_cap, "maximum number of members to materialize");

  // examples
  auto* examples = app.add_subcommand("examples", "print a small reference family");
  std::string example_name = "triple";
  std::size_t example_n = 3;
  std::string example_out;
  examples->add_option("--name", example_name, "triple | chain")->capture_default_str();
  examples->add_option("--n", example_n, "universe size for chain")->capture_default_str();
  examples->add_option("--out", example_out, "output file (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  try {
    if (construct->parsed()) {
      return cmd_construct(construct_params, construct_materialize, construct_cap, construct_out, out);
    }
    if (analyze->parsed()) {
      if (analyze_params.given()) return cmd_analyze_params(analyze_params, out);
      if (analyze_file.empty()) throw Error(ErrorKind::PreconditionFailed, "analyze needs FILE or --k --m --s");
      return cmd_analyze_file(analyze_file, analyze_workers, out);
    }
    if (oracle->parsed()) return cmd_oracle_check(k_max, m_max, oracle_cap, inject_fault, out);
    if (sweep_cmd->parsed()) return cmd_sweep(from, to, spread, csv_path, sweep_workers, out, err);
    if (separate->parsed()) {
      if (separate_params.given()) {
        return cmd_separate(materialize(separate_params.build(), resolve_cap(separate_cap)), out);
      }
      if (separate_file.empty()) throw Error(ErrorKind::PreconditionFailed, "separate needs FILE or --k --m --s");
      return cmd_separate(parse_family(read_file(separate_file)), out);
    }
    if (examples->parsed()) {
      write_output(example_out, serialize_family(reference_family(example_name, example_n)), out);
      return kOk;
    }
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
  return kInputError;
}

}  // namespace uclab::cli
