#include "uclab/construction.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "uclab/error.hpp"

namespace uclab {

namespace {

BigInt big(std::size_t v) { return BigInt(static_cast<unsigned long>(v)); }

[[noreturn]] void invalid(const std::string& constraint, const BlockParams& p) {
  throw Error(ErrorKind::InvalidParams,
              "violated constraint " + constraint + " (k=" + std::to_string(p.k) +
                  ", m=" + std::to_string(p.m) + ", s=" + std::to_string(p.s) + ")");
}

}  // namespace

void BlockParams::validate() const {
  if (m < 2) invalid("m >= 2", *this);
  if (s < 1) invalid("s >= 1", *this);
  if (k < s + 2) invalid("s <= k-2", *this);
}

SetBits BlockFamily::block(std::size_t i) const {
  SetBits b(params_.n());
  for (std::size_t x = i * params_.k; x < (i + 1) * params_.k; ++x) b.insert(x);
  return b;
}

SetBits BlockFamily::t_set(std::size_t i) const {
  return SetBits::from_elements(params_.n(), t_sets_[i]);
}

SetBits BlockFamily::t_union() const {
  SetBits t(params_.n());
  for (std::size_t i = 0; i < params_.m; ++i) t |= t_set(i);
  return t;
}

std::vector<SetBits> BlockFamily::generators() const {
  const std::vector<std::size_t> t = t_union().elements();
  std::vector<SetBits> gens;
  for (std::size_t i = 0; i < params_.m; ++i) {
    const SetBits b = block(i);
    for (std::size_t j : t) {
      SetBits g = b;
      g.insert(j);
      gens.push_back(std::move(g));
    }
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return gens;
}

BlockFamily build_block_family(const BlockParams& params,
                               std::optional<std::vector<std::vector<std::size_t>>> t_choice) {
  params.validate();
  BlockFamily bf;
  bf.params_ = params;
  if (!t_choice) {
    for (std::size_t i = 0; i < params.m; ++i) {
      std::vector<std::size_t> t;
      for (std::size_t x = 0; x < params.s; ++x) t.push_back(i * params.k + x);
      bf.t_sets_.push_back(std::move(t));
    }
    return bf;
  }

  if (t_choice->size() != params.m) {
    throw Error(ErrorKind::InvalidParams, "t_sets must list exactly m = " +
                                              std::to_string(params.m) + " sets");
  }
  for (std::size_t i = 0; i < params.m; ++i) {
    std::vector<std::size_t> t = (*t_choice)[i];
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());
    if (t.size() != params.s) {
      throw Error(ErrorKind::InvalidParams,
                  "T_" + std::to_string(i + 1) + " must have exactly s = " +
                      std::to_string(params.s) + " distinct elements");
    }
    for (std::size_t& x : t) {
      if (x < i * params.k + 1 || x > (i + 1) * params.k) {
        throw Error(ErrorKind::InvalidParams, "T_" + std::to_string(i + 1) + " element " +
                                                  std::to_string(x) + " is not in block B_" +
                                                  std::to_string(i + 1));
      }
      --x;
    }
    bf.t_sets_.push_back(std::move(t));
  }
  return bf;
}

std::vector<std::vector<std::size_t>> trailing_t_choice(const BlockParams& params) {
  std::vector<std::vector<std::size_t>> out(params.m);
  for (std::size_t i = 0; i < params.m; ++i) {
    for (std::size_t x = (i + 1) * params.k - params.s; x < (i + 1) * params.k; ++x) {
      out[i].push_back(x + 1);
    }
  }
  return out;
}

CountTable count_table(const BlockParams& params) {
  params.validate();
  const std::size_t m = params.m;
  const std::size_t s = params.s;
  CountTable c;
  for (std::size_t j = 1; j <= m; ++j) {
    c.n_j.push_back(binomial(m, j) * pow2((m - j) * s));
    c.total += c.n_j.back();
  }
  for (const BigInt& nj : c.n_j) c.p_j.emplace_back(nj, c.total);
  c.tau = Rational(big(m), pow2(s));
  return c;
}

Family materialize(const BlockFamily& bf, std::size_t cap) {
  const BlockParams& p = bf.params();
  const CountTable counts = count_table(p);
  if (counts.total > big(cap)) {
    throw Error(ErrorKind::CapExceeded, "family has " + counts.total.get_str() +
                                            " members, above cap " + std::to_string(cap));
  }
  std::vector<SetBits> blocks;
  for (std::size_t i = 0; i < p.m; ++i) blocks.push_back(bf.block(i));

  // |F| >= 2^m - 1 and |F| >= 2^|outside T| for every S, so both masks fit.
  std::vector<SetBits> members;
  members.reserve(counts.total.get_ui());
  for (std::uint64_t chosen = 1; chosen < (std::uint64_t{1} << p.m); ++chosen) {
    SetBits base(p.n());
    std::vector<std::size_t> free_t;
    for (std::size_t i = 0; i < p.m; ++i) {
      if ((chosen >> i) & 1U) {
        base |= blocks[i];
      } else {
        free_t.insert(free_t.end(), bf.t_sets()[i].begin(), bf.t_sets()[i].end());
      }
    }
    for (std::uint64_t extra = 0; extra < (std::uint64_t{1} << free_t.size()); ++extra) {
      SetBits a = base;
      for (std::size_t b = 0; b < free_t.size(); ++b) {
        if ((extra >> b) & 1U) a.insert(free_t[b]);
      }
      members.push_back(std::move(a));
    }
  }
  return Family(p.n(), std::move(members));
}

namespace {

struct ClassSums {
  BigInt non_t;  // sum over classes of count * |A \ T|
  BigInt in_t;   // sum over classes of count * |A & T|
};

// Visits every member class (j blocks, u extra T-elements) with its size
// C(m, j) * C((m - j) s, u).
template <typename Visit>
void for_each_class(const BlockParams& p, Visit&& visit) {
  for (std::size_t j = 1; j <= p.m; ++j) {
    const std::size_t free_t = (p.m - j) * p.s;
    const BigInt blocks_choice = binomial(p.m, j);
    BigInt extra_choice = 1;  // C(free_t, u)
    for (std::size_t u = 0; u <= free_t; ++u) {
      visit(j, u, blocks_choice * extra_choice);
      if (u < free_t) {
        extra_choice *= static_cast<unsigned long>(free_t - u);
        mpz_divexact_ui(extra_choice.get_mpz_t(), extra_choice.get_mpz_t(),
                        static_cast<unsigned long>(u + 1));
      }
    }
  }
}

}  // namespace

BlockMetrics exact_metrics(const BlockParams& p) {
  const CountTable counts = count_table(p);
  const BigInt& total = counts.total;
  const std::size_t m = p.m;

  // gamma_out = (sum_j j N_j) / (m N)
  BigInt out_hits_times_m = 0;
  for (std::size_t j = 1; j <= m; ++j) out_hits_times_m += counts.n_j[j - 1] * big(j);

  // Members missing a fixed x in T_1: block 1 not chosen and x not among the
  // extras, i.e. half of the extra subsets over the (m - j) s free T-elements.
  BigInt missing_x = 0;
  for (std::size_t j = 1; j < m; ++j) {
    missing_x += binomial(m - 1, j) * pow2((m - j) * p.s - 1);
  }
  const BigInt in_hits = total - missing_x;

  BlockMetrics r;
  r.gamma_out = Rational(out_hits_times_m, big(m) * total);
  r.gamma_in = Rational(in_hits, total);

  const std::size_t n = p.n();
  const std::size_t t_size = m * p.s;
  r.avg_abundance =
      (Rational(big(n - t_size)) * r.gamma_out + Rational(big(t_size)) * r.gamma_in) /
      Rational(big(n));

  // AOD = (1/N) sum over classes count * [|A\T| gamma_out + |A&T| gamma_in] / |A|
  //     = (1 / (m N^2)) sum_d (out_hits_times_m * S_d + m * in_hits * T_d) / d,
  // with S_d, T_d the class sums of count*|A\T| and count*|A&T| at |A| = d.
  std::map<std::size_t, ClassSums> by_size;
  for_each_class(p, [&](std::size_t j, std::size_t u, const BigInt& count) {
    ClassSums& sums = by_size[j * p.k + u];
    sums.non_t += count * big(j * (p.k - p.s));
    sums.in_t += count * big(j * p.s + u);
  });
  const BigInt in_weight = in_hits * big(m);
  std::vector<FractionTerm> terms;
  terms.reserve(by_size.size());
  for (const auto& [card, sums] : by_size) {
    terms.push_back({out_hits_times_m * sums.non_t + in_weight * sums.in_t, big(card)});
  }
  r.aod = sum_fractions(terms) / Rational(BigInt(big(m) * total * total));
  return r;
}

bool BoundReport::unconditional_true() const noexcept {
  return gamma_out_lower && gamma_out_series && gamma_in_range && t_fraction_ok && aod_lower;
}

bool BoundReport::all_true() const noexcept {
  return tau_ok && unconditional_true() && gamma_out_linear && gamma_out_two_over_m &&
         aod_mixture_upper && aod_simple_upper;
}

BoundReport verify_bounds(const BlockParams& params) {
  return verify_bounds(params, exact_metrics(params));
}

BoundReport verify_bounds(const BlockParams& p, const BlockMetrics& metrics) {
  p.validate();
  const Rational m = big(p.m);
  const Rational inv_m = Rational(1) / m;
  const Rational one = 1;

  BoundReport r;
  r.tau = Rational(big(p.m), pow2(p.s));
  r.tau_ok = r.tau <= Rational(1, 4);

  // (1/m)(1 + 2 tau + 3 tau^2 + ... + m tau^(m-1))
  Rational series = 0;
  Rational power = 1;
  for (std::size_t j = 1; j <= p.m; ++j) {
    series += Rational(big(j)) * power;
    power *= r.tau;
  }
  series *= inv_m;
  const Rational linear = inv_m * (one + Rational(4) * r.tau);
  const Rational two_over_m = Rational(2) / m;

  r.gamma_out_lower = inv_m <= metrics.gamma_out;
  r.gamma_out_series = metrics.gamma_out <= series;
  r.gamma_out_linear = metrics.gamma_out <= linear && series <= linear;
  r.gamma_out_two_over_m = metrics.gamma_out <= two_over_m && linear <= two_over_m;
  r.gamma_in_range = Rational(1, 2) <= metrics.gamma_in && metrics.gamma_in <= one;

  // Largest |A & T| / |A| over member classes, compared by cross-multiplying
  // (both sides stay below n^2).
  std::size_t best_num = 0;
  std::size_t best_den = 1;
  for (std::size_t j = 1; j <= p.m; ++j) {
    for (std::size_t u = 0; u <= (p.m - j) * p.s; ++u) {
      const std::size_t num = j * p.s + u;
      const std::size_t den = j * p.k + u;
      if (num * best_den > best_num * den) {
        best_num = num;
        best_den = den;
      }
    }
  }
  r.max_t_fraction = Rational(big(best_num), big(best_den));
  const Rational t_fraction = Rational(big(p.m * p.s), big(p.k));
  r.t_fraction_ok = r.max_t_fraction <= t_fraction;

  const Rational mixture = (one - t_fraction) * two_over_m + t_fraction;
  const Rational simple = two_over_m + Rational(big(p.m * p.m * p.s), big(p.n()));
  r.aod_lower = inv_m <= metrics.aod;
  r.aod_mixture_upper = metrics.aod <= mixture;
  r.aod_simple_upper = mixture <= simple && metrics.aod <= simple;
  return r;
}

}  // namespace uclab
