#include "uclab/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>

#include "uclab/error.hpp"

namespace uclab {

std::vector<std::size_t> membership_counts(const Family& f) {
  std::vector<std::size_t> counts(f.universe_n(), 0);
  for (const SetBits& a : f) {
    for (std::size_t x : a.elements()) ++counts[x];
  }
  return counts;
}

AbundanceProfile abundance_profile(const Family& f) {
  AbundanceProfile p;
  p.universe_n = f.universe_n();
  const BigInt size = static_cast<unsigned long>(f.size());
  for (std::size_t c : membership_counts(f)) {
    p.gamma.emplace_back(BigInt(static_cast<unsigned long>(c)), size);
  }
  return p;
}

Rational abundance(const Family& f, std::size_t x) {
  if (x == 0 || x > f.universe_n()) {
    throw Error(ErrorKind::ElementOutOfRange,
                "element " + std::to_string(x) + " outside [1, " + std::to_string(f.universe_n()) +
                    "]");
  }
  unsigned long hits = 0;
  for (const SetBits& a : f) hits += a.contains(x - 1) ? 1 : 0;
  return Rational(BigInt(hits), BigInt(static_cast<unsigned long>(f.size())));
}

Rational average_abundance(const Family& f) {
  BigInt total_size = 0;
  for (const SetBits& a : f) total_size += static_cast<unsigned long>(a.cardinality());
  return Rational(total_size, BigInt(static_cast<unsigned long>(f.size())) *
                                  static_cast<unsigned long>(f.universe_n()));
}

namespace {

// Both AOD routes reduce to (1 / (|F*| |F|)) * sum over nonempty A of
// inner(A) / |A|, with inner(A) an integer. Bucketing inner(A) by |A| keeps
// the final rational sum down to at most n terms.
Rational finish_aod(const std::vector<BigInt>& by_size, std::size_t nonempty, std::size_t size) {
  std::vector<FractionTerm> terms;
  for (std::size_t card = 1; card < by_size.size(); ++card) {
    if (by_size[card] != 0) terms.push_back({by_size[card], BigInt(static_cast<unsigned long>(card))});
  }
  Rational sum = sum_fractions(terms);
  return sum / Rational(BigInt(BigInt(static_cast<unsigned long>(nonempty)) *
                                     static_cast<unsigned long>(size)));
}

Rational aod_gamma_weighted(const Family& f) {
  const std::vector<std::size_t> counts = membership_counts(f);
  std::vector<BigInt> by_size(f.universe_n() + 1);
  std::size_t nonempty = 0;
  for (const SetBits& a : f) {
    const std::size_t card = a.cardinality();
    if (card == 0) continue;
    ++nonempty;
    unsigned long inner = 0;  // |F| * sum_{x in A} gamma_x
    for (std::size_t x : a.elements()) inner += counts[x];
    by_size[card] += inner;
  }
  return finish_aod(by_size, nonempty, f.size());
}

void pairwise_range(const Family& f, std::size_t lo, std::size_t hi, std::vector<BigInt>& by_size,
                    std::size_t& nonempty) {
  const auto members = f.members();
  for (std::size_t i = lo; i < hi; ++i) {
    const SetBits& a = members[i];
    const std::size_t card = a.cardinality();
    if (card == 0) continue;
    ++nonempty;
    unsigned long inner = 0;  // sum_B |A & B|
    for (const SetBits& b : members) inner += a.intersection_size(b);
    by_size[card] += inner;
  }
}

Rational aod_pairwise(const Family& f, unsigned workers) {
  const std::size_t count = f.size();
  workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(count)));
  std::vector<std::vector<BigInt>> partial(workers, std::vector<BigInt>(f.universe_n() + 1));
  std::vector<std::size_t> nonempty(workers, 0);
  if (workers == 1) {
    pairwise_range(f, 0, count, partial[0], nonempty[0]);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      const std::size_t lo = count * w / workers;
      const std::size_t hi = count * (w + 1) / workers;
      pool.emplace_back([&, w, lo, hi] { pairwise_range(f, lo, hi, partial[w], nonempty[w]); });
    }
  }
  std::vector<BigInt> by_size(f.universe_n() + 1);
  std::size_t total_nonempty = 0;
  for (unsigned w = 0; w < workers; ++w) {
    for (std::size_t c = 0; c < by_size.size(); ++c) by_size[c] += partial[w][c];
    total_nonempty += nonempty[w];
  }
  return finish_aod(by_size, total_nonempty, count);
}

}  // namespace

Rational aod(const Family& f, AodMethod method, unsigned workers) {
  const bool any_nonempty =
      std::any_of(f.begin(), f.end(), [](const SetBits& a) { return !a.empty(); });
  if (!any_nonempty) throw Error(ErrorKind::NoNonemptySet, "family has no nonempty member");
  return method == AodMethod::GammaWeighted ? aod_gamma_weighted(f) : aod_pairwise(f, workers);
}

MaxAbundance max_abundance(const Family& f) {
  const std::vector<std::size_t> counts = membership_counts(f);
  const auto best = std::max_element(counts.begin(), counts.end());  // first maximum
  const auto x = static_cast<std::size_t>(best - counts.begin());
  return {x + 1, Rational(BigInt(static_cast<unsigned long>(*best)),
                          BigInt(static_cast<unsigned long>(f.size())))};
}

double knill_ratio(const Family& f) {
  if (f.size() <= 1) {
    throw Error(ErrorKind::DegenerateFamily, "knill ratio needs at least two members");
  }
  return max_abundance(f).gamma.to_double() * std::log2(static_cast<double>(f.size()));
}

Family reference_family(std::string_view name, std::size_t n) {
  if (name == "triple") {
    return Family(3, {SetBits(3), SetBits(3, {0}), SetBits(3, {0, 1, 2})});
  }
  if (name == "chain") {
    if (n < 2) throw Error(ErrorKind::BadN, "chain family needs n >= 2");
    std::size_t root = 0;
    while ((root + 1) * (root + 1) <= n) ++root;
    std::vector<SetBits> members{SetBits(n), SetBits::full(n)};
    SetBits prefix(n);
    for (std::size_t i = 0; i < root; ++i) {
      prefix.insert(i);
      members.push_back(prefix);
    }
    return Family(n, std::move(members));
  }
  throw Error(ErrorKind::UnknownName, "unknown reference family '" + std::string(name) + "'");
}

MetricsReport analyze_family(const Family& f, unsigned workers) {
  MetricsReport r;
  r.universe_n = f.universe_n();
  r.size = f.size();
  const Rational weighted = aod(f, AodMethod::GammaWeighted);
  const Rational pairwise = aod(f, AodMethod::Pairwise, workers);
  if (weighted != pairwise) {
    throw Error(ErrorKind::InternalInconsistency, "AOD methods disagree: gamma_weighted=" +
                                                   weighted.str() + " pairwise=" + pairwise.str());
  }
  r.aod = weighted;
  r.avg_abundance = average_abundance(f);
  r.max_abundance = max_abundance(f);
  if (f.size() > 1) r.knill_ratio = knill_ratio(f);
  r.is_union_closed = is_union_closed(f);
  r.separates = f.universe_n() < 2 || separates_points(f).separates;
  return r;
}

}  // namespace uclab
