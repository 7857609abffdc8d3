#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "uclab/family.hpp"
#include "uclab/rational.hpp"

namespace uclab {

/// Per-element membership counts |{A in F : x in A}| for x in [n] (0-based
/// index, 1-based element x + 1).
std::vector<std::size_t> membership_counts(const Family& f);

struct AbundanceProfile {
  std::size_t universe_n = 0;
  /// gamma[x] is the abundance of 1-based element x + 1.
  std::vector<Rational> gamma;
};

AbundanceProfile abundance_profile(const Family& f);

/// Fraction of members containing the 1-based element x. Throws
/// ElementOutOfRange.
Rational abundance(const Family& f, std::size_t x);

/// Mean abundance over the whole declared universe, uncovered elements
/// included.
Rational average_abundance(const Family& f);

enum class AodMethod {
  /// Mean over nonempty A of the mean abundance of the elements of A.
  GammaWeighted,
  /// Mean over nonempty A and all B of |A & B| / |A|.
  Pairwise,
};

/// Average overlap density. The outer average runs over nonempty members,
/// the inner one over all members (the empty set included). Throws
/// NoNonemptySet when f = {{}}. `workers` > 1 splits the pairwise double
/// loop by outer index; the result does not depend on it.
Rational aod(const Family& f, AodMethod method, unsigned workers = 1);

struct MaxAbundance {
  std::size_t element = 0;  // 1-based
  Rational gamma;
};

/// Most abundant element; ties go to the smallest element.
MaxAbundance max_abundance(const Family& f);

/// gamma_max * log2|F|. Throws DegenerateFamily when |F| <= 1.
double knill_ratio(const Family& f);

/// Two small union-closed reference families:
///   "triple": {{}, {1}, {1,2,3}} over [3] (n is ignored),
///   "chain":  {}, {1}, {1,2}, ..., {1..floor(sqrt n)}, [n]   (n >= 2).
/// Throws UnknownName or BadN.
Family reference_family(std::string_view name, std::size_t n = 3);

struct MetricsReport {
  std::size_t universe_n = 0;
  std::size_t size = 0;
  Rational aod;
  Rational avg_abundance;
  MaxAbundance max_abundance;
  std::optional<double> knill_ratio;  // absent when |F| <= 1
  bool is_union_closed = false;
  bool separates = false;
};

/// Computes the report with both AOD methods and throws InternalInconsistency if
/// they disagree (this can only signal an internal bug).
MetricsReport analyze_family(const Family& f, unsigned workers = 1);

}  // namespace uclab
