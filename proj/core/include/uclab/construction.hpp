#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "uclab/family.hpp"
#include "uclab/rational.hpp"

namespace uclab {

/// Block construction parameters: m blocks of size k over n = k * m
/// elements, with |T_i| = s designated elements per block.
struct BlockParams {
  std::size_t k = 0;
  std::size_t m = 0;
  std::size_t s = 0;

  [[nodiscard]] std::size_t n() const noexcept { return k * m; }
  /// Throws InvalidParams naming the first violated constraint
  /// ("m >= 2", "s >= 1", "s <= k-2").
  void validate() const;

  friend bool operator==(const BlockParams&, const BlockParams&) = default;
};

/// Implicit representation of the union-closed family generated by
/// {B_i + {j} : i in [m], j in T}. Blocks are contiguous:
/// B_i = {(i-1)k+1, ..., ik}.
class BlockFamily {
 public:
  [[nodiscard]] const BlockParams& params() const noexcept { return params_; }
  /// 0-based elements of T_i, ascending.
  [[nodiscard]] const std::vector<std::vector<std::size_t>>& t_sets() const noexcept {
    return t_sets_;
  }
  [[nodiscard]] SetBits block(std::size_t i) const;
  [[nodiscard]] SetBits t_set(std::size_t i) const;
  [[nodiscard]] SetBits t_union() const;
  /// Distinct generators B_i + {j}, in canonical order.
  [[nodiscard]] std::vector<SetBits> generators() const;

 private:
  friend BlockFamily build_block_family(
      const BlockParams&, std::optional<std::vector<std::vector<std::size_t>>>);
  BlockParams params_;
  std::vector<std::vector<std::size_t>> t_sets_;
};

/// `t_choice`, when given, lists 1-based elements of each T_i. The default
/// picks the first s elements of each block. Throws InvalidParams.
BlockFamily build_block_family(
    const BlockParams& params,
    std::optional<std::vector<std::vector<std::size_t>>> t_choice = std::nullopt);

/// The alternate choice: last s elements of each block (1-based).
std::vector<std::vector<std::size_t>> trailing_t_choice(const BlockParams& params);

struct CountTable {
  std::vector<BigInt> n_j;  // n_j[j-1] = members containing exactly j blocks
  BigInt total;
  std::vector<Rational> p_j;  // p_j[j-1] = n_j / total
  Rational tau;               // m / 2^s
};

CountTable count_table(const BlockParams& params);
inline CountTable count_table(const BlockFamily& bf) { return count_table(bf.params()); }

/// Every member (union of the blocks in a nonempty S plus any subset of the
/// T-elements outside those blocks). Throws CapExceeded if |F| > cap.
Family materialize(const BlockFamily& bf, std::size_t cap = kDefaultClosureCap);

struct BlockMetrics {
  Rational gamma_out;  // abundance of any x outside T
  Rational gamma_in;   // abundance of any x in T
  Rational avg_abundance;
  Rational aod;
};

/// Exact metrics via counting over member classes (j blocks, u extra
/// T-elements); nothing is enumerated.
BlockMetrics exact_metrics(const BlockParams& params);
inline BlockMetrics exact_metrics(const BlockFamily& bf) { return exact_metrics(bf.params()); }

struct BoundReport {
  Rational tau;
  bool tau_ok = false;
  // 1/m <= gamma_out, gamma_out <= (1/m) sum_j j tau^(j-1), that sum bound
  // <= (1/m)(1 + 4 tau), and (1/m)(1 + 4 tau) <= 2/m.
  bool gamma_out_lower = false;
  bool gamma_out_series = false;
  bool gamma_out_linear = false;
  bool gamma_out_two_over_m = false;
  bool gamma_in_range = false;
  Rational max_t_fraction;
  bool t_fraction_ok = false;
  bool aod_lower = false;
  bool aod_mixture_upper = false;  // aod <= (1 - ms/k)(2/m) + ms/k
  bool aod_simple_upper = false;   // mixture bound <= 2/m + m^2 s / n

  /// Inequalities that hold for every valid (k, m, s): both lower bounds,
  /// the series bound on gamma_out, the gamma_in range, the T-fraction.
  [[nodiscard]] bool unconditional_true() const noexcept;
  /// tau <= 1/4 and every inequality holds.
  [[nodiscard]] bool all_true() const noexcept;
};

BoundReport verify_bounds(const BlockParams& params);
BoundReport verify_bounds(const BlockParams& params, const BlockMetrics& metrics);

}  // namespace uclab
