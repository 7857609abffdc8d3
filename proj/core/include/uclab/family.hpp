#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "uclab/set_bits.hpp"

namespace uclab {

/// A nonempty, deduplicated collection of subsets of a common universe,
/// kept in canonical order (ascending as unsigned bit-vector integers).
class Family {
 public:
  /// Sorts and deduplicates `members`. Throws PreconditionFailed if the list
  /// is empty or some member has a different universe size.
  Family(std::size_t universe_n, std::vector<SetBits> members);

  [[nodiscard]] std::size_t universe_n() const noexcept { return n_; }
  [[nodiscard]] std::size_t size() const noexcept { return members_.size(); }
  [[nodiscard]] std::span<const SetBits> members() const noexcept { return members_; }
  [[nodiscard]] const SetBits& operator[](std::size_t i) const { return members_[i]; }
  [[nodiscard]] auto begin() const noexcept { return members_.begin(); }
  [[nodiscard]] auto end() const noexcept { return members_.end(); }

  /// Binary search over the canonical order.
  [[nodiscard]] bool contains(const SetBits& s) const noexcept;

  friend bool operator==(const Family&, const Family&) = default;

 private:
  std::size_t n_;
  std::vector<SetBits> members_;
};

inline constexpr std::size_t kDefaultClosureCap = 1'000'000;

/// Smallest union-closed family containing `generators`. Worklist fixed point:
/// each newly discovered set is unioned against every set found before it.
/// Throws EmptyGenerators, ElementOutOfRange (universe mismatch), or
/// CapExceeded once more than `cap` distinct sets have been found.
Family union_closure(std::span<const SetBits> generators, std::size_t universe_n,
                     std::size_t cap = kDefaultClosureCap);

bool is_union_closed(const Family& f);

/// Pair of 1-based elements (first < second).
using ElementPair = std::pair<std::size_t, std::size_t>;

struct SeparationReport {
  bool separates = true;
  /// Pairs that no member splits, 1-based, lexicographic order.
  std::vector<ElementPair> witness_pairs;
};

SeparationReport separates_points(const Family& f);

/// f together with every co-singleton [n] \ {j}. Requires [n] in f, otherwise
/// throws PreconditionFailed.
Family augment_cosingletons(const Family& f);

/// Text format: `n=<universe>` then one set per line, comma-separated
/// ascending 1-based elements, `-` for the empty set.
Family parse_family(std::string_view text);
std::string serialize_family(const Family& f);

/// One set in the line format above ("1,2,3" or "-").
std::string format_set(const SetBits& s);

}  // namespace uclab
