#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace uclab {

/// A subset of the universe {0, ..., universe_n - 1}, stored as a packed bit
/// vector of 64-bit words. Element x (0-based) lives in bit x % 64 of word
/// x / 64, so element 1 of the 1-based I/O convention is the least
/// significant bit.
///
/// Bits beyond universe_n are always zero; every mutating operation keeps
/// that invariant so equality, hashing, and ordering can work word-wise.
class SetBits {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  SetBits() = default;
  explicit SetBits(std::size_t universe_n);

  /// Builds a set from 0-based element indices. Throws ElementOutOfRange.
  SetBits(std::size_t universe_n, std::initializer_list<std::size_t> elems);
  static SetBits from_elements(std::size_t universe_n,
                               std::span<const std::size_t> elems);
  /// The full set {0, ..., universe_n - 1}.
  static SetBits full(std::size_t universe_n);

  [[nodiscard]] std::size_t universe_n() const noexcept { return n_; }
  [[nodiscard]] std::span<const Word> words() const noexcept { return words_; }

  [[nodiscard]] bool contains(std::size_t x) const noexcept {
    return x < n_ && ((words_[x / kWordBits] >> (x % kWordBits)) & 1U) != 0;
  }
  void insert(std::size_t x);
  void erase(std::size_t x);

  [[nodiscard]] std::size_t cardinality() const noexcept;
  [[nodiscard]] bool empty() const noexcept;
  [[nodiscard]] bool is_full() const noexcept;

  /// Ascending 0-based element list.
  [[nodiscard]] std::vector<std::size_t> elements() const;

  [[nodiscard]] bool is_subset_of(const SetBits& other) const noexcept;
  [[nodiscard]] std::size_t intersection_size(const SetBits& other) const noexcept;

  SetBits& operator|=(const SetBits& other) noexcept;
  SetBits& operator&=(const SetBits& other) noexcept;
  friend SetBits operator|(SetBits a, const SetBits& b) noexcept { return a |= b; }
  friend SetBits operator&(SetBits a, const SetBits& b) noexcept { return a &= b; }

  /// Complement within the universe.
  [[nodiscard]] SetBits complement() const;

  friend bool operator==(const SetBits& a, const SetBits& b) noexcept {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }
  /// Orders sets as unsigned integers (most significant word first); sets
  /// over different universes order by universe size first.
  friend std::strong_ordering operator<=>(const SetBits& a, const SetBits& b) noexcept;

  [[nodiscard]] std::size_t hash() const noexcept;

 private:
  std::size_t n_ = 0;
  std::vector<Word> words_;
};

struct SetBitsHash {
  std::size_t operator()(const SetBits& s) const noexcept { return s.hash(); }
};

}  // namespace uclab
