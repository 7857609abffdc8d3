#include "uclab/set_bits.hpp"

#include <algorithm>
#include <string>

#include "uclab/error.hpp"

namespace uclab {

namespace {

std::size_t words_for(std::size_t n) { return (n + SetBits::kWordBits - 1) / SetBits::kWordBits; }

void check_range(std::size_t n, std::size_t x) {
  if (x >= n) {
    throw Error(ErrorKind::ElementOutOfRange,
                "element " + std::to_string(x + 1) + " outside [" + std::to_string(n) + "]");
  }
}

}  // namespace

SetBits::SetBits(std::size_t universe_n) : n_(universe_n), words_(words_for(universe_n), 0) {}

SetBits::SetBits(std::size_t universe_n, std::initializer_list<std::size_t> elems)
    : SetBits(universe_n) {
  for (std::size_t x : elems) insert(x);
}

SetBits SetBits::from_elements(std::size_t universe_n, std::span<const std::size_t> elems) {
  SetBits s(universe_n);
  for (std::size_t x : elems) s.insert(x);
  return s;
}

SetBits SetBits::full(std::size_t universe_n) {
  SetBits s(universe_n);
  std::fill(s.words_.begin(), s.words_.end(), ~Word{0});
  if (const std::size_t tail = universe_n % kWordBits; tail != 0) {
    s.words_.back() = (Word{1} << tail) - 1;
  }
  return s;
}

void SetBits::insert(std::size_t x) {
  check_range(n_, x);
  words_[x / kWordBits] |= Word{1} << (x % kWordBits);
}

void SetBits::erase(std::size_t x) {
  check_range(n_, x);
  words_[x / kWordBits] &= ~(Word{1} << (x % kWordBits));
}

std::size_t SetBits::cardinality() const noexcept {
  std::size_t c = 0;
  for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool SetBits::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

bool SetBits::is_full() const noexcept { return cardinality() == n_; }

std::vector<std::size_t> SetBits::elements() const {
  std::vector<std::size_t> out;
  for (std::size_t wi = 0; wi < words_.size(); ++wi) {
    Word w = words_[wi];
    while (w != 0) {
      out.push_back(wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

bool SetBits::is_subset_of(const SetBits& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

std::size_t SetBits::intersection_size(const SetBits& other) const noexcept {
  std::size_t c = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
  }
  return c;
}

SetBits& SetBits::operator|=(const SetBits& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

SetBits& SetBits::operator&=(const SetBits& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

SetBits SetBits::complement() const {
  SetBits out = full(n_);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] &= ~words_[i];
  return out;
}

std::strong_ordering operator<=>(const SetBits& a, const SetBits& b) noexcept {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  for (std::size_t i = a.words_.size(); i-- > 0;) {
    if (auto c = a.words_[i] <=> b.words_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::size_t SetBits::hash() const noexcept {
  // splitmix64 finalizer folded over the words
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ n_;
  for (Word w : words_) {
    std::uint64_t z = w + 0x9e3779b97f4a7c15ULL + h;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    h = z ^ (z >> 31);
  }
  return static_cast<std::size_t>(h);
}

}  // namespace uclab
