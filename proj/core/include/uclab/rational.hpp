#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>

#include <gmpxx.h>

namespace uclab {

using BigInt = mpz_class;

/// Exact rational number in lowest terms with a positive denominator, backed
/// by GMP. Densities in this library are always in [0, 1], but differences of
/// densities are allowed to be negative.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  /// Throws std::domain_error on a zero denominator.
  Rational(const BigInt& num, const BigInt& den);
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  [[nodiscard]] BigInt num() const { return q_.get_num(); }
  [[nodiscard]] BigInt den() const { return q_.get_den(); }
  [[nodiscard]] const mpq_class& raw() const noexcept { return q_; }

  [[nodiscard]] double to_double() const;
  /// "num/den", or just "num" when den = 1.
  [[nodiscard]] std::string str() const;
  [[nodiscard]] bool is_zero() const { return q_ == 0; }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class q_;
};

/// Binomial coefficient C(n, k) as a big integer (0 when k > n).
BigInt binomial(unsigned long n, unsigned long k);
/// 2^e.
BigInt pow2(unsigned long e);
/// log2(v) for v > 0, accurate for integers of any size (bit length plus the
/// fractional part taken from the leading bits).
double log2_big(const BigInt& v);

/// Exact sum of terms[i].first / terms[i].second. Uses balanced binary
/// splitting with a single gcd reduction at the end, which stays fast when
/// the common denominator has hundreds of thousands of bits.
struct FractionTerm {
  BigInt num;
  BigInt den;
};
Rational sum_fractions(std::span<const FractionTerm> terms);

}  // namespace uclab
