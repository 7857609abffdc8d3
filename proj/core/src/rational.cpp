#include "uclab/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace uclab {

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  q_.get_num() = num;
  q_.get_den() = den;
  q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.q_ == 0) throw std::domain_error("division by zero rational");
  q_ /= o.q_;
  return *this;
}

double Rational::to_double() const {
  // mpq_get_d truncates but handles operands far beyond double range.
  return q_.get_d();
}

std::string Rational::str() const { return q_.get_str(); }

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  if (k > n) return r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigInt pow2(unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

double log2_big(const BigInt& v) {
  if (v <= 0) throw std::domain_error("log2 of a non-positive integer");
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());  // v = mant * 2^exp, mant in [0.5, 1)
  return static_cast<double>(exp) + std::log2(mant);
}

namespace {

struct Partial {
  BigInt num;
  BigInt den;
};

Partial split_sum(std::span<const FractionTerm> terms) {
  if (terms.size() == 1) return {terms[0].num, terms[0].den};
  const std::size_t mid = terms.size() / 2;
  Partial l = split_sum(terms.first(mid));
  Partial r = split_sum(terms.subspan(mid));
  Partial out;
  out.num = l.num * r.den + r.num * l.den;
  out.den = l.den * r.den;
  return out;
}

}  // namespace

Rational sum_fractions(std::span<const FractionTerm> terms) {
  if (terms.empty()) return Rational{};
  for (const FractionTerm& t : terms) {
    if (t.den == 0) throw std::domain_error("fraction with zero denominator");
  }
  Partial p = split_sum(terms);
  return Rational(p.num, p.den);
}

}  // namespace uclab
