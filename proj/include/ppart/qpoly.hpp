#pragma once

// Exact univariate polynomials in q with rational coefficients.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace ppart {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class QPolynomial {
public:
  QPolynomial() = default;
  /// Dense coefficients, low to high. Trailing zeros are trimmed.
  explicit QPolynomial(std::vector<Rational> coeffs);
  QPolynomial(std::initializer_list<std::int64_t> coeffs);

  static QPolynomial constant(const Rational& c);
  /// c * q^k
  static QPolynomial monomial(unsigned k, const Rational& c = 1);
  /// q^k - 1
  static QPolynomial q_power_minus_one(unsigned k);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree of the zero polynomial is -1.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  Rational coefficient(unsigned k) const;
  Rational leading() const;

  QPolynomial& operator+=(const QPolynomial& o);
  QPolynomial& operator-=(const QPolynomial& o);
  QPolynomial& operator*=(const QPolynomial& o);
  QPolynomial& operator*=(const Rational& c);

  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
  friend QPolynomial operator*(QPolynomial a, const QPolynomial& b) { return a *= b; }
  friend QPolynomial operator*(QPolynomial a, const Rational& c) { return a *= c; }
  QPolynomial operator-() const;

  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

  /// Multiply by q^k.
  QPolynomial shifted(unsigned k) const;

  Rational evaluate(const Rational& q) const;

  std::string to_string() const;

private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct DivisionResult {
  QPolynomial quotient;
  QPolynomial remainder;
};

/// Euclidean division. Throws DomainError on a zero divisor.
DivisionResult divide(const QPolynomial& num, const QPolynomial& den);

/// The exact quotient if `den` divides `num`, otherwise nullopt.
std::optional<QPolynomial> divide_exact(const QPolynomial& num, const QPolynomial& den);

struct QPartSplit {
  unsigned valuation = 0;
  QPolynomial cofactor; // cofactor(0) != 0
};

/// Largest v with q^v | f. Throws DomainError for f == 0.
unsigned q_valuation(const QPolynomial& f);

/// f = q^v * g with g(0) != 0. Throws DomainError for f == 0.
QPartSplit split_q_part(const QPolynomial& f);

/// True iff every prime dividing numerator or denominator of g(0) lies in
/// `bad_primes`. Then g(q) is a p-adic unit for every other prime p and every
/// power q of p, since g(q) = g(0) mod p.
bool cofactor_is_p_unit(const QPolynomial& g, const std::set<unsigned>& bad_primes);

/// f(p^k) computed exactly.
Rational evaluate_at_prime_power(const QPolynomial& f, unsigned p, unsigned k);

/// p^{v_p(n)} for n >= 1.
BigInt integer_p_part(const BigInt& n, unsigned p);

bool is_prime(unsigned n);

BigInt prime_power(unsigned p, unsigned k);

/// Text encoding used by data files and reports: integer numerator
/// coefficients (low to high) over one positive common denominator, in lowest
/// terms. The zero polynomial encodes as an empty list over 1.
struct PolyEncoding {
  std::vector<BigInt> numerators;
  BigInt denominator = 1;

  friend bool operator==(const PolyEncoding&, const PolyEncoding&) = default;
};

PolyEncoding encode(const QPolynomial& f);
/// Throws DomainError if the denominator is not positive.
QPolynomial decode(const PolyEncoding& e);

} // namespace ppart
