#include "ppart/qpoly.hpp"

#include "ppart/errors.hpp"

#include <algorithm>
#include <sstream>

namespace ppart {

namespace mp = boost::multiprecision;

QPolynomial::QPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPolynomial::QPolynomial(std::initializer_list<std::int64_t> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (auto c : coeffs)
    coeffs_.emplace_back(c);
  trim();
}

QPolynomial QPolynomial::constant(const Rational& c) { return QPolynomial(std::vector<Rational>{c}); }

QPolynomial QPolynomial::monomial(unsigned k, const Rational& c) {
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return QPolynomial(std::move(v));
}

QPolynomial QPolynomial::q_power_minus_one(unsigned k) {
  std::vector<Rational> v(k + 1);
  v[0] = -1;
  v[k] += 1;
  return QPolynomial(std::move(v));
}

void QPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0)
    coeffs_.pop_back();
}

Rational QPolynomial::coefficient(unsigned k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

Rational QPolynomial::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

QPolynomial& QPolynomial::operator+=(const QPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size())
    coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
    coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size())
    coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
    coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

QPolynomial& QPolynomial::operator*=(const QPolynomial& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0)
      continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

QPolynomial& QPolynomial::operator*=(const Rational& c) {
  for (auto& x : coeffs_)
    x *= c;
  trim();
  return *this;
}

QPolynomial QPolynomial::operator-() const {
  QPolynomial r = *this;
  for (auto& x : r.coeffs_)
    x = -x;
  return r;
}

QPolynomial QPolynomial::shifted(unsigned k) const {
  if (is_zero())
    return {};
  std::vector<Rational> v(k, Rational(0));
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return QPolynomial(std::move(v));
}

Rational QPolynomial::evaluate(const Rational& q) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * q + *it;
  return acc;
}

std::string QPolynomial::to_string() const {
  if (is_zero())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    Rational c = coeffs_[k];
    if (c == 0)
      continue;
    bool negative = c < 0;
    if (negative)
      c = -c;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    bool unit = (c == 1);
    if (!unit || k == 0)
      os << c;
    if (k > 0) {
      if (!unit)
        os << '*';
      os << 'q';
      if (k > 1)
        os << '^' << k;
    }
  }
  return os.str();
}

DivisionResult divide(const QPolynomial& num, const QPolynomial& den) {
  if (den.is_zero())
    throw DomainError("polynomial division by zero");
  if (num.degree() < den.degree())
    return {QPolynomial{}, num};
  std::vector<Rational> rem = num.coefficients();
  const auto& d = den.coefficients();
  const std::size_t dn = d.size();
  std::vector<Rational> quot(rem.size() - dn + 1);
  const Rational lead = d.back();
  for (std::size_t i = quot.size(); i-- > 0;) {
    Rational c = rem[i + dn - 1] / lead;
    quot[i] = c;
    if (c == 0)
      continue;
    for (std::size_t j = 0; j < dn; ++j)
      rem[i + j] -= c * d[j];
  }
  rem.resize(dn - 1);
  return {QPolynomial(std::move(quot)), QPolynomial(std::move(rem))};
}

std::optional<QPolynomial> divide_exact(const QPolynomial& num, const QPolynomial& den) {
  auto r = divide(num, den);
  if (!r.remainder.is_zero())
    return std::nullopt;
  return std::move(r.quotient);
}

unsigned q_valuation(const QPolynomial& f) {
  if (f.is_zero())
    throw DomainError("q-valuation of the zero polynomial");
  const auto& c = f.coefficients();
  unsigned v = 0;
  while (c[v] == 0)
    ++v;
  return v;
}

QPartSplit split_q_part(const QPolynomial& f) {
  unsigned v = q_valuation(f);
  const auto& c = f.coefficients();
  return {v, QPolynomial(std::vector<Rational>(c.begin() + v, c.end()))};
}

namespace {

bool only_bad_prime_factors(BigInt n, const std::set<unsigned>& bad_primes) {
  if (n < 0)
    n = -n;
  for (unsigned p : bad_primes) {
    if (p < 2)
      continue;
    while (n % p == 0)
      n /= p;
  }
  return n == 1;
}

} // namespace

bool cofactor_is_p_unit(const QPolynomial& g, const std::set<unsigned>& bad_primes) {
  Rational c0 = g.coefficient(0);
  if (c0 == 0)
    return false;
  return only_bad_prime_factors(mp::numerator(c0), bad_primes) &&
         only_bad_prime_factors(mp::denominator(c0), bad_primes);
}

bool is_prime(unsigned n) {
  if (n < 2)
    return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

BigInt prime_power(unsigned p, unsigned k) { return mp::pow(BigInt(p), k); }

Rational evaluate_at_prime_power(const QPolynomial& f, unsigned p, unsigned k) {
  if (!is_prime(p))
    throw DomainError(std::to_string(p) + " is not prime");
  if (k == 0)
    throw DomainError("exponent k must be positive");
  return f.evaluate(Rational(prime_power(p, k)));
}

BigInt integer_p_part(const BigInt& n, unsigned p) {
  if (n < 1)
    throw DomainError("p-part of a non-positive integer");
  if (!is_prime(p))
    throw DomainError(std::to_string(p) + " is not prime");
  BigInt m = n, part = 1;
  while (m % p == 0) {
    m /= p;
    part *= p;
  }
  return part;
}

PolyEncoding encode(const QPolynomial& f) {
  PolyEncoding e;
  BigInt den = 1;
  for (const auto& c : f.coefficients())
    den = mp::lcm(den, BigInt(mp::denominator(c)));
  e.denominator = den;
  e.numerators.reserve(f.coefficients().size());
  for (const auto& c : f.coefficients())
    e.numerators.push_back(mp::numerator(c) * (den / mp::denominator(c)));
  return e;
}

QPolynomial decode(const PolyEncoding& e) {
  if (e.denominator <= 0)
    throw DomainError("polynomial denominator must be positive");
  std::vector<Rational> c;
  c.reserve(e.numerators.size());
  for (const auto& n : e.numerators)
    c.emplace_back(n, e.denominator);
  return QPolynomial(std::move(c));
}

} // namespace ppart
