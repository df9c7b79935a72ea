#include "ppart/verifier.hpp"

#include "ppart/errors.hpp"

#include <algorithm>

namespace ppart {

namespace mp = boost::multiprecision;

const char* to_string(Status s) {
  switch (s) {
  case Status::pass: return "pass";
  case Status::fail: return "fail";
  case Status::indeterminate: return "indeterminate";
  }
  return "?";
}

QPolynomial psi_degree(const GradingDims& dims) {
  int diff = dims.dimU1 - dims.dimU2;
  if (diff < 0 || diff % 2 != 0)
    throw InvariantError("dim U1 - dim U2 = " + std::to_string(diff) + " is not a nonnegative even number");
  return QPolynomial::monomial(static_cast<unsigned>(diff / 2));
}

QPolynomial psi_degree(const UnipotentClass& c) { return psi_degree(grading_dims(c)); }

VerificationReport verify_character(const CharacterRecord& chi, const DiagramLibrary& lib) {
  const GroupSpec& g = chi.group;
  UnipotentClass support = find_class(g, chi.support, lib);
  RootSystem rs(g);

  VerificationReport r;
  r.group = g;
  r.character = chi.label;
  r.degree = chi.degree.to_string();
  r.support_class = support.name();
  r.diagram = support.diagram;
  r.dims = grading_dims(rs, support.diagram);
  r.N = rs.num_positive();
  r.psi_degree_exponent = q_valuation(psi_degree(r.dims));
  r.rhs_exponent = (r.dims.dimU1 + r.dims.dimU2) / 2;

  QPartSplit split = split_q_part(defect_polynomial(g, chi));
  r.lhs_exponent = static_cast<int>(split.valuation);
  r.cofactor_unit = cofactor_is_p_unit(split.cofactor, bad_primes(g));
  if (!r.cofactor_unit)
    r.status = Status::indeterminate;
  else
    r.status = r.lhs_exponent == r.rhs_exponent ? Status::pass : Status::fail;
  return r;
}

VerificationReport verify_character(const CharacterRecord& chi, unsigned p, unsigned k, const DiagramLibrary& lib) {
  VerificationReport r = verify_character(chi, lib);
  r.numeric = numeric_check(chi, p, k, lib);
  return r;
}

NumericCheck numeric_check(const CharacterRecord& chi, unsigned p, unsigned k, const DiagramLibrary& lib) {
  const GroupSpec& g = chi.group;
  const GradingDims dims = grading_dims(find_class(g, chi.support, lib));
  const int rhs = (dims.dimU1 + dims.dimU2) / 2;

  Rational degree = evaluate_at_prime_power(chi.degree, p, k);
  if (mp::denominator(degree) != 1 || degree <= 0)
    throw DomainError("degree of '" + chi.label + "' is not a positive integer at q = " + std::to_string(p) + "^" +
                      std::to_string(k));
  Rational order = evaluate_at_prime_power(order_polynomial(g), p, k);
  Rational index = order / degree;
  if (mp::denominator(index) != 1)
    throw DomainError("|G^F|/chi(1) is not an integer for '" + chi.label + "'");

  NumericCheck c;
  c.p = p;
  c.k = k;
  c.measured = integer_p_part(mp::numerator(index), p);
  c.construction = mp::pow(prime_power(p, k), static_cast<unsigned>(rhs));
  c.equal = c.measured == c.construction;
  c.good_prime = is_good_prime(g, p);
  return c;
}

std::vector<std::string> identity_failures(const RootSystem& rs, const WeightedDiagram& d) {
  std::vector<std::string> bad;
  for (int x : d.labels)
    if (x < 0 || x > 2)
      bad.push_back("labels in {0,1,2}");
  const GradingDims s = grading_dims(rs, d);
  const int N = rs.num_positive();
  const int rank = rs.torus_rank();
  if (2 * (N - s.dimBu) != s.dimU1 + s.dimU2)
    bad.push_back("2(N - dimBu) = dimU1 + dimU2");
  if ((s.dimU1 - s.dimU2) % 2 != 0)
    bad.push_back("dimU1 - dimU2 even");
  if (s.dimP + s.dimU1 != 2 * N + rank)
    bad.push_back("dimP + dimU1 = 2N + rank");
  if (s.dimC != s.dimP - s.dimU2)
    bad.push_back("dimC = dimP - dimU2");
  if (s.dimC != rank + 2 * s.dimBu)
    bad.push_back("dimC = rank + 2 dimBu");
  std::vector<std::size_t> u1, u2;
  for (std::size_t i = 0; i < rs.positive_roots().size(); ++i) {
    int w = root_weight(rs.positive_roots()[i], d);
    if (w >= 1)
      u1.push_back(i);
    if (w >= 2)
      u2.push_back(i);
  }
  if (!std::includes(u1.begin(), u1.end(), u2.begin(), u2.end()))
    bad.push_back("U2 contained in U1");
  if (s.dimU2 > s.dimU1 || s.dimBu < 0)
    bad.push_back("dimU2 <= dimU1, dimBu >= 0");
  return bad;
}

IdentitySummary check_dimension_identities(const GroupSpec& g, const DiagramLibrary& lib) {
  IdentitySummary summary{g, 0, 0, {}};
  RootSystem rs(g);
  for (const auto& c : enumerate_classes(g, lib)) {
    ++summary.classes;
    if (c.very_even == VeryEvenTag::II)
      continue; // shares its diagram with tag I
    ++summary.records;
    for (auto& what : identity_failures(rs, c.diagram))
      summary.violations.push_back({c.name(), std::move(what)});
  }
  return summary;
}

} // namespace ppart
