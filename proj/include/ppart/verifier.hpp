#pragma once

// Compares the p-part of |G^F|/chi(1) with |U1^F|/psi(1), where U1 is the
// unipotent radical of the parabolic attached to the weighted diagram of the
// support class of chi, and psi has degree q^{(dim U1 - dim U2)/2}.

#include "ppart/characters.hpp"
#include "ppart/nilpotent.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ppart {

enum class Status { pass, fail, indeterminate };

const char* to_string(Status s);

struct NumericCheck {
  unsigned p = 0;
  unsigned k = 0;
  BigInt measured;     // p-part of |G^F|/chi(1) at q = p^k
  BigInt construction; // q^{rhs_exponent}
  bool equal = false;
  bool good_prime = false;
};

struct VerificationReport {
  GroupSpec group;
  std::string character;
  std::string degree; // printable chi(1)
  std::string support_class;
  WeightedDiagram diagram;
  GradingDims dims;
  int N = 0;
  int psi_degree_exponent = 0; // (dimU1 - dimU2) / 2
  int lhs_exponent = 0;        // q-valuation of |G^F|/chi(1)
  int rhs_exponent = 0;        // (dimU1 + dimU2) / 2
  bool cofactor_unit = false;
  Status status = Status::fail;
  std::optional<NumericCheck> numeric;
};

/// q^{(dimU1 - dimU2)/2}. Throws InvariantError on odd difference.
QPolynomial psi_degree(const GradingDims& dims);
QPolynomial psi_degree(const UnipotentClass& c);

/// pass: exponents agree and the defect cofactor is a unit away from the bad
/// primes of the type. indeterminate: the cofactor has other prime factors at
/// q = 0, so the q-power is not known to be the p-part. fail: otherwise.
VerificationReport verify_character(const CharacterRecord& chi,
                                    const DiagramLibrary& lib = DiagramLibrary::embedded());

/// The same report with a concrete check at q = p^k attached. Throws
/// DomainError if chi(1) or |G^F|/chi(1) is not a positive integer there.
VerificationReport verify_character(const CharacterRecord& chi, unsigned p, unsigned k,
                                    const DiagramLibrary& lib = DiagramLibrary::embedded());

/// (p-part of |G(p^k)|/chi(1)(p^k), (p^k)^{rhs_exponent}, equal?)
NumericCheck numeric_check(const CharacterRecord& chi, unsigned p, unsigned k,
                           const DiagramLibrary& lib = DiagramLibrary::embedded());

struct IdentityViolation {
  std::string class_name;
  std::string identity;
};

struct IdentitySummary {
  GroupSpec group;
  int classes = 0; // very even D_n pairs counted twice
  int records = 0; // distinct diagrams checked
  std::vector<IdentityViolation> violations;

  friend bool operator==(const IdentitySummary& a, const IdentitySummary& b) {
    return a.group == b.group && a.classes == b.classes && a.records == b.records &&
           a.violations.size() == b.violations.size();
  }
};

/// Checks, for one diagram of `rs`:
///   2(N - dimBu) = dimU1 + dimU2,  dimU1 - dimU2 even,
///   dimP + dimU1 = 2N + rank,      dimC = dimP - dimU2,
///   dimC = rank + 2 dimBu,
/// plus labels in {0,1,2} and U2 contained in U1.
std::vector<std::string> identity_failures(const RootSystem& rs, const WeightedDiagram& d);

IdentitySummary check_dimension_identities(const GroupSpec& g,
                                           const DiagramLibrary& lib = DiagramLibrary::embedded());

} // namespace ppart
