#pragma once

// Root systems of types A-G in simple-root coordinates, group orders, and the
// good-prime predicate.
//
// Simple roots follow Bourbaki numbering:
//   A_n  1 - 2 - ... - n
//   B_n  1 - ... - (n-1) => n        alpha_n = e_n short
//   C_n  1 - ... - (n-1) <= n        alpha_n = 2e_n long
//   D_n  1 - ... - (n-2) - (n-1), (n-2) - n, alpha_n = e_{n-1} + e_n
//   G_2  alpha_1 short, alpha_2 long
//   F_4  alpha_1, alpha_2 long; alpha_3, alpha_4 short
//   E_n  1 - 3 - 4 - 5 - ... - n, with 2 attached to 4
// GL_n uses the A_{n-1} root system with an n-dimensional torus.

#include "ppart/qpoly.hpp"

#include <compare>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace ppart {

enum class Family { GL, A, B, C, D, E, F, G };

char family_letter(Family f);

struct GroupSpec {
  Family family = Family::A;
  int rank = 1; // n for GL_n, otherwise the Lie rank

  /// Throws ConfigError for out-of-range ranks. D_3 is normalised to A_3.
  static GroupSpec make(Family family, int rank);
  /// Parses "GL3", "A2", "C2", "F4". Throws ConfigError.
  static GroupSpec parse(std::string_view text);

  std::string to_string() const;
  bool classical() const noexcept { return family <= Family::D; }

  /// Number of simple roots.
  int semisimple_rank() const noexcept { return family == Family::GL ? rank - 1 : rank; }
  /// Dimension of a maximal torus ("rank G" in dimension formulas).
  int torus_rank() const noexcept { return rank; }

  friend auto operator<=>(const GroupSpec&, const GroupSpec&) = default;
};

using RootVector = std::vector<int>;

class RootSystem {
public:
  explicit RootSystem(GroupSpec spec);

  const GroupSpec& spec() const noexcept { return spec_; }
  int simple_rank() const noexcept { return static_cast<int>(gram_.size()); }
  int torus_rank() const noexcept { return spec_.torus_rank(); }
  /// Ordered by height, then lexicographically by coefficients.
  const std::vector<RootVector>& positive_roots() const noexcept { return positive_; }
  int num_positive() const noexcept { return static_cast<int>(positive_.size()); }
  /// dim G = rank + 2N
  int dimension() const noexcept { return torus_rank() + 2 * num_positive(); }
  const std::vector<int>& fundamental_degrees() const noexcept { return degrees_; }

  /// <beta, alpha_i^vee>
  int pairing(const RootVector& beta, int i) const;
  /// s_i(beta)
  RootVector reflect(const RootVector& beta, int i) const;
  /// (Twice) the symmetric bilinear form on simple roots, integral for all types.
  const std::vector<std::vector<int>>& gram() const noexcept { return gram_; }

private:
  GroupSpec spec_;
  std::vector<std::vector<int>> gram_;
  std::vector<RootVector> positive_;
  std::vector<int> degrees_;
};

RootSystem build_root_system(const GroupSpec& spec);

/// Closed form for N per type.
int positive_root_count(const GroupSpec& spec);

std::vector<int> fundamental_degrees(const GroupSpec& spec);

/// q^N * prod_i (q^{d_i} - 1); degrees 1..n for GL_n.
QPolynomial order_polynomial(const GroupSpec& spec);

std::set<unsigned> bad_primes(const GroupSpec& spec);

/// Throws DomainError if p is not prime.
bool is_good_prime(const GroupSpec& spec, unsigned p);

} // namespace ppart
