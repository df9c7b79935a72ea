#pragma once

// Character degrees as polynomials in q, with the unipotent class carrying
// their q-part.

#include "ppart/nilpotent.hpp"
#include "ppart/qpoly.hpp"
#include "ppart/rootsys.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace ppart {

struct CharacterRecord {
  GroupSpec group;
  std::string label;
  QPolynomial degree;
  std::string support; // class name, resolvable with find_class

  friend bool operator==(const CharacterRecord&, const CharacterRecord&) = default;
};

/// Unipotent character of GL_n labelled by lambda:
///   q^{n(lambda)} prod_{k=1..n} (q^k - 1) / prod_{boxes} (q^{hook} - 1).
/// Throws DomainError if lambda is not a partition of n.
QPolynomial gl_unipotent_degree(int n, const Partition& lambda);

/// Class of Jordan type lambda in GL_n; its dim B_u is n(lambda), the
/// q-valuation of the degree above.
UnipotentClass gl_support_class(const Partition& lambda);

/// All unipotent characters of GL_n, in the order of partitions_of(n).
std::vector<CharacterRecord> gl_unipotent_characters(int n);

/// The six unipotent characters of Sp4(q) with their unipotent supports.
std::vector<CharacterRecord> embedded_sp4_table();

/// Checks each record: group supported, support class exists, degree nonzero
/// and dividing the order polynomial. Throws InvalidRecord with the index of
/// the first failure.
std::vector<CharacterRecord> load_character_table(std::vector<CharacterRecord> records,
                                                  const DiagramLibrary& lib = DiagramLibrary::embedded());

/// JSON array of {"group","label","degree":{"num":[..],"den":d},"support"}.
/// Parses only; call load_character_table to validate. Throws InvalidRecord.
std::vector<CharacterRecord> parse_character_records(std::string_view json_text);
std::string serialize_character_records(const std::vector<CharacterRecord>& records);

/// |G^F| / chi(1). Throws InvalidRecord(0, ...) if the division is not exact.
QPolynomial defect_polynomial(const GroupSpec& g, const CharacterRecord& chi);

} // namespace ppart
