#pragma once

// Unipotent classes, weighted Dynkin diagrams and the dimensions attached to
// the grading they define.
//
// A diagram d assigns a label d_i in {0,1,2} to each simple root and extends
// linearly to every root. Writing g(j) for the span of root spaces of weight j
// (plus the torus for j = 0):
//   U1 = roots of weight >= 1, U2 = roots of weight >= 2,
//   P  = torus + roots of weight >= 0,
//   dim C_G(u) = dim g(0) + dim g(1),  dim B_u = (dim C_G(u) - rank) / 2.

#include "ppart/partition.hpp"
#include "ppart/rootsys.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ppart {

struct WeightedDiagram {
  std::vector<int> labels; // Bourbaki order

  std::string to_string() const; // "(0,2)"
  friend auto operator<=>(const WeightedDiagram&, const WeightedDiagram&) = default;
};

/// Labels of the two D_n classes sharing a very even partition.
enum class VeryEvenTag { none, I, II };

struct UnipotentClass {
  GroupSpec group;
  std::variant<Partition, std::string> label;
  WeightedDiagram diagram;
  VeryEvenTag very_even = VeryEvenTag::none;

  bool has_partition() const noexcept { return std::holds_alternative<Partition>(label); }
  const Partition& partition() const { return std::get<Partition>(label); }
  /// "(2,1)", "(2,2,2,2)I", "F4(a3)"
  std::string name() const;
};

struct GradingDims {
  int g0 = 0;
  int g1 = 0;
  int dimU1 = 0;
  int dimU2 = 0;
  int dimP = 0;
  int dimC = 0;
  int dimBu = 0;

  friend bool operator==(const GradingDims&, const GradingDims&) = default;
};

/// A class from an exceptional-type data table.
struct DiagramRecord {
  GroupSpec group;
  std::string name;
  WeightedDiagram diagram;
  std::optional<int> orbit_dim; // validated against the diagram when present
};

/// Exceptional-type diagram tables. The embedded library carries G2 and F4;
/// E6-E8 are available only through ingestion.
class DiagramLibrary {
public:
  DiagramLibrary() = default;

  static const DiagramLibrary& embedded();

  /// Validates and appends records; a group already present is replaced.
  /// Throws InvalidRecord naming the first bad record.
  void add(const std::vector<DiagramRecord>& records);

  bool has(const GroupSpec& g) const { return tables_.contains(g); }
  const std::vector<DiagramRecord>& records(const GroupSpec& g) const;

private:
  std::map<GroupSpec, std::vector<DiagramRecord>> tables_;
};

/// Parses a JSON array of {"group","class","diagram"[,"orbit_dim"]} records.
/// Throws InvalidRecord.
std::vector<DiagramRecord> parse_diagram_records(std::string_view json_text);
std::string serialize_diagram_records(const std::vector<DiagramRecord>& records);

/// Embedded literature tables, Bourbaki order.
std::vector<DiagramRecord> embedded_g2_table();
std::vector<DiagramRecord> embedded_f4_table();

/// Whether `p` labels a unipotent class of a classical group `g`:
/// GL_n, A_{n-1}: any partition of n; B_n: of 2n+1, even parts with even
/// multiplicity; C_n: of 2n, odd parts with even multiplicity; D_n: of 2n, even
/// parts with even multiplicity.
bool is_valid_class_label(const GroupSpec& g, const Partition& p);

/// Every part even, each with even multiplicity (D_n only).
bool is_very_even(const GroupSpec& g, const Partition& p);

/// All classes of `g`, regular class first. Classical types in reverse
/// lexicographic order of partitions; D_n very even partitions appear twice
/// (tags I, II) with one shared diagram. Exceptional types come from `lib`,
/// by decreasing orbit dimension. Throws DataMissingError.
std::vector<UnipotentClass> enumerate_classes(const GroupSpec& g,
                                              const DiagramLibrary& lib = DiagramLibrary::embedded());

/// Builds a classical class. Throws DomainError for an invalid label.
UnipotentClass make_class(const GroupSpec& g, const Partition& p, VeryEvenTag tag = VeryEvenTag::none);

/// Looks a class up by name ("(2,2)", "(1^4)", "F4(a3)"). Throws DomainError
/// for an unknown label and DataMissingError for a missing table.
UnipotentClass find_class(const GroupSpec& g, std::string_view name,
                          const DiagramLibrary& lib = DiagramLibrary::embedded());

/// Diagram from the Jacobson-Morozov characteristic: part m contributes
/// eigenvalues m-1, m-3, ..., 1-m; the multiset is made dominant for the type
/// and paired with the simple roots. Throws DomainError.
WeightedDiagram classical_diagram(const GroupSpec& g, const Partition& p);

/// Recomputes classical diagrams, returns the tabulated one otherwise.
WeightedDiagram weighted_dynkin_diagram(const UnipotentClass& c);

int root_weight(const RootVector& root, const WeightedDiagram& d);

GradingDims grading_dims(const RootSystem& rs, const WeightedDiagram& d);
GradingDims grading_dims(const UnipotentClass& c);

/// Closed partition formulas for dim C_G(u), independent of the grading:
/// GL_n: sum (lambda'_i)^2; SL_n: that minus 1; Sp: half of it plus half the
/// number of odd parts; SO: half of it minus half the number of odd parts.
/// Throws ConfigError for exceptional types.
int centralizer_dim_oracle(const UnipotentClass& c);

} // namespace ppart
