#include "ppart/characters.hpp"

#include "ppart/errors.hpp"
#include "ppart/json_io.hpp"

namespace ppart {

QPolynomial gl_unipotent_degree(int n, const Partition& lambda) {
  if (!is_partition(lambda) || partition_size(lambda) != n)
    throw DomainError(format_partition(lambda) + " is not a partition of " + std::to_string(n));
  QPolynomial num = QPolynomial::monomial(static_cast<unsigned>(n_statistic(lambda)));
  for (int k = 1; k <= n; ++k)
    num *= QPolynomial::q_power_minus_one(static_cast<unsigned>(k));
  QPolynomial den = QPolynomial::constant(1);
  for (int h : hook_lengths(lambda))
    den *= QPolynomial::q_power_minus_one(static_cast<unsigned>(h));
  auto quot = divide_exact(num, den);
  if (!quot)
    throw InvariantError("q-hook formula not exact for " + format_partition(lambda));
  return *quot;
}

UnipotentClass gl_support_class(const Partition& lambda) {
  return make_class(GroupSpec::make(Family::GL, partition_size(lambda)), lambda);
}

std::vector<CharacterRecord> gl_unipotent_characters(int n) {
  const GroupSpec g = GroupSpec::make(Family::GL, n);
  std::vector<CharacterRecord> out;
  for (const auto& lambda : partitions_of(n))
    out.push_back({g, format_partition(lambda), gl_unipotent_degree(n, lambda), gl_support_class(lambda).name()});
  return out;
}

std::vector<CharacterRecord> embedded_sp4_table() {
  const GroupSpec c2{Family::C, 2};
  const Rational half(1, 2);
  // Labels are the bipartitions of the principal series plus the cuspidal theta10.
  return {
      {c2, "(2;-)", QPolynomial{1}, "(4)"},
      {c2, "(1;1)", QPolynomial{0, 1, 2, 1} * half, "(2,2)"},
      {c2, "(11;-)", QPolynomial{0, 1, 0, 1} * half, "(2,2)"},
      {c2, "(-;2)", QPolynomial{0, 1, 0, 1} * half, "(2,2)"},
      {c2, "theta10", QPolynomial{0, 1, -2, 1} * half, "(2,2)"},
      {c2, "(-;11)", QPolynomial::monomial(4), "(1,1,1,1)"},
  };
}

QPolynomial defect_polynomial(const GroupSpec& g, const CharacterRecord& chi) {
  if (chi.degree.is_zero())
    throw InvalidRecord(0, "character '" + chi.label + "' has zero degree");
  auto quot = divide_exact(order_polynomial(g), chi.degree);
  if (!quot)
    throw InvalidRecord(0, "degree of '" + chi.label + "' does not divide |" + g.to_string() + "(q)|");
  return *quot;
}

std::vector<CharacterRecord> load_character_table(std::vector<CharacterRecord> records, const DiagramLibrary& lib) {
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    try {
      find_class(r.group, r.support, lib);
    } catch (const DomainError& e) {
      throw InvalidRecord(i, std::string("unknown support class: ") + e.what());
    } catch (const DataMissingError& e) {
      throw InvalidRecord(i, e.what());
    }
    if (r.degree.is_zero())
      throw InvalidRecord(i, "character '" + r.label + "' has zero degree");
    if (!divide_exact(order_polynomial(r.group), r.degree))
      throw InvalidRecord(i, "degree " + r.degree.to_string() + " of '" + r.label + "' does not divide |" +
                                 r.group.to_string() + "(q)|");
  }
  return records;
}

std::vector<CharacterRecord> parse_character_records(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidRecord(0, std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_array())
    throw InvalidRecord(0, "expected an array of records");
  std::vector<CharacterRecord> out;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto& j = doc[i];
    try {
      out.push_back({GroupSpec::parse(j.at("group").get<std::string>()), j.at("label").get<std::string>(),
                     poly_from_json(j.at("degree")), j.at("support").get<std::string>()});
    } catch (const nlohmann::json::exception& e) {
      throw InvalidRecord(i, e.what());
    } catch (const ConfigError& e) {
      throw InvalidRecord(i, e.what());
    } catch (const DomainError& e) {
      throw InvalidRecord(i, e.what());
    }
  }
  return out;
}

std::string serialize_character_records(const std::vector<CharacterRecord>& records) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& r : records) {
    nlohmann::ordered_json j;
    j["group"] = r.group.to_string();
    j["label"] = r.label;
    j["degree"] = poly_to_json(r.degree);
    j["support"] = r.support;
    doc.push_back(std::move(j));
  }
  return doc.dump(2);
}

} // namespace ppart
