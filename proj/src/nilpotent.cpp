#include "ppart/nilpotent.hpp"

#include "ppart/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>

namespace ppart {

std::string WeightedDiagram::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i)
      s += ',';
    s += std::to_string(labels[i]);
  }
  return s + ")";
}

std::string UnipotentClass::name() const {
  if (!has_partition())
    return std::get<std::string>(label);
  std::string s = format_partition(partition());
  if (very_even == VeryEvenTag::I)
    s += "I";
  else if (very_even == VeryEvenTag::II)
    s += "II";
  return s;
}

namespace {

int partition_total(const GroupSpec& g) {
  switch (g.family) {
  case Family::GL: return g.rank;
  case Family::A: return g.rank + 1;
  case Family::B: return 2 * g.rank + 1;
  case Family::C:
  case Family::D: return 2 * g.rank;
  default: return -1;
  }
}

bool parity_multiplicities_even(const Partition& p, int parity) {
  for (int m : p)
    if (m % 2 == parity && multiplicity(p, m) % 2 != 0)
      return false;
  return true;
}

int orbit_dimension(const RootSystem& rs, const WeightedDiagram& d) {
  return rs.dimension() - grading_dims(rs, d).dimC;
}

} // namespace

bool is_valid_class_label(const GroupSpec& g, const Partition& p) {
  if (!g.classical() || !is_partition(p) || partition_size(p) != partition_total(g))
    return false;
  switch (g.family) {
  case Family::B:
  case Family::D: return parity_multiplicities_even(p, 0);
  case Family::C: return parity_multiplicities_even(p, 1);
  default: return true;
  }
}

bool is_very_even(const GroupSpec& g, const Partition& p) {
  return g.family == Family::D && std::all_of(p.begin(), p.end(), [](int m) { return m % 2 == 0; }) &&
         parity_multiplicities_even(p, 0);
}

WeightedDiagram classical_diagram(const GroupSpec& g, const Partition& p) {
  if (!is_valid_class_label(g, p))
    throw DomainError(format_partition(p) + " is not a unipotent class label for " + g.to_string());
  std::vector<int> h;
  for (int m : p)
    for (int e = m - 1; e >= 1 - m; e -= 2)
      h.push_back(e);
  std::sort(h.begin(), h.end(), std::greater<>{});

  WeightedDiagram d;
  const int n = g.semisimple_rank();
  if (g.family == Family::GL || g.family == Family::A) {
    for (int i = 0; i < n; ++i)
      d.labels.push_back(h[i] - h[i + 1]);
    return d;
  }
  // Symmetric multiset: the n largest values are the dominant coordinates
  // h_1 >= ... >= h_n >= 0 in the e_i basis.
  for (int i = 0; i + 1 < n; ++i)
    d.labels.push_back(h[i] - h[i + 1]);
  switch (g.family) {
  case Family::B: d.labels.push_back(h[n - 1]); break;
  case Family::C: d.labels.push_back(2 * h[n - 1]); break;
  case Family::D: d.labels.push_back(h[n - 2] + h[n - 1]); break;
  default: break;
  }
  return d;
}

UnipotentClass make_class(const GroupSpec& g, const Partition& p, VeryEvenTag tag) {
  UnipotentClass c{g, p, classical_diagram(g, p), VeryEvenTag::none};
  if (is_very_even(g, p))
    c.very_even = tag == VeryEvenTag::none ? VeryEvenTag::I : tag;
  else if (tag != VeryEvenTag::none)
    throw DomainError(format_partition(p) + " is not very even");
  return c;
}

std::vector<UnipotentClass> enumerate_classes(const GroupSpec& g, const DiagramLibrary& lib) {
  std::vector<UnipotentClass> out;
  if (g.classical()) {
    for (auto& p : partitions_of(partition_total(g))) {
      if (!is_valid_class_label(g, p))
        continue;
      if (is_very_even(g, p)) {
        out.push_back(make_class(g, p, VeryEvenTag::I));
        out.push_back(make_class(g, p, VeryEvenTag::II));
      } else {
        out.push_back(make_class(g, p));
      }
    }
    return out;
  }
  if (!lib.has(g))
    throw DataMissingError("no unipotent class table loaded for " + g.to_string());
  RootSystem rs(g);
  std::vector<std::pair<int, UnipotentClass>> keyed;
  for (const auto& r : lib.records(g))
    keyed.emplace_back(orbit_dimension(rs, r.diagram), UnipotentClass{g, r.name, r.diagram, VeryEvenTag::none});
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  for (auto& [dim, c] : keyed)
    out.push_back(std::move(c));
  return out;
}

UnipotentClass find_class(const GroupSpec& g, std::string_view name, const DiagramLibrary& lib) {
  if (g.classical()) {
    std::string_view body = name;
    VeryEvenTag tag = VeryEvenTag::none;
    if (body.ends_with("II")) {
      tag = VeryEvenTag::II;
      body.remove_suffix(2);
    } else if (body.ends_with("I")) {
      tag = VeryEvenTag::I;
      body.remove_suffix(1);
    }
    return make_class(g, parse_partition(body), tag);
  }
  if (!lib.has(g))
    throw DataMissingError("no unipotent class table loaded for " + g.to_string());
  for (const auto& r : lib.records(g))
    if (r.name == name)
      return UnipotentClass{g, r.name, r.diagram, VeryEvenTag::none};
  throw DomainError("unknown class '" + std::string(name) + "' for " + g.to_string());
}

WeightedDiagram weighted_dynkin_diagram(const UnipotentClass& c) {
  if (c.has_partition())
    return classical_diagram(c.group, c.partition());
  return c.diagram;
}

int root_weight(const RootVector& root, const WeightedDiagram& d) {
  int w = 0;
  for (std::size_t i = 0; i < root.size(); ++i)
    w += root[i] * d.labels[i];
  return w;
}

GradingDims grading_dims(const RootSystem& rs, const WeightedDiagram& d) {
  if (static_cast<int>(d.labels.size()) != rs.simple_rank())
    throw DomainError("diagram " + d.to_string() + " does not match " + rs.spec().to_string());
  const int rank = rs.torus_rank();
  int w0 = 0, w1 = 0, w_ge1 = 0, w_ge2 = 0;
  for (const auto& root : rs.positive_roots()) {
    int w = root_weight(root, d);
    if (w < 0)
      throw DomainError("diagram " + d.to_string() + " is not dominant");
    w0 += (w == 0);
    w1 += (w == 1);
    w_ge1 += (w >= 1);
    w_ge2 += (w >= 2);
  }
  GradingDims dims;
  dims.g0 = rank + 2 * w0;
  dims.g1 = w1;
  dims.dimU1 = w_ge1;
  dims.dimU2 = w_ge2;
  dims.dimP = rs.dimension() - dims.dimU1;
  dims.dimC = dims.g0 + dims.g1;
  if ((dims.dimC - rank) % 2 != 0)
    throw InvariantError("odd dim C_G(u) - rank for diagram " + d.to_string());
  dims.dimBu = (dims.dimC - rank) / 2;
  return dims;
}

GradingDims grading_dims(const UnipotentClass& c) { return grading_dims(RootSystem(c.group), c.diagram); }

int centralizer_dim_oracle(const UnipotentClass& c) {
  if (!c.group.classical() || !c.has_partition())
    throw ConfigError("no closed centralizer formula for " + c.group.to_string());
  const Partition& p = c.partition();
  int sq = 0;
  for (int x : conjugate(p))
    sq += x * x;
  int odd = static_cast<int>(std::count_if(p.begin(), p.end(), [](int m) { return m % 2 != 0; }));
  switch (c.group.family) {
  case Family::GL: return sq;
  case Family::A: return sq - 1;
  case Family::C: return (sq + odd) / 2;
  default: return (sq - odd) / 2;
  }
}

// ---------------------------------------------------------------------------
// Exceptional tables

const DiagramLibrary& DiagramLibrary::embedded() {
  static const DiagramLibrary lib = [] {
    DiagramLibrary l;
    l.add(embedded_g2_table());
    l.add(embedded_f4_table());
    return l;
  }();
  return lib;
}

void DiagramLibrary::add(const std::vector<DiagramRecord>& records) {
  std::map<GroupSpec, std::vector<DiagramRecord>> fresh;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    if (r.group.classical())
      throw InvalidRecord(i, "classical diagrams are computed, not ingested (" + r.group.to_string() + ")");
    RootSystem rs(r.group);
    if (static_cast<int>(r.diagram.labels.size()) != rs.simple_rank())
      throw InvalidRecord(i, "diagram " + r.diagram.to_string() + " has wrong length for " + r.group.to_string());
    for (int x : r.diagram.labels)
      if (x < 0 || x > 2)
        throw InvalidRecord(i, "diagram label " + std::to_string(x) + " outside {0,1,2}");
    auto& table = fresh[r.group];
    for (const auto& prev : table)
      if (prev.name == r.name)
        throw InvalidRecord(i, "duplicate class '" + r.name + "'");
    if (r.orbit_dim && *r.orbit_dim != orbit_dimension(rs, r.diagram))
      throw InvalidRecord(i, "class '" + r.name + "': orbit dimension " + std::to_string(*r.orbit_dim) +
                                 " disagrees with diagram " + r.diagram.to_string());
    table.push_back(r);
  }
  for (auto& [g, table] : fresh)
    tables_[g] = std::move(table);
}

const std::vector<DiagramRecord>& DiagramLibrary::records(const GroupSpec& g) const {
  auto it = tables_.find(g);
  if (it == tables_.end())
    throw DataMissingError("no unipotent class table loaded for " + g.to_string());
  return it->second;
}

std::vector<DiagramRecord> parse_diagram_records(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidRecord(0, std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_array())
    throw InvalidRecord(0, "expected an array of records");
  std::vector<DiagramRecord> out;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto& j = doc[i];
    try {
      DiagramRecord r;
      r.group = GroupSpec::parse(j.at("group").get<std::string>());
      r.name = j.at("class").get<std::string>();
      r.diagram.labels = j.at("diagram").get<std::vector<int>>();
      if (j.contains("orbit_dim"))
        r.orbit_dim = j.at("orbit_dim").get<int>();
      out.push_back(std::move(r));
    } catch (const nlohmann::json::exception& e) {
      throw InvalidRecord(i, e.what());
    } catch (const ConfigError& e) {
      throw InvalidRecord(i, e.what());
    }
  }
  return out;
}

std::string serialize_diagram_records(const std::vector<DiagramRecord>& records) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& r : records) {
    nlohmann::ordered_json j;
    j["group"] = r.group.to_string();
    j["class"] = r.name;
    j["diagram"] = r.diagram.labels;
    if (r.orbit_dim)
      j["orbit_dim"] = *r.orbit_dim;
    doc.push_back(std::move(j));
  }
  return doc.dump(2);
}

} // namespace ppart
