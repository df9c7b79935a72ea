#include "ppart/report.hpp"

#include "ppart/errors.hpp"
#include "ppart/json_io.hpp"

#include <algorithm>
#include <sstream>

namespace ppart {

namespace {

using Table = std::vector<std::vector<std::string>>;

std::string render_text(const Table& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (std::size_t i = 0; i < row.size(); ++i)
      width[i] = std::max(width[i], row[i].size());
  }
  std::ostringstream os;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size())
        line += std::string(width[i] - row[i].size() + 2, ' ');
    }
    os << line << '\n';
  }
  return os.str();
}

std::string render_csv(const Table& rows) {
  std::ostringstream os;
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i)
      os << (i ? "," : "") << csv_field(row[i]);
    os << '\n';
  }
  return os.str();
}

std::vector<std::string> dims_cells(const GradingDims& d) {
  return {std::to_string(d.g0),   std::to_string(d.g1),   std::to_string(d.dimU1), std::to_string(d.dimU2),
          std::to_string(d.dimP), std::to_string(d.dimC), std::to_string(d.dimBu)};
}

nlohmann::ordered_json dims_json(const GradingDims& d) {
  nlohmann::ordered_json j;
  j["g0"] = d.g0;
  j["g1"] = d.g1;
  j["dimU1"] = d.dimU1;
  j["dimU2"] = d.dimU2;
  j["dimP"] = d.dimP;
  j["dimC"] = d.dimC;
  j["dimBu"] = d.dimBu;
  return j;
}

} // namespace

OutputFormat parse_output_format(const std::string& name) {
  if (name == "text")
    return OutputFormat::text;
  if (name == "json")
    return OutputFormat::json;
  if (name == "csv")
    return OutputFormat::csv;
  throw ConfigError("unknown output format '" + name + "'");
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos)
    return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"')
      out += '"';
    out += c;
  }
  return out + "\"";
}

nlohmann::ordered_json report_to_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["group"] = r.group.to_string();
  j["character"] = r.character;
  j["degree"] = r.degree;
  j["class"] = r.support_class;
  j["diagram"] = r.diagram.labels;
  j["dims"] = dims_json(r.dims);
  j["N"] = r.N;
  j["psi_degree_exp"] = r.psi_degree_exponent;
  j["lhs_exp"] = r.lhs_exponent;
  j["rhs_exp"] = r.rhs_exponent;
  j["cofactor_unit"] = r.cofactor_unit;
  j["status"] = to_string(r.status);
  if (r.numeric) {
    nlohmann::ordered_json n;
    n["p"] = r.numeric->p;
    n["k"] = r.numeric->k;
    n["good_prime"] = r.numeric->good_prime;
    n["measured"] = bigint_to_json(r.numeric->measured);
    n["construction"] = bigint_to_json(r.numeric->construction);
    n["equal"] = r.numeric->equal;
    j["numeric"] = std::move(n);
  }
  return j;
}

std::string format_classes(const RootSystem& rs, const std::vector<UnipotentClass>& classes, OutputFormat fmt) {
  std::vector<GradingDims> dims;
  for (const auto& c : classes)
    dims.push_back(grading_dims(rs, c.diagram));
  const std::string group = rs.spec().to_string();

  if (fmt == OutputFormat::json) {
    nlohmann::ordered_json j;
    j["group"] = group;
    j["rank"] = rs.torus_rank();
    j["N"] = rs.num_positive();
    j["dim"] = rs.dimension();
    j["classes"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < classes.size(); ++i) {
      nlohmann::ordered_json c;
      c["class"] = classes[i].name();
      c["diagram"] = classes[i].diagram.labels;
      c["dims"] = dims_json(dims[i]);
      j["classes"].push_back(std::move(c));
    }
    return j.dump(2) + "\n";
  }

  Table rows;
  std::vector<std::string> header = {"class", "diagram", "g0", "g1", "dimU1", "dimU2", "dimP", "dimC", "dimBu"};
  if (fmt == OutputFormat::csv)
    header.insert(header.begin(), "group");
  rows.push_back(header);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    std::vector<std::string> row = {classes[i].name(), classes[i].diagram.to_string()};
    auto cells = dims_cells(dims[i]);
    row.insert(row.end(), cells.begin(), cells.end());
    if (fmt == OutputFormat::csv)
      row.insert(row.begin(), group);
    rows.push_back(std::move(row));
  }
  if (fmt == OutputFormat::csv)
    return render_csv(rows);
  std::ostringstream os;
  os << "group " << group << "  rank " << rs.torus_rank() << "  N " << rs.num_positive() << "  dim " << rs.dimension()
     << "  classes " << classes.size() << "\n";
  return os.str() + render_text(rows);
}

std::string format_reports(const std::vector<VerificationReport>& reports, OutputFormat fmt) {
  int pass = 0, fail = 0, indeterminate = 0, mismatch = 0;
  bool numeric = false;
  for (const auto& r : reports) {
    pass += r.status == Status::pass;
    fail += r.status == Status::fail;
    indeterminate += r.status == Status::indeterminate;
    if (r.numeric) {
      numeric = true;
      mismatch += !r.numeric->equal;
    }
  }

  if (fmt == OutputFormat::json) {
    nlohmann::ordered_json j;
    j["reports"] = nlohmann::ordered_json::array();
    for (const auto& r : reports)
      j["reports"].push_back(report_to_json(r));
    nlohmann::ordered_json s;
    s["total"] = reports.size();
    s["pass"] = pass;
    s["fail"] = fail;
    s["indeterminate"] = indeterminate;
    if (numeric)
      s["numeric_mismatch"] = mismatch;
    j["summary"] = std::move(s);
    return j.dump(2) + "\n";
  }

  Table rows;
  if (fmt == OutputFormat::csv) {
    std::vector<std::string> header = {"group", "character", "class",   "diagram", "dimU1",
                                       "dimU2", "dimBu",     "lhs_exp", "rhs_exp", "status"};
    if (numeric)
      header.insert(header.end(), {"p", "k", "good_prime", "measured", "construction", "equal"});
    rows.push_back(header);
    for (const auto& r : reports) {
      std::vector<std::string> row = {r.group.to_string(),
                                      r.character,
                                      r.support_class,
                                      r.diagram.to_string(),
                                      std::to_string(r.dims.dimU1),
                                      std::to_string(r.dims.dimU2),
                                      std::to_string(r.dims.dimBu),
                                      std::to_string(r.lhs_exponent),
                                      std::to_string(r.rhs_exponent),
                                      to_string(r.status)};
      if (r.numeric)
        row.insert(row.end(), {std::to_string(r.numeric->p), std::to_string(r.numeric->k),
                               r.numeric->good_prime ? "true" : "false", r.numeric->measured.str(),
                               r.numeric->construction.str(), r.numeric->equal ? "true" : "false"});
      rows.push_back(std::move(row));
    }
    return render_csv(rows);
  }

  std::vector<std::string> header = {"group", "character", "degree", "class", "diagram", "dimU1",  "dimU2",
                                     "dimBu", "psi",       "lhs",    "rhs",   "unit",    "status"};
  if (numeric)
    header.insert(header.end(), {"q", "p-part", "|U1|/psi(1)", "numeric"});
  rows.push_back(header);
  for (const auto& r : reports) {
    std::vector<std::string> row = {r.group.to_string(),
                                    r.character,
                                    r.degree,
                                    r.support_class,
                                    r.diagram.to_string(),
                                    std::to_string(r.dims.dimU1),
                                    std::to_string(r.dims.dimU2),
                                    std::to_string(r.dims.dimBu),
                                    "q^" + std::to_string(r.psi_degree_exponent),
                                    "q^" + std::to_string(r.lhs_exponent),
                                    "q^" + std::to_string(r.rhs_exponent),
                                    r.cofactor_unit ? "yes" : "no",
                                    to_string(r.status)};
    if (r.numeric) {
      std::string q = std::to_string(r.numeric->p) + "^" + std::to_string(r.numeric->k);
      if (!r.numeric->good_prime)
        q += " (bad)";
      row.insert(row.end(), {q, r.numeric->measured.str(), r.numeric->construction.str(),
                             r.numeric->equal ? "equal" : "differ"});
    }
    rows.push_back(std::move(row));
  }
  std::ostringstream os;
  os << render_text(rows);
  os << "total " << reports.size() << "  pass " << pass << "  fail " << fail << "  indeterminate " << indeterminate;
  if (numeric)
    os << "  numeric mismatches " << mismatch;
  os << "\n";
  return os.str();
}

std::string format_identities(const std::vector<IdentitySummary>& summaries, OutputFormat fmt) {
  int classes = 0, violations = 0;
  for (const auto& s : summaries) {
    classes += s.classes;
    violations += static_cast<int>(s.violations.size());
  }

  if (fmt == OutputFormat::json) {
    nlohmann::ordered_json j;
    j["groups"] = nlohmann::ordered_json::array();
    for (const auto& s : summaries) {
      nlohmann::ordered_json g;
      g["group"] = s.group.to_string();
      g["classes"] = s.classes;
      g["records"] = s.records;
      g["violations"] = nlohmann::ordered_json::array();
      for (const auto& v : s.violations)
        g["violations"].push_back({{"class", v.class_name}, {"identity", v.identity}});
      j["groups"].push_back(std::move(g));
    }
    j["total_classes"] = classes;
    j["total_violations"] = violations;
    return j.dump(2) + "\n";
  }

  Table rows;
  rows.push_back({"group", "classes", "records", "violations"});
  for (const auto& s : summaries)
    rows.push_back({s.group.to_string(), std::to_string(s.classes), std::to_string(s.records),
                    std::to_string(s.violations.size())});
  if (fmt == OutputFormat::csv)
    return render_csv(rows);
  std::ostringstream os;
  os << render_text(rows);
  for (const auto& s : summaries)
    for (const auto& v : s.violations)
      os << "violation " << s.group.to_string() << " " << v.class_name << ": " << v.identity << "\n";
  os << "total classes " << classes << "  violations " << violations << "\n";
  return os.str();
}

} // namespace ppart
