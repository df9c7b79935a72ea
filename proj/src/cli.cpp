#include "ppart/cli.hpp"

#include "ppart/characters.hpp"
#include "ppart/errors.hpp"
#include "ppart/report.hpp"
#include "ppart/sweep.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace ppart::cli {

namespace {

struct Options {
  std::vector<std::string> positional;
  std::string format = "text";
  std::vector<std::string> tables;
  std::vector<std::string> numeric;
  int rank_cap = 0;
};

struct LoadedData {
  DiagramLibrary diagrams = DiagramLibrary::embedded();
  std::vector<CharacterRecord> characters;
};

int parse_int(const std::string& s, const char* what) {
  int v = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || end != s.data() + s.size())
    throw ConfigError(std::string("expected an integer ") + what + ", got '" + s + "'");
  return v;
}

std::optional<Family> family_name(const std::string& token) {
  std::string t;
  for (char c : token)
    t.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  if (t == "GL")
    return Family::GL;
  if (t.size() == 1 && t[0] >= 'A' && t[0] <= 'G') {
    static constexpr Family letters[] = {Family::A, Family::B, Family::C, Family::D,
                                         Family::E, Family::F, Family::G};
    return letters[t[0] - 'A'];
  }
  return std::nullopt;
}

void check_cap(const GroupSpec& g, const RankCaps& caps) {
  auto it = caps.find(g.family);
  if (it != caps.end() && g.rank > it->second)
    throw ConfigError(g.to_string() + " exceeds the rank cap " + std::to_string(it->second) +
                      " (raise it with --rank-cap)");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw DataMissingError("cannot open data file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// A file holds either diagram records or character records, told apart by
// the fields of its first record.
void load_table(const std::string& path, LoadedData& data) {
  const std::string text = read_file(path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidRecord(0, path + ": not valid JSON");
  }
  if (!doc.is_array())
    throw InvalidRecord(0, path + ": expected an array of records");
  if (doc.empty())
    return;
  if (doc[0].contains("diagram")) {
    data.diagrams.add(parse_diagram_records(text));
  } else {
    auto records = parse_character_records(text);
    data.characters.insert(data.characters.end(), records.begin(), records.end());
  }
}

std::pair<unsigned, unsigned> parse_numeric(const std::vector<std::string>& kv) {
  std::optional<int> p, k;
  for (const auto& item : kv) {
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw ConfigError("--numeric expects p=<prime> k=<exponent>, got '" + item + "'");
    std::string key = item.substr(0, eq);
    int value = parse_int(item.substr(eq + 1), "in --numeric");
    if (key == "p")
      p = value;
    else if (key == "k")
      k = value;
    else
      throw ConfigError("--numeric: unknown key '" + key + "'");
  }
  if (!p || !k)
    throw ConfigError("--numeric needs both p=<prime> and k=<exponent>");
  if (*p < 2 || !is_prime(static_cast<unsigned>(*p)))
    throw ConfigError("--numeric: p=" + std::to_string(*p) + " is not prime");
  if (*k < 1 || *k > 64)
    throw ConfigError("--numeric: k must lie in 1..64");
  return {static_cast<unsigned>(*p), static_cast<unsigned>(*k)};
}

RankCaps caps_from(const Options& o) {
  if (o.rank_cap <= 0)
    return default_rank_caps();
  return {{Family::GL, o.rank_cap + 1}, {Family::A, o.rank_cap}, {Family::B, o.rank_cap},
          {Family::C, o.rank_cap},      {Family::D, o.rank_cap}};
}

int cmd_classes(const Options& o, const LoadedData& data, std::ostream& out) {
  if (o.positional.empty())
    throw ConfigError("classes: no group given");
  const auto fmt = parse_output_format(o.format);
  for (const auto& g : parse_group_tokens(o.positional, caps_from(o))) {
    auto classes = enumerate_classes(g, data.diagrams);
    out << format_classes(RootSystem(g), classes, fmt);
  }
  return exit_ok;
}

int cmd_identities(const Options& o, const LoadedData& data, std::ostream& out) {
  std::vector<std::string> tokens = o.positional;
  if (tokens.empty())
    tokens = {"A", "1..8", "B", "2..6", "C", "2..6", "D", "4..6", "G2", "F4"};
  const auto fmt = parse_output_format(o.format);
  auto summaries = identity_sweep(parse_group_tokens(tokens, caps_from(o)), Execution::parallel, data.diagrams);
  out << format_identities(summaries, fmt);
  for (const auto& s : summaries)
    if (!s.violations.empty())
      return exit_verification_failed;
  return exit_ok;
}

int cmd_verify(const Options& o, LoadedData& data, std::ostream& out, std::ostream& err) {
  const auto fmt = parse_output_format(o.format);
  std::vector<std::string> tokens = o.positional;
  std::vector<CharacterRecord> chars;

  if (!tokens.empty() && tokens[0] == "table") {
    if (tokens.size() < 2)
      throw ConfigError("verify table: no file given");
    std::vector<CharacterRecord> before = std::move(data.characters);
    data.characters.clear();
    for (std::size_t i = 1; i < tokens.size(); ++i)
      load_table(tokens[i], data);
    chars = std::move(data.characters);
    chars.insert(chars.end(), before.begin(), before.end());
    if (chars.empty())
      throw DataMissingError("verify table: no character records found");
  } else if (!tokens.empty()) {
    for (const auto& g : parse_group_tokens(tokens, caps_from(o))) {
      std::vector<CharacterRecord> for_group;
      for (const auto& c : data.characters)
        if (c.group == g)
          for_group.push_back(c);
      if (for_group.empty() && g.family == Family::GL)
        for_group = gl_unipotent_characters(g.rank);
      if (for_group.empty() && g == GroupSpec{Family::C, 2})
        for_group = embedded_sp4_table();
      if (for_group.empty())
        throw DataMissingError("no character data for " + g.to_string() + " (supply one with --table)");
      chars.insert(chars.end(), for_group.begin(), for_group.end());
    }
  } else {
    chars = data.characters;
    if (chars.empty())
      throw ConfigError("verify: give groups (e.g. 'GL 1..8') or 'table <file>'");
  }
  chars = load_character_table(std::move(chars), data.diagrams);

  std::optional<std::pair<unsigned, unsigned>> numeric;
  if (!o.numeric.empty())
    numeric = parse_numeric(o.numeric);
  auto reports = verify_batch(chars, Execution::parallel, numeric, data.diagrams);
  out << format_reports(reports, fmt);

  int failed = 0, indeterminate = 0, mismatch = 0;
  for (const auto& r : reports) {
    failed += r.status == Status::fail;
    indeterminate += r.status == Status::indeterminate;
    mismatch += r.numeric && !r.numeric->equal;
  }
  if (failed + indeterminate + mismatch == 0)
    return exit_ok;
  err << "verification failed: " << failed << " fail, " << indeterminate << " indeterminate";
  if (numeric)
    err << ", " << mismatch << " numeric mismatch" << (mismatch == 1 ? "" : "es");
  err << "\n";
  return exit_verification_failed;
}

} // namespace

RankCaps default_rank_caps() {
  return {{Family::GL, 11}, {Family::A, 10}, {Family::B, 8}, {Family::C, 8}, {Family::D, 8}};
}

std::vector<GroupSpec> parse_group_tokens(const std::vector<std::string>& tokens, const RankCaps& caps) {
  std::vector<GroupSpec> out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const std::string& t = tokens[i];
    if (auto fam = family_name(t)) {
      if (i + 1 >= tokens.size())
        throw ConfigError("family '" + t + "' needs a rank or a range lo..hi");
      const std::string& r = tokens[++i];
      int lo, hi;
      if (auto dots = r.find(".."); dots != std::string::npos) {
        lo = parse_int(r.substr(0, dots), "range start");
        hi = parse_int(r.substr(dots + 2), "range end");
      } else {
        lo = hi = parse_int(r, "rank");
      }
      if (lo > hi)
        throw ConfigError("empty rank range '" + r + "'");
      for (int n = lo; n <= hi; ++n) {
        GroupSpec g = GroupSpec::make(*fam, n);
        check_cap(g, caps);
        out.push_back(g);
      }
    } else {
      GroupSpec g = GroupSpec::parse(t);
      check_cap(g, caps);
      out.push_back(g);
    }
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Checks p-parts of character degrees of finite groups of Lie type against unipotent radicals "
               "of parabolics built from weighted Dynkin diagrams.",
               "ppart"};
  app.require_subcommand(1);
  Options opts;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", opts.format, "Output format: text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--table", opts.tables, "Data file with diagram or character records (repeatable)");
    sub->add_option("--rank-cap", opts.rank_cap, "Override the rank cap of classical families");
  };
  auto* classes = app.add_subcommand("classes", "List unipotent classes with diagrams and dimensions");
  classes->add_option("groups", opts.positional, "Groups, e.g. A2, C 2..4, F4")->required();
  add_common(classes);
  auto* identities = app.add_subcommand("identities", "Check the dimension identities over whole types");
  identities->add_option("groups", opts.positional, "Groups, e.g. A 1..8 B 2..6 G2 F4");
  add_common(identities);
  auto* verify = app.add_subcommand("verify", "Verify characters: 'GL 1..8', 'C2', or 'table <file>'");
  verify->add_option("groups", opts.positional, "Groups or 'table <file>...'");
  verify->add_option("--numeric", opts.numeric, "Also check numerically at q = p^k: p=<p> k=<k>")->expected(2);
  add_common(verify);

  std::vector<const char*> argv{"ppart"};
  for (const auto& a : args)
    argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    LoadedData data;
    for (const auto& path : opts.tables)
      load_table(path, data);
    if (app.got_subcommand(classes))
      return cmd_classes(opts, data, out);
    if (app.got_subcommand(identities))
      return cmd_identities(opts, data, out);
    return cmd_verify(opts, data, out, err);
  } catch (const ConfigError& e) {
    err << "usage error: " << e.what() << "\n";
    return exit_usage;
  } catch (const DataMissingError& e) {
    err << "data missing: " << e.what() << "\n";
    return exit_data_missing;
  } catch (const InvalidRecord& e) {
    err << "invalid data: " << e.what() << "\n";
    return exit_invalid_data;
  } catch (const DomainError& e) {
    err << "invalid data: " << e.what() << "\n";
    return exit_invalid_data;
  }
}

} // namespace ppart::cli
