// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include "ppart/characters.hpp"
#include "ppart/cli.hpp"
#include "ppart/json_io.hpp"
#include "ppart/sweep.hpp"
#include "ppart/verifier.hpp"

#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace ppart;

namespace {

using Clock = std::chrono::steady_clock;

struct Check {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok)
      failures.push_back(what);
  }
};

int failed = 0;

void criterion(const std::string& id, const std::string& title, double budget_ms,
               const std::function<void(Check&)>& body) {
  Check c;
  auto start = Clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.failures.push_back(std::string("exception: ") + e.what());
  }
  double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  if (budget_ms > 0 && ms >= budget_ms)
    c.failures.push_back("runtime " + std::to_string(ms) + " ms exceeds " + std::to_string(budget_ms) + " ms");
  bool ok = c.failures.empty();
  failed += !ok;
  std::printf("[%s] %s %s (%.3f ms)\n", ok ? "PASS" : "FAIL", id.c_str(), title.c_str(), ms);
  for (const auto& f : c.failures)
    std::printf("       - %s\n", f.c_str());
}

CharacterRecord sp4_half_degree() {
  for (const auto& chi : embedded_sp4_table())
    if (chi.degree == QPolynomial{0, 1, 0, 1} * Rational(1, 2) && chi.support == "(2,2)")
      return chi;
  throw std::runtime_error("Sp4 table lacks q(q^2+1)/2");
}

std::string run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  cli::run(args, out, err);
  return out.str();
}

std::string run_binary(const std::string& args) {
  std::string cmd = std::string(PPART_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe)
    throw std::runtime_error("cannot spawn " + cmd);
  std::string out;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe))
    out.append(buf, n);
  pclose(pipe);
  return out;
}

std::vector<GroupSpec> identity_groups() {
  std::vector<GroupSpec> v;
  for (int n = 1; n <= 8; ++n)
    v.push_back(GroupSpec::make(Family::A, n));
  for (int n = 2; n <= 6; ++n) {
    v.push_back(GroupSpec::make(Family::B, n));
    v.push_back(GroupSpec::make(Family::C, n));
  }
  for (int n = 4; n <= 6; ++n)
    v.push_back(GroupSpec::make(Family::D, n));
  v.push_back(GroupSpec::make(Family::G, 2));
  v.push_back(GroupSpec::make(Family::F, 4));
  return v;
}

} // namespace

int main() {
  criterion("AC1", "GL3, lambda=(2,1): Example 1 reproduced exactly", 1.0, [](Check& c) {
    const GroupSpec gl3 = GroupSpec::make(Family::GL, 3);
    CharacterRecord chi{gl3, "(2,1)", gl_unipotent_degree(3, {2, 1}), gl_support_class({2, 1}).name()};
    c.expect(chi.degree == QPolynomial{0, 1, 1}, "degree q(q+1), got " + chi.degree.to_string());
    c.expect(chi.support == "(2,1)", "support class (2,1)");
    auto r = verify_character(chi);
    c.expect(r.lhs_exponent == 2, "defect q-part q^2");
    c.expect(r.diagram.labels == std::vector<int>{1, 1}, "diagram (1,1), got " + r.diagram.to_string());
    c.expect(r.dims.dimU1 == 3, "dimU1 = 3");
    c.expect(r.dims.dimU2 == 1, "dimU2 = 1");
    QPolynomial psi = psi_degree(r.dims);
    c.expect(psi == QPolynomial{0, 1}, "psi(1) = q");
    auto ratio = divide_exact(QPolynomial::monomial(static_cast<unsigned>(r.dims.dimU1)), psi);
    c.expect(ratio && *ratio == QPolynomial::monomial(2), "|U1^F|/psi(1) = q^2");
    c.expect(r.rhs_exponent == 2, "rhs exponent 2");
    c.expect(r.status == Status::pass, "status pass");
  });

  criterion("AC2", "Sp4, degree q(q^2+1)/2, good characteristic", 1.0, [](Check& c) {
    CharacterRecord chi = sp4_half_degree();
    auto r = verify_character(chi);
    c.expect(r.support_class == "(2,2)", "support (2,2)");
    c.expect(r.dims.dimBu == 1, "dimBu = 1");
    c.expect(r.dims.dimU1 == 3 && r.dims.dimU2 == 3, "dimU1 = dimU2 = 3");
    c.expect(r.rhs_exponent == 3, "rhs q^3");
    c.expect(r.lhs_exponent == 3, "lhs q^3");
    c.expect(r.status == Status::pass, "status pass");
    auto n = numeric_check(chi, 3, 1);
    c.expect(n.measured == 27 && n.construction == 27 && n.equal, "numeric p=3,k=1 gives (27,27,true)");
  });

  criterion("AC3", "Sp4, degree q(q^2+1)/2, characteristic 2: 2-part is 2q^3, not q^3", 0, [](Check& c) {
    CharacterRecord chi = sp4_half_degree();
    for (unsigned k = 1; k <= 3; ++k) {
      auto n = numeric_check(chi, 2, k);
      BigInt q = prime_power(2, k);
      c.expect(n.measured == 2 * q * q * q, "k=" + std::to_string(k) + ": measured 2-part is 2q^3");
      c.expect(n.construction == q * q * q, "k=" + std::to_string(k) + ": construction value q^3");
      c.expect(!n.equal, "k=" + std::to_string(k) + ": values differ");
      c.expect(!n.good_prime, "2 is flagged bad for C2");
    }
    auto first = numeric_check(chi, 2, 1);
    c.expect(first.measured == 16 && first.construction == 8, "k=1: 16 vs 8");
  });

  criterion("AC4", "five dimension identities on A1-8, B/C2-6, D4-6, G2, F4", 5000.0, [](Check& c) {
    auto summaries = identity_sweep(identity_groups(), Execution::parallel);
    int classes = 0, violations = 0;
    for (const auto& s : summaries) {
      classes += s.classes;
      violations += static_cast<int>(s.violations.size());
      for (const auto& v : s.violations)
        c.expect(false, s.group.to_string() + " " + v.class_name + ": " + v.identity);
    }
    c.expect(violations == 0, "zero violations");
    c.expect(classes > 0, "classes checked");
    c.expect(summaries.back().classes == 16, "F4 has 16 classes");
    std::printf("       %d classes, %d violations\n", classes, violations);
  });

  criterion("AC5", "every unipotent character of GL_n, n <= 10, passes", 5000.0, [](Check& c) {
    auto reports = sweep_gl(1, 10, Execution::parallel);
    c.expect(reports.size() == 138, "138 characters (sum of p(n), n <= 10)");
    int per_n[11] = {};
    for (const auto& r : reports) {
      ++per_n[r.group.rank];
      if (r.status != Status::pass)
        c.expect(false, r.group.to_string() + " " + r.character + " did not pass");
    }
    c.expect(per_n[10] == 42, "p(10) = 42 characters of GL10");
  });

  criterion("AC6a", "grading dim C_G(u) equals the partition formula, classical rank <= 6", 0, [](Check& c) {
    int n_checked = 0;
    std::vector<GroupSpec> groups;
    for (int n = 1; n <= 6; ++n) {
      groups.push_back(GroupSpec::make(Family::GL, n + 1));
      groups.push_back(GroupSpec::make(Family::A, n));
    }
    for (int n = 2; n <= 6; ++n) {
      groups.push_back(GroupSpec::make(Family::B, n));
      groups.push_back(GroupSpec::make(Family::C, n));
    }
    for (int n = 4; n <= 6; ++n)
      groups.push_back(GroupSpec::make(Family::D, n));
    for (const auto& g : groups)
      for (const auto& cls : enumerate_classes(g)) {
        ++n_checked;
        if (grading_dims(cls).dimC != centralizer_dim_oracle(cls))
          c.expect(false, g.to_string() + " " + cls.name());
      }
    // the GL formula itself against a direct commutant computation
    for (int n = 1; n <= 5; ++n)
      for (const auto& p : oracle::all_partitions(n))
        c.expect(centralizer_dim_oracle(make_class(GroupSpec::make(Family::GL, n), p)) ==
                     oracle::gl_commutant_dimension(p),
                 "commutant of " + format_partition(p));
    std::printf("       %d classes compared\n", n_checked);
  });

  criterion("AC6b", "GL degree at q=1 equals brute-force SYT counts, n <= 8", 0, [](Check& c) {
    for (int n = 1; n <= 8; ++n)
      for (const auto& p : oracle::all_partitions(n))
        c.expect(gl_unipotent_degree(n, p).evaluate(1) == oracle::count_standard_tableaux(p),
                 format_partition(p));
  });

  criterion("AC6c", "type A dim B_u equals n(mu), n <= 10", 0, [](Check& c) {
    for (int n = 1; n <= 10; ++n)
      for (const auto& p : oracle::all_partitions(n)) {
        int n_mu = 0;
        for (std::size_t i = 0; i < p.size(); ++i)
          n_mu += static_cast<int>(i) * p[i];
        c.expect(grading_dims(make_class(GroupSpec::make(Family::GL, n), p)).dimBu == n_mu,
                 "GL " + format_partition(p));
        if (n >= 2)
          c.expect(grading_dims(make_class(GroupSpec::make(Family::A, n - 1), p)).dimBu == n_mu,
                   "A " + format_partition(p));
      }
  });

  criterion("AC7", "bit-exact polynomial round trip, byte-identical repeated CLI runs", 0, [](Check& c) {
    std::vector<QPolynomial> corpus;
    for (int n = 1; n <= 10; ++n)
      for (const auto& chi : gl_unipotent_characters(n)) {
        corpus.push_back(chi.degree);
        corpus.push_back(defect_polynomial(chi.group, chi));
      }
    for (const auto& chi : embedded_sp4_table()) {
      corpus.push_back(chi.degree);
      corpus.push_back(defect_polynomial(chi.group, chi));
    }
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> num(-1000, 1000), den(1, 12);
    for (int t = 0; t < 200; ++t) {
      std::vector<Rational> coeffs(rng() % 20 + 1);
      for (auto& x : coeffs)
        x = Rational(num(rng), den(rng));
      corpus.emplace_back(std::move(coeffs));
    }
    for (const auto& f : corpus) {
      const std::string text = poly_to_json(f).dump();
      QPolynomial g = poly_from_json(nlohmann::json::parse(text));
      c.expect(g == f && poly_to_json(g).dump() == text && encode(g) == encode(f), "round trip " + text);
    }
    c.expect(poly_to_json(QPolynomial{0, 1, 0, 1} * Rational(1, 2)).dump() == R"({"num":[0,1,0,1],"den":2})",
             "q(q^2+1)/2 encodes as [0,1,0,1] over 2");

    const std::vector<std::vector<std::string>> runs = {
        {"verify", "GL", "1..8", "--format", "json"},
        {"verify", "GL", "1..8", "--format", "csv"},
        {"verify", "C2", "--numeric", "p=2", "k=1"},
        {"identities", "--format", "json"},
        {"classes", "F4", "--format", "csv"},
    };
    for (const auto& args : runs) {
      std::string a = run_cli(args), b = run_cli(args);
      std::string joined;
      for (const auto& s : args)
        joined += s + " ";
      c.expect(!a.empty() && a == b, "in-process: " + joined);
      std::string x = run_binary(joined), y = run_binary(joined);
      c.expect(!x.empty() && x == y && x == a, "binary: " + joined);
    }
  });

  std::printf("%s: %d criteria failed\n", failed ? "FAILED" : "ALL PASSED", failed);
  return failed ? 1 : 0;
}
