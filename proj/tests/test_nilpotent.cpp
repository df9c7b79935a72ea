#include "ppart/errors.hpp"
#include "ppart/nilpotent.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>

using namespace ppart;

namespace {

// Weighted Dynkin diagrams of classical nilpotent orbits of rank <= 4, as
// tabulated in the literature (Bourbaki labelling).
const std::map<std::string, std::vector<std::pair<std::string, std::string>>> reference_diagrams = {
    {"B2", {{"(5)", "22"}, {"(3,1,1)", "20"}, {"(2,2,1)", "01"}, {"(1^5)", "00"}}},
    {"C2", {{"(4)", "22"}, {"(2,2)", "02"}, {"(2,1,1)", "10"}, {"(1^4)", "00"}}},
    {"B3",
     {{"(7)", "222"},
      {"(5,1,1)", "220"},
      {"(3,3,1)", "020"},
      {"(3,2,2)", "101"},
      {"(3,1^4)", "200"},
      {"(2,2,1^3)", "010"},
      {"(1^7)", "000"}}},
    {"C3",
     {{"(6)", "222"},
      {"(4,2)", "202"},
      {"(4,1,1)", "210"},
      {"(3,3)", "020"},
      {"(2,2,2)", "002"},
      {"(2,2,1,1)", "010"},
      {"(2,1^4)", "100"},
      {"(1^6)", "000"}}},
    {"D4",
     {{"(7,1)", "2222"},
      {"(5,3)", "2022"},
      {"(5,1^3)", "2200"},
      {"(4,4)", "0202"},
      {"(3,3,1,1)", "0200"},
      {"(3,2,2,1)", "1011"},
      {"(3,1^5)", "2000"},
      {"(2^4)", "0002"},
      {"(2,2,1^4)", "0100"},
      {"(1^8)", "0000"}}},
    {"B4",
     {{"(9)", "2222"},
      {"(7,1,1)", "2220"},
      {"(5,3,1)", "2020"},
      {"(5,2,2)", "2101"},
      {"(5,1^4)", "2200"},
      {"(4,4,1)", "0201"},
      {"(3,3,3)", "0020"},
      {"(3,3,1^3)", "0200"},
      {"(3,2,2,1,1)", "1010"},
      {"(3,1^6)", "2000"},
      {"(2^4,1)", "0001"},
      {"(2,2,1^5)", "0100"},
      {"(1^9)", "0000"}}},
    {"C4",
     {{"(8)", "2222"},
      {"(6,2)", "2202"},
      {"(6,1,1)", "2210"},
      {"(4,4)", "0202"},
      {"(4,2,2)", "2002"},
      {"(4,2,1,1)", "2010"},
      {"(4,1^4)", "2100"},
      {"(3,3,2)", "0110"},
      {"(3,3,1,1)", "0200"},
      {"(2^4)", "0002"},
      {"(2,2,2,1,1)", "0010"},
      {"(2,2,1^4)", "0100"},
      {"(2,1^6)", "1000"},
      {"(1^8)", "0000"}}},
};

std::string digits(const WeightedDiagram& d) {
  std::string s;
  for (int x : d.labels)
    s += static_cast<char>('0' + x);
  return s;
}

std::vector<GroupSpec> classical_up_to(int max_rank) {
  std::vector<GroupSpec> v;
  for (int n = 1; n <= max_rank; ++n) {
    v.push_back(GroupSpec::make(Family::GL, n + 1));
    v.push_back(GroupSpec::make(Family::A, n));
  }
  for (int n = 2; n <= max_rank; ++n) {
    v.push_back(GroupSpec::make(Family::B, n));
    v.push_back(GroupSpec::make(Family::C, n));
  }
  for (int n = 4; n <= max_rank; ++n)
    v.push_back(GroupSpec::make(Family::D, n));
  return v;
}

} // namespace

TEST_CASE("class enumeration") {
  auto a2 = enumerate_classes(GroupSpec::parse("A2"));
  REQUIRE(a2.size() == 3);
  CHECK(a2[0].name() == "(3)");
  CHECK(a2[1].name() == "(2,1)");
  CHECK(a2[2].name() == "(1,1,1)");

  auto c2 = enumerate_classes(GroupSpec::parse("C2"));
  std::vector<std::string> names;
  for (auto& c : c2)
    names.push_back(c.name());
  CHECK(names == std::vector<std::string>{"(4)", "(2,2)", "(2,1,1)", "(1,1,1,1)"});

  auto g2 = enumerate_classes(GroupSpec::parse("G2"));
  CHECK(g2.size() == 5);
  CHECK(g2.front().name() == "G2");
  CHECK(g2.back().name() == "1");
  CHECK(enumerate_classes(GroupSpec::parse("F4")).size() == 16);

  CHECK(enumerate_classes(GroupSpec::parse("B4")).size() == 13);
  CHECK(enumerate_classes(GroupSpec::parse("C4")).size() == 14);
  CHECK(enumerate_classes(GroupSpec::parse("D4")).size() == 12);

  CHECK_THROWS_AS(enumerate_classes(GroupSpec::parse("E8")), DataMissingError);
}

TEST_CASE("very even classes of D_n appear twice with one diagram") {
  auto d4 = enumerate_classes(GroupSpec::parse("D4"));
  auto find = [&](const std::string& name) {
    return *std::find_if(d4.begin(), d4.end(), [&](const UnipotentClass& c) { return c.name() == name; });
  };
  CHECK(find("(4,4)I").diagram == find("(4,4)II").diagram);
  CHECK(find("(2,2,2,2)I").diagram == find("(2,2,2,2)II").diagram);
  CHECK(is_very_even(GroupSpec::parse("D4"), {4, 4}));
  CHECK_FALSE(is_very_even(GroupSpec::parse("D4"), {4, 2, 2}));
  CHECK_FALSE(is_very_even(GroupSpec::parse("C4"), {4, 4}));
  CHECK_THROWS_AS(make_class(GroupSpec::parse("D4"), {3, 3, 1, 1}, VeryEvenTag::II), DomainError);
  CHECK(find_class(GroupSpec::parse("D4"), "(4,4)II").very_even == VeryEvenTag::II);
}

TEST_CASE("weighted Dynkin diagrams") {
  CHECK(classical_diagram(GroupSpec::parse("A2"), {2, 1}).labels == std::vector<int>{1, 1});
  CHECK(classical_diagram(GroupSpec::parse("A2"), {3}).labels == std::vector<int>{2, 2});
  CHECK(classical_diagram(GroupSpec::parse("C2"), {2, 2}).labels == std::vector<int>{0, 2});
  CHECK_THROWS_AS(classical_diagram(GroupSpec::parse("C2"), {3, 1}), DomainError);
  CHECK_THROWS_AS(classical_diagram(GroupSpec::parse("B2"), {2, 2, 1, 1}), DomainError);
  CHECK_THROWS_AS(classical_diagram(GroupSpec::parse("D4"), {2, 1, 1, 1, 1, 1, 1}), DomainError);
  CHECK_THROWS_AS(classical_diagram(GroupSpec::parse("A2"), {2, 2}), DomainError);
}

TEST_CASE("diagrams agree with the reference table for rank <= 4") {
  for (const auto& [group, rows] : reference_diagrams) {
    const GroupSpec g = GroupSpec::parse(group);
    int expected_classes = 0;
    for (const auto& [label, diagram] : rows) {
      CAPTURE(group);
      CAPTURE(label);
      Partition p = parse_partition(label);
      CHECK(digits(classical_diagram(g, p)) == diagram);
      expected_classes += is_very_even(g, p) ? 2 : 1;
    }
    CHECK(enumerate_classes(g).size() == static_cast<std::size_t>(expected_classes));
  }
}

TEST_CASE("diagrams respect isomorphisms of small types") {
  // B2 = C2 with the nodes swapped; partitions correspond via the orbit dimension.
  auto b2 = enumerate_classes(GroupSpec::parse("B2"));
  auto c2 = enumerate_classes(GroupSpec::parse("C2"));
  REQUIRE(b2.size() == c2.size());
  for (std::size_t i = 0; i < b2.size(); ++i) {
    auto swapped = c2[i].diagram.labels;
    std::reverse(swapped.begin(), swapped.end());
    CHECK(b2[i].diagram.labels == swapped);
  }
  // D4 triality permutes the outer nodes 1, 3, 4.
  const GroupSpec d4 = GroupSpec::parse("D4");
  auto outer = [&](const Partition& p) {
    auto l = classical_diagram(d4, p).labels;
    std::vector<int> o = {l[0], l[2], l[3]};
    std::sort(o.begin(), o.end());
    return std::make_pair(l[1], o);
  };
  CHECK(outer({5, 1, 1, 1}) == outer({4, 4}));
  CHECK(outer({3, 1, 1, 1, 1, 1}) == outer({2, 2, 2, 2}));
}

TEST_CASE("labels lie in {0,1,2} and weights are nonnegative") {
  for (const auto& g : classical_up_to(8)) {
    RootSystem rs(g);
    for (const auto& c : enumerate_classes(g)) {
      for (int x : c.diagram.labels)
        CHECK((x >= 0 && x <= 2));
      for (const auto& r : rs.positive_roots())
        CHECK(root_weight(r, c.diagram) >= 0);
    }
  }
}

TEST_CASE("root_weight") {
  CHECK(root_weight({1, 1}, {{1, 1}}) == 2);
  CHECK(root_weight({1, 0}, {{0, 2}}) == 0);
  CHECK(root_weight({2, 1}, {{0, 2}}) == 2);
}

TEST_CASE("grading dimensions") {
  auto a2 = grading_dims(find_class(GroupSpec::parse("A2"), "(2,1)"));
  CHECK(a2.dimU1 == 3);
  CHECK(a2.dimU2 == 1);
  CHECK(a2.dimBu == 1);

  auto gl3 = grading_dims(find_class(GroupSpec::parse("GL3"), "(2,1)"));
  CHECK(gl3.dimU1 == 3);
  CHECK(gl3.dimU2 == 1);
  CHECK(gl3.dimP == 6);
  CHECK(gl3.dimC == 5);
  CHECK(gl3.dimBu == 1);

  auto c2 = grading_dims(find_class(GroupSpec::parse("C2"), "(2,2)"));
  CHECK(c2.dimU1 == 3);
  CHECK(c2.dimU2 == 3);
  CHECK(c2.dimC == 4);
  CHECK(c2.dimBu == 1);

  for (const char* g : {"A4", "GL5", "B3", "C4", "D5", "G2", "F4"}) {
    auto classes = enumerate_classes(GroupSpec::parse(g));
    auto zero = grading_dims(classes.back());
    CHECK(zero.dimU1 == 0);
    CHECK(zero.dimU2 == 0);
    CHECK(zero.dimBu == RootSystem(GroupSpec::parse(g)).num_positive());
    CHECK(grading_dims(classes.front()).dimBu == 0);
  }
  CHECK_THROWS_AS(grading_dims(RootSystem(GroupSpec::parse("A2")), WeightedDiagram{{1}}), DomainError);
}

TEST_CASE("centralizer oracle formulas") {
  CHECK(centralizer_dim_oracle(find_class(GroupSpec::parse("GL3"), "(2,1)")) == 5);
  CHECK(centralizer_dim_oracle(find_class(GroupSpec::parse("C2"), "(2,2)")) == 4);
  CHECK(centralizer_dim_oracle(find_class(GroupSpec::parse("GL4"), "(1^4)")) == 16);
  CHECK_THROWS_AS(centralizer_dim_oracle(enumerate_classes(GroupSpec::parse("G2")).front()), ConfigError);
  // the GL formula itself against a direct commutant computation
  for (int n = 1; n <= 6; ++n)
    for (const auto& p : partitions_of(n)) {
      CAPTURE(format_partition(p));
      CHECK(centralizer_dim_oracle(make_class(GroupSpec::make(Family::GL, n), p)) ==
            oracle::gl_commutant_dimension(p));
    }
}

TEST_CASE("grading centralizer equals the partition formula, rank <= 6") {
  for (const auto& g : classical_up_to(6))
    for (const auto& c : enumerate_classes(g)) {
      CAPTURE(g.to_string());
      CAPTURE(c.name());
      CHECK(grading_dims(c).dimC == centralizer_dim_oracle(c));
    }
}

TEST_CASE("type A: dim B_u = n(mu)") {
  for (int n = 1; n <= 10; ++n)
    for (const auto& p : partitions_of(n)) {
      CHECK(grading_dims(make_class(GroupSpec::make(Family::GL, n), p)).dimBu == n_statistic(p));
      if (n >= 2)
        CHECK(grading_dims(make_class(GroupSpec::make(Family::A, n - 1), p)).dimBu == n_statistic(p));
    }
}

TEST_CASE("exceptional tables") {
  auto f4 = embedded_f4_table();
  CHECK(f4.size() == 16);
  auto g2 = embedded_g2_table();
  CHECK(g2.size() == 5);
  // distinguished classes have dim g(0) = dim g(2)
  RootSystem rs(GroupSpec::parse("G2"));
  auto sub = find_class(GroupSpec::parse("G2"), "G2(a1)");
  int w2 = 0;
  for (const auto& r : rs.positive_roots())
    w2 += root_weight(r, sub.diagram) == 2;
  CHECK(grading_dims(sub).g0 == w2);
  CHECK(grading_dims(find_class(GroupSpec::parse("F4"), "F4(a3)")).dimBu == 4);
  CHECK_THROWS_AS(find_class(GroupSpec::parse("F4"), "E6"), DomainError);
}

TEST_CASE("diagram ingestion") {
  DiagramLibrary lib;
  std::string text = R"([
    {"group": "G2", "class": "G2", "diagram": [2, 2], "orbit_dim": 12},
    {"group": "G2", "class": "1", "diagram": [0, 0]}
  ])";
  lib.add(parse_diagram_records(text));
  CHECK(enumerate_classes(GroupSpec::parse("G2"), lib).size() == 2);

  auto rejects = [](const std::string& t) {
    DiagramLibrary l;
    l.add(parse_diagram_records(t));
  };
  CHECK_THROWS_AS(rejects(R"([{"group": "G2", "class": "x", "diagram": [3, 0]}])"), InvalidRecord);
  CHECK_THROWS_AS(rejects(R"([{"group": "G2", "class": "x", "diagram": [0]}])"), InvalidRecord);
  CHECK_THROWS_AS(rejects(R"([{"group": "G2", "class": "x", "diagram": [2, 2], "orbit_dim": 10}])"), InvalidRecord);
  CHECK_THROWS_AS(rejects(R"([{"group": "C2", "class": "x", "diagram": [0, 2]}])"), InvalidRecord);
  CHECK_THROWS_AS(rejects(R"([{"group": "G2", "class": "a", "diagram": [0, 0]},
                                {"group": "G2", "class": "a", "diagram": [2, 2]}])"),
                  InvalidRecord);
  CHECK_THROWS_AS(rejects(R"({"group": "G2"})"), InvalidRecord);
  CHECK_THROWS_AS(rejects(R"([{"group": "Q2", "class": "x", "diagram": [0, 0]}])"), InvalidRecord);
  try {
    rejects(R"([{"group": "G2", "class": "a", "diagram": [0, 0]}, {"group": "G2", "diagram": [0, 0]}])");
    FAIL("expected rejection");
  } catch (const InvalidRecord& e) {
    CHECK(e.index() == 1);
  }

  // serialisation round trip
  auto again = parse_diagram_records(serialize_diagram_records(embedded_f4_table()));
  REQUIRE(again.size() == 16);
  CHECK(again[5].name == "F4(a3)");
  CHECK(again[5].diagram == embedded_f4_table()[5].diagram);
}
