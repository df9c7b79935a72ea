#include "ppart/nilpotent.hpp"

namespace ppart {

namespace {

struct Row {
  const char* name;
  std::vector<int> labels;
  int orbit_dim;
};

std::vector<DiagramRecord> to_records(GroupSpec g, const std::vector<Row>& rows) {
  std::vector<DiagramRecord> out;
  for (const auto& r : rows)
    out.push_back({g, r.name, {r.labels}, r.orbit_dim});
  return out;
}

} // namespace

// alpha_1 short, alpha_2 long.
std::vector<DiagramRecord> embedded_g2_table() {
  return to_records(GroupSpec{Family::G, 2}, {
                                                 {"G2", {2, 2}, 12},
                                                 {"G2(a1)", {0, 2}, 10},
                                                 {"~A1", {1, 0}, 8},
                                                 {"A1", {0, 1}, 6},
                                                 {"1", {0, 0}, 0},
                                             });
}

// alpha_1, alpha_2 long; alpha_3, alpha_4 short.
std::vector<DiagramRecord> embedded_f4_table() {
  return to_records(GroupSpec{Family::F, 4}, {
                                                 {"F4", {2, 2, 2, 2}, 48},
                                                 {"F4(a1)", {2, 2, 0, 2}, 46},
                                                 {"F4(a2)", {0, 2, 0, 2}, 44},
                                                 {"B3", {2, 2, 0, 0}, 42},
                                                 {"C3", {1, 0, 1, 2}, 42},
                                                 {"F4(a3)", {0, 2, 0, 0}, 40},
                                                 {"C3(a1)", {1, 0, 1, 0}, 38},
                                                 {"~A2+A1", {0, 1, 0, 1}, 36},
                                                 {"B2", {2, 0, 0, 1}, 36},
                                                 {"A2+~A1", {0, 0, 1, 0}, 34},
                                                 {"~A2", {0, 0, 0, 2}, 30},
                                                 {"A2", {2, 0, 0, 0}, 30},
                                                 {"A1+~A1", {0, 1, 0, 0}, 28},
                                                 {"~A1", {0, 0, 0, 1}, 22},
                                                 {"A1", {1, 0, 0, 0}, 16},
                                                 {"1", {0, 0, 0, 0}, 0},
                                             });
}

} // namespace ppart
