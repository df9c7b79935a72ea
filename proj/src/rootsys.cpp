#include "ppart/rootsys.hpp"

#include "ppart/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <numeric>

namespace ppart {

char family_letter(Family f) {
  switch (f) {
  case Family::A: return 'A';
  case Family::B: return 'B';
  case Family::C: return 'C';
  case Family::D: return 'D';
  case Family::E: return 'E';
  case Family::F: return 'F';
  case Family::G: return 'G';
  case Family::GL: break;
  }
  return '?';
}

GroupSpec GroupSpec::make(Family family, int rank) {
  auto bad = [&](const char* why) {
    std::string name = family == Family::GL ? "GL" : std::string(1, family_letter(family));
    return ConfigError(name + std::to_string(rank) + ": " + why);
  };
  switch (family) {
  case Family::GL:
  case Family::A:
    if (rank < 1)
      throw bad("rank must be at least 1");
    break;
  case Family::B:
  case Family::C:
    if (rank < 2)
      throw bad("rank must be at least 2");
    break;
  case Family::D:
    if (rank < 3)
      throw bad("rank must be at least 3");
    if (rank == 3)
      return GroupSpec{Family::A, 3};
    break;
  case Family::E:
    if (rank < 6 || rank > 8)
      throw bad("rank must be 6, 7 or 8");
    break;
  case Family::F:
    if (rank != 4)
      throw bad("rank must be 4");
    break;
  case Family::G:
    if (rank != 2)
      throw bad("rank must be 2");
    break;
  }
  return GroupSpec{family, rank};
}

GroupSpec GroupSpec::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)))
      s.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  Family family;
  std::size_t pos = 1;
  if (s.rfind("GL", 0) == 0) {
    family = Family::GL;
    pos = 2;
  } else if (!s.empty() && s[0] >= 'A' && s[0] <= 'G') {
    static constexpr Family letters[] = {Family::A, Family::B, Family::C, Family::D,
                                         Family::E, Family::F, Family::G};
    family = letters[s[0] - 'A'];
  } else {
    throw ConfigError("unrecognised group spec '" + std::string(text) + "'");
  }
  int rank = 0;
  auto [end, ec] = std::from_chars(s.data() + pos, s.data() + s.size(), rank);
  if (ec != std::errc{} || end != s.data() + s.size() || pos == s.size())
    throw ConfigError("unrecognised group spec '" + std::string(text) + "'");
  return make(family, rank);
}

std::string GroupSpec::to_string() const {
  if (family == Family::GL)
    return "GL" + std::to_string(rank);
  return std::string(1, family_letter(family)) + std::to_string(rank);
}

namespace {

// Entries are (alpha_i, alpha_j) scaled so that every value is an integer.
std::vector<std::vector<int>> gram_matrix(const GroupSpec& spec) {
  const int n = spec.semisimple_rank();
  std::vector<std::vector<int>> g(n, std::vector<int>(n, 0));
  auto chain = [&](int len, int diag) {
    for (int i = 0; i < len; ++i) {
      g[i][i] = diag;
      if (i + 1 < len)
        g[i][i + 1] = g[i + 1][i] = -diag / 2;
    }
  };
  switch (spec.family) {
  case Family::GL:
  case Family::A:
    chain(n, 2);
    break;
  case Family::B: // long roots length^2 4, alpha_n length^2 2
    chain(n, 4);
    g[n - 1][n - 1] = 2;
    break;
  case Family::C: // short roots length^2 2, alpha_n length^2 4
    chain(n, 2);
    g[n - 1][n - 1] = 4;
    g[n - 2][n - 1] = g[n - 1][n - 2] = -2;
    break;
  case Family::D:
    chain(n, 2);
    g[n - 2][n - 1] = g[n - 1][n - 2] = 0;
    g[n - 3][n - 1] = g[n - 1][n - 3] = -1;
    break;
  case Family::E: {
    for (int i = 0; i < n; ++i)
      g[i][i] = 2;
    auto edge = [&](int a, int b) { g[a - 1][b - 1] = g[b - 1][a - 1] = -1; };
    edge(1, 3);
    edge(2, 4);
    for (int i = 3; i < n; ++i)
      edge(i, i + 1);
    break;
  }
  case Family::F:
    g = {{4, -2, 0, 0}, {-2, 4, -2, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}};
    break;
  case Family::G:
    g = {{2, -3}, {-3, 6}};
    break;
  }
  return g;
}

bool is_positive_root_vector(const RootVector& v) {
  return std::all_of(v.begin(), v.end(), [](int c) { return c >= 0; }) &&
         std::any_of(v.begin(), v.end(), [](int c) { return c != 0; });
}

} // namespace

RootSystem::RootSystem(GroupSpec spec) : spec_(spec), gram_(gram_matrix(spec)), degrees_(::ppart::fundamental_degrees(spec)) {
  const int n = simple_rank();
  std::set<RootVector> seen;
  std::deque<RootVector> queue;
  for (int i = 0; i < n; ++i) {
    RootVector e(n, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(std::move(e));
  }
  // Every positive root of height > 1 is s_i of a lower one, so the orbit of
  // the simple roots under simple reflections, cut to the positive side, is
  // all of Phi^+.
  while (!queue.empty()) {
    RootVector beta = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      RootVector r = reflect(beta, i);
      if (is_positive_root_vector(r) && seen.insert(r).second)
        queue.push_back(std::move(r));
    }
  }
  positive_.assign(seen.begin(), seen.end());
  std::sort(positive_.begin(), positive_.end(), [](const RootVector& a, const RootVector& b) {
    int ha = std::accumulate(a.begin(), a.end(), 0), hb = std::accumulate(b.begin(), b.end(), 0);
    if (ha != hb)
      return ha < hb;
    return a < b;
  });
  if (num_positive() != positive_root_count(spec_))
    throw InvariantError("root closure for " + spec_.to_string() + " produced " +
                         std::to_string(num_positive()) + " roots");
}

int RootSystem::pairing(const RootVector& beta, int i) const {
  int s = 0;
  for (int j = 0; j < simple_rank(); ++j)
    s += beta[j] * gram_[j][i];
  return 2 * s / gram_[i][i];
}

RootVector RootSystem::reflect(const RootVector& beta, int i) const {
  RootVector r = beta;
  r[i] -= pairing(beta, i);
  return r;
}

RootSystem build_root_system(const GroupSpec& spec) { return RootSystem(spec); }

int positive_root_count(const GroupSpec& spec) {
  const int n = spec.rank;
  switch (spec.family) {
  case Family::GL: return n * (n - 1) / 2;
  case Family::A: return n * (n + 1) / 2;
  case Family::B:
  case Family::C: return n * n;
  case Family::D: return n * (n - 1);
  case Family::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
  case Family::F: return 24;
  case Family::G: return 6;
  }
  return 0;
}

std::vector<int> fundamental_degrees(const GroupSpec& spec) {
  const int n = spec.rank;
  std::vector<int> d;
  switch (spec.family) {
  case Family::GL:
    for (int i = 1; i <= n; ++i)
      d.push_back(i);
    break;
  case Family::A:
    for (int i = 2; i <= n + 1; ++i)
      d.push_back(i);
    break;
  case Family::B:
  case Family::C:
    for (int i = 1; i <= n; ++i)
      d.push_back(2 * i);
    break;
  case Family::D:
    for (int i = 1; i < n; ++i)
      d.push_back(2 * i);
    d.push_back(n);
    std::sort(d.begin(), d.end());
    break;
  case Family::E:
    if (n == 6)
      d = {2, 5, 6, 8, 9, 12};
    else if (n == 7)
      d = {2, 6, 8, 10, 12, 14, 18};
    else
      d = {2, 8, 12, 14, 18, 20, 24, 30};
    break;
  case Family::F: d = {2, 6, 8, 12}; break;
  case Family::G: d = {2, 6}; break;
  }
  return d;
}

QPolynomial order_polynomial(const GroupSpec& spec) {
  QPolynomial f = QPolynomial::monomial(static_cast<unsigned>(positive_root_count(spec)));
  for (int d : fundamental_degrees(spec))
    f *= QPolynomial::q_power_minus_one(static_cast<unsigned>(d));
  return f;
}

std::set<unsigned> bad_primes(const GroupSpec& spec) {
  switch (spec.family) {
  case Family::GL:
  case Family::A: return {};
  case Family::B:
  case Family::C:
  case Family::D: return {2};
  case Family::G:
  case Family::F: return {2, 3};
  case Family::E: return spec.rank == 8 ? std::set<unsigned>{2, 3, 5} : std::set<unsigned>{2, 3};
  }
  return {};
}

bool is_good_prime(const GroupSpec& spec, unsigned p) {
  if (!is_prime(p))
    throw DomainError(std::to_string(p) + " is not prime");
  return !bad_primes(spec).contains(p);
}

} // namespace ppart
