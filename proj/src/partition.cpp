#include "ppart/partition.hpp"

#include "ppart/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <numeric>

namespace ppart {

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0)
    return out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      cur.push_back(part);
      rec(remaining - part, part);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

int partition_size(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

bool is_partition(const Partition& p) {
  return std::all_of(p.begin(), p.end(), [](int x) { return x > 0; }) &&
         std::is_sorted(p.begin(), p.end(), std::greater<>{});
}

Partition conjugate(const Partition& p) {
  Partition c(p.empty() ? 0 : p.front(), 0);
  for (int part : p)
    for (int j = 0; j < part; ++j)
      ++c[j];
  return c;
}

int n_statistic(const Partition& p) {
  int s = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    s += static_cast<int>(i) * p[i];
  return s;
}

std::vector<int> hook_lengths(const Partition& p) {
  Partition c = conjugate(p);
  std::vector<int> hooks;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (int j = 0; j < p[i]; ++j)
      hooks.push_back((p[i] - j - 1) + (c[j] - static_cast<int>(i) - 1) + 1);
  return hooks;
}

int multiplicity(const Partition& p, int m) { return static_cast<int>(std::count(p.begin(), p.end(), m)); }

std::string format_partition(const Partition& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i)
      s += ',';
    s += std::to_string(p[i]);
  }
  return s + ")";
}

Partition parse_partition(std::string_view text) {
  auto fail = [&] { return DomainError("malformed partition '" + std::string(text) + "'"); };
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')')
    s = s.substr(1, s.size() - 2);
  Partition p;
  std::size_t i = 0;
  auto read_int = [&](int& value) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
      ++i;
    auto [end, ec] = std::from_chars(s.data() + i, s.data() + s.size(), value);
    if (ec != std::errc{})
      throw fail();
    i = static_cast<std::size_t>(end - s.data());
  };
  while (i < s.size()) {
    int part = 0, count = 1;
    read_int(part);
    if (i < s.size() && s[i] == '^') {
      ++i;
      read_int(count);
    }
    if (part <= 0 || count <= 0)
      throw fail();
    p.insert(p.end(), count, part);
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
      ++i;
    if (i < s.size()) {
      if (s[i] != ',' && !std::isdigit(static_cast<unsigned char>(s[i])))
        throw fail();
      if (s[i] == ',')
        ++i;
    }
  }
  std::sort(p.begin(), p.end(), std::greater<>{});
  return p;
}

} // namespace ppart
