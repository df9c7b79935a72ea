#include "ppart/errors.hpp"
#include "ppart/partition.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace ppart;

TEST_CASE("partitions_of matches an independent enumeration") {
  const int counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n) {
    auto ps = partitions_of(n);
    CHECK(ps.size() == static_cast<std::size_t>(counts[n]));
    std::set<Partition> mine(ps.begin(), ps.end());
    auto ref = oracle::all_partitions(n);
    CHECK(mine == std::set<Partition>(ref.begin(), ref.end()));
    // reverse lexicographic: regular first, trivial last
    CHECK(std::is_sorted(ps.begin(), ps.end(), std::greater<>{}));
  }
  CHECK(partitions_of(3) == std::vector<Partition>{{3}, {2, 1}, {1, 1, 1}});
}

TEST_CASE("statistics") {
  CHECK(conjugate({3, 1}) == Partition{2, 1, 1});
  CHECK(conjugate({}) == Partition{});
  CHECK(n_statistic({2, 1}) == 1);
  CHECK(n_statistic({1, 1, 1, 1}) == 6);
  CHECK(hook_lengths({2, 1}) == std::vector<int>{3, 1, 1});
  CHECK(multiplicity({2, 2, 1}, 2) == 2);
  for (int n = 1; n <= 8; ++n)
    for (const auto& p : partitions_of(n)) {
      CHECK(conjugate(conjugate(p)) == p);
      CHECK(partition_size(conjugate(p)) == n);
    }
}

TEST_CASE("parse and format") {
  CHECK(parse_partition("(2,1,1)") == Partition{2, 1, 1});
  CHECK(parse_partition("1 2 1") == Partition{2, 1, 1});
  CHECK(parse_partition("(1^4)") == Partition{1, 1, 1, 1});
  CHECK(parse_partition("(3,2^2,1)") == Partition{3, 2, 2, 1});
  CHECK(format_partition({2, 2}) == "(2,2)");
  CHECK_THROWS_AS(parse_partition("(2,x)"), DomainError);
  CHECK_THROWS_AS(parse_partition("(0,1)"), DomainError);
  CHECK_THROWS_AS(parse_partition("(2,-1)"), DomainError);
  for (const auto& p : partitions_of(7))
    CHECK(parse_partition(format_partition(p)) == p);
}
