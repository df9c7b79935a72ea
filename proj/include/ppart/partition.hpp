#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace ppart {

/// Weakly decreasing positive parts.
using Partition = std::vector<int>;

/// All partitions of n in reverse lexicographic order, which refines
/// dominance order: (n) comes first, (1^n) last.
std::vector<Partition> partitions_of(int n);

int partition_size(const Partition& p);
bool is_partition(const Partition& p);

/// Transposed diagram.
Partition conjugate(const Partition& p);

/// n(lambda) = sum_i (i - 1) lambda_i
int n_statistic(const Partition& p);

/// Hook lengths, row by row.
std::vector<int> hook_lengths(const Partition& p);

/// Number of parts equal to m.
int multiplicity(const Partition& p, int m);

/// "(2,1,1)". The empty partition prints as "()".
std::string format_partition(const Partition& p);

/// Accepts "(2,1,1)", "2,1,1", "2 1 1" and exponent shorthand "(2,1^2)".
/// Parts are sorted into decreasing order. Throws DomainError.
Partition parse_partition(std::string_view text);

} // namespace ppart
