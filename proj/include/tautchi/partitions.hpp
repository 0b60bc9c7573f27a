#pragma once

#include <vector>

namespace tautchi {

// All partitions of n as weakly decreasing part lists, in descending
// lexicographic order ((n), (n-1,1), ..., (1,...,1)).  partitions_of(0)
// holds exactly the empty partition.
std::vector<std::vector<int>> partitions_of(int n);

} // namespace tautchi
