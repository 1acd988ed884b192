#ifndef VOABIM_PARTITIONS_HPP
#define VOABIM_PARTITIONS_HPP

#include <string>
#include <vector>

namespace voabim {

// Weakly decreasing positive parts. The empty partition is the weight-0 one.
using Partition = std::vector<int>;

int partition_weight(const Partition &p);

// All partitions of n into parts >= min_part, in a fixed deterministic order
// (lexicographically decreasing on the part sequence).
std::vector<Partition> partitions_of(int n, int min_part);

std::string partition_str(const Partition &p, const std::string &gen_name,
                          const std::string &tail = "vac");

} // namespace voabim

#endif
