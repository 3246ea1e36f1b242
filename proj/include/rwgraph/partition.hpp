#ifndef RWGRAPH_PARTITION_HPP
#define RWGRAPH_PARTITION_HPP

#include <string>
#include <vector>

namespace rwg {

// A partition is stored with parts in non-increasing order.
using Partition = std::vector<int>;

// All partitions of n, listed so that (1,1,...,1) comes first and (n) last
// (ascending lexicographic order on the non-increasing part tuples). This is
// the fixed presentation order used for bases and tables.
std::vector<Partition> partitions_of(int n);

// Partitions of 2k into even parts, same order. These index the polywheels
// <w_{l1}...w_{lj}> of weight 2k and the Chern monomials s_{l1}...s_{lj}.
std::vector<Partition> even_partitions_of(int n);

Partition sorted_partition(std::vector<int> parts);

// "2,2,4" style (ascending parts, matching CLI input such as --partition).
std::string partition_to_string(const Partition& p);
Partition partition_from_string(const std::string& s);

int partition_weight(const Partition& p);

}  // namespace rwg

#endif
