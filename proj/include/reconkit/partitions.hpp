#pragma once

#include <vector>

#include "reconkit/integer.hpp"

namespace reconkit {

/// Integer partitions of m into non-increasing parts within [min_part, max_part].
std::vector<std::vector<int>> integer_partitions(int m, int min_part, int max_part);

/// A partition of a multiset of integers into unordered blocks, together with
/// the number of set partitions of an index set carrying that multiset which
/// produce it.
struct MultisetPartition {
    std::vector<std::vector<int>> parts;  // each part non-increasing; parts in canonical order
    Integer set_partitions = 0;
};

/// All partitions of the multiset `a` into exactly `blocks` nonempty parts
/// (`blocks` = 0 means any number).
std::vector<MultisetPartition> multiset_partitions(const std::vector<int>& a, int blocks = 0);

/// True if `finer` refines `coarser`: the parts of `finer` can be grouped so
/// that each group sums to one part of `coarser`. Both are partitions of the
/// same integer.
bool refines(const std::vector<int>& finer, const std::vector<int>& coarser);

/// Product of factorials of the multiplicities of the values in `a`.
Integer multiplicity_factorial(const std::vector<int>& a);

}  // namespace reconkit
