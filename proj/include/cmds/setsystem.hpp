#pragma once

#include <optional>
#include <vector>

namespace cmds {

/* Ordered list of k multisets over the ground set [n].  Multisets are kept
 * as sorted lists with repetition; plain sets are multisets without repeats.
 * Elements are 1-based. */
struct SetSystem {
    int n = 0;
    std::vector<std::vector<int>> sets;

    int k() const { return static_cast<int>(sets.size()); }
};

// sorted-multiset primitives
std::vector<int> multiset_intersect(const std::vector<int>& a, const std::vector<int>& b);
std::vector<int> multiset_diff(const std::vector<int>& a, const std::vector<int>& b);
std::vector<int> multiset_union(const std::vector<int>& a, const std::vector<int>& b);
bool multiset_contains(const std::vector<int>& outer, const std::vector<int>& inner);
bool is_plain_set(const std::vector<int>& s);

// running intersections R_i = S_1 ∩ ... ∩ S_i (multiset semantics), i = 1..k
std::vector<std::vector<int>> running_intersections(const SetSystem& s);

struct MdsConditionResult {
    bool ok = false;
    std::vector<int> violating; // 1-based row indices, empty when ok
};

/* |I| + |∩_{i∈I} S_i| <= k for every nonempty I, by enumeration over all
 * 2^k - 1 subsets.  On failure reports the first violating I in bitmask
 * order.  Requires plain sets (throws MultisetNotAllowed). */
MdsConditionResult check_mds_condition(const SetSystem& s);

struct NestedChainResult {
    bool ok = false;
    std::vector<int> sizes;  // |S_1 ∩ .. ∩ S_i| for i = 1..k (as far as computed)
    int failing_index = 0;   // 1-based first i with |∩| != k - i; 0 when ok
};

// running intersection sizes must be exactly k-1, k-2, ..., 0
NestedChainResult check_nested_chain(const SetSystem& s);

enum class OrderMode { nested, staircase };

/* Permutation of rows (1-based original indices, in new order) after which
 * the nested chain (mode nested) or |S_i| <= i-1 (mode staircase) holds;
 * nullopt when no ordering works.  Exhaustive search, k <= 12. */
std::optional<std::vector<int>> find_construction_order(const SetSystem& s, OrderMode mode);

SetSystem apply_order(const SetSystem& s, const std::vector<int>& perm);

/* Pads a staircase system into a multiset system over [n+1]:
 * U_i = S_i ⊎ {n+1 repeated k-i times}.  Throws StaircaseViolated unless
 * |S_i| <= i-1 for all i. */
SetSystem pad_staircase(const SetSystem& s);

} // namespace cmds
