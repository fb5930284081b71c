#include "cmds/setsystem.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "cmds/error.hpp"

namespace cmds {

std::vector<int> multiset_intersect(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<int> multiset_diff(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<int> multiset_union(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool multiset_contains(const std::vector<int>& outer, const std::vector<int>& inner) {
    return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

bool is_plain_set(const std::vector<int>& s) {
    return std::adjacent_find(s.begin(), s.end()) == s.end();
}

std::vector<std::vector<int>> running_intersections(const SetSystem& s) {
    std::vector<std::vector<int>> out;
    out.reserve(s.k());
    for (int i = 0; i < s.k(); ++i)
        out.push_back(i == 0 ? s.sets[0] : multiset_intersect(out[i - 1], s.sets[i]));
    return out;
}

MdsConditionResult check_mds_condition(const SetSystem& s) {
    const int k = s.k();
    for (int i = 0; i < k; ++i)
        if (!is_plain_set(s.sets[i]))
            throw Error("MultisetNotAllowed", "set " + std::to_string(i + 1) + " has repeated elements");
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
        std::vector<int> inter;
        bool first = true;
        int size = 0;
        for (int i = 0; i < k; ++i) {
            if (!(mask >> i & 1)) continue;
            ++size;
            inter = first ? s.sets[i] : multiset_intersect(inter, s.sets[i]);
            first = false;
        }
        if (size + static_cast<int>(inter.size()) > k) {
            MdsConditionResult res;
            res.ok = false;
            for (int i = 0; i < k; ++i)
                if (mask >> i & 1) res.violating.push_back(i + 1);
            return res;
        }
    }
    return MdsConditionResult{true, {}};
}

NestedChainResult check_nested_chain(const SetSystem& s) {
    NestedChainResult res;
    const int k = s.k();
    std::vector<int> inter;
    for (int i = 0; i < k; ++i) {
        inter = i == 0 ? s.sets[0] : multiset_intersect(inter, s.sets[i]);
        res.sizes.push_back(static_cast<int>(inter.size()));
        if (static_cast<int>(inter.size()) != k - (i + 1)) {
            res.ok = false;
            res.failing_index = i + 1;
            return res;
        }
    }
    res.ok = true;
    return res;
}

namespace {

bool nested_backtrack(const SetSystem& s, const std::vector<int>& candidates, std::vector<bool>& used,
                      std::vector<int>& chosen, const std::vector<int>& inter) {
    const int k = s.k();
    const int pos = static_cast<int>(chosen.size());
    if (pos == k) return true;
    for (int c : candidates) {
        if (used[c]) continue;
        std::vector<int> next = pos == 0 ? s.sets[c] : multiset_intersect(inter, s.sets[c]);
        if (static_cast<int>(next.size()) != k - (pos + 1)) continue;
        used[c] = true;
        chosen.push_back(c);
        if (nested_backtrack(s, candidates, used, chosen, next)) return true;
        chosen.pop_back();
        used[c] = false;
    }
    return false;
}

} // namespace

std::optional<std::vector<int>> find_construction_order(const SetSystem& s, OrderMode mode) {
    const int k = s.k();
    if (k > 12) throw Error("TooLarge", "order search supports at most 12 rows, got " + std::to_string(k));
    if (mode == OrderMode::staircase) {
        std::vector<int> perm(k);
        std::iota(perm.begin(), perm.end(), 0);
        std::stable_sort(perm.begin(), perm.end(),
                         [&](int a, int b) { return s.sets[a].size() < s.sets[b].size(); });
        for (int i = 0; i < k; ++i)
            if (static_cast<int>(s.sets[perm[i]].size()) > i) return std::nullopt;
        for (int& v : perm) ++v;
        return perm;
    }
    // nested: the first row must have size exactly k-1, so try large sets first
    std::vector<int> candidates(k);
    std::iota(candidates.begin(), candidates.end(), 0);
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](int a, int b) { return s.sets[a].size() > s.sets[b].size(); });
    std::vector<bool> used(k, false);
    std::vector<int> chosen;
    if (!nested_backtrack(s, candidates, used, chosen, {})) return std::nullopt;
    for (int& v : chosen) ++v;
    return chosen;
}

SetSystem apply_order(const SetSystem& s, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != s.k())
        throw Error("ShapeInvalid", "permutation length differs from row count");
    SetSystem out;
    out.n = s.n;
    out.sets.reserve(s.k());
    for (int idx : perm) {
        if (idx < 1 || idx > s.k()) throw Error("ShapeInvalid", "permutation index out of range");
        out.sets.push_back(s.sets[idx - 1]);
    }
    return out;
}

SetSystem pad_staircase(const SetSystem& s) {
    const int k = s.k();
    for (int i = 0; i < k; ++i)
        if (static_cast<int>(s.sets[i].size()) > i)
            throw Error("StaircaseViolated", "|S_" + std::to_string(i + 1) + "| = " +
                                                 std::to_string(s.sets[i].size()) + " exceeds " + std::to_string(i));
    SetSystem out;
    out.n = s.n + 1;
    out.sets.reserve(k);
    for (int i = 0; i < k; ++i) {
        std::vector<int> u = s.sets[i];
        u.insert(u.end(), k - (i + 1), s.n + 1); // padding sorts last: elements are <= n
        out.sets.push_back(std::move(u));
    }
    return out;
}

} // namespace cmds
