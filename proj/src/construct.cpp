#include "cmds/construct.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <string>
#include <thread>

#include "cmds/error.hpp"
#include "cmds/threads.hpp"

namespace cmds {

std::vector<int> WitnessChain::T(int i, int k) const {
    std::vector<int> t(xi.begin(), xi.begin() + (k - i));
    std::sort(t.begin(), t.end());
    return t;
}

std::optional<WitnessChain> find_witness_chain(const SetSystem& s) {
    const int k = s.k();
    WitnessChain w;
    if (k <= 1) return w;
    auto inters = running_intersections(s);
    std::vector<int> current; // T_{i+1}, sorted
    for (int i = k - 1; i >= 1; --i) {
        const std::vector<int>& avail = inters[i - 1];
        // smallest c whose multiplicity in T is still below its multiplicity here
        int pick = 0;
        for (int c : avail) {
            auto in_t = std::count(current.begin(), current.end(), c);
            auto in_avail = std::count(avail.begin(), avail.end(), c);
            if (in_t < in_avail) {
                pick = c;
                break;
            }
        }
        if (pick == 0) return std::nullopt;
        w.xi.push_back(pick);
        current.insert(std::upper_bound(current.begin(), current.end(), pick), pick);
    }
    return w;
}

MultiPoly triangular_det(const SetSystem& s, const WitnessChain& w) {
    const int k = s.k();
    if (static_cast<int>(w.xi.size()) != std::max(k - 1, 0))
        throw Error("InvalidWitness", "chain length " + std::to_string(w.xi.size()) + " for k = " +
                                          std::to_string(k));
    for (int i = 0; i < k; ++i)
        if (static_cast<int>(s.sets[i].size()) > k - 1)
            throw Error("DegreeTooHigh", "|S_" + std::to_string(i + 1) + "| exceeds k-1");
    auto inters = running_intersections(s);
    for (int i = 1; i <= k; ++i)
        if (!multiset_contains(inters[i - 1], w.T(i, k)))
            throw Error("InvalidWitness", "T_" + std::to_string(i) + " is not contained in the running intersection");
    const int nvars = s.n;
    MultiPoly det = MultiPoly::constant(1, nvars);
    for (int i = 2; i <= k; ++i) {
        MultiPoly pivot = MultiPoly::variable(w.xi[k - i], nvars); // xi_{k-i+1}
        for (int j : multiset_diff(s.sets[i - 1], w.T(i, k)))
            det = det * (pivot - MultiPoly::variable(j, nvars));
    }
    return det;
}

MultiPoly factor_det(int xi, const std::vector<int>& S, int k, int nvars) {
    if (static_cast<int>(S.size()) > k - 1) throw Error("DegreeTooHigh", "|S| exceeds k-1");
    if (nvars == 0) {
        nvars = xi;
        for (int j : S) nvars = std::max(nvars, j);
    }
    std::vector<SymUniPoly> Q;
    Q.reserve(k);
    SymUniPoly linear = poly_from_roots({xi}, nvars);
    for (int t = k - 2; t >= 0; --t) Q.push_back(linear.shifted(t));
    Q.push_back(poly_from_roots(S, nvars));
    return bareiss_det(coefficient_matrix(Q, k));
}

namespace {

std::vector<FieldElem> resolve_points(const FieldCtx& ctx, const std::optional<std::vector<FieldElem>>& points,
                                      std::size_t count) {
    if (!points) return ctx.enumerate(count);
    if (points->size() != count)
        throw Error("ShapeInvalid",
                    "expected " + std::to_string(count) + " evaluation points, got " + std::to_string(points->size()));
    for (const auto& a : *points)
        if (!ctx.valid(a)) throw Error("ShapeInvalid", "evaluation point is not an element of the field");
    for (std::size_t i = 0; i < points->size(); ++i)
        for (std::size_t j = i + 1; j < points->size(); ++j)
            if ((*points)[i] == (*points)[j])
                throw Error("DuplicatePoints", "points " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                                   " coincide");
    return *points;
}

FieldMatrix evaluate_rows(const SetSystem& rows_of, const FieldCtx& ctx, const std::vector<FieldElem>& pts, int n) {
    // rows_of may live over a larger ground set than [n]; extra points only
    // enter through the substitution, not as matrix columns
    std::map<int, FieldElem> assignment;
    for (std::size_t i = 0; i < pts.size(); ++i) assignment.emplace(static_cast<int>(i) + 1, pts[i]);
    FieldMatrix A;
    A.ctx = ctx;
    A.k = rows_of.k();
    A.n = n;
    A.entries.assign(static_cast<std::size_t>(A.k) * n, ctx.zero());
    for (int i = 0; i < A.k; ++i) {
        SymUniPoly p = poly_from_roots(rows_of.sets[i], rows_of.n);
        FieldUniPoly r = substitute_poly(p, assignment, ctx);
        for (int j = 0; j < n; ++j) A.at(i, j) = eval_poly(r, pts[j]);
    }
    return A;
}

} // namespace

FieldMatrix construct_nested(const SetSystem& s, const FieldCtx& ctx,
                             const std::optional<std::vector<FieldElem>>& points) {
    auto mds = check_mds_condition(s);
    if (!mds.ok) {
        std::string which;
        for (int i : mds.violating) which += (which.empty() ? "" : ",") + std::to_string(i);
        throw Error("HypothesisViolated", "MDS condition fails for I = {" + which + "}");
    }
    auto chain = check_nested_chain(s);
    if (!chain.ok)
        throw Error("HypothesisViolated",
                    "nested intersection chain fails at i = " + std::to_string(chain.failing_index));
    if (ctx.q() < static_cast<std::uint64_t>(s.n))
        throw Error("FieldTooSmall", "q = " + std::to_string(ctx.q()) + " < n = " + std::to_string(s.n));
    auto pts = resolve_points(ctx, points, s.n);
    return evaluate_rows(s, ctx, pts, s.n);
}

FieldMatrix construct_staircase(const SetSystem& s, const FieldCtx& ctx,
                                const std::optional<std::vector<FieldElem>>& points) {
    for (int i = 0; i < s.k(); ++i)
        if (!is_plain_set(s.sets[i]))
            throw Error("MultisetNotAllowed", "set " + std::to_string(i + 1) + " has repeated elements");
    if (ctx.q() < static_cast<std::uint64_t>(s.n) + 1)
        throw Error("FieldTooSmall", "q = " + std::to_string(ctx.q()) + " < n+1 = " + std::to_string(s.n + 1));
    SetSystem padded = pad_staircase(s); // throws StaircaseViolated when |S_i| > i-1
    auto pts = resolve_points(ctx, points, static_cast<std::size_t>(s.n) + 1);
    return evaluate_rows(padded, ctx, pts, s.n);
}

namespace {

// lexicographically next k-combination of [0..n); false when exhausted
bool next_combination(std::vector<int>& c, int n) {
    const int k = static_cast<int>(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[i] < n - k + i) {
            ++c[i];
            for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::uint64_t binomial_u64(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
    return r;
}

// combination with lexicographic rank `rank` among k-subsets of [0..n)
std::vector<int> unrank_combination(int n, int k, std::uint64_t rank) {
    std::vector<int> c;
    c.reserve(k);
    int v = 0;
    for (int i = 0; i < k; ++i) {
        while (true) {
            std::uint64_t block = binomial_u64(n - 1 - v, k - 1 - i);
            if (rank < block) break;
            rank -= block;
            ++v;
        }
        c.push_back(v++);
    }
    return c;
}

bool minor_is_singular(const FieldMatrix& A, const std::vector<int>& cols) {
    const int k = A.k;
    const FieldCtx& F = A.ctx;
    std::vector<FieldElem> m;
    m.reserve(static_cast<std::size_t>(k) * k);
    for (int i = 0; i < k; ++i)
        for (int j : cols) m.push_back(A.at(i, j));
    auto at = [&](int i, int j) -> FieldElem& { return m[static_cast<std::size_t>(i) * k + j]; };
    for (int c = 0; c < k; ++c) {
        int piv = c;
        while (piv < k && F.is_zero(at(piv, c))) ++piv;
        if (piv == k) return true;
        if (piv != c)
            for (int j = c; j < k; ++j) std::swap(at(c, j), at(piv, j));
        FieldElem inv = F.inv(at(c, c));
        for (int i = c + 1; i < k; ++i) {
            if (F.is_zero(at(i, c))) continue;
            FieldElem f = F.mul(at(i, c), inv);
            for (int j = c; j < k; ++j) at(i, j) = F.sub(at(i, j), F.mul(f, at(c, j)));
        }
    }
    return false;
}

} // namespace

MdsVerifyResult verify_mds(const FieldMatrix& A) {
    if (A.k > A.n)
        throw Error("ShapeInvalid", "k = " + std::to_string(A.k) + " exceeds n = " + std::to_string(A.n));
    if (A.n > 40) throw Error("TooLarge", "minor enumeration supports n <= 40");
    const std::uint64_t total = binomial_u64(A.n, A.k);
    const int workers = worker_count(static_cast<std::int64_t>(total));
    std::atomic<std::uint64_t> first_bad{total};

    auto scan = [&](std::uint64_t begin, std::uint64_t end) {
        if (begin >= end) return;
        std::vector<int> cols = unrank_combination(A.n, A.k, begin);
        for (std::uint64_t idx = begin; idx < end; ++idx) {
            if (idx >= first_bad.load(std::memory_order_relaxed)) return;
            if (minor_is_singular(A, cols)) {
                std::uint64_t cur = first_bad.load();
                while (idx < cur && !first_bad.compare_exchange_weak(cur, idx)) {
                }
                return;
            }
            next_combination(cols, A.n);
        }
    };

    if (workers <= 1) {
        scan(0, total);
    } else {
        std::vector<std::thread> pool;
        std::uint64_t chunk = (total + workers - 1) / workers;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back(scan, w * chunk, std::min<std::uint64_t>(total, (w + 1) * chunk));
        for (auto& t : pool) t.join();
    }

    MdsVerifyResult res;
    std::uint64_t bad = first_bad.load();
    if (bad == total) {
        res.ok = true;
        return res;
    }
    res.ok = false;
    for (int c : unrank_combination(A.n, A.k, bad)) res.singular_columns.push_back(c + 1);
    return res;
}

SetSystem zero_pattern(const FieldMatrix& A) {
    SetSystem s;
    s.n = A.n;
    s.sets.resize(A.k);
    for (int i = 0; i < A.k; ++i)
        for (int j = 0; j < A.n; ++j)
            if (A.ctx.is_zero(A.at(i, j))) s.sets[i].push_back(j + 1);
    return s;
}

} // namespace cmds
