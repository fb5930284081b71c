#pragma once

// Test-only oracles and instance generators.  Everything here is independent
// of the library's elimination code paths: determinants and ranks are
// recomputed with plain rational Gaussian elimination.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "cmds/multipoly.hpp"
#include "cmds/setsystem.hpp"

namespace testsupport {

using QMat = std::vector<std::vector<mpq_class>>;

inline mpq_class det_q(QMat m) {
    const std::size_t n = m.size();
    mpq_class det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m[piv][c] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            std::swap(m[piv], m[c]);
            det = -det;
        }
        det *= m[c][c];
        mpq_class inv = 1 / m[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m[i][c] == 0) continue;
            mpq_class f = m[i][c] * inv;
            for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return det;
}

inline int rank_q(QMat m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        mpq_class inv = 1 / m[r][c];
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            mpq_class f = m[i][c] * inv;
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return static_cast<int>(r);
}

// value of p at integer points (exact, over Q)
inline mpq_class eval_at_integers(const cmds::MultiPoly& p, const std::vector<long>& values) {
    mpq_class acc = 0;
    for (const auto& [exps, coeff] : p.terms()) {
        mpz_class term = coeff;
        for (std::size_t i = 0; i < exps.size(); ++i) {
            mpz_class base = values.at(i);
            for (std::uint32_t t = 0; t < exps[i]; ++t) term *= base;
        }
        acc += term;
    }
    return acc;
}

inline QMat substitute_matrix(const std::vector<std::vector<cmds::MultiPoly>>& mat, const std::vector<long>& values) {
    QMat out;
    for (const auto& row : mat) {
        std::vector<mpq_class> qrow;
        for (const auto& p : row) qrow.push_back(eval_at_integers(p, values));
        out.push_back(std::move(qrow));
    }
    return out;
}

inline std::vector<long> distinct_integers(std::mt19937& rng, int count, long lo = -50, long hi = 50) {
    std::vector<long> all;
    for (long v = lo; v <= hi; ++v) all.push_back(v);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(count);
    return all;
}

inline cmds::MultiPoly random_multipoly(std::mt19937& rng, int nvars, int max_terms = 5, int max_deg = 3,
                                        int coeff_bound = 9) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<int> coeff(-coeff_bound, coeff_bound);
    cmds::MultiPoly p(nvars);
    int terms = nterms(rng);
    for (int t = 0; t < terms; ++t) {
        cmds::Exponents e(nvars, 0);
        for (int i = 0; i < nvars; ++i) e[i] = static_cast<std::uint32_t>(deg(rng));
        p = p + cmds::MultiPoly::monomial(coeff(rng), e);
    }
    return p;
}

// multiset system that admits a witness chain: plant the chain, then pad
inline cmds::SetSystem random_chain_system(std::mt19937& rng, int k_max, int n_max) {
    std::uniform_int_distribution<int> kd(1, k_max), nd(1, n_max);
    int k = kd(rng), n = nd(rng);
    std::uniform_int_distribution<int> elem(1, n);
    std::vector<int> xi;
    for (int i = 0; i < k - 1; ++i) xi.push_back(elem(rng));
    cmds::SetSystem s;
    s.n = n;
    for (int i = 1; i <= k; ++i) {
        std::vector<int> set(xi.begin(), xi.begin() + (k - i)); // T_i
        std::uniform_int_distribution<int> extra_count(0, i - 1);
        int extras = extra_count(rng);
        for (int t = 0; t < extras; ++t) set.push_back(elem(rng));
        std::sort(set.begin(), set.end());
        s.sets.push_back(std::move(set));
    }
    return s;
}

// plain-set system with the exact nested intersection chain and the MDS
// condition (rejection-sampled extras; the extra-free system always works)
inline cmds::SetSystem random_nested_system(std::mt19937& rng, int k, int n);

// staircase system: |S_i| <= i-1
inline cmds::SetSystem random_staircase_system(std::mt19937& rng, int k, int n) {
    cmds::SetSystem s;
    s.n = n;
    std::vector<int> ground(n);
    std::iota(ground.begin(), ground.end(), 1);
    for (int i = 1; i <= k; ++i) {
        std::uniform_int_distribution<int> size_d(0, std::min(i - 1, n));
        int size = size_d(rng);
        std::shuffle(ground.begin(), ground.end(), rng);
        std::vector<int> set(ground.begin(), ground.begin() + size);
        std::sort(set.begin(), set.end());
        s.sets.push_back(std::move(set));
    }
    return s;
}

inline cmds::SetSystem random_nested_system(std::mt19937& rng, int k, int n) {
    std::vector<int> ground(n);
    std::iota(ground.begin(), ground.end(), 1);
    for (int attempt = 0; attempt < 200; ++attempt) {
        std::shuffle(ground.begin(), ground.end(), rng);
        std::vector<int> sigma(ground.begin(), ground.begin() + (k - 1)); // chain elements
        cmds::SetSystem s;
        s.n = n;
        for (int i = 1; i <= k; ++i) {
            std::vector<int> set(sigma.begin(), sigma.begin() + (k - i));
            if (attempt + 1 < 200 && i >= 2) {
                // extras must avoid sigma[k-i], the element dropped from the
                // running intersection at this step
                std::vector<int> allowed;
                for (int v : ground) {
                    if (v == sigma[k - i]) continue;
                    if (std::find(set.begin(), set.end(), v) != set.end()) continue;
                    allowed.push_back(v);
                }
                std::shuffle(allowed.begin(), allowed.end(), rng);
                std::uniform_int_distribution<int> extra_count(
                    0, std::min<int>(i - 1, static_cast<int>(allowed.size())));
                set.insert(set.end(), allowed.begin(), allowed.begin() + extra_count(rng));
            }
            std::sort(set.begin(), set.end());
            s.sets.push_back(std::move(set));
        }
        if (!cmds::check_nested_chain(s).ok) continue;
        if (cmds::check_mds_condition(s).ok) return s;
    }
    // unreachable: the final attempt has no extras and always passes
    return {};
}

} // namespace testsupport
