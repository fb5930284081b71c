#pragma once

#include <optional>
#include <vector>

#include "cmds/field.hpp"
#include "cmds/multipoly.hpp"
#include "cmds/setsystem.hpp"
#include "cmds/unipoly.hpp"

namespace cmds {

/* Dense k x n matrix over GF(q), row-major. */
struct FieldMatrix {
    FieldCtx ctx;
    int k = 0, n = 0;
    std::vector<FieldElem> entries;

    FieldElem& at(int i, int j) { return entries[static_cast<std::size_t>(i) * n + j]; }
    const FieldElem& at(int i, int j) const { return entries[static_cast<std::size_t>(i) * n + j]; }
};

/* Witness chain xi_1..xi_{k-1}; T_i = {xi_1..xi_{k-i}} must be contained in
 * S_1 ∩ .. ∩ S_i as a multiset for every i. */
struct WitnessChain {
    std::vector<int> xi;

    // T_i as a sorted multiset (1-based i; T_k is empty)
    std::vector<int> T(int i, int k) const;
};

/* Greedy chain construction: working from the innermost intersection out,
 * extend T_{i+1} by the smallest admissible element of S_1 ∩ .. ∩ S_i.
 * Returns nullopt when the running intersections are too small. */
std::optional<WitnessChain> find_witness_chain(const SetSystem& s);

/* Closed-form determinant of the coefficient matrix of {p(S_1)..p(S_k)}:
 *   prod_{i=2..k} prod_{j in S_i \ T_i} (x_{xi_{k-i+1}} - x_j),
 * returned expanded.  Throws InvalidWitness if the chain does not fit S. */
MultiPoly triangular_det(const SetSystem& s, const WitnessChain& w);

/* det C(Q) for Q = { x^{k-2}(x - x_xi), ..., x(x - x_xi), (x - x_xi), p(S) },
 * computed by elimination; equals prod_{i in S} (x_xi - x_i). */
MultiPoly factor_det(int xi, const std::vector<int>& S, int k, int nvars = 0);

/* Row polynomials r_i = prod_{λ in S_i} (x - a_λ) evaluated at a_1..a_n.
 * Requires the MDS condition, the nested intersection chain, q >= n and n
 * distinct points (nullopt points = canonical field enumeration).  The
 * output is MDS with zero pattern exactly S. */
FieldMatrix construct_nested(const SetSystem& s, const FieldCtx& ctx,
                             const std::optional<std::vector<FieldElem>>& points = std::nullopt);

/* Staircase construction: pads S into multisets over [n+1] and uses
 * r_i = (x - a_{n+1})^{k-i} prod_{λ in S_i} (x - a_λ).  Requires
 * |S_i| <= i-1, q >= n+1 and n+1 distinct points. */
FieldMatrix construct_staircase(const SetSystem& s, const FieldCtx& ctx,
                                const std::optional<std::vector<FieldElem>>& points = std::nullopt);

struct MdsVerifyResult {
    bool ok = false;
    std::vector<int> singular_columns; // first singular k-subset, 1-based, lex order
};

/* Checks every k x k minor over GF(q), enumerating column subsets in
 * lexicographic order; stops at the first singular one.  May fan out across
 * worker threads (CMDS_THREADS); the reported subset is the lexicographic
 * first regardless of thread count. */
MdsVerifyResult verify_mds(const FieldMatrix& A);

// S_i = { j : A[i][j] == 0 }
SetSystem zero_pattern(const FieldMatrix& A);

} // namespace cmds
