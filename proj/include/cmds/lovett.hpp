#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "cmds/multipoly.hpp"
#include "cmds/unipoly.hpp"

namespace cmds {

/* Ordered list of exponent vectors in N^n with an attached parameter k. */
struct VecSet {
    int n = 0;
    int k = 0;
    std::vector<std::vector<int>> vectors;

    int m() const { return static_cast<int>(vectors.size()); }
};

int vec_weight(const std::vector<int>& v);

// coordinatewise minimum over the 1-based indices in I; throws EmptySubset
std::vector<int> coord_min(const VecSet& V, const std::vector<int>& I);

struct VlkResult {
    bool ok = false;
    int failed_clause = 0;          // 1: |v_i| <= k-1, 2: subset sum bound, 3: {0,1} shape
    int witness_index = 0;          // 1-based vector index for clauses 1 and 3
    std::vector<int> witness_subset; // violating I for clause 2
};

/* Property check, clauses in order:
 *   (1) |v_i| <= k-1 for all i
 *   (2) sum_{i in I}(k - |v_i|) + |coord_min(I)| <= k for all nonempty I
 *   (3) the first n-l coordinates of every v_i lie in {0,1}
 * l = n reduces to the plain property (clause 3 vacuous).  Subset
 * enumeration is capped at m <= 20. */
VlkResult check_vlk(const VecSet& V, int k, int l);

// smallest l in 0..n passing check_vlk; nullopt when even l = n fails
std::optional<int> min_level(const VecSet& V, int k);

struct PolyFamily {
    std::vector<SymUniPoly> polys;
    std::vector<std::pair<int, int>> provenance; // (1-based vector index, shift e)
};

/* The family prod_j (x - x_j)^{v(j)} * x^e for each vector v and each
 * e = 0..k-1-|v|, duplicates preserved.  Throws WeightTooLarge when some
 * |v_i| > k-1. */
PolyFamily polynomial_family(const VecSet& V, int k);

struct RankReport {
    int rank = 0;
    int count = 0; // |P|
    bool independent = false;
    // small primes dividing the content of some elimination pivot; rank over
    // a field of such characteristic may differ from the characteristic-0 rank
    std::vector<mpz_class> caveat_primes;
};

// rank of the coefficient matrix over the fraction field of Z[x1..xn]
RankReport independence_rank(const PolyFamily& P, int k);

/* The dependent-but-property-satisfying family: 2b vectors in N^{2b-1},
 * (2b-1)-fold unit vectors plus the all-ones vector; k = 2b.  Requires
 * b >= 2 (throws BTooSmall). */
VecSet counterexample_family(int b);

struct NullCertificate {
    int b = 0;
    std::vector<mpz_class> c;  // 2b integers, gcd 1
    std::vector<MultiPoly> u;  // u(j) = c(j) * e_{2b-j} over x1..x_{2b-1}
    int rank = 0;              // rank of the coefficient matrix M
    bool verified = false;     // M*u == 0, gcd(c) == 1 and rank < 2b
};

/* Explicit integer null vector for the coefficient matrix of the
 * counterexample family: c(j) = lcm(C(2b-1,0..b-1)) / C(2b-1,j-1), mirrored
 * for j > b, and u(j) = c(j) * e_{2b-j}.  The certificate is verified
 * symbolically before being returned. */
NullCertificate null_certificate(int b);

/* {(1..1,3,0,0), (1..1,0,3,0), (1..1,0,0,3), (1..1)} in N^n; requires
 * n >= 3 and k = n+1. */
VecSet padded_family(int n, int k);

/* All nonempty I achieving equality in clause (2); requires the plain
 * property to hold (throws PropertyViolated). */
std::vector<std::vector<int>> tight_sets(const VecSet& V, int k);

struct SweepConfig {
    int k_max = 0;
    int n_max = 0;
    int m_max = 0;
    int entry_cap = -1; // effective cap is min(entry_cap, k-1); -1 means k-1
    int l = 2;
};

struct SweepViolation {
    int k = 0, n = 0;
    std::vector<std::vector<int>> vectors;
    int rank = 0;
    int count = 0;
};

struct SweepReport {
    std::int64_t enumerated = 0;  // candidate vector sets considered
    std::int64_t satisfying = 0;  // of those, how many satisfy the property
    std::vector<SweepViolation> violations;
};

/* Exhaustive check over all vector sets of shape {0,1}^{n-l} x N^l within
 * the given bounds: every set satisfying the level-l property must generate
 * a linearly independent family.  Sets are enumerated up to permutation,
 * graded by (m, total weight); instances fan out across worker threads.
 * Throws BudgetExceeded when the bounds leave desk scale. */
SweepReport independence_sweep(const SweepConfig& cfg);

} // namespace cmds
