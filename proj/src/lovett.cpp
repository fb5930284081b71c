#include "cmds/lovett.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <string>
#include <thread>

#include "cmds/error.hpp"
#include "cmds/threads.hpp"

namespace cmds {

int vec_weight(const std::vector<int>& v) {
    return std::accumulate(v.begin(), v.end(), 0);
}

std::vector<int> coord_min(const VecSet& V, const std::vector<int>& I) {
    if (I.empty()) throw Error("EmptySubset", "coordinate minimum over an empty subset");
    std::vector<int> mu(V.n, 0);
    bool first = true;
    for (int idx : I) {
        const auto& v = V.vectors.at(idx - 1);
        for (int j = 0; j < V.n; ++j) mu[j] = first ? v[j] : std::min(mu[j], v[j]);
        first = false;
    }
    return mu;
}

VlkResult check_vlk(const VecSet& V, int k, int l) {
    if (l < 0 || l > V.n)
        throw Error("ShapeInvalid", "level " + std::to_string(l) + " outside 0.." + std::to_string(V.n));
    const int m = V.m();
    if (m > 20) throw Error("TooLarge", "subset enumeration supports at most 20 vectors");
    VlkResult res;
    for (int i = 0; i < m; ++i) {
        if (vec_weight(V.vectors[i]) > k - 1) {
            res.failed_clause = 1;
            res.witness_index = i + 1;
            return res;
        }
    }
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
        int sum = 0;
        std::vector<int> mu(V.n, 0);
        bool first = true;
        for (int i = 0; i < m; ++i) {
            if (!(mask >> i & 1)) continue;
            sum += k - vec_weight(V.vectors[i]);
            for (int j = 0; j < V.n; ++j) mu[j] = first ? V.vectors[i][j] : std::min(mu[j], V.vectors[i][j]);
            first = false;
        }
        if (sum + vec_weight(mu) > k) {
            res.failed_clause = 2;
            for (int i = 0; i < m; ++i)
                if (mask >> i & 1) res.witness_subset.push_back(i + 1);
            return res;
        }
    }
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < V.n - l; ++j) {
            if (V.vectors[i][j] > 1) {
                res.failed_clause = 3;
                res.witness_index = i + 1;
                return res;
            }
        }
    }
    res.ok = true;
    return res;
}

std::optional<int> min_level(const VecSet& V, int k) {
    if (!check_vlk(V, k, V.n).ok) return std::nullopt;
    for (int l = 0; l <= V.n; ++l)
        if (check_vlk(V, k, l).ok) return l;
    return std::nullopt; // unreachable: l = n passed above
}

PolyFamily polynomial_family(const VecSet& V, int k) {
    PolyFamily fam;
    for (int i = 0; i < V.m(); ++i) {
        const auto& v = V.vectors[i];
        int w = vec_weight(v);
        if (w > k - 1)
            throw Error("WeightTooLarge", "|v_" + std::to_string(i + 1) + "| = " + std::to_string(w) +
                                              " exceeds k-1 = " + std::to_string(k - 1));
        std::vector<int> roots;
        for (int j = 0; j < V.n; ++j) roots.insert(roots.end(), v[j], j + 1);
        SymUniPoly base = poly_from_roots(roots, V.n);
        for (int e = 0; e <= k - 1 - w; ++e) {
            fam.polys.push_back(base.shifted(e));
            fam.provenance.emplace_back(i + 1, e);
        }
    }
    return fam;
}

namespace {

std::vector<mpz_class> prime_factors(mpz_class v) {
    std::vector<mpz_class> out;
    if (v < 0) v = -v;
    if (v <= 1) return out;
    for (mpz_class d = 2; d <= 1000000 && d * d <= v; d += (d == 2 ? 1 : 2)) {
        if (mpz_divisible_p(v.get_mpz_t(), d.get_mpz_t())) {
            out.push_back(d);
            while (mpz_divisible_p(v.get_mpz_t(), d.get_mpz_t())) v /= d;
        }
    }
    if (v > 1) out.push_back(v); // prime (or a large cofactor worth flagging)
    return out;
}

} // namespace

RankReport independence_rank(const PolyFamily& P, int k) {
    RankReport rep;
    rep.count = static_cast<int>(P.polys.size());
    if (rep.count == 0) {
        rep.independent = true;
        return rep;
    }
    auto detail = bareiss_rank_detail(coefficient_matrix(P.polys, k));
    rep.rank = detail.rank;
    rep.independent = detail.rank == rep.count;
    std::vector<mpz_class> primes;
    for (const auto& content : detail.pivot_contents)
        for (const auto& p : prime_factors(content)) primes.push_back(p);
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    rep.caveat_primes = std::move(primes);
    return rep;
}

VecSet counterexample_family(int b) {
    if (b < 2) throw Error("BTooSmall", "family requires b >= 2, got " + std::to_string(b));
    VecSet V;
    V.n = 2 * b - 1;
    V.k = 2 * b;
    for (int i = 0; i < V.n; ++i) {
        std::vector<int> v(V.n, 0);
        v[i] = V.n;
        V.vectors.push_back(std::move(v));
    }
    V.vectors.emplace_back(V.n, 1);
    return V;
}

NullCertificate null_certificate(int b) {
    if (b < 2) throw Error("BTooSmall", "certificate requires b >= 2, got " + std::to_string(b));
    NullCertificate cert;
    cert.b = b;
    const int n = 2 * b - 1, k = 2 * b;

    mpz_class L = 1;
    for (int j = 0; j < b; ++j) {
        mpz_class binom;
        mpz_bin_uiui(binom.get_mpz_t(), n, j);
        mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), binom.get_mpz_t());
    }
    cert.c.resize(k);
    for (int j = 1; j <= b; ++j) {
        mpz_class binom;
        mpz_bin_uiui(binom.get_mpz_t(), n, j - 1);
        cert.c[j - 1] = L / binom;
    }
    for (int j = b + 1; j <= k; ++j) cert.c[j - 1] = cert.c[k - j]; // c(j) = c(2b+1-j)

    std::vector<int> vars(n);
    std::iota(vars.begin(), vars.end(), 1);
    cert.u.reserve(k);
    for (int j = 1; j <= k; ++j) cert.u.push_back(elementary_symmetric(vars, k - j, n) * cert.c[j - 1]);

    auto M = coefficient_matrix(polynomial_family(counterexample_family(b), k).polys, k);
    bool annihilates = true;
    for (int i = 0; i < k && annihilates; ++i) {
        MultiPoly acc(n);
        for (int j = 0; j < k; ++j) acc = acc + M[i][j] * cert.u[j];
        annihilates = acc.is_zero();
    }
    cert.rank = bareiss_rank(M);

    mpz_class g = 0;
    for (const auto& cj : cert.c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), cj.get_mpz_t());
    cert.verified = annihilates && g == 1 && cert.rank < k;
    return cert;
}

VecSet padded_family(int n, int k) {
    if (n < 3 || k != n + 1)
        throw Error("ShapeInvalid", "family requires n >= 3 and k = n+1");
    VecSet V;
    V.n = n;
    V.k = k;
    for (int slot = 0; slot < 3; ++slot) {
        std::vector<int> v(n, 0);
        std::fill(v.begin(), v.begin() + (n - 3), 1);
        v[n - 3 + slot] = 3;
        V.vectors.push_back(std::move(v));
    }
    V.vectors.emplace_back(n, 1);
    return V;
}

std::vector<std::vector<int>> tight_sets(const VecSet& V, int k) {
    if (!check_vlk(V, k, V.n).ok)
        throw Error("PropertyViolated", "vector set does not satisfy the plain property");
    const int m = V.m();
    std::vector<std::vector<int>> out;
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
        int sum = 0;
        std::vector<int> mu(V.n, 0);
        bool first = true;
        std::vector<int> subset;
        for (int i = 0; i < m; ++i) {
            if (!(mask >> i & 1)) continue;
            subset.push_back(i + 1);
            sum += k - vec_weight(V.vectors[i]);
            for (int j = 0; j < V.n; ++j) mu[j] = first ? V.vectors[i][j] : std::min(mu[j], V.vectors[i][j]);
            first = false;
        }
        if (sum + vec_weight(mu) == k) out.push_back(std::move(subset));
    }
    return out;
}

namespace {

// all vectors of the given shape, entries <= cap, ordered by (weight, lex)
std::vector<std::vector<int>> sweep_pool(int n, int l, int cap) {
    std::vector<std::vector<int>> pool;
    std::vector<int> v(n, 0);
    const int binary_prefix = std::max(0, n - l);
    while (true) {
        pool.push_back(v);
        int pos = n - 1;
        while (pos >= 0) {
            int limit = pos < binary_prefix ? std::min(1, cap) : cap;
            if (v[pos] < limit) {
                ++v[pos];
                std::fill(v.begin() + pos + 1, v.end(), 0);
                break;
            }
            --pos;
        }
        if (pos < 0) break;
    }
    std::stable_sort(pool.begin(), pool.end(), [](const auto& a, const auto& b) {
        int wa = vec_weight(a), wb = vec_weight(b);
        if (wa != wb) return wa < wb;
        return a < b;
    });
    return pool;
}

// m-combinations of pool indices whose weights sum to `target`; weights are
// sorted ascending and psum holds their prefix sums
void combos_with_weight(const std::vector<int>& weights, const std::vector<long long>& psum, int m, int target,
                        int start, std::vector<int>& cur, int cur_sum, std::vector<std::vector<int>>& out) {
    const int size = static_cast<int>(weights.size());
    const int need = m - static_cast<int>(cur.size());
    if (need == 0) {
        if (cur_sum == target) out.push_back(cur);
        return;
    }
    if (cur_sum + (psum[size] - psum[size - need]) < target) return; // even the heaviest completion falls short
    for (int i = start; i + need <= size; ++i) {
        if (cur_sum + (psum[i + need] - psum[i]) > target) break; // lightest completion already too heavy
        cur.push_back(i);
        combos_with_weight(weights, psum, m, target, i + 1, cur, cur_sum + weights[i], out);
        cur.pop_back();
    }
}

} // namespace

SweepReport independence_sweep(const SweepConfig& cfg) {
    if (cfg.k_max < 1 || cfg.n_max < 1 || cfg.m_max < 1)
        throw Error("ShapeInvalid", "sweep bounds must be positive");
    if (cfg.k_max > 6 || cfg.n_max > 6 || cfg.m_max > 6 || cfg.entry_cap > 8 || cfg.l < 0)
        throw Error("BudgetExceeded", "sweep bounds exceed desk scale (k,n,m <= 6, cap <= 8)");

    // pre-flight instance count
    long double projected = 0;
    for (int k = 1; k <= cfg.k_max; ++k)
        for (int n = 1; n <= cfg.n_max; ++n) {
            int cap = cfg.entry_cap < 0 ? k - 1 : std::min(cfg.entry_cap, k - 1);
            int binary_prefix = std::max(0, n - cfg.l);
            long double pool_size = 1;
            for (int j = 0; j < n; ++j)
                pool_size *= (j < binary_prefix ? std::min(1, cap) : cap) + 1;
            for (int m = 1; m <= cfg.m_max; ++m) {
                long double combos = 1;
                for (int t = 0; t < m; ++t) combos = combos * (pool_size - t) / (t + 1);
                if (combos > 0) projected += combos;
            }
        }
    if (projected > 5e7) throw Error("BudgetExceeded", "sweep would enumerate more than 5e7 vector sets");

    SweepReport report;
    for (int k = 1; k <= cfg.k_max; ++k) {
        for (int n = 1; n <= cfg.n_max; ++n) {
            const int cap = cfg.entry_cap < 0 ? k - 1 : std::min(cfg.entry_cap, k - 1);
            const int l = std::min(cfg.l, n);
            auto pool = sweep_pool(n, l, cap);
            std::vector<int> weights;
            weights.reserve(pool.size());
            for (const auto& v : pool) weights.push_back(vec_weight(v));
            const int size = static_cast<int>(pool.size());
            std::vector<long long> psum(size + 1, 0);
            for (int i = 0; i < size; ++i) psum[i + 1] = psum[i] + weights[i];
            for (int m = 1; m <= std::min(cfg.m_max, size); ++m) {
                long long wmin = psum[m], wmax = psum[size] - psum[size - m];
                for (long long w = wmin; w <= wmax; ++w) {
                    std::vector<std::vector<int>> batch;
                    std::vector<int> cur;
                    combos_with_weight(weights, psum, m, static_cast<int>(w), 0, cur, 0, batch);
                    if (batch.empty()) continue;
                    report.enumerated += static_cast<std::int64_t>(batch.size());

                    const int workers = worker_count(static_cast<std::int64_t>(batch.size()));
                    std::vector<signed char> verdict(batch.size(), 0); // 0 skip, 1 ok, 2 violation
                    std::vector<int> ranks(batch.size(), 0), counts(batch.size(), 0);
                    auto process = [&](std::size_t begin, std::size_t end) {
                        for (std::size_t idx = begin; idx < end; ++idx) {
                            VecSet V;
                            V.n = n;
                            V.k = k;
                            for (int pi : batch[idx]) V.vectors.push_back(pool[pi]);
                            if (!check_vlk(V, k, l).ok) continue;
                            auto rep = independence_rank(polynomial_family(V, k), k);
                            ranks[idx] = rep.rank;
                            counts[idx] = rep.count;
                            verdict[idx] = rep.independent ? 1 : 2;
                        }
                    };
                    if (workers <= 1) {
                        process(0, batch.size());
                    } else {
                        std::vector<std::thread> ts;
                        std::size_t chunk = (batch.size() + workers - 1) / workers;
                        for (int t = 0; t < workers; ++t)
                            ts.emplace_back(process, t * chunk, std::min(batch.size(), (t + 1) * chunk));
                        for (auto& t : ts) t.join();
                    }
                    for (std::size_t idx = 0; idx < batch.size(); ++idx) {
                        if (verdict[idx] == 0) continue;
                        ++report.satisfying;
                        if (verdict[idx] == 2) {
                            SweepViolation v;
                            v.k = k;
                            v.n = n;
                            for (int pi : batch[idx]) v.vectors.push_back(pool[pi]);
                            v.rank = ranks[idx];
                            v.count = counts[idx];
                            report.violations.push_back(std::move(v));
                        }
                    }
                }
            }
        }
    }
    return report;
}

} // namespace cmds
