#include "cmds/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>

#include "cmds/error.hpp"

namespace cmds {

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
    std::uint64_t da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
    std::uint64_t db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

namespace {

void require_same_nvars(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars() != b.nvars())
        throw Error("VarCountMismatch", "operands have " + std::to_string(a.nvars()) + " and " +
                                            std::to_string(b.nvars()) + " variables");
}

/* Packed monomial keys for the multiplication/division hot paths.  Layout
 * (most significant first): 16-bit total degree, then 8 bits per variable
 * with x1 highest.  Integer order on keys equals graded-lex order on
 * exponent vectors, and keys add lane-safely as long as every per-variable
 * product degree stays below 256. */
using u128 = unsigned __int128;

constexpr int kMaxPackedVars = 14;

u128 pack_exponents(const Exponents& e) {
    u128 key = 0;
    std::uint32_t deg = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        deg += e[i];
        key |= static_cast<u128>(e[i] & 0xff) << (8 * (kMaxPackedVars - 1 - i));
    }
    key |= static_cast<u128>(deg) << (8 * kMaxPackedVars);
    return key;
}

Exponents unpack_exponents(u128 key, int nvars) {
    Exponents e(nvars);
    for (int i = 0; i < nvars; ++i) e[i] = static_cast<std::uint32_t>((key >> (8 * (kMaxPackedVars - 1 - i))) & 0xff);
    return e;
}

// largest per-variable exponent, for the lane-overflow precondition
std::vector<std::uint32_t> max_exponents(const MultiPoly& p) {
    std::vector<std::uint32_t> mx(p.nvars(), 0);
    for (const auto& [e, c] : p.terms())
        for (std::size_t i = 0; i < e.size(); ++i) mx[i] = std::max(mx[i], e[i]);
    return mx;
}

bool product_packable(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars() != b.nvars() || a.nvars() > kMaxPackedVars) return false;
    auto ma = max_exponents(a), mb = max_exponents(b);
    std::uint64_t deg_a = 0, deg_b = 0;
    for (std::size_t i = 0; i < ma.size(); ++i) {
        if (ma[i] + mb[i] >= 256) return false;
        deg_a += ma[i];
        deg_b += mb[i];
    }
    return deg_a + deg_b < 65536;
}

struct KeyHash {
    std::size_t operator()(u128 k) const {
        std::uint64_t x = static_cast<std::uint64_t>(k) ^ (static_cast<std::uint64_t>(k >> 64) * 0x9e3779b97f4a7c15ull);
        x ^= x >> 30;
        x *= 0xbf58476d1ce4e5b9ull;
        x ^= x >> 27;
        return static_cast<std::size_t>(x);
    }
};

// open-addressing accumulator keyed by packed monomials
class PackedAccumulator {
public:
    explicit PackedAccumulator(std::size_t expected) {
        rehash(std::min<std::size_t>(std::max<std::size_t>(64, expected * 2), std::size_t(1) << 22));
    }

    void add_product(u128 key, const mpz_class& a, const mpz_class& b) {
        std::size_t i = slot_of(key);
        if (!used_[i]) {
            used_[i] = true;
            keys_[i] = key;
            vals_[i] = a * b;
            if (++count_ * 3 > keys_.size() * 2) grow();
        } else {
            mpz_addmul(vals_[i].get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        }
    }

    void sub_product(u128 key, const mpz_class& a, const mpz_class& b) {
        std::size_t i = slot_of(key);
        if (!used_[i]) {
            used_[i] = true;
            keys_[i] = key;
            vals_[i] = a * b;
            mpz_neg(vals_[i].get_mpz_t(), vals_[i].get_mpz_t());
            if (++count_ * 3 > keys_.size() * 2) grow();
        } else {
            mpz_submul(vals_[i].get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        }
    }

    // nonzero terms sorted by key
    std::vector<std::pair<u128, mpz_class>> take_sorted() {
        std::vector<std::pair<u128, mpz_class>> out;
        out.reserve(count_);
        for (std::size_t i = 0; i < keys_.size(); ++i)
            if (used_[i] && vals_[i] != 0) out.emplace_back(keys_[i], std::move(vals_[i]));
        std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        return out;
    }

private:
    std::size_t slot_of(u128 key) const {
        std::size_t mask = keys_.size() - 1;
        std::size_t i = KeyHash{}(key)&mask;
        while (used_[i] && keys_[i] != key) i = (i + 1) & mask;
        return i;
    }

    void rehash(std::size_t target) {
        std::size_t cap = 64;
        while (cap < target) cap <<= 1;
        keys_.assign(cap, 0);
        vals_.assign(cap, mpz_class());
        used_.assign(cap, false);
    }

    void grow() {
        auto old_keys = std::move(keys_);
        auto old_vals = std::move(vals_);
        auto old_used = std::move(used_);
        rehash(old_keys.size() * 2);
        for (std::size_t i = 0; i < old_keys.size(); ++i) {
            if (!old_used[i]) continue;
            std::size_t j = slot_of(old_keys[i]);
            used_[j] = true;
            keys_[j] = old_keys[i];
            vals_[j] = std::move(old_vals[i]);
        }
    }

    std::vector<u128> keys_;
    std::vector<mpz_class> vals_;
    std::vector<bool> used_;
    std::size_t count_ = 0;
};

std::vector<std::pair<u128, const mpz_class*>> packed_view(const MultiPoly& p) {
    std::vector<std::pair<u128, const mpz_class*>> out;
    out.reserve(p.terms().size());
    for (const auto& [e, c] : p.terms()) out.emplace_back(pack_exponents(e), &c);
    return out;
}

} // namespace

/* a*b - c*d in a single accumulation; the workhorse of fraction-free
 * elimination steps. */
MultiPoly cross_difference(const MultiPoly& a, const MultiPoly& b, const MultiPoly& c, const MultiPoly& d) {
    require_same_nvars(a, b);
    require_same_nvars(c, d);
    require_same_nvars(a, c);
    if (product_packable(a, b) && product_packable(c, d)) {
        MultiPoly r(a.nvars());
        PackedAccumulator acc(a.terms().size() * b.terms().size() + c.terms().size() * d.terms().size());
        auto A = packed_view(a), B = packed_view(b), C = packed_view(c), D = packed_view(d);
        for (const auto& [ka, ca] : A)
            for (const auto& [kb, cb] : B) acc.add_product(ka + kb, *ca, *cb);
        for (const auto& [kc, cc] : C)
            for (const auto& [kd, cd] : D) acc.sub_product(kc + kd, *cc, *cd);
        for (auto& [key, coeff] : acc.take_sorted()) r.add_sorted_term(unpack_exponents(key, a.nvars()), std::move(coeff));
        return r;
    }
    return a * b - c * d;
}

MultiPoly MultiPoly::constant(const mpz_class& c, int nvars) {
    MultiPoly r(nvars);
    if (c != 0) r.terms_.emplace(Exponents(nvars, 0), c);
    return r;
}

MultiPoly MultiPoly::variable(int index, int nvars) {
    if (index < 1 || index > nvars)
        throw Error("VarCountMismatch",
                    "variable x" + std::to_string(index) + " outside 1.." + std::to_string(nvars));
    MultiPoly r(nvars);
    Exponents e(nvars, 0);
    e[index - 1] = 1;
    r.terms_.emplace(std::move(e), 1);
    return r;
}

MultiPoly MultiPoly::monomial(const mpz_class& c, const Exponents& exps) {
    MultiPoly r(static_cast<int>(exps.size()));
    if (c != 0) r.terms_.emplace(exps, c);
    return r;
}

mpz_class MultiPoly::coeff(const Exponents& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    const Exponents& lead = terms_.rbegin()->first;
    return static_cast<int>(std::accumulate(lead.begin(), lead.end(), std::uint64_t{0}));
}

mpz_class MultiPoly::content() const {
    mpz_class g = 0;
    for (const auto& [e, c] : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

MultiPoly MultiPoly::widened(int nvars) const {
    if (nvars < nvars_)
        throw Error("VarCountMismatch", "cannot shrink variable count");
    MultiPoly r(nvars);
    for (const auto& [e, c] : terms_) {
        Exponents w = e;
        w.resize(nvars, 0);
        r.terms_.emplace(std::move(w), c);
    }
    return r;
}

void MultiPoly::add_term(const Exponents& exps, const mpz_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(exps, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void MultiPoly::add_sorted_term(Exponents exps, mpz_class c) {
    if (c == 0) return;
    terms_.emplace_hint(terms_.end(), std::move(exps), std::move(c));
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& rhs) const {
    require_same_nvars(*this, rhs);
    MultiPoly r = *this;
    for (const auto& [e, c] : rhs.terms_) r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& rhs) const {
    require_same_nvars(*this, rhs);
    MultiPoly r = *this;
    for (const auto& [e, c] : rhs.terms_) r.add_term(e, -c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& rhs) const {
    require_same_nvars(*this, rhs);
    MultiPoly r(nvars_);
    if (terms_.empty() || rhs.terms_.empty()) return r;
    if (product_packable(*this, rhs)) {
        PackedAccumulator acc(terms_.size() * rhs.terms_.size());
        auto lhs_packed = packed_view(*this), rhs_packed = packed_view(rhs);
        for (const auto& [ka, ca] : lhs_packed)
            for (const auto& [kb, cb] : rhs_packed) acc.add_product(ka + kb, *ca, *cb);
        for (auto& [key, coeff] : acc.take_sorted())
            r.terms_.emplace_hint(r.terms_.end(), unpack_exponents(key, nvars_), std::move(coeff));
        return r;
    }
    Exponents sum(nvars_, 0);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            for (int i = 0; i < nvars_; ++i) sum[i] = ea[i] + eb[i];
            r.add_term(sum, ca * cb);
        }
    }
    return r;
}

MultiPoly MultiPoly::operator*(const mpz_class& c) const {
    MultiPoly r(nvars_);
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [exps, c] = *it;
        mpz_class a = abs(c);
        if (first) {
            if (c < 0) os << '-';
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool has_vars = std::any_of(exps.begin(), exps.end(), [](std::uint32_t x) { return x != 0; });
        if (a != 1 || !has_vars) {
            os << a.get_str();
            if (has_vars) os << '*';
        }
        bool first_var = true;
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] == 0) continue;
            if (!first_var) os << '*';
            first_var = false;
            os << 'x' << (i + 1);
            if (exps[i] > 1) os << '^' << exps[i];
        }
    }
    return os.str();
}

MultiPoly elementary_symmetric(const std::vector<int>& vars, int t, int nvars) {
    if (t < 0 || t > static_cast<int>(vars.size()))
        throw Error("DegreeOutOfRange", "e_" + std::to_string(t) + " over " + std::to_string(vars.size()) +
                                            " variables");
    // e[j] after processing a prefix of vars holds e_j of that prefix
    std::vector<MultiPoly> e(t + 1, MultiPoly(nvars));
    e[0] = MultiPoly::constant(1, nvars);
    for (std::size_t idx = 0; idx < vars.size(); ++idx) {
        MultiPoly xv = MultiPoly::variable(vars[idx], nvars);
        for (int j = std::min<int>(t, static_cast<int>(idx) + 1); j >= 1; --j) e[j] = e[j] + e[j - 1] * xv;
    }
    return e[t];
}

FieldElem substitute(const MultiPoly& pol, const std::map<int, FieldElem>& assignment, const FieldCtx& ctx) {
    FieldElem acc = ctx.zero();
    for (const auto& [exps, c] : pol.terms()) {
        unsigned long residue = mpz_fdiv_ui(c.get_mpz_t(), static_cast<unsigned long>(ctx.p()));
        FieldElem term = ctx.from_int(static_cast<long long>(residue));
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] == 0) continue;
            auto it = assignment.find(static_cast<int>(i) + 1);
            if (it == assignment.end())
                throw Error("UnboundVariable", "x" + std::to_string(i + 1) + " has no assigned value");
            term = ctx.mul(term, ctx.pow(it->second, exps[i]));
        }
        acc = ctx.add(acc, term);
    }
    return acc;
}

namespace {

// dividend-driven bound: quotient and all cancelled products stay within the
// dividend's monomial lanes
bool dividend_packable(const MultiPoly& a) {
    if (a.nvars() > kMaxPackedVars) return false;
    std::uint64_t deg = 0;
    for (std::uint32_t mx : max_exponents(a)) {
        if (mx >= 256) return false;
        deg += mx;
    }
    return deg < 65536;
}

// nullopt means "lanes might overflow, use the generic path"
std::optional<MultiPoly> exact_div_packed(const MultiPoly& a, const MultiPoly& b) {
    const int nvars = a.nvars();
    std::map<u128, mpz_class> rem;
    for (const auto& [e, c] : a.terms()) rem.emplace_hint(rem.end(), pack_exponents(e), c);
    std::vector<std::pair<u128, mpz_class>> divisor;
    divisor.reserve(b.terms().size());
    for (const auto& [e, c] : b.terms()) divisor.emplace_back(pack_exponents(e), c);
    const u128 lead_key = divisor.back().first;
    const Exponents lead_exp = unpack_exponents(lead_key, nvars);
    const mpz_class& lead_coeff = divisor.back().second;
    const auto b_max = max_exponents(b);
    const std::uint64_t b_max_deg = std::accumulate(b_max.begin(), b_max.end(), std::uint64_t{0});

    std::vector<std::pair<u128, mpz_class>> quot; // discovered in strictly descending key order
    while (!rem.empty()) {
        auto lead = std::prev(rem.end());
        Exponents re = unpack_exponents(lead->first, nvars);
        std::uint64_t q_deg = 0;
        for (int i = 0; i < nvars; ++i) {
            if (re[i] < lead_exp[i]) throw Error("InternalInvariant", "non-exact polynomial division (monomial)");
            std::uint32_t q_lane = re[i] - lead_exp[i];
            q_deg += q_lane;
            if (q_lane + b_max[i] >= 256) return std::nullopt;
        }
        if (q_deg + b_max_deg >= 65536) return std::nullopt;
        mpz_class qc, r;
        mpz_tdiv_qr(qc.get_mpz_t(), r.get_mpz_t(), lead->second.get_mpz_t(), lead_coeff.get_mpz_t());
        if (r != 0) throw Error("InternalInvariant", "non-exact polynomial division (coefficient)");
        const u128 qk = lead->first - lead_key;
        // cancel q * b against the remainder
        for (const auto& [bk, bc] : divisor) {
            u128 key = qk + bk;
            auto it = rem.lower_bound(key);
            if (it != rem.end() && it->first == key) {
                mpz_submul(it->second.get_mpz_t(), qc.get_mpz_t(), bc.get_mpz_t());
                if (it->second == 0) rem.erase(it);
            } else {
                mpz_class v;
                mpz_mul(v.get_mpz_t(), qc.get_mpz_t(), bc.get_mpz_t());
                mpz_neg(v.get_mpz_t(), v.get_mpz_t());
                rem.emplace_hint(it, key, std::move(v));
            }
        }
        quot.emplace_back(qk, std::move(qc));
    }
    MultiPoly out(nvars);
    for (auto it = quot.rbegin(); it != quot.rend(); ++it)
        out.add_sorted_term(unpack_exponents(it->first, nvars), std::move(it->second));
    return out;
}

} // namespace

MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b) {
    require_same_nvars(a, b);
    if (b.is_zero()) throw Error("InternalInvariant", "exact division by zero polynomial");
    if (a.is_zero()) return MultiPoly(a.nvars());
    if (dividend_packable(a)) {
        if (auto q = exact_div_packed(a, b)) return std::move(*q);
    }
    MultiPoly rem = a;
    MultiPoly quot(a.nvars());
    const auto& blead = *b.terms().rbegin();
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms().rbegin();
        Exponents qe(rem.nvars());
        for (std::size_t i = 0; i < qe.size(); ++i) {
            if (rlead.first[i] < blead.first[i])
                throw Error("InternalInvariant", "non-exact polynomial division (monomial)");
            qe[i] = rlead.first[i] - blead.first[i];
        }
        mpz_class qc, r;
        mpz_tdiv_qr(qc.get_mpz_t(), r.get_mpz_t(), rlead.second.get_mpz_t(), blead.second.get_mpz_t());
        if (r != 0) throw Error("InternalInvariant", "non-exact polynomial division (coefficient)");
        MultiPoly m = MultiPoly::monomial(qc, qe);
        quot = quot + m;
        rem = rem - m * b;
    }
    return quot;
}

namespace {

MultiPoly cofactor_det(const std::vector<std::vector<MultiPoly>>& mat, std::vector<int> cols, int row, int nvars) {
    if (cols.empty()) return MultiPoly::constant(1, nvars);
    if (cols.size() == 1) return mat[row][cols[0]];
    MultiPoly acc(nvars);
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (mat[row][cols[j]].is_zero()) continue;
        std::vector<int> sub;
        sub.reserve(cols.size() - 1);
        for (std::size_t t = 0; t < cols.size(); ++t)
            if (t != j) sub.push_back(cols[t]);
        MultiPoly minor = cofactor_det(mat, std::move(sub), row + 1, nvars);
        MultiPoly term = mat[row][cols[j]] * minor;
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

int common_nvars(const std::vector<std::vector<MultiPoly>>& mat) {
    int nvars = 0;
    bool seen = false;
    for (const auto& row : mat)
        for (const auto& p : row) {
            if (!seen) {
                nvars = p.nvars();
                seen = true;
            } else if (p.nvars() != nvars) {
                throw Error("VarCountMismatch", "matrix entries disagree on variable count");
            }
        }
    return nvars;
}

} // namespace

MultiPoly bareiss_det(const std::vector<std::vector<MultiPoly>>& mat) {
    const std::size_t n = mat.size();
    for (const auto& row : mat)
        if (row.size() != n) throw Error("NotSquare", "determinant of a non-square matrix");
    int nvars = common_nvars(mat);
    if (n == 0) return MultiPoly::constant(1, nvars);
    if (n <= 4) {
        std::vector<int> cols(n);
        std::iota(cols.begin(), cols.end(), 0);
        return cofactor_det(mat, std::move(cols), 0, nvars);
    }
    auto m = mat;
    int sign = 1;
    MultiPoly prev = MultiPoly::constant(1, nvars);
    for (std::size_t r = 0; r + 1 < n; ++r) {
        if (m[r][r].is_zero()) {
            std::size_t piv = r + 1;
            while (piv < n && m[piv][r].is_zero()) ++piv;
            if (piv == n) return MultiPoly(nvars); // zero column below the diagonal
            std::swap(m[r], m[piv]);
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < n; ++i) {
            for (std::size_t j = r + 1; j < n; ++j)
                m[i][j] = exact_div(cross_difference(m[r][r], m[i][j], m[i][r], m[r][j]), prev);
            m[i][r] = MultiPoly(nvars);
        }
        prev = m[r][r];
    }
    return sign < 0 ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

RankDetail bareiss_rank_detail(const std::vector<std::vector<MultiPoly>>& mat) {
    RankDetail out;
    if (mat.empty()) return out;
    const std::size_t rows = mat.size(), cols = mat[0].size();
    for (const auto& row : mat)
        if (row.size() != cols) throw Error("NotSquare", "ragged matrix");
    int nvars = common_nvars(mat);
    auto m = mat;
    MultiPoly prev = MultiPoly::constant(1, nvars);
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t piv = r;
        while (piv < rows && m[piv][col].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j)
                m[i][j] = exact_div(cross_difference(m[r][col], m[i][j], m[i][col], m[r][j]), prev);
            m[i][col] = MultiPoly(nvars);
        }
        out.pivot_contents.push_back(m[r][col].content());
        prev = m[r][col];
        ++r;
    }
    out.rank = static_cast<int>(r);
    return out;
}

int bareiss_rank(const std::vector<std::vector<MultiPoly>>& mat) {
    return bareiss_rank_detail(mat).rank;
}

} // namespace cmds
