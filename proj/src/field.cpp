#include "cmds/field.hpp"

#include <algorithm>
#include <sstream>

#include "cmds/error.hpp"

namespace cmds {

namespace {

constexpr std::uint64_t kMaxOrder = 1u << 20;

using Poly = std::vector<std::uint32_t>; // coefficients mod p, low degree first

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t(a[i]) * b[j]) % p);
    }
    trim(r);
    return r;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
    // extended Euclid on integers; p prime, a != 0 mod p
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a % p);
    while (new_r != 0) {
        std::int64_t quot = r / new_r;
        std::swap(t -= quot * new_t, new_t);
        std::swap(r -= quot * new_r, new_r);
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

// a mod m over GF(p); m monic
Poly poly_mod(Poly a, const Poly& m, std::uint64_t p) {
    trim(a);
    if (m.empty()) return a;
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
        std::uint64_t lead = a.back();
        std::size_t shift = a.size() - 1 - dm;
        if (lead != 0) {
            for (std::size_t i = 0; i <= dm; ++i) {
                std::uint64_t sub = lead * m[i] % p;
                std::uint64_t cur = a[shift + i];
                a[shift + i] = static_cast<std::uint32_t>((cur + p - sub) % p);
            }
        }
        a.pop_back();
        trim(a);
        if (a.size() <= dm) break;
    }
    trim(a);
    return a;
}

// quotient/remainder of a by b (b nonzero) over GF(p)
void poly_divmod(Poly a, const Poly& b, std::uint64_t p, Poly& q, Poly& r) {
    trim(a);
    q.assign(a.size() > b.size() ? a.size() - b.size() + 1 : 1, 0);
    std::uint64_t lead_inv = mod_inverse(b.back(), p);
    while (a.size() >= b.size() && !a.empty()) {
        std::uint64_t c = a.back() * lead_inv % p;
        std::size_t shift = a.size() - b.size();
        q[shift] = static_cast<std::uint32_t>(c);
        for (std::size_t i = 0; i < b.size(); ++i) {
            std::uint64_t sub = c * b[i] % p;
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
        }
        trim(a);
    }
    trim(q);
    r = a;
}

bool poly_is_irreducible(const Poly& f, std::uint64_t p) {
    // trial division by every monic polynomial of degree 1 .. deg(f)/2
    const std::size_t deg = f.size() - 1;
    for (std::size_t d = 1; 2 * d <= deg; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t v = 0; v < count; ++v) {
            Poly g(d + 1, 0);
            std::uint64_t t = v;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<std::uint32_t>(t % p);
                t /= p;
            }
            g[d] = 1;
            Poly q, r;
            poly_divmod(f, g, p, q, r);
            if (r.empty()) return false;
        }
    }
    return true;
}

Poly smallest_irreducible(std::uint64_t p, std::uint32_t e) {
    // scan non-leading coefficient vectors in base-p counter order; this is
    // lexicographic order on the descending coefficient list
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < e; ++i) count *= p;
    for (std::uint64_t v = 0; v < count; ++v) {
        Poly f(e + 1, 0);
        std::uint64_t t = v;
        for (std::uint32_t i = 0; i < e; ++i) {
            f[i] = static_cast<std::uint32_t>(t % p);
            t /= p;
        }
        f[e] = 1;
        if (poly_is_irreducible(f, p)) return f;
    }
    throw Error("InternalInvariant", "no irreducible polynomial found"); // unreachable
}

} // namespace

FieldCtx FieldCtx::make(std::uint64_t q) {
    if (q < 2) throw Error("NotPrimePower", "field order must be at least 2, got " + std::to_string(q));
    if (q > kMaxOrder) throw Error("TooLarge", "field order exceeds 2^20 cap: " + std::to_string(q));
    std::uint64_t p = 0;
    for (std::uint64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) p = q; // q itself prime
    std::uint32_t e = 0;
    std::uint64_t rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++e;
    }
    if (rest != 1)
        throw Error("NotPrimePower", std::to_string(q) + " is not a prime power");
    FieldCtx ctx;
    ctx.p_ = p;
    ctx.e_ = e;
    ctx.q_ = q;
    if (e > 1) ctx.modulus_ = smallest_irreducible(p, e);
    return ctx;
}

FieldElem FieldCtx::zero() const {
    return FieldElem{std::vector<std::uint32_t>(e_, 0)};
}

FieldElem FieldCtx::one() const {
    FieldElem a = zero();
    a.coords[0] = 1;
    return a;
}

FieldElem FieldCtx::from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += static_cast<long long>(p_);
    FieldElem a = zero();
    a.coords[0] = static_cast<std::uint32_t>(r);
    return a;
}

FieldElem FieldCtx::element(std::uint64_t index) const {
    if (index >= q_) throw Error("TooMany", "element index out of range: " + std::to_string(index));
    FieldElem a = zero();
    for (std::uint32_t i = 0; i < e_; ++i) {
        a.coords[i] = static_cast<std::uint32_t>(index % p_);
        index /= p_;
    }
    return a;
}

std::uint64_t FieldCtx::index_of(const FieldElem& a) const {
    std::uint64_t idx = 0;
    for (std::uint32_t i = e_; i-- > 0;) idx = idx * p_ + a.coords[i];
    return idx;
}

std::vector<FieldElem> FieldCtx::enumerate(std::uint64_t count) const {
    if (count > q_)
        throw Error("TooMany", "requested " + std::to_string(count) + " elements from a field of order " +
                                   std::to_string(q_));
    std::vector<FieldElem> out;
    out.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) out.push_back(element(i));
    return out;
}

bool FieldCtx::valid(const FieldElem& a) const {
    if (a.coords.size() != e_) return false;
    return std::all_of(a.coords.begin(), a.coords.end(), [&](std::uint32_t c) { return c < p_; });
}

bool FieldCtx::is_zero(const FieldElem& a) const {
    return std::all_of(a.coords.begin(), a.coords.end(), [](std::uint32_t c) { return c == 0; });
}

FieldElem FieldCtx::add(const FieldElem& a, const FieldElem& b) const {
    FieldElem r = zero();
    for (std::uint32_t i = 0; i < e_; ++i)
        r.coords[i] = static_cast<std::uint32_t>((std::uint64_t(a.coords[i]) + b.coords[i]) % p_);
    return r;
}

FieldElem FieldCtx::sub(const FieldElem& a, const FieldElem& b) const {
    FieldElem r = zero();
    for (std::uint32_t i = 0; i < e_; ++i)
        r.coords[i] = static_cast<std::uint32_t>((std::uint64_t(a.coords[i]) + p_ - b.coords[i]) % p_);
    return r;
}

FieldElem FieldCtx::neg(const FieldElem& a) const {
    return sub(zero(), a);
}

FieldElem FieldCtx::mul(const FieldElem& a, const FieldElem& b) const {
    if (e_ == 1) {
        FieldElem r = zero();
        r.coords[0] = static_cast<std::uint32_t>(std::uint64_t(a.coords[0]) * b.coords[0] % p_);
        return r;
    }
    Poly prod = poly_mul(Poly(a.coords.begin(), a.coords.end()), Poly(b.coords.begin(), b.coords.end()), p_);
    Poly red = poly_mod(std::move(prod), modulus_, p_);
    FieldElem r = zero();
    for (std::size_t i = 0; i < red.size(); ++i) r.coords[i] = red[i];
    return r;
}

FieldElem FieldCtx::inv(const FieldElem& a) const {
    if (is_zero(a)) throw Error("DivisionByZero", "inverse of zero");
    if (e_ == 1) {
        FieldElem r = zero();
        r.coords[0] = static_cast<std::uint32_t>(mod_inverse(a.coords[0], p_));
        return r;
    }
    // polynomial extended Euclid: find u with u*a == 1 (mod modulus)
    Poly r0 = modulus_, r1(a.coords.begin(), a.coords.end());
    trim(r1);
    Poly t0 = {}, t1 = {1};
    while (!r1.empty()) {
        Poly q, rem;
        poly_divmod(r0, r1, p_, q, rem);
        Poly t2_sub = poly_mul(q, t1, p_);
        // t2 = t0 - q*t1
        Poly t2(std::max(t0.size(), t2_sub.size()), 0);
        for (std::size_t i = 0; i < t2.size(); ++i) {
            std::uint64_t a0 = i < t0.size() ? t0[i] : 0;
            std::uint64_t b0 = i < t2_sub.size() ? t2_sub[i] : 0;
            t2[i] = static_cast<std::uint32_t>((a0 + p_ - b0) % p_);
        }
        trim(t2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    // r0 is the gcd, a nonzero constant since the modulus is irreducible
    std::uint64_t scale = mod_inverse(r0[0], p_);
    FieldElem out = zero();
    for (std::size_t i = 0; i < t0.size() && i < e_; ++i)
        out.coords[i] = static_cast<std::uint32_t>(t0[i] * scale % p_);
    return out;
}

FieldElem FieldCtx::div(const FieldElem& a, const FieldElem& b) const {
    return mul(a, inv(b));
}

FieldElem FieldCtx::pow(const FieldElem& a, std::uint64_t exp) const {
    FieldElem base = a, acc = one();
    while (exp) {
        if (exp & 1) acc = mul(acc, base);
        base = mul(base, base);
        exp >>= 1;
    }
    return acc;
}

std::string FieldCtx::str(const FieldElem& a) const {
    if (e_ == 1) return std::to_string(a.coords[0]);
    std::ostringstream os;
    os << '(';
    for (std::uint32_t i = 0; i < e_; ++i) {
        if (i) os << ';';
        os << a.coords[i];
    }
    os << ')';
    return os.str();
}

FieldCtx parse_field_spec(const std::string& spec) {
    std::string body = spec;
    if (body.rfind("q=", 0) == 0) body = body.substr(2);
    if (body.empty() || body.find_first_not_of("0123456789") != std::string::npos)
        throw Error("NotPrimePower", "cannot parse field spec '" + spec + "'");
    std::uint64_t q = 0;
    try {
        q = std::stoull(body);
    } catch (...) {
        throw Error("NotPrimePower", "cannot parse field spec '" + spec + "'");
    }
    return FieldCtx::make(q);
}

} // namespace cmds
