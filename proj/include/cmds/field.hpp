#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cmds {

/* Element of GF(p^e) in the polynomial basis: coords[i] is the coefficient
 * of t^i, each reduced into [0, p).  Prime fields have a single coordinate. */
struct FieldElem {
    std::vector<std::uint32_t> coords;

    friend bool operator==(const FieldElem&, const FieldElem&) = default;
};

/* Exact arithmetic context for GF(q), q = p^e.  For e > 1 elements are
 * residues modulo a fixed monic irreducible of degree e over GF(p); the
 * modulus is chosen deterministically (smallest coefficient vector read
 * high-to-low, i.e. smallest base-p value), so repeated construction of the
 * same field is bit-identical.  Immutable; safe to share across threads. */
class FieldCtx {
public:
    // Throws NotPrimePower unless q = p^e for a prime p; TooLarge above 2^20.
    static FieldCtx make(std::uint64_t q);

    std::uint64_t p() const { return p_; }
    std::uint32_t e() const { return e_; }
    std::uint64_t q() const { return q_; }

    // Modulus coefficients, low degree first, length e+1; empty when e == 1.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    FieldElem zero() const;
    FieldElem one() const;
    // Natural map Z -> GF(p) into the prime subfield.
    FieldElem from_int(long long v) const;
    // Canonical enumeration: element #i has coords equal to the base-p digits
    // of i (least significant digit = constant coordinate).
    FieldElem element(std::uint64_t index) const;
    std::uint64_t index_of(const FieldElem& a) const;
    // First `count` elements in canonical order; throws TooMany if count > q.
    std::vector<FieldElem> enumerate(std::uint64_t count) const;

    FieldElem add(const FieldElem& a, const FieldElem& b) const;
    FieldElem sub(const FieldElem& a, const FieldElem& b) const;
    FieldElem mul(const FieldElem& a, const FieldElem& b) const;
    // a * b^{-1}; throws DivisionByZero when b == 0.
    FieldElem div(const FieldElem& a, const FieldElem& b) const;
    FieldElem neg(const FieldElem& a) const;
    FieldElem inv(const FieldElem& a) const;
    FieldElem pow(const FieldElem& a, std::uint64_t exp) const;

    bool is_zero(const FieldElem& a) const;
    // Rejects elements with wrong coordinate count or out-of-range residues.
    bool valid(const FieldElem& a) const;

    // "3" for prime fields, "(1;2)" coordinate form for extensions.
    std::string str(const FieldElem& a) const;

    friend bool operator==(const FieldCtx&, const FieldCtx&) = default;

private:
    std::uint64_t p_ = 0;
    std::uint32_t e_ = 0;
    std::uint64_t q_ = 0;
    std::vector<std::uint32_t> modulus_;
};

// Accepts "q=7" or plain "7"; throws on anything else.
FieldCtx parse_field_spec(const std::string& spec);

} // namespace cmds
