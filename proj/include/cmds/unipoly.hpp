#pragma once

#include <map>
#include <vector>

#include "cmds/field.hpp"
#include "cmds/multipoly.hpp"

namespace cmds {

/* Univariate polynomial in x whose coefficients are MultiPoly values.
 * coeff(t) is the coefficient of x^t; the zero polynomial has no stored
 * coefficients and degree -1.  The leading stored coefficient is nonzero. */
class SymUniPoly {
public:
    SymUniPoly() = default;
    explicit SymUniPoly(int nvars) : nvars_(nvars) {}

    static SymUniPoly constant(const MultiPoly& c);
    // coefficient list, index t = coefficient of x^t (trailing zeros trimmed)
    static SymUniPoly from_coeffs(std::vector<MultiPoly> coeffs, int nvars);

    int nvars() const { return nvars_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    MultiPoly coeff(int t) const;

    SymUniPoly operator+(const SymUniPoly& rhs) const;
    SymUniPoly operator*(const SymUniPoly& rhs) const;
    SymUniPoly operator*(const MultiPoly& c) const;
    // multiply by x^s
    SymUniPoly shifted(int s) const;
    // multiply by (x - x_j)
    SymUniPoly times_linear(int j) const;
    friend bool operator==(const SymUniPoly&, const SymUniPoly&) = default;

    // symbolic evaluation at x = value (a MultiPoly)
    MultiPoly eval_at(const MultiPoly& value) const;

private:
    int nvars_ = 0;
    std::vector<MultiPoly> coeffs_;
};

/* Univariate polynomial over a concrete finite field. */
struct FieldUniPoly {
    FieldCtx ctx;
    std::vector<FieldElem> coeffs; // index t = coefficient of x^t, trimmed

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

// prod_{j in roots} (x - x_j), expanded; repeated roots multiply as repeated
// factors
SymUniPoly poly_from_roots(const std::vector<int>& roots, int nvars);

// Coefficient matrix: row i, column j (1-based) holds the coefficient of
// x^{k-j} in P[i]; column 1 is the x^{k-1} coefficient.  Throws DegreeTooHigh
// when some polynomial has degree >= k.
std::vector<std::vector<MultiPoly>> coefficient_matrix(const std::vector<SymUniPoly>& P, int k);

// coefficientwise substitution into GF(q)
FieldUniPoly substitute_poly(const SymUniPoly& p, const std::map<int, FieldElem>& assignment, const FieldCtx& ctx);

// Horner evaluation
FieldElem eval_poly(const FieldUniPoly& r, const FieldElem& a);

} // namespace cmds
