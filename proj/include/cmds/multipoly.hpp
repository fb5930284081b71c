#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cmds/field.hpp"

namespace cmds {

// exponent vector, one entry per variable
using Exponents = std::vector<std::uint32_t>;

// graded lexicographic order with x1 > x2 > ...; the map's largest key is
// the leading monomial
struct GrlexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

/* Sparse multivariate polynomial over arbitrary-precision integers in
 * variables x1..xN.  No zero coefficients are stored and terms are kept in
 * graded-lex order, so equality is a plain data comparison.  Immutable in
 * spirit: all operations return new values. */
class MultiPoly {
public:
    using TermMap = std::map<Exponents, mpz_class, GrlexLess>;

    MultiPoly() = default; // zero polynomial in 0 variables
    explicit MultiPoly(int nvars) : nvars_(nvars) {}

    static MultiPoly constant(const mpz_class& c, int nvars);
    static MultiPoly variable(int index, int nvars); // 1-based index
    static MultiPoly monomial(const mpz_class& c, const Exponents& exps);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    mpz_class coeff(const Exponents& exps) const;
    int total_degree() const; // -1 for the zero polynomial
    // gcd of all coefficients (nonnegative; 0 for the zero polynomial)
    mpz_class content() const;

    // Same terms, larger ambient variable count.
    MultiPoly widened(int nvars) const;

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& rhs) const;
    MultiPoly operator-(const MultiPoly& rhs) const;
    MultiPoly operator*(const MultiPoly& rhs) const;
    MultiPoly operator*(const mpz_class& c) const;
    friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

    // Terms in descending graded-lex order, e.g. "x1^2*x3 - 2*x2".
    std::string str() const;

    void add_term(const Exponents& exps, const mpz_class& c); // used by builders
    // append a term whose monomial exceeds everything stored; used by the
    // sorted fast paths
    void add_sorted_term(Exponents exps, mpz_class c);

private:
    int nvars_ = 0;
    TermMap terms_;
};

// e_t over a variable multiset; repeated indices act as repeated factors.
// Throws DegreeOutOfRange unless 0 <= t <= |vars|.
MultiPoly elementary_symmetric(const std::vector<int>& vars, int t, int nvars);

// Exact evaluation in GF(q); integer coefficients are reduced through
// Z -> GF(p).  The assignment maps 1-based variable indices to elements and
// must cover every variable that occurs (throws UnboundVariable otherwise).
FieldElem substitute(const MultiPoly& pol, const std::map<int, FieldElem>& assignment, const FieldCtx& ctx);

// Exact quotient a / b; throws InternalInvariant when b does not divide a.
MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b);

// a*b - c*d without materializing the intermediate products.
MultiPoly cross_difference(const MultiPoly& a, const MultiPoly& b, const MultiPoly& c, const MultiPoly& d);

// Determinant by fraction-free elimination (cofactor expansion for
// dimension <= 4).  Throws NotSquare on non-square input.
MultiPoly bareiss_det(const std::vector<std::vector<MultiPoly>>& mat);

struct RankDetail {
    int rank = 0;
    // the pivot polynomials' integer contents, in elimination order
    std::vector<mpz_class> pivot_contents;
};

// Rank over the fraction field of Z[x1..xN]; pivots are the first nonzero
// entry scanning down each column.
RankDetail bareiss_rank_detail(const std::vector<std::vector<MultiPoly>>& mat);
int bareiss_rank(const std::vector<std::vector<MultiPoly>>& mat);

} // namespace cmds
