#include "cmds/unipoly.hpp"

#include <algorithm>

#include "cmds/error.hpp"

namespace cmds {

namespace {

void trim(std::vector<MultiPoly>& coeffs) {
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
}

} // namespace

SymUniPoly SymUniPoly::constant(const MultiPoly& c) {
    SymUniPoly p(c.nvars());
    if (!c.is_zero()) p.coeffs_.push_back(c);
    return p;
}

SymUniPoly SymUniPoly::from_coeffs(std::vector<MultiPoly> coeffs, int nvars) {
    SymUniPoly p(nvars);
    for (const auto& c : coeffs)
        if (c.nvars() != nvars) throw Error("VarCountMismatch", "coefficient variable count mismatch");
    trim(coeffs);
    p.coeffs_ = std::move(coeffs);
    return p;
}

MultiPoly SymUniPoly::coeff(int t) const {
    if (t < 0 || t > degree()) return MultiPoly(nvars_);
    return coeffs_[t];
}

SymUniPoly SymUniPoly::operator+(const SymUniPoly& rhs) const {
    if (nvars_ != rhs.nvars_) throw Error("VarCountMismatch", "adding polynomials over different rings");
    std::vector<MultiPoly> out(std::max(coeffs_.size(), rhs.coeffs_.size()), MultiPoly(nvars_));
    for (std::size_t t = 0; t < out.size(); ++t)
        out[t] = coeff(static_cast<int>(t)) + rhs.coeff(static_cast<int>(t));
    trim(out);
    SymUniPoly p(nvars_);
    p.coeffs_ = std::move(out);
    return p;
}

SymUniPoly SymUniPoly::operator*(const SymUniPoly& rhs) const {
    if (nvars_ != rhs.nvars_) throw Error("VarCountMismatch", "multiplying polynomials over different rings");
    if (is_zero() || rhs.is_zero()) return SymUniPoly(nvars_);
    std::vector<MultiPoly> out(coeffs_.size() + rhs.coeffs_.size() - 1, MultiPoly(nvars_));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] = out[i + j] + coeffs_[i] * rhs.coeffs_[j];
    trim(out);
    SymUniPoly p(nvars_);
    p.coeffs_ = std::move(out);
    return p;
}

SymUniPoly SymUniPoly::operator*(const MultiPoly& c) const {
    SymUniPoly p(nvars_);
    if (c.is_zero()) return p;
    p.coeffs_ = coeffs_;
    for (auto& t : p.coeffs_) t = t * c;
    trim(p.coeffs_);
    return p;
}

SymUniPoly SymUniPoly::shifted(int s) const {
    if (is_zero() || s == 0) {
        SymUniPoly p = *this;
        return p;
    }
    SymUniPoly p(nvars_);
    p.coeffs_.assign(coeffs_.size() + s, MultiPoly(nvars_));
    for (std::size_t t = 0; t < coeffs_.size(); ++t) p.coeffs_[t + s] = coeffs_[t];
    return p;
}

SymUniPoly SymUniPoly::times_linear(int j) const {
    MultiPoly xj = MultiPoly::variable(j, nvars_);
    SymUniPoly shiftedp = shifted(1);
    return shiftedp + (*this * -xj);
}

MultiPoly SymUniPoly::eval_at(const MultiPoly& value) const {
    MultiPoly acc(nvars_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * value + *it;
    return acc;
}

SymUniPoly poly_from_roots(const std::vector<int>& roots, int nvars) {
    SymUniPoly p = SymUniPoly::constant(MultiPoly::constant(1, nvars));
    for (int j : roots) p = p.times_linear(j);
    return p;
}

std::vector<std::vector<MultiPoly>> coefficient_matrix(const std::vector<SymUniPoly>& P, int k) {
    int nvars = 0;
    for (const auto& p : P) nvars = std::max(nvars, p.nvars());
    std::vector<std::vector<MultiPoly>> mat;
    mat.reserve(P.size());
    for (std::size_t i = 0; i < P.size(); ++i) {
        if (P[i].degree() >= k)
            throw Error("DegreeTooHigh", "polynomial " + std::to_string(i + 1) + " has degree " +
                                             std::to_string(P[i].degree()) + " >= " + std::to_string(k));
        std::vector<MultiPoly> row;
        row.reserve(k);
        for (int j = 1; j <= k; ++j) row.push_back(P[i].coeff(k - j).widened(nvars));
        mat.push_back(std::move(row));
    }
    return mat;
}

FieldUniPoly substitute_poly(const SymUniPoly& p, const std::map<int, FieldElem>& assignment, const FieldCtx& ctx) {
    FieldUniPoly r{ctx, {}};
    r.coeffs.reserve(p.degree() + 1);
    for (int t = 0; t <= p.degree(); ++t) r.coeffs.push_back(substitute(p.coeff(t), assignment, ctx));
    while (!r.coeffs.empty() && ctx.is_zero(r.coeffs.back())) r.coeffs.pop_back();
    return r;
}

FieldElem eval_poly(const FieldUniPoly& r, const FieldElem& a) {
    FieldElem acc = r.ctx.zero();
    for (auto it = r.coeffs.rbegin(); it != r.coeffs.rend(); ++it) acc = r.ctx.add(r.ctx.mul(acc, a), *it);
    return acc;
}

} // namespace cmds
