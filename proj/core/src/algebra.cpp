#include "virlike/algebra.hpp"

#include <stdexcept>

namespace virlike {

LieElement LieElement::generator(long alpha, long beta) {
    LieElement e;
    e.add_term(GenIndex::basis(alpha, beta), Rational(1));
    return e;
}

LieElement LieElement::central(const Rational& coeff) {
    LieElement e;
    e.add_term(GenIndex::c(), coeff);
    return e;
}

Rational LieElement::coeff(const GenIndex& idx) const {
    auto it = terms_.find(idx);
    return it == terms_.end() ? Rational(0) : it->second;
}

void LieElement::add_term(const GenIndex& idx, const Rational& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.emplace(idx, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LieElement& LieElement::operator+=(const LieElement& o) {
    for (const auto& [idx, c] : o.terms_) add_term(idx, c);
    return *this;
}

LieElement& LieElement::operator-=(const LieElement& o) {
    for (const auto& [idx, c] : o.terms_) add_term(idx, -c);
    return *this;
}

LieElement LieElement::scaled(const Rational& c) const {
    LieElement out;
    if (c.is_zero()) return out;
    for (const auto& [idx, v] : terms_) out.terms_.emplace(idx, v * c);
    return out;
}

Rational central_cocycle(long a1, long b1, long a2, long b2) {
    if (a1 + a2 != 0) return Rational(0);
    const mpz_class A(a1), B(b1);
    mpz_class num;
    switch (b1 + b2) {
        case -3: num = A * A * A; break;
        case -2: num = 3 * (B + 1) * A * A; break;
        case -1: num = 3 * B * (B + 1) * A; break;
        case 0: num = B * (B * B - 1); break;
        default: return Rational(0);
    }
    return Rational(num, mpz_class(12));
}

LieElement bracket_basis(long a1, long b1, long a2, long b2) {
    LieElement out;
    out.add_term(GenIndex::basis(a1 + a2, b1 + b2 + 1), Rational(a2 - a1));
    out.add_term(GenIndex::basis(a1 + a2, b1 + b2), Rational(b2 - b1));
    out.add_term(GenIndex::c(), central_cocycle(a1, b1, a2, b2));
    return out;
}

LieElement bracket(const LieElement& x, const LieElement& y) {
    LieElement out;
    for (const auto& [ix, cx] : x.terms()) {
        if (ix.central) continue;
        for (const auto& [iy, cy] : y.terms()) {
            if (iy.central) continue;
            const Rational scale = cx * cy;
            const LieElement term = bracket_basis(ix.alpha, ix.beta, iy.alpha, iy.beta);
            for (const auto& [idx, c] : term.terms()) out.add_term(idx, c * scale);
        }
    }
    return out;
}

LieElement jacobi_defect(const LieElement& x, const LieElement& y, const LieElement& z) {
    LieElement out = bracket(x, bracket(y, z));
    out += bracket(y, bracket(z, x));
    out += bracket(z, bracket(x, y));
    return out;
}

LieElement element_combine(std::span<const Rational> coeffs, std::span<const LieElement> elems) {
    if (coeffs.size() != elems.size())
        throw std::invalid_argument("element_combine: coefficient/element count mismatch");
    LieElement out;
    for (std::size_t i = 0; i < coeffs.size(); ++i) out += elems[i].scaled(coeffs[i]);
    return out;
}

}  // namespace virlike
