#ifndef VIRLIKE_ALGEBRA_HPP
#define VIRLIKE_ALGEBRA_HPP

#include <map>
#include <span>
#include <tuple>
#include <vector>

#include "virlike/rational.hpp"

namespace virlike {

/// Index of a basis symbol: either L_{alpha,beta} with (alpha,beta) in ZxZ,
/// or the central element c. The canonical ordering is lexicographic in
/// (alpha, beta) with the central symbol last.
struct GenIndex {
    long alpha = 0;
    long beta = 0;
    bool central = false;

    static GenIndex basis(long a, long b) { return {a, b, false}; }
    static GenIndex c() { return {0, 0, true}; }

    friend bool operator==(const GenIndex&, const GenIndex&) = default;
    friend bool operator<(const GenIndex& a, const GenIndex& b) {
        return std::tuple(a.central, a.alpha, a.beta) < std::tuple(b.central, b.alpha, b.beta);
    }
};

/// Finite linear combination of basis symbols in canonical form: terms are
/// kept sorted and no zero coefficient is ever stored. Equality is equality
/// of term maps.
class LieElement {
public:
    using Terms = std::map<GenIndex, Rational>;

    LieElement() = default;

    static LieElement generator(long alpha, long beta);
    static LieElement central(const Rational& coeff = Rational(1));

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Coefficient of the given symbol (zero when absent).
    Rational coeff(const GenIndex& idx) const;

    /// Adds coeff * idx, dropping the term if the sum cancels.
    void add_term(const GenIndex& idx, const Rational& coeff);

    LieElement& operator+=(const LieElement& o);
    LieElement& operator-=(const LieElement& o);
    friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
    friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }

    LieElement scaled(const Rational& c) const;

    friend bool operator==(const LieElement&, const LieElement&) = default;

private:
    Terms terms_;
};

/// Coefficient of c in [L_{a1,b1}, L_{a2,b2}]: nonzero only when a1+a2 = 0
/// and b1+b2 is one of -3, -2, -1, 0.
Rational central_cocycle(long a1, long b1, long a2, long b2);

/// [L_{a1,b1}, L_{a2,b2}] = (a2-a1) L_{a1+a2,b1+b2+1} + (b2-b1) L_{a1+a2,b1+b2}
/// + central_cocycle(a1,b1,a2,b2) c.
LieElement bracket_basis(long a1, long b1, long a2, long b2);

/// Bilinear extension of bracket_basis; [x, c] = [c, x] = 0.
LieElement bracket(const LieElement& x, const LieElement& y);

/// [x,[y,z]] + [y,[z,x]] + [z,[x,y]]; the zero element for a Lie algebra.
LieElement jacobi_defect(const LieElement& x, const LieElement& y, const LieElement& z);

/// Canonical-form linear combination; throws std::invalid_argument when the
/// list lengths differ.
LieElement element_combine(std::span<const Rational> coeffs, std::span<const LieElement> elems);

}  // namespace virlike

#endif
