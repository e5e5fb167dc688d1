#ifndef VIRLIKE_CATALOG_HPP
#define VIRLIKE_CATALOG_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "virlike/algebra.hpp"

namespace virlike {

/// The seven indecomposable two-cell module families, in the classification's
/// listed order. Internal ids are used because two of the published labels
/// collide; serialized reports carry both.
enum class FamilyId { F1, F2, F3, F4, F5, F6, F7 };

std::string_view family_name(FamilyId id);
std::string_view family_paper_label(FamilyId id);
std::optional<FamilyId> family_from_name(std::string_view name);

/// A family together with its parameters. `a` is read by F1 only.
struct FamilySpec {
    FamilyId id = FamilyId::F1;
    Rational a;
    Rational lambda;
    Rational mu;

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// Names the parameter violating a family side condition ("lambda" or "mu").
struct ValidityIssue {
    std::string parameter;
};

/// F2, F3 require lambda and mu non-integer; F4, F6 require lambda
/// non-integer; F5, F7 require mu non-integer; F1 is unconditional.
std::optional<ValidityIssue> family_validity(const FamilySpec& spec);

/// Throws std::invalid_argument when family_validity reports an issue.
void require_valid(const FamilySpec& spec);

/// Coefficient of v_{m+r, n+s+1} in L_{r,s} v_{m,n}.
Rational coeff_f(const FamilySpec& spec, long r, long s, long m, long n);

/// Coefficient of v_{m+r, n+s} in L_{r,s} v_{m,n}.
Rational coeff_g(const FamilySpec& spec, long r, long s, long m, long n);

/// Finite linear combination of module basis vectors v_{m,n}, canonical form.
class ModVector {
public:
    using Key = std::pair<long, long>;
    using Terms = std::map<Key, Rational>;

    ModVector() = default;
    static ModVector unit(long m, long n);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(long m, long n) const;

    void add_term(long m, long n, const Rational& coeff);
    ModVector& operator+=(const ModVector& o);
    ModVector& operator-=(const ModVector& o);
    friend ModVector operator+(ModVector a, const ModVector& b) { return a += b; }
    friend ModVector operator-(ModVector a, const ModVector& b) { return a -= b; }
    ModVector scaled(const Rational& c) const;

    friend bool operator==(const ModVector&, const ModVector&) = default;

private:
    Terms terms_;
};

/// L_{r,s} acting on v: the two-term action extended linearly.
ModVector act_generator(const FamilySpec& spec, long r, long s, const ModVector& v);

/// Action of a general algebra element; the central term acts as zero.
ModVector act_element(const FamilySpec& spec, const LieElement& x, const ModVector& v);

/// The classical intermediate-series module shapes over a single Virasoro
/// algebra, used as reference actions for the restriction checks.
enum class SeriesKind { Aab, Aprime, Bprime, Ainf, Binf };

struct IntermediateSeriesSpec {
    SeriesKind kind = SeriesKind::Aab;
    Rational a;       // Aab
    Rational b;       // Aab
    Rational aprime;  // Aprime / Bprime
};

/// Coefficient of v_{i+j} in L_i v_j, with the exceptional cases at j = 0
/// (A types) and j = -i (B types).
Rational intermediate_series_coeff(const IntermediateSeriesSpec& spec, long i, long j);

enum class RestrictionDirection { Row, Col };

/// Row: coefficient of the operator P_{i,-1} on the row module at n = fixed,
/// i.e. coeff_f(spec, i, -1, m_or_n, fixed). Col: coefficient of Q_{0,i} on
/// the column module at m = fixed, i.e. coeff_g(spec, 0, i, fixed, m_or_n).
Rational restriction_coeff(const FamilySpec& spec, RestrictionDirection direction, long i,
                           long m_or_n, long fixed);

}  // namespace virlike

#endif
