#include "virlike/catalog.hpp"

#include <stdexcept>

namespace virlike {

std::string_view family_name(FamilyId id) {
    switch (id) {
        case FamilyId::F1: return "F1";
        case FamilyId::F2: return "F2";
        case FamilyId::F3: return "F3";
        case FamilyId::F4: return "F4";
        case FamilyId::F5: return "F5";
        case FamilyId::F6: return "F6";
        case FamilyId::F7: return "F7";
    }
    return "?";
}

std::string_view family_paper_label(FamilyId id) {
    switch (id) {
        case FamilyId::F1: return "A_{a,\\lambda,\\mu}";
        case FamilyId::F2: return "A_{0,\\lambda,\\mu}";
        case FamilyId::F3: return "A_{1,\\lambda,\\mu}";
        case FamilyId::F4: return "A_{1,0,\\lambda,\\mu}";
        case FamilyId::F5: return "B_{1,0,\\lambda,\\mu}";
        case FamilyId::F6: return "A_{0,1,\\lambda,\\mu}";
        case FamilyId::F7: return "B_{0,1,\\lambda,\\mu}";
    }
    return "?";
}

std::optional<FamilyId> family_from_name(std::string_view name) {
    for (const FamilyId id : {FamilyId::F1, FamilyId::F2, FamilyId::F3, FamilyId::F4, FamilyId::F5,
                              FamilyId::F6, FamilyId::F7})
        if (family_name(id) == name) return id;
    return std::nullopt;
}

std::optional<ValidityIssue> family_validity(const FamilySpec& spec) {
    const bool need_lambda = spec.id == FamilyId::F2 || spec.id == FamilyId::F3 ||
                             spec.id == FamilyId::F4 || spec.id == FamilyId::F6;
    const bool need_mu = spec.id == FamilyId::F2 || spec.id == FamilyId::F3 ||
                         spec.id == FamilyId::F5 || spec.id == FamilyId::F7;
    if (need_lambda && spec.lambda.is_integer()) return ValidityIssue{"lambda"};
    if (need_mu && spec.mu.is_integer()) return ValidityIssue{"mu"};
    return std::nullopt;
}

void require_valid(const FamilySpec& spec) {
    if (const auto issue = family_validity(spec))
        throw std::invalid_argument(std::string(family_name(spec.id)) + ": IntegerParameter(" +
                                    issue->parameter + ")");
}

Rational coeff_f(const FamilySpec& spec, long r, long s, long m, long n) {
    const Rational L = spec.lambda + Rational(m);
    const Rational M = spec.mu + Rational(n);
    switch (spec.id) {
        case FamilyId::F1: return spec.a * Rational(r) + L;
        case FamilyId::F2: return M * L / (M + Rational(s + 1));
        case FamilyId::F3: return (M + Rational(s + 1)) * (Rational(r) + L) / M;
        case FamilyId::F4: return Rational(r) + L;
        case FamilyId::F5: return M * (Rational(r) + L) / (M + Rational(s + 1));
        case FamilyId::F6: return L;
        case FamilyId::F7: return (M + Rational(s + 1)) * L / M;
    }
    throw std::logic_error("unreachable family id");
}

Rational coeff_g(const FamilySpec& spec, long r, long s, long m, long n) {
    const Rational L = spec.lambda + Rational(m);
    const Rational M = spec.mu + Rational(n);
    switch (spec.id) {
        case FamilyId::F1: return spec.a * Rational(s) + M;
        case FamilyId::F2: return L * M / (L + Rational(r));
        case FamilyId::F3: return (L + Rational(r)) * (Rational(s) + M) / L;
        case FamilyId::F4: return (L + Rational(r)) * M / L;
        case FamilyId::F5: return M;
        case FamilyId::F6: return L * (Rational(s) + M) / (L + Rational(r));
        case FamilyId::F7: return Rational(s) + M;
    }
    throw std::logic_error("unreachable family id");
}

ModVector ModVector::unit(long m, long n) {
    ModVector v;
    v.add_term(m, n, Rational(1));
    return v;
}

Rational ModVector::coeff(long m, long n) const {
    auto it = terms_.find({m, n});
    return it == terms_.end() ? Rational(0) : it->second;
}

void ModVector::add_term(long m, long n, const Rational& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.emplace(Key{m, n}, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ModVector& ModVector::operator+=(const ModVector& o) {
    for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, c);
    return *this;
}

ModVector& ModVector::operator-=(const ModVector& o) {
    for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, -c);
    return *this;
}

ModVector ModVector::scaled(const Rational& c) const {
    ModVector out;
    if (c.is_zero()) return out;
    for (const auto& [key, v] : terms_) out.terms_.emplace(key, v * c);
    return out;
}

ModVector act_generator(const FamilySpec& spec, long r, long s, const ModVector& v) {
    require_valid(spec);
    ModVector out;
    for (const auto& [key, c] : v.terms()) {
        const auto [m, n] = key;
        out.add_term(m + r, n + s + 1, c * coeff_f(spec, r, s, m, n));
        out.add_term(m + r, n + s, c * coeff_g(spec, r, s, m, n));
    }
    return out;
}

ModVector act_element(const FamilySpec& spec, const LieElement& x, const ModVector& v) {
    ModVector out;
    for (const auto& [idx, c] : x.terms()) {
        if (idx.central) continue;  // c acts trivially
        out += act_generator(spec, idx.alpha, idx.beta, v).scaled(c);
    }
    return out;
}

Rational intermediate_series_coeff(const IntermediateSeriesSpec& spec, long i, long j) {
    switch (spec.kind) {
        case SeriesKind::Aab:
            return spec.a + spec.b * Rational(i) + Rational(j);
        case SeriesKind::Aprime:
            if (j != 0) return Rational(i + j);
            return Rational(i) * (Rational(1) + Rational(i + 1) * spec.aprime);
        case SeriesKind::Bprime:
            if (j != -i) return Rational(j);
            return Rational(-i) * (Rational(1) + Rational(i + 1) * spec.aprime);
        case SeriesKind::Ainf:
            if (j != 0) return Rational(i + j);
            return Rational(i) * Rational(i + 1);
        case SeriesKind::Binf:
            if (j != -i) return Rational(j);
            return Rational(-i) * Rational(i + 1);
    }
    throw std::logic_error("unreachable series kind");
}

Rational restriction_coeff(const FamilySpec& spec, RestrictionDirection direction, long i,
                           long m_or_n, long fixed) {
    require_valid(spec);
    if (direction == RestrictionDirection::Row) return coeff_f(spec, i, -1, m_or_n, fixed);
    return coeff_g(spec, 0, i, fixed, m_or_n);
}

}  // namespace virlike
