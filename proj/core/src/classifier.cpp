#include "virlike/classifier.hpp"

#include <algorithm>
#include <stdexcept>

namespace virlike {

namespace {

const std::vector<FamilyId>& all_families() {
    static const std::vector<FamilyId> ids{FamilyId::F1, FamilyId::F2, FamilyId::F3, FamilyId::F4,
                                           FamilyId::F5, FamilyId::F6, FamilyId::F7};
    return ids;
}

/// FDIFF/GDIFF entries for every present table entry the candidate fails to
/// reproduce.
ResidualReport compare_against(const ActionTable& t, const FamilySpec& candidate) {
    const Window& w = t.window();
    ResidualReport diffs;
    for (long r = w.r.lo; r <= w.r.hi; ++r)
        for (long s = w.s.lo; s <= w.s.hi; ++s)
            for (long m = w.m.lo; m <= w.m.hi; ++m)
                for (long n = w.n.lo; n <= w.n.hi; ++n) {
                    if (t.has_f(r, s, m, n)) {
                        const Rational d = t.f(r, s, m, n) - coeff_f(candidate, r, s, m, n);
                        if (!d.is_zero())
                            diffs.entries.push_back({EquationId::FDiff, 0, 0, r, s, m, n, d.str()});
                    }
                    if (t.has_g(r, s, m, n)) {
                        const Rational d = t.g(r, s, m, n) - coeff_g(candidate, r, s, m, n);
                        if (!d.is_zero())
                            diffs.entries.push_back({EquationId::GDiff, 0, 0, r, s, m, n, d.str()});
                    }
                }
    diffs.sort_entries();
    return diffs;
}

}  // namespace

ClassifyResult fit_family(const ActionTable& t) {
    if (!t.has_f(0, -1, 0, 0) || !t.has_g(0, 0, 0, 0))
        throw std::invalid_argument("fit_family: normalization anchors f(0,-1,0,0), g(0,0,0,0) required");
    const Rational lambda = t.f(0, -1, 0, 0);
    const Rational mu = t.g(0, 0, 0, 0);

    ClassifyResult result;
    for (const FamilyId id : all_families()) {
        FamilySpec candidate{id, Rational(0), lambda, mu};
        if (id == FamilyId::F1) {
            if (!t.has_f(1, 0, 0, 0) || !t.has_g(0, 1, 0, 0)) {
                result.diagnostics.push_back(
                    {id, "slope anchors f(1,0,0,0), g(0,1,0,0) absent, cannot recover a",
                     ResidualReport{}});
                continue;
            }
            candidate.a = t.f(1, 0, 0, 0) - lambda;
            if (t.g(0, 1, 0, 0) != candidate.a + mu) {
                result.diagnostics.push_back(
                    {id, "slope cross-check failed: g(0,1,0,0) != a + mu", ResidualReport{}});
                continue;
            }
        }
        if (const auto issue = family_validity(candidate)) {
            result.diagnostics.push_back(
                {id, "IntegerParameter(" + issue->parameter + ")", ResidualReport{}});
            continue;
        }
        ResidualReport diffs = compare_against(t, candidate);
        if (diffs.pass()) {
            result.matches.push_back(candidate);
        } else {
            result.diagnostics.push_back({id, "mismatch", std::move(diffs)});
        }
    }
    return result;
}

const Rational& TransferFactors::at(long r, long m) const {
    auto it = k.find({r, m});
    if (it == k.end()) throw std::out_of_range("transfer factor outside range");
    return it->second;
}

TransferFactors derive_transfer_factors(const ActionTable& t) {
    const Window& w = t.window();
    if (!w.s.contains(-1))
        throw IncompleteTable("derive_transfer_factors: table window must include s = -1");
    TransferFactors out;
    out.r_range = w.r;
    out.m_range = w.m;
    for (long m = w.m.lo; m <= w.m.hi; ++m) {
        long n0 = 0;
        bool found = false;
        for (long n = w.n.lo; n <= w.n.hi && !found; ++n) {
            if (!t.g(0, -1, m, n).is_zero()) {
                n0 = n;
                found = true;
            }
        }
        if (!found)
            throw std::runtime_error("derive_transfer_factors: g(0,-1,m,n) vanishes for all n at m=" +
                                     std::to_string(m));
        for (long r = w.r.lo; r <= w.r.hi; ++r) {
            const Rational k = t.g(r, -1, m, n0) / t.g(0, -1, m, n0);
            for (long n = w.n.lo; n <= w.n.hi; ++n) {
                const Rational& den = t.g(0, -1, m, n);
                if (den.is_zero()) continue;
                if (t.g(r, -1, m, n) != k * den)
                    throw std::runtime_error("derive_transfer_factors: ratio depends on n at (r=" +
                                             std::to_string(r) + ",m=" + std::to_string(m) + ")");
            }
            out.k.emplace(std::make_pair(r, m), k);
        }
    }
    return out;
}

ResidualReport transfer_cocycle_check(const TransferFactors& k) {
    ResidualReport report;
    for (long r = k.r_range.lo; r <= k.r_range.hi; ++r) {
        for (long m = k.m_range.lo; m <= k.m_range.hi; ++m) {
            if (k.defined(-r, m + r)) {
                const Rational res = k.at(r, m) * k.at(-r, m + r) - Rational(1);
                if (!res.is_zero())
                    report.entries.push_back({EquationId::K510, 0, 0, r, 0, m, 0, res.str()});
            }
            for (long h = k.r_range.lo; h <= k.r_range.hi; ++h) {
                if (!k.defined(h + r, m)) continue;
                if (k.defined(h, m + r)) {
                    const Rational res = k.at(h, m + r) * k.at(r, m) - k.at(h + r, m);
                    if (!res.is_zero())
                        report.entries.push_back({EquationId::K511, h, 0, r, 0, m, 0, res.str()});
                }
                if (k.defined(r, m + h)) {
                    const Rational res = k.at(r, m + h) * k.at(h, m) - k.at(h + r, m);
                    if (!res.is_zero())
                        report.entries.push_back({EquationId::K511, h, 1, r, 0, m, 0, res.str()});
                }
            }
        }
    }
    report.sort_entries();
    return report;
}

std::string_view deformation_name(DeformationId id) {
    return id == DeformationId::APrime ? "D_APRIME" : "D_APRIME_B";
}

std::optional<DeformationId> deformation_from_name(std::string_view name) {
    if (name == "D_APRIME") return DeformationId::APrime;
    if (name == "D_APRIME_B") return DeformationId::APrimeB;
    return std::nullopt;
}

ActionTable deformation_table(const DeformationSpec& d, const Window& w) {
    if (d.lambda.is_integer())
        throw std::invalid_argument("deformation_table: lambda must not be an integer");
    if (!d.mu.is_zero())
        throw std::invalid_argument("deformation_table: built-in deformations pin mu = 0");
    ActionTable t(w, d.lambda, Rational(0));
    const Rational& lam = d.lambda;
    const Rational& tt = d.t;
    for (long r = w.r.lo; r <= w.r.hi; ++r) {
        for (long s = w.s.lo; s <= w.s.hi; ++s) {
            for (long m = w.m.lo; m <= w.m.hi; ++m) {
                const Rational L = lam + Rational(m);
                for (long n = w.n.lo; n <= w.n.hi; ++n) {
                    Rational f, g;
                    if (d.id == DeformationId::APrime) {
                        // deformed source row n = 0: Q_{0,s} v_{m,0} = s(1 + (s+1) a'_m) v_{m,s}
                        const Rational ap = m == 0 ? tt : Rational(0);
                        f = Rational(r) + L;
                        if (n == 0) f += Rational(s + 1) * (Rational(2 * r) - Rational(s) * L) * ap;
                        if (n == -1) f += Rational(s) * Rational(s + 1) * L * ap;
                        g = Rational(s + n);
                        if (n == 0) g = Rational(s) * (Rational(1) + Rational(s + 1) * ap);
                    } else {
                        // deformed target row 0: Q_{0,s} v_{m,-s} = -s(1 + (s+1) a'_m) v_{m,0}
                        const Rational ap = m + r == 0 ? tt : Rational(0);
                        f = L;
                        if (n == -s - 1)
                            f -= Rational(s + 1) * (Rational(r) * Rational(s + 2) + L * Rational(s)) * ap;
                        if (n == -s) f += Rational(s + 1) * (L + Rational(r)) * ap;
                        g = Rational(n);
                        if (n == -s) g = Rational(-s) * (Rational(1) + Rational(s + 1) * ap);
                    }
                    t.set_f(r, s, m, n, std::move(f));
                    t.set_g(r, s, m, n, std::move(g));
                }
            }
        }
    }
    return t;
}

bool SweepReport::rigid() const {
    if (entries.empty()) return false;
    for (const SweepEntry& e : entries)
        if (e.pass != e.t.is_zero()) return false;
    return true;
}

SweepReport rigidity_sweep(DeformationId id, const Rational& lambda, const Rational& mu,
                           const std::vector<Rational>& grid, const Window& w) {
    if (lambda.is_integer())
        throw std::invalid_argument("rigidity_sweep: lambda must not be an integer");
    if (std::none_of(grid.begin(), grid.end(), [](const Rational& t) { return t.is_zero(); }))
        throw std::invalid_argument("rigidity_sweep: grid must contain 0");
    SweepReport report;
    report.deformation = id;
    report.lambda = lambda;
    for (const Rational& t : grid) {
        const ActionTable table = deformation_table({id, lambda, mu, t}, w);
        report.entries.push_back({t, fg_equation_residual(table).pass()});
    }
    return report;
}

ConstancyReport ansatz_constancy_check(const ActionTable& t) {
    const Window& w = t.window();
    ConstancyReport report;
    report.a_well_defined = report.b_well_defined = true;

    for (long m = w.m.lo; m <= w.m.hi; ++m) {
        std::optional<Rational> value;
        bool consistent = true;
        for (long n = w.n.lo; n <= w.n.hi; ++n) {
            if (!t.has_g(0, 1, m, n) || !t.has_g(0, 0, m, n)) continue;
            const Rational a_m = t.g(0, 1, m, n) - t.g(0, 0, m, n);
            if (!value) {
                value = a_m;
            } else if (*value != a_m) {
                consistent = false;
            }
        }
        if (!consistent) {
            report.a_well_defined = false;
            report.a_by_m.emplace_back(m, std::nullopt);
        } else {
            report.a_by_m.emplace_back(m, value);
        }
    }
    for (long n = w.n.lo; n <= w.n.hi; ++n) {
        std::optional<Rational> value;
        bool consistent = true;
        for (long m = w.m.lo; m <= w.m.hi; ++m) {
            if (!t.has_f(1, -1, m, n) || !t.has_f(0, -1, m, n)) continue;
            const Rational b_n = t.f(1, -1, m, n) - t.f(0, -1, m, n);
            if (!value) {
                value = b_n;
            } else if (*value != b_n) {
                consistent = false;
            }
        }
        if (!consistent) {
            report.b_well_defined = false;
            report.b_by_n.emplace_back(n, std::nullopt);
        } else {
            report.b_by_n.emplace_back(n, value);
        }
    }

    auto all_equal = [](const std::vector<std::pair<long, std::optional<Rational>>>& vals) {
        std::optional<Rational> first;
        for (const auto& [idx, v] : vals) {
            if (!v) return false;
            if (!first) first = *v;
            else if (*first != *v) return false;
        }
        return first.has_value();
    };
    report.a_constant = report.a_well_defined && all_equal(report.a_by_m);
    report.b_constant = report.b_well_defined && all_equal(report.b_by_n);
    return report;
}

}  // namespace virlike
