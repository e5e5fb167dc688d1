#include "virlike/verifier.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "virlike/parallel.hpp"

namespace virlike {

Window Window::symmetric(long m_rad, long n_rad, long r_rad, long s_rad) {
    Window w{{-m_rad, m_rad}, {-n_rad, n_rad}, {-r_rad, r_rad}, {-s_rad, s_rad}};
    w.validate();
    return w;
}

void Window::validate() const {
    for (const Interval& iv : {m, n, r, s})
        if (iv.lo > iv.hi) throw std::invalid_argument("window interval is empty");
}

std::string_view equation_id_name(EquationId id) {
    switch (id) {
        case EquationId::E34: return "E34";
        case EquationId::E35: return "E35";
        case EquationId::E36: return "E36";
        case EquationId::Axiom: return "AXIOM";
        case EquationId::Norm: return "NORM";
        case EquationId::Grading: return "GRADING";
        case EquationId::K510: return "K510";
        case EquationId::K511: return "K511";
        case EquationId::FDiff: return "FDIFF";
        case EquationId::GDiff: return "GDIFF";
    }
    return "?";
}

namespace {

auto entry_key(const ReportEntry& e) {
    return std::tuple(static_cast<int>(e.id), e.h, e.k, e.r, e.s, e.m, e.n, e.residual);
}

std::string render_vector(const ModVector& v) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : v.terms()) {
        if (!first) os << ';';
        first = false;
        os << '(' << key.first << ',' << key.second << "):" << c.str();
    }
    return os.str();
}

}  // namespace

void ResidualReport::sort_entries() {
    std::sort(entries.begin(), entries.end(),
              [](const ReportEntry& a, const ReportEntry& b) { return entry_key(a) < entry_key(b); });
}

void ResidualReport::merge(ResidualReport other) {
    entries.insert(entries.end(), std::make_move_iterator(other.entries.begin()),
                   std::make_move_iterator(other.entries.end()));
}

ActionTable::ActionTable(Window w, Rational lambda, Rational mu)
    : window_(w), lambda_(std::move(lambda)), mu_(std::move(mu)) {
    window_.validate();
    const std::size_t size = static_cast<std::size_t>(window_.r.size()) * window_.s.size() *
                             window_.m.size() * window_.n.size();
    f_.resize(size);
    g_.resize(size);
    f_set_.assign(size, 0);
    g_set_.assign(size, 0);
}

std::size_t ActionTable::index(long r, long s, long m, long n) const {
    if (!window_.in_rs(r, s) || !window_.in_mn(m, n))
        throw IncompleteTable("table index outside window");
    std::size_t idx = static_cast<std::size_t>(r - window_.r.lo);
    idx = idx * window_.s.size() + static_cast<std::size_t>(s - window_.s.lo);
    idx = idx * window_.m.size() + static_cast<std::size_t>(m - window_.m.lo);
    idx = idx * window_.n.size() + static_cast<std::size_t>(n - window_.n.lo);
    return idx;
}

bool ActionTable::has_f(long r, long s, long m, long n) const {
    return window_.in_rs(r, s) && window_.in_mn(m, n) && f_set_[index(r, s, m, n)];
}

bool ActionTable::has_g(long r, long s, long m, long n) const {
    return window_.in_rs(r, s) && window_.in_mn(m, n) && g_set_[index(r, s, m, n)];
}

const Rational& ActionTable::f(long r, long s, long m, long n) const {
    const std::size_t i = index(r, s, m, n);
    if (!f_set_[i]) {
        std::ostringstream os;
        os << "missing f entry at (r=" << r << ",s=" << s << ",m=" << m << ",n=" << n << ")";
        throw IncompleteTable(os.str());
    }
    return f_[i];
}

const Rational& ActionTable::g(long r, long s, long m, long n) const {
    const std::size_t i = index(r, s, m, n);
    if (!g_set_[i]) {
        std::ostringstream os;
        os << "missing g entry at (r=" << r << ",s=" << s << ",m=" << m << ",n=" << n << ")";
        throw IncompleteTable(os.str());
    }
    return g_[i];
}

void ActionTable::set_f(long r, long s, long m, long n, Rational value) {
    const std::size_t i = index(r, s, m, n);
    f_[i] = std::move(value);
    f_set_[i] = 1;
}

void ActionTable::set_g(long r, long s, long m, long n, Rational value) {
    const std::size_t i = index(r, s, m, n);
    g_[i] = std::move(value);
    g_set_[i] = 1;
}

bool ActionTable::total() const {
    return std::all_of(f_set_.begin(), f_set_.end(), [](char c) { return c != 0; }) &&
           std::all_of(g_set_.begin(), g_set_.end(), [](char c) { return c != 0; });
}

std::size_t ActionTable::f_count() const {
    return static_cast<std::size_t>(std::count(f_set_.begin(), f_set_.end(), 1));
}

std::size_t ActionTable::g_count() const {
    return static_cast<std::size_t>(std::count(g_set_.begin(), g_set_.end(), 1));
}

bool operator==(const ActionTable& a, const ActionTable& b) {
    return a.window_ == b.window_ && a.lambda_ == b.lambda_ && a.mu_ == b.mu_ &&
           a.f_set_ == b.f_set_ && a.g_set_ == b.g_set_ && a.f_ == b.f_ && a.g_ == b.g_;
}

ActionTable tabulate(const FamilySpec& spec, const Window& w) {
    require_valid(spec);
    ActionTable t(w, spec.lambda, spec.mu);
    for (long r = w.r.lo; r <= w.r.hi; ++r)
        for (long s = w.s.lo; s <= w.s.hi; ++s)
            for (long m = w.m.lo; m <= w.m.hi; ++m)
                for (long n = w.n.lo; n <= w.n.hi; ++n) {
                    t.set_f(r, s, m, n, coeff_f(spec, r, s, m, n));
                    t.set_g(r, s, m, n, coeff_g(spec, r, s, m, n));
                }
    return t;
}

GeneratorAction table_action(const ActionTable& t) {
    return [&t](long r, long s, long m, long n) -> std::optional<ModVector> {
        if (!t.window().in_rs(r, s) || !t.window().in_mn(m, n)) return std::nullopt;
        ModVector out;
        out.add_term(m + r, n + s + 1, t.f(r, s, m, n));
        out.add_term(m + r, n + s, t.g(r, s, m, n));
        return out;
    };
}

namespace {

template <class ActionFn>
std::optional<ModVector> apply_action(const ActionFn& action, long r, long s, const ModVector& v) {
    ModVector out;
    for (const auto& [key, c] : v.terms()) {
        const auto applied = action(r, s, key.first, key.second);
        if (!applied) return std::nullopt;
        out += applied->scaled(c);
    }
    return out;
}

template <class ActionFn>
ResidualReport axiom_residual_impl(const ActionFn& action, const Window& w) {
    w.validate();
    std::vector<std::pair<long, long>> rs;
    for (long r = w.r.lo; r <= w.r.hi; ++r)
        for (long s = w.s.lo; s <= w.s.hi; ++s) rs.emplace_back(r, s);

    auto entries = parallel_collect<ReportEntry>(rs.size(), [&](std::size_t chunk) {
        const auto [r1, s1] = rs[chunk];
        std::vector<ReportEntry> out;
        for (const auto& [r2, s2] : rs) {
            const LieElement br = bracket_basis(r1, s1, r2, s2);
            for (long m = w.m.lo; m <= w.m.hi; ++m) {
                for (long n = w.n.lo; n <= w.n.hi; ++n) {
                    bool engaged = true;
                    ModVector lhs;
                    for (const auto& [idx, c] : br.terms()) {
                        if (idx.central) continue;  // c acts as zero
                        const auto applied = action(idx.alpha, idx.beta, m, n);
                        if (!applied) {
                            engaged = false;
                            break;
                        }
                        lhs += applied->scaled(c);
                    }
                    if (!engaged) continue;
                    const auto yv = action(r2, s2, m, n);
                    const auto xv = action(r1, s1, m, n);
                    if (!yv || !xv) continue;
                    const auto xyv = apply_action(action, r1, s1, *yv);
                    const auto yxv = apply_action(action, r2, s2, *xv);
                    if (!xyv || !yxv) continue;
                    ModVector defect = lhs - (*xyv - *yxv);
                    if (!defect.is_zero())
                        out.push_back({EquationId::Axiom, r1, s1, r2, s2, m, n, render_vector(defect)});
                }
            }
        }
        return out;
    });

    ResidualReport report;
    report.entries = std::move(entries);
    report.sort_entries();
    return report;
}

}  // namespace

ResidualReport module_axiom_residual(const GeneratorAction& action, const Window& w) {
    return axiom_residual_impl(action, w);
}

ResidualReport module_axiom_residual(const FamilySpec& spec, const Window& w) {
    require_valid(spec);
    w.validate();
    // Every action the scan needs lives in this extended window: bracket
    // products reach generator indices up to (r1+r2, s1+s2+1), and second
    // applications act on vectors shifted by one generator step.
    const Window ext{{w.m.lo + w.r.lo, w.m.hi + w.r.hi},
                     {w.n.lo + w.s.lo, w.n.hi + w.s.hi + 1},
                     {2 * w.r.lo, 2 * w.r.hi},
                     {2 * w.s.lo, 2 * w.s.hi + 1}};
    const ActionTable cache = tabulate(spec, ext);
    auto cached = [&cache](long r, long s, long m, long n) -> std::optional<ModVector> {
        ModVector out;
        out.add_term(m + r, n + s + 1, cache.f(r, s, m, n));
        out.add_term(m + r, n + s, cache.g(r, s, m, n));
        return out;
    };
    return axiom_residual_impl(cached, w);
}

ResidualReport fg_equation_residual(const ActionTable& t) {
    const Window& w = t.window();
    std::vector<std::pair<long, long>> hk;
    for (long h = w.r.lo; h <= w.r.hi; ++h)
        for (long k = w.s.lo; k <= w.s.hi; ++k) hk.emplace_back(h, k);

    auto entries = parallel_collect<ReportEntry>(hk.size(), [&](std::size_t chunk) {
        const auto [h, k] = hk[chunk];
        std::vector<ReportEntry> out;
        for (long r = w.r.lo; r <= w.r.hi; ++r) {
            for (long s = w.s.lo; s <= w.s.hi; ++s) {
                for (long m = w.m.lo; m <= w.m.hi; ++m) {
                    for (long n = w.n.lo; n <= w.n.hi; ++n) {
                        // (3.4): the f-f commutation relation
                        if (w.in_mn(m + r, n + s + 1) && w.in_mn(h + m, k + n + 1) &&
                            w.in_rs(r + h, s + k + 1)) {
                            Rational res = t.f(h, k, m + r, n + s + 1) * t.f(r, s, m, n) -
                                           t.f(r, s, h + m, k + n + 1) * t.f(h, k, m, n) -
                                           Rational(r - h) * t.f(r + h, s + k + 1, m, n);
                            if (!res.is_zero())
                                out.push_back({EquationId::E34, h, k, r, s, m, n, res.str()});
                        }
                        // (3.5): the mixed f-g relation
                        if (w.in_mn(r + m, s + n) && w.in_mn(m + r, s + n + 1) &&
                            w.in_mn(h + m, k + n) && w.in_mn(m + h, k + n + 1) &&
                            w.in_rs(h + r, k + s + 1) && w.in_rs(h + r, k + s)) {
                            Rational res = t.f(h, k, r + m, s + n) * t.g(r, s, m, n) +
                                           t.g(h, k, m + r, s + n + 1) * t.f(r, s, m, n) -
                                           t.f(r, s, h + m, k + n) * t.g(h, k, m, n) -
                                           t.g(r, s, m + h, k + n + 1) * t.f(h, k, m, n) -
                                           Rational(r - h) * t.g(h + r, k + s + 1, m, n) -
                                           Rational(s - k) * t.f(h + r, k + s, m, n);
                            if (!res.is_zero())
                                out.push_back({EquationId::E35, h, k, r, s, m, n, res.str()});
                        }
                        // (3.6): the g-g commutation relation
                        if (w.in_mn(m + r, s + n) && w.in_mn(m + h, n + k) && w.in_rs(h + r, k + s)) {
                            Rational res = t.g(h, k, m + r, s + n) * t.g(r, s, m, n) -
                                           t.g(r, s, m + h, n + k) * t.g(h, k, m, n) -
                                           Rational(s - k) * t.g(h + r, k + s, m, n);
                            if (!res.is_zero())
                                out.push_back({EquationId::E36, h, k, r, s, m, n, res.str()});
                        }
                    }
                }
            }
        }
        return out;
    });

    ResidualReport report;
    report.entries = std::move(entries);
    report.sort_entries();
    return report;
}

ResidualReport normalization_check(const ActionTable& t) {
    const Window& w = t.window();
    ResidualReport report;
    for (long m = w.m.lo; m <= w.m.hi; ++m) {
        for (long n = w.n.lo; n <= w.n.hi; ++n) {
            if (t.has_f(0, -1, m, n)) {
                const Rational res = t.f(0, -1, m, n) - (t.lambda() + Rational(m));
                if (!res.is_zero())
                    report.entries.push_back({EquationId::Norm, 0, 0, 0, -1, m, n, res.str()});
            }
            if (t.has_g(0, 0, m, n)) {
                const Rational res = t.g(0, 0, m, n) - (t.mu() + Rational(n));
                if (!res.is_zero())
                    report.entries.push_back({EquationId::Norm, 0, 0, 0, 0, m, n, res.str()});
            }
        }
    }
    report.sort_entries();
    return report;
}

ResidualReport grading_check(const GeneratorAction& action, const Window& w) {
    w.validate();
    ResidualReport report;
    for (long r = w.r.lo; r <= w.r.hi; ++r) {
        for (long s = w.s.lo; s <= w.s.hi; ++s) {
            for (long m = w.m.lo; m <= w.m.hi; ++m) {
                for (long n = w.n.lo; n <= w.n.hi; ++n) {
                    const auto image = action(r, s, m, n);
                    if (!image) continue;
                    ModVector stray;
                    for (const auto& [key, c] : image->terms()) {
                        const bool allowed = key.first == m + r &&
                                             (key.second == n + s + 1 || key.second == n + s);
                        if (!allowed) stray.add_term(key.first, key.second, c);
                    }
                    if (!stray.is_zero())
                        report.entries.push_back(
                            {EquationId::Grading, 0, 0, r, s, m, n, render_vector(stray)});
                }
            }
        }
    }
    report.sort_entries();
    return report;
}

ResidualReport grading_check(const FamilySpec& spec, const Window& w) {
    require_valid(spec);
    return grading_check(
        [&spec](long r, long s, long m, long n) -> std::optional<ModVector> {
            return act_generator(spec, r, s, ModVector::unit(m, n));
        },
        w);
}

}  // namespace virlike
