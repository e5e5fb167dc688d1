#include <doctest.h>

#include <vector>

#include "virlike/verifier.hpp"

using namespace virlike;

namespace {

FamilySpec make(FamilyId id, Rational a, Rational lambda, Rational mu) {
    return FamilySpec{id, a, lambda, mu};
}

const std::vector<FamilySpec>& sample_specs() {
    static const std::vector<FamilySpec> specs{
        make(FamilyId::F1, Rational(1, 2), Rational(1, 3), Rational(1, 5)),
        make(FamilyId::F2, Rational(0), Rational(1, 2), Rational(1, 3)),
        make(FamilyId::F3, Rational(0), Rational(1, 2), Rational(1, 3)),
        make(FamilyId::F4, Rational(0), Rational(1, 2), Rational(0)),
        make(FamilyId::F5, Rational(0), Rational(2), Rational(1, 3)),
        make(FamilyId::F6, Rational(0), Rational(1, 2), Rational(0)),
        make(FamilyId::F7, Rational(0), Rational(0), Rational(1, 2)),
    };
    return specs;
}

}  // namespace

TEST_CASE("module axiom holds for catalog families") {
    const Window w = Window::symmetric(3, 3, 2, 2);
    CHECK(module_axiom_residual(make(FamilyId::F3, Rational(0), Rational(1, 2), Rational(1, 3)), w)
              .pass());
    CHECK(module_axiom_residual(make(FamilyId::F1, Rational(1), Rational(0), Rational(0)), w).pass());
}

TEST_CASE("corrupting a table entry breaks the axiom") {
    const FamilySpec spec = make(FamilyId::F1, Rational(1), Rational(0), Rational(1, 3));
    const Window w = Window::symmetric(2, 2, 2, 2);
    ActionTable t = tabulate(spec, w);
    t.set_g(0, 0, 0, 0, t.g(0, 0, 0, 0) + Rational(1));  // mu + n + 1 at one point
    const ResidualReport report = module_axiom_residual(table_action(t), w);
    CHECK_FALSE(report.pass());
    for (const ReportEntry& e : report.entries) CHECK(e.id == EquationId::Axiom);
}

TEST_CASE("fg equations hold on tabulated families") {
    CHECK(fg_equation_residual(
              tabulate(make(FamilyId::F1, Rational(1, 2), Rational(1, 3), Rational(1, 5)),
                       Window::symmetric(3, 3, 3, 3)))
              .pass());
    CHECK(fg_equation_residual(tabulate(make(FamilyId::F6, Rational(0), Rational(1, 2), Rational(0)),
                                        Window::symmetric(2, 2, 2, 2)))
              .pass());
}

TEST_CASE("single-entry corruption is detected with an E36 entry") {
    ActionTable t = tabulate(make(FamilyId::F1, Rational(1, 2), Rational(1, 3), Rational(1, 5)),
                             Window::symmetric(3, 3, 3, 3));
    t.set_g(0, 1, 0, 0, t.g(0, 1, 0, 0) + Rational(1));
    const ResidualReport report = fg_equation_residual(t);
    CHECK_FALSE(report.pass());
    bool saw_e36 = false;
    for (const ReportEntry& e : report.entries) saw_e36 |= e.id == EquationId::E36;
    CHECK(saw_e36);
}

TEST_CASE("sensitivity: every family detects a corrupted entry") {
    for (const FamilySpec& spec : sample_specs()) {
        ActionTable t = tabulate(spec, Window::symmetric(3, 3, 2, 2));
        t.set_g(0, 1, 0, 0, t.g(0, 1, 0, 0) + Rational(1));
        CHECK_FALSE(fg_equation_residual(t).pass());
    }
}

TEST_CASE("axiom check and fg equations agree") {
    const Window w = Window::symmetric(3, 3, 2, 2);
    for (const FamilySpec& spec : sample_specs()) {
        const bool axiom_ok = module_axiom_residual(spec, w).pass();
        const bool fg_ok = fg_equation_residual(tabulate(spec, w)).pass();
        CHECK(axiom_ok);
        CHECK(axiom_ok == fg_ok);
    }
    // and on a corrupted table both fail
    ActionTable bad = tabulate(sample_specs()[0], w);
    bad.set_f(1, 0, 0, 0, bad.f(1, 0, 0, 0) + Rational(1));
    CHECK_FALSE(fg_equation_residual(bad).pass());
    CHECK_FALSE(module_axiom_residual(table_action(bad), w).pass());
}

TEST_CASE("normalization check") {
    const FamilySpec spec = make(FamilyId::F2, Rational(0), Rational(1, 2), Rational(1, 3));
    const Window w = Window::symmetric(3, 3, 2, 2);
    const ActionTable good = tabulate(spec, w);
    CHECK(normalization_check(good).pass());

    // misdeclaring lambda by +1 shifts every f(0,-1,m,n) check
    ActionTable shifted(w, spec.lambda + Rational(1), spec.mu);
    for (long r = w.r.lo; r <= w.r.hi; ++r)
        for (long s = w.s.lo; s <= w.s.hi; ++s)
            for (long m = w.m.lo; m <= w.m.hi; ++m)
                for (long n = w.n.lo; n <= w.n.hi; ++n) {
                    shifted.set_f(r, s, m, n, good.f(r, s, m, n));
                    shifted.set_g(r, s, m, n, good.g(r, s, m, n));
                }
    const ResidualReport report = normalization_check(shifted);
    CHECK(report.entries.size() == static_cast<std::size_t>(w.m.size() * w.n.size()));
    for (const ReportEntry& e : report.entries) {
        CHECK(e.id == EquationId::Norm);
        CHECK(e.residual == "-1");
    }
}

TEST_CASE("normalization on a single-point window checks two identities") {
    const Window w{{0, 0}, {0, 0}, {0, 0}, {-1, 0}};
    const FamilySpec spec = make(FamilyId::F1, Rational(0), Rational(1, 2), Rational(1, 3));
    ActionTable t = tabulate(spec, w);
    CHECK(normalization_check(t).pass());
    // corrupt both anchors: exactly two entries, one per identity
    t.set_f(0, -1, 0, 0, t.f(0, -1, 0, 0) + Rational(1));
    t.set_g(0, 0, 0, 0, t.g(0, 0, 0, 0) + Rational(2));
    const ResidualReport report = normalization_check(t);
    CHECK(report.entries.size() == 2);
}

TEST_CASE("grading check passes for families and flags stray cells") {
    CHECK(grading_check(make(FamilyId::F2, Rational(0), Rational(1, 2), Rational(1, 3)),
                        Window::symmetric(3, 3, 2, 2))
              .pass());
    CHECK(grading_check(make(FamilyId::F1, Rational(0), Rational(0), Rational(0)),
                        Window::symmetric(3, 3, 2, 2))
              .pass());

    const FamilySpec spec = make(FamilyId::F1, Rational(0), Rational(1, 2), Rational(1, 3));
    GeneratorAction stray = [&spec](long r, long s, long m, long n) -> std::optional<ModVector> {
        ModVector out = act_generator(spec, r, s, ModVector::unit(m, n));
        if (r == 1 && s == 0 && m == 0 && n == 0) out.add_term(5, 5, Rational(1));  // third cell
        return out;
    };
    const ResidualReport report = grading_check(stray, Window::symmetric(2, 2, 2, 2));
    REQUIRE(report.entries.size() == 1);
    CHECK(report.entries.front().id == EquationId::Grading);
    CHECK(report.entries.front().r == 1);
    CHECK(report.entries.front().m == 0);
    CHECK(report.entries.front().residual == "(5,5):1");
}

TEST_CASE("tabulate fills the declared window") {
    const Window w = Window::symmetric(1, 1, 1, 1);
    const ActionTable t = tabulate(make(FamilyId::F1, Rational(0), Rational(0), Rational(0)), w);
    CHECK(t.total());
    for (long r = -1; r <= 1; ++r)
        for (long s = -1; s <= 1; ++s)
            for (long m = -1; m <= 1; ++m)
                for (long n = -1; n <= 1; ++n) {
                    CHECK(t.f(r, s, m, n) == Rational(m));
                    CHECK(t.g(r, s, m, n) == Rational(n));
                }

    const ActionTable t7 =
        tabulate(make(FamilyId::F7, Rational(0), Rational(0), Rational(1, 2)), w);
    for (long m = -1; m <= 1; ++m)
        for (long n = -1; n <= 1; ++n) CHECK(t7.f(0, -1, m, n) == Rational(m));

    const Window point{{0, 0}, {0, 0}, {0, 0}, {0, 0}};
    const ActionTable tiny = tabulate(make(FamilyId::F1, Rational(0), Rational(0), Rational(0)), point);
    CHECK(tiny.total());
    CHECK(tiny.f_count() == 1);
    CHECK(tiny.g_count() == 1);
}

TEST_CASE("partial tables are reported incomplete, not as residuals") {
    const Window w = Window::symmetric(1, 1, 1, 1);
    ActionTable t(w, Rational(0), Rational(0));
    const ActionTable full = tabulate(make(FamilyId::F1, Rational(0), Rational(0), Rational(0)), w);
    for (long r = -1; r <= 1; ++r)
        for (long s = -1; s <= 1; ++s)
            for (long m = -1; m <= 1; ++m)
                for (long n = -1; n <= 1; ++n) {
                    if (r == 0 && s == 0 && m == 0 && n == 0) continue;  // leave one hole
                    t.set_f(r, s, m, n, full.f(r, s, m, n));
                    t.set_g(r, s, m, n, full.g(r, s, m, n));
                }
    t.set_f(0, 0, 0, 0, full.f(0, 0, 0, 0));
    CHECK_THROWS_AS(fg_equation_residual(t), IncompleteTable);
}

TEST_CASE("report entries are sorted") {
    ResidualReport r;
    r.entries.push_back({EquationId::E36, 0, 0, 0, 0, 2, 0, "1"});
    r.entries.push_back({EquationId::E34, 0, 0, 0, 0, 1, 0, "1"});
    r.entries.push_back({EquationId::E34, 0, 0, 0, 0, 0, 0, "1"});
    r.sort_entries();
    CHECK(r.entries[0].id == EquationId::E34);
    CHECK(r.entries[0].m == 0);
    CHECK(r.entries[1].m == 1);
    CHECK(r.entries[2].id == EquationId::E36);
}

TEST_CASE("window validation") {
    CHECK_THROWS_AS(Window({0, -1}, {0, 0}, {0, 0}, {0, 0}).validate(), std::invalid_argument);
    CHECK_NOTHROW(Window::symmetric(0, 0, 0, 0).validate());
}
