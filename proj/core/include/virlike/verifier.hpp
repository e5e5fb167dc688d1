#ifndef VIRLIKE_VERIFIER_HPP
#define VIRLIKE_VERIFIER_HPP

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "virlike/catalog.hpp"

namespace virlike {

struct Interval {
    long lo = 0, hi = 0;  // inclusive

    bool contains(long v) const { return lo <= v && v <= hi; }
    long size() const { return hi - lo + 1; }

    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Finite truncation of the integral index quantifiers: m, n index module
/// basis vectors, r, s index algebra generators. All intervals inclusive and
/// nonempty.
struct Window {
    Interval m, n, r, s;

    static Window symmetric(long m_rad, long n_rad, long r_rad, long s_rad);
    void validate() const;  // throws std::invalid_argument when some interval is empty

    bool in_mn(long mm, long nn) const { return m.contains(mm) && n.contains(nn); }
    bool in_rs(long rr, long ss) const { return r.contains(rr) && s.contains(ss); }

    friend bool operator==(const Window&, const Window&) = default;
};

enum class EquationId { E34, E35, E36, Axiom, Norm, Grading, K510, K511, FDiff, GDiff };

std::string_view equation_id_name(EquationId id);

struct ReportEntry {
    EquationId id = EquationId::E34;
    long h = 0, k = 0, r = 0, s = 0, m = 0, n = 0;
    std::string residual;  // exact rational, or a canonical vector rendering

    friend bool operator==(const ReportEntry&, const ReportEntry&) = default;
};

/// Exhaustive list of nonzero residuals; empty means every checked identity
/// holds exactly.
struct ResidualReport {
    std::vector<ReportEntry> entries;

    bool pass() const { return entries.empty(); }
    void sort_entries();
    void merge(ResidualReport other);
};

/// Thrown when an in-window identity instance refers to an absent table
/// entry (a partial table, not a residual).
struct IncompleteTable : std::runtime_error {
    explicit IncompleteTable(const std::string& what) : std::runtime_error(what) {}
};

/// Tabulated action coefficients f, g over a window, with the declared
/// normalization parameters. Entries may be partially populated (loaded
/// tables); tabulate() produces total tables.
class ActionTable {
public:
    ActionTable(Window w, Rational lambda, Rational mu);

    const Window& window() const { return window_; }
    const Rational& lambda() const { return lambda_; }
    const Rational& mu() const { return mu_; }

    bool has_f(long r, long s, long m, long n) const;
    bool has_g(long r, long s, long m, long n) const;
    const Rational& f(long r, long s, long m, long n) const;  // throws IncompleteTable
    const Rational& g(long r, long s, long m, long n) const;
    void set_f(long r, long s, long m, long n, Rational value);
    void set_g(long r, long s, long m, long n, Rational value);

    bool total() const;
    std::size_t f_count() const;
    std::size_t g_count() const;

    friend bool operator==(const ActionTable&, const ActionTable&);

private:
    std::size_t index(long r, long s, long m, long n) const;

    Window window_;
    Rational lambda_, mu_;
    std::vector<Rational> f_, g_;
    std::vector<char> f_set_, g_set_;
};

/// Fills f, g from the family's closed forms over the window.
ActionTable tabulate(const FamilySpec& spec, const Window& w);

/// Action of one generator on one basis vector; nullopt when the generator
/// or the vector lies outside the action's domain (quantifier truncation for
/// table-backed actions).
using GeneratorAction = std::function<std::optional<ModVector>(long r, long s, long m, long n)>;

/// The action tabulated in `t`, engaged exactly on the table's window.
/// Referencing an absent in-window entry throws IncompleteTable.
GeneratorAction table_action(const ActionTable& t);

/// Checks [x, y] v = x (y v) - y (x v) with the central element acting as
/// zero, for every pair of generators in the window and every in-window
/// basis vector. Instances needing an action outside the domain are skipped.
ResidualReport module_axiom_residual(const GeneratorAction& action, const Window& w);
ResidualReport module_axiom_residual(const FamilySpec& spec, const Window& w);

/// Left-minus-right of the three defining coefficient equations at every
/// window point whose derived indices stay inside the table's domain.
ResidualReport fg_equation_residual(const ActionTable& t);

/// f(0,-1,m,n) = lambda + m and g(0,0,m,n) = mu + n at every window point
/// where the table provides the entry.
ResidualReport normalization_check(const ActionTable& t);

/// Verifies the action maps v_{m,n} into the two permitted cells
/// (m+r, n+s+1) and (m+r, n+s) for every in-window generator and vector.
ResidualReport grading_check(const GeneratorAction& action, const Window& w);
ResidualReport grading_check(const FamilySpec& spec, const Window& w);

}  // namespace virlike

#endif
