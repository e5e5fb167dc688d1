#ifndef VIRLIKE_CLASSIFIER_HPP
#define VIRLIKE_CLASSIFIER_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "virlike/verifier.hpp"

namespace virlike {

struct RejectionDiagnostic {
    FamilyId id = FamilyId::F1;
    std::string reason;     // "IntegerParameter(lambda)", "mismatch", ...
    ResidualReport diffs;   // FDIFF/GDIFF entries: table value minus candidate value
};

struct ClassifyResult {
    std::vector<FamilySpec> matches;  // in id order; each reproduces the table exactly
    std::vector<RejectionDiagnostic> diagnostics;
};

/// Recovers candidate parameters from the normalization anchors
/// (lambda = f(0,-1,0,0), mu = g(0,0,0,0); for F1 additionally
/// a = f(1,0,0,0) - lambda, cross-checked against g(0,1,0,0) = a + mu),
/// instantiates each family, tabulates it on the input window, and returns
/// every candidate agreeing with the input exactly on all present entries.
/// Throws std::invalid_argument when the anchor entries are absent.
ClassifyResult fit_family(const ActionTable& t);

/// The n-independent ratios k(r, m) = g(r,-1,m,n0) / g(0,-1,m,n0); a
/// multiplicative 1-cocycle in (r, m) for every catalog family.
struct TransferFactors {
    Interval r_range, m_range;
    std::map<std::pair<long, long>, Rational> k;

    const Rational& at(long r, long m) const;
    bool defined(long r, long m) const { return k.count({r, m}) != 0; }
};

/// Derives k(r, m) from the table using the smallest in-window n with a
/// nonzero denominator, then verifies the ratio is independent of that
/// choice across the window. Throws std::runtime_error when every
/// denominator vanishes for some m or when an n-dependence is detected;
/// throws IncompleteTable when s = -1 entries are absent.
TransferFactors derive_transfer_factors(const ActionTable& t);

/// Checks k(r,m) k(-r,m+r) = 1 (entries K510) and both product identities
/// k(h,m+r) k(r,m) = k(h+r,m), k(r,m+h) k(h,m) = k(h+r,m) (entries K511,
/// second form marked with k = 1) at every in-range point.
ResidualReport transfer_cocycle_check(const TransferFactors& k);

/// The two built-in deformation ansaetze. Both deform the a=1 resp. a=0
/// constant-coefficient module at the row where mu + n = 0, inserting the
/// one-parameter a'-term with a'_m = t at m = 0 and 0 elsewhere.
enum class DeformationId { APrime, APrimeB };

std::string_view deformation_name(DeformationId id);
std::optional<DeformationId> deformation_from_name(std::string_view name);

struct DeformationSpec {
    DeformationId id = DeformationId::APrime;
    Rational lambda;
    Rational mu;  // must be 0: both built-in tables pin the deformed row at n = 0
    Rational t;
};

/// The deformation's completed f, g tables over the window. Throws
/// std::invalid_argument when lambda is an integer or mu is nonzero.
ActionTable deformation_table(const DeformationSpec& d, const Window& w);

struct SweepEntry {
    Rational t;
    bool pass = false;
};

struct SweepReport {
    DeformationId deformation = DeformationId::APrime;
    Rational lambda;
    std::vector<SweepEntry> entries;  // grid order

    /// True when the sweep passes exactly at t = 0 and fails elsewhere.
    bool rigid() const;
};

/// Runs fg_equation_residual on the deformation table for each grid value.
/// Requires lambda not an integer and 0 in the grid.
SweepReport rigidity_sweep(DeformationId id, const Rational& lambda, const Rational& mu,
                           const std::vector<Rational>& grid, const Window& w);

/// Extraction of the ansatz slopes a_m = g(0,1,m,n) - g(0,0,m,n) and
/// b_n = f(1,-1,m,n) - f(0,-1,m,n) across the window. For a catalog table
/// both are well defined (independent of the averaged-out index) and
/// constant.
struct ConstancyReport {
    std::vector<std::pair<long, std::optional<Rational>>> a_by_m;  // nullopt: n-dependent
    std::vector<std::pair<long, std::optional<Rational>>> b_by_n;  // nullopt: m-dependent
    bool a_well_defined = false;
    bool a_constant = false;
    bool b_well_defined = false;
    bool b_constant = false;
};

ConstancyReport ansatz_constancy_check(const ActionTable& t);

}  // namespace virlike

#endif
