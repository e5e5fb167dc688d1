#ifndef VIRLIKE_SPAN_HPP
#define VIRLIKE_SPAN_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "virlike/algebra.hpp"

namespace virlike {

/// Truncation domain for the closure. The central symbol is considered
/// inside every box.
struct IndexBox {
    long alpha_min = 0, alpha_max = 0, beta_min = 0, beta_max = 0;

    bool contains(const GenIndex& idx) const {
        return idx.central || (alpha_min <= idx.alpha && idx.alpha <= alpha_max &&
                               beta_min <= idx.beta && idx.beta <= beta_max);
    }
    bool contains(const LieElement& e) const;
};

/// A candidate Z-basis of ZxZ: two lattice vectors.
struct LatticeBasis {
    std::pair<long, long> alpha1;
    std::pair<long, long> alpha2;
};

/// True iff the 2x2 determinant of (alpha1, alpha2) is +-1, i.e. the pair
/// generates the full lattice.
bool is_z_basis(const LatticeBasis& b);

/// Enumerates alpha = k1*alpha1 + k2*alpha2 + k*(1 - delta_{k1 k2,0})*e2 for
/// 0 <= k1 <= k1_max, 0 <= k2 <= k2_max, 0 <= k <= k1+k2; the e2 shift only
/// applies when both k1 > 0 and k2 > 0. Result is deduplicated and sorted
/// lexicographically. Throws std::invalid_argument on a non-Z-basis or
/// negative bounds.
std::vector<std::pair<long, long>> ghw_vanishing_set(const LatticeBasis& b, long k1_max, long k2_max);

/// How a row's raw value entered the span, for certificate replay.
struct RowOrigin {
    enum class Kind { External, Generator, Bracket };
    Kind kind = Kind::External;
    int a = -1;  // generator index, or left row id for Bracket
    int b = -1;  // right row id for Bracket
};

/// Echelon basis of a span of LieElements over Q. Rows are stored in
/// insertion order; a separate pivot order (strictly increasing leading
/// index, unit leading coefficient) drives reduction. Each row carries a
/// certificate: its raw origin plus the elimination applied to it, so that
/// membership claims can be replayed against the generators.
class SpanBasis {
public:
    struct Row {
        LieElement elem;                                   // unit leading coefficient
        RowOrigin origin;
        LieElement raw;                                    // value before reduction, Bracket rows only
        std::vector<std::pair<int, Rational>> eliminated;  // row id -> coefficient subtracted
        Rational leading_scale;                            // raw - sum(eliminated) = leading_scale * elem
    };

    /// Inserts an externally supplied element. Returns true when the element
    /// was already contained in the span (no row added).
    bool insert(const LieElement& v);

    /// True iff the unit element on `target` reduces to zero.
    bool contains(const GenIndex& target) const;

    /// Residual of v after elimination against the pivot rows.
    LieElement reduce(LieElement v) const;

    const std::vector<Row>& rows() const { return rows_; }
    std::size_t size() const { return rows_.size(); }

    /// Re-derives every row from its certificate: generators must match the
    /// supplied list verbatim, bracket rows must equal the bracket of their
    /// recorded operands, and the recorded elimination must reproduce the
    /// stored row. Returns false on any discrepancy.
    bool replay_certificates(const std::vector<LieElement>& generators) const;

    friend SpanBasis subalgebra_closure(const std::vector<LieElement>&, const IndexBox&, int);

private:
    bool insert_with_origin(const LieElement& v, RowOrigin origin);

    std::vector<Row> rows_;      // insertion order
    std::vector<int> pivots_;    // row ids sorted by leading index
};

/// Iteratively brackets pairs of rows (each round: rows new in the previous
/// round against all rows), inserting results supported inside `box`;
/// results with any term outside the box are discarded whole, never
/// truncated. Stops at a fixed point or after max_rounds. Every row of the
/// result lies in the subalgebra generated by `generators`.
/// Throws std::invalid_argument when a generator has support outside `box`.
SpanBasis subalgebra_closure(const std::vector<LieElement>& generators, const IndexBox& box,
                             int max_rounds);

enum class WitnessVariant { S, SPrime };

struct TargetStatus {
    long alpha = 0, beta = 0;
    bool certified = false;
    /// empty when certified; "box" when the target lies outside the box;
    /// "not-in-span" when inside the box but not proven a member.
    std::string reason;
};

struct WitnessReport {
    long m = 0, n = 0;
    WitnessVariant variant = WitnessVariant::S;
    IndexBox box;
    int rounds = 0;
    std::size_t span_rows = 0;
    std::vector<TargetStatus> targets;  // sorted by (alpha, beta)

    bool all_certified() const;
};

/// Builds the generator set around (m, n) for the requested variant
/// (S: offsets i in {1,0,-1}, j in {3,0,-3}, requires |m| >= 2 and n != 0;
/// S': offsets i in {-1,0,1}, j in {-2,1,4}, requires |m| <= 1 and |n| >= 3),
/// runs the closure, and reports which targets are certified members.
/// Variant S targets the 18 generators L_{2m+d, 2n+k}, d in {-1,0,1},
/// k in {-3,-2,0,1,3,4}, plus the band L_{km+i, kn+j}, i in {-1,0,1},
/// -3(k-1) <= j <= 4(k-1) for every k in band_ks (each k >= 3). Variant S'
/// targets L_{n-1,n^2}, L_{n,n^2}, L_{m+1,n+1}, L_{m,n+1}.
WitnessReport generation_witness(long m, long n, WitnessVariant variant, const IndexBox& box,
                                 int rounds, const std::vector<long>& band_ks = {});

}  // namespace virlike

#endif
