#include "virlike/span.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>

namespace virlike {

bool IndexBox::contains(const LieElement& e) const {
    for (const auto& [idx, c] : e.terms())
        if (!contains(idx)) return false;
    return true;
}

bool is_z_basis(const LatticeBasis& b) {
    const long det = b.alpha1.first * b.alpha2.second - b.alpha1.second * b.alpha2.first;
    return det == 1 || det == -1;
}

std::vector<std::pair<long, long>> ghw_vanishing_set(const LatticeBasis& b, long k1_max, long k2_max) {
    if (!is_z_basis(b)) throw std::invalid_argument("ghw_vanishing_set: not a Z-basis");
    if (k1_max < 0 || k2_max < 0) throw std::invalid_argument("ghw_vanishing_set: negative bounds");
    std::vector<std::pair<long, long>> out;
    for (long k1 = 0; k1 <= k1_max; ++k1) {
        for (long k2 = 0; k2 <= k2_max; ++k2) {
            const long ax = k1 * b.alpha1.first + k2 * b.alpha2.first;
            const long ay = k1 * b.alpha1.second + k2 * b.alpha2.second;
            if (k1 > 0 && k2 > 0) {
                for (long k = 0; k <= k1 + k2; ++k) out.emplace_back(ax, ay + k);
            } else {
                out.emplace_back(ax, ay);
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

GenIndex leading_index(const LieElement& e) {
    return e.terms().begin()->first;  // map is sorted; caller guarantees nonzero
}

}  // namespace

LieElement SpanBasis::reduce(LieElement v) const {
    for (const int id : pivots_) {
        if (v.is_zero()) break;
        const Row& row = rows_[id];
        const Rational c = v.coeff(leading_index(row.elem));
        if (!c.is_zero()) v -= row.elem.scaled(c);
    }
    return v;
}

bool SpanBasis::insert(const LieElement& v) {
    return insert_with_origin(v, RowOrigin{RowOrigin::Kind::External, -1, -1});
}

bool SpanBasis::insert_with_origin(const LieElement& v, RowOrigin origin) {
    LieElement residual = v;
    std::vector<std::pair<int, Rational>> eliminated;
    for (const int id : pivots_) {
        if (residual.is_zero()) break;
        const Row& row = rows_[id];
        const Rational c = residual.coeff(leading_index(row.elem));
        if (!c.is_zero()) {
            residual -= row.elem.scaled(c);
            eliminated.emplace_back(id, c);
        }
    }
    if (residual.is_zero()) return true;

    if (rows_.size() >= 1000000) throw std::length_error("span certificate log exceeds 10^6 entries");

    const Rational lc = residual.terms().begin()->second;
    Row row;
    row.elem = residual.scaled(lc.inverse());
    row.origin = origin;
    row.raw = v;
    row.eliminated = std::move(eliminated);
    row.leading_scale = lc;
    const int id = static_cast<int>(rows_.size());
    const GenIndex lead = leading_index(row.elem);
    rows_.push_back(std::move(row));
    const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), lead, [this](int p, const GenIndex& l) {
        return leading_index(rows_[p].elem) < l;
    });
    pivots_.insert(pos, id);
    return false;
}

bool SpanBasis::contains(const GenIndex& target) const {
    LieElement unit;
    unit.add_term(target, Rational(1));
    return reduce(std::move(unit)).is_zero();
}

bool SpanBasis::replay_certificates(const std::vector<LieElement>& generators) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Row& row = rows_[i];
        switch (row.origin.kind) {
            case RowOrigin::Kind::External:
                break;
            case RowOrigin::Kind::Generator:
                if (row.origin.a < 0 || row.origin.a >= static_cast<int>(generators.size())) return false;
                if (!(generators[row.origin.a] == row.raw)) return false;
                break;
            case RowOrigin::Kind::Bracket: {
                if (row.origin.a < 0 || row.origin.b < 0) return false;
                if (row.origin.a >= static_cast<int>(i) || row.origin.b >= static_cast<int>(i)) return false;
                if (!(bracket(rows_[row.origin.a].elem, rows_[row.origin.b].elem) == row.raw)) return false;
                break;
            }
        }
        LieElement lhs = row.raw;
        for (const auto& [id, c] : row.eliminated) {
            if (id >= static_cast<int>(i)) return false;
            lhs -= rows_[id].elem.scaled(c);
        }
        if (!(lhs == row.elem.scaled(row.leading_scale))) return false;
    }
    return true;
}

SpanBasis subalgebra_closure(const std::vector<LieElement>& generators, const IndexBox& box,
                             int max_rounds) {
    SpanBasis span;
    for (std::size_t k = 0; k < generators.size(); ++k) {
        if (!box.contains(generators[k]))
            throw std::invalid_argument("subalgebra_closure: generator outside box");
        span.insert_with_origin(generators[k],
                                RowOrigin{RowOrigin::Kind::Generator, static_cast<int>(k), -1});
    }
    std::size_t new_lo = 0;
    for (int round = 0; round < max_rounds; ++round) {
        const std::size_t hi = span.rows_.size();
        if (new_lo == hi) break;
        for (std::size_t i = new_lo; i < hi; ++i) {
            for (std::size_t j = 0; j < hi; ++j) {
                LieElement w = bracket(span.rows_[i].elem, span.rows_[j].elem);
                if (w.is_zero() || !box.contains(w)) continue;
                span.insert_with_origin(
                    w, RowOrigin{RowOrigin::Kind::Bracket, static_cast<int>(i), static_cast<int>(j)});
            }
        }
        new_lo = hi;
    }
    return span;
}

bool WitnessReport::all_certified() const {
    return std::all_of(targets.begin(), targets.end(), [](const TargetStatus& t) { return t.certified; });
}

WitnessReport generation_witness(long m, long n, WitnessVariant variant, const IndexBox& box,
                                 int rounds, const std::vector<long>& band_ks) {
    if (variant == WitnessVariant::S) {
        if (std::labs(m) < 2 || n == 0)
            throw std::invalid_argument("generation_witness: variant S needs |m| >= 2 and n != 0");
    } else {
        if (std::labs(m) > 1 || std::labs(n) < 3)
            throw std::invalid_argument("generation_witness: variant S' needs |m| <= 1 and |n| >= 3");
    }
    for (const long k : band_ks) {
        if (variant != WitnessVariant::S)
            throw std::invalid_argument("generation_witness: band targets only apply to variant S");
        if (k < 3) throw std::invalid_argument("generation_witness: band k must be >= 3");
    }

    std::vector<LieElement> generators;
    const std::vector<long> is = variant == WitnessVariant::S ? std::vector<long>{1, 0, -1}
                                                              : std::vector<long>{-1, 0, 1};
    const std::vector<long> js = variant == WitnessVariant::S ? std::vector<long>{3, 0, -3}
                                                              : std::vector<long>{-2, 1, 4};
    for (const long i : is)
        for (const long j : js) generators.push_back(LieElement::generator(m + i, n + j));
    for (const LieElement& g : generators)
        if (!box.contains(g))
            throw std::invalid_argument("generation_witness: box too small to hold the generators");

    const SpanBasis span = subalgebra_closure(generators, box, rounds);

    std::map<std::pair<long, long>, TargetStatus> targets;
    auto add_target = [&](long alpha, long beta) {
        TargetStatus st{alpha, beta, false, ""};
        if (!box.contains(GenIndex::basis(alpha, beta))) {
            st.reason = "box";
        } else if (span.contains(GenIndex::basis(alpha, beta))) {
            st.certified = true;
        } else {
            st.reason = "not-in-span";
        }
        targets.emplace(std::make_pair(alpha, beta), st);
    };

    if (variant == WitnessVariant::S) {
        for (const long d : {-1L, 0L, 1L})
            for (const long k : {-3L, -2L, 0L, 1L, 3L, 4L}) add_target(2 * m + d, 2 * n + k);
        for (const long k : band_ks)
            for (const long i : {-1L, 0L, 1L})
                for (long j = -3 * (k - 1); j <= 4 * (k - 1); ++j) add_target(k * m + i, k * n + j);
    } else {
        add_target(n - 1, n * n);
        add_target(n, n * n);
        add_target(m + 1, n + 1);
        add_target(m, n + 1);
    }

    WitnessReport report;
    report.m = m;
    report.n = n;
    report.variant = variant;
    report.box = box;
    report.rounds = rounds;
    report.span_rows = span.size();
    for (auto& [key, st] : targets) report.targets.push_back(std::move(st));
    return report;
}

}  // namespace virlike
