#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "simsheaf/error.hpp"
#include "simsheaf/format.hpp"
#include "simsheaf/matrix.hpp"
#include "simsheaf/similarity.hpp"
#include "simsheaf/vector.hpp"

namespace simsheaf {

/// One line of the sheaf: the exact affine relation between cosine and
/// Pearson's r for a fixed pair of norm ratios (a, b) in dimension n.
///
///   r = slope * (cos - cos_at_r0)
///
/// with slope = n / sqrt((n - a^2)(n - b^2)) and cos_at_r0 = a*b / n.
struct SheafLine {
    std::size_t n = 0;
    double a = 0;
    double b = 0;
    double slope = 0;
    double r_at_cos0 = 0;
    double cos_at_r0 = 0;
};

/// Build the line for ratios a, b in dimension n.  Ratios live in
/// [1, sqrt(n)); the right endpoint belongs to constant vectors, whose
/// Pearson side is undefined.
inline SheafLine line_params(double a, double b, std::size_t n) {
    if (n < 2) throw error("sheaf line needs dimension n >= 2");
    const double dn = static_cast<double>(n);
    const double root_n = std::sqrt(dn);
    for (double ratio : {a, b}) {
        if (!(ratio >= 1.0))
            throw error("norm ratio " + format_double(ratio) + " below 1");
        if (ratio >= root_n)
            throw error("constant-vector ratio: line undefined for ratio " +
                        format_double(ratio) + " with n = " + std::to_string(n));
    }
    SheafLine line;
    line.n = n;
    line.a = a;
    line.b = b;
    const double den = std::sqrt((dn - a * a) * (dn - b * b));
    line.slope = dn / den;
    line.r_at_cos0 = -(a * b) / den;
    line.cos_at_r0 = (a * b) / dn;
    return line;
}

/// r predicted by the line at a given cosine in [0, 1].
inline double predict_r(const SheafLine& line, double cos_value) {
    if (!(cos_value >= 0.0 && cos_value <= 1.0))
        throw error("cosine " + format_double(cos_value) + " outside [0, 1]");
    return line.slope * (cos_value - line.cos_at_r0);
}

/// Cosine the line assigns to a given r in [-1, 1]; exact inverse of
/// predict_r up to rounding.
inline double invert_cos(const SheafLine& line, double r) {
    if (!(r >= -1.0 && r <= 1.0))
        throw error("correlation " + format_double(r) + " outside [-1, 1]");
    const double dn = static_cast<double>(line.n);
    const double den = std::sqrt((dn - line.a * line.a) * (dn - line.b * line.b));
    return (den * r + line.a * line.b) / dn;
}

/// Jaccard and cosine are monotone images of each other when both vectors
/// share an L2 norm; these convert between the two scales.
inline double jaccard_from_cos(double c) { return c / (2.0 - c); }
inline double cos_from_jaccard(double j) { return 2.0 * j / (j + 1.0); }

inline double predict_r_from_jaccard(const SheafLine& line, double j) {
    if (!(j >= 0.0 && j <= 1.0))
        throw error("jaccard " + format_double(j) + " outside [0, 1]");
    return predict_r(line, cos_from_jaccard(j));
}

/// The two boundary lines of a sheaf: the one through the two smallest
/// distinct ratio values and the one through the two largest.
struct Envelope {
    std::size_t n = 0;
    SheafLine min_line;
    SheafLine max_line;
    double ab_min = 0;
    double ab_max = 0;
    std::pair<std::string, std::string> min_pair;
    std::pair<std::string, std::string> max_pair;
};

namespace detail {

struct ExtremeSelection {
    double a = 0;
    double b = 0;
    std::pair<std::string, std::string> owners;
};

// Walks distinct ratio values from one end of the (ratio, label) order.
// Each value is owned by its lexicographically first label, so a value
// shared by several entities still counts once.  A set with a single
// distinct value degenerates to that value paired with itself, owned by
// the two lexicographically first labels.
inline ExtremeSelection pick_extreme(const std::vector<std::pair<double, std::string>>& sorted_asc,
                                     bool largest) {
    std::vector<std::pair<double, const std::string*>> distinct;
    for (const auto& [ratio, label] : sorted_asc)
        if (distinct.empty() || distinct.back().first != ratio) distinct.emplace_back(ratio, &label);
    if (distinct.size() == 1)
        return {distinct[0].first, distinct[0].first,
                {sorted_asc[0].second, sorted_asc[1].second}};
    const std::size_t i0 = largest ? distinct.size() - 1 : 0;
    const std::size_t i1 = largest ? distinct.size() - 2 : 1;
    return {distinct[i0].first, distinct[i1].first,
            {*distinct[i0].second, *distinct[i1].second}};
}

} // namespace detail

/// Envelope over a set of norm profiles sharing dimension n.  Needs at
/// least two profiles; every profile must match n.
inline Envelope envelope(std::span<const NormProfile> profiles, std::size_t n) {
    if (profiles.size() < 2) throw error("envelope needs at least 2 entities");
    std::vector<std::pair<double, std::string>> sorted;
    sorted.reserve(profiles.size());
    for (const auto& p : profiles) {
        if (p.n != n)
            throw error("dimension mismatch: '" + p.label + "' has " + std::to_string(p.n) +
                        " coordinates, expected " + std::to_string(n));
        sorted.emplace_back(p.ratio, p.label);
    }
    std::sort(sorted.begin(), sorted.end());

    Envelope env;
    env.n = n;
    const auto lo = detail::pick_extreme(sorted, false);
    const auto hi = detail::pick_extreme(sorted, true);
    env.min_line = line_params(lo.a, lo.b, n);
    env.max_line = line_params(hi.a, hi.b, n);
    env.ab_min = lo.a * lo.b;
    env.ab_max = hi.a * hi.b;
    env.min_pair = lo.owners;
    env.max_pair = hi.owners;
    return env;
}

/// One observed pair: the measured cosine and r next to the ratios that
/// select this pair's own line in the sheaf.
struct CloudPoint {
    std::string first;
    std::string second;
    double cos = 0;
    double r = 0;
    double a = 0;
    double b = 0;
};

struct CloudResult {
    std::vector<CloudPoint> points;
    std::vector<DroppedEntity> dropped;
};

/// All unordered pairs of the given vectors.  Labels inside a point are
/// in lexicographic order, and points are sorted by (first, second).
inline std::vector<CloudPoint> cloud_points(std::span<const EntityVector> vectors) {
    if (vectors.size() < 2) throw error("cloud needs at least 2 usable entities");
    std::vector<CloudPoint> points;
    points.reserve(vectors.size() * (vectors.size() - 1) / 2);
    for (std::size_t i = 0; i < vectors.size(); ++i)
        for (std::size_t j = i + 1; j < vectors.size(); ++j) {
            const EntityVector* x = &vectors[i];
            const EntityVector* y = &vectors[j];
            if (y->label() < x->label()) std::swap(x, y);
            CloudPoint p;
            p.first = x->label();
            p.second = y->label();
            p.cos = cosine(*x, *y);
            p.r = pearson(*x, *y);
            p.a = norm_ratio(*x);
            p.b = norm_ratio(*y);
            points.push_back(std::move(p));
        }
    std::sort(points.begin(), points.end(), [](const CloudPoint& lhs, const CloudPoint& rhs) {
        return std::tie(lhs.first, lhs.second) < std::tie(rhs.first, rhs.second);
    });
    return points;
}

/// Cloud over one axis of a matrix.  Zero and constant vectors are
/// dropped up front because both cosine and r must exist for each pair.
inline CloudResult cloud(const DataMatrix& m, Orientation orientation) {
    CloudResult out;
    auto vectors = usable_vectors(m, orientation, /*need_nonconstant=*/true, &out.dropped);
    out.points = cloud_points(vectors);
    return out;
}

/// Largest gap between each pair's measured r and its own line's
/// prediction.  The underlying identity is exact, so anything beyond
/// rounding noise signals a data or implementation problem.
inline double max_identity_residual(std::span<const CloudPoint> points, std::size_t n) {
    double worst = 0.0;
    for (const auto& p : points)
        worst = std::max(worst, std::abs(p.r - predict_r(line_params(p.a, p.b, n), p.cos)));
    return worst;
}

/// Count of points whose r falls outside [predicted-by-min, predicted-by-max]
/// beyond tol; a sanity diagnostic, not a guarantee.
inline std::size_t envelope_outside_count(std::span<const CloudPoint> points, const Envelope& env,
                                          double tol = 1e-9) {
    std::size_t outside = 0;
    for (const auto& p : points) {
        const double lo = predict_r(env.min_line, p.cos);
        const double hi = predict_r(env.max_line, p.cos);
        if (p.r < std::min(lo, hi) - tol || p.r > std::max(lo, hi) + tol) ++outside;
    }
    return outside;
}

} // namespace simsheaf
