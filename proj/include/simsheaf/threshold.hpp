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
#include "simsheaf/matrix.hpp"
#include "simsheaf/sheaf.hpp"
#include "simsheaf/similarity.hpp"
#include "simsheaf/vector.hpp"

namespace simsheaf {

/// Data-driven cosine thresholds for one entity set.  Above `upper` no
/// pair of the set can carry a negative Pearson correlation; `lower` is
/// the same construction on the two smallest distinct ratio values and
/// marks where the least skewed pairs cross r = 0.
struct ThresholdReport {
    std::size_t n = 0;
    double lower = 0;
    double upper = 0;
    std::pair<std::string, std::string> min_pair;
    std::pair<std::string, std::string> max_pair;
    bool per_pair_mode = false;
};

inline ThresholdReport compute_thresholds(std::span<const NormProfile> profiles, std::size_t n) {
    const Envelope env = envelope(profiles, n);
    ThresholdReport report;
    report.n = n;
    report.lower = env.min_line.cos_at_r0;
    report.upper = env.max_line.cos_at_r0;
    report.min_pair = env.min_pair;
    report.max_pair = env.max_pair;
    return report;
}

inline ThresholdReport compute_thresholds(const DataMatrix& m, Orientation orientation,
                                          std::vector<DroppedEntity>* dropped = nullptr) {
    auto vectors = usable_vectors(m, orientation, /*need_nonconstant=*/true, dropped);
    if (vectors.size() < 2) throw error("fewer than 2 usable entities for thresholds");
    auto profiles = norm_profiles(vectors);
    return compute_thresholds(profiles, vectors.front().size());
}

/// The cosine value at which this single pair's line crosses r = 0.
inline double pair_threshold(double a, double b, std::size_t n) {
    return line_params(a, b, n).cos_at_r0;
}

struct Violation {
    std::string first;
    std::string second;
    double cos = 0;
    double r = 0;
};

struct GuaranteeResult {
    std::size_t pairs = 0;
    std::vector<Violation> violations;
    std::vector<DroppedEntity> dropped;
};

namespace detail {

template <typename CutFn>
inline GuaranteeResult scan_violations(const DataMatrix& m, Orientation orientation, CutFn cut) {
    GuaranteeResult out;
    auto vectors = usable_vectors(m, orientation, /*need_nonconstant=*/true, &out.dropped);
    if (vectors.size() < 2) throw error("fewer than 2 usable entities to verify");
    for (std::size_t i = 0; i < vectors.size(); ++i)
        for (std::size_t j = i + 1; j < vectors.size(); ++j) {
            ++out.pairs;
            const double c = cosine(vectors[i], vectors[j]);
            const double r = pearson(vectors[i], vectors[j]);
            if (c > cut(vectors[i], vectors[j]) && r < 0.0) {
                const EntityVector* x = &vectors[i];
                const EntityVector* y = &vectors[j];
                if (y->label() < x->label()) std::swap(x, y);
                out.violations.push_back({x->label(), y->label(), c, r});
            }
        }
    std::sort(out.violations.begin(), out.violations.end(),
              [](const Violation& lhs, const Violation& rhs) {
                  return std::tie(lhs.first, lhs.second) < std::tie(rhs.first, rhs.second);
              });
    return out;
}

} // namespace detail

/// Check the claim behind a threshold: list every pair whose cosine
/// exceeds it while its Pearson correlation is negative.  Pairs come out
/// sorted by (first, second) with labels in lexicographic order.
inline GuaranteeResult verify_guarantee(const DataMatrix& m, Orientation orientation,
                                        double threshold) {
    return detail::scan_violations(
        m, orientation, [&](const EntityVector&, const EntityVector&) { return threshold; });
}

/// Same scan against each pair's own r = 0 crossing.  This cut is exact,
/// so violations here can only come from rounding.
inline GuaranteeResult verify_guarantee_per_pair(const DataMatrix& m, Orientation orientation) {
    return detail::scan_violations(m, orientation,
                                   [&](const EntityVector& x, const EntityVector& y) {
                                       return pair_threshold(norm_ratio(x), norm_ratio(y),
                                                             x.size());
                                   });
}

} // namespace simsheaf
