#pragma once

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "simsheaf/error.hpp"
#include "simsheaf/matrix.hpp"
#include "simsheaf/sheaf.hpp"
#include "simsheaf/similarity.hpp"
#include "simsheaf/threshold.hpp"
#include "simsheaf/vector.hpp"

namespace simsheaf {

/// One retained pair.  Labels are in lexicographic order; `negative`
/// flags a negative Pearson correlation surviving the cut.
struct GraphEdge {
    std::string source;
    std::string target;
    double cos = 0;
    double r = 0;
    bool negative = false;
};

enum class ThresholdMode { auto_upper, auto_lower, explicit_value, per_pair };

inline std::string_view to_string(ThresholdMode m) {
    switch (m) {
        case ThresholdMode::auto_upper: return "auto-upper";
        case ThresholdMode::auto_lower: return "auto-lower";
        case ThresholdMode::explicit_value: return "explicit";
        case ThresholdMode::per_pair: return "per-pair";
    }
    return "?";
}

/// How to choose the pruning threshold: one of the two data-driven
/// values, a fixed number in [0, 1), or each pair's own r = 0 crossing.
struct ThresholdSpec {
    ThresholdMode mode = ThresholdMode::auto_upper;
    double value = 0.0;

    static ThresholdSpec parse(std::string_view text) {
        if (text == "auto-upper") return {ThresholdMode::auto_upper, 0.0};
        if (text == "auto-lower") return {ThresholdMode::auto_lower, 0.0};
        if (text == "per-pair") return {ThresholdMode::per_pair, 0.0};
        double v = 0.0;
        const char* first = text.data();
        const char* last = text.data() + text.size();
        auto res = std::from_chars(first, last, v);
        if (res.ec != std::errc() || res.ptr != last)
            throw error("invalid threshold '" + std::string(text) +
                        "': expected auto-upper, auto-lower, per-pair, or a number");
        if (!(v >= 0.0 && v < 1.0))
            throw error("threshold " + std::string(text) + " outside [0, 1)");
        return {ThresholdMode::explicit_value, v};
    }
};

/// A pruned similarity network.  `nodes` keeps the axis order of the
/// usable entities; `threshold` is the resolved global cut, absent in
/// per-pair mode where no single number applies.
struct SimilarityGraph {
    std::vector<std::string> nodes;
    std::vector<GraphEdge> edges;
    ThresholdMode mode = ThresholdMode::auto_upper;
    std::optional<double> threshold;
    std::vector<DroppedEntity> dropped;
};

/// Build the network over one axis: compute cosine and r for every pair
/// of usable entities and keep the pairs with cosine strictly above the
/// cut.  Pairs exactly at the cut are pruned.
inline SimilarityGraph build_graph(const DataMatrix& m, Orientation orientation,
                                   ThresholdSpec spec) {
    SimilarityGraph g;
    g.mode = spec.mode;
    auto vectors = usable_vectors(m, orientation, /*need_nonconstant=*/true, &g.dropped);
    if (vectors.size() < 2) throw error("fewer than 2 usable entities for a graph");
    const std::size_t n = vectors.front().size();

    std::vector<double> ratios;
    ratios.reserve(vectors.size());
    for (const auto& v : vectors) {
        g.nodes.push_back(v.label());
        ratios.push_back(norm_ratio(v));
    }

    switch (spec.mode) {
        case ThresholdMode::auto_upper:
        case ThresholdMode::auto_lower: {
            const auto profiles = norm_profiles(vectors);
            const auto report = compute_thresholds(profiles, n);
            g.threshold = (spec.mode == ThresholdMode::auto_upper) ? report.upper : report.lower;
            break;
        }
        case ThresholdMode::explicit_value: g.threshold = spec.value; break;
        case ThresholdMode::per_pair: break;
    }

    for (std::size_t i = 0; i < vectors.size(); ++i)
        for (std::size_t j = i + 1; j < vectors.size(); ++j) {
            const double cut = g.threshold ? *g.threshold
                                           : pair_threshold(ratios[i], ratios[j], n);
            const double c = cosine(vectors[i], vectors[j]);
            if (!(c > cut)) continue;
            const double r = pearson(vectors[i], vectors[j]);
            const EntityVector* x = &vectors[i];
            const EntityVector* y = &vectors[j];
            if (y->label() < x->label()) std::swap(x, y);
            g.edges.push_back({x->label(), y->label(), c, r, r < 0.0});
        }
    std::sort(g.edges.begin(), g.edges.end(), [](const GraphEdge& lhs, const GraphEdge& rhs) {
        return std::tie(lhs.source, lhs.target) < std::tie(rhs.source, rhs.target);
    });
    return g;
}

} // namespace simsheaf
