#pragma once

#include <cmath>
#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "simsheaf/error.hpp"
#include "simsheaf/format.hpp"
#include "simsheaf/matrix.hpp"
#include "simsheaf/vector.hpp"

namespace simsheaf {

enum class SimilarityKind { cosine, pearson, jaccard, dice, pseudo_cosine };

inline std::string_view to_string(SimilarityKind k) {
    switch (k) {
        case SimilarityKind::cosine: return "cosine";
        case SimilarityKind::pearson: return "pearson";
        case SimilarityKind::jaccard: return "jaccard";
        case SimilarityKind::dice: return "dice";
        case SimilarityKind::pseudo_cosine: return "pseudo-cosine";
    }
    return "?";
}

inline SimilarityKind parse_similarity_kind(std::string_view name) {
    if (name == "cosine") return SimilarityKind::cosine;
    if (name == "pearson") return SimilarityKind::pearson;
    if (name == "jaccard") return SimilarityKind::jaccard;
    if (name == "dice") return SimilarityKind::dice;
    if (name == "pseudo-cosine" || name == "pseudocosine") return SimilarityKind::pseudo_cosine;
    throw error("unknown similarity measure '" + std::string(name) + "'");
}

namespace detail {

struct PairSums {
    std::size_t n = 0;
    double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
};

inline PairSums pair_sums(const EntityVector& x, const EntityVector& y) {
    if (x.size() != y.size())
        throw error("length mismatch: '" + x.label() + "' has " + std::to_string(x.size()) +
                    " coordinates, '" + y.label() + "' has " + std::to_string(y.size()));
    PairSums s;
    s.n = x.size();
    for (std::size_t i = 0; i < s.n; ++i) {
        const double xi = x[i], yi = y[i];
        s.sx += xi;
        s.sy += yi;
        s.sxx += xi * xi;
        s.syy += yi * yi;
        s.sxy += xi * yi;
    }
    return s;
}

inline void require_nonzero(const PairSums& s, const EntityVector& x, const EntityVector& y,
                            std::string_view measure) {
    if (s.sxx == 0.0) throw error(std::string(measure) + " undefined for zero vector '" + x.label() + "'");
    if (s.syy == 0.0) throw error(std::string(measure) + " undefined for zero vector '" + y.label() + "'");
}

} // namespace detail

/// Cosine similarity: the inner product over the product of the L2 norms.
inline double cosine(const EntityVector& x, const EntityVector& y) {
    const auto s = detail::pair_sums(x, y);
    detail::require_nonzero(s, x, y, "cosine");
    // One sqrt over the product keeps cosine(x, x) == 1.0 exactly.
    return s.sxy / std::sqrt(s.sxx * s.syy);
}

/// Pearson's r in moment form over the raw coordinate sums.
inline double pearson(const EntityVector& x, const EntityVector& y) {
    const auto s = detail::pair_sums(x, y);
    const double n = static_cast<double>(s.n);
    const double dx = n * s.sxx - s.sx * s.sx;
    const double dy = n * s.syy - s.sy * s.sy;
    if (dx <= 0.0) throw error("Pearson undefined for constant vector '" + x.label() + "'");
    if (dy <= 0.0) throw error("Pearson undefined for constant vector '" + y.label() + "'");
    return (n * s.sxy - s.sx * s.sy) / std::sqrt(dx * dy);
}

/// Jaccard index generalized to real vectors.
inline double jaccard(const EntityVector& x, const EntityVector& y) {
    const auto s = detail::pair_sums(x, y);
    detail::require_nonzero(s, x, y, "jaccard");
    // Sterbenz: for x == y the denominator collapses to sxy exactly.
    return s.sxy / (s.sxx + s.syy - s.sxy);
}

/// Dice coefficient generalized to real vectors.
inline double dice(const EntityVector& x, const EntityVector& y) {
    const auto s = detail::pair_sums(x, y);
    detail::require_nonzero(s, x, y, "dice");
    return 2.0 * s.sxy / (s.sxx + s.syy);
}

/// Inner product over the product of the L1 norms.
inline double pseudo_cosine(const EntityVector& x, const EntityVector& y) {
    const auto s = detail::pair_sums(x, y);
    if (s.sx == 0.0) throw error("pseudo-cosine undefined for zero vector '" + x.label() + "'");
    if (s.sy == 0.0) throw error("pseudo-cosine undefined for zero vector '" + y.label() + "'");
    return s.sxy / (s.sx * s.sy);
}

inline double similarity(SimilarityKind kind, const EntityVector& x, const EntityVector& y) {
    switch (kind) {
        case SimilarityKind::cosine: return cosine(x, y);
        case SimilarityKind::pearson: return pearson(x, y);
        case SimilarityKind::jaccard: return jaccard(x, y);
        case SimilarityKind::dice: return dice(x, y);
        case SimilarityKind::pseudo_cosine: return pseudo_cosine(x, y);
    }
    throw error("unknown similarity measure");
}

struct SimilarityMatrix {
    SimilarityKind kind;
    std::vector<std::string> labels;
    std::vector<std::vector<double>> values;
};

struct PairwiseResult {
    SimilarityMatrix matrix;
    std::vector<DroppedEntity> dropped;
};

/// Full symmetric similarity matrix over the usable entities of one axis.
/// Zero vectors are dropped for every measure; constant vectors only for
/// Pearson.  The upper triangle is computed once and mirrored.
inline PairwiseResult pairwise_matrix(const DataMatrix& m, SimilarityKind kind,
                                      Orientation orientation) {
    PairwiseResult out;
    out.matrix.kind = kind;
    const bool need_nonconstant = (kind == SimilarityKind::pearson);
    auto vectors = usable_vectors(m, orientation, need_nonconstant, &out.dropped);
    if (vectors.size() < 2)
        throw error("fewer than 2 usable entities for " + std::string(to_string(kind)));

    const std::size_t k = vectors.size();
    out.matrix.labels.reserve(k);
    for (const auto& v : vectors) out.matrix.labels.push_back(v.label());
    out.matrix.values.assign(k, std::vector<double>(k, 0.0));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j) {
            const double s = similarity(kind, vectors[i], vectors[j]);
            out.matrix.values[i][j] = s;
            out.matrix.values[j][i] = s;
        }
    return out;
}

/// Same labeled-matrix dialect as save_matrix; kept separate because
/// Pearson entries may be negative, which DataMatrix rejects.
inline void save_similarity(const SimilarityMatrix& s, std::ostream& out,
                            TableFormat fmt = TableFormat::csv) {
    const char sep = separator(fmt);
    for (const auto& label : s.labels) out << sep << csv_field(label, sep);
    out << '\n';
    for (std::size_t r = 0; r < s.labels.size(); ++r) {
        out << csv_field(s.labels[r], sep);
        for (std::size_t c = 0; c < s.labels.size(); ++c)
            out << sep << format_double(s.values[r][c]);
        out << '\n';
    }
}

} // namespace simsheaf
