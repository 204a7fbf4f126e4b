#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "simsheaf/error.hpp"

namespace simsheaf {

/// A labeled vector of non-negative coordinates.  Negative or non-finite
/// coordinates are rejected at construction; zeros are allowed (uncited
/// entities show up as all-zero vectors and are filtered downstream).
class EntityVector {
public:
    EntityVector(std::string label, std::vector<double> coords)
        : label_(std::move(label)), coords_(std::move(coords)) {
        if (coords_.size() < 2)
            throw error("entity vector '" + label_ + "' needs at least 2 coordinates, got " +
                        std::to_string(coords_.size()));
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            if (!std::isfinite(coords_[i]))
                throw error("entity vector '" + label_ + "' has non-finite coordinate at index " +
                            std::to_string(i));
            if (coords_[i] < 0.0)
                throw error("entity vector '" + label_ + "' has negative coordinate at index " +
                            std::to_string(i));
        }
    }

    const std::string& label() const noexcept { return label_; }
    std::span<const double> coords() const noexcept { return coords_; }
    std::size_t size() const noexcept { return coords_.size(); }
    double operator[](std::size_t i) const noexcept { return coords_[i]; }

private:
    std::string label_;
    std::vector<double> coords_;
};

/// Sum of coordinates.
inline double l1_norm(const EntityVector& v) {
    double sum = 0.0;
    for (double x : v.coords()) sum += x;
    return sum;
}

/// Euclidean length.
inline double l2_norm(const EntityVector& v) {
    double sum = 0.0;
    for (double x : v.coords()) sum += x * x;
    return std::sqrt(sum);
}

inline bool is_zero(const EntityVector& v) {
    for (double x : v.coords())
        if (x != 0.0) return false;
    return true;
}

/// True iff all coordinates are equal (the zero vector counts as constant).
inline bool is_constant(const EntityVector& v) {
    const double first = v[0];
    for (double x : v.coords())
        if (x != first) return false;
    return true;
}

/// L1/L2 norm ratio.  Lies in [1, sqrt(n)] for any nonzero vector, with the
/// upper bound attained exactly by constant vectors; a binary vector with k
/// ones gives sqrt(k).
inline double norm_ratio(const EntityVector& v) {
    if (is_zero(v))
        throw error("undefined norm ratio: '" + v.label() + "' is the zero vector");
    const double ratio = l1_norm(v) / l2_norm(v);
    // rounding can land a hair under 1 for near-one-hot vectors
    return ratio < 1.0 ? 1.0 : ratio;
}

/// Per-entity norm summary used by the sheaf model and the threshold engine.
struct NormProfile {
    std::string label;
    double l1 = 0.0;
    double l2 = 0.0;
    double ratio = 0.0; ///< l1/l2, in [1, sqrt(n)]
    std::size_t n = 0;  ///< vector length
};

inline NormProfile norm_profile(const EntityVector& v) {
    return NormProfile{v.label(), l1_norm(v), l2_norm(v), norm_ratio(v), v.size()};
}

inline std::vector<NormProfile> norm_profiles(std::span<const EntityVector> vs) {
    std::vector<NormProfile> out;
    out.reserve(vs.size());
    for (const auto& v : vs) out.push_back(norm_profile(v));
    return out;
}

} // namespace simsheaf
