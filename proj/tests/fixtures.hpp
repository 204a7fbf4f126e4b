#pragma once

// Shared reference datasets and deterministic generators for the test
// binaries.

#include <array>
#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "simsheaf/matrix.hpp"
#include "simsheaf/vector.hpp"

namespace fixtures {

// Citation counts of the 24 entities in the reference occurrence matrix
// (279 cases).  Each entity's norm ratio is the square root of its count.
inline constexpr std::array<int, 24> kCitationCounts = {
    50, 60, 53, 55, 31, 64, 22, 50, 46, 54, 26, 24,
    30, 30, 18, 36, 18, 31, 36, 21, 23, 24, 26, 20};

// Norm ratios of the same 24 entities measured on the co-citation side
// (vectors of length 24).
inline constexpr std::array<double, 24> kCocitationRatios = {
    2.5032838, 2.4795703, 2.729457,  2.7337391, 2.8221626, 2.8986697,
    3.0789273, 2.4077981, 2.8747094, 2.7635278, 2.8295923, 2.556743,
    2.3184046, 2.4469432, 3.0858543, 2.920658,  2.517544,  2.5919129,
    2.8555919, 3.0331502, 2.6927563, 2.4845716, 2.4693658, 2.5086617};

inline std::string entity_label(std::size_t i) {
    return "a" + std::string(i + 1 < 10 ? "0" : "") + std::to_string(i + 1);
}

inline std::vector<simsheaf::NormProfile> cocitation_profiles() {
    std::vector<simsheaf::NormProfile> out;
    for (std::size_t i = 0; i < kCocitationRatios.size(); ++i)
        out.push_back({entity_label(i), 0.0, 0.0, kCocitationRatios[i], 24});
    return out;
}

// One co-citation row with l1 = 168 and l2 = sqrt(4504); its ratio is
// the published 2.5032838.
inline std::vector<double> sample_cocitation_row() {
    std::vector<double> v = {50, 30, 28, 12, 10};
    v.resize(24, 2.0);
    return v;
}

// 279-case binary occurrence matrix whose 24 columns carry the reference
// citation counts; column j holds its ones at rows (7j + t) mod 279.
inline simsheaf::DataMatrix synthetic_occurrence() {
    const std::size_t rows = 279;
    std::vector<std::string> col_labels;
    for (std::size_t j = 0; j < kCitationCounts.size(); ++j)
        col_labels.push_back(entity_label(j));
    std::vector<std::vector<double>> values(rows, std::vector<double>(col_labels.size(), 0.0));
    for (std::size_t j = 0; j < kCitationCounts.size(); ++j)
        for (int t = 0; t < kCitationCounts[j]; ++t)
            values[(7 * j + static_cast<std::size_t>(t)) % rows][j] = 1.0;
    return simsheaf::DataMatrix({}, col_labels, std::move(values),
                                simsheaf::MatrixKind::occurrence);
}

// Papers x authors toy dataset; column counts 5, 4, 3, 2 give four
// distinct norm ratios, so the envelope extremes are unambiguous.
inline simsheaf::DataMatrix toy_occurrence() {
    return simsheaf::DataMatrix(
        {"p1", "p2", "p3", "p4", "p5", "p6", "p7", "p8"}, {"A", "B", "C", "D"},
        {{1, 0, 0, 0},
         {1, 1, 0, 1},
         {1, 1, 0, 0},
         {1, 1, 1, 0},
         {1, 0, 1, 0},
         {0, 1, 0, 0},
         {0, 0, 1, 0},
         {0, 0, 0, 1}},
        simsheaf::MatrixKind::occurrence);
}

// Smallest interesting occurrence matrix: one shared case plus one
// exclusive case per column.  Its single column pair has cos = 0.5 and
// r = -0.5 exactly.
inline simsheaf::DataMatrix pair_occurrence() {
    return simsheaf::DataMatrix({}, {"A", "B"}, {{1, 1}, {1, 0}, {0, 1}},
                                simsheaf::MatrixKind::occurrence);
}

// Continuous positive entries: zero or constant columns cannot occur and
// norm ratios are almost surely pairwise distinct.
inline simsheaf::DataMatrix random_positive_matrix(std::size_t rows, std::size_t cols,
                                                   std::mt19937_64& rng) {
    std::uniform_real_distribution<double> dist(0.05, 10.0);
    std::vector<std::string> col_labels;
    for (std::size_t c = 0; c < cols; ++c) col_labels.push_back("c" + std::to_string(c + 1));
    std::vector<std::vector<double>> values(rows, std::vector<double>(cols, 0.0));
    for (auto& row : values)
        for (auto& v : row) v = dist(rng);
    return simsheaf::DataMatrix({}, std::move(col_labels), std::move(values),
                                simsheaf::MatrixKind::unknown);
}

inline simsheaf::DataMatrix random_binary_matrix(std::size_t rows, std::size_t cols,
                                                 double density, std::mt19937_64& rng) {
    std::bernoulli_distribution bit(density);
    std::vector<std::string> col_labels;
    for (std::size_t c = 0; c < cols; ++c) col_labels.push_back("c" + std::to_string(c + 1));
    std::vector<std::vector<double>> values(rows, std::vector<double>(cols, 0.0));
    for (auto& row : values)
        for (auto& v : row) v = bit(rng) ? 1.0 : 0.0;
    return simsheaf::DataMatrix({}, std::move(col_labels), std::move(values),
                                simsheaf::MatrixKind::occurrence);
}

// Random integer-valued vector; integer sums keep the norms exact, which
// the equal-norm identities rely on.
inline std::vector<double> random_int_coords(std::size_t n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> dist(0, 9);
    std::vector<double> v(n, 0.0);
    bool nonzero = false;
    for (auto& x : v) {
        x = static_cast<double>(dist(rng));
        if (x != 0.0) nonzero = true;
    }
    if (!nonzero) v[0] = 1.0;
    return v;
}

} // namespace fixtures
