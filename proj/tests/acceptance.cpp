// Acceptance gate: ten numbered checks, one PASS or FAIL line each, nonzero
// exit when any check fails.  Expected values come from published reference
// tables or from independent brute-force recomputation, never from the code
// under test.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "fixtures.hpp"
#include "simsheaf/simsheaf.hpp"

namespace {

int failures = 0;

void report(int id, bool ok, const std::string& detail) {
    std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", id, detail.c_str());
    if (!ok) ++failures;
}

bool near(double value, double expected, double tol) {
    return std::abs(value - expected) <= tol;
}

bool ulp_within(double x, double y, int steps) {
    if (x == y) return true;
    for (int i = 0; i < steps; ++i) {
        x = std::nextafter(x, y);
        if (x == y) return true;
    }
    return false;
}

std::string fmt(double x) { return simsheaf::format_double(x); }

std::string read_file(const std::string& path, bool& ok) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        ok = false;
        return "";
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// Shared randomized sweep feeding checks 1 and 6.
struct SweepResult {
    long pairs = 0;
    double max_residual = 0.0;
    long upper_violations = 0;
    long boundary_breaks = 0;
    int matrices = 0;
};

SweepResult run_sweep() {
    SweepResult s;
    std::mt19937_64 rng(20260823);
    std::uniform_int_distribution<int> rows_dist(5, 50);
    std::uniform_int_distribution<int> cols_dist(3, 10);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto m = fixtures::random_positive_matrix(
            static_cast<std::size_t>(rows_dist(rng)), static_cast<std::size_t>(cols_dist(rng)),
            rng);
        const auto vectors =
            simsheaf::usable_vectors(m, simsheaf::Orientation::columns, true, nullptr);
        if (vectors.size() < 2) continue;
        const std::size_t n = vectors.front().size();
        std::vector<double> ratios;
        ratios.reserve(vectors.size());
        for (const auto& v : vectors) ratios.push_back(simsheaf::norm_ratio(v));

        for (std::size_t i = 0; i < vectors.size(); ++i)
            for (std::size_t j = i + 1; j < vectors.size(); ++j) {
                const double c = simsheaf::cosine(vectors[i], vectors[j]);
                const double r = simsheaf::pearson(vectors[i], vectors[j]);
                const auto line = simsheaf::line_params(ratios[i], ratios[j], n);
                s.max_residual =
                    std::max(s.max_residual, std::abs(r - simsheaf::predict_r(line, c)));
                const double cut = line.cos_at_r0;
                if (c > cut && !(r > -1e-10)) ++s.boundary_breaks;
                if (r > 0.0 && !(c > cut - 1e-10)) ++s.boundary_breaks;
                ++s.pairs;
            }

        const auto thresholds = simsheaf::compute_thresholds(m, simsheaf::Orientation::columns);
        s.upper_violations += static_cast<long>(
            simsheaf::verify_guarantee(m, simsheaf::Orientation::columns, thresholds.upper)
                .violations.size());
        ++s.matrices;
    }
    return s;
}

void check_1(const SweepResult& s) {
    const bool ok = s.matrices == 1000 && s.pairs > 0 && s.max_residual <= 1e-10;
    report(1, ok,
           "line identity on " + std::to_string(s.matrices) + " random matrices, " +
               std::to_string(s.pairs) + " pairs, max residual " + fmt(s.max_residual) +
               " (limit 1e-10)");
}

void check_2() {
    const auto m = fixtures::synthetic_occurrence();
    const auto vectors =
        simsheaf::usable_vectors(m, simsheaf::Orientation::columns, true, nullptr);
    const auto env = simsheaf::envelope(simsheaf::norm_profiles(vectors), 279);
    const bool ok = near(env.ab_min, 18.973666, 1e-6) && near(env.ab_max, 61.967734, 1e-6);
    report(2, ok,
           "envelope extremes on the 279-case corpus: ab_min " + fmt(env.ab_min) +
               " (want 18.973666), ab_max " + fmt(env.ab_max) + " (want 61.967734)");
}

void check_3() {
    const auto m = fixtures::synthetic_occurrence();
    const auto vectors =
        simsheaf::usable_vectors(m, simsheaf::Orientation::columns, true, nullptr);
    const auto env = simsheaf::envelope(simsheaf::norm_profiles(vectors), 279);

    const double tol = 1e-5;
    bool ok = true;
    const double min_cos[] = {0.0, 0.1, 0.2, 0.3, 0.4, 0.5};
    const double min_want[] = {-0.0729762, 0.0343323, 0.1416408,
                               0.2489421,  0.3562577, 0.4635662};
    for (int i = 0; i < 6; ++i)
        ok = ok && near(simsheaf::predict_r(env.min_line, min_cos[i]), min_want[i], tol);
    const double max_cos[] = {0.2, 0.3, 0.4, 0.5};
    const double max_want[] = {-0.028424, 0.1001529, 0.2287298, 0.3573067};
    for (int i = 0; i < 4; ++i)
        ok = ok && near(simsheaf::predict_r(env.max_line, max_cos[i]), max_want[i], tol);
    ok = ok && near(env.min_line.cos_at_r0, 0.068006, tol);
    ok = ok && near(env.max_line.cos_at_r0, 0.2221066, tol);
    ok = ok && near(env.max_line.r_at_cos0, -0.285580, tol);
    report(3, ok,
           "reference lines at n=279: min line " + fmt(env.min_line.r_at_cos0) + " .. " +
               fmt(simsheaf::predict_r(env.min_line, 0.5)) + ", max line at cos 0 " +
               fmt(env.max_line.r_at_cos0) + " (want -0.285580)");
}

void check_4() {
    const auto profiles = fixtures::cocitation_profiles();
    const auto env = simsheaf::envelope(profiles, 24);

    const double tol = 2e-5;
    bool ok = true;
    ok = ok && near(env.min_line.r_at_cos0, -0.3031765, tol);
    ok = ok && near(env.max_line.r_at_cos0, -0.6553024, tol);
    ok = ok && near(env.min_line.cos_at_r0, 0.2325928, 2e-6);
    ok = ok && near(env.max_line.cos_at_r0, 0.39588, tol);
    const double grid[] = {0.1, 0.2, 0.4, 0.6, 0.8};
    const double min_want[] = {-0.1728293, -0.0424834, 0.2182085, 0.4789003, 0.7395922};
    const double max_want[] = {-0.4897716, -0.3242411, 0.0068199, 0.3378808, 0.6689418};
    for (int i = 0; i < 5; ++i) {
        ok = ok && near(simsheaf::predict_r(env.min_line, grid[i]), min_want[i], tol);
        ok = ok && near(simsheaf::predict_r(env.max_line, grid[i]), max_want[i], tol);
    }
    report(4, ok,
           "reference lines at n=24: r bounds at cos 0 " + fmt(env.min_line.r_at_cos0) + " / " +
               fmt(env.max_line.r_at_cos0) + ", zero crossings " + fmt(env.min_line.cos_at_r0) +
               " / " + fmt(env.max_line.cos_at_r0));
}

void check_5() {
    const auto line = simsheaf::line_params(std::sqrt(18.0), std::sqrt(22.0), 279);
    const double crossing = simsheaf::invert_cos(line, 0.0);
    const double predicted = simsheaf::predict_r(line, 0.101);
    const bool ok = near(crossing, 0.0713250, 1e-6) && near(predicted, 0.0320, 2e-3);
    report(5, ok,
           "single-line spot check: zero crossing " + fmt(crossing) +
               " (want 0.0713250), r at cos 0.101 = " + fmt(predicted) + " (want 0.0320)");
}

void check_6(const SweepResult& s) {
    const bool ok = s.matrices == 1000 && s.upper_violations == 0 && s.boundary_breaks == 0;
    report(6, ok,
           "threshold guarantee on " + std::to_string(s.matrices) + " random matrices: " +
               std::to_string(s.upper_violations) + " violations above the upper cut, " +
               std::to_string(s.boundary_breaks) + " boundary breaks");
}

void check_7() {
    std::mt19937_64 rng(424242);
    bool ok = true;
    double worst = 0.0;
    int pairs = 0;
    for (int trial = 0; trial < 120; ++trial) {
        const std::size_t n = 5 + static_cast<std::size_t>(trial % 36);
        auto coords = fixtures::random_int_coords(n, rng);
        auto shuffled = coords;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        const simsheaf::EntityVector x("x", coords), y("y", shuffled);
        const double c = simsheaf::cosine(x, y);
        const double j = simsheaf::jaccard(x, y);
        const double d = simsheaf::dice(x, y);
        worst = std::max({worst, std::abs(j - c / (2.0 - c)), std::abs(d - c)});
        ok = ok && near(j, c / (2.0 - c), 1e-12) && near(d, c, 1e-12);
        ++pairs;
    }
    double grid_worst = 0.0;
    for (int i = 0; i <= 1000; ++i) {
        const double j = i / 1000.0;
        const double back = simsheaf::jaccard_from_cos(simsheaf::cos_from_jaccard(j));
        grid_worst = std::max(grid_worst, std::abs(back - j));
    }
    ok = ok && grid_worst <= 1e-14;
    report(7, ok,
           "equal-norm identities on " + std::to_string(pairs) + " pairs (worst " + fmt(worst) +
               "), transform round trip worst " + fmt(grid_worst));
}

void check_8() {
    bool ok = true;
    double worst = 0.0;
    long checked = 0;
    const std::size_t sizes[] = {4, 10, 24, 100, 279, 1000};
    const double fractions[] = {0.05, 0.25, 0.5, 0.75, 0.95};
    for (std::size_t n : sizes)
        for (double fa : fractions)
            for (double fb : fractions) {
                const double top = std::sqrt(static_cast<double>(n));
                const auto line = simsheaf::line_params(1.0 + fa * (top - 1.0),
                                                        1.0 + fb * (top - 1.0), n);
                for (int i = 0; i <= 20; ++i) {
                    const double c = i / 20.0;
                    const double r = simsheaf::predict_r(line, c);
                    if (r < -1.0 || r > 1.0) continue;
                    const double back = simsheaf::invert_cos(line, r);
                    worst = std::max(worst, std::abs(back - c));
                    ok = ok && near(back, c, 1e-12);
                    ++checked;
                }
            }
    report(8, ok,
           "predict/invert round trip on " + std::to_string(checked) + " grid points, worst " +
               fmt(worst) + " (limit 1e-12)");
}

void check_9() {
    std::mt19937_64 rng(99991);
    std::uniform_int_distribution<int> rows_dist(2, 20);
    std::uniform_int_distribution<int> cols_dist(2, 10);
    const double densities[] = {0.2, 0.5, 0.8};
    bool ok = true;
    int matrices = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const auto m = fixtures::random_binary_matrix(
            static_cast<std::size_t>(rows_dist(rng)), static_cast<std::size_t>(cols_dist(rng)),
            densities[trial % 3], rng);
        const auto cc = simsheaf::cocitation(m);
        for (std::size_t i = 0; i < m.cols(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) {
                double sum = 0.0;
                for (std::size_t r = 0; r < m.rows(); ++r) sum += m.at(r, i) * m.at(r, j);
                ok = ok && cc.at(i, j) == sum;
            }
        for (std::size_t i = 0; i < m.cols(); ++i) {
            const auto column = m.column_vector(i);
            if (simsheaf::is_zero(column)) continue;
            ok = ok && ulp_within(simsheaf::norm_ratio(column), std::sqrt(cc.at(i, i)), 4);
        }
        ++matrices;
    }
    report(9, ok,
           "co-occurrence counts and diagonal ratios on " + std::to_string(matrices) +
               " binary matrices");
}

void check_10() {
    std::ifstream toy(std::string(SIMSHEAF_DATA_DIR) + "/toy_occurrence.csv",
                      std::ios::binary);
    const auto m = simsheaf::load_matrix(toy, simsheaf::TableFormat::csv);

    const auto emit_all = [&m] {
        const auto g = simsheaf::build_graph(
            m, simsheaf::Orientation::columns,
            simsheaf::ThresholdSpec{simsheaf::ThresholdMode::auto_lower, 0.0});
        std::ostringstream edges, dot, pajek;
        simsheaf::emit_edgelist(g, edges);
        simsheaf::emit_dot(g, dot);
        simsheaf::emit_pajek(g, pajek);
        const auto points = simsheaf::cloud(m, simsheaf::Orientation::columns).points;
        const auto vectors =
            simsheaf::usable_vectors(m, simsheaf::Orientation::columns, true, nullptr);
        const auto env = simsheaf::envelope(simsheaf::norm_profiles(vectors), 8);
        return std::vector<std::string>{edges.str(), dot.str(), pajek.str(),
                                        simsheaf::emit_cloud(points, env).csv};
    };
    const auto first = emit_all();
    const auto second = emit_all();
    bool ok = first == second;

    const char* golden_names[] = {"toy_edges.csv", "toy_graph.dot", "toy_graph.net",
                                  "toy_cloud.csv"};
    std::string mismatch;
    for (int i = 0; i < 4; ++i) {
        bool readable = true;
        const auto golden =
            read_file(std::string(SIMSHEAF_GOLDEN_DIR) + "/" + golden_names[i], readable);
        if (!readable || golden != first[static_cast<std::size_t>(i)]) {
            ok = false;
            mismatch += std::string(" ") + golden_names[i];
        }
    }

    const auto upper = simsheaf::build_graph(
        m, simsheaf::Orientation::columns,
        simsheaf::ThresholdSpec{simsheaf::ThresholdMode::auto_upper, 0.0});
    for (const auto& e : upper.edges) ok = ok && !e.negative;

    std::set<std::pair<std::string, std::string>> previous;
    bool first_cut = true;
    for (int i = 0; i <= 9; ++i) {
        const auto g = simsheaf::build_graph(
            m, simsheaf::Orientation::columns,
            simsheaf::ThresholdSpec{simsheaf::ThresholdMode::explicit_value, i / 10.0});
        std::set<std::pair<std::string, std::string>> current;
        for (const auto& e : g.edges) current.insert({e.source, e.target});
        if (!first_cut)
            for (const auto& e : current) ok = ok && previous.count(e) == 1;
        previous = std::move(current);
        first_cut = false;
    }

    report(10, ok,
           mismatch.empty() ? "byte-stable golden exports, clean upper cut, monotone pruning"
                            : "golden mismatch:" + mismatch);
}

} // namespace

int main() {
    const auto sweep = run_sweep();
    check_1(sweep);
    check_2();
    check_3();
    check_4();
    check_5();
    check_6(sweep);
    check_7();
    check_8();
    check_9();
    check_10();
    return failures == 0 ? 0 : 1;
}
