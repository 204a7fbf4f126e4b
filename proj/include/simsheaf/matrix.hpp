#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "simsheaf/error.hpp"
#include "simsheaf/format.hpp"
#include "simsheaf/vector.hpp"

namespace simsheaf {

enum class Orientation { rows, columns };

inline const char* to_string(Orientation o) {
    return o == Orientation::rows ? "rows" : "columns";
}

enum class MatrixKind { occurrence, cooccurrence, unknown };

/// Dense labeled matrix of non-negative reals.  Rows are cases (e.g. citing
/// papers), columns are entities (e.g. authors).  Row labels are generated
/// ("row1", "row2", ...) when the source had none, so every matrix can be
/// serialized with a row-label column.
class DataMatrix {
public:
    DataMatrix(std::vector<std::string> row_labels,
               std::vector<std::string> col_labels,
               std::vector<std::vector<double>> values,
               MatrixKind kind_hint = MatrixKind::unknown)
        : row_labels_(std::move(row_labels)),
          col_labels_(std::move(col_labels)),
          values_(std::move(values)),
          kind_hint_(kind_hint) {
        if (values_.empty() || col_labels_.empty())
            throw error("empty matrix");
        if (row_labels_.empty()) {
            row_labels_.reserve(values_.size());
            for (std::size_t i = 0; i < values_.size(); ++i)
                row_labels_.push_back("row" + std::to_string(i + 1));
        }
        if (row_labels_.size() != values_.size())
            throw error("row label count (" + std::to_string(row_labels_.size()) +
                        ") does not match row count (" + std::to_string(values_.size()) + ")");
        for (std::size_t r = 0; r < values_.size(); ++r) {
            if (values_[r].size() != col_labels_.size())
                throw error("ragged matrix: row '" + row_labels_[r] + "' has " +
                            std::to_string(values_[r].size()) + " values, expected " +
                            std::to_string(col_labels_.size()));
            for (std::size_t c = 0; c < values_[r].size(); ++c) {
                const double v = values_[r][c];
                if (!std::isfinite(v))
                    throw error("non-finite value at row '" + row_labels_[r] + "', column '" +
                                col_labels_[c] + "'");
                if (v < 0.0)
                    throw error("negative value at row '" + row_labels_[r] + "', column '" +
                                col_labels_[c] + "'");
            }
        }
        check_unique(row_labels_, "row");
        check_unique(col_labels_, "column");
    }

    std::size_t rows() const noexcept { return values_.size(); }
    std::size_t cols() const noexcept { return col_labels_.size(); }
    const std::vector<std::string>& row_labels() const noexcept { return row_labels_; }
    const std::vector<std::string>& col_labels() const noexcept { return col_labels_; }
    const std::vector<std::vector<double>>& values() const noexcept { return values_; }
    double at(std::size_t r, std::size_t c) const { return values_.at(r).at(c); }
    MatrixKind kind_hint() const noexcept { return kind_hint_; }

    EntityVector row_vector(std::size_t r) const {
        return EntityVector(row_labels_.at(r), values_.at(r));
    }

    EntityVector column_vector(std::size_t c) const {
        std::vector<double> coords;
        coords.reserve(rows());
        for (std::size_t r = 0; r < rows(); ++r) coords.push_back(values_[r].at(c));
        return EntityVector(col_labels_.at(c), std::move(coords));
    }

private:
    static void check_unique(const std::vector<std::string>& labels, const char* axis) {
        std::unordered_set<std::string> seen;
        for (const auto& l : labels)
            if (!seen.insert(l).second)
                throw error(std::string("duplicate ") + axis + " label '" + l + "'");
    }

    std::vector<std::string> row_labels_;
    std::vector<std::string> col_labels_;
    std::vector<std::vector<double>> values_;
    MatrixKind kind_hint_;
};

/// All entity vectors along one axis, in axis order.
inline std::vector<EntityVector> entity_vectors(const DataMatrix& m, Orientation o) {
    std::vector<EntityVector> out;
    if (o == Orientation::rows) {
        out.reserve(m.rows());
        for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(m.row_vector(r));
    } else {
        out.reserve(m.cols());
        for (std::size_t c = 0; c < m.cols(); ++c) out.push_back(m.column_vector(c));
    }
    return out;
}

struct DroppedEntity {
    std::string label;
    std::string reason;
};

struct EntitySelection {
    std::vector<std::string> kept;
    std::vector<DroppedEntity> dropped;
};

/// Filters the vectors the downstream measures can digest: zero vectors are
/// always dropped, constant vectors too when Pearson is in play.
inline std::vector<EntityVector> usable_vectors(const DataMatrix& m, Orientation o,
                                                bool need_nonconstant,
                                                std::vector<DroppedEntity>* dropped = nullptr) {
    std::vector<EntityVector> kept;
    for (auto& v : entity_vectors(m, o)) {
        if (is_zero(v)) {
            if (dropped) dropped->push_back({v.label(), "zero vector"});
        } else if (need_nonconstant && is_constant(v)) {
            if (dropped) dropped->push_back({v.label(), "constant vector"});
        } else {
            kept.push_back(std::move(v));
        }
    }
    return kept;
}

inline EntitySelection usable_entities(const DataMatrix& m, Orientation o, bool need_nonconstant) {
    EntitySelection sel;
    for (const auto& v : usable_vectors(m, o, need_nonconstant, &sel.dropped))
        sel.kept.push_back(v.label());
    return sel;
}

inline DataMatrix transpose(const DataMatrix& m) {
    std::vector<std::vector<double>> t(m.cols(), std::vector<double>(m.rows(), 0.0));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) t[c][r] = m.values()[r][c];
    return DataMatrix(m.col_labels(), m.row_labels(), std::move(t), m.kind_hint());
}

/// Symmetric co-citation matrix of a binary occurrence matrix: cell (i, j)
/// counts the cases containing both entities; the diagonal counts the cases
/// containing entity i at all.
inline DataMatrix cocitation(const DataMatrix& occ) {
    if (occ.kind_hint() == MatrixKind::cooccurrence)
        throw error("matrix is already a co-occurrence matrix");
    for (std::size_t r = 0; r < occ.rows(); ++r)
        for (std::size_t c = 0; c < occ.cols(); ++c) {
            const double v = occ.values()[r][c];
            if (v != 0.0 && v != 1.0)
                throw error("occurrence matrix must be binary: value " + format_double(v) +
                            " at row '" + occ.row_labels()[r] + "', column '" +
                            occ.col_labels()[c] + "'");
        }
    const std::size_t k = occ.cols();
    std::vector<std::vector<double>> c(k, std::vector<double>(k, 0.0));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j) {
            double sum = 0.0;
            for (std::size_t r = 0; r < occ.rows(); ++r)
                sum += occ.values()[r][i] * occ.values()[r][j];
            c[i][j] = c[j][i] = sum;
        }
    return DataMatrix(occ.col_labels(), occ.col_labels(), std::move(c), MatrixKind::cooccurrence);
}

} // namespace simsheaf
