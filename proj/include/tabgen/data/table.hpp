#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "tabgen/data/schema.hpp"
#include "tabgen/errors.hpp"

namespace tabgen {

// Mixed-type N x (D+1) table. Numerical cells hold reals, categorical cells
// hold ordinal codes in [0, C_j). Missing cells are NaN. The target is the
// last column.
struct TableDataset {
    std::vector<double> values;  // row-major, n_rows x n_cols
    Schema schema;

    TableDataset() = default;
    TableDataset(std::size_t rows, Schema s) : values(rows * s.size(), 0.0), schema(std::move(s)) {}

    std::size_t n_rows() const { return schema.empty() ? 0 : values.size() / schema.size(); }
    std::size_t n_cols() const { return schema.size(); }
    std::size_t target_index() const { return schema.size() - 1; }

    double& at(std::size_t row, std::size_t col) { return values[row * n_cols() + col]; }
    double at(std::size_t row, std::size_t col) const { return values[row * n_cols() + col]; }

    void validate() const {
        validate_schema(schema);
        if (n_cols() < 2) throw SchemaError("dataset needs at least one feature plus the target");
        if (n_rows() < 1) throw SchemaError("dataset must contain at least one row");
        if (values.size() != n_rows() * n_cols()) throw ShapeError("value buffer does not match n_rows * n_cols");
        for (std::size_t j = 0; j < n_cols(); ++j) {
            if (!schema[j].is_categorical()) continue;
            double card = static_cast<double>(schema[j].cardinality());
            for (std::size_t i = 0; i < n_rows(); ++i) {
                double v = at(i, j);
                if (is_missing(v)) continue;
                if (v < 0.0 || v >= card || v != std::floor(v))
                    throw SchemaError("categorical cell (" + std::to_string(i) + "," + std::to_string(j) +
                                      ") out of range for feature '" + schema[j].name + "'");
            }
        }
    }

    bool has_missing() const {
        for (double v : values)
            if (is_missing(v)) return true;
        return false;
    }

    TableDataset select_rows(const std::vector<std::size_t>& idx) const {
        TableDataset out(idx.size(), schema);
        for (std::size_t r = 0; r < idx.size(); ++r)
            for (std::size_t c = 0; c < n_cols(); ++c) out.at(r, c) = at(idx[r], c);
        return out;
    }

    std::uint64_t content_hash() const {
        std::uint64_t h = schema_hash(schema);
        return fnv1a(values.data(), values.size() * sizeof(double), h);
    }
};

inline void require_same_schema(const TableDataset& a, const TableDataset& b, const char* what) {
    if (a.n_cols() != b.n_cols()) throw SchemaError(std::string(what) + ": column count mismatch");
    for (std::size_t j = 0; j < a.n_cols(); ++j) {
        if (a.schema[j].kind != b.schema[j].kind || a.schema[j].name != b.schema[j].name ||
            a.schema[j].category_labels != b.schema[j].category_labels)
            throw SchemaError(std::string(what) + ": schema mismatch at column '" + a.schema[j].name + "'");
    }
}

}  // namespace tabgen
