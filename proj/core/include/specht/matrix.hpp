#pragma once

#include <cstdint>
#include <vector>

#include "specht/prime_field.hpp"

namespace specht {

/// Dense row-major matrix over GF(p).
class MatrixGF {
public:
    MatrixGF(PrimeField field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    const PrimeField& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::uint32_t& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    std::uint32_t at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::uint32_t* row(std::size_t i) { return a_.data() + i * cols_; }
    const std::uint32_t* row(std::size_t i) const { return a_.data() + i * cols_; }

    void set(std::size_t i, std::size_t j, std::int64_t value) {
        at(i, j) = field_.reduce(value);
    }

    bool operator==(const MatrixGF& o) const {
        return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

private:
    PrimeField field_;
    std::size_t rows_, cols_;
    std::vector<std::uint32_t> a_;
};

/// Maintains a basis in reduced row echelon form under row insertion.
/// Pivoting is deterministic (first nonzero column), so the final basis is
/// the canonical RREF of whatever rows were fed in, independent of order.
class RrefAccumulator {
public:
    RrefAccumulator(PrimeField field, std::size_t width)
        : field_(field), width_(width) {}

    /// Reduces `v` against the current basis. If a nonzero residual remains
    /// it is normalized, inserted, and back-eliminated from existing rows.
    /// Returns true iff the dimension grew. `reduced_out`, when non-null,
    /// receives the normalized residual (empty meaning zero).
    bool add(std::vector<std::uint32_t> v, std::vector<std::uint32_t>* reduced_out = nullptr);

    std::size_t dim() const { return rows_.size(); }
    std::size_t width() const { return width_; }
    const std::vector<std::vector<std::uint32_t>>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    const PrimeField& field() const { return field_; }

    /// Reduce a row against the basis without inserting.
    void reduce_in_place(std::vector<std::uint32_t>& v) const;

private:
    PrimeField field_;
    std::size_t width_;
    std::vector<std::vector<std::uint32_t>> rows_;  // sorted by pivot column
    std::vector<std::size_t> pivots_;
};

/// In-place reduction to canonical RREF; returns the pivot columns.
std::vector<std::size_t> rref(MatrixGF& m);

std::size_t rank(MatrixGF m);

/// Canonical basis (RREF rows) of the null space {v : m v = 0}.
MatrixGF kernel(const MatrixGF& m);

}
