#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "specht/matrix.hpp"
#include "specht/prime_field.hpp"

namespace specht {

struct SparseEntry {
    std::uint64_t index;
    std::uint32_t value;

    bool operator==(const SparseEntry&) const = default;
};

/// Coefficient vector stored as (index, value) pairs with strictly
/// increasing indices and nonzero values.
using SparseRow = std::vector<SparseEntry>;

SparseRow sparse_from_dense(std::span<const std::uint32_t> dense);
std::vector<std::uint32_t> dense_from_sparse(const SparseRow& row, std::uint64_t ambient);

/// A subspace of GF(p)^ambient held in canonical reduced-row-echelon form:
/// rows nonzero, pivots strictly increasing with entry 1, pivot columns
/// otherwise zero. Two subspaces are equal as sets iff their bases compare
/// equal, so set equality is representation equality.
///
/// Rows are stored sparsely; elimination runs on a dense scratch matrix over
/// the union of supports, so ambient dimension only bounds index values.
class Subspace {
public:
    static Subspace zero(std::uint64_t ambient, PrimeField field);
    static Subspace full(std::uint64_t ambient, PrimeField field);
    static Subspace from_rows(std::uint64_t ambient, PrimeField field,
                              std::span<const SparseRow> rows);
    static Subspace from_matrix(const MatrixGF& m);

    std::uint64_t ambient() const { return ambient_; }
    const PrimeField& field() const { return field_; }
    std::size_t dim() const { return rows_.size(); }
    const std::vector<SparseRow>& rows() const { return rows_; }
    const std::vector<std::uint64_t>& pivots() const { return pivots_; }

    /// Residual of v after elimination against the basis; empty iff v lies
    /// in the subspace.
    SparseRow reduce(SparseRow v) const;

    bool contains(const SparseRow& v) const;
    bool contains(const Subspace& other) const;

    Subspace sum(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;

    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && field_ == o.field_ && rows_ == o.rows_;
    }

private:
    Subspace(std::uint64_t ambient, PrimeField field)
        : ambient_(ambient), field_(field) {}

    void check_compatible(const Subspace& other) const;

    std::uint64_t ambient_;
    PrimeField field_;
    std::vector<SparseRow> rows_;
    std::vector<std::uint64_t> pivots_;
};

/// {x in GF(p)^domain_dim : M x in W}, where column(j) yields the j-th
/// column of M as a vector in W's ambient space. Computed as the kernel of
/// the composite "apply M, then eliminate against W".
Subspace preimage(std::uint64_t domain_dim,
                  const std::function<SparseRow(std::uint64_t)>& column,
                  const Subspace& w);

/// Spec'd matrix form: {x : map x in W} with map given densely.
Subspace preimage(const MatrixGF& map, const Subspace& w);

/// Row space of a matrix together with its rank.
struct RowSpace {
    Subspace space;
    std::size_t rank;
};
RowSpace row_space(const MatrixGF& m);

/// Null space {v : m v = 0} as a canonical subspace.
Subspace kernel_space(const MatrixGF& m);

}
