#include "specht/subspace.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace specht {

SparseRow sparse_from_dense(std::span<const std::uint32_t> dense) {
    SparseRow out;
    for (std::size_t i = 0; i < dense.size(); ++i)
        if (dense[i] != 0) out.push_back({i, dense[i]});
    return out;
}

std::vector<std::uint32_t> dense_from_sparse(const SparseRow& row, std::uint64_t ambient) {
    std::vector<std::uint32_t> out(ambient, 0);
    for (const auto& e : row) out[e.index] = e.value;
    return out;
}

namespace {

// Sorted union of the supports of a family of sparse rows.
std::vector<std::uint64_t> support_union(std::span<const SparseRow> rows) {
    std::vector<std::uint64_t> cols;
    for (const auto& r : rows)
        for (const auto& e : r) cols.push_back(e.index);
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    return cols;
}

std::vector<std::uint32_t> compress(const SparseRow& row,
                                    const std::vector<std::uint64_t>& cols) {
    std::vector<std::uint32_t> out(cols.size(), 0);
    for (const auto& e : row) {
        auto it = std::lower_bound(cols.begin(), cols.end(), e.index);
        out[static_cast<std::size_t>(it - cols.begin())] = e.value;
    }
    return out;
}

SparseRow expand(const std::vector<std::uint32_t>& dense,
                 const std::vector<std::uint64_t>& cols) {
    SparseRow out;
    for (std::size_t j = 0; j < dense.size(); ++j)
        if (dense[j] != 0) out.push_back({cols[j], dense[j]});
    return out;
}

}  // namespace

Subspace Subspace::zero(std::uint64_t ambient, PrimeField field) {
    return Subspace(ambient, field);
}

Subspace Subspace::full(std::uint64_t ambient, PrimeField field) {
    Subspace s(ambient, field);
    s.rows_.reserve(ambient);
    s.pivots_.reserve(ambient);
    for (std::uint64_t i = 0; i < ambient; ++i) {
        s.rows_.push_back({{i, 1}});
        s.pivots_.push_back(i);
    }
    return s;
}

Subspace Subspace::from_rows(std::uint64_t ambient, PrimeField field,
                             std::span<const SparseRow> rows) {
    for (const auto& r : rows)
        for (const auto& e : r)
            if (e.index >= ambient)
                throw std::invalid_argument("Subspace: index out of range");
    std::vector<std::uint64_t> cols = support_union(rows);
    RrefAccumulator acc(field, cols.size());
    for (const auto& r : rows) acc.add(compress(r, cols));
    Subspace s(ambient, field);
    for (std::size_t i = 0; i < acc.dim(); ++i) {
        s.rows_.push_back(expand(acc.rows()[i], cols));
        s.pivots_.push_back(cols[acc.pivots()[i]]);
    }
    return s;
}

Subspace Subspace::from_matrix(const MatrixGF& m) {
    std::vector<SparseRow> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        rows.push_back(sparse_from_dense(std::span(m.row(i), m.cols())));
    return from_rows(m.cols(), m.field(), rows);
}

SparseRow Subspace::reduce(SparseRow v) const {
    // merge-subtract basis rows whose pivot appears in v
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        auto it = std::lower_bound(
            v.begin(), v.end(), pivots_[k],
            [](const SparseEntry& e, std::uint64_t idx) { return e.index < idx; });
        if (it == v.end() || it->index != pivots_[k]) continue;
        const std::uint32_t c = it->value;
        const SparseRow& b = rows_[k];
        SparseRow out;
        out.reserve(v.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < v.size() || j < b.size()) {
            if (j == b.size() || (i < v.size() && v[i].index < b[j].index)) {
                out.push_back(v[i++]);
            } else if (i == v.size() || b[j].index < v[i].index) {
                std::uint32_t x = field_.neg(field_.mul(c, b[j].value));
                if (x != 0) out.push_back({b[j].index, x});
                ++j;
            } else {
                std::uint32_t x = field_.sub(v[i].value, field_.mul(c, b[j].value));
                if (x != 0) out.push_back({v[i].index, x});
                ++i;
                ++j;
            }
        }
        v = std::move(out);
    }
    return v;
}

bool Subspace::contains(const SparseRow& v) const {
    return reduce(v).empty();
}

bool Subspace::contains(const Subspace& other) const {
    check_compatible(other);
    for (const auto& r : other.rows_)
        if (!contains(r)) return false;
    return true;
}

void Subspace::check_compatible(const Subspace& other) const {
    if (ambient_ != other.ambient_ || field_ != other.field_)
        throw std::invalid_argument("Subspace: ambient dimension or modulus mismatch");
}

Subspace Subspace::sum(const Subspace& other) const {
    check_compatible(other);
    std::vector<SparseRow> all = rows_;
    all.insert(all.end(), other.rows_.begin(), other.rows_.end());
    return from_rows(ambient_, field_, all);
}

Subspace Subspace::intersect(const Subspace& other) const {
    check_compatible(other);
    const std::size_t da = rows_.size(), db = other.rows_.size();
    if (da == 0 || db == 0) return zero(ambient_, field_);

    // Columns of C are the basis vectors of A followed by those of B;
    // kernel elements (alpha, beta) satisfy sum alpha_i a_i = sum beta_j b_j.
    std::vector<SparseRow> both = rows_;
    both.insert(both.end(), other.rows_.begin(), other.rows_.end());
    std::vector<std::uint64_t> cols = support_union(both);

    MatrixGF c(field_, cols.size(), da + db);
    for (std::size_t i = 0; i < da; ++i) {
        auto d = compress(rows_[i], cols);
        for (std::size_t s = 0; s < cols.size(); ++s) c.at(s, i) = d[s];
    }
    for (std::size_t j = 0; j < db; ++j) {
        auto d = compress(other.rows_[j], cols);
        for (std::size_t s = 0; s < cols.size(); ++s)
            c.at(s, da + j) = field_.neg(d[s]);
    }
    MatrixGF k = kernel(c);

    std::vector<SparseRow> gens;
    for (std::size_t t = 0; t < k.rows(); ++t) {
        std::vector<std::uint32_t> v(cols.size(), 0);
        for (std::size_t i = 0; i < da; ++i) {
            std::uint32_t a = k.at(t, i);
            if (a == 0) continue;
            auto d = compress(rows_[i], cols);
            for (std::size_t s = 0; s < cols.size(); ++s)
                v[s] = field_.add(v[s], field_.mul(a, d[s]));
        }
        gens.push_back(expand(v, cols));
    }
    return from_rows(ambient_, field_, gens);
}

Subspace preimage(std::uint64_t domain_dim,
                  const std::function<SparseRow(std::uint64_t)>& column,
                  const Subspace& w) {
    // Residual columns of "apply map, eliminate against W"; the kernel of
    // that matrix is exactly the preimage.
    std::vector<SparseRow> residuals;
    residuals.reserve(domain_dim);
    for (std::uint64_t j = 0; j < domain_dim; ++j)
        residuals.push_back(w.reduce(column(j)));

    std::vector<std::uint64_t> sup = support_union(residuals);
    MatrixGF r(w.field(), sup.size(), domain_dim);
    for (std::uint64_t j = 0; j < domain_dim; ++j) {
        for (const auto& e : residuals[j]) {
            auto it = std::lower_bound(sup.begin(), sup.end(), e.index);
            r.at(static_cast<std::size_t>(it - sup.begin()), j) = e.value;
        }
    }
    return kernel_space(r);
}

Subspace preimage(const MatrixGF& map, const Subspace& w) {
    if (map.rows() != w.ambient())
        throw std::invalid_argument("preimage: map target does not match W ambient");
    return preimage(map.cols(),
                    [&](std::uint64_t j) {
                        SparseRow col;
                        for (std::size_t i = 0; i < map.rows(); ++i)
                            if (map.at(i, j) != 0) col.push_back({i, map.at(i, j)});
                        return col;
                    },
                    w);
}

RowSpace row_space(const MatrixGF& m) {
    Subspace s = Subspace::from_matrix(m);
    std::size_t r = s.dim();
    return {std::move(s), r};
}

Subspace kernel_space(const MatrixGF& m) {
    return Subspace::from_matrix(kernel(m));
}

}
