#include "specht/matrix.hpp"

#include <algorithm>

namespace specht {

namespace {

// v -= c * w over GF(p)
void axpy_sub(const PrimeField& f, std::vector<std::uint32_t>& v,
              std::uint32_t c, const std::vector<std::uint32_t>& w) {
    if (c == 0) return;
    const std::uint32_t p = f.modulus();
    const std::uint64_t cc = p - c;  // v += (p-c) w
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (w[i] == 0) continue;
        v[i] = static_cast<std::uint32_t>((v[i] + cc * w[i]) % p);
    }
}

}  // namespace

void RrefAccumulator::reduce_in_place(std::vector<std::uint32_t>& v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        std::uint32_t c = v[pivots_[k]];
        if (c != 0) axpy_sub(field_, v, c, rows_[k]);
    }
}

bool RrefAccumulator::add(std::vector<std::uint32_t> v,
                          std::vector<std::uint32_t>* reduced_out) {
    reduce_in_place(v);
    std::size_t piv = width_;
    for (std::size_t j = 0; j < width_; ++j) {
        if (v[j] != 0) { piv = j; break; }
    }
    if (piv == width_) {
        if (reduced_out) reduced_out->clear();
        return false;
    }
    // normalize pivot to 1
    std::uint32_t s = field_.inv(v[piv]);
    if (s != 1)
        for (auto& x : v) x = field_.mul(x, s);
    // back-eliminate the new pivot column from existing rows
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        std::uint32_t c = rows_[k][piv];
        if (c != 0) axpy_sub(field_, rows_[k], c, v);
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv);
    std::size_t idx = static_cast<std::size_t>(pos - pivots_.begin());
    pivots_.insert(pos, piv);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), v);
    if (reduced_out) *reduced_out = std::move(v);
    return true;
}

std::vector<std::size_t> rref(MatrixGF& m) {
    RrefAccumulator acc(m.field(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        acc.add(std::vector<std::uint32_t>(m.row(i), m.row(i) + m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i < acc.dim())
            std::copy(acc.rows()[i].begin(), acc.rows()[i].end(), m.row(i));
        else
            std::fill(m.row(i), m.row(i) + m.cols(), 0u);
    }
    return acc.pivots();
}

std::size_t rank(MatrixGF m) {
    return rref(m).size();
}

MatrixGF kernel(const MatrixGF& m) {
    MatrixGF red = m;
    std::vector<std::size_t> pivots = rref(red);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : pivots) is_pivot[p] = true;

    const PrimeField& f = m.field();
    RrefAccumulator acc(f, n);
    for (std::size_t j = 0; j < n; ++j) {
        if (is_pivot[j]) continue;
        std::vector<std::uint32_t> v(n, 0);
        v[j] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k)
            v[pivots[k]] = f.neg(red.at(k, j));
        acc.add(std::move(v));
    }
    MatrixGF out(f, acc.dim(), n);
    for (std::size_t i = 0; i < acc.dim(); ++i)
        std::copy(acc.rows()[i].begin(), acc.rows()[i].end(), out.row(i));
    return out;
}

}
