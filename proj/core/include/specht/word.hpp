#pragma once

#include <cstdint>
#include <vector>

#include "specht/permutation.hpp"
#include "specht/prime_field.hpp"
#include "specht/subspace.hpp"

namespace specht {

/// Words are length-r sequences over {1,...,n}; word w encodes the monomial
/// x_1^{w(1)} ... x_r^{w(r)}, equivalently the simple tensor
/// v_{w(1)} x ... x v_{w(r)}. Basis order is lexicographic with letter 1
/// smallest, which coincides with numeric order of the packed index
/// (w(1) is the most significant digit).
struct WordCodec {
    int n = 1;
    int r = 0;

    WordCodec(int n, int r);

    std::uint64_t dim() const { return dim_; }

    std::uint64_t pack(const std::vector<int>& letters) const;
    std::vector<int> unpack(std::uint64_t index) const;

    /// Letter counts (#1s, ..., #ns); entries sum to r.
    std::vector<int> weight(std::uint64_t index) const;

    /// Index of pi . w, where (pi . w)(pi(t)) = w(t).
    std::uint64_t act_index(const Permutation& pi, std::uint64_t index) const;

private:
    std::uint64_t dim_ = 1;
    std::vector<std::uint64_t> place_;  // place_[t] = n^(r-1-t)
};

/// Default ceiling on the word-space dimension n^r; larger spaces are
/// refused unless the caller overrides.
inline constexpr std::uint64_t word_space_guard_limit = std::uint64_t{1} << 24;

/// Throws guard_error if n^r exceeds the limit (and the override is not set).
void check_word_space_guard(int n, int r, bool override_guard = false);

/// Linear extension of the place-permutation action to coefficient vectors.
SparseRow act(const WordCodec& codec, const Permutation& pi, const SparseRow& v);

/// The natural bilinear form: words are orthonormal.
std::uint32_t form(const PrimeField& f, const SparseRow& a, const SparseRow& b);

}
