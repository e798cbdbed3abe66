#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "specht/subspace.hpp"

namespace specht {

/// Bijection of basis indices; the linear extension permutes coordinates.
using IndexBijection = std::function<std::uint64_t(std::uint64_t)>;

/// Smallest subspace containing the seeds and closed under every generator.
///
/// The support of the seeds is first closed under the generators (a BFS on
/// indices); all elimination then runs on a dense scratch matrix over those
/// columns. Vectors are spun meataxe-style: every inserted residual is
/// re-hit with each generator until no dimension growth remains.
Subspace orbit_closure(std::uint64_t ambient, PrimeField field,
                       std::span<const SparseRow> seeds,
                       std::span<const IndexBijection> generators);

/// True iff the image of every basis row under every generator stays inside.
bool is_invariant(const Subspace& space, std::span<const IndexBijection> generators);

}
