#include "specht/closure.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "specht/matrix.hpp"

namespace specht {

namespace {

struct LocalColumns {
    std::vector<std::uint64_t> cols;                       // sorted
    std::unordered_map<std::uint64_t, std::uint32_t> pos;  // index -> local

    std::uint32_t local(std::uint64_t idx) const { return pos.at(idx); }
};

LocalColumns close_support(std::span<const SparseRow> seeds,
                           std::span<const IndexBijection> generators) {
    LocalColumns lc;
    std::deque<std::uint64_t> queue;
    std::unordered_map<std::uint64_t, std::uint32_t> seen;
    for (const auto& s : seeds)
        for (const auto& e : s)
            if (seen.emplace(e.index, 0).second) queue.push_back(e.index);
    while (!queue.empty()) {
        std::uint64_t idx = queue.front();
        queue.pop_front();
        for (const auto& g : generators) {
            std::uint64_t j = g(idx);
            if (seen.emplace(j, 0).second) queue.push_back(j);
        }
    }
    lc.cols.reserve(seen.size());
    for (const auto& [idx, _] : seen) lc.cols.push_back(idx);
    std::sort(lc.cols.begin(), lc.cols.end());
    for (std::uint32_t i = 0; i < lc.cols.size(); ++i) lc.pos[lc.cols[i]] = i;
    return lc;
}

}  // namespace

Subspace orbit_closure(std::uint64_t ambient, PrimeField field,
                       std::span<const SparseRow> seeds,
                       std::span<const IndexBijection> generators) {
    LocalColumns lc = close_support(seeds, generators);
    const std::size_t width = lc.cols.size();

    // generator tables in local coordinates
    std::vector<std::vector<std::uint32_t>> tables;
    tables.reserve(generators.size());
    for (const auto& g : generators) {
        std::vector<std::uint32_t> t(width);
        for (std::size_t j = 0; j < width; ++j) t[j] = lc.local(g(lc.cols[j]));
        tables.push_back(std::move(t));
    }

    RrefAccumulator acc(field, width);
    std::deque<std::vector<std::uint32_t>> work;
    for (const auto& s : seeds) {
        std::vector<std::uint32_t> v(width, 0);
        for (const auto& e : s) v[lc.local(e.index)] = e.value;
        std::vector<std::uint32_t> reduced;
        if (acc.add(std::move(v), &reduced)) work.push_back(std::move(reduced));
    }
    while (!work.empty()) {
        std::vector<std::uint32_t> v = std::move(work.front());
        work.pop_front();
        for (const auto& t : tables) {
            std::vector<std::uint32_t> image(width, 0);
            for (std::size_t j = 0; j < width; ++j)
                if (v[j] != 0) image[t[j]] = v[j];
            std::vector<std::uint32_t> reduced;
            if (acc.add(std::move(image), &reduced)) work.push_back(std::move(reduced));
        }
    }

    std::vector<SparseRow> rows;
    rows.reserve(acc.dim());
    for (const auto& r : acc.rows()) {
        SparseRow sr;
        for (std::size_t j = 0; j < width; ++j)
            if (r[j] != 0) sr.push_back({lc.cols[j], r[j]});
        rows.push_back(std::move(sr));
    }
    return Subspace::from_rows(ambient, field, rows);
}

bool is_invariant(const Subspace& space, std::span<const IndexBijection> generators) {
    for (const auto& row : space.rows()) {
        for (const auto& g : generators) {
            SparseRow image;
            image.reserve(row.size());
            for (const auto& e : row) image.push_back({g(e.index), e.value});
            std::sort(image.begin(), image.end(),
                      [](const SparseEntry& a, const SparseEntry& b) {
                          return a.index < b.index;
                      });
            if (!space.contains(image)) return false;
        }
    }
    return true;
}

}
