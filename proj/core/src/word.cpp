#include "specht/word.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace specht {

WordCodec::WordCodec(int n, int r) : n(n), r(r) {
    if (n < 1 || r < 0) throw std::invalid_argument("WordCodec: need n >= 1, r >= 0");
    place_.assign(static_cast<std::size_t>(r), 1);
    for (int t = r - 2; t >= 0; --t)
        place_[static_cast<std::size_t>(t)] =
            place_[static_cast<std::size_t>(t + 1)] * static_cast<std::uint64_t>(n);
    dim_ = r == 0 ? 1 : place_[0] * static_cast<std::uint64_t>(n);
}

std::uint64_t WordCodec::pack(const std::vector<int>& letters) const {
    if (static_cast<int>(letters.size()) != r)
        throw std::invalid_argument("WordCodec: wrong word length");
    std::uint64_t idx = 0;
    for (int t = 0; t < r; ++t) {
        int a = letters[static_cast<std::size_t>(t)];
        if (a < 1 || a > n) throw std::invalid_argument("WordCodec: letter out of range");
        idx += static_cast<std::uint64_t>(a - 1) * place_[static_cast<std::size_t>(t)];
    }
    return idx;
}

std::vector<int> WordCodec::unpack(std::uint64_t index) const {
    std::vector<int> letters(static_cast<std::size_t>(r));
    for (int t = 0; t < r; ++t) {
        letters[static_cast<std::size_t>(t)] =
            static_cast<int>(index / place_[static_cast<std::size_t>(t)] %
                             static_cast<std::uint64_t>(n)) + 1;
    }
    return letters;
}

std::vector<int> WordCodec::weight(std::uint64_t index) const {
    std::vector<int> w(static_cast<std::size_t>(n), 0);
    for (int t = 0; t < r; ++t) {
        std::uint64_t d = index / place_[static_cast<std::size_t>(t)] %
                          static_cast<std::uint64_t>(n);
        ++w[static_cast<std::size_t>(d)];
    }
    return w;
}

std::uint64_t WordCodec::act_index(const Permutation& pi, std::uint64_t index) const {
    if (pi.degree() > r)
        throw std::invalid_argument("act: permutation moves positions beyond r");
    std::uint64_t out = 0;
    for (int t = 0; t < r; ++t) {
        std::uint64_t d = index / place_[static_cast<std::size_t>(t)] %
                          static_cast<std::uint64_t>(n);
        out += d * place_[static_cast<std::size_t>(pi(t))];
    }
    return out;
}

void check_word_space_guard(int n, int r, bool override_guard) {
    if (override_guard) return;
    long double size = 1;
    for (int i = 0; i < r; ++i) {
        size *= n;
        if (size > static_cast<long double>(word_space_guard_limit))
            throw guard_error("word space dimension " + std::to_string(n) + "^" +
                              std::to_string(r) + " exceeds the resource guard (2^24); "
                              "pass the override to proceed");
    }
}

SparseRow act(const WordCodec& codec, const Permutation& pi, const SparseRow& v) {
    SparseRow out;
    out.reserve(v.size());
    for (const auto& e : v) out.push_back({codec.act_index(pi, e.index), e.value});
    std::sort(out.begin(), out.end(),
              [](const SparseEntry& a, const SparseEntry& b) { return a.index < b.index; });
    return out;
}

std::uint32_t form(const PrimeField& f, const SparseRow& a, const SparseRow& b) {
    std::uint32_t acc = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].index < b[j].index) ++i;
        else if (b[j].index < a[i].index) ++j;
        else {
            acc = f.add(acc, f.mul(a[i].value, b[j].value));
            ++i; ++j;
        }
    }
    return acc;
}

}
