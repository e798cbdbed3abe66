#include "specht/permutation.hpp"

#include <numeric>
#include <stdexcept>

namespace specht {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int x : images_) {
        if (x < 0 || x >= degree() || seen[static_cast<std::size_t>(x)])
            throw std::invalid_argument("Permutation: not a bijection");
        seen[static_cast<std::size_t>(x)] = true;
    }
}

Permutation Permutation::identity(int degree) {
    std::vector<int> v(static_cast<std::size_t>(degree));
    std::iota(v.begin(), v.end(), 0);
    return Permutation(std::move(v));
}

Permutation Permutation::adjacent_transposition(int i, int degree) {
    return transposition(i, i + 1, degree);
}

Permutation Permutation::transposition(int a, int b, int degree) {
    if (a < 0 || b < 0 || a >= degree || b >= degree)
        throw std::invalid_argument("Permutation: transposition out of range");
    Permutation p = identity(degree);
    std::swap(p.images_[static_cast<std::size_t>(a)],
              p.images_[static_cast<std::size_t>(b)]);
    return p;
}

Permutation Permutation::compose(const Permutation& other) const {
    int d = std::max(degree(), other.degree());
    std::vector<int> v(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) v[static_cast<std::size_t>(i)] = (*this)(other(i));
    return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
    std::vector<int> v(images_.size());
    for (int i = 0; i < degree(); ++i)
        v[static_cast<std::size_t>(images_[static_cast<std::size_t>(i)])] = i;
    return Permutation(std::move(v));
}

int Permutation::sign() const {
    int inversions = 0;
    for (int i = 0; i < degree(); ++i)
        for (int j = i + 1; j < degree(); ++j)
            if ((*this)(i) > (*this)(j)) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

std::uint64_t factorial(int n) {
    if (n < 0 || n > 20) throw std::invalid_argument("factorial: out of range");
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

std::uint64_t perm_rank(const Permutation& p) {
    const int d = p.degree();
    std::uint64_t code = 0;
    for (int i = 0; i < d; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < d; ++j)
            if (p(j) < p(i)) ++smaller;
        code += static_cast<std::uint64_t>(smaller) * factorial(d - 1 - i);
    }
    return code;
}

Permutation perm_unrank(std::uint64_t code, int degree) {
    std::vector<int> pool(static_cast<std::size_t>(degree));
    std::iota(pool.begin(), pool.end(), 0);
    std::vector<int> v;
    v.reserve(pool.size());
    for (int i = degree - 1; i >= 0; --i) {
        std::uint64_t f = factorial(i);
        std::size_t k = static_cast<std::size_t>(code / f);
        code %= f;
        v.push_back(pool[k]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(k));
    }
    return Permutation(std::move(v));
}

}
