#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace specht {

/// Permutation of {0,...,degree-1} in one-line notation: images[i] is the
/// image of i. Conceptually extends by fixed points beyond its degree.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int degree);
    /// The transposition (i, i+1), 0-based, of the given degree.
    static Permutation adjacent_transposition(int i, int degree);
    /// The transposition (a, b), 0-based.
    static Permutation transposition(int a, int b, int degree);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const {
        return i < degree() ? images_[static_cast<std::size_t>(i)] : i;
    }
    const std::vector<int>& images() const { return images_; }

    /// (this * other)(i) = this(other(i))
    Permutation compose(const Permutation& other) const;
    Permutation inverse() const;
    int sign() const;

    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> images_;
};

std::uint64_t factorial(int n);

/// Lexicographic (Lehmer code) rank of a permutation among all
/// permutations of its degree.
std::uint64_t perm_rank(const Permutation& p);
Permutation perm_unrank(std::uint64_t code, int degree);

}
