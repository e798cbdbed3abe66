#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace specht {

/// Weakly decreasing sequence of nonnegative integers. Trailing zeros are
/// trimmed on construction; operations that need an ambient length n pad
/// explicitly.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    /// Parses the textual syntax "3,1" (comma-separated, no brackets).
    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const { return parts_; }
    /// Sum of the parts.
    int size() const;
    /// Number of nonzero parts.
    int length() const { return static_cast<int>(parts_.size()); }
    /// 0-based part access; zero beyond the stored length.
    int part(int i) const {
        return i < length() ? parts_[static_cast<std::size_t>(i)] : 0;
    }
    /// Parts padded with zeros to length n; rejects n < length().
    std::vector<int> padded(int n) const;

    std::string to_string() const;

    bool operator==(const Partition&) const = default;
    /// Lexicographic comparison of part sequences.
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

private:
    std::vector<int> parts_;
};

Partition conjugate(const Partition& lambda);

/// Dominance: all partial sums of lambda majorize those of mu. Equal totals
/// are not required by the predicate.
bool dominates(const Partition& lambda, const Partition& mu);

/// True iff no positive value occurs >= p times among the parts.
bool is_p_regular(const Partition& lambda, std::uint32_t p);

/// Componentwise lambda + (i^n); rejects negative resulting parts and
/// partitions longer than n.
Partition shift(const Partition& lambda, int i, int n);

/// True iff the n-th part (1-based) vanishes, i.e. fewer than n nonzero parts.
bool is_degenerate(const Partition& lambda, int n);

/// Fundamental-alcove membership: lambda_1 - lambda_n <= p - n. Requires n < p.
bool in_C0(const Partition& lambda, std::uint32_t p, int n);

/// Base-p digits, least significant first, no trailing zeros (empty for 0).
struct PAdicExpansion {
    std::uint32_t p = 2;
    std::vector<std::uint32_t> digits;

    std::uint64_t value() const;
    /// Digit at position s, zero beyond the stored length.
    std::uint32_t digit(std::size_t s) const {
        return s < digits.size() ? digits[s] : 0;
    }
};

PAdicExpansion p_adic(std::uint64_t m, std::uint32_t p);

/// Number of standard Young tableaux of the given shape. Computed by the
/// hook-length product; for |lambda| <= 10 an exhaustive corner-removal
/// enumeration is run as well and the two must agree.
std::uint64_t count_standard_tableaux(const Partition& lambda);

/// The enumeration branch on its own (one count per removal chain).
std::uint64_t count_standard_tableaux_by_enumeration(const Partition& lambda);

/// All partitions of r into at most n parts, in decreasing lexicographic
/// order.
std::vector<Partition> enumerate_partitions(int r, int n);

}
