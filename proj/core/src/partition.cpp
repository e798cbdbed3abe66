#include "specht/partition.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <stdexcept>

#include "specht/prime_field.hpp"

namespace specht {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0)
            throw std::invalid_argument("Partition: negative part");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts not weakly decreasing");
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition Partition::parse(std::string_view text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(
            pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || ptr != tok.data() + tok.size())
            throw std::invalid_argument("Partition: malformed part '" +
                                        std::string(tok) + "'");
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::vector<int> Partition::padded(int n) const {
    if (n < length())
        throw std::invalid_argument("Partition: has more than n parts");
    std::vector<int> out = parts_;
    out.resize(static_cast<std::size_t>(n), 0);
    return out;
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

Partition conjugate(const Partition& lambda) {
    std::vector<int> out;
    for (int j = 1; j <= lambda.part(0); ++j) {
        int count = 0;
        for (int i = 0; i < lambda.length(); ++i)
            if (lambda.part(i) >= j) ++count;
        out.push_back(count);
    }
    return Partition(std::move(out));
}

bool dominates(const Partition& lambda, const Partition& mu) {
    int len = std::max(lambda.length(), mu.length());
    long long sl = 0, sm = 0;
    for (int i = 0; i < len; ++i) {
        sl += lambda.part(i);
        sm += mu.part(i);
        if (sl < sm) return false;
    }
    return true;
}

bool is_p_regular(const Partition& lambda, std::uint32_t p) {
    if (!is_prime(p)) throw std::invalid_argument("is_p_regular: p not prime");
    int run = 1;
    for (int i = 1; i <= lambda.length(); ++i) {
        if (i < lambda.length() && lambda.part(i) == lambda.part(i - 1)) {
            ++run;
        } else {
            if (lambda.part(i - 1) > 0 && run >= static_cast<int>(p)) return false;
            run = 1;
        }
    }
    return true;
}

Partition shift(const Partition& lambda, int i, int n) {
    std::vector<int> v = lambda.padded(n);
    for (int& x : v) {
        x += i;
        if (x < 0)
            throw std::invalid_argument("shift: resulting part negative");
    }
    return Partition(std::move(v));
}

bool is_degenerate(const Partition& lambda, int n) {
    if (lambda.length() > n)
        throw std::invalid_argument("is_degenerate: more than n parts");
    return lambda.part(n - 1) == 0;
}

bool in_C0(const Partition& lambda, std::uint32_t p, int n) {
    if (!is_prime(p)) throw std::invalid_argument("in_C0: p not prime");
    if (n >= static_cast<int>(p))
        throw std::invalid_argument("in_C0: requires n < p");
    if (lambda.length() > n)
        throw std::invalid_argument("in_C0: more than n parts");
    return lambda.part(0) - lambda.part(n - 1) <= static_cast<int>(p) - n;
}

std::uint64_t PAdicExpansion::value() const {
    std::uint64_t v = 0, pw = 1;
    for (std::uint32_t d : digits) {
        v += pw * d;
        pw *= p;
    }
    return v;
}

PAdicExpansion p_adic(std::uint64_t m, std::uint32_t p) {
    if (!is_prime(p)) throw std::invalid_argument("p_adic: p not prime");
    PAdicExpansion e;
    e.p = p;
    while (m > 0) {
        e.digits.push_back(static_cast<std::uint32_t>(m % p));
        m /= p;
    }
    return e;
}

namespace {

std::uint64_t hook_length_count(const Partition& lambda) {
    const int r = lambda.size();
    if (r > 25)
        throw std::invalid_argument("count_standard_tableaux: size too large");
    Partition mu = conjugate(lambda);
    unsigned __int128 num = 1, den = 1;
    for (int i = 2; i <= r; ++i) num *= static_cast<unsigned>(i);
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda.part(i); ++j)
            den *= static_cast<unsigned>((lambda.part(i) - j) + (mu.part(j) - i) - 1);
    return static_cast<std::uint64_t>(num / den);
}

// Each standard tableau corresponds to a unique chain of corner removals.
std::uint64_t removal_count(std::vector<int>& parts) {
    bool empty = true;
    for (int x : parts)
        if (x > 0) { empty = false; break; }
    if (empty) return 1;
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] == 0) continue;
        if (i + 1 < parts.size() && parts[i + 1] == parts[i]) continue;
        --parts[i];
        total += removal_count(parts);
        ++parts[i];
    }
    return total;
}

}  // namespace

std::uint64_t count_standard_tableaux_by_enumeration(const Partition& lambda) {
    std::vector<int> parts = lambda.parts();
    return removal_count(parts);
}

std::uint64_t count_standard_tableaux(const Partition& lambda) {
    std::uint64_t hooks = hook_length_count(lambda);
    if (lambda.size() <= 10) {
        std::uint64_t enumerated = count_standard_tableaux_by_enumeration(lambda);
        if (enumerated != hooks)
            throw std::logic_error("count_standard_tableaux: hook product and "
                                   "enumeration disagree");
    }
    return hooks;
}

namespace {

void gen_partitions(int remaining, int max_part, int slots,
                    std::vector<int>& acc, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    if (slots == 0) return;
    int hi = std::min(remaining, max_part);
    // largest first part first: decreasing lexicographic output order
    for (int x = hi; x >= 1; --x) {
        if (static_cast<long long>(x) * slots < remaining) break;
        acc.push_back(x);
        gen_partitions(remaining - x, x, slots - 1, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int r, int n) {
    if (r < 0 || n < 1)
        throw std::invalid_argument("enumerate_partitions: need r >= 0, n >= 1");
    std::vector<Partition> out;
    std::vector<int> acc;
    gen_partitions(r, r, n, acc, out);
    return out;
}

}
