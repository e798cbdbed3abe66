#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "specht/closure.hpp"
#include "specht/partition.hpp"
#include "specht/subspace.hpp"
#include "specht/word.hpp"

namespace specht {

enum class ModuleKind { generic, specht, radical };

std::string to_string(ModuleKind kind);
ModuleKind module_kind_from_string(const std::string& s);

/// A subspace of the word space F_n^r certified closed under the symmetric
/// group action (invariance under every adjacent transposition).
class GModule {
public:
    GModule(int n, int r, PrimeField field, Subspace carrier,
            ModuleKind kind = ModuleKind::generic,
            std::optional<Partition> label = std::nullopt,
            bool closure_certified = false);

    static GModule zero(int n, int r, PrimeField field);
    static GModule full(int n, int r, PrimeField field, bool override_guard = false);

    int n() const { return n_; }
    int r() const { return r_; }
    const PrimeField& field() const { return field_; }
    const Subspace& carrier() const { return carrier_; }
    std::size_t dim() const { return carrier_.dim(); }
    ModuleKind kind() const { return kind_; }
    const std::optional<Partition>& label() const { return label_; }
    bool closure_certified() const { return certified_; }

    /// Checks invariance under all adjacent transpositions and updates the
    /// certification flag.
    bool verify_closed();

    bool operator==(const GModule& o) const {
        return n_ == o.n_ && r_ == o.r_ && carrier_ == o.carrier_;
    }

    void write(std::ostream& os) const;
    static GModule read(std::istream& is);

    void save(const std::string& path) const;
    static GModule load(const std::string& path);

private:
    int n_, r_;
    PrimeField field_;
    Subspace carrier_;
    ModuleKind kind_;
    std::optional<Partition> label_;
    bool certified_;
};

/// The adjacent-transposition generators of G(r) as index bijections on the
/// word basis of F_n^r.
std::vector<IndexBijection> symmetric_group_generators(const WordCodec& codec);

}
