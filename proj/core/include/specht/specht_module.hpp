#pragma once

#include <cstdint>
#include <vector>

#include "specht/gmodule.hpp"
#include "specht/partition.hpp"

namespace specht {

/// Column filling of the Young diagram of `shape`: column i holds
/// conjugate(shape)_i distinct entries, and the entries of all columns
/// partition {1,...,r}.
struct Tableau {
    Partition shape;
    std::vector<std::vector<int>> columns;

    /// Columns filled left to right with consecutive integers.
    static Tableau column_superstandard(const Partition& shape);

    void validate() const;
};

/// Expands the product of alternating column brackets into the word basis:
/// column entries t_1,...,t_k receive superscripts sigma(1),...,sigma(k),
/// summed over all sigma with sign. Support size is the product of the
/// column-length factorials; rejects columns longer than n.
SparseRow column_bracket_product(const Tableau& t, int n, const PrimeField& field);

/// The Specht module S^lambda inside F_n^r: the symmetric-group closure of
/// the column-superstandard bracket product. The computed dimension is
/// checked against count_standard_tableaux and a mismatch is an internal
/// error.
GModule specht_module(const Partition& lambda, int n, std::uint32_t p,
                      bool override_guard = false);

/// Radical of the restriction of the orthonormal word-basis form to M:
/// {v in M : <v, u> = 0 for all u in M}. Makes no irreducibility claims;
/// defined for any G-closed M.
GModule form_radical(const GModule& m);

/// The unique maximal submodule P^lambda of a Specht module with p-regular
/// label, computed as the form radical. Refuses p-singular labels and
/// modules not built as Specht modules.
GModule gram_radical(const GModule& m);

/// dim S^lambda - dim P^lambda, i.e. the rank of the Gram matrix.
std::uint64_t dim_irreducible(const Partition& lambda, int n, std::uint32_t p,
                              bool override_guard = false);

/// Number of words with the given letter multiplicities:
/// multinomial(r; weight_1,...,weight_n). The weight must be a composition
/// of r into n nonnegative parts.
std::uint64_t weight_space_dim(int r, int n, const std::vector<int>& weight);

/// Gram matrix of the carrier basis under the orthonormal word form.
MatrixGF gram_matrix(const GModule& m);

}
