#pragma once

#include <vector>

#include "skelcat/rational.hpp"

namespace skelcat {

using IntMatrix = std::vector<std::vector<BigInt>>;

/// Smith normal form U * A * V = D with divisibility chain d1 | d2 | ...
/// Only the left transform U and the diagonal are returned (V is applied to A
/// in place and discarded); that is all the cohomology code needs.
struct SnfResult {
    std::vector<BigInt> diagonal;  // nonnegative, divisibility chain, zeros trailing
    IntMatrix left;                // unimodular, rows x rows
    std::size_t rank;              // number of nonzero diagonal entries
};

SnfResult smith_normal_form(IntMatrix a);

/// Invariant factors > 1 (torsion invariants of coker restricted to the
/// saturation; see callers).
std::vector<BigInt> invariant_factors(const SnfResult& s);

/// Integer column-echelon compression: returns a small set of columns with the
/// same integer column span (lattice) as the input columns.
IntMatrix lattice_column_basis(std::size_t rows, const std::vector<std::vector<BigInt>>& columns);

}  // namespace skelcat
