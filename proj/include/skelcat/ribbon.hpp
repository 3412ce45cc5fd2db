#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "skelcat/cyclo.hpp"
#include "skelcat/fusion.hpp"

namespace skelcat {

/// Skeletal braided ribbon category: fusion ring plus per-label twists
/// (roots of unity) and optional exact dimensions.
struct CategorySpec {
    FusionRing ring;
    std::vector<CycloNum> twists;
    std::optional<std::vector<CycloNum>> dims;
    std::string name;  // display only

    std::size_t rank() const { return ring.rank(); }
};

/// Twist-level checks: theta_unit = 1, theta_dual = theta, unit modulus, and
/// re-assertion of channel coherence on the degenerate part.
ValidationReport validate_ribbon(const CategorySpec& spec);

/// The scalar by which the double braiding acts on channel c of a (x) b:
/// theta_c / (theta_a * theta_b). Requires N[a][b][c] > 0.
CycloNum channel_monodromy(const CategorySpec& spec, std::size_t a, std::size_t b, std::size_t c);

struct DegeneracyWitness {
    std::size_t against;  // b
    std::size_t channel;  // c
    CycloNum phase;       // theta_c / (theta_a theta_b) != 1
};

struct DegeneracyResult {
    bool degenerate;
    std::optional<DegeneracyWitness> witness;
};

/// Channel-phase test for membership in the centre.
DegeneracyResult is_degenerate(const CategorySpec& spec, std::size_t a);

/// All degenerate labels (the centre). Asserts fusion- and dual-closure.
std::vector<std::size_t> centre(const CategorySpec& spec);

struct SMatrix {
    std::size_t rank = 0;
    std::vector<CycloNum> entries;  // row-major
    bool normalized = false;        // false: unnormalized S~; true: S = S~/D (numeric use only)

    const CycloNum& at(std::size_t a, std::size_t b) const { return entries[a * rank + b]; }
    CycloNum& at(std::size_t a, std::size_t b) { return entries[a * rank + b]; }
};

/// Unnormalized S~ with S~_{ab} = sum_c N[dual(a)][b][c] (theta_c/(theta_a theta_b)) d_c.
/// Requires exact dims (throws MissingExactDimsError otherwise).
SMatrix s_matrix(const CategorySpec& spec);

/// Independent centre computation: a is degenerate iff S~_{ab} = d_a d_b for all b.
std::vector<std::size_t> centre_by_rows(const CategorySpec& spec, const SMatrix& s);

struct ModularityReport {
    std::vector<std::size_t> centre_labels;
    CycloNum det;  // exact det of S~
    bool modular;  // det != 0
};

/// Exact modularity verdict. Internally asserts det(S~) != 0 <=> centre = {unit}
/// and throws DataInconsistencyError if the two criteria disagree.
ModularityReport is_modular(const CategorySpec& spec);

/// Verlinde cross-check: with S = S~/D, D = +sqrt(sum d^2), verifies
/// N[a][b][c] = sum_x S_ax S_bx conj(S_cx) / S_1x within tol for all triples.
/// Requires a modular spec (DomainError otherwise).
bool verlinde_check(const CategorySpec& spec, double tol = 1e-9);

/// Numerical fallback for specs without exact dims. Verdicts from this path
/// are never certified.
struct NumericAnalysis {
    std::vector<std::complex<double>> smatrix;  // row-major
    double abs_det = 0.0;
    bool modular_numeric = false;
};
NumericAnalysis analyze_numeric(const CategorySpec& spec, double tol = 1e-9);

}  // namespace skelcat
