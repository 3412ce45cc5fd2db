#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "skelcat/tannakian.hpp"

namespace skelcat {

/// One orbit of category labels under fusion with the subcategory.
struct Orbit {
    std::vector<std::size_t> labels;  // sorted
    std::size_t representative;      // min label index

    // Pointed case only:
    std::optional<std::vector<unsigned>> stabilizer;  // T-group element indices
    std::shared_ptr<const FiniteGroup> stabilizer_group;
    std::size_t index = 0;                            // [G : G_eta]
    std::vector<long long> h2_invariants;             // of the stabilizer

    enum class Resolution { not_applicable, unique_class, inferred, supplied };
    Resolution resolution = Resolution::not_applicable;
    std::size_t cocycle_class = 0;
};

const char* resolution_name(Orbit::Resolution r);

struct OrbitReport {
    std::vector<Orbit> orbits;
    bool pointed = false;
};

/// Orbit partition of the category labels; exact stabilizers in the pointed
/// case, orbit structure alone otherwise. Asserts twist constancy on orbits
/// and, when pointed, the orbit-size identity and dimension constancy.
OrbitReport orbits_and_stabilizers(const CategorySpec& spec, const TannakianSubcat& t);

/// dim Hom in the crossed product before idempotent completion:
/// sum over T-labels k of d_k * N[gamma_k][eta1][eta2].
long long extended_hom(const CategorySpec& spec, const TannakianSubcat& t, std::size_t eta1,
                       std::size_t eta2);

std::vector<std::vector<long long>> extended_hom_matrix(const CategorySpec& spec,
                                                        const TannakianSubcat& t);

struct CondensationResult {
    CategorySpec condensed;
    std::vector<std::vector<long long>> phi;  // original rank x condensed rank
    OrbitReport report;
    long long group_order = 1;
};

/// Condensation by a pointed Tannakian subcategory: orbits split by the
/// projective-irrep profile of the stabilizer cocycle class. Class
/// resolution order: user override, then inference (the unique class with
/// all invariants satisfiable), then NeedsCocycleError.
/// cocycle_overrides maps orbit representative label -> class id.
CondensationResult condense_pointed(const CategorySpec& spec, const TannakianSubcat& t,
                                    const std::map<std::size_t, std::size_t>& cocycle_overrides = {});

/// Condensation by a general (possibly non-pointed) Tannakian subcategory
/// with a resolved group: branch-and-bound search for the nonnegative-integer
/// factorization M = m m^T consistent with dimension preservation and
/// global-dimension conservation; succeeds iff the solution is unique up to
/// column permutation (AmbiguityError otherwise).
CondensationResult condense_general(const CategorySpec& spec, const TannakianSubcat& t);

/// Dispatch: pointed subcategories take the pointed route.
CondensationResult condense(const CategorySpec& spec, const TannakianSubcat& t,
                            const std::map<std::size_t, std::size_t>& cocycle_overrides = {});

struct CheckReport {
    struct Check {
        std::string name;
        bool pass;
        std::string detail;
    };
    std::vector<Check> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/// Re-asserts every conservation invariant of a condensation, the
/// decategorified ring map, and the criterion that the condensed
/// centre is trivial exactly when T was the full centre of the original.
CheckReport verify_condensation(const CondensationResult& result, const CategorySpec& original,
                                const TannakianSubcat& t);

}  // namespace skelcat
