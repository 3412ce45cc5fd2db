#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "skelcat/group.hpp"
#include "skelcat/ribbon.hpp"

namespace skelcat {

/// A bosonic symmetric (Tannakian) subcategory of a CategorySpec: a label
/// subset closed under fusion and duals, all degenerate, all twists 1.
struct TannakianSubcat {
    std::vector<std::size_t> labels;  // sorted category label indices
    std::vector<long long> irrep_dims;  // parallel to labels (exact integer dims)
    std::shared_ptr<const FiniteGroup> group;  // resolved group, or null
    /// pointed case: group element index per label (parallel to labels)
    std::optional<std::vector<unsigned>> label_to_element;
    /// character-table case: irrep index per label (parallel to labels)
    std::optional<std::vector<std::size_t>> label_to_irrep;
    std::vector<std::size_t> fermionic_excluded;  // degenerate labels with theta = -1

    bool pointed() const {
        for (long long d : irrep_dims)
            if (d != 1) return false;
        return true;
    }
    bool contains(std::size_t label) const;
    std::size_t position_of(std::size_t label) const;  // throws LookupError
};

/// The maximal Tannakian subcategory: bosonic part of the centre, with
/// fermionic degenerate labels flagged and excluded. Pointed subcategories
/// get their group recognized on the spot.
TannakianSubcat maximal_tannakian(const CategorySpec& spec);

/// Builds a TannakianSubcat from an explicit label set, checking unit
/// membership, closure, degeneracy (DegeneracyError with witness channel on
/// failure) and bosonicity. Recognizes the group if pointed.
TannakianSubcat subcat_from_labels(const CategorySpec& spec, std::vector<std::size_t> labels);

/// Pointed-case group recognition: labels under fusion form a finite abelian
/// group. Fails with DomainError when T is not pointed.
void recognize_pointed_group(const CategorySpec& spec, TannakianSubcat& t);

/// Supplied character table for non-pointed matching.
struct CharacterTable {
    std::vector<long long> class_sizes;
    std::vector<std::vector<CycloNum>> chars;  // chars[i][c]: irrep i on class c
};

/// Verifies that T's fusion ring is the character ring of the supplied group
/// under the supplied label -> irrep matching, then attaches the group.
/// Checks: sum of squared degrees = |G|, character orthogonality, degree and
/// dual compatibility per label, and every fusion multiplicity against the
/// exact character-product decomposition. Throws GroupMismatchError with the
/// first failing triple.
void verify_group_match(const CategorySpec& spec, TannakianSubcat& t, const FiniteGroup& group,
                        const CharacterTable& table,
                        const std::vector<std::size_t>& label_to_irrep);

}  // namespace skelcat
