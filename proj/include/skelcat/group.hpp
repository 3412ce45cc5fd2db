#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "skelcat/cyclo.hpp"
#include "skelcat/snf.hpp"

namespace skelcat {

/// Finite group given by its multiplication table over element indices.
/// Associativity, identity and inverses are checked on construction.
class FiniteGroup {
public:
    explicit FiniteGroup(std::vector<std::vector<unsigned>> table);

    std::size_t order() const { return table_.size(); }
    unsigned identity() const { return identity_; }
    unsigned mul(unsigned a, unsigned b) const { return table_[a][b]; }
    unsigned inverse(unsigned a) const { return inverse_[a]; }
    const std::vector<std::vector<unsigned>>& table() const { return table_; }

    bool is_abelian() const;
    long long element_order(unsigned a) const;

    /// Subgroup on the given (closed) element subset, with its own indexing;
    /// element i of the result is elems[i]. Throws DomainError if not closed.
    FiniteGroup subgroup(const std::vector<unsigned>& elems) const;

    /// Cyclic decomposition orders (divisibility chain, entries > 1) of an
    /// abelian group; throws DomainError on nonabelian input.
    std::vector<long long> abelian_invariants() const;

private:
    std::vector<std::vector<unsigned>> table_;
    std::vector<unsigned> inverse_;
    unsigned identity_ = 0;
};

FiniteGroup cyclic_group(std::size_t n);
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
FiniteGroup dihedral_group(std::size_t n);  // order 2n
FiniteGroup symmetric_group_3();
FiniteGroup quaternion_group();

/// Normalized 2-cochain on a finite group with root-of-unity values.
/// Owns (a share of) its group so representatives outlive their factory.
struct Cocycle {
    std::shared_ptr<const FiniteGroup> group;
    std::vector<CycloNum> values;  // order^2, row-major (g, h)

    const CycloNum& at(unsigned g, unsigned h) const { return values[g * group->order() + h]; }
    bool is_normalized() const;
    /// c(g,h) c(gh,k) = c(g,hk) c(h,k) for all triples, exactly.
    bool satisfies_cocycle_identity() const;
    Cocycle times(const Cocycle& other) const;
    Cocycle power(long long e) const;
};

Cocycle trivial_cocycle(const FiniteGroup& g);

/// H^2(G, T) with trivial action -- the Schur multiplier -- computed exactly
/// from the normalized bar resolution by Smith normal form, with one explicit
/// mu_|G|-valued representative cocycle per cyclic invariant.
struct H2Result {
    std::shared_ptr<const FiniteGroup> group;
    std::vector<long long> invariants;  // cyclic orders > 1, divisibility chain
    std::vector<Cocycle> generators;    // parallel to invariants

    std::size_t class_count() const {
        std::size_t n = 1;
        for (long long d : invariants) n *= static_cast<std::size_t>(d);
        return n;
    }
    /// Representative of the class with the given exponent tuple (mixed radix
    /// over the invariants). class_id 0 is the trivial class.
    Cocycle class_representative(std::size_t class_id) const;
    std::vector<long long> class_exponents(std::size_t class_id) const;
};

H2Result h2_group(const FiniteGroup& g, std::size_t order_bound = 16);

/// Dimensions of the c-projective irreps of an abelian group: |Z(c)| irreps of
/// dimension sqrt(|H| / |Z(c)|), where Z(c) = {h : c(h,k) = c(k,h) for all k}.
std::vector<long long> projective_irrep_profile(const FiniteGroup& h, const Cocycle& c);

/// The radical Z(c) above, as element indices.
std::vector<unsigned> cocycle_radical(const FiniteGroup& h, const Cocycle& c);

}  // namespace skelcat
