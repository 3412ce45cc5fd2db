#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "skelcat/cyclo.hpp"

namespace skelcat {

struct Label {
    std::size_t index;
    std::string name;
};

/// Skeletal fusion-ring data: labels, unit, dual involution and the rank-3
/// multiplicity tensor N[a][b][c] (multiplicity of c in a (x) b), stored dense.
/// Immutable after construction; all operations on it are pure.
class FusionRing {
public:
    FusionRing(std::vector<std::string> names, std::size_t unit, std::vector<std::size_t> dual,
               std::vector<long long> tensor);

    std::size_t rank() const { return names_.size(); }
    std::size_t unit() const { return unit_; }
    std::size_t dual(std::size_t a) const { return dual_[a]; }
    const std::string& name(std::size_t a) const { return names_[a]; }
    const std::vector<std::string>& names() const { return names_; }
    std::size_t index_of(const std::string& name) const;  // throws LookupError

    long long N(std::size_t a, std::size_t b, std::size_t c) const {
        return tensor_[(a * rank() + b) * rank() + c];
    }
    const std::vector<long long>& tensor() const { return tensor_; }

private:
    std::vector<std::string> names_;
    std::size_t unit_;
    std::vector<std::size_t> dual_;
    std::vector<long long> tensor_;  // rank^3, row-major (a, b, c)
};

enum class ViolationKind {
    structure,
    unit_law,
    associativity,
    rigidity,
    frobenius,
    twist_unit,
    twist_dual,
    twist_modulus,
    twist_coherence,
    dims,
};

const char* violation_kind_name(ViolationKind k);

struct Violation {
    ViolationKind kind;
    std::vector<std::size_t> labels;  // witness tuple, in index order conventions
    std::string detail;
    bool warning = false;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const {
        for (const auto& v : violations)
            if (!v.warning) return false;
        return true;
    }
};

/// Checks unit law, associativity, rigidity and Frobenius symmetry, reporting
/// every violated invariant with a concrete witness tuple. Frobenius failures
/// become warnings when frobenius_warning is set.
ValidationReport validate_ring(const FusionRing& ring, bool frobenius_warning = false);

/// Formal nonnegative-integer combination of labels (a direct sum).
class ObjectVec {
public:
    ObjectVec() = default;
    static ObjectVec of_label(std::size_t a, long long mult = 1);

    void add(std::size_t a, long long mult);
    long long mult(std::size_t a) const;
    bool is_zero() const { return mult_.empty(); }
    const std::map<std::size_t, long long>& entries() const { return mult_; }
    bool operator==(const ObjectVec& o) const { return mult_ == o.mult_; }

private:
    std::map<std::size_t, long long> mult_;
};

/// Bilinear extension of the fusion tensor.
ObjectVec fuse(const FusionRing& ring, const ObjectVec& x, const ObjectVec& y);

/// Sorted support of a formal sum.
std::vector<std::pair<std::size_t, long long>> decompose(const ObjectVec& x);

struct DimReport {
    std::vector<double> dims;  // Perron-Frobenius (or embedded exact) dimensions
    double global_dim = 0.0;
    bool exact_certified = false;  // exact dims supplied and certified
    std::optional<std::vector<CycloNum>> exact;
    std::optional<CycloNum> exact_global;
};

/// Quantum dimensions. With exact dims supplied, certifies d_a d_b =
/// sum_c N[a][b][c] d_c exactly (throws DataInconsistencyError on failure);
/// otherwise computes Perron-Frobenius eigenvalues by power iteration
/// (tolerance 1e-12, 1e4 iteration cap) and checks the identity numerically.
DimReport fp_dims(const FusionRing& ring,
                  const std::optional<std::vector<CycloNum>>& exact_dims = std::nullopt);

}  // namespace skelcat
