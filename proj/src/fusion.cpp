#include "skelcat/fusion.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "skelcat/errors.hpp"

namespace skelcat {

FusionRing::FusionRing(std::vector<std::string> names, std::size_t unit,
                       std::vector<std::size_t> dual, std::vector<long long> tensor)
    : names_(std::move(names)), unit_(unit), dual_(std::move(dual)), tensor_(std::move(tensor)) {
    const std::size_t r = names_.size();
    if (r == 0) throw DomainError("fusion ring needs at least one label");
    if (unit_ >= r) throw DomainError("unit index out of range");
    if (dual_.size() != r) throw DomainError("dual permutation size mismatch");
    for (std::size_t a : dual_)
        if (a >= r) throw DomainError("dual permutation entry out of range");
    if (tensor_.size() != r * r * r)
        throw DomainError("fusion tensor must have rank^3 entries");
    for (long long v : tensor_)
        if (v < 0) throw DomainError("fusion multiplicities must be nonnegative");
    std::set<std::string> seen(names_.begin(), names_.end());
    if (seen.size() != r) throw DomainError("label names must be unique");
}

std::size_t FusionRing::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    throw LookupError("unknown label: " + name);
}

const char* violation_kind_name(ViolationKind k) {
    switch (k) {
        case ViolationKind::structure: return "structure";
        case ViolationKind::unit_law: return "unit-law";
        case ViolationKind::associativity: return "associativity";
        case ViolationKind::rigidity: return "rigidity";
        case ViolationKind::frobenius: return "frobenius";
        case ViolationKind::twist_unit: return "twist-unit";
        case ViolationKind::twist_dual: return "twist-dual";
        case ViolationKind::twist_modulus: return "twist-modulus";
        case ViolationKind::twist_coherence: return "twist-coherence";
        case ViolationKind::dims: return "dims";
    }
    return "?";
}

ValidationReport validate_ring(const FusionRing& ring, bool frobenius_warning) {
    ValidationReport rep;
    const std::size_t r = ring.rank();
    const std::size_t u = ring.unit();

    // Unit law
    for (std::size_t b = 0; b < r; ++b) {
        for (std::size_t c = 0; c < r; ++c) {
            const long long want = (b == c) ? 1 : 0;
            if (ring.N(u, b, c) != want)
                rep.violations.push_back({ViolationKind::unit_law,
                                          {u, b, c},
                                          "N[unit][b][c] != delta_{b,c}"});
            if (ring.N(b, u, c) != want)
                rep.violations.push_back({ViolationKind::unit_law,
                                          {b, u, c},
                                          "N[b][unit][c] != delta_{b,c}"});
        }
    }

    // Rigidity
    if (ring.dual(u) != u)
        rep.violations.push_back({ViolationKind::rigidity, {u}, "dual(unit) != unit"});
    for (std::size_t a = 0; a < r; ++a) {
        if (ring.dual(ring.dual(a)) != a)
            rep.violations.push_back({ViolationKind::rigidity, {a}, "dual(dual(a)) != a"});
        for (std::size_t b = 0; b < r; ++b) {
            const long long want = (b == ring.dual(a)) ? 1 : 0;
            if (ring.N(a, b, u) != want)
                rep.violations.push_back(
                    {ViolationKind::rigidity, {a, b}, "N[a][b][unit] != delta_{b,dual(a)}"});
        }
    }

    // Associativity: sum_e N[a][b][e] N[e][c][d] = sum_f N[b][c][f] N[a][f][d]
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b)
            for (std::size_t c = 0; c < r; ++c)
                for (std::size_t d = 0; d < r; ++d) {
                    long long lhs = 0, rhs = 0;
                    for (std::size_t e = 0; e < r; ++e) lhs += ring.N(a, b, e) * ring.N(e, c, d);
                    for (std::size_t f = 0; f < r; ++f) rhs += ring.N(b, c, f) * ring.N(a, f, d);
                    if (lhs != rhs) {
                        std::ostringstream os;
                        os << "associativity fails: lhs=" << lhs << " rhs=" << rhs;
                        rep.violations.push_back({ViolationKind::associativity, {a, b, c, d}, os.str()});
                    }
                }

    // Frobenius symmetry: N[a][b][c] = N[dual(a)][c][b] = N[c][dual(b)][a]
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b)
            for (std::size_t c = 0; c < r; ++c) {
                const long long n = ring.N(a, b, c);
                if (n != ring.N(ring.dual(a), c, b) || n != ring.N(c, ring.dual(b), a))
                    rep.violations.push_back({ViolationKind::frobenius,
                                              {a, b, c},
                                              "Frobenius symmetry fails",
                                              frobenius_warning});
            }

    return rep;
}

ObjectVec ObjectVec::of_label(std::size_t a, long long mult) {
    ObjectVec v;
    v.add(a, mult);
    return v;
}

void ObjectVec::add(std::size_t a, long long mult) {
    if (mult == 0) return;
    auto it = mult_.find(a);
    if (it == mult_.end()) {
        if (mult < 0) throw DomainError("object multiplicities must stay nonnegative");
        mult_[a] = mult;
    } else {
        it->second += mult;
        if (it->second < 0) throw DomainError("object multiplicities must stay nonnegative");
        if (it->second == 0) mult_.erase(it);
    }
}

long long ObjectVec::mult(std::size_t a) const {
    auto it = mult_.find(a);
    return it == mult_.end() ? 0 : it->second;
}

ObjectVec fuse(const FusionRing& ring, const ObjectVec& x, const ObjectVec& y) {
    const std::size_t r = ring.rank();
    ObjectVec out;
    for (const auto& [a, ma] : x.entries()) {
        if (a >= r) throw LookupError("fuse: label index out of range");
        for (const auto& [b, mb] : y.entries()) {
            if (b >= r) throw LookupError("fuse: label index out of range");
            for (std::size_t c = 0; c < r; ++c) {
                const long long n = ring.N(a, b, c);
                if (n != 0) out.add(c, ma * mb * n);
            }
        }
    }
    return out;
}

std::vector<std::pair<std::size_t, long long>> decompose(const ObjectVec& x) {
    return {x.entries().begin(), x.entries().end()};
}

DimReport fp_dims(const FusionRing& ring, const std::optional<std::vector<CycloNum>>& exact_dims) {
    const std::size_t r = ring.rank();
    DimReport rep;

    if (exact_dims) {
        const auto& d = *exact_dims;
        if (d.size() != r) throw DomainError("exact dims: wrong length");
        // Certify the ring-homomorphism identity exactly, plus reality and
        // positivity of each dimension.
        for (std::size_t a = 0; a < r; ++a) {
            if (!(d[a].conj() == d[a]))
                throw DataInconsistencyError("exact dim of label " + ring.name(a) + " is not real");
            const auto z = d[a].to_complex();
            if (z.real() < 1.0 - 1e-9)  // genuine dims satisfy d >= 1
                throw DataInconsistencyError("exact dim of label " + ring.name(a) + " is below 1");
        }
        if (!d[ring.unit()].is_one()) throw DataInconsistencyError("exact dim of unit must be 1");
        for (std::size_t a = 0; a < r; ++a)
            for (std::size_t b = 0; b < r; ++b) {
                CycloNum rhs(0);
                for (std::size_t c = 0; c < r; ++c)
                    if (ring.N(a, b, c) != 0) rhs += CycloNum(ring.N(a, b, c)) * d[c];
                if (!(d[a] * d[b] == rhs))
                    throw DataInconsistencyError("exact dims fail d_a*d_b = sum N d_c at (" +
                                                 ring.name(a) + "," + ring.name(b) + ")");
            }
        rep.exact = d;
        rep.exact_certified = true;
        CycloNum global(0);
        rep.dims.resize(r);
        for (std::size_t a = 0; a < r; ++a) {
            global += d[a] * d[a];
            rep.dims[a] = d[a].to_complex().real();
        }
        rep.exact_global = global;
        rep.global_dim = global.to_complex().real();
        return rep;
    }

    // Power iteration on N_a + I (the shift keeps periodic fusion matrices
    // convergent); the Perron-Frobenius eigenvalue of N_a is the dimension.
    constexpr double kTol = 1e-12;
    constexpr int kMaxIter = 10000;
    rep.dims.resize(r);
    for (std::size_t a = 0; a < r; ++a) {
        std::vector<double> v(r, 1.0), w(r, 0.0);
        double lambda = 0.0;
        for (int iter = 0; iter < kMaxIter; ++iter) {
            double norm = 0.0;
            for (std::size_t b = 0; b < r; ++b) {
                double s = v[b];
                for (std::size_t c = 0; c < r; ++c) s += static_cast<double>(ring.N(a, b, c)) * v[c];
                w[b] = s;
                norm = std::max(norm, std::abs(s));
            }
            for (std::size_t b = 0; b < r; ++b) w[b] /= norm;
            const double next = norm - 1.0;
            std::swap(v, w);
            if (std::abs(next - lambda) < kTol && iter > 1) {
                lambda = next;
                break;
            }
            lambda = next;
        }
        if (lambda < 1.0 - 1e-9)
            throw DataInconsistencyError("Perron-Frobenius eigenvalue below 1 for label " +
                                         ring.name(a) + " (degenerate tensor)");
        rep.dims[a] = lambda;
    }
    // Numeric certificate of the homomorphism identity.
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b) {
            double rhs = 0.0;
            for (std::size_t c = 0; c < r; ++c)
                rhs += static_cast<double>(ring.N(a, b, c)) * rep.dims[c];
            if (std::abs(rep.dims[a] * rep.dims[b] - rhs) > 1e-9 * std::max(1.0, std::abs(rhs)))
                throw DataInconsistencyError("numeric dims fail d_a*d_b = sum N d_c at (" +
                                             ring.name(a) + "," + ring.name(b) + ")");
        }
    rep.global_dim = 0.0;
    for (double d : rep.dims) rep.global_dim += d * d;
    return rep;
}

}  // namespace skelcat
