#include "skelcat/ribbon.hpp"

#include <algorithm>
#include <cmath>

#include "skelcat/errors.hpp"
#include "skelcat/linalg.hpp"

namespace skelcat {

namespace {

const std::vector<CycloNum>& require_exact_dims(const CategorySpec& spec) {
    if (!spec.dims)
        throw MissingExactDimsError(
            "exact dims required for certified verdicts (use the numeric fallback explicitly)");
    return *spec.dims;
}

}  // namespace

ValidationReport validate_ribbon(const CategorySpec& spec) {
    ValidationReport rep;
    const std::size_t r = spec.rank();
    if (spec.twists.size() != r) {
        rep.violations.push_back({ViolationKind::structure, {}, "twist vector length mismatch"});
        return rep;
    }
    if (!spec.twists[spec.ring.unit()].is_one())
        rep.violations.push_back({ViolationKind::twist_unit, {spec.ring.unit()}, "theta_unit != 1"});
    for (std::size_t a = 0; a < r; ++a) {
        if (!(spec.twists[a] == spec.twists[spec.ring.dual(a)]))
            rep.violations.push_back({ViolationKind::twist_dual, {a}, "theta_dual(a) != theta_a"});
        if (!(spec.twists[a] * spec.twists[a].conj()).is_one())
            rep.violations.push_back({ViolationKind::twist_modulus, {a}, "|theta_a| != 1"});
    }
    if (spec.dims && spec.dims->size() != r)
        rep.violations.push_back({ViolationKind::dims, {}, "dims vector length mismatch"});

    // Orbit-twist coherence on the degenerate part: for degenerate a, every
    // channel c of a (x) b must carry theta_c = theta_a theta_b. This is the
    // degeneracy test re-asserted, so it can only fire on inconsistent input.
    if (rep.ok()) {
        for (std::size_t a = 0; a < r; ++a) {
            if (!is_degenerate(spec, a).degenerate) continue;
            for (std::size_t b = 0; b < r; ++b)
                for (std::size_t c = 0; c < r; ++c) {
                    if (spec.ring.N(a, b, c) == 0) continue;
                    if (!(spec.twists[c] == spec.twists[a] * spec.twists[b]))
                        rep.violations.push_back(
                            {ViolationKind::twist_coherence, {a, b, c}, "degenerate label has incoherent channel"});
                }
        }
    }
    return rep;
}

CycloNum channel_monodromy(const CategorySpec& spec, std::size_t a, std::size_t b, std::size_t c) {
    if (a >= spec.rank() || b >= spec.rank() || c >= spec.rank())
        throw LookupError("channel_monodromy: label out of range");
    if (spec.ring.N(a, b, c) == 0)
        throw DomainError("channel_monodromy: channel " + spec.ring.name(c) + " not present in " +
                          spec.ring.name(a) + " (x) " + spec.ring.name(b));
    return spec.twists[c] * (spec.twists[a] * spec.twists[b]).inverse();
}

DegeneracyResult is_degenerate(const CategorySpec& spec, std::size_t a) {
    const std::size_t r = spec.rank();
    if (a >= r) throw LookupError("is_degenerate: label out of range");
    for (std::size_t b = 0; b < r; ++b)
        for (std::size_t c = 0; c < r; ++c) {
            if (spec.ring.N(a, b, c) == 0) continue;
            const CycloNum want = spec.twists[a] * spec.twists[b];
            if (!(spec.twists[c] == want)) {
                CycloNum phase = spec.twists[c] * want.inverse();
                return {false, DegeneracyWitness{b, c, std::move(phase)}};
            }
        }
    return {true, std::nullopt};
}

std::vector<std::size_t> centre(const CategorySpec& spec) {
    const std::size_t r = spec.rank();
    std::vector<std::size_t> out;
    std::vector<bool> in(r, false);
    for (std::size_t a = 0; a < r; ++a)
        if (is_degenerate(spec, a).degenerate) {
            out.push_back(a);
            in[a] = true;
        }
    if (!in[spec.ring.unit()])
        throw DataInconsistencyError("centre does not contain the unit (twist data inconsistent)");
    // Closure assertions: fusion- and dual-closed.
    for (std::size_t a : out) {
        if (!in[spec.ring.dual(a)])
            throw DataInconsistencyError("centre not closed under duals at " + spec.ring.name(a));
        for (std::size_t b : out)
            for (std::size_t c = 0; c < r; ++c)
                if (spec.ring.N(a, b, c) != 0 && !in[c])
                    throw DataInconsistencyError("centre not closed under fusion at " +
                                                 spec.ring.name(a) + " (x) " + spec.ring.name(b));
    }
    return out;
}

SMatrix s_matrix(const CategorySpec& spec) {
    const auto& d = require_exact_dims(spec);
    const std::size_t r = spec.rank();
    SMatrix s;
    s.rank = r;
    s.entries.assign(r * r, CycloNum(0));
    for (std::size_t a = 0; a < r; ++a) {
        const CycloNum inv_ta = spec.twists[a].inverse();
        for (std::size_t b = 0; b < r; ++b) {
            const CycloNum pref = inv_ta * spec.twists[b].inverse();
            CycloNum sum(0);
            for (std::size_t c = 0; c < r; ++c) {
                const long long n = spec.ring.N(spec.ring.dual(a), b, c);
                if (n == 0) continue;
                CycloNum term = spec.twists[c] * d[c];
                if (n != 1) term = term * CycloNum(n);
                sum += term;
            }
            s.at(a, b) = pref * sum;
        }
    }
    return s;
}

std::vector<std::size_t> centre_by_rows(const CategorySpec& spec, const SMatrix& s) {
    const auto& d = require_exact_dims(spec);
    const std::size_t r = spec.rank();
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < r; ++a) {
        bool proportional = true;
        for (std::size_t b = 0; b < r && proportional; ++b)
            if (!(s.at(a, b) == d[a] * d[b])) proportional = false;
        if (proportional) out.push_back(a);
    }
    return out;
}

ModularityReport is_modular(const CategorySpec& spec) {
    const SMatrix s = s_matrix(spec);
    const std::size_t r = spec.rank();
    Matrix<CycloNum> m(r, std::vector<CycloNum>(r, CycloNum(0)));
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b) m[a][b] = s.at(a, b);
    ModularityReport rep;
    rep.centre_labels = centre(spec);
    rep.det = determinant(std::move(m));
    rep.modular = !rep.det.is_zero();
    const bool centre_trivial = rep.centre_labels.size() == 1;
    if (rep.modular != centre_trivial)
        throw DataInconsistencyError(
            "modularity criteria disagree: det(S~) " + std::string(rep.modular ? "!=" : "==") +
            " 0 but centre has " + std::to_string(rep.centre_labels.size()) + " labels");
    return rep;
}

bool verlinde_check(const CategorySpec& spec, double tol) {
    ModularityReport rep = is_modular(spec);
    if (!rep.modular) throw DomainError("verlinde_check requires a modular spec");
    const SMatrix st = s_matrix(spec);
    const std::size_t r = spec.rank();
    const auto& dims = *spec.dims;
    double global = 0.0;
    for (const auto& d : dims) {
        const double v = d.to_complex().real();
        global += v * v;
    }
    const double big_d = std::sqrt(global);
    std::vector<std::complex<double>> s(r * r);
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b) s[a * r + b] = st.at(a, b).to_complex() / big_d;
    const std::size_t u = spec.ring.unit();
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b)
            for (std::size_t c = 0; c < r; ++c) {
                std::complex<double> sum(0.0, 0.0);
                for (std::size_t x = 0; x < r; ++x)
                    sum += s[a * r + x] * s[b * r + x] * std::conj(s[c * r + x]) / s[u * r + x];
                const double want = static_cast<double>(spec.ring.N(a, b, c));
                if (std::abs(sum - std::complex<double>(want, 0.0)) > tol) return false;
            }
    return true;
}

NumericAnalysis analyze_numeric(const CategorySpec& spec, double tol) {
    const std::size_t r = spec.rank();
    DimReport dims = fp_dims(spec.ring, spec.dims);
    NumericAnalysis out;
    out.smatrix.assign(r * r, {0.0, 0.0});
    std::vector<std::complex<double>> theta(r);
    for (std::size_t a = 0; a < r; ++a) theta[a] = spec.twists[a].to_complex();
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b) {
            std::complex<double> sum(0.0, 0.0);
            for (std::size_t c = 0; c < r; ++c) {
                const long long n = spec.ring.N(spec.ring.dual(a), b, c);
                if (n == 0) continue;
                sum += static_cast<double>(n) * theta[c] * dims.dims[c];
            }
            out.smatrix[a * r + b] = sum / (theta[a] * theta[b]);
        }
    // LU determinant with partial pivoting.
    std::vector<std::complex<double>> m = out.smatrix;
    std::complex<double> det(1.0, 0.0);
    double scale = 0.0;
    for (const auto& v : m) scale = std::max(scale, std::abs(v));
    for (std::size_t col = 0; col < r; ++col) {
        std::size_t piv = col;
        for (std::size_t i = col + 1; i < r; ++i)
            if (std::abs(m[i * r + col]) > std::abs(m[piv * r + col])) piv = i;
        if (std::abs(m[piv * r + col]) < tol * std::max(1.0, scale)) {
            det = 0.0;
            break;
        }
        if (piv != col) {
            for (std::size_t c = 0; c < r; ++c) std::swap(m[piv * r + c], m[col * r + c]);
            det = -det;
        }
        det *= m[col * r + col];
        for (std::size_t i = col + 1; i < r; ++i) {
            const std::complex<double> f = m[i * r + col] / m[col * r + col];
            for (std::size_t c = col; c < r; ++c) m[i * r + c] -= f * m[col * r + c];
        }
    }
    out.abs_det = std::abs(det);
    out.modular_numeric = out.abs_det > tol;
    return out;
}

}  // namespace skelcat
