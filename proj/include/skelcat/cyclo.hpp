#pragma once

#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skelcat/rational.hpp"

namespace skelcat {

/// Exact element of a cyclotomic field Q(zeta_n).
///
/// Coordinates are stored over the power basis 1, z, ..., z^(phi(n)-1) after
/// reduction modulo the n-th cyclotomic polynomial, so equality of coordinates
/// is equality of numbers once both operands live in the same field. Mixed-order
/// arithmetic embeds both operands into Q(zeta_lcm) first. Stored orders are
/// never congruent to 2 mod 4 (Q(zeta_2m) = Q(zeta_m) for odd m); this keeps
/// the lcm convention unambiguous.
///
/// Values are immutable after construction and safe to share across threads.
class CycloNum {
public:
    CycloNum() : order_(1), coords_(1, Rational(0)) {}
    CycloNum(long long v) : order_(1), coords_(1, Rational(v)) {}  // NOLINT: implicit by design
    explicit CycloNum(const Rational& v) : order_(1), coords_(1, v) {}

    /// zeta_n^k, reduced to its conductor (so the stored order is n/gcd(n,k),
    /// folded once more if that is 2 mod 4).
    static CycloNum root_of_unity(long long n, long long k);

    /// Build from explicit coordinates of length phi(order); folds orders
    /// congruent to 2 mod 4 into the equivalent odd-order field.
    static CycloNum from_coords(long long order, std::vector<Rational> coords);

    long long order() const { return order_; }
    const std::vector<Rational>& coords() const { return coords_; }

    CycloNum operator+(const CycloNum& o) const;
    CycloNum operator-(const CycloNum& o) const;
    CycloNum operator*(const CycloNum& o) const;
    CycloNum operator-() const;
    CycloNum& operator+=(const CycloNum& o) { return *this = *this + o; }
    CycloNum& operator-=(const CycloNum& o) { return *this = *this - o; }
    CycloNum& operator*=(const CycloNum& o) { return *this = *this * o; }

    bool operator==(const CycloNum& o) const;
    bool operator!=(const CycloNum& o) const { return !(*this == o); }

    bool is_zero() const;
    bool is_one() const { return *this == CycloNum(1); }

    /// True when the value lies in Q (order-1 conductor).
    bool is_rational() const;
    /// The rational value; throws DomainError when not rational.
    Rational rational_value() const;

    /// Complex conjugate (the Galois map zeta -> zeta^(n-1)).
    CycloNum conj() const;

    /// Galois automorphism zeta -> zeta^k; requires gcd(k, order) = 1.
    CycloNum galois(long long k) const;

    /// Multiplicative inverse; throws DivisionByZeroError on zero.
    CycloNum inverse() const;

    CycloNum pow(long long e) const;

    /// Numerical embedding zeta_n -> exp(2*pi*i/n). Display/diagnostics only.
    std::complex<double> to_complex() const;

    /// Copy reduced to the smallest cyclotomic field containing the value.
    CycloNum reduced() const;

    /// If the value is a root of unity, its canonical (n, k) with 0 <= k < n,
    /// n the multiplicative order. Nullopt otherwise.
    std::optional<std::pair<long long, long long>> as_root_of_unity() const;

private:
    long long order_;
    std::vector<Rational> coords_;

    CycloNum(long long order, std::vector<Rational> coords)
        : order_(order), coords_(std::move(coords)) {}

    CycloNum embedded(long long new_order) const;  // requires order_ | new_order
    static void fold_half_order(long long& order, std::vector<Rational>& coords);
};

inline CycloNum inverse(const CycloNum& x) { return x.inverse(); }

long long euler_phi(long long n);
long long gcd_ll(long long a, long long b);
long long lcm_ll(long long a, long long b);

/// Short human-readable form: "1", "-1", "zeta_16^3", or a numeric fallback.
std::string display_string(const CycloNum& x);

/// Coefficients (constant term first) of the n-th cyclotomic polynomial.
const std::vector<BigInt>& cyclotomic_polynomial(long long n);

}  // namespace skelcat
