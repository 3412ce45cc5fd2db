#include "skelcat/cyclo.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "skelcat/errors.hpp"

namespace skelcat {

long long gcd_ll(long long a, long long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

long long lcm_ll(long long a, long long b) { return a / gcd_ll(a, b) * b; }

long long euler_phi(long long n) {
    long long result = n;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

using IPoly = std::vector<BigInt>;    // constant term first
using QPoly = std::vector<Rational>;  // constant term first

void itrim(IPoly& p) {
    while (p.size() > 1 && p.back() == 0) p.pop_back();
}

void qtrim(QPoly& p) {
    while (p.size() > 1 && p.back() == 0) p.pop_back();
}

bool qis_zero(const QPoly& p) { return p.size() == 1 && p[0] == 0; }

// Exact division of integer polynomials, divisor monic. Used only to build
// cyclotomic polynomials from x^n - 1.
IPoly idiv_exact(const IPoly& num, const IPoly& den) {
    IPoly rem = num;
    IPoly quot(num.size(), BigInt(0));
    const std::size_t dd = den.size() - 1;
    itrim(rem);
    while (rem.size() - 1 >= dd && !(rem.size() == 1 && rem[0] == 0)) {
        const std::size_t shift = rem.size() - 1 - dd;
        BigInt c = rem.back();
        quot[shift] = c;
        for (std::size_t i = 0; i < den.size(); ++i) rem[shift + i] -= c * den[i];
        itrim(rem);
        if (rem.size() == 1 && rem[0] == 0) break;
    }
    itrim(quot);
    return quot;
}

IPoly imul(const IPoly& a, const IPoly& b) {
    IPoly out(a.size() + b.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

QPoly qmul(const QPoly& a, const QPoly& b) {
    QPoly out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            out[i + j] += a[i] * b[j];
        }
    }
    qtrim(out);
    return out;
}

// Remainder of a rational polynomial modulo a monic integer polynomial.
QPoly qmod_monic(QPoly p, const IPoly& m) {
    const std::size_t dm = m.size() - 1;
    qtrim(p);
    while (p.size() - 1 >= dm && !qis_zero(p)) {
        const std::size_t shift = p.size() - 1 - dm;
        Rational c = p.back();
        for (std::size_t i = 0; i < m.size(); ++i) p[shift + i] -= c * Rational(m[i]);
        qtrim(p);
    }
    return p;
}

const IPoly& cyclotomic_rec(long long n, std::map<long long, IPoly>& cache) {
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
    IPoly num(static_cast<std::size_t>(n) + 1, BigInt(0));
    num[0] = -1;
    num.back() = 1;
    IPoly den{BigInt(1)};
    for (long long d = 1; d < n; ++d)
        if (n % d == 0) den = imul(den, cyclotomic_rec(d, cache));
    IPoly phi = idiv_exact(num, den);
    return cache.emplace(n, std::move(phi)).first->second;
}

}  // namespace

const std::vector<BigInt>& cyclotomic_polynomial(long long n) {
    static std::map<long long, IPoly> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    return cyclotomic_rec(n, cache);
}

void CycloNum::fold_half_order(long long& order, std::vector<Rational>& coords) {
    if (order == 2) {
        // phi(2) = 1 and the basis element is 1 itself; same constant in Q.
        order = 1;
        return;
    }
    // Q(zeta_2m) = Q(zeta_m) for odd m > 1: zeta_2m = -zeta_m^((m+1)/2).
    while (order > 2 && order % 2 == 0 && (order / 2) % 2 == 1) {
        const long long m = order / 2;
        const long long half = (m + 1) / 2;
        const IPoly& phi_m = cyclotomic_polynomial(m);
        QPoly out(static_cast<std::size_t>(euler_phi(m)), Rational(0));
        QPoly acc{Rational(1)};  // (-zeta_m^half)^i, reduced
        for (std::size_t i = 0; i < coords.size(); ++i) {
            if (!(coords[i] == 0)) {
                QPoly term = acc;
                for (auto& c : term) c *= coords[i];
                if (out.size() < term.size()) out.resize(term.size(), Rational(0));
                for (std::size_t j = 0; j < term.size(); ++j) out[j] += term[j];
            }
            QPoly shifted(acc.size() + static_cast<std::size_t>(half), Rational(0));
            for (std::size_t j = 0; j < acc.size(); ++j) shifted[j + half] = -acc[j];
            acc = qmod_monic(shifted, phi_m);
        }
        out = qmod_monic(out, phi_m);
        out.resize(static_cast<std::size_t>(euler_phi(m)), Rational(0));
        order = m;
        coords = std::move(out);
        if (order == 2) {
            order = 1;
            return;
        }
    }
}

CycloNum CycloNum::from_coords(long long order, std::vector<Rational> coords) {
    if (order < 1) throw DomainError("cyclotomic order must be >= 1");
    if (static_cast<long long>(coords.size()) != euler_phi(order))
        throw DomainError("coordinate count does not match phi(order)");
    fold_half_order(order, coords);
    return CycloNum(order, std::move(coords));
}

CycloNum CycloNum::root_of_unity(long long n, long long k) {
    if (n < 1) throw DomainError("root_of_unity: order must be >= 1");
    k %= n;
    if (k < 0) k += n;
    if (k == 0) return CycloNum(1);
    const long long g = gcd_ll(n, k);
    long long n2 = n / g;
    long long k2 = k / g;
    if (n2 == 1) return CycloNum(1);
    if (n2 == 2) return CycloNum(-1);
    if (n2 % 2 == 0 && (n2 / 2) % 2 == 1) {
        // zeta_{2m}^k for odd m: even k halves; odd k picks up a sign.
        const long long m = n2 / 2;
        if (k2 % 2 == 0) return root_of_unity(m, k2 / 2);
        long long j = ((k2 - m) / 2) % m;
        if (j < 0) j += m;
        return -root_of_unity(m, j);
    }
    QPoly mono(static_cast<std::size_t>(k2) + 1, Rational(0));
    mono.back() = Rational(1);
    QPoly red = qmod_monic(mono, cyclotomic_polynomial(n2));
    red.resize(static_cast<std::size_t>(euler_phi(n2)), Rational(0));
    return CycloNum(n2, std::move(red));
}

CycloNum CycloNum::embedded(long long new_order) const {
    if (new_order == order_) return *this;
    const long long step = new_order / order_;
    QPoly out{Rational(0)};
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i] == 0) continue;
        const std::size_t deg = i * static_cast<std::size_t>(step);
        if (out.size() <= deg) out.resize(deg + 1, Rational(0));
        out[deg] += coords_[i];
    }
    out = qmod_monic(out, cyclotomic_polynomial(new_order));
    out.resize(static_cast<std::size_t>(euler_phi(new_order)), Rational(0));
    return CycloNum(new_order, std::move(out));
}

CycloNum CycloNum::operator+(const CycloNum& o) const {
    const long long n = lcm_ll(order_, o.order_);
    CycloNum a = embedded(n), b = o.embedded(n);
    for (std::size_t i = 0; i < a.coords_.size(); ++i) a.coords_[i] += b.coords_[i];
    return a;
}

CycloNum CycloNum::operator-(const CycloNum& o) const { return *this + (-o); }

CycloNum CycloNum::operator-() const {
    CycloNum r = *this;
    for (auto& c : r.coords_) c = -c;
    return r;
}

CycloNum CycloNum::operator*(const CycloNum& o) const {
    const long long n = lcm_ll(order_, o.order_);
    CycloNum a = embedded(n), b = o.embedded(n);
    QPoly prod = qmul(a.coords_, b.coords_);
    prod = qmod_monic(prod, cyclotomic_polynomial(n));
    prod.resize(static_cast<std::size_t>(euler_phi(n)), Rational(0));
    return CycloNum(n, std::move(prod));
}

bool CycloNum::operator==(const CycloNum& o) const {
    if (order_ == o.order_) return coords_ == o.coords_;
    const long long n = lcm_ll(order_, o.order_);
    return embedded(n).coords_ == o.embedded(n).coords_;
}

bool CycloNum::is_zero() const {
    for (const auto& c : coords_)
        if (!(c == 0)) return false;
    return true;
}

bool CycloNum::is_rational() const {
    for (std::size_t i = 1; i < coords_.size(); ++i)
        if (!(coords_[i] == 0)) return false;
    return true;
}

Rational CycloNum::rational_value() const {
    if (!is_rational()) throw DomainError("value is not rational");
    return coords_[0];
}

CycloNum CycloNum::galois(long long k) const {
    if (order_ == 1) return *this;
    k %= order_;
    if (k < 0) k += order_;
    if (gcd_ll(k, order_) != 1) throw DomainError("galois: exponent not coprime to order");
    QPoly out{Rational(0)};
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i] == 0) continue;
        const std::size_t deg = (i * static_cast<std::size_t>(k)) % static_cast<std::size_t>(order_);
        if (out.size() <= deg) out.resize(deg + 1, Rational(0));
        out[deg] += coords_[i];
    }
    out = qmod_monic(out, cyclotomic_polynomial(order_));
    out.resize(coords_.size(), Rational(0));
    return CycloNum(order_, std::move(out));
}

CycloNum CycloNum::conj() const { return order_ == 1 ? *this : galois(order_ - 1); }

CycloNum CycloNum::inverse() const {
    if (is_zero()) throw DivisionByZeroError("inverse of zero cyclotomic");
    if (order_ == 1) return CycloNum(Rational(1) / coords_[0]);
    // Extended Euclid in Q[x]: u*f + v*Phi = gcd = const, so u/gcd inverts f mod Phi.
    const IPoly& phi_i = cyclotomic_polynomial(order_);
    QPoly r0(phi_i.size());
    for (std::size_t i = 0; i < phi_i.size(); ++i) r0[i] = Rational(phi_i[i]);
    QPoly r1 = coords_;
    qtrim(r1);
    QPoly s0{Rational(0)}, s1{Rational(1)};
    while (!qis_zero(r1)) {
        QPoly q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 1, Rational(0));
        QPoly rem = r0;
        qtrim(rem);
        while (rem.size() >= r1.size() && !qis_zero(rem)) {
            const std::size_t shift = rem.size() - r1.size();
            Rational c = rem.back() / r1.back();
            q[shift] += c;
            for (std::size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= c * r1[i];
            qtrim(rem);
        }
        qtrim(q);
        QPoly qs = qmul(q, s1);
        QPoly s2 = s0;
        if (s2.size() < qs.size()) s2.resize(qs.size(), Rational(0));
        for (std::size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
        qtrim(s2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.size() != 1 || r0[0] == 0)
        throw DataInconsistencyError("cyclotomic inverse: unexpected gcd degree");
    QPoly inv = s0;
    for (auto& c : inv) c /= r0[0];
    inv = qmod_monic(inv, phi_i);
    inv.resize(coords_.size(), Rational(0));
    return CycloNum(order_, std::move(inv));
}

CycloNum CycloNum::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    CycloNum base = *this;
    CycloNum acc(1);
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

std::complex<double> CycloNum::to_complex() const {
    const double angle = 2.0 * std::numbers::pi / static_cast<double>(order_);
    const std::complex<double> zeta(std::cos(angle), std::sin(angle));
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t i = coords_.size(); i-- > 0;) acc = acc * zeta + to_double(coords_[i]);
    return acc;
}

CycloNum CycloNum::reduced() const {
    CycloNum cur = *this;
    bool changed = true;
    while (changed && cur.order_ > 1) {
        changed = false;
        long long n = cur.order_;
        std::vector<long long> primes;
        long long t = n;
        for (long long p = 2; p * p <= t; ++p) {
            if (t % p == 0) {
                primes.push_back(p);
                while (t % p == 0) t /= p;
            }
        }
        if (t > 1) primes.push_back(t);
        for (long long p : primes) {
            const long long m = n / p;
            const long long phim = euler_phi(m);
            const long long phin = euler_phi(n);
            // Columns: coordinates of embedded zeta_m^j, j < phi(m). (For m that is
            // 2 mod 4 this is still a valid basis of the subfield; the final
            // from_coords folds the order.)
            std::vector<QPoly> cols;
            cols.reserve(static_cast<std::size_t>(phim));
            for (long long j = 0; j < phim; ++j) {
                QPoly mono(static_cast<std::size_t>(j * (n / m)) + 1, Rational(0));
                mono.back() = Rational(1);
                QPoly red = qmod_monic(mono, cyclotomic_polynomial(n));
                red.resize(static_cast<std::size_t>(phin), Rational(0));
                cols.push_back(std::move(red));
            }
            // Solve cols * c = coords by Gauss-Jordan on the augmented matrix.
            std::vector<QPoly> aug(static_cast<std::size_t>(phin));
            for (long long r = 0; r < phin; ++r) {
                aug[static_cast<std::size_t>(r)].resize(static_cast<std::size_t>(phim) + 1, Rational(0));
                for (long long c = 0; c < phim; ++c)
                    aug[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                        cols[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)];
                aug[static_cast<std::size_t>(r)][static_cast<std::size_t>(phim)] =
                    cur.coords_[static_cast<std::size_t>(r)];
            }
            std::size_t row = 0;
            for (long long c = 0; c < phim && row < aug.size(); ++c) {
                std::size_t piv = row;
                while (piv < aug.size() && aug[piv][static_cast<std::size_t>(c)] == 0) ++piv;
                if (piv == aug.size()) continue;
                std::swap(aug[piv], aug[row]);
                Rational d = aug[row][static_cast<std::size_t>(c)];
                for (auto& v : aug[row]) v /= d;
                for (std::size_t r2 = 0; r2 < aug.size(); ++r2) {
                    if (r2 == row) continue;
                    Rational f = aug[r2][static_cast<std::size_t>(c)];
                    if (f == 0) continue;
                    for (std::size_t cc = 0; cc < aug[r2].size(); ++cc)
                        aug[r2][cc] -= f * aug[row][cc];
                }
                ++row;
            }
            bool consistent = true;
            for (std::size_t r2 = row; r2 < aug.size(); ++r2)
                if (!(aug[r2][static_cast<std::size_t>(phim)] == 0)) consistent = false;
            if (!consistent) continue;
            std::vector<Rational> sol(static_cast<std::size_t>(phim), Rational(0));
            std::size_t rr = 0;
            for (long long c = 0; c < phim && rr < aug.size(); ++c) {
                if (!(aug[rr][static_cast<std::size_t>(c)] == 0)) {
                    sol[static_cast<std::size_t>(c)] = aug[rr][static_cast<std::size_t>(phim)];
                    ++rr;
                }
            }
            cur = CycloNum::from_coords(m, std::move(sol));
            changed = true;
            break;
        }
    }
    return cur;
}

std::string display_string(const CycloNum& x) {
    if (x.is_rational()) return to_string(x.coords()[0]);
    CycloNum r = x.reduced();
    if (r.is_rational()) return to_string(r.coords()[0]);
    if (auto ru = r.as_root_of_unity()) {
        std::string s = "zeta_" + std::to_string(ru->first);
        if (ru->second != 1) s += "^" + std::to_string(ru->second);
        return s;
    }
    const auto z = r.to_complex();
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g%+.9gi", z.real(), z.imag());
    return buf;
}

std::optional<std::pair<long long, long long>> CycloNum::as_root_of_unity() const {
    CycloNum r = reduced();
    if (!(r * r.conj()).is_one()) return std::nullopt;
    const long long m = r.order();
    const long long full = (m % 2 == 0) ? m : 2 * m;  // mu_full = roots of unity in Q(zeta_m)
    // Guess the exponent from the numerical argument, verify exactly, widen on miss.
    const std::complex<double> z = r.to_complex();
    double arg = std::arg(z);
    if (arg < 0) arg += 2.0 * std::numbers::pi;
    const long long guess =
        static_cast<long long>(std::llround(arg / (2.0 * std::numbers::pi) * static_cast<double>(full))) % full;
    for (long long delta = 0; delta <= full; ++delta) {
        for (long long sign : {1LL, -1LL}) {
            const long long k = ((guess + sign * delta) % full + full) % full;
            if (r == root_of_unity(full, k)) {
                if (k == 0) return std::make_pair(1LL, 0LL);
                const long long g = gcd_ll(full, k);
                return std::make_pair(full / g, k / g);
            }
            if (delta == 0) break;
        }
    }
    return std::nullopt;
}

}  // namespace skelcat
