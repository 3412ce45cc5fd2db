#include "skelcat/snf.hpp"

#include <algorithm>
#include <map>

namespace skelcat {

namespace {

// Rounded division: quotient minimizing |a - q*b|.
BigInt round_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    BigInt r = a - q * b;
    BigInt half = abs(b);
    if (2 * abs(r) > half) q += (r > 0) == (b > 0) ? 1 : -1;
    return q;
}

struct ExtGcd {
    BigInt g, x, y;  // g = x*a + y*b
};

ExtGcd ext_gcd(BigInt a, BigInt b) {
    BigInt x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
        BigInt q = a / b;
        BigInt t = a - q * b;
        a = b;
        b = t;
        t = x0 - q * x1;
        x0 = x1;
        x1 = t;
        t = y0 - q * y1;
        y0 = y1;
        y1 = t;
    }
    if (a < 0) {
        a = -a;
        x0 = -x0;
        y0 = -y0;
    }
    return {a, x0, y0};
}

}  // namespace

SnfResult smith_normal_form(IntMatrix a) {
    const std::size_t m = a.size();
    const std::size_t n = m == 0 ? 0 : a[0].size();
    IntMatrix u(m, std::vector<BigInt>(m, BigInt(0)));
    for (std::size_t i = 0; i < m; ++i) u[i][i] = 1;

    auto row_sub = [&](std::size_t dst, std::size_t src, const BigInt& q) {
        if (q == 0) return;
        for (std::size_t c = 0; c < n; ++c) a[dst][c] -= q * a[src][c];
        for (std::size_t c = 0; c < m; ++c) u[dst][c] -= q * u[src][c];
    };
    auto col_sub = [&](std::size_t dst, std::size_t src, const BigInt& q) {
        if (q == 0) return;
        for (std::size_t r = 0; r < m; ++r) a[r][dst] -= q * a[r][src];
    };

    std::size_t t = 0;
    const std::size_t bound = std::min(m, n);
    while (t < bound) {
        // Locate the entry of smallest nonzero magnitude in the trailing block.
        std::size_t pi = m, pj = n;
        BigInt best = 0;
        for (std::size_t i = t; i < m; ++i) {
            for (std::size_t j = t; j < n; ++j) {
                if (a[i][j] == 0) continue;
                BigInt mag = abs(a[i][j]);
                if (pi == m || mag < best) {
                    best = mag;
                    pi = i;
                    pj = j;
                    if (best == 1) break;
                }
            }
            if (best == 1 && pi != m) break;
        }
        if (pi == m) break;  // trailing block is zero
        if (pi != t) {
            std::swap(a[pi], a[t]);
            std::swap(u[pi], u[t]);
        }
        if (pj != t)
            for (std::size_t r = 0; r < m; ++r) std::swap(a[r][pj], a[r][t]);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (a[i][t] == 0) continue;
                BigInt q = round_div(a[i][t], a[t][t]);
                row_sub(i, t, q);
                if (a[i][t] != 0) {
                    // Remainder is strictly smaller; promote it to the pivot.
                    std::swap(a[i], a[t]);
                    std::swap(u[i], u[t]);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (a[t][j] == 0) continue;
                BigInt q = round_div(a[t][j], a[t][t]);
                col_sub(j, t, q);
                if (a[t][j] != 0) {
                    for (std::size_t r = 0; r < m; ++r) std::swap(a[r][j], a[r][t]);
                    clean = false;
                }
            }
            if (!clean) continue;
            // Divisibility: the pivot must divide every remaining entry.
            for (std::size_t i = t + 1; i < m && clean; ++i) {
                for (std::size_t j = t + 1; j < n && clean; ++j) {
                    if (a[i][j] % a[t][t] != 0) {
                        row_sub(t, i, BigInt(-1));  // pulls the offending row in
                        clean = false;
                    }
                }
            }
        }
        if (a[t][t] < 0) {
            for (std::size_t c = 0; c < n; ++c) a[t][c] = -a[t][c];
            for (std::size_t c = 0; c < m; ++c) u[t][c] = -u[t][c];
        }
        ++t;
    }

    SnfResult res;
    res.diagonal.resize(bound, BigInt(0));
    for (std::size_t i = 0; i < bound; ++i) res.diagonal[i] = a[i][i];
    res.rank = t;
    res.left = std::move(u);
    return res;
}

std::vector<BigInt> invariant_factors(const SnfResult& s) {
    std::vector<BigInt> out;
    for (const auto& d : s.diagonal)
        if (d > 1) out.push_back(d);
    return out;
}

IntMatrix lattice_column_basis(std::size_t rows, const std::vector<std::vector<BigInt>>& columns) {
    // Basis columns keyed by pivot row (topmost nonzero entry).
    std::map<std::size_t, std::vector<BigInt>> basis;
    for (const auto& input : columns) {
        std::vector<BigInt> v = input;
        for (std::size_t r = 0; r < rows;) {
            if (v[r] == 0) {
                ++r;
                continue;
            }
            auto it = basis.find(r);
            if (it == basis.end()) {
                basis.emplace(r, std::move(v));
                v.clear();
                break;
            }
            std::vector<BigInt>& b = it->second;
            const ExtGcd e = ext_gcd(b[r], v[r]);
            const BigInt bf = b[r] / e.g;
            const BigInt vf = v[r] / e.g;
            for (std::size_t i = r; i < rows; ++i) {
                const BigInt nb = e.x * b[i] + e.y * v[i];
                const BigInt nv = bf * v[i] - vf * b[i];
                b[i] = nb;
                v[i] = nv;
            }
            ++r;
        }
    }
    IntMatrix out(rows);
    for (std::size_t r = 0; r < rows; ++r) out[r].resize(basis.size(), BigInt(0));
    std::size_t c = 0;
    for (const auto& [pivot, col] : basis) {
        (void)pivot;
        for (std::size_t r = 0; r < rows; ++r) out[r][c] = col[r];
        ++c;
    }
    return out;
}

}  // namespace skelcat
