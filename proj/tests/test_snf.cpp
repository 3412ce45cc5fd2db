#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "skelcat/snf.hpp"

using namespace skelcat;

namespace {

IntMatrix mat(const std::vector<std::vector<long long>>& v) {
    IntMatrix m(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        for (long long x : v[i]) m[i].push_back(BigInt(x));
    return m;
}

BigInt det3(const IntMatrix& u) {
    // determinant of a small square matrix by cofactor expansion
    const std::size_t n = u.size();
    if (n == 1) return u[0][0];
    BigInt d = 0;
    for (std::size_t j = 0; j < n; ++j) {
        IntMatrix sub(n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) sub[r - 1].push_back(u[r][c]);
        BigInt term = u[0][j] * det3(sub);
        d += (j % 2 == 0) ? term : -term;
    }
    return d;
}

}  // namespace

TEST_CASE("smith normal form of a classic example") {
    // diag invariants of [[2,4,4],[-6,6,12],[10,-4,-16]] are 2, 6, 12
    auto s = smith_normal_form(mat({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}));
    REQUIRE(s.diagonal.size() == 3);
    CHECK(s.diagonal[0] == 2);
    CHECK(s.diagonal[1] == 6);
    CHECK(s.diagonal[2] == 12);
    CHECK(s.rank == 3);
    BigInt du = det3(s.left);
    CHECK((du == 1 || du == -1));
}

TEST_CASE("divisibility chain and left transform on random matrices") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> dim(1, 6), val(-5, 5);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t m = static_cast<std::size_t>(dim(rng));
        const std::size_t n = static_cast<std::size_t>(dim(rng));
        IntMatrix a(m, std::vector<BigInt>(n));
        for (auto& row : a)
            for (auto& x : row) x = BigInt(val(rng));
        auto s = smith_normal_form(a);
        // chain
        for (std::size_t i = 0; i + 1 < s.diagonal.size(); ++i) {
            if (s.diagonal[i + 1] != 0) {
                REQUIRE(s.diagonal[i] != 0);
                CHECK(s.diagonal[i + 1] % s.diagonal[i] == 0);
            }
        }
        for (const auto& d : s.diagonal) CHECK(d >= 0);
        // U unimodular
        if (m <= 4) {
            BigInt du = det3(s.left);
            CHECK((du == 1 || du == -1));
        }
    }
}

TEST_CASE("lattice column basis preserves the span") {
    // columns of [[2,0],[0,3],[4,6]]-style family plus combinations
    std::vector<std::vector<BigInt>> cols;
    cols.push_back({BigInt(2), BigInt(0), BigInt(4)});
    cols.push_back({BigInt(0), BigInt(3), BigInt(6)});
    cols.push_back({BigInt(2), BigInt(3), BigInt(10)});  // sum of the two
    cols.push_back({BigInt(4), BigInt(0), BigInt(8)});   // multiple
    IntMatrix basis = lattice_column_basis(3, cols);
    // compressed to at most 2 independent columns with same invariants
    auto s1 = smith_normal_form(basis);
    IntMatrix full(3);
    for (std::size_t r = 0; r < 3; ++r)
        for (const auto& c : cols) full[r].push_back(c[r]);
    auto s2 = smith_normal_form(full);
    std::vector<BigInt> i1 = invariant_factors(s1), i2 = invariant_factors(s2);
    CHECK(s1.rank == s2.rank);
    // invariant factors (including 1s) of nonzero part must agree
    std::vector<BigInt> d1, d2;
    for (const auto& d : s1.diagonal)
        if (d != 0) d1.push_back(d);
    for (const auto& d : s2.diagonal)
        if (d != 0) d2.push_back(d);
    CHECK(d1 == d2);
}

TEST_CASE("random lattice compression agrees with direct smith form") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> dim(1, 5), nc(1, 10), val(-4, 4);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t rows = static_cast<std::size_t>(dim(rng));
        const std::size_t ncols = static_cast<std::size_t>(nc(rng));
        std::vector<std::vector<BigInt>> cols(ncols, std::vector<BigInt>(rows));
        IntMatrix full(rows, std::vector<BigInt>(ncols));
        for (std::size_t c = 0; c < ncols; ++c)
            for (std::size_t r = 0; r < rows; ++r) {
                cols[c][r] = BigInt(val(rng));
                full[r][c] = cols[c][r];
            }
        auto direct = smith_normal_form(full);
        auto compressed = smith_normal_form(lattice_column_basis(rows, cols));
        std::vector<BigInt> d1, d2;
        for (const auto& d : direct.diagonal)
            if (d != 0) d1.push_back(d);
        for (const auto& d : compressed.diagonal)
            if (d != 0) d2.push_back(d);
        CHECK(d1 == d2);
    }
}
