#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "skelcat/catalog.hpp"
#include "skelcat/errors.hpp"
#include "skelcat/ribbon.hpp"

using namespace skelcat;

TEST_CASE("catalog inventory") {
    const auto& names = catalog_names();
    CHECK(names.size() == 10);
    CHECK_THROWS_AS(load_named("nope"), LookupError);
    CHECK(load_named("trivial").rank() == 1);
    CHECK(load_named("fibonacci").rank() == 2);
    CHECK(load_named("rep_s3").rank() == 3);
}

TEST_CASE("every entry passes ring and ribbon validation with certified dims") {
    for (const auto& name : catalog_names()) {
        CategorySpec spec = load_named(name);
        INFO(name);
        CHECK(validate_ring(spec.ring).ok());
        CHECK(validate_ribbon(spec).ok());
        REQUIRE(spec.dims.has_value());
        CHECK(fp_dims(spec.ring, spec.dims).exact_certified);
    }
}

TEST_CASE("named fusion rules match the catalog contract") {
    CategorySpec fib = load_named("fibonacci");
    const CycloNum phi = fib.dims->at(1);
    CHECK(phi * phi == phi + CycloNum(1));
    CHECK(fib.twists[1] == CycloNum::root_of_unity(5, 2));

    CategorySpec s3 = load_named("rep_s3");
    const std::size_t std_ = s3.ring.index_of("std");
    CHECK(s3.dims->at(std_) == CycloNum(2));
    // std (x) std = 1 + sgn + std
    for (std::size_t c = 0; c < 3; ++c) CHECK(s3.ring.N(std_, std_, c) == 1);

    CategorySpec toric = load_named("toric_code");
    CHECK(toric.twists[3] == CycloNum(-1));

    CategorySpec ising = load_named("ising");
    CHECK(ising.twists[2] == CycloNum::root_of_unity(16, 1));
    CHECK(ising.ring.N(2, 2, 0) == 1);
    CHECK(ising.ring.N(2, 2, 1) == 1);

    CategorySpec semion = load_named("semion");
    CHECK(semion.twists[1] == CycloNum::root_of_unity(4, 1));
    CHECK(semion.ring.N(1, 1, 0) == 1);
}

TEST_CASE("trivial x ising is ising up to label renaming") {
    CategorySpec lhs = deligne_product(load_named("trivial"), load_named("ising"));
    CategorySpec rhs = load_named("ising");
    REQUIRE(lhs.rank() == rhs.rank());
    for (std::size_t a = 0; a < 3; ++a) {
        CHECK(lhs.twists[a] == rhs.twists[a]);
        CHECK(lhs.dims->at(a) == rhs.dims->at(a));
        for (std::size_t b = 0; b < 3; ++b) {
            CHECK(lhs.ring.dual(a) == rhs.ring.dual(a));
            for (std::size_t c = 0; c < 3; ++c) CHECK(lhs.ring.N(a, b, c) == rhs.ring.N(a, b, c));
        }
    }
}

TEST_CASE("deligne product: rank, validation, global dimension") {
    CategorySpec prod = deligne_product(load_named("rep_z2"), load_named("fibonacci"));
    CHECK(prod.rank() == 4);
    CHECK(validate_ring(prod.ring).ok());
    CHECK(validate_ribbon(prod).ok());
    DimReport dims = fp_dims(prod.ring, prod.dims);
    CHECK(dims.exact_certified);
    // global dim 2 * (1 + phi^2)
    CategorySpec fib = load_named("fibonacci");
    const CycloNum phi = fib.dims->at(1);
    CHECK(*dims.exact_global == CycloNum(2) * (CycloNum(1) + phi * phi));
}

TEST_CASE("S~ of a product is the Kronecker product, centre splits (all pairs)") {
    const auto& names = catalog_names();
    for (const auto& na : names)
        for (const auto& nb : names) {
            CategorySpec a = load_named(na), b = load_named(nb);
            CategorySpec p = deligne_product(a, b);
            SMatrix sa = s_matrix(a), sb = s_matrix(b), sp = s_matrix(p);
            const std::size_t ra = a.rank(), rb = b.rank();
            for (std::size_t i1 = 0; i1 < ra; ++i1)
                for (std::size_t j1 = 0; j1 < rb; ++j1)
                    for (std::size_t i2 = 0; i2 < ra; ++i2)
                        for (std::size_t j2 = 0; j2 < rb; ++j2)
                            CHECK(sp.at(i1 * rb + j1, i2 * rb + j2) ==
                                  sa.at(i1, i2) * sb.at(j1, j2));
            // centre(a x b) = centre(a) x centre(b)
            std::set<std::size_t> expect;
            for (std::size_t ca : centre(a))
                for (std::size_t cb : centre(b)) expect.insert(ca * rb + cb);
            auto got = centre(p);
            CHECK(std::set<std::size_t>(got.begin(), got.end()) == expect);
        }
}

TEST_CASE("toric x toric is modular of rank 16") {
    CategorySpec p = deligne_product(load_named("toric_code"), load_named("toric_code"));
    CHECK(p.rank() == 16);
    CHECK(is_modular(p).modular);
}

TEST_CASE("catalog Rep(G) entries are symmetric and bosonic") {
    for (const auto& name : {"rep_z2", "rep_z3", "rep_z2z2", "rep_s3", "rep_d4"}) {
        CategorySpec spec = load_named(name);
        for (std::size_t a = 0; a < spec.rank(); ++a) {
            CHECK(is_degenerate(spec, a).degenerate);
            CHECK(spec.twists[a].is_one());
        }
    }
}
