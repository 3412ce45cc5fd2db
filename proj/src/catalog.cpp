#include "skelcat/catalog.hpp"

#include <functional>
#include <map>

#include "skelcat/errors.hpp"

namespace skelcat {

namespace {

std::vector<long long> empty_tensor(std::size_t r) {
    return std::vector<long long>(r * r * r, 0);
}

void set_n(std::vector<long long>& t, std::size_t r, std::size_t a, std::size_t b, std::size_t c,
           long long v) {
    t[(a * r + b) * r + c] = v;
}

// Fusion ring of a finite abelian group presented by an explicit product map.
FusionRing group_ring(std::vector<std::string> names,
                      const std::function<std::size_t(std::size_t, std::size_t)>& mul,
                      const std::function<std::size_t(std::size_t)>& inv) {
    const std::size_t r = names.size();
    auto t = empty_tensor(r);
    std::vector<std::size_t> dual(r);
    for (std::size_t a = 0; a < r; ++a) {
        dual[a] = inv(a);
        for (std::size_t b = 0; b < r; ++b) set_n(t, r, a, b, mul(a, b), 1);
    }
    return FusionRing(std::move(names), 0, std::move(dual), std::move(t));
}

std::vector<CycloNum> ones(std::size_t r) { return std::vector<CycloNum>(r, CycloNum(1)); }

CycloNum sqrt2() {
    // zeta_8 + zeta_8^-1
    return CycloNum::root_of_unity(8, 1) + CycloNum::root_of_unity(8, 7);
}

CycloNum golden_ratio() {
    // (1+sqrt 5)/2 = 1 + zeta_5 + zeta_5^4
    return CycloNum(1) + CycloNum::root_of_unity(5, 1) + CycloNum::root_of_unity(5, 4);
}

CatalogEntry make_trivial() {
    FusionRing ring({"1"}, 0, {0}, {1});
    return {"trivial", {std::move(ring), ones(1), ones(1), "trivial"},
            "rank-1 category; unit only"};
}

CatalogEntry make_rep_z2() {
    FusionRing ring = group_ring({"1", "eps"}, [](std::size_t a, std::size_t b) { return a ^ b; },
                                 [](std::size_t a) { return a; });
    return {"rep_z2", {std::move(ring), ones(2), ones(2), "rep_z2"},
            "character ring of Z2; symmetric, all twists 1"};
}

CatalogEntry make_rep_z3() {
    FusionRing ring = group_ring({"1", "w", "w2"},
                                 [](std::size_t a, std::size_t b) { return (a + b) % 3; },
                                 [](std::size_t a) { return (3 - a) % 3; });
    return {"rep_z3", {std::move(ring), ones(3), ones(3), "rep_z3"},
            "character ring of Z3; duals swap the two nontrivial characters"};
}

CatalogEntry make_rep_z2z2() {
    FusionRing ring = group_ring({"1", "a", "b", "ab"},
                                 [](std::size_t x, std::size_t y) { return x ^ y; },
                                 [](std::size_t x) { return x; });
    return {"rep_z2z2", {std::move(ring), ones(4), ones(4), "rep_z2z2"},
            "character ring of Z2 x Z2"};
}

CatalogEntry make_rep_s3() {
    const std::size_t r = 3;  // 1, sgn, std
    auto t = empty_tensor(r);
    set_n(t, r, 0, 0, 0, 1);
    set_n(t, r, 0, 1, 1, 1);
    set_n(t, r, 0, 2, 2, 1);
    set_n(t, r, 1, 0, 1, 1);
    set_n(t, r, 1, 1, 0, 1);
    set_n(t, r, 1, 2, 2, 1);
    set_n(t, r, 2, 0, 2, 1);
    set_n(t, r, 2, 1, 2, 1);
    set_n(t, r, 2, 2, 0, 1);
    set_n(t, r, 2, 2, 1, 1);
    set_n(t, r, 2, 2, 2, 1);
    FusionRing ring({"1", "sgn", "std"}, 0, {0, 1, 2}, std::move(t));
    std::vector<CycloNum> dims{CycloNum(1), CycloNum(1), CycloNum(2)};
    return {"rep_s3", {std::move(ring), ones(3), std::move(dims), "rep_s3"},
            "character ring of S3: degrees 1,1,2; std (x) std = 1 + sgn + std"};
}

CatalogEntry make_rep_d4() {
    const std::size_t r = 5;  // 1, a, b, ab (the Z2xZ2 of linear characters), s (degree 2)
    auto t = empty_tensor(r);
    for (std::size_t x = 0; x < 4; ++x)
        for (std::size_t y = 0; y < 4; ++y) set_n(t, r, x, y, x ^ y, 1);
    for (std::size_t x = 0; x < 4; ++x) {
        set_n(t, r, x, 4, 4, 1);
        set_n(t, r, 4, x, 4, 1);
    }
    for (std::size_t x = 0; x < 4; ++x) set_n(t, r, 4, 4, x, 1);
    FusionRing ring({"1", "a", "b", "ab", "s"}, 0, {0, 1, 2, 3, 4}, std::move(t));
    std::vector<CycloNum> dims{CycloNum(1), CycloNum(1), CycloNum(1), CycloNum(1), CycloNum(2)};
    return {"rep_d4", {std::move(ring), ones(5), std::move(dims), "rep_d4"},
            "character ring of the dihedral group of order 8; s restricts to twice the sign on the centre"};
}

CatalogEntry make_toric() {
    FusionRing ring = group_ring({"1", "e", "m", "f"},
                                 [](std::size_t x, std::size_t y) { return x ^ y; },
                                 [](std::size_t x) { return x; });
    std::vector<CycloNum> twists{CycloNum(1), CycloNum(1), CycloNum(1), CycloNum(-1)};
    return {"toric_code", {std::move(ring), std::move(twists), ones(4), "toric_code"},
            "Z2 x Z2 fusion with theta = (1,1,1,-1); Kitaev's Z2 model"};
}

CatalogEntry make_ising() {
    const std::size_t r = 3;  // 1, psi, sigma
    auto t = empty_tensor(r);
    set_n(t, r, 0, 0, 0, 1);
    set_n(t, r, 0, 1, 1, 1);
    set_n(t, r, 0, 2, 2, 1);
    set_n(t, r, 1, 0, 1, 1);
    set_n(t, r, 1, 1, 0, 1);
    set_n(t, r, 1, 2, 2, 1);
    set_n(t, r, 2, 0, 2, 1);
    set_n(t, r, 2, 1, 2, 1);
    set_n(t, r, 2, 2, 0, 1);
    set_n(t, r, 2, 2, 1, 1);
    FusionRing ring({"1", "psi", "sigma"}, 0, {0, 1, 2}, std::move(t));
    std::vector<CycloNum> twists{CycloNum(1), CycloNum(-1), CycloNum::root_of_unity(16, 1)};
    std::vector<CycloNum> dims{CycloNum(1), CycloNum(1), sqrt2()};
    return {"ising", {std::move(ring), std::move(twists), std::move(dims), "ising"},
            "Ising fusion rules; theta_sigma fixed to zeta_16 among the eight admissible choices"};
}

CatalogEntry make_fibonacci() {
    const std::size_t r = 2;  // 1, tau
    auto t = empty_tensor(r);
    set_n(t, r, 0, 0, 0, 1);
    set_n(t, r, 0, 1, 1, 1);
    set_n(t, r, 1, 0, 1, 1);
    set_n(t, r, 1, 1, 0, 1);
    set_n(t, r, 1, 1, 1, 1);
    FusionRing ring({"1", "tau"}, 0, {0, 1}, std::move(t));
    std::vector<CycloNum> twists{CycloNum(1), CycloNum::root_of_unity(5, 2)};
    std::vector<CycloNum> dims{CycloNum(1), golden_ratio()};
    return {"fibonacci", {std::move(ring), std::move(twists), std::move(dims), "fibonacci"},
            "tau (x) tau = 1 + tau, theta_tau = zeta_5^2, d_tau the golden ratio"};
}

CatalogEntry make_semion() {
    FusionRing ring = group_ring({"1", "s"}, [](std::size_t a, std::size_t b) { return a ^ b; },
                                 [](std::size_t a) { return a; });
    std::vector<CycloNum> twists{CycloNum(1), CycloNum::root_of_unity(4, 1)};
    return {"semion", {std::move(ring), std::move(twists), ones(2), "semion"},
            "Z2 fusion with theta_s = i"};
}

const std::vector<CatalogEntry>& entries() {
    static const std::vector<CatalogEntry> all = [] {
        std::vector<CatalogEntry> v;
        v.push_back(make_trivial());
        v.push_back(make_rep_z2());
        v.push_back(make_rep_z3());
        v.push_back(make_rep_z2z2());
        v.push_back(make_rep_s3());
        v.push_back(make_rep_d4());
        v.push_back(make_toric());
        v.push_back(make_ising());
        v.push_back(make_fibonacci());
        v.push_back(make_semion());
        return v;
    }();
    return all;
}

}  // namespace

const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& e : entries()) v.push_back(e.name);
        return v;
    }();
    return names;
}

const CatalogEntry& catalog_entry(const std::string& name) {
    for (const auto& e : entries())
        if (e.name == name) return e;
    throw LookupError("unknown catalog entry: " + name);
}

CategorySpec load_named(const std::string& name) { return catalog_entry(name).spec; }

CategorySpec deligne_product(const CategorySpec& a, const CategorySpec& b) {
    const std::size_t ra = a.rank(), rb = b.rank();
    const std::size_t r = ra * rb;
    std::vector<std::string> names;
    names.reserve(r);
    for (std::size_t i = 0; i < ra; ++i)
        for (std::size_t j = 0; j < rb; ++j)
            names.push_back("(" + a.ring.name(i) + "," + b.ring.name(j) + ")");
    std::vector<std::size_t> dual(r);
    auto idx = [rb](std::size_t i, std::size_t j) { return i * rb + j; };
    for (std::size_t i = 0; i < ra; ++i)
        for (std::size_t j = 0; j < rb; ++j) dual[idx(i, j)] = idx(a.ring.dual(i), b.ring.dual(j));
    std::vector<long long> t(r * r * r, 0);
    for (std::size_t i1 = 0; i1 < ra; ++i1)
        for (std::size_t j1 = 0; j1 < rb; ++j1)
            for (std::size_t i2 = 0; i2 < ra; ++i2)
                for (std::size_t j2 = 0; j2 < rb; ++j2)
                    for (std::size_t i3 = 0; i3 < ra; ++i3) {
                        const long long na = a.ring.N(i1, i2, i3);
                        if (na == 0) continue;
                        for (std::size_t j3 = 0; j3 < rb; ++j3) {
                            const long long nb = b.ring.N(j1, j2, j3);
                            if (nb == 0) continue;
                            t[(idx(i1, j1) * r + idx(i2, j2)) * r + idx(i3, j3)] = na * nb;
                        }
                    }
    FusionRing ring(std::move(names), idx(a.ring.unit(), b.ring.unit()), std::move(dual),
                    std::move(t));
    std::vector<CycloNum> twists;
    twists.reserve(r);
    for (std::size_t i = 0; i < ra; ++i)
        for (std::size_t j = 0; j < rb; ++j) twists.push_back(a.twists[i] * b.twists[j]);
    std::optional<std::vector<CycloNum>> dims;
    if (a.dims && b.dims) {
        dims.emplace();
        dims->reserve(r);
        for (std::size_t i = 0; i < ra; ++i)
            for (std::size_t j = 0; j < rb; ++j) dims->push_back((*a.dims)[i] * (*b.dims)[j]);
    }
    CategorySpec out{std::move(ring), std::move(twists), std::move(dims),
                     a.name + " x " + b.name};
    return out;
}

}  // namespace skelcat
