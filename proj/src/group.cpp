#include "skelcat/group.hpp"

#include <algorithm>
#include <map>

#include "skelcat/errors.hpp"

namespace skelcat {

FiniteGroup::FiniteGroup(std::vector<std::vector<unsigned>> table) : table_(std::move(table)) {
    const std::size_t n = table_.size();
    if (n == 0) throw DomainError("group table must be nonempty");
    for (const auto& row : table_) {
        if (row.size() != n) throw DomainError("group table must be square");
        for (unsigned v : row)
            if (v >= n) throw DomainError("group table entry out of range");
    }
    // identity
    bool found = false;
    for (unsigned e = 0; e < n; ++e) {
        bool ok = true;
        for (unsigned x = 0; x < n && ok; ++x)
            if (table_[e][x] != x || table_[x][e] != x) ok = false;
        if (ok) {
            identity_ = e;
            found = true;
            break;
        }
    }
    if (!found) throw DomainError("group table has no identity");
    // associativity
    for (unsigned a = 0; a < n; ++a)
        for (unsigned b = 0; b < n; ++b)
            for (unsigned c = 0; c < n; ++c)
                if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                    throw DomainError("group table is not associative");
    // inverses
    inverse_.assign(n, 0);
    for (unsigned a = 0; a < n; ++a) {
        bool ok = false;
        for (unsigned b = 0; b < n; ++b)
            if (table_[a][b] == identity_ && table_[b][a] == identity_) {
                inverse_[a] = b;
                ok = true;
                break;
            }
        if (!ok) throw DomainError("group table has a non-invertible element");
    }
}

bool FiniteGroup::is_abelian() const {
    const std::size_t n = order();
    for (unsigned a = 0; a < n; ++a)
        for (unsigned b = static_cast<unsigned>(a) + 1; b < n; ++b)
            if (table_[a][b] != table_[b][a]) return false;
    return true;
}

long long FiniteGroup::element_order(unsigned a) const {
    long long ord = 1;
    unsigned x = a;
    while (x != identity_) {
        x = mul(x, a);
        ++ord;
    }
    return ord;
}

FiniteGroup FiniteGroup::subgroup(const std::vector<unsigned>& elems) const {
    const std::size_t m = elems.size();
    std::map<unsigned, unsigned> pos;
    for (unsigned i = 0; i < m; ++i) pos[elems[i]] = i;
    std::vector<std::vector<unsigned>> t(m, std::vector<unsigned>(m));
    for (unsigned i = 0; i < m; ++i)
        for (unsigned j = 0; j < m; ++j) {
            auto it = pos.find(mul(elems[i], elems[j]));
            if (it == pos.end()) throw DomainError("subset is not closed under the product");
            t[i][j] = it->second;
        }
    return FiniteGroup(std::move(t));
}

std::vector<long long> FiniteGroup::abelian_invariants() const {
    if (!is_abelian()) throw DomainError("abelian_invariants on a nonabelian group");
    const std::size_t n = order();
    // Presentation on all elements: e_i + e_j - e_{ij} = 0 for every pair.
    std::vector<std::vector<BigInt>> cols;
    cols.reserve(n * n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
            std::vector<BigInt> col(n, BigInt(0));
            col[i] += 1;
            col[j] += 1;
            col[mul(i, j)] -= 1;
            cols.push_back(std::move(col));
        }
    auto basis = lattice_column_basis(n, cols);
    auto s = smith_normal_form(basis);
    std::vector<long long> out;
    for (const auto& d : s.diagonal)
        if (d > 1) out.push_back(d.convert_to<long long>());
    return out;
}

FiniteGroup cyclic_group(std::size_t n) {
    std::vector<std::vector<unsigned>> t(n, std::vector<unsigned>(n));
    for (unsigned a = 0; a < n; ++a)
        for (unsigned b = 0; b < n; ++b) t[a][b] = static_cast<unsigned>((a + b) % n);
    return FiniteGroup(std::move(t));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    const std::size_t na = a.order(), nb = b.order();
    std::vector<std::vector<unsigned>> t(na * nb, std::vector<unsigned>(na * nb));
    for (unsigned i1 = 0; i1 < na; ++i1)
        for (unsigned j1 = 0; j1 < nb; ++j1)
            for (unsigned i2 = 0; i2 < na; ++i2)
                for (unsigned j2 = 0; j2 < nb; ++j2)
                    t[i1 * nb + j1][i2 * nb + j2] =
                        a.mul(i1, i2) * static_cast<unsigned>(nb) + b.mul(j1, j2);
    return FiniteGroup(std::move(t));
}

FiniteGroup dihedral_group(std::size_t n) {
    // elements r^i s^j, index i + n*j
    const std::size_t m = 2 * n;
    std::vector<std::vector<unsigned>> t(m, std::vector<unsigned>(m));
    for (unsigned i1 = 0; i1 < n; ++i1)
        for (unsigned j1 = 0; j1 < 2; ++j1)
            for (unsigned i2 = 0; i2 < n; ++i2)
                for (unsigned j2 = 0; j2 < 2; ++j2) {
                    unsigned i = j1 == 0 ? (i1 + i2) % n
                                         : static_cast<unsigned>((i1 + n - i2) % n);
                    unsigned j = (j1 + j2) % 2;
                    t[i1 + n * j1][i2 + n * j2] = i + static_cast<unsigned>(n) * j;
                }
    return FiniteGroup(std::move(t));
}

FiniteGroup symmetric_group_3() { return dihedral_group(3); }

FiniteGroup quaternion_group() {
    // index = basis*2 + sign, basis in {1, i, j, k}
    auto mul_base = [](unsigned a, unsigned b, unsigned& basis, unsigned& sign) {
        static const unsigned bas[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
        static const unsigned sgn[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
        basis = bas[a][b];
        sign = sgn[a][b];
    };
    std::vector<std::vector<unsigned>> t(8, std::vector<unsigned>(8));
    for (unsigned a = 0; a < 8; ++a)
        for (unsigned b = 0; b < 8; ++b) {
            unsigned basis, sign;
            mul_base(a / 2, b / 2, basis, sign);
            t[a][b] = basis * 2 + ((a % 2 + b % 2 + sign) % 2);
        }
    return FiniteGroup(std::move(t));
}

bool Cocycle::is_normalized() const {
    const unsigned e = group->identity();
    const std::size_t n = group->order();
    for (unsigned g = 0; g < n; ++g)
        if (!at(e, g).is_one() || !at(g, e).is_one()) return false;
    return true;
}

bool Cocycle::satisfies_cocycle_identity() const {
    const std::size_t n = group->order();
    for (unsigned g = 0; g < n; ++g)
        for (unsigned h = 0; h < n; ++h)
            for (unsigned k = 0; k < n; ++k) {
                const CycloNum lhs = at(g, h) * at(group->mul(g, h), k);
                const CycloNum rhs = at(g, group->mul(h, k)) * at(h, k);
                if (!(lhs == rhs)) return false;
            }
    return true;
}

Cocycle Cocycle::times(const Cocycle& other) const {
    Cocycle out{group, values};
    for (std::size_t i = 0; i < values.size(); ++i) out.values[i] = values[i] * other.values[i];
    return out;
}

Cocycle Cocycle::power(long long e) const {
    Cocycle out{group, values};
    for (std::size_t i = 0; i < values.size(); ++i) out.values[i] = values[i].pow(e);
    return out;
}

Cocycle trivial_cocycle(const FiniteGroup& g) {
    Cocycle c;
    c.group = std::make_shared<FiniteGroup>(g);
    c.values.assign(g.order() * g.order(), CycloNum(1));
    return c;
}

namespace {

// Normalized bar-resolution boundary d3: C3 -> C2 on identity-free tuples.
// Columns (one per triple) are returned as sparse +-1 stencils over pair slots.
std::vector<std::vector<BigInt>> boundary3_columns(const FiniteGroup& g,
                                                   const std::vector<unsigned>& nid,
                                                   const std::vector<long long>& pos) {
    const std::size_t m = nid.size();
    const unsigned e = g.identity();
    auto pair_index = [&](unsigned a, unsigned b) -> long long {
        return pos[a] * static_cast<long long>(m) + pos[b];
    };
    std::vector<std::vector<BigInt>> cols;
    cols.reserve(m * m * m);
    for (unsigned x : nid)
        for (unsigned y : nid)
            for (unsigned z : nid) {
                std::vector<BigInt> col(m * m, BigInt(0));
                col[pair_index(y, z)] += 1;
                const unsigned xy = g.mul(x, y);
                if (xy != e) col[pair_index(xy, z)] -= 1;
                const unsigned yz = g.mul(y, z);
                if (yz != e) col[pair_index(x, yz)] += 1;
                col[pair_index(x, y)] -= 1;
                cols.push_back(std::move(col));
            }
    return cols;
}

}  // namespace

H2Result h2_group(const FiniteGroup& g, std::size_t order_bound) {
    if (g.order() > order_bound)
        throw ResourceLimitError("group order " + std::to_string(g.order()) +
                                 " exceeds the configured bound " + std::to_string(order_bound));
    const std::size_t n = g.order();
    H2Result res;
    res.group = std::make_shared<FiniteGroup>(g);
    if (n == 1) return res;

    std::vector<unsigned> nid;
    std::vector<long long> pos(n, -1);
    for (unsigned x = 0; x < n; ++x)
        if (x != g.identity()) {
            pos[x] = static_cast<long long>(nid.size());
            nid.push_back(x);
        }
    const std::size_t m = nid.size();

    // Torsion of H_2 = ker d2 / im d3 equals the invariant factors of d3: in a
    // basis adapted to the Smith form of d3 the image is sum d_i Z f_i with
    // every f_i already a cycle (C1 is torsion-free), so the quotient torsion
    // is exactly the d_i > 1. Representatives pair against those cycles via
    // the rows of the left transform.
    auto cols = boundary3_columns(g, nid, pos);
    IntMatrix compressed = lattice_column_basis(m * m, cols);
    SnfResult snf = smith_normal_form(compressed);

    // Sanity: H_2 of a finite group is finite, i.e. rank ker d2 == rank d3.
    {
        const unsigned e = g.identity();
        IntMatrix d2(m, std::vector<BigInt>(m * m, BigInt(0)));
        for (unsigned x : nid)
            for (unsigned y : nid) {
                const std::size_t col =
                    static_cast<std::size_t>(pos[x]) * m + static_cast<std::size_t>(pos[y]);
                d2[static_cast<std::size_t>(pos[y])][col] += 1;
                const unsigned xy = g.mul(x, y);
                if (xy != e) d2[static_cast<std::size_t>(pos[xy])][col] -= 1;
                d2[static_cast<std::size_t>(pos[x])][col] += 1;
            }
        const std::size_t rank_d2 = smith_normal_form(std::move(d2)).rank;
        if (m * m - rank_d2 != snf.rank)
            throw DataInconsistencyError("bar-resolution ranks disagree (free part detected)");
    }

    for (std::size_t j = 0; j < snf.diagonal.size(); ++j) {
        if (snf.diagonal[j] <= 1) continue;
        const long long d = snf.diagonal[j].convert_to<long long>();
        res.invariants.push_back(d);
        // c(x,y) = zeta_d ^ U[j][pair(x,y)]; identity pairs are 1.
        Cocycle c;
        c.group = res.group;
        c.values.assign(n * n, CycloNum(1));
        for (unsigned x : nid)
            for (unsigned y : nid) {
                const std::size_t slot =
                    static_cast<std::size_t>(pos[x]) * m + static_cast<std::size_t>(pos[y]);
                BigInt expo = snf.left[j][slot] % d;
                if (expo < 0) expo += d;
                c.values[x * n + y] = CycloNum::root_of_unity(d, expo.convert_to<long long>());
            }
        res.generators.push_back(std::move(c));
    }
    return res;
}

std::vector<long long> H2Result::class_exponents(std::size_t class_id) const {
    std::vector<long long> e(invariants.size(), 0);
    for (std::size_t i = 0; i < invariants.size(); ++i) {
        e[i] = static_cast<long long>(class_id % static_cast<std::size_t>(invariants[i]));
        class_id /= static_cast<std::size_t>(invariants[i]);
    }
    return e;
}

Cocycle H2Result::class_representative(std::size_t class_id) const {
    if (!group) throw DomainError("empty H2 result");
    Cocycle c{group, std::vector<CycloNum>(group->order() * group->order(), CycloNum(1))};
    const auto exps = class_exponents(class_id);
    for (std::size_t i = 0; i < exps.size(); ++i)
        if (exps[i] != 0) c = c.times(generators[i].power(exps[i]));
    return c;
}

std::vector<unsigned> cocycle_radical(const FiniteGroup& h, const Cocycle& c) {
    std::vector<unsigned> rad;
    for (unsigned x = 0; x < h.order(); ++x) {
        bool central = true;
        for (unsigned y = 0; y < h.order() && central; ++y)
            if (!(c.at(x, y) == c.at(y, x))) central = false;
        if (central) rad.push_back(x);
    }
    return rad;
}

std::vector<long long> projective_irrep_profile(const FiniteGroup& h, const Cocycle& c) {
    if (!h.is_abelian())
        throw DomainError("projective_irrep_profile supports abelian groups only");
    const auto rad = cocycle_radical(h, c);
    const long long z = static_cast<long long>(rad.size());
    const long long quot = static_cast<long long>(h.order()) / z;
    long long root = 0;
    while (root * root < quot) ++root;
    if (root * root != quot)
        throw DataInconsistencyError("|H|/|Z(c)| is not a perfect square");
    return std::vector<long long>(static_cast<std::size_t>(z), root);
}

}  // namespace skelcat
