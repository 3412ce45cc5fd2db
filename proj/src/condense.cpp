#include "skelcat/condense.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "skelcat/errors.hpp"
#include "skelcat/linalg.hpp"

namespace skelcat {

namespace {

void require_valid_subcat(const CategorySpec& spec, const TannakianSubcat& t) {
    if (t.labels.empty()) throw DomainError("empty subcategory");
    std::set<std::size_t> in(t.labels.begin(), t.labels.end());
    if (!in.count(spec.ring.unit())) throw DomainError("subcategory must contain the unit");
    for (std::size_t a : t.labels) {
        if (a >= spec.rank()) throw DomainError("subcategory label out of range for this spec");
        auto deg = is_degenerate(spec, a);
        if (!deg.degenerate) {
            const auto& w = *deg.witness;
            throw DegeneracyError("label " + spec.ring.name(a) + " is not degenerate",
                                  a, w.against, w.channel, display_string(w.phase));
        }
        if (!spec.twists[a].is_one())
            throw DomainError("subcategory label " + spec.ring.name(a) + " is not bosonic");
        if (!in.count(spec.ring.dual(a)))
            throw DomainError("subcategory not dual-closed");
        for (std::size_t b : t.labels)
            for (std::size_t c = 0; c < spec.rank(); ++c)
                if (spec.ring.N(a, b, c) != 0 && !in.count(c))
                    throw DomainError("subcategory not fusion-closed");
    }
    if (t.irrep_dims.size() != t.labels.size())
        throw DomainError("subcategory is missing its irrep dimensions");
}

const std::vector<CycloNum>& require_dims(const CategorySpec& spec) {
    if (!spec.dims) throw MissingExactDimsError("condensation requires exact dims");
    return *spec.dims;
}

struct DisjointSets {
    std::vector<std::size_t> parent;
    explicit DisjointSets(std::size_t n) : parent(n) {
        for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

// Positive real comparison of an exact real cyclotomic against zero.
bool nonnegative_real(const CycloNum& x) {
    if (x.is_zero()) return true;
    return x.to_complex().real() > 0.0;
}

std::string condensed_label_name(const FusionRing& ring, std::size_t carrier,
                                 std::size_t ordinal, std::size_t siblings) {
    std::string name = ring.name(carrier) + "'";
    if (siblings > 1) name += std::to_string(ordinal);
    return name;
}

// Shared tail of both condensation routes: given the decomposition matrix m
// (rows = original labels, cols = condensed simples), condensed dims and
// twists, solve for the condensed fusion tensor and assemble the category.
CondensationResult assemble_condensed(const CategorySpec& spec, const TannakianSubcat& t,
                                      OrbitReport report,
                                      const std::vector<std::vector<long long>>& m,
                                      const std::vector<CycloNum>& cond_dims,
                                      const std::vector<CycloNum>& cond_twists,
                                      const std::vector<std::size_t>& equation_rows) {
    const std::size_t r = spec.rank();
    const std::size_t rc = cond_dims.size();
    const auto& dk = t.irrep_dims;

    // W[a][b][c] = sum_k d_k * mult(c in gamma_k (x) a (x) b)
    auto hom_weight = [&](std::size_t a, std::size_t b, std::size_t c) {
        long long w = 0;
        for (std::size_t ki = 0; ki < t.labels.size(); ++ki) {
            const std::size_t gamma = t.labels[ki];
            long long inner = 0;
            for (std::size_t e = 0; e < r; ++e) {
                const long long n1 = spec.ring.N(gamma, a, e);
                if (n1 != 0) inner += n1 * spec.ring.N(e, b, c);
            }
            w += dk[ki] * inner;
        }
        return w;
    };

    // Linear system over the representative rows: unknowns N~[x][y][z].
    const std::size_t unknowns = rc * rc * rc;
    Matrix<Rational> a_mat;
    std::vector<Rational> rhs;
    for (std::size_t a : equation_rows)
        for (std::size_t b : equation_rows)
            for (std::size_t c : equation_rows) {
                std::vector<Rational> row(unknowns, Rational(0));
                for (std::size_t x = 0; x < rc; ++x) {
                    if (m[a][x] == 0) continue;
                    for (std::size_t y = 0; y < rc; ++y) {
                        if (m[b][y] == 0) continue;
                        for (std::size_t z = 0; z < rc; ++z) {
                            if (m[c][z] == 0) continue;
                            row[(x * rc + y) * rc + z] += Rational(m[a][x] * m[b][y] * m[c][z]);
                        }
                    }
                }
                a_mat.push_back(std::move(row));
                rhs.push_back(Rational(hom_weight(a, b, c)));
            }
    auto solved = solve_linear(std::move(a_mat), std::move(rhs));
    if (solved.status == SolveStatus::underdetermined)
        throw AmbiguityError(
            "condensed fusion tensor is underdetermined by the skeletal data", 0);
    if (solved.status == SolveStatus::inconsistent)
        throw DataInconsistencyError("no fusion tensor is consistent with the Hom counts");
    std::vector<long long> tensor(unknowns, 0);
    for (std::size_t i = 0; i < unknowns; ++i) {
        const Rational& v = solved.solution[i];
        if (!is_integer(v) || v < 0)
            throw DataInconsistencyError("condensed fusion tensor is not nonnegative-integer");
        tensor[i] = v.convert_to<long long>();
    }

    // Verify the full (non-deduplicated) Hom system.
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b)
            for (std::size_t c = 0; c < r; ++c) {
                long long lhs = 0;
                for (std::size_t x = 0; x < rc; ++x) {
                    if (m[a][x] == 0) continue;
                    for (std::size_t y = 0; y < rc; ++y) {
                        if (m[b][y] == 0) continue;
                        for (std::size_t z = 0; z < rc; ++z)
                            lhs += m[a][x] * m[b][y] * m[c][z] * tensor[(x * rc + y) * rc + z];
                    }
                }
                if (lhs != hom_weight(a, b, c))
                    throw DataInconsistencyError("fusion solve fails the full Hom system");
            }

    // Names: carrier = lowest original label seeing the column.
    std::vector<std::size_t> carrier(rc, r);
    for (std::size_t x = 0; x < rc; ++x)
        for (std::size_t a = 0; a < r; ++a)
            if (m[a][x] != 0) {
                carrier[x] = a;
                break;
            }
    for (std::size_t x = 0; x < rc; ++x)
        if (carrier[x] == r)
            throw DataInconsistencyError("condensed simple outside the image (dominance fails)");
    std::vector<std::string> names(rc);
    for (std::size_t x = 0; x < rc; ++x) {
        std::size_t siblings = 0, ordinal = 0;
        for (std::size_t y = 0; y < rc; ++y) {
            if (carrier[y] != carrier[x]) continue;
            if (y < x) ++ordinal;
            ++siblings;
        }
        names[x] = condensed_label_name(spec.ring, carrier[x], ordinal, siblings);
    }

    // Unit: the unique column of the original unit's row.
    std::size_t unit_col = rc;
    for (std::size_t x = 0; x < rc; ++x)
        if (m[spec.ring.unit()][x] != 0) {
            if (unit_col != rc || m[spec.ring.unit()][x] != 1)
                throw DataInconsistencyError("unit row of the decomposition is not a single 1");
            unit_col = x;
        }
    if (unit_col == rc) throw DataInconsistencyError("unit row of the decomposition is empty");

    // Duals from the fusion tensor.
    std::vector<std::size_t> dual(rc, rc);
    for (std::size_t x = 0; x < rc; ++x) {
        for (std::size_t y = 0; y < rc; ++y)
            if (tensor[(x * rc + y) * rc + unit_col] != 0) {
                if (dual[x] != rc)
                    throw DataInconsistencyError("condensed dual is not unique");
                dual[x] = y;
            }
        if (dual[x] == rc) throw DataInconsistencyError("condensed label has no dual");
    }

    FusionRing cond_ring(names, unit_col, dual, tensor);
    CategorySpec condensed{std::move(cond_ring), cond_twists, cond_dims,
                           spec.name.empty() ? "condensed" : spec.name + " condensed"};
    {
        auto ring_rep = validate_ring(condensed.ring);
        if (!ring_rep.ok())
            throw DataInconsistencyError("condensed ring fails validation: " +
                                         ring_rep.violations.front().detail);
        auto ribbon_rep = validate_ribbon(condensed);
        if (!ribbon_rep.ok())
            throw DataInconsistencyError("condensed ribbon data fails validation: " +
                                         ribbon_rep.violations.front().detail);
        fp_dims(condensed.ring, condensed.dims);  // certifies the dims
    }

    long long group_order = 0;
    for (long long d : t.irrep_dims) group_order += d * d;
    return CondensationResult{std::move(condensed), m, std::move(report), group_order};
}

}  // namespace

const char* resolution_name(Orbit::Resolution r) {
    switch (r) {
        case Orbit::Resolution::not_applicable: return "not-applicable";
        case Orbit::Resolution::unique_class: return "unique";
        case Orbit::Resolution::inferred: return "inferred";
        case Orbit::Resolution::supplied: return "supplied";
    }
    return "?";
}

long long extended_hom(const CategorySpec& spec, const TannakianSubcat& t, std::size_t eta1,
                       std::size_t eta2) {
    require_valid_subcat(spec, t);
    if (eta1 >= spec.rank() || eta2 >= spec.rank())
        throw LookupError("extended_hom: label out of range");
    long long out = 0;
    for (std::size_t ki = 0; ki < t.labels.size(); ++ki)
        out += t.irrep_dims[ki] * spec.ring.N(t.labels[ki], eta1, eta2);
    return out;
}

std::vector<std::vector<long long>> extended_hom_matrix(const CategorySpec& spec,
                                                        const TannakianSubcat& t) {
    require_valid_subcat(spec, t);
    const std::size_t r = spec.rank();
    std::vector<std::vector<long long>> m(r, std::vector<long long>(r, 0));
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b) {
            long long v = 0;
            for (std::size_t ki = 0; ki < t.labels.size(); ++ki)
                v += t.irrep_dims[ki] * spec.ring.N(t.labels[ki], a, b);
            m[a][b] = v;
        }
    return m;
}

OrbitReport orbits_and_stabilizers(const CategorySpec& spec, const TannakianSubcat& t) {
    require_valid_subcat(spec, t);
    const std::size_t r = spec.rank();
    DisjointSets ds(r);
    for (std::size_t gamma : t.labels)
        for (std::size_t a = 0; a < r; ++a)
            for (std::size_t c = 0; c < r; ++c)
                if (spec.ring.N(gamma, a, c) != 0) ds.unite(a, c);

    std::map<std::size_t, std::vector<std::size_t>> buckets;
    for (std::size_t a = 0; a < r; ++a) buckets[ds.find(a)].push_back(a);

    OrbitReport report;
    report.pointed = t.pointed() && t.group != nullptr;
    for (auto& [root, labels] : buckets) {
        Orbit o;
        std::sort(labels.begin(), labels.end());
        o.labels = labels;
        o.representative = labels.front();
        // twist constancy (guaranteed for valid data; asserted)
        for (std::size_t a : o.labels)
            if (!(spec.twists[a] == spec.twists[o.representative]))
                throw DataInconsistencyError("twist varies over the orbit of " +
                                             spec.ring.name(o.representative));
        if (report.pointed) {
            // free simple action: gamma (x) eta is simple for invertible gamma
            std::vector<unsigned> stab;
            for (std::size_t ki = 0; ki < t.labels.size(); ++ki) {
                long long total = 0;
                for (std::size_t c = 0; c < r; ++c)
                    total += spec.ring.N(t.labels[ki], o.representative, c);
                if (total != 1)
                    throw DataInconsistencyError(
                        "invertible label does not act by permutation on simples");
                if (spec.ring.N(t.labels[ki], o.representative, o.representative) == 1)
                    stab.push_back((*t.label_to_element)[ki]);
            }
            o.stabilizer = stab;
            o.stabilizer_group = std::make_shared<FiniteGroup>(t.group->subgroup(stab));
            o.index = o.labels.size();
            if (o.labels.size() * stab.size() != t.labels.size())
                throw DataInconsistencyError("orbit-stabilizer identity fails on the orbit of " +
                                             spec.ring.name(o.representative));
            if (spec.dims) {
                for (std::size_t a : o.labels)
                    if (!((*spec.dims)[a] == (*spec.dims)[o.representative]))
                        throw DataInconsistencyError("dimension varies over the orbit of " +
                                                     spec.ring.name(o.representative));
            }
        }
        report.orbits.push_back(std::move(o));
    }
    return report;
}

CondensationResult condense_pointed(const CategorySpec& spec, const TannakianSubcat& t,
                                    const std::map<std::size_t, std::size_t>& cocycle_overrides) {
    require_valid_subcat(spec, t);
    const auto& dims = require_dims(spec);
    if (!t.pointed() || t.group == nullptr || !t.label_to_element)
        throw DomainError("condense_pointed needs a pointed subcategory with its group resolved");

    OrbitReport report = orbits_and_stabilizers(spec, t);
    const std::size_t r = spec.rank();

    struct OrbitPlan {
        FiniteGroup stabilizer;
        H2Result h2;
        std::vector<std::size_t> candidate_classes;
    };
    std::vector<OrbitPlan> plans;
    plans.reserve(report.orbits.size());

    for (auto& orbit : report.orbits) {
        FiniteGroup stab = *orbit.stabilizer_group;
        H2Result h2 = h2_group(stab);
        orbit.h2_invariants = h2.invariants;
        const CycloNum& d_eta = dims[orbit.representative];
        const long long stab_order = static_cast<long long>(stab.order());

        std::vector<std::size_t> candidates;
        auto admissible = [&](std::size_t class_id) {
            Cocycle c = h2.class_representative(class_id);
            const auto profile = projective_irrep_profile(stab, c);
            // d_x = d_eta * dim(pi) / |H| must be >= 1
            const CycloNum slack = d_eta * CycloNum(profile.front()) - CycloNum(stab_order);
            return nonnegative_real(slack);
        };
        auto it = cocycle_overrides.find(orbit.representative);
        if (it != cocycle_overrides.end()) {
            if (it->second >= h2.class_count())
                throw DomainError("cocycle override class id out of range for the orbit of " +
                                  spec.ring.name(orbit.representative));
            if (!admissible(it->second))
                throw DataInconsistencyError(
                    "supplied cocycle class gives condensed dims below 1 on the orbit of " +
                    spec.ring.name(orbit.representative));
            candidates = {it->second};
            orbit.resolution = Orbit::Resolution::supplied;
            orbit.cocycle_class = it->second;
        } else {
            for (std::size_t id = 0; id < h2.class_count(); ++id)
                if (admissible(id)) candidates.push_back(id);
            if (candidates.empty())
                throw DataInconsistencyError("no stabilizer cocycle class is admissible for " +
                                             spec.ring.name(orbit.representative));
            if (candidates.size() == 1) {
                orbit.resolution = h2.class_count() == 1 ? Orbit::Resolution::unique_class
                                                         : Orbit::Resolution::inferred;
                orbit.cocycle_class = candidates.front();
            }
        }
        plans.push_back(OrbitPlan{std::move(stab), std::move(h2), std::move(candidates)});
    }

    // Joint disambiguation over orbits that still carry several candidates:
    // try every combination and keep those whose fusion solve succeeds.
    std::vector<std::size_t> ambiguous;
    std::size_t combos = 1;
    for (std::size_t i = 0; i < plans.size(); ++i)
        if (plans[i].candidate_classes.size() > 1) {
            ambiguous.push_back(i);
            combos *= plans[i].candidate_classes.size();
        }

    auto build = [&](const std::vector<std::size_t>& chosen_class) -> CondensationResult {
        // chosen_class[i] = class id for orbit i
        std::vector<std::vector<long long>> m(r);
        std::vector<CycloNum> cond_dims, cond_twists;
        std::vector<std::size_t> reps;
        for (auto& row : m) row.clear();
        std::size_t col_base = 0;
        for (std::size_t oi = 0; oi < report.orbits.size(); ++oi) {
            auto& orbit = report.orbits[oi];
            auto& plan = plans[oi];
            const std::size_t class_id = chosen_class[oi];
            Cocycle c = plan.h2.class_representative(class_id);
            const auto profile = projective_irrep_profile(plan.stabilizer, c);
            const long long stab_order = static_cast<long long>(plan.stabilizer.order());
            const CycloNum d_eta = dims[orbit.representative];
            const CycloNum inv_h = CycloNum(stab_order).inverse();
            reps.push_back(orbit.representative);
            for (std::size_t pi = 0; pi < profile.size(); ++pi) {
                cond_dims.push_back(d_eta * CycloNum(profile[pi]) * inv_h);
                cond_twists.push_back(spec.twists[orbit.representative]);
            }
            for (std::size_t a = 0; a < r; ++a) {
                m[a].resize(col_base + profile.size(), 0);
                if (std::binary_search(orbit.labels.begin(), orbit.labels.end(), a))
                    for (std::size_t pi = 0; pi < profile.size(); ++pi)
                        m[a][col_base + pi] = profile[pi];
            }
            col_base += profile.size();
        }
        return assemble_condensed(spec, t, report, m, cond_dims, cond_twists, reps);
    };

    std::vector<std::size_t> chosen(plans.size());
    for (std::size_t i = 0; i < plans.size(); ++i) chosen[i] = plans[i].candidate_classes.front();

    if (ambiguous.empty()) {
        for (std::size_t i = 0; i < plans.size(); ++i) {
            if (report.orbits[i].resolution == Orbit::Resolution::not_applicable) {
                report.orbits[i].resolution = plans[i].h2.class_count() == 1
                                                  ? Orbit::Resolution::unique_class
                                                  : Orbit::Resolution::inferred;
                report.orbits[i].cocycle_class = chosen[i];
            }
        }
        return build(chosen);
    }

    if (combos > 64) {
        const auto& orbit = report.orbits[ambiguous.front()];
        throw NeedsCocycleError("too many stabilizer cocycle combinations to infer",
                                orbit.representative, plans[ambiguous.front()].candidate_classes);
    }
    std::optional<std::vector<std::size_t>> winner;
    std::size_t winners = 0;
    for (std::size_t code = 0; code < combos; ++code) {
        std::size_t rest = code;
        for (std::size_t j = 0; j < ambiguous.size(); ++j) {
            const auto& cands = plans[ambiguous[j]].candidate_classes;
            chosen[ambiguous[j]] = cands[rest % cands.size()];
            rest /= cands.size();
        }
        try {
            (void)build(chosen);
            ++winners;
            if (winners == 1) winner = chosen;
        } catch (const Error&) {
            // combination rejected by the fusion solve
        }
    }
    if (winners == 0)
        throw DataInconsistencyError("no stabilizer cocycle assignment admits a condensation");
    if (winners > 1) {
        const auto& orbit = report.orbits[ambiguous.front()];
        throw NeedsCocycleError(
            "stabilizer cocycle class is ambiguous on the orbit of " +
                spec.ring.name(orbit.representative) + " (" + std::to_string(winners) +
                " admissible assignments)",
            orbit.representative, plans[ambiguous.front()].candidate_classes);
    }
    for (std::size_t j = 0; j < ambiguous.size(); ++j) {
        auto& orbit = report.orbits[ambiguous[j]];
        orbit.resolution = Orbit::Resolution::inferred;
        orbit.cocycle_class = (*winner)[ambiguous[j]];
    }
    for (std::size_t i = 0; i < plans.size(); ++i)
        if (report.orbits[i].resolution == Orbit::Resolution::not_applicable) {
            report.orbits[i].resolution = plans[i].h2.class_count() == 1
                                              ? Orbit::Resolution::unique_class
                                              : Orbit::Resolution::inferred;
            report.orbits[i].cocycle_class = (*winner)[i];
        }
    return build(*winner);
}

namespace {

// Branch-and-bound search for nonnegative integer m with m m^T = M, canonical
// in the column order so each solution-up-to-permutation is visited once.
struct GramSearch {
    const std::vector<std::vector<long long>>& gram;  // permuted
    std::vector<double> row_cap;                      // numeric dims, permuted
    std::size_t rows;
    std::vector<std::vector<long long>> current;  // rows x cols (grows)
    std::vector<std::vector<std::vector<long long>>> solutions;
    std::size_t nodes = 0;
    static constexpr std::size_t kNodeCap = 2000000;

    explicit GramSearch(const std::vector<std::vector<long long>>& g,
                        std::vector<double> caps)
        : gram(g), row_cap(std::move(caps)), rows(g.size()) {}

    void run() { next_row(0); }

    void next_row(std::size_t row) {
        if (row == rows) {
            solutions.push_back(current);
            return;
        }
        std::vector<long long> v;
        enumerate_entry(row, 0, gram[row][row], 0.0, v);
    }

    // Column equality groups over the rows filled so far: canonical solutions
    // must be non-increasing inside each group.
    bool canonical_ok(std::size_t row, const std::vector<long long>& v, std::size_t col) const {
        if (col == 0) return true;
        for (std::size_t r2 = 0; r2 < row; ++r2)
            if (current[r2][col - 1] != current[r2][col]) return true;  // different group
        return v[col - 1] >= v[col];
    }

    void enumerate_entry(std::size_t row, std::size_t col, long long self_left, double sum_so_far,
                         std::vector<long long>& v) {
        if (++nodes > kNodeCap)
            throw ResourceLimitError("factorization search exceeded the node budget");
        const std::size_t ncols = current.empty() ? 0 : current[0].size();
        if (col == ncols) {
            // cross-dot feasibility so far
            for (std::size_t r2 = 0; r2 < row; ++r2) {
                long long dot = 0;
                for (std::size_t j = 0; j < ncols; ++j) dot += v[j] * current[r2][j];
                if (dot != gram[row][r2]) return;  // new columns cannot change old dots
            }
            // open new columns for the remaining self weight, in non-increasing order
            std::vector<long long> tail;
            finish_with_new_columns(row, self_left, sum_so_far, v, tail);
            return;
        }
        long long max_entry = 0;
        while ((max_entry + 1) * (max_entry + 1) <= self_left) ++max_entry;
        for (long long e = 0; e <= max_entry; ++e) {
            v.push_back(e);
            bool ok = canonical_ok(row, v, col) &&
                      sum_so_far + static_cast<double>(e) <= row_cap[row] + 1e-9;
            if (ok) {
                // partial cross-dots cannot overshoot
                for (std::size_t r2 = 0; r2 < row && ok; ++r2) {
                    long long dot = 0;
                    for (std::size_t j = 0; j <= col; ++j) dot += v[j] * current[r2][j];
                    if (dot > gram[row][r2]) ok = false;
                }
            }
            if (ok)
                enumerate_entry(row, col + 1, self_left - e * e,
                                sum_so_far + static_cast<double>(e), v);
            v.pop_back();
        }
    }

    void finish_with_new_columns(std::size_t row, long long self_left, double sum_so_far,
                                 std::vector<long long>& v, std::vector<long long>& tail) {
        if (self_left == 0) {
            commit(row, v, tail);
            return;
        }
        const long long prev = tail.empty() ? self_left : tail.back();
        long long start = 0;
        while ((start + 1) * (start + 1) <= self_left) ++start;
        if (start > prev) start = prev;
        for (long long e = start; e >= 1; --e) {
            if (sum_so_far + static_cast<double>(e) > row_cap[row] + 1e-9) continue;
            tail.push_back(e);
            finish_with_new_columns(row, self_left - e * e,
                                    sum_so_far + static_cast<double>(e), v, tail);
            tail.pop_back();
        }
    }

    void commit(std::size_t row, const std::vector<long long>& v,
                const std::vector<long long>& tail) {
        const std::size_t old_cols = current.empty() ? 0 : current[0].size();
        for (std::size_t r2 = 0; r2 < row; ++r2) current[r2].resize(old_cols + tail.size(), 0);
        current.push_back(v);
        auto& mine = current.back();
        mine.insert(mine.end(), tail.begin(), tail.end());
        mine.resize(old_cols + tail.size(), 0);
        next_row(row + 1);
        current.pop_back();
        for (std::size_t r2 = 0; r2 < row; ++r2) current[r2].resize(old_cols);
    }
};

}  // namespace

CondensationResult condense_general(const CategorySpec& spec, const TannakianSubcat& t) {
    require_valid_subcat(spec, t);
    const auto& dims = require_dims(spec);
    if (t.group == nullptr)
        throw DomainError("condense_general needs the subcategory group resolved");
    const std::size_t r = spec.rank();
    auto gram = extended_hom_matrix(spec, t);

    // rows in decreasing dimension order
    std::vector<std::size_t> order(r);
    for (std::size_t i = 0; i < r; ++i) order[i] = i;
    std::vector<double> numeric(r);
    for (std::size_t i = 0; i < r; ++i) numeric[i] = dims[i].to_complex().real();
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (numeric[a] != numeric[b]) return numeric[a] > numeric[b];
        return a < b;
    });
    std::vector<std::vector<long long>> permuted(r, std::vector<long long>(r));
    std::vector<double> caps(r);
    for (std::size_t i = 0; i < r; ++i) {
        caps[i] = numeric[order[i]];
        for (std::size_t j = 0; j < r; ++j) permuted[i][j] = gram[order[i]][order[j]];
    }
    GramSearch search(permuted, caps);
    search.run();

    // Filter factorization candidates by the exact dimension constraints.
    long long group_order = 0;
    for (long long d : t.irrep_dims) group_order += d * d;

    struct Candidate {
        std::vector<std::vector<long long>> m;  // original row order
        std::vector<CycloNum> cond_dims;
    };
    std::vector<Candidate> good;
    for (const auto& sol : search.solutions) {
        const std::size_t rc = sol.empty() ? 0 : sol[0].size();
        if (rc == 0) continue;
        std::vector<std::vector<long long>> m(r, std::vector<long long>(rc, 0));
        for (std::size_t i = 0; i < r; ++i) m[order[i]] = sol[i];
        // dedupe identical columns for the dim solve
        std::vector<std::size_t> col_class(rc);
        std::vector<std::size_t> class_rep;
        for (std::size_t x = 0; x < rc; ++x) {
            std::size_t found = class_rep.size();
            for (std::size_t k = 0; k < class_rep.size(); ++k) {
                bool same = true;
                for (std::size_t a = 0; a < r && same; ++a)
                    if (m[a][x] != m[a][class_rep[k]]) same = false;
                if (same) {
                    found = k;
                    break;
                }
            }
            if (found == class_rep.size()) class_rep.push_back(x);
            col_class[x] = found;
        }
        Matrix<CycloNum> a_mat(r, std::vector<CycloNum>(class_rep.size(), CycloNum(0)));
        std::vector<CycloNum> b_vec(r, CycloNum(0));
        for (std::size_t a = 0; a < r; ++a) {
            b_vec[a] = dims[a];
            for (std::size_t x = 0; x < rc; ++x)
                a_mat[a][col_class[x]] += CycloNum(m[a][x]);
        }
        auto solved = solve_linear(std::move(a_mat), std::move(b_vec));
        if (solved.status != SolveStatus::unique) continue;
        std::vector<CycloNum> cond_dims(rc);
        bool ok = true;
        CycloNum global(0);
        for (std::size_t x = 0; x < rc && ok; ++x) {
            cond_dims[x] = solved.solution[col_class[x]];
            const CycloNum slack = cond_dims[x] - CycloNum(1);
            if (!nonnegative_real(slack)) ok = false;
            global += cond_dims[x] * cond_dims[x];
        }
        if (!ok) continue;
        // exact global-dimension conservation
        CycloNum total(0);
        for (std::size_t a = 0; a < r; ++a) total += dims[a] * dims[a];
        if (!(global * CycloNum(group_order) == total)) continue;
        good.push_back(Candidate{std::move(m), std::move(cond_dims)});
    }

    if (good.size() != 1)
        throw AmbiguityError("factorization of the extended Hom matrix admits " +
                                 std::to_string(good.size()) + " solutions",
                             good.size());

    auto& cand = good.front();
    const std::size_t rc = cand.cond_dims.size();
    // twist inheritance with consistency check
    std::vector<CycloNum> cond_twists(rc, CycloNum(1));
    for (std::size_t x = 0; x < rc; ++x) {
        bool seen = false;
        for (std::size_t a = 0; a < r; ++a) {
            if (cand.m[a][x] == 0) continue;
            if (!seen) {
                cond_twists[x] = spec.twists[a];
                seen = true;
            } else if (!(cond_twists[x] == spec.twists[a])) {
                throw DataInconsistencyError("twist inheritance is inconsistent on column " +
                                             std::to_string(x));
            }
        }
    }

    OrbitReport report = orbits_and_stabilizers(spec, t);
    std::vector<std::size_t> reps(r);
    for (std::size_t i = 0; i < r; ++i) reps[i] = i;
    return assemble_condensed(spec, t, std::move(report), cand.m, cand.cond_dims, cond_twists,
                              reps);
}

CondensationResult condense(const CategorySpec& spec, const TannakianSubcat& t,
                            const std::map<std::size_t, std::size_t>& cocycle_overrides) {
    if (t.pointed() && t.group != nullptr) return condense_pointed(spec, t, cocycle_overrides);
    if (!cocycle_overrides.empty())
        throw DomainError("cocycle overrides apply to the pointed route only");
    return condense_general(spec, t);
}

CheckReport verify_condensation(const CondensationResult& result, const CategorySpec& original,
                                const TannakianSubcat& t) {
    CheckReport rep;
    auto add = [&rep](std::string name, bool pass, std::string detail = "") {
        rep.checks.push_back({std::move(name), pass, std::move(detail)});
    };
    const std::size_t r = original.rank();
    const std::size_t rc = result.condensed.rank();
    const auto& m = result.phi;

    // Gram identity M = m m^T
    {
        auto gram = extended_hom_matrix(original, t);
        bool ok = true;
        for (std::size_t a = 0; a < r && ok; ++a)
            for (std::size_t b = 0; b < r && ok; ++b) {
                long long dot = 0;
                for (std::size_t x = 0; x < rc; ++x) dot += m[a][x] * m[b][x];
                if (dot != gram[a][b]) ok = false;
            }
        add("gram-identity", ok);
    }
    // dimension preservation
    {
        bool ok = original.dims.has_value() && result.condensed.dims.has_value();
        if (ok)
            for (std::size_t a = 0; a < r && ok; ++a) {
                CycloNum sum(0);
                for (std::size_t x = 0; x < rc; ++x)
                    if (m[a][x] != 0) sum += CycloNum(m[a][x]) * (*result.condensed.dims)[x];
                if (!(sum == (*original.dims)[a])) ok = false;
            }
        add("dimension-preservation", ok);
    }
    // twist inheritance
    {
        bool ok = true;
        for (std::size_t a = 0; a < r && ok; ++a)
            for (std::size_t x = 0; x < rc && ok; ++x)
                if (m[a][x] != 0 && !(result.condensed.twists[x] == original.twists[a])) ok = false;
        add("twist-inheritance", ok);
    }
    // dominance
    {
        bool ok = true;
        for (std::size_t x = 0; x < rc && ok; ++x) {
            bool hit = false;
            for (std::size_t a = 0; a < r; ++a)
                if (m[a][x] != 0) hit = true;
            if (!hit) ok = false;
        }
        add("dominance", ok);
    }
    // global dimension conservation
    {
        bool ok = original.dims.has_value() && result.condensed.dims.has_value();
        if (ok) {
            CycloNum orig(0), cond(0);
            for (std::size_t a = 0; a < r; ++a) orig += (*original.dims)[a] * (*original.dims)[a];
            for (std::size_t x = 0; x < rc; ++x)
                cond += (*result.condensed.dims)[x] * (*result.condensed.dims)[x];
            ok = (cond * CycloNum(result.group_order) == orig);
        }
        add("global-dimension", ok);
    }
    // decategorified ring map: m applied to fusion commutes
    {
        bool ok = true;
        for (std::size_t a = 0; a < r && ok; ++a)
            for (std::size_t b = 0; b < r && ok; ++b)
                for (std::size_t z = 0; z < rc && ok; ++z) {
                    long long lhs = 0;
                    for (std::size_t c = 0; c < r; ++c)
                        if (original.ring.N(a, b, c) != 0) lhs += original.ring.N(a, b, c) * m[c][z];
                    long long rhs = 0;
                    for (std::size_t x = 0; x < rc; ++x) {
                        if (m[a][x] == 0) continue;
                        for (std::size_t y = 0; y < rc; ++y)
                            if (m[b][y] != 0)
                                rhs += m[a][x] * m[b][y] * result.condensed.ring.N(x, y, z);
                    }
                    if (lhs != rhs) ok = false;
                }
        add("ring-map", ok);
    }
    // condensed data is a valid ribbon category with certified dims
    {
        bool ok = validate_ring(result.condensed.ring).ok() &&
                  validate_ribbon(result.condensed).ok();
        if (ok) {
            try {
                ok = fp_dims(result.condensed.ring, result.condensed.dims).exact_certified;
            } catch (const Error&) {
                ok = false;
            }
        }
        add("condensed-valid", ok);
    }
    // conclusion criterion: condensed centre trivial iff T was the full centre
    {
        bool ok = true;
        std::string detail;
        try {
            auto cond_centre = centre(result.condensed);
            auto orig_centre = centre(original);
            const bool t_is_centre = orig_centre == t.labels;
            const bool cond_trivial = cond_centre.size() == 1;
            ok = (t_is_centre == cond_trivial);
            detail = "condensed centre has " + std::to_string(cond_centre.size()) + " labels";
        } catch (const Error& e) {
            ok = false;
            detail = e.what();
        }
        add("centre-criterion", ok, detail);
    }
    return rep;
}

}  // namespace skelcat
