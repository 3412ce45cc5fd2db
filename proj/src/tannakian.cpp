#include "skelcat/tannakian.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "skelcat/errors.hpp"

namespace skelcat {

bool TannakianSubcat::contains(std::size_t label) const {
    return std::binary_search(labels.begin(), labels.end(), label);
}

std::size_t TannakianSubcat::position_of(std::size_t label) const {
    auto it = std::lower_bound(labels.begin(), labels.end(), label);
    if (it == labels.end() || *it != label) throw LookupError("label not in subcategory");
    return static_cast<std::size_t>(it - labels.begin());
}

namespace {

void fill_irrep_dims(const CategorySpec& spec, TannakianSubcat& t) {
    t.irrep_dims.clear();
    if (spec.dims) {
        for (std::size_t a : t.labels) {
            const CycloNum& d = (*spec.dims)[a];
            if (!d.is_rational() || !is_integer(d.rational_value()))
                throw DataInconsistencyError("dimension of tannakian label " + spec.ring.name(a) +
                                             " is not a rational integer");
            t.irrep_dims.push_back(d.rational_value().convert_to<long long>());
        }
        return;
    }
    // Numeric-only specs: symmetric-subcategory dims are integers, so the
    // Perron-Frobenius values must round cleanly.
    DimReport rep = fp_dims(spec.ring, std::nullopt);
    for (std::size_t a : t.labels) {
        const double d = rep.dims[a];
        const long long rounded = static_cast<long long>(d + 0.5);
        if (std::abs(d - static_cast<double>(rounded)) > 1e-6)
            throw DataInconsistencyError("numeric dimension of tannakian label " +
                                         spec.ring.name(a) + " is not close to an integer");
        t.irrep_dims.push_back(rounded);
    }
}

}  // namespace

TannakianSubcat maximal_tannakian(const CategorySpec& spec) {
    TannakianSubcat t;
    for (std::size_t a = 0; a < spec.rank(); ++a) {
        if (!is_degenerate(spec, a).degenerate) continue;
        if (spec.twists[a].is_one()) {
            t.labels.push_back(a);
        } else {
            // degenerate labels have theta^2 = 1, so this is the fermionic part
            t.fermionic_excluded.push_back(a);
        }
    }
    // The bosonic centre is automatically fusion- and dual-closed; assert it.
    std::set<std::size_t> in(t.labels.begin(), t.labels.end());
    for (std::size_t a : t.labels) {
        if (!in.count(spec.ring.dual(a)))
            throw DataInconsistencyError("bosonic centre not dual-closed at " + spec.ring.name(a));
        for (std::size_t b : t.labels)
            for (std::size_t c = 0; c < spec.rank(); ++c)
                if (spec.ring.N(a, b, c) != 0 && !in.count(c))
                    throw DataInconsistencyError("bosonic centre not fusion-closed at " +
                                                 spec.ring.name(a) + " (x) " + spec.ring.name(b));
    }
    fill_irrep_dims(spec, t);
    if (t.pointed()) recognize_pointed_group(spec, t);
    return t;
}

TannakianSubcat subcat_from_labels(const CategorySpec& spec, std::vector<std::size_t> labels) {
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    for (std::size_t a : labels)
        if (a >= spec.rank()) throw LookupError("subcategory label out of range");
    std::set<std::size_t> in(labels.begin(), labels.end());
    if (!in.count(spec.ring.unit()))
        throw DomainError("subcategory must contain the unit");
    for (std::size_t a : labels) {
        auto deg = is_degenerate(spec, a);
        if (!deg.degenerate) {
            const auto& w = *deg.witness;
            throw DegeneracyError("label " + spec.ring.name(a) +
                                      " is not degenerate: channel (" + spec.ring.name(a) + "," +
                                      spec.ring.name(w.against) + ") -> " +
                                      spec.ring.name(w.channel) + " has monodromy phase " +
                                      display_string(w.phase),
                                  a, w.against, w.channel, display_string(w.phase));
        }
        if (!spec.twists[a].is_one())
            throw DomainError("label " + spec.ring.name(a) + " is not bosonic (theta = " +
                              display_string(spec.twists[a]) + ")");
        if (!in.count(spec.ring.dual(a)))
            throw DomainError("subcategory not closed under duals at " + spec.ring.name(a));
        for (std::size_t b : labels)
            for (std::size_t c = 0; c < spec.rank(); ++c)
                if (spec.ring.N(a, b, c) != 0 && !in.count(c))
                    throw DomainError("subcategory not closed under fusion at " +
                                      spec.ring.name(a) + " (x) " + spec.ring.name(b));
    }
    TannakianSubcat t;
    t.labels = std::move(labels);
    fill_irrep_dims(spec, t);
    if (t.pointed()) recognize_pointed_group(spec, t);
    return t;
}

void recognize_pointed_group(const CategorySpec& spec, TannakianSubcat& t) {
    if (!t.pointed()) throw DomainError("recognize_pointed_group: subcategory is not pointed");
    const std::size_t m = t.labels.size();
    std::vector<std::vector<unsigned>> table(m, std::vector<unsigned>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            // invertible (x) invertible is simple: exactly one channel with N = 1
            std::size_t channel = spec.rank();
            for (std::size_t c = 0; c < spec.rank(); ++c) {
                const long long n = spec.ring.N(t.labels[i], t.labels[j], c);
                if (n == 0) continue;
                if (n > 1 || channel != spec.rank())
                    throw DataInconsistencyError("pointed label product is not simple");
                channel = c;
            }
            if (channel == spec.rank())
                throw DataInconsistencyError("pointed label product is empty");
            table[i][j] = static_cast<unsigned>(t.position_of(channel));
        }
    auto group = std::make_shared<FiniteGroup>(std::move(table));
    if (!group->is_abelian())
        throw DataInconsistencyError("pointed braided labels must form an abelian group");
    t.group = std::move(group);
    std::vector<unsigned> elems(m);
    for (unsigned i = 0; i < m; ++i) elems[i] = i;
    t.label_to_element = std::move(elems);
}

void verify_group_match(const CategorySpec& spec, TannakianSubcat& t, const FiniteGroup& group,
                        const CharacterTable& table,
                        const std::vector<std::size_t>& label_to_irrep) {
    const std::size_t m = t.labels.size();
    const std::size_t nclasses = table.class_sizes.size();
    if (table.chars.size() != nclasses)
        throw GroupMismatchError("character table must be square (#irreps = #classes)");
    for (const auto& row : table.chars)
        if (row.size() != nclasses) throw GroupMismatchError("character table row length mismatch");
    if (label_to_irrep.size() != m)
        throw GroupMismatchError("label_to_irrep must cover every subcategory label");
    if (m != nclasses)
        throw GroupMismatchError("subcategory rank differs from the number of irreps");
    long long class_total = 0;
    for (long long s : table.class_sizes) class_total += s;
    if (class_total != static_cast<long long>(group.order()))
        throw GroupMismatchError("class sizes do not sum to |G|");

    // conjugacy classes of the supplied table must match the declared sizes
    {
        std::vector<long long> sizes;
        std::vector<bool> seen(group.order(), false);
        for (unsigned x = 0; x < group.order(); ++x) {
            if (seen[x]) continue;
            long long size = 0;
            for (unsigned g = 0; g < group.order(); ++g) {
                const unsigned y = group.mul(group.mul(g, x), group.inverse(g));
                if (!seen[y]) {
                    seen[y] = true;
                    ++size;
                }
            }
            sizes.push_back(size);
        }
        std::vector<long long> declared = table.class_sizes;
        std::sort(sizes.begin(), sizes.end());
        std::sort(declared.begin(), declared.end());
        if (sizes != declared)
            throw GroupMismatchError("class sizes do not match the supplied group table");
    }

    // sum of squared label dims = |G|
    long long dim_sq = 0;
    for (long long d : t.irrep_dims) dim_sq += d * d;
    if (dim_sq != static_cast<long long>(group.order()))
        throw GroupMismatchError("sum of squared dims (" + std::to_string(dim_sq) +
                                 ") differs from |G| = " + std::to_string(group.order()));

    // degree check per label (character at the identity class, by convention
    // class 0 must be the identity class of size 1)
    if (table.class_sizes.empty() || table.class_sizes[0] != 1)
        throw GroupMismatchError("class 0 must be the identity class of size 1");
    std::vector<std::size_t> irrep_of(m);
    std::set<std::size_t> used;
    for (std::size_t i = 0; i < m; ++i) {
        if (label_to_irrep[i] >= nclasses) throw GroupMismatchError("irrep index out of range");
        if (!used.insert(label_to_irrep[i]).second)
            throw GroupMismatchError("label_to_irrep must be injective");
        irrep_of[i] = label_to_irrep[i];
        if (!(table.chars[irrep_of[i]][0] == CycloNum(t.irrep_dims[i])))
            throw GroupMismatchError("degree of irrep does not match dim of label " +
                                     spec.ring.name(t.labels[i]));
    }

    // dual compatibility: the dual label must carry the conjugate character
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t dual_pos = t.position_of(spec.ring.dual(t.labels[i]));
        for (std::size_t c = 0; c < nclasses; ++c)
            if (!(table.chars[irrep_of[dual_pos]][c] == table.chars[irrep_of[i]][c].conj()))
                throw GroupMismatchError("dual label does not carry the conjugate character at " +
                                         spec.ring.name(t.labels[i]));
    }

    const CycloNum order_inv = CycloNum(static_cast<long long>(group.order())).inverse();

    // row orthogonality sanity of the supplied table
    for (std::size_t i = 0; i < nclasses; ++i)
        for (std::size_t j = 0; j < nclasses; ++j) {
            CycloNum sum(0);
            for (std::size_t c = 0; c < nclasses; ++c)
                sum += CycloNum(table.class_sizes[c]) * table.chars[i][c] * table.chars[j][c].conj();
            const CycloNum want = i == j ? CycloNum(static_cast<long long>(group.order()))
                                         : CycloNum(0);
            if (!(sum == want))
                throw GroupMismatchError("supplied character table fails row orthogonality");
        }

    // fusion multiplicities against character products:
    // m_{ij}^k = (1/|G|) sum_c n_c chi_i(c) chi_j(c) conj(chi_k(c))
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k) {
                CycloNum sum(0);
                for (std::size_t c = 0; c < nclasses; ++c)
                    sum += CycloNum(table.class_sizes[c]) * table.chars[irrep_of[i]][c] *
                           table.chars[irrep_of[j]][c] * table.chars[irrep_of[k]][c].conj();
                sum = sum * order_inv;
                const long long want = spec.ring.N(t.labels[i], t.labels[j], t.labels[k]);
                if (!(sum == CycloNum(want)))
                    throw GroupMismatchError(
                        "fusion multiplicity mismatch at (" + spec.ring.name(t.labels[i]) + "," +
                        spec.ring.name(t.labels[j]) + "," + spec.ring.name(t.labels[k]) +
                        "): characters give " + display_string(sum) + ", ring has " +
                        std::to_string(want));
            }

    t.group = std::make_shared<FiniteGroup>(group);
    t.label_to_irrep = label_to_irrep;
}

}  // namespace skelcat
