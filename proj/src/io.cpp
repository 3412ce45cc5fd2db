#include "skelcat/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "skelcat/errors.hpp"

namespace skelcat {

namespace {

constexpr long long kJsonIntLimit = (1LL << 53);

Json component_to_json(const BigInt& v) {
    if (v < kJsonIntLimit && v > -kJsonIntLimit) return Json(v.convert_to<long long>());
    return Json(v.str());
}

BigInt component_from_json(const Json& j) {
    if (j.is_number_integer()) return BigInt(j.get<long long>());
    if (j.is_string()) return BigInt(j.get<std::string>());
    throw ParseError("expected an integer or a decimal string");
}

}  // namespace

Json cyclo_to_json(const CycloNum& x) {
    CycloNum r = x.reduced();
    if (!r.is_rational()) {
        if (auto ru = r.as_root_of_unity()) {
            Json j;
            j["zeta"] = Json::array({ru->first, ru->second});
            return j;
        }
    }
    Json j;
    j["order"] = r.order();
    Json num = Json::array(), den = Json::array();
    for (const auto& c : r.coords()) {
        num.push_back(component_to_json(numerator(c)));
        den.push_back(component_to_json(denominator(c)));
    }
    j["num"] = std::move(num);
    j["den"] = std::move(den);
    return j;
}

CycloNum cyclo_from_json(const Json& j) {
    try {
        if (j.is_number_integer()) return CycloNum(j.get<long long>());
        if (!j.is_object()) throw ParseError("cyclotomic value must be an object or integer");
        if (j.contains("zeta")) {
            const auto& z = j.at("zeta");
            if (!z.is_array() || z.size() != 2) throw ParseError("zeta must be [n, k]");
            return CycloNum::root_of_unity(z.at(0).get<long long>(), z.at(1).get<long long>());
        }
        const long long order = j.at("order").get<long long>();
        const auto& num = j.at("num");
        const auto& den = j.at("den");
        if (!num.is_array() || !den.is_array() || num.size() != den.size())
            throw ParseError("num/den must be arrays of equal length");
        std::vector<Rational> coords;
        coords.reserve(num.size());
        for (std::size_t i = 0; i < num.size(); ++i) {
            BigInt n = component_from_json(num.at(i));
            BigInt d = component_from_json(den.at(i));
            if (d == 0) throw ParseError("zero denominator");
            coords.emplace_back(n, d);
        }
        return CycloNum::from_coords(order, std::move(coords));
    } catch (const Json::exception& e) {
        throw ParseError(std::string("bad cyclotomic value: ") + e.what());
    } catch (const DomainError& e) {
        throw ParseError(std::string("bad cyclotomic value: ") + e.what());
    }
}

Json spec_to_json(const CategorySpec& spec) {
    Json j;
    if (!spec.name.empty()) j["name"] = spec.name;
    Json labels = Json::array();
    for (const auto& n : spec.ring.names()) labels.push_back(n);
    j["labels"] = std::move(labels);
    j["unit"] = spec.ring.name(spec.ring.unit());
    Json dual = Json::array();
    for (std::size_t a = 0; a < spec.rank(); ++a) dual.push_back(spec.ring.name(spec.ring.dual(a)));
    j["dual"] = std::move(dual);
    Json tensor = Json::array();
    const std::size_t r = spec.rank();
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b)
            for (std::size_t c = 0; c < r; ++c)
                if (spec.ring.N(a, b, c) != 0)
                    tensor.push_back(Json::array({a, b, c, spec.ring.N(a, b, c)}));
    j["N"] = std::move(tensor);
    Json twists = Json::array();
    for (const auto& t : spec.twists) twists.push_back(cyclo_to_json(t));
    j["twists"] = std::move(twists);
    if (spec.dims) {
        Json dims = Json::array();
        for (const auto& d : *spec.dims) dims.push_back(cyclo_to_json(d));
        j["dims"] = std::move(dims);
    }
    return j;
}

CategorySpec spec_from_json(const Json& j) {
    try {
        std::vector<std::string> names;
        for (const auto& n : j.at("labels")) names.push_back(n.get<std::string>());
        const std::size_t r = names.size();
        auto index_of = [&names](const std::string& n) -> std::size_t {
            for (std::size_t i = 0; i < names.size(); ++i)
                if (names[i] == n) return i;
            throw ParseError("unknown label name: " + n);
        };
        const std::size_t unit = index_of(j.at("unit").get<std::string>());
        std::vector<std::size_t> dual;
        for (const auto& n : j.at("dual")) dual.push_back(index_of(n.get<std::string>()));
        std::vector<long long> tensor(r * r * r, 0);
        for (const auto& quad : j.at("N")) {
            if (!quad.is_array() || quad.size() != 4)
                throw ParseError("N entries must be [a, b, c, multiplicity]");
            const long long a = quad.at(0).get<long long>();
            const long long b = quad.at(1).get<long long>();
            const long long c = quad.at(2).get<long long>();
            const long long mult = quad.at(3).get<long long>();
            if (a < 0 || b < 0 || c < 0 || a >= static_cast<long long>(r) ||
                b >= static_cast<long long>(r) || c >= static_cast<long long>(r))
                throw ParseError("N entry index out of range");
            if (mult < 0) throw ParseError("N multiplicities must be nonnegative");
            tensor[(static_cast<std::size_t>(a) * r + static_cast<std::size_t>(b)) * r +
                   static_cast<std::size_t>(c)] = mult;
        }
        std::vector<CycloNum> twists;
        for (const auto& t : j.at("twists")) twists.push_back(cyclo_from_json(t));
        if (twists.size() != r) throw ParseError("twists length mismatch");
        std::optional<std::vector<CycloNum>> dims;
        if (j.contains("dims")) {
            dims.emplace();
            for (const auto& d : j.at("dims")) dims->push_back(cyclo_from_json(d));
            if (dims->size() != r) throw ParseError("dims length mismatch");
        }
        std::string name = j.contains("name") ? j.at("name").get<std::string>() : "";
        FusionRing ring(std::move(names), unit, std::move(dual), std::move(tensor));
        return CategorySpec{std::move(ring), std::move(twists), std::move(dims), std::move(name)};
    } catch (const Json::exception& e) {
        throw ParseError(std::string("bad category object: ") + e.what());
    } catch (const DomainError& e) {
        throw ParseError(std::string("bad category object: ") + e.what());
    }
}

Json document_from_spec(const CategorySpec& spec) {
    Json j;
    j["schema_version"] = 1;
    j["category"] = spec_to_json(spec);
    return j;
}

ExchangeDocument document_from_json(const Json& j) {
    try {
        const Json& cat = j.contains("category") ? j.at("category") : j;
        CategorySpec spec = spec_from_json(cat);
        TannakianHints hints;
        if (j.contains("tannakian")) {
            const Json& t = j.at("tannakian");
            if (t.contains("labels")) {
                hints.labels.emplace();
                for (const auto& n : t.at("labels")) hints.labels->push_back(n.get<std::string>());
            }
            if (t.contains("group")) hints.group = t.at("group");
        }
        if (j.contains("cocycle_overrides")) {
            for (const auto& [key, value] : j.at("cocycle_overrides").items())
                hints.cocycle_overrides[key] = value.get<std::size_t>();
        }
        return ExchangeDocument{std::move(spec), std::move(hints)};
    } catch (const Json::exception& e) {
        throw ParseError(std::string("bad exchange document: ") + e.what());
    }
}

GroupFile group_from_json(const Json& j) {
    try {
        const long long order = j.at("order").get<long long>();
        std::vector<std::vector<unsigned>> table;
        for (const auto& row : j.at("table")) {
            std::vector<unsigned> r;
            for (const auto& v : row) r.push_back(v.get<unsigned>());
            table.push_back(std::move(r));
        }
        if (static_cast<long long>(table.size()) != order)
            throw ParseError("group table size does not match the order");
        GroupFile out{FiniteGroup(std::move(table)), std::nullopt, {}};
        if (j.contains("characters")) {
            CharacterTable ct;
            for (const auto& s : j.at("characters").at("classes"))
                ct.class_sizes.push_back(s.get<long long>());
            for (const auto& row : j.at("characters").at("chars")) {
                std::vector<CycloNum> r;
                for (const auto& v : row) r.push_back(cyclo_from_json(v));
                ct.chars.push_back(std::move(r));
            }
            out.characters = std::move(ct);
        }
        if (j.contains("label_to_irrep")) {
            for (const auto& [key, value] : j.at("label_to_irrep").items())
                out.label_to_irrep[key] = value.get<std::size_t>();
        }
        return out;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("bad group file: ") + e.what());
    } catch (const DomainError& e) {
        throw ParseError(std::string("bad group file: ") + e.what());
    }
}

Json group_to_json(const FiniteGroup& g) {
    Json j;
    j["order"] = g.order();
    Json table = Json::array();
    for (const auto& row : g.table()) {
        Json r = Json::array();
        for (unsigned v : row) r.push_back(v);
        table.push_back(std::move(r));
    }
    j["table"] = std::move(table);
    return j;
}

Json orbit_report_to_json(const CategorySpec& original, const OrbitReport& report) {
    Json j;
    j["pointed"] = report.pointed;
    Json orbits = Json::array();
    for (const auto& o : report.orbits) {
        Json oj;
        Json labels = Json::array();
        for (std::size_t a : o.labels) labels.push_back(original.ring.name(a));
        oj["labels"] = std::move(labels);
        oj["representative"] = original.ring.name(o.representative);
        if (o.stabilizer) {
            oj["stabilizer_order"] = o.stabilizer->size();
            if (o.stabilizer_group) oj["stabilizer"] = group_to_json(*o.stabilizer_group);
            oj["index"] = o.index;
            Json inv = Json::array();
            for (long long d : o.h2_invariants) inv.push_back(d);
            oj["stabilizer_h2"] = std::move(inv);
            oj["cocycle_class"] = o.cocycle_class;
            oj["cocycle_resolution"] = resolution_name(o.resolution);
        }
        orbits.push_back(std::move(oj));
    }
    j["orbits"] = std::move(orbits);
    return j;
}

Json condensation_to_json(const CategorySpec& original, const CondensationResult& result,
                          const CheckReport& checks) {
    Json j;
    j["schema_version"] = 1;
    j["category"] = spec_to_json(result.condensed);
    Json phi = Json::array();
    for (std::size_t a = 0; a < original.rank(); ++a)
        for (std::size_t x = 0; x < result.condensed.rank(); ++x)
            if (result.phi[a][x] != 0)
                phi.push_back(Json::array({original.ring.name(a), result.condensed.ring.name(x),
                                           result.phi[a][x]}));
    j["phi"] = std::move(phi);
    Json rep = orbit_report_to_json(original, result.report);
    rep["group_order"] = result.group_order;
    j["report"] = std::move(rep);
    Json checks_json = Json::array();
    for (const auto& c : checks.checks) {
        Json cj;
        cj["name"] = c.name;
        cj["pass"] = c.pass;
        if (!c.detail.empty()) cj["detail"] = c.detail;
        checks_json.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks_json);
    return j;
}

Json validation_to_json(const FusionRing& ring, const ValidationReport& rep) {
    Json j;
    j["schema_version"] = 1;
    j["ok"] = rep.ok();
    Json violations = Json::array();
    for (const auto& v : rep.violations) {
        Json vj;
        vj["kind"] = violation_kind_name(v.kind);
        Json labels = Json::array();
        for (std::size_t a : v.labels)
            labels.push_back(a < ring.rank() ? Json(ring.name(a)) : Json(a));
        vj["labels"] = std::move(labels);
        vj["detail"] = v.detail;
        vj["warning"] = v.warning;
        violations.push_back(std::move(vj));
    }
    j["violations"] = std::move(violations);
    return j;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    try {
        Json j;
        in >> j;
        return j;
    } catch (const Json::exception& e) {
        throw ParseError("malformed JSON in " + path + ": " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write file: " + path);
    out << content;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

}  // namespace skelcat
