// skelcat: inspect skeletal braided ribbon categories, detect the obstruction
// to modularity, and remove it by condensing a Tannakian subcategory.

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "skelcat/catalog.hpp"
#include "skelcat/condense.hpp"
#include "skelcat/errors.hpp"
#include "skelcat/io.hpp"

namespace {

using namespace skelcat;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitParse = 2;
constexpr int kExitDegeneracy = 3;
constexpr int kExitNeedsCocycle = 4;
constexpr int kExitAmbiguous = 5;

struct OutputTarget {
    std::string path;  // empty = stdout
    void emit(const std::string& content) const {
        if (path.empty())
            std::cout << content;
        else
            write_text_file(path, content);
    }
};

std::string render(const Json& j) { return j.dump(2) + "\n"; }

ExchangeDocument load_document(const std::string& path) {
    if (path.rfind("catalog:", 0) == 0) {
        const std::string name = path.substr(8);
        return ExchangeDocument{load_named(name), {}};
    }
    return document_from_json(load_json_file(path));
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::string names_list(const CategorySpec& spec, const std::vector<std::size_t>& labels) {
    std::string s;
    for (std::size_t a : labels) {
        if (!s.empty()) s += ", ";
        s += spec.ring.name(a);
    }
    return s;
}

// ---------------------------------------------------------------------- validate

int run_validate(const std::string& path, const std::string& format, bool frobenius_warn) {
    ExchangeDocument doc = load_document(path);
    ValidationReport ring_rep = validate_ring(doc.category.ring, frobenius_warn);
    ValidationReport ribbon_rep = validate_ribbon(doc.category);
    ValidationReport all;
    all.violations = ring_rep.violations;
    all.violations.insert(all.violations.end(), ribbon_rep.violations.begin(),
                          ribbon_rep.violations.end());
    if (doc.category.dims && all.ok()) {
        try {
            fp_dims(doc.category.ring, doc.category.dims);
        } catch (const DataInconsistencyError& e) {
            all.violations.push_back({ViolationKind::dims, {}, e.what(), false});
        }
    }
    if (format == "json") {
        OutputTarget{}.emit(render(validation_to_json(doc.category.ring, all)));
    } else {
        if (all.ok()) {
            std::cout << "ok: all invariants hold";
            if (!all.violations.empty())
                std::cout << " (" << all.violations.size() << " warnings)";
            std::cout << "\n";
        } else {
            for (const auto& v : all.violations) {
                std::cout << (v.warning ? "warning " : "violation ")
                          << violation_kind_name(v.kind) << " at (";
                for (std::size_t i = 0; i < v.labels.size(); ++i) {
                    if (i) std::cout << ",";
                    std::cout << (v.labels[i] < doc.category.rank()
                                      ? doc.category.ring.name(v.labels[i])
                                      : std::to_string(v.labels[i]));
                }
                std::cout << "): " << v.detail << "\n";
            }
        }
    }
    return all.ok() ? kExitOk : kExitInvalid;
}

// ---------------------------------------------------------------------- analyze

Json tannakian_to_json(const CategorySpec& spec, const TannakianSubcat& t) {
    Json j;
    Json labels = Json::array();
    for (std::size_t a : t.labels) labels.push_back(spec.ring.name(a));
    j["labels"] = std::move(labels);
    j["pointed"] = t.pointed();
    j["group_resolved"] = (t.group != nullptr);
    if (t.group != nullptr) j["group"] = group_to_json(*t.group);
    Json ferm = Json::array();
    for (std::size_t a : t.fermionic_excluded) ferm.push_back(spec.ring.name(a));
    j["fermionic_excluded"] = std::move(ferm);
    return j;
}

int run_analyze(const std::string& path, const std::string& format, bool with_smatrix,
                bool numeric_fallback, const OutputTarget& out) {
    ExchangeDocument doc = load_document(path);
    const CategorySpec& spec = doc.category;
    {
        ValidationReport rep = validate_ring(spec.ring);
        ValidationReport rib = validate_ribbon(spec);
        if (!rep.ok() || !rib.ok()) {
            std::cerr << "input fails validation; run `skelcat validate` for details\n";
            return kExitInvalid;
        }
    }

    Json j;
    j["schema_version"] = 1;
    if (!spec.name.empty()) j["name"] = spec.name;
    j["rank"] = spec.rank();

    DimReport dims = fp_dims(spec.ring, spec.dims);
    Json dims_json;
    if (dims.exact) {
        Json exact = Json::array();
        for (const auto& d : *dims.exact) exact.push_back(cyclo_to_json(d));
        dims_json["exact"] = std::move(exact);
    }
    Json dims_float = Json::array();
    for (double d : dims.dims) dims_float.push_back(format_double(d));
    dims_json["float"] = std::move(dims_float);
    j["dims"] = std::move(dims_json);
    Json global;
    if (dims.exact_global) global["exact"] = cyclo_to_json(*dims.exact_global);
    global["float"] = format_double(dims.global_dim);
    j["global_dim"] = std::move(global);

    auto centre_labels = centre(spec);
    Json centre_json = Json::array();
    for (std::size_t a : centre_labels) centre_json.push_back(spec.ring.name(a));
    j["centre"] = std::move(centre_json);

    bool modular = false;
    if (spec.dims) {
        ModularityReport rep = is_modular(spec);
        modular = rep.modular;
        j["modular"] = rep.modular;
        j["certified"] = true;
        j["det"] = cyclo_to_json(rep.det);
        if (with_smatrix) {
            SMatrix s = s_matrix(spec);
            Json rows = Json::array();
            for (std::size_t a = 0; a < spec.rank(); ++a) {
                Json row = Json::array();
                for (std::size_t b = 0; b < spec.rank(); ++b)
                    row.push_back(cyclo_to_json(s.at(a, b)));
                rows.push_back(std::move(row));
            }
            j["smatrix"] = std::move(rows);
        }
    } else if (numeric_fallback) {
        NumericAnalysis na = analyze_numeric(spec);
        modular = na.modular_numeric;
        j["modular"] = na.modular_numeric;
        j["certified"] = false;
        j["abs_det"] = format_double(na.abs_det);
    } else {
        throw MissingExactDimsError(
            "spec carries no exact dims; pass --numeric-fallback for an uncertified verdict");
    }

    TannakianSubcat t = maximal_tannakian(spec);
    j["tannakian"] = tannakian_to_json(spec, t);
    const bool condensable = t.labels.size() > 1;
    j["condensable"] = condensable;

    if (format == "json") {
        out.emit(render(j));
    } else {
        std::string text;
        text += "rank " + std::to_string(spec.rank());
        if (!spec.name.empty()) text += " (" + spec.name + ")";
        text += "\n";
        text += "global dim " + std::string(format_double(dims.global_dim)) + "\n";
        text += std::string(modular ? "modular" : "not modular") +
                (j["certified"].get<bool>() ? "" : " (non-certified)") + "\n";
        text += "centre: " + names_list(spec, centre_labels) + "\n";
        text += "tannakian: " + names_list(spec, t.labels) +
                (t.group != nullptr ? "" : " (group needs user input)") + "\n";
        text += std::string("condensable: ") + (condensable ? "yes" : "no") + "\n";
        out.emit(text);
    }
    return kExitOk;
}

// ---------------------------------------------------------------------- condense

int run_condense(const std::string& path, const std::string& subcat,
                 const std::string& group_path, const std::string& cocycle,
                 const OutputTarget& out) {
    ExchangeDocument doc = load_document(path);
    const CategorySpec& spec = doc.category;

    TannakianSubcat t;
    if (subcat == "auto") {
        if (doc.hints.labels) {
            std::vector<std::size_t> labels;
            for (const auto& n : *doc.hints.labels) labels.push_back(spec.ring.index_of(n));
            t = subcat_from_labels(spec, labels);
        } else {
            t = maximal_tannakian(spec);
        }
    } else {
        std::vector<std::size_t> labels;
        for (const auto& n : split_csv(subcat)) labels.push_back(spec.ring.index_of(n));
        t = subcat_from_labels(spec, labels);
    }

    if (t.group == nullptr) {
        std::optional<Json> group_json;
        if (!group_path.empty())
            group_json = load_json_file(group_path);
        else if (doc.hints.group)
            group_json = doc.hints.group;
        if (!group_json)
            throw DomainError(
                "subcategory is not pointed: supply its group and character table via --group");
        GroupFile gf = group_from_json(*group_json);
        if (!gf.characters)
            throw DomainError("group file needs a character table for non-pointed matching");
        std::vector<std::size_t> label_to_irrep;
        for (std::size_t a : t.labels) {
            auto it = gf.label_to_irrep.find(spec.ring.name(a));
            if (it == gf.label_to_irrep.end())
                throw DomainError("group file must map label " + spec.ring.name(a) +
                                  " to an irrep index");
            label_to_irrep.push_back(it->second);
        }
        verify_group_match(spec, t, gf.group, *gf.characters, label_to_irrep);
    }

    std::map<std::size_t, std::size_t> overrides;
    for (const auto& [name, id] : doc.hints.cocycle_overrides)
        overrides[spec.ring.index_of(name)] = id;
    if (!cocycle.empty()) {
        for (const auto& item : split_csv(cocycle)) {
            const auto eq = item.find('=');
            if (eq == std::string::npos)
                throw ParseError("--cocycle expects rep=classid pairs");
            overrides[spec.ring.index_of(item.substr(0, eq))] =
                static_cast<std::size_t>(std::stoull(item.substr(eq + 1)));
        }
    }

    CondensationResult result = condense(spec, t, overrides);
    CheckReport checks = verify_condensation(result, spec, t);
    out.emit(render(condensation_to_json(spec, result, checks)));
    return checks.all_pass() ? kExitOk : kExitInvalid;
}

// ---------------------------------------------------------------------- h2

int run_h2(const std::string& path, std::size_t bound, const OutputTarget& out) {
    GroupFile gf = group_from_json(load_json_file(path));
    H2Result r = h2_group(gf.group, bound);
    Json j;
    j["schema_version"] = 1;
    j["order"] = gf.group.order();
    Json inv = Json::array();
    for (long long d : r.invariants) inv.push_back(d);
    j["invariants"] = std::move(inv);
    j["class_count"] = r.class_count();
    Json gens = Json::array();
    for (const auto& c : r.generators) {
        Json rows = Json::array();
        for (unsigned g = 0; g < gf.group.order(); ++g) {
            Json row = Json::array();
            for (unsigned h = 0; h < gf.group.order(); ++h) row.push_back(cyclo_to_json(c.at(g, h)));
            rows.push_back(std::move(row));
        }
        gens.push_back(std::move(rows));
    }
    j["generators"] = std::move(gens);
    out.emit(render(j));
    return kExitOk;
}

// ---------------------------------------------------------------------- main

int dispatch(int argc, char** argv) {
    CLI::App app{"skeletal braided ribbon categories: validation, modularity, condensation"};
    app.require_subcommand(1);

    std::string path, format = "json", group_path, subcat = "auto", cocycle, out_path, second;
    bool frobenius_warn = false, with_smatrix = false, numeric_fallback = false;
    std::size_t bound = 16;

    auto* v = app.add_subcommand("validate", "check the fusion-ring and ribbon invariants");
    v->add_option("path", path, "exchange document or catalog:NAME")->required();
    v->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
    v->add_flag("--frobenius-warn", frobenius_warn, "demote Frobenius violations to warnings");

    auto* a = app.add_subcommand("analyze", "dims, centre, modularity verdict, Tannakian part");
    a->add_option("path", path)->required();
    a->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
    a->add_flag("--smatrix", with_smatrix, "include the unnormalized S-matrix");
    a->add_flag("--numeric-fallback", numeric_fallback,
                "allow an uncertified numeric verdict when exact dims are absent");
    a->add_option("--out", out_path, "write the report to a file");

    auto* c = app.add_subcommand("condense", "crossed product by a Tannakian subcategory");
    c->add_option("path", path)->required();
    c->add_option("--subcat", subcat, "comma-separated label names, or 'auto'");
    c->add_option("--group", group_path, "group + character table JSON for non-pointed subcategories");
    c->add_option("--cocycle", cocycle, "per-orbit overrides rep=classid[,rep=classid...]");
    c->add_option("--out", out_path);

    auto* cat = app.add_subcommand("catalog", "built-in exact category data");
    auto* cat_list = cat->add_subcommand("list", "names of the built-in entries");
    auto* cat_dump = cat->add_subcommand("dump", "write one entry as an exchange document");
    cat_dump->add_option("name", path)->required();
    cat_dump->add_option("--out", out_path);
    cat->require_subcommand(1);

    auto* h = app.add_subcommand("h2", "group cohomology H^2(G, T) of a finite group");
    h->add_option("path", path, "group JSON file")->required();
    h->add_option("--bound", bound, "largest admissible group order");
    h->add_option("--out", out_path);

    auto* p = app.add_subcommand("product", "Deligne product of two exchange documents");
    p->add_option("a", path)->required();
    p->add_option("b", second)->required();
    p->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    OutputTarget out{out_path};
    try {
        if (v->parsed()) return run_validate(path, format, frobenius_warn);
        if (a->parsed()) return run_analyze(path, format, with_smatrix, numeric_fallback, out);
        if (c->parsed()) return run_condense(path, subcat, group_path, cocycle, out);
        if (cat->parsed()) {
            if (cat_list->parsed()) {
                std::string text;
                for (const auto& name : catalog_names()) text += name + "\n";
                out.emit(text);
                return kExitOk;
            }
            if (cat_dump->parsed()) {
                out.emit(render(document_from_spec(load_named(path))));
                return kExitOk;
            }
        }
        if (h->parsed()) return run_h2(path, bound, out);
        if (p->parsed()) {
            ExchangeDocument da = load_document(path);
            ExchangeDocument db = load_document(second);
            out.emit(render(document_from_spec(deligne_product(da.category, db.category))));
            return kExitOk;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const DegeneracyError& e) {
        std::cerr << "degeneracy violation: " << e.what() << "\n";
        return kExitDegeneracy;
    } catch (const NeedsCocycleError& e) {
        std::cerr << "needs cocycle: " << e.what() << " (candidate classes:";
        for (std::size_t id : e.candidate_classes) std::cerr << " " << id;
        std::cerr << ")\n";
        return kExitNeedsCocycle;
    } catch (const AmbiguityError& e) {
        std::cerr << "ambiguous: " << e.what() << "\n";
        return kExitAmbiguous;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) { return dispatch(argc, argv); }
