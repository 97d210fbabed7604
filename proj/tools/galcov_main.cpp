#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "galcov/artal.hpp"
#include "galcov/artal_numeric.hpp"
#include "galcov/cover.hpp"
#include "galcov/curve.hpp"
#include "galcov/equivalence.hpp"
#include "galcov/json_io.hpp"

// Exit codes: 0 success (including "inconclusive"/"equivalent"), 1 input
// error, 2 validation or extraction failure, 3 distinguished, 4 resource
// limit.  Result JSON goes to stdout (or -o <file>); errors go to stderr.

namespace {

using galcov::json;

struct Opts {
    std::string path1, path2;
    std::string lift;
    std::string tau = "all";
    std::string type_str;
    std::string out;
    int beta = 0;
    double tol = 1e-6;
    int max_vertices = 0;  // 0: library defaults
};

void emit(const json& j, const std::string& out) {
    if (out.empty())
        std::cout << galcov::dump_json(j);
    else
        galcov::save_json_file(out, j);
}

// "2,4:2,2,2:6" -> partitions (2,4), (2,2,2), (6).  A colon-free spelling
// like "3,3,3" is shorthand for three one-part partitions.
galcov::ArtalType parse_type(const std::string& s) {
    auto split = [](const std::string& str, char sep) {
        std::vector<std::string> out;
        std::string cur;
        for (char ch : str) {
            if (ch == sep) {
                out.push_back(cur);
                cur.clear();
            } else {
                cur += ch;
            }
        }
        out.push_back(cur);
        return out;
    };
    std::vector<std::vector<int>> parts;
    if (s.find(':') != std::string::npos) {
        for (const auto& grp : split(s, ':')) {
            std::vector<int> p;
            for (const auto& tok : split(grp, ','))
                p.push_back(std::stoi(tok));
            parts.push_back(std::move(p));
        }
    } else {
        for (const auto& tok : split(s, ','))
            parts.push_back({std::stoi(tok)});
    }
    if (parts.size() != 3)
        throw std::invalid_argument("--type needs exactly three partitions, e.g. 2,4:2,2,2:6");
    int d = 0;
    for (int e : parts[0]) d += e;
    return galcov::ArtalType::of(d, galcov::Partition::of(parts[0]),
                                 galcov::Partition::of(parts[1]),
                                 galcov::Partition::of(parts[2]));
}

// Loads a cover and insists it passes validation; returns exit code 2
// through `rc` when it does not (after emitting the report).
bool load_valid_cover(const std::string& path, const std::string& out, const char* which,
                      galcov::Cover& cover, int& rc) {
    cover = galcov::cover_from_json(galcov::load_json_file(path));
    auto rep = galcov::validate_cover(cover);
    if (!rep.ok()) {
        emit(json{{"error", std::string(which) + " failed validation"},
                  {"report", galcov::validation_report_to_json(rep)}},
             out);
        rc = 2;
        return false;
    }
    return true;
}

std::vector<galcov::GroupAutomorphism> resolve_taus(const galcov::GroupPtr& g,
                                                    const std::string& tau) {
    if (tau == "plus") return {galcov::GroupAutomorphism::identity(g)};
    if (tau == "minus") return {galcov::GroupAutomorphism::inversion(g)};
    if (tau == "all") {
        if (g->standard_cyclic()) return galcov::allowed_automorphisms(g->order());
        return {galcov::GroupAutomorphism::identity(g)};
    }
    // anything else names a JSON file with explicit images
    return {galcov::automorphism_from_json(galcov::load_json_file(tau), g)};
}

int run_validate(const Opts& o) {
    auto cover = galcov::cover_from_json(galcov::load_json_file(o.path1));
    auto rep = galcov::validate_cover(cover);
    emit(galcov::validation_report_to_json(rep), o.out);
    return rep.ok() ? 0 : 2;
}

int run_nv(const Opts& o) {
    galcov::Cover cover;
    int rc = 0;
    if (!load_valid_cover(o.path1, o.out, "cover", cover, rc)) return rc;
    auto walk = galcov::walk_from_json(galcov::load_json_file(o.path2), cover.base);
    int lift;
    if (o.lift.empty()) {
        auto fiber = galcov::fiber_vertices(cover, walk.start());
        lift = fiber.front();
    } else {
        lift = cover.total.require_vertex(o.lift);
    }
    auto set = galcov::net_voltage_set(cover, walk, lift);
    auto cls = galcov::net_voltage_class(cover, walk);
    json out{{"lift", cover.total.vertex_id(lift)},
             {"set", galcov::subset_to_json(set)},
             {"class", galcov::subset_class_to_json(cls)}};
    if (cover.group->standard_cyclic()) {
        if (auto coset = galcov::coset_of(set)) out["coset"] = galcov::coset_to_json(*coset);
    }
    emit(out, o.out);
    return 0;
}

int run_distinguish(const Opts& o) {
    galcov::Cover c1, c2;
    int rc = 0;
    if (!load_valid_cover(o.path1, o.out, "cover 1", c1, rc)) return rc;
    if (!load_valid_cover(o.path2, o.out, "cover 2", c2, rc)) return rc;
    bool all_distinguished = true;
    json results = json::array();
    for (const auto& tau : resolve_taus(c1.group, o.tau)) {
        auto verdict = galcov::distinguish(c1, c2, tau);
        all_distinguished &= verdict.kind == galcov::Verdict::Kind::Distinguished;
        results.push_back(json{{"tau", galcov::automorphism_to_json(tau)},
                               {"result", galcov::verdict_to_json(verdict, c1, c2)}});
    }
    emit(json{{"results", std::move(results)}, {"all_distinguished", all_distinguished}}, o.out);
    return all_distinguished ? 3 : 0;
}

int run_equivalence(const Opts& o) {
    galcov::Cover c1, c2;
    int rc = 0;
    if (!load_valid_cover(o.path1, o.out, "cover 1", c1, rc)) return rc;
    if (!load_valid_cover(o.path2, o.out, "cover 2", c2, rc)) return rc;
    galcov::SearchLimits limits;
    if (o.max_vertices > 0) {
        limits.max_base_vertices = o.max_vertices;
        limits.max_total_vertices = o.max_vertices;
    }
    bool all_distinguished = true;
    bool any_equivalent = false;
    json results = json::array();
    for (const auto& tau : resolve_taus(c1.group, o.tau)) {
        auto verdict = galcov::exhaustive_equivalence(c1, c2, tau, limits);
        all_distinguished &= verdict.kind == galcov::Verdict::Kind::Distinguished;
        any_equivalent |= verdict.kind == galcov::Verdict::Kind::Equivalent;
        results.push_back(json{{"tau", galcov::automorphism_to_json(tau)},
                               {"result", galcov::verdict_to_json(verdict, c1, c2)}});
    }
    emit(json{{"results", std::move(results)},
              {"all_distinguished", all_distinguished},
              {"any_equivalent", any_equivalent}},
         o.out);
    return all_distinguished ? 3 : 0;
}

int run_curve_incidence(const Opts& o) {
    auto cc = galcov::curve_from_json(galcov::load_json_file(o.path1));
    auto ig = galcov::incidence_graph(cc);
    json classes = json::object();
    for (int v = 0; v < ig.graph.vertex_count(); ++v)
        classes[ig.graph.vertex_id(v)] = ig.vertex_class[v];
    emit(json{{"graph", galcov::graph_to_json(ig.graph)}, {"vertex_class", std::move(classes)}},
         o.out);
    return 0;
}

int run_curve_splitting(const Opts& o) {
    auto cc = galcov::curve_from_json(galcov::load_json_file(o.path1));
    auto data = galcov::splitting_data_from_json(galcov::load_json_file(o.path2));
    auto cover = galcov::build_splitting_cover(cc, data);
    json splitting = json::object();
    for (const auto& comp : cc.components)
        splitting[comp.id] = galcov::splitting_number(cover, comp.id);
    emit(json{{"cover", galcov::cover_to_json(cover)},
              {"splitting_numbers", std::move(splitting)},
              {"connected_number", galcov::connected_number(cover)}},
         o.out);
    return 0;
}

int run_artal_classify(const Opts& o) {
    auto type = parse_type(o.type_str);
    emit(galcov::artal_class_to_json(galcov::classify(type, o.beta)), o.out);
    return 0;
}

int run_artal_family(const Opts& o) {
    auto type = parse_type(o.type_str);
    json classes = json::array();
    for (const auto& cls : galcov::family_table(type))
        classes.push_back(galcov::artal_class_to_json(cls));
    emit(json{{"type", galcov::artal_type_to_json(type)},
              {"s", type.s_all()},
              {"classes", std::move(classes)}},
         o.out);
    return 0;
}

int run_artal_splitting(const Opts& o) {
    auto type = parse_type(o.type_str);
    auto sg = galcov::splitting_graph_of(type, o.beta);
    json splitting = json::object();
    for (const auto& comp : sg.curve.components)
        splitting[comp.id] = galcov::splitting_number(sg.cover, comp.id);
    emit(json{{"type", galcov::artal_type_to_json(sg.type)},
              {"beta", sg.beta},
              {"cover", galcov::cover_to_json(sg.cover)},
              {"nv_plus", galcov::coset_to_json(sg.nv_plus)},
              {"nv_minus", galcov::coset_to_json(sg.nv_minus)},
              {"splitting_numbers", std::move(splitting)},
              {"connected_number", galcov::connected_number(sg.cover)}},
         o.out);
    return 0;
}

int run_artal_numeric(const Opts& o) {
    auto a = galcov::coefficients_from_json(galcov::load_json_file(o.path1));
    galcov::ArtalHValues hv;
    try {
        hv = galcov::h_values_for_artal(a.type, a.beta, a.c, o.tol);
    } catch (const std::invalid_argument& e) {
        // parsed fine but the (4.3) constraints fail: a validation failure
        emit(json{{"error", e.what()}}, o.out);
        return 2;
    }
    std::vector<galcov::HEvaluation> evals{
        {hv.hx_P2, galcov::principal_root(hv.hx_P1, a.type.mu(1)), a.type.mu(1), a.type.s(1)},
        {hv.hy_P3, galcov::principal_root(hv.hy_P2, a.type.mu(2)), a.type.mu(2), a.type.s(2)},
        {hv.hz_P1, galcov::principal_root(hv.hz_P3, a.type.mu(3)), a.type.mu(3), a.type.s(3)},
    };
    auto extractions = galcov::extract_offsets(evals, a.type.degree(), o.tol);
    const int s = a.type.s_all();
    long long sum = 0;
    json exj = json::array();
    for (const auto& ex : extractions) {
        sum += ex.alpha;
        exj.push_back(json{{"alpha", ex.alpha}, {"residual", ex.residual}, {"margin", ex.margin}});
    }
    const int recovered = static_cast<int>(sum % s);
    auto coset = galcov::theorem_net_voltage({a.type.s(1), a.type.s(2), a.type.s(3)},
                                            {extractions[0].alpha, extractions[1].alpha,
                                             extractions[2].alpha},
                                            a.type.degree());
    auto cx = [](std::complex<double> z) { return json{{"re", z.real()}, {"im", z.imag()}}; };
    const bool consistent = (a.beta % s + s) % s == recovered;
    emit(json{{"h_values",
               json{{"hx_P1", cx(hv.hx_P1)},
                    {"hx_P2", cx(hv.hx_P2)},
                    {"hy_P2", cx(hv.hy_P2)},
                    {"hy_P3", cx(hv.hy_P3)},
                    {"hz_P3", cx(hv.hz_P3)},
                    {"hz_P1", cx(hv.hz_P1)}}},
              {"extractions", std::move(exj)},
              {"s", s},
              {"beta_declared", a.beta},
              {"beta_recovered", recovered},
              {"consistent", consistent},
              {"coset", galcov::coset_to_json(coset)}},
         o.out);
    return consistent ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"net voltages, splitting graphs, and equivalence of branched Galois covers"};
    app.require_subcommand(1);
    Opts o;

    auto* validate = app.add_subcommand("validate-cover", "check the cover axioms on a JSON cover");
    validate->add_option("cover", o.path1, "cover JSON file")->required();
    validate->add_option("-o,--out", o.out, "write the report here instead of stdout");

    auto* nv = app.add_subcommand("nv", "net voltage set and class of a closed base walk");
    nv->add_option("cover", o.path1, "cover JSON file")->required();
    nv->add_option("walk", o.path2, "walk JSON file (on the base graph)")->required();
    nv->add_option("--lift", o.lift, "total vertex to lift from (default: first in fiber)");
    nv->add_option("-o,--out", o.out, "output file");

    auto* dist = app.add_subcommand("distinguish",
                                    "compare net voltage signatures (sound, one-sided)");
    dist->add_option("cover1", o.path1)->required();
    dist->add_option("cover2", o.path2)->required();
    dist->add_option("--tau", o.tau, "plus | minus | all | <automorphism JSON>");
    dist->add_option("-o,--out", o.out, "output file");

    auto* equiv = app.add_subcommand("equivalence", "exhaustive equivalence search");
    equiv->add_option("cover1", o.path1)->required();
    equiv->add_option("cover2", o.path2)->required();
    equiv->add_option("--tau", o.tau, "plus | minus | all | <automorphism JSON>");
    equiv->add_option("--max-vertices", o.max_vertices, "search size limit");
    equiv->add_option("-o,--out", o.out, "output file");

    auto* curve = app.add_subcommand("curve", "curve combinatorics");
    curve->require_subcommand(1);
    auto* cinc = curve->add_subcommand("incidence", "incidence graph of a curve");
    cinc->add_option("curve", o.path1, "curve JSON file")->required();
    cinc->add_option("-o,--out", o.out, "output file");
    auto* csplit = curve->add_subcommand("splitting-graph",
                                         "splitting graph from cyclic splitting data");
    csplit->add_option("curve", o.path1, "curve JSON file")->required();
    csplit->add_option("data", o.path2, "splitting data JSON file")->required();
    csplit->add_option("-o,--out", o.out, "output file");

    auto* artal = app.add_subcommand("artal", "arrangements of a curve with three tangent lines");
    artal->require_subcommand(1);
    auto* aclass = artal->add_subcommand("classify", "topology class of (type, beta)");
    aclass->add_option("--type", o.type_str, "e.g. 3,3,3 or 2,4:2,2,2:6")->required();
    aclass->add_option("--beta", o.beta, "offset in [0, s)")->required();
    aclass->add_option("-o,--out", o.out, "output file");
    auto* afam = artal->add_subcommand("family", "all topology classes of a type");
    afam->add_option("--type", o.type_str)->required();
    afam->add_option("-o,--out", o.out, "output file");
    auto* asplit = artal->add_subcommand("splitting-graph", "splitting graph of (type, beta)");
    asplit->add_option("--type", o.type_str)->required();
    asplit->add_option("--beta", o.beta)->required();
    asplit->add_option("-o,--out", o.out, "output file");
    auto* anum = artal->add_subcommand("numeric-beta", "recover beta from coefficient data");
    anum->add_option("--coeffs", o.path1, "coefficients JSON file")->required();
    anum->add_option("--tol", o.tol, "matching tolerance (default 1e-6)");
    anum->add_option("-o,--out", o.out, "output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (validate->parsed()) return run_validate(o);
        if (nv->parsed()) return run_nv(o);
        if (dist->parsed()) return run_distinguish(o);
        if (equiv->parsed()) return run_equivalence(o);
        if (cinc->parsed()) return run_curve_incidence(o);
        if (csplit->parsed()) return run_curve_splitting(o);
        if (aclass->parsed()) return run_artal_classify(o);
        if (afam->parsed()) return run_artal_family(o);
        if (asplit->parsed()) return run_artal_splitting(o);
        if (anum->parsed()) return run_artal_numeric(o);
    } catch (const galcov::resource_limit_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const galcov::extraction_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
