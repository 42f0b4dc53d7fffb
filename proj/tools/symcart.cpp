// symcart: command-line front end. Every command prints one JSON document.
//
// Exit status: 0 success, 1 internal error, 2 check failure, 3 input error,
// 4 unsupported spectrum.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "symcart/json_io.hpp"
#include "symcart/symcart.hpp"

namespace {

using namespace symcart;

constexpr int kOk = 0, kInternal = 1, kCheckFailed = 2, kInputError = 3, kUnsupported = 4;

struct Options {
    std::string pair;
    std::string pair_file;
    std::uint64_t seed = 0;
    bool pretty = false;
    std::string field;
    std::string derivation;
    std::string point;
    bool example93 = false;
};

SymmetricPair load(const Options& o) {
    if (!o.pair.empty() && !o.pair_file.empty()) throw InputError("give either --pair or --pair-file, not both");
    if (!o.pair_file.empty()) return pair_from_file(o.pair_file);
    if (o.pair.empty()) throw InputError("this command needs --pair NAME or --pair-file PATH");
    return catalog_pair(o.pair);
}

json pair_header(const SymmetricPair& p) {
    return {{"name", p.name}, {"dim", p.dim()}, {"dim_h", p.h_basis.size()}, {"dim_q", p.q_basis.size()},
            {"rank", p.rank()}};
}

json chart_json(const PairContext& c) {
    json gens = json::array();
    unsigned long prod = 1;
    for (std::size_t i = 0; i < c.chart.generators.size(); ++i) {
        gens.push_back({{"poly", to_json(c.chart.generators[i])}, {"degree", c.chart.degrees[i]}});
        prod *= c.chart.degrees[i];
    }
    return {{"generators", gens},
            {"degree_product", prod},
            {"weyl_order", c.weyl.order()},
            {"real_coefficients", c.chart.real_generators}};
}

int cmd_catalog(json& out) {
    json list = json::array();
    for (const auto& p : catalog()) list.push_back(pair_header(p));
    out = {{"command", "catalog"}, {"pairs", list}};
    return kOk;
}

int cmd_roots(const Options& o, json& out) {
    PairContext c = analyze(load(o), o.seed);
    out = {{"command", "roots"}, {"pair", pair_header(c.pair)}, {"results", to_json(c.roots)}};
    return kOk;
}

int cmd_weyl(const Options& o, json& out) {
    PairContext c = analyze(load(o), o.seed);
    json gens = json::array();
    for (const auto& g : c.weyl.generators) gens.push_back(to_json(g));
    bool perm = permutes_roots(c.weyl, c.roots);
    out = {{"command", "weyl"},
           {"pair", pair_header(c.pair)},
           {"results", {{"order", c.weyl.order()}, {"generators", gens}, {"permutes_roots", perm}}}};
    return perm ? kOk : kCheckFailed;
}

int cmd_generators(const Options& o, json& out) {
    PairContext c = analyze(load(o), o.seed);
    out = {{"command", "generators"}, {"pair", pair_header(c.pair)}, {"results", chart_json(c)}};
    return kOk;
}

int cmd_phi(const Options& o, json& out) {
    PairContext c = analyze(load(o), o.seed);
    const auto& ch = c.chart;
    out = {{"command", "phi"},
           {"pair", pair_header(c.pair)},
           {"results",
            {{"phi", to_json(ch.phi)},
             {"gram_matrix", to_json(ch.gram)},
             {"gram_det", to_json(ch.gram_det)},
             {"c", to_json(ch.gram_constant)},
             {"real_coefficients", ch.real_phi}}}};
    return kOk;
}

int cmd_decompose(const Options& o, json& out) {
    PairContext c = analyze(load(o), o.seed);
    if (o.field.empty()) throw InputError("decompose needs --field '[\"p1\", ...]'");
    PolyVectorField x(polys_from_json(parse_json_text(o.field, "--field"), c.chart.rank, "--field"));
    if (x.size() != c.chart.rank)
        throw InputError("field has " + std::to_string(x.size()) + " components, rank is " + std::to_string(c.chart.rank));
    SolomonResult r = solomon_decompose(x, c.chart, c.weyl);
    out = {{"command", "decompose"},
           {"pair", pair_header(c.pair)},
           {"inputs", {{"field", to_json(x)}}},
           {"results", {{"generators", chart_json(c)["generators"]},
                        {"coefficients", to_json(r.coefficients)},
                        {"unique", r.kernel_dim == 0}}}};
    return kOk;
}

int cmd_lift(const Options& o, json& out) {
    PairContext c = analyze(load(o), o.seed);
    if (o.derivation.empty()) throw InputError("lift needs --derivation '[\"Dp1\", ...]'");
    InvariantDerivation d{polys_from_json(parse_json_text(o.derivation, "--derivation"), c.chart.rank, "--derivation")};
    require_invariant_derivation(d, c.chart, c.weyl);
    StabilityResult st = ideal_stable(d, c.chart);
    LiftResult lr = lift_derivation(d, c.chart);
    bool liftable = std::holds_alternative<Lifted>(lr);
    json res = {{"stable", st.stable}, {"d_phi", to_json(st.d_phi)}, {"liftable", liftable}};
    if (liftable) {
        const Lifted& l = std::get<Lifted>(lr);
        res["phi"] = to_json(l.phi);
        res["field"] = to_json(l.field);
    } else {
        const NotLiftable& n = std::get<NotLiftable>(lr);
        res["not_liftable"] = {{"index", n.index}, {"psi", to_json(n.psi)}, {"remainder", to_json(n.remainder)}};
        res["stability_remainder"] = to_json(st.remainder);
    }
    res["consistent"] = st.stable == liftable;
    out = {{"command", "lift"},
           {"pair", pair_header(c.pair)},
           {"inputs", {{"derivation", to_json(d.images)}}},
           {"results", res}};
    return st.stable == liftable ? kOk : kCheckFailed;
}

int cmd_slice(const Options& o, json& out) {
    PairContext c = analyze(load(o), o.seed);
    if (o.point.empty()) throw InputError("slice needs --point '[\"x0\", ...]'");
    Vector a = vector_from_json(parse_json_text(o.point, "--point"), c.chart.rank, "--point");
    LocalChart lc = local_chart(c.roots, c.weyl, c.chart, a);
    TransitionMatrix t = transition_matrix(c.chart, lc);
    json b = json::array(), cc = json::array(), gens = json::array();
    for (const auto& v : lc.local.b_basis) b.push_back(to_json(v));
    for (const auto& v : lc.local.c_basis) cc.push_back(to_json(v));
    for (std::size_t i = 0; i < lc.generators.size(); ++i)
        gens.push_back({{"poly", to_json(lc.generators[i])}, {"degree", lc.degrees[i]}});
    bool factor_ok = lc.psi * lc.phi_local == c.chart.phi;
    Scalar psi_a = lc.psi.evaluate(a);
    json res = {{"roots_a", to_json(lc.local.roots)["roots"]},
                {"weyl_a_order", lc.local.group.order()},
                {"b", b},
                {"c", cc},
                {"local_generators", gens},
                {"psi", to_json(lc.psi)},
                {"phi_local", to_json(lc.phi_local)},
                {"factorization_holds", factor_ok},
                {"psi_at_point", to_json(psi_a)},
                {"m", to_json(t.m)},
                {"det_m", to_json(t.det)},
                {"det_m_at_point", to_json(t.det_at_point)}};
    out = {{"command", "slice"}, {"pair", pair_header(c.pair)}, {"inputs", {{"point", to_json(a)}}}, {"results", res}};
    return factor_ok && !psi_a.is_zero() && !t.det_at_point.is_zero() ? kOk : kCheckFailed;
}

json example93_json(std::uint64_t seed, bool& ok) {
    Example93Data d = example93_data();
    CheckReport main = verify_example93(d, seed);
    Example93Data flipped = d;
    flipped.sigma_sign = Scalar(-1);
    Example93Data moved = d;
    moved.v = matrix3({{1, 0, 1}, {0, 0, 0}, {-1, 0, -1}});
    bool control_sigma = !verify_example93(flipped, seed).find("mc-centralizer")->ok;
    bool control_v = !verify_example93(moved, seed).find("v-orthogonal-to-a")->ok;
    ok = main.ok() && control_sigma && control_v;
    json j = to_json(main);
    j["negative_controls"] = {{"flipped_involution_fails", control_sigma}, {"generic_qM_vector_fails", control_v}};
    return j;
}

int cmd_verify(const Options& o, json& out) {
    bool ok = true;
    out = {{"command", "verify"}};
    SuiteOptions so;
    so.seed = o.seed;
    bool all = o.pair.empty() && o.pair_file.empty() && !o.example93;
    if (all || !o.pair.empty() || !o.pair_file.empty()) {
        std::vector<SymmetricPair> pairs;
        if (all)
            pairs = catalog();
        else
            pairs.push_back(load(o));
        json list = json::array();
        for (auto& p : pairs) {
            PairContext c = analyze(std::move(p), o.seed);
            CheckReport rep = verify_pair(c, so);
            ok = ok && rep.ok();
            json j = {{"name", c.pair.name}, {"phi", to_json(c.chart.phi)}};
            j.update(to_json(rep));
            list.push_back(j);
        }
        out["pairs"] = list;
    }
    if (all || o.example93) {
        bool ex = false;
        out["example93"] = example93_json(o.seed, ex);
        ok = ok && ex;
    }
    out["pass"] = ok;
    return ok ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact invariant theory for reductive symmetric pairs"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--pair", o.pair, "catalog pair name");
    app.add_option("--pair-file", o.pair_file, "pair definition JSON document");
    app.add_option("--seed", o.seed, "random seed (default 0)");
    app.add_flag("--pretty", o.pretty, "indent the JSON output");

    auto* catalog = app.add_subcommand("catalog", "list built-in pairs");
    auto* roots = app.add_subcommand("roots", "restricted roots with multiplicities");
    auto* weyl = app.add_subcommand("weyl", "Weyl group order and generators");
    auto* generators = app.add_subcommand("generators", "homogeneous generators of the invariant ring");
    auto* phi = app.add_subcommand("phi", "discriminant and the Gram identity");
    auto* decompose = app.add_subcommand("decompose", "write an invariant field as sum R_i grad p_i");
    decompose->add_option("--field", o.field, "JSON array of component polynomials");
    auto* lift = app.add_subcommand("lift", "lift a derivation to a vector field");
    lift->add_option("--derivation", o.derivation, "JSON array of generator images");
    auto* slice = app.add_subcommand("slice", "local chart, factorization of Phi and transition matrix");
    slice->add_option("--point", o.point, "JSON array of coordinates on the Cartan basis");
    auto* verify = app.add_subcommand("verify", "run the check suite");
    verify->add_flag("--example93", o.example93, "run the sl(3,R)/so(2,1) example checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    json out;
    int status = kOk;
    try {
        if (catalog->parsed()) status = cmd_catalog(out);
        else if (roots->parsed()) status = cmd_roots(o, out);
        else if (weyl->parsed()) status = cmd_weyl(o, out);
        else if (generators->parsed()) status = cmd_generators(o, out);
        else if (phi->parsed()) status = cmd_phi(o, out);
        else if (decompose->parsed()) status = cmd_decompose(o, out);
        else if (lift->parsed()) status = cmd_lift(o, out);
        else if (slice->parsed()) status = cmd_slice(o, out);
        else if (verify->parsed()) status = cmd_verify(o, out);
    } catch (const InputError& e) {
        std::cerr << "symcart: input error: " << e.what() << "\n";
        return kInputError;
    } catch (const UnsupportedSpectrum& e) {
        std::cerr << "symcart: unsupported: " << e.what() << "\n";
        return kUnsupported;
    } catch (const std::exception& e) {
        std::cerr << "symcart: internal error: " << e.what() << "\n";
        return kInternal;
    }
    std::cout << (o.pretty ? out.dump(2) : out.dump()) << "\n";
    return status;
}
