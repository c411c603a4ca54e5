// Command line front end: reduce, bracket, glue, export, verify.
#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "skein/algebras.hpp"
#include "skein/errors.hpp"
#include "skein/format.hpp"
#include "skein/gluing.hpp"
#include "skein/parse.hpp"

namespace {

using namespace skein;
using nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

/// Input errors: reported with usage exit code.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string algebra;
    std::string ring;
    std::string surface;
    std::string orientation;
    std::string scenario;
    std::string presentation_file;
    int N = 3;
    unsigned k = 2;
    unsigned degree = 2;
    unsigned max_length = 2;
    bool json = false;
    std::vector<std::string> exprs;
};

template <class F>
Report timed(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    Report r = f();
    r.duration_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

Ring ring_or(const Options& o, Ring fallback) { return o.ring.empty() ? fallback : Ring::parse(o.ring); }

std::vector<Ring> rings_or_default(const Options& o) {
    if (!o.ring.empty()) return {Ring::parse(o.ring)};
    return {Ring::laurent(), Ring::cyclotomic(3)};
}

std::vector<Surface> surfaces(const Options& o) {
    if (!o.surface.empty()) return {parse_surface(o.surface)};
    return {Surface::Bigon, Surface::Triangle};
}

std::vector<ScenarioKind> scenarios(const Options& o) {
    if (!o.scenario.empty()) return {parse_scenario(o.scenario)};
    return {ScenarioKind::Square, ScenarioKind::Disc};
}

void check_N(int N) {
    if (N < 3 || N % 2 == 0) throw UsageError("--N must be odd and at least 3");
}

PresentationPtr load_algebra(const Options& o) {
    if (!o.presentation_file.empty()) {
        std::ifstream in(o.presentation_file);
        if (!in) throw UsageError("cannot read " + o.presentation_file);
        std::stringstream buf;
        buf << in.rdbuf();
        return import_presentation(buf.str());
    }
    return build_builtin(o.algebra.empty() ? "bigon" : o.algebra, ring_or(o, Ring::laurent()));
}

/// Expected failure recorded as a passing check.
void negative_control(Report& into, const std::string& id, const std::string& anchor, const Report& r) {
    const Check* f = r.first_failure();
    into.add(id, anchor, f != nullptr, f ? f->id + ": " + f->witness : "identity unexpectedly held");
}

std::vector<PresentationPtr> presentations(const Options& o) {
    std::vector<PresentationPtr> out;
    if (!o.presentation_file.empty()) return {load_algebra(o)};
    std::vector<std::string> names = o.algebra.empty() ? builtin_names() : std::vector<std::string>{o.algebra};
    for (const auto& ring : rings_or_default(o))
        for (const auto& n : names) {
            auto p = build_builtin(n, ring);
            bool seen = false;
            for (const auto& q : out) seen = seen || q.get() == p.get();
            if (!seen) out.push_back(p);
        }
    return out;
}

Report suite_relations(const Options& o) {
    Report rep;
    rep.suite = "relations";
    for (const auto& p : presentations(o)) {
        const std::string tag = p->name() + ":" + p->ring().name();
        std::vector<NCPoly> rels;
        const std::string& n = p->name();
        auto starts = [&](const char* prefix) { return n.rfind(prefix, 0) == 0; };
        if (starts("triangle"))
            rels = triangle_relations(*p);
        else if (starts("bigon") || starts("gl2"))
            rels = bigon_relations(*p, starts("gl2"));
        for (std::size_t i = 0; i < rels.size(); ++i) {
            const NCPoly r = p->normal_form(rels[i]);
            rep.add(tag + " relation " + std::to_string(i), "defining relation reduces to 0", r.is_zero(),
                    r.is_zero() ? "" : format_poly(*p, r));
        }
        rep.merge(validate_presentation(*p), tag);
        if (starts("triangle") && !p->at_one()) rep.merge(rotation_check(p), tag);
    }
    return rep;
}

Report suite_confluence(const Options& o) {
    Report rep;
    rep.suite = "confluence";
    for (const auto& p : presentations(o)) {
        const std::string tag = p->name() + ":" + p->ring().name();
        rep.merge(validate_presentation(*p), tag);
        rep.merge(diamond_check(*p), tag);
    }
    return rep;
}

Report suite_hopf(const Options& o) {
    Report rep;
    rep.suite = "hopf";
    for (const auto& ring : rings_or_default(o)) {
        const std::string tag = ring.name();
        rep.merge(hopf_axioms_check(bigon(ring)), tag);
        rep.merge(gl2_det_check(ring), tag);
        rep.merge(comodule_axioms_check(triangle(ring)), tag);
    }
    return rep;
}

Report suite_frobenius(const Options& o) {
    check_N(o.N);
    Report rep;
    rep.suite = "frobenius:N=" + std::to_string(o.N);
    const Ring cyc = Ring::cyclotomic(o.N);
    rep.merge(q_binomial_check(static_cast<unsigned>(o.N), cyc), "q-binomial");
    negative_control(rep, "q-binomial formal q fails", "(x+y)^N != x^N + y^N for formal q",
                     q_binomial_check(static_cast<unsigned>(o.N), Ring::laurent()));
    for (Surface s : surfaces(o)) rep.merge(frobenius_suite(s, o.N), std::string(surface_name(s)));
    rep.merge(frobenius_compat_check(o.N), "compat");
    return rep;
}

Report suite_chebyshev(const Options& o) {
    check_N(o.N);
    Report rep;
    rep.suite = "chebyshev:N=" + std::to_string(o.N);
    rep.merge(trace_identity_check(1, static_cast<unsigned>(o.N), Ring::cyclotomic(o.N)));
    negative_control(rep, "formal w fails", "T_N(a++ + a--) != a++^N + a--^N for formal w",
                     trace_identity_check(1, static_cast<unsigned>(o.N), Ring::laurent()));
    return rep;
}

Report suite_trace(const Options& o) {
    check_N(o.N);
    if (o.k < 1) throw UsageError("--k must be at least 1");
    return trace_identity_check(o.k, static_cast<unsigned>(o.N), ring_or(o, Ring::cyclotomic(o.N)));
}

Report suite_poisson(const Options& o) {
    Report rep;
    rep.suite = "poisson";
    rep.merge(r_matrix_identities_check(), "r-matrix");
    rep.merge(example_brackets_check(), "examples");
    for (Surface s : surfaces(o)) {
        const std::string sn = surface_name(s);
        rep.merge(bracket_property_check(s), sn);
        std::vector<Orientation> os;
        if (o.orientation.empty())
            os = all_orientations(s);
        else
            os = {parse_orientation(o.orientation, s)};
        for (const auto& ori : os) rep.merge(poisson_suite(s, ori), sn + " " + ori.to_string());
    }
    rep.merge(poisson_gluing_check(), "square");
    return rep;
}

Report suite_gluing(const Options& o) {
    check_N(o.N);
    Report rep;
    rep.suite = "gluing:N=" + std::to_string(o.N);
    const Ring cyc = Ring::cyclotomic(o.N);
    for (ScenarioKind k : scenarios(o)) {
        const std::string sn = scenario_name(k);
        for (const auto& ring : o.ring.empty() ? std::vector<Ring>{Ring::laurent(), cyc} : rings_or_default(o))
            rep.merge(gluing_catalog_check(k, ring), sn + ":" + ring.name());
        rep.merge(kernel_check(k, cyc, o.degree, o.max_length), sn + " kernel");
    }
    rep.merge(frobenius_glued_check(o.N, cyc), "frobenius");
    rep.merge(poisson_gluing_check(), "poisson");
    return rep;
}

using SuiteFn = Report (*)(const Options&);
const std::vector<std::pair<std::string, SuiteFn>>& suites() {
    static const std::vector<std::pair<std::string, SuiteFn>> s = {
        {"relations", suite_relations}, {"confluence", suite_confluence}, {"hopf", suite_hopf},
        {"frobenius", suite_frobenius}, {"chebyshev", suite_chebyshev},   {"trace", suite_trace},
        {"poisson", suite_poisson},     {"gluing", suite_gluing},
    };
    return s;
}

int emit(const Report& r, bool json) {
    std::cout << (json ? r.to_json() + "\n" : r.to_text());
    return r.passed() ? kExitPass : kExitFail;
}

int cmd_verify(const std::string& which, const Options& o) {
    if (which == "all") {
        Report all;
        all.suite = "all";
        const auto t0 = std::chrono::steady_clock::now();
        for (const auto& [name, fn] : suites()) {
            Options sub = o;
            if (name == "trace") sub.ring.clear();
            all.merge(fn(sub), name);
        }
        all.duration_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        return emit(all, o.json);
    }
    for (const auto& [name, fn] : suites())
        if (name == which) return emit(timed([&] { return fn(o); }), o.json);
    throw UsageError("unknown suite '" + which + "'");
}

int cmd_reduce(const Options& o) {
    const auto p = load_algebra(o);
    if (o.exprs.size() != 1) throw UsageError("reduce takes one expression");
    const NCPoly r = parse_expr(o.exprs[0], *p);
    if (o.json) {
        ordered_json j;
        j["algebra"] = p->name();
        j["ring"] = p->ring().name();
        j["result"] = format_poly(*p, r);
        j["terms"] = ordered_json::parse(format_poly_json(*p, r));
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << format_poly(*p, r) << "\n";
    }
    return kExitPass;
}

int cmd_export(const Options& o) {
    std::cout << export_presentation(*load_algebra(o)) << "\n";
    return kExitPass;
}

int cmd_bracket(const Options& o) {
    if (o.exprs.size() != 2) throw UsageError("bracket takes two expressions");
    const Surface s = parse_surface(o.surface.empty() ? "bigon" : o.surface);
    const PresentationPtr p = frobenius_source(s);
    const NCPoly u = parse_expr(o.exprs[0], *p), v = parse_expr(o.exprs[1], *p);
    const NCPoly b = star_bracket(u, v, p);
    if (o.json) {
        ordered_json j;
        j["surface"] = surface_name(s);
        j["u"] = format_poly(*p, u);
        j["v"] = format_poly(*p, v);
        j["bracket"] = format_poly(*p, b);
        j["terms"] = ordered_json::parse(format_poly_json(*p, b));
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << format_poly(*p, b) << "\n";
    }
    return kExitPass;
}

int cmd_glue(const Options& o) {
    check_N(o.N);
    const ScenarioKind kind = parse_scenario(o.scenario.empty() ? "square" : o.scenario);
    const Ring ring = ring_or(o, Ring::cyclotomic(o.N));
    const GluingScenario s = make_scenario(kind, ring);
    const KernelResult k = truncated_kernel_solve(s, o.degree, o.max_length);
    ordered_json j;
    j["scenario"] = scenario_name(kind);
    j["ring"] = ring.name();
    j["kernel_degree"] = o.degree;
    j["max_length"] = o.max_length;
    j["domain_dimension"] = k.domain_dimension;
    j["rank"] = k.rank;
    j["kernel_dimension"] = k.basis.size();
    auto basis = ordered_json::array();
    for (const auto& v : k.basis) basis.push_back(format_poly(*s.algebra, v));
    j["basis"] = std::move(basis);
    bool ok = true;
    auto members = ordered_json::array();
    auto member = [&](const std::string& label, const NCPoly& x, bool expect_glued) {
        const NCPoly d = coaction_defect(s, x);
        ordered_json m;
        m["element"] = label;
        m["normal_form"] = format_poly(*s.algebra, s.algebra->normal_form(x));
        m["defect_zero"] = d.is_zero();
        m["in_kernel_span"] = in_span(k.basis, x);
        if (!d.is_zero()) m["defect"] = format_poly(*s.target, d);
        if (expect_glued) ok = ok && d.is_zero();
        members.push_back(std::move(m));
    };
    if (o.exprs.empty())
        for (const auto& n : catalog_names(kind)) member(n, glued_element(s, n), true);
    for (const auto& e : o.exprs) member(e, parse_expr(e, *s.algebra), false);
    j["membership"] = std::move(members);
    std::cout << j.dump(2) << "\n";
    return ok ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations in stated skein algebras of the bigon and triangle"};
    app.require_subcommand(1);
    Options o;
    auto common = [&](CLI::App* c) {
        c->add_option("--algebra", o.algebra, "built-in algebra: " + [] {
            std::string s;
            for (const auto& n : builtin_names()) s += (s.empty() ? "" : ", ") + n;
            return s;
        }());
        c->add_option("--ring", o.ring, "coefficient ring: laurent, cyclo:N (N odd > 1) or dual");
        c->add_option("--presentation-file", o.presentation_file, "JSON presentation file instead of --algebra");
        c->add_flag("--json", o.json, "JSON output");
    };

    auto* reduce = app.add_subcommand("reduce", "normal form of an expression");
    common(reduce);
    reduce->add_option("expr", o.exprs, "expression")->required();

    auto* exp = app.add_subcommand("export", "print a presentation as JSON");
    common(exp);

    auto* bracket = app.add_subcommand("bracket", "skein Poisson bracket {u, v} at w = +1");
    bracket->add_option("--surface", o.surface, "bigon or triangle");
    bracket->add_flag("--json", o.json, "JSON output");
    bracket->add_option("exprs", o.exprs, "u v")->expected(2)->required();

    auto* glue = app.add_subcommand("glue", "coaction kernel of a glued scenario");
    glue->add_option("--scenario", o.scenario, "square or disc");
    glue->add_option("--kernel-degree", o.degree, "filtration degree bound");
    glue->add_option("--max-length", o.max_length, "word length bound");
    glue->add_option("--N", o.N, "odd order of w");
    glue->add_option("--ring", o.ring, "field ring, default cyclo:N");
    glue->add_option("exprs", o.exprs, "extra elements to test");

    std::string which;
    auto* verify = app.add_subcommand("verify", "run verification suites");
    common(verify);
    verify->add_option("suite", which, "relations|hopf|confluence|frobenius|chebyshev|trace|poisson|gluing|all")
        ->required()
        ->check(CLI::IsMember({"relations", "hopf", "confluence", "frobenius", "chebyshev", "trace", "poisson",
                               "gluing", "all"}));
    verify->add_option("--N", o.N, "odd order of w");
    verify->add_option("--k", o.k, "number of bigon factors (trace)");
    verify->add_option("--surface", o.surface, "bigon or triangle");
    verify->add_option("--orientation", o.orientation, "boundary orientation, e.g. -,+ or +,+,+");
    verify->add_option("--scenario", o.scenario, "square or disc (gluing)");
    verify->add_option("--kernel-degree", o.degree, "filtration degree bound (gluing)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (*reduce) return cmd_reduce(o);
        if (*exp) return cmd_export(o);
        if (*bracket) return cmd_bracket(o);
        if (*glue) return cmd_glue(o);
        return cmd_verify(which, o);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const AlphabetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << "\n";
        return kExitFail;
    }
}
