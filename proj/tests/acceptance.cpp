// One line per acceptance criterion. Exit status 0 only when every criterion passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "controls.hpp"
#include "skein/gluing.hpp"

using namespace skein;

namespace {

const Ring L = Ring::laurent();
const Ring C3 = Ring::cyclotomic(3);

/// Collects sub-results; a criterion passes when every expectation holds.
struct Criterion {
    std::vector<std::string> problems;
    std::size_t checks = 0;

    void expect_pass(const std::string& what, const Report& r) {
        checks += r.checks.size();
        if (r.checks.empty()) problems.push_back(what + ": no checks ran");
        for (const auto& c : r.checks)
            if (!c.pass) problems.push_back(what + " / " + c.id + (c.witness.empty() ? "" : ": " + c.witness));
    }
    void expect_fail(const std::string& what, const Report& r) {
        ++checks;
        const Check* f = r.first_failure();
        if (!f)
            problems.push_back(what + ": expected a failure, all checks passed");
        else if (f->witness.empty())
            problems.push_back(what + ": failure without a witness");
    }
    void expect(const std::string& what, bool ok) {
        ++checks;
        if (!ok) problems.push_back(what);
    }
};

Report one(const std::string& id, bool ok, const std::string& witness = {}) {
    Report r;
    r.add(id, id, ok, witness);
    return r;
}

void criterion1(Criterion& c) {
    for (const Ring r : {L, C3})
        for (const auto& p : {quantum_plane(r), bigon(r), gl2(r), triangle(r), bigon(r, true), triangle(r, true)}) {
            const std::string tag = p->name() + (p->at_one() ? "(w=1)" : "") + " " + r.name();
            c.expect_pass("validate " + tag, validate_presentation(*p));
            c.expect_pass("diamond " + tag, diamond_check(*p));
        }
    c.expect_pass("diamond bigon_plus1", diamond_check(*bigon_plus1()));
    c.expect_pass("diamond triangle_plus1", diamond_check(*triangle_plus1()));
}

void criterion2(Criterion& c) {
    for (const Ring r : {L, C3}) {
        c.expect_pass("hopf bigon " + r.name(), hopf_axioms_check(bigon(r)));
        c.expect_pass("det_q " + r.name(), gl2_det_check(r));
    }
}

void criterion3(Criterion& c) {
    c.expect_pass("q-binomial N=3", q_binomial_check(3, C3));
    c.expect_pass("q-binomial N=5", q_binomial_check(5, Ring::cyclotomic(5)));
    c.expect_fail("q-binomial formal q", q_binomial_check(3, L));
}

void criterion4(Criterion& c) {
    for (int N : {3, 5}) {
        const Report b = frobenius_centrality_check(Surface::Bigon, N);
        const Report t = frobenius_centrality_check(Surface::Triangle, N);
        c.expect("bigon has 4 central powers at N=" + std::to_string(N), b.checks.size() == 4);
        c.expect("triangle has 12 central powers at N=" + std::to_string(N), t.checks.size() == 12);
        c.expect_pass("centrality bigon N=" + std::to_string(N), b);
        c.expect_pass("centrality triangle N=" + std::to_string(N), t);
    }
    c.expect_pass("hopf and comodule compatibility N=3", frobenius_compat_check(3));
}

void criterion5(Criterion& c) {
    for (unsigned N : {3u, 5u, 7u})
        c.expect_pass("T_N(a++ + a--) N=" + std::to_string(N),
                      trace_identity_check(1, N, Ring::cyclotomic(static_cast<int>(N))));
    c.expect_fail("formal w N=3", trace_identity_check(1, 3, L));
}

void criterion6(Criterion& c) { c.expect_pass("trace identity k=2 N=3", trace_identity_check(2, 3, C3)); }

void criterion7(Criterion& c) {
    for (const Ring r : {L, C3}) {
        c.expect_pass("square catalog " + r.name(), gluing_catalog_check(ScenarioKind::Square, r));
        c.expect_pass("disc catalog " + r.name(), gluing_catalog_check(ScenarioKind::Disc, r));
    }
    c.expect_pass("square kernel d=2", kernel_check(ScenarioKind::Square, C3, 2));
    c.expect_pass("frobenius glued N=3", frobenius_glued_check(3, C3));
}

void criterion8(Criterion& c) {
    c.expect_pass("example brackets", example_brackets_check());
    c.expect_pass("bracket axioms bigon", bracket_property_check(Surface::Bigon));
    c.expect_pass("bracket axioms triangle", bracket_property_check(Surface::Triangle));
    for (const auto& o : all_orientations(Surface::Bigon))
        c.expect_pass("Psi Poisson bigon " + o.to_string(), psi_poisson_check(Surface::Bigon, o));
    c.expect_pass("Psi Poisson triangle +,+,+", psi_poisson_check(Surface::Triangle, parse_orientation("+,+,+", Surface::Triangle)));
    c.expect_pass("square brackets", poisson_gluing_check());
}

void criterion9(Criterion& c) {
    c.expect_fail("perturbed rule coefficient", controls::perturbed_rule_control());
    c.expect_fail("wrong Psi sign", controls::wrong_psi_sign_control());
    c.expect_fail("formal-w Chebyshev", controls::formal_chebyshev_control());
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria = {
        {"presentation integrity", criterion1},
        {"Hopf suite", criterion2},
        {"q-binomial", criterion3},
        {"Frobenius centrality and compatibility", criterion4},
        {"Chebyshev cancellation", criterion5},
        {"trace identity", criterion6},
        {"gluing", criterion7},
        {"Poisson suite", criterion8},
        {"negative controls", criterion9},
    };
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Criterion c;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            criteria[i].second(c);
        } catch (const std::exception& e) {
            c.problems.push_back(std::string("exception: ") + e.what());
        }
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        const bool ok = c.problems.empty();
        all = all && ok;
        std::printf("criterion %zu: %s  %s (%zu checks, %.0f ms)\n", i + 1, ok ? "PASS" : "FAIL",
                    criteria[i].first.c_str(), c.checks, ms);
        for (const auto& p : c.problems) std::printf("    %s\n", p.c_str());
    }
    return all ? 0 : 1;
}
