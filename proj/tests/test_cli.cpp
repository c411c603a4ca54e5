#include <array>
#include <cstdio>
#include <regex>
#include <sys/wait.h>

#include "support.hpp"

using namespace skein;
using namespace skein::test;

namespace {

const Ring L = Ring::laurent();
const Ring C3 = Ring::cyclotomic(3);

struct Run {
    int code;
    std::string out;
};

Run run_cli(const std::string& args) {
    const std::string cmd = std::string(SKEIN_CLI) + " " + args + " 2>/dev/null";
    FILE* f = popen(cmd.c_str(), "r");
    REQUIRE(f != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t n = std::fread(buf.data(), 1, buf.size(), f)) out.append(buf.data(), n);
    const int status = pclose(f);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::size_t error_position(const std::string& text, const Presentation& p) {
    try {
        parse_expr(text, p);
    } catch (const ParseError& e) {
        return e.position();
    }
    FAIL("no parse error for " << text);
    return 0;
}

}  // namespace

TEST_CASE("cli: parsing") {
    const auto b = bigon(L);
    CHECK(P(b, "a[+,+]*a[-,-] - 1") == P(b, "q^-1*a[+,-]*a[-,+]"));
    CHECK(P(b, "1") == b->one());
    CHECK(P(b, "2^3 - 8").is_zero());
    CHECK(P(b, "-a[+,+]^2 + 2*a[+,+]^2") == b->multiply(P(b, "a[+,+]"), P(b, "a[+,+]")));
    CHECK(P(b, "a[+,+]/2 + a[+,+]/2") == P(b, "a[+,+]"));
    CHECK(P(b, "(w^2)^-3*w^6") == b->one());
    CHECK(P(b, "A") == P(b, "w^-2"));
    CHECK(P(b, "x[+,-]") == P(b, "a[+,-]"));
    CHECK(P(bigon(C3), "T[3](a[+,+] + a[-,-])") == P(bigon(C3), "a[+,+]^3 + a[-,-]^3"));
    CHECK(parse_scalar("2*w^3 - 1/2", L) == Scalar(L, 2) * Scalar::omega_power(3, L) - Scalar(L, Rational(1, 2)));
    CHECK(parse_scalar("h", Ring::dual()) == Scalar::hbar());
    CHECK(parse_generator("g[-,+]@1") == GeneratorId::with_states("g", State::Minus, State::Plus, 1));
    CHECK(parse_generator("x") == GeneratorId::plain("x"));
}

TEST_CASE("cli: tensor syntax") {
    const auto bb = Presentation::tensor({bigon(L), bigon(L)});
    CHECK(P(bb, "a[+,+] ox a[+,-]") == P(bb, "a[+,-]@1*a[+,+]@0"));
    CHECK(P(bb, "(a[+,+] + 1) ox a[-,-]") == P(bb, "a[+,+]@0*a[-,-]@1 + a[-,-]@1"));
}

TEST_CASE("cli: parse errors carry positions") {
    const auto b = bigon(L);
    CHECK(error_position("(a[+,+]", *b) == 7);
    CHECK(error_position("a[+,+] +", *b) == 8);
    CHECK(error_position("a[+;+]", *b) == 3);
    CHECK(error_position("z[+,+]", *b) == 0);
    CHECK(error_position("a[+,+] * ) ", *b) == 9);
    CHECK(error_position("1/0", *b) == 2);
    CHECK(error_position("a[+,+]^-1", *b) == 9);
    CHECK(error_position("a[+,+]@1", *b) == 0);
    CHECK_THROWS_AS(P(b, "h"), ParseError);
    CHECK_THROWS_AS(P(b, "a[+,+] ox a[-,-]"), ParseError);
}

TEST_CASE("cli: formatting") {
    const auto b = bigon(L);
    CHECK(format_poly(*b, b->zero()) == "0");
    CHECK(format_poly(*b, b->one()) == "1");
    CHECK(format_poly(*b, P(b, "q*a[+,-]*a[-,+]")) == "(w^-4)*a[-,+]*a[+,-]");
    CHECK(format_poly(*scalars(Ring::dual()), scalars(Ring::dual())->constant(Scalar::dual(1, 1))) == "1 + h");
}

TEST_CASE("cli: format and parse round trip") {
    std::mt19937 rng(53);
    for (const Ring r : {L, C3, Ring::cyclotomic(5)}) {
        std::vector<PresentationPtr> algebras;
        for (const auto& name : builtin_names()) algebras.push_back(build_builtin(name, r));
        algebras.push_back(Presentation::tensor({bigon(r), triangle(r)}));
        for (const auto& p : algebras) {
            for (int i = 0; i < 15; ++i) {
                NCPoly x = random_poly(rng, *p);
                if (!p->at_one() && r == L) x = Scalar::omega_power(i - 7, r) * x;
                const std::string text = format_poly(*p, x);
                CAPTURE(p->name());
                CAPTURE(text);
                CHECK(P(p, text) == x);
            }
        }
    }
}

TEST_CASE("cli: presentation files round trip") {
    for (const auto& p : {quantum_plane(L), bigon(C3), triangle(L), triangle_plus1()}) {
        const std::string text = export_presentation(*p);
        const PresentationPtr q = import_presentation(text);
        CHECK(q->rules().size() == p->rules().size());
        CHECK(q->alphabet() == p->alphabet());
        CHECK(export_presentation(*q) == text);
        for (const auto& r : p->rules()) CHECK(q->normal_form(r.lhs) == r.rhs);
    }
    CHECK_THROWS_AS(import_presentation("{not json"), ParseError);
    CHECK_THROWS_AS(import_presentation("{\"ring\": \"laurent\"}"), PresentationError);
}

TEST_CASE("cli: report rendering") {
    Report r;
    r.suite = "demo";
    r.add("one", "1 = 1", true);
    r.add("two", "0 = 1", false, "1");
    r.duration_ms = 3.5;
    const std::string j = r.to_json(false);
    CHECK(j.find("duration_ms") == std::string::npos);
    CHECK(j.find("\"status\": \"FAIL\"") != std::string::npos);
    CHECK(r.to_json().find("duration_ms") != std::string::npos);
    CHECK(r.to_text().find("FAIL") != std::string::npos);
    Report outer;
    outer.merge(r, "pre");
    CHECK(outer.checks[1].id == "pre/two");
    CHECK_FALSE(outer.passed());
}

TEST_CASE("cli: exit codes and output") {
    CHECK(run_cli("verify chebyshev --N 3").code == 0);
    CHECK(run_cli("verify confluence --algebra triangle").code == 0);
    CHECK(run_cli("verify hopf").code == 0);
    const Run red = run_cli("reduce --algebra bigon --ring cyclo:3 \"a[+,+]^3*a[-,-]^3 - a[+,-]^3*a[-,+]^3\"");
    CHECK(red.code == 0);
    CHECK(red.out == "1\n");
    const Run t3 = run_cli("reduce --algebra bigon --ring cyclo:3 \"T[3](a[+,+] + a[-,-])\"");
    CHECK(P(bigon(C3), t3.out) == P(bigon(C3), "a[+,+]^3 + a[-,-]^3"));
    CHECK(run_cli("reduce --algebra bigon \"a[+,+\"").code == 2);
    CHECK(run_cli("reduce --algebra nosuch \"1\"").code == 2);
    CHECK(run_cli("verify nosuch").code == 2);
    CHECK(run_cli("--bogus").code == 2);
}

TEST_CASE("cli: verify all is deterministic") {
    const Run a = run_cli("verify all --N 3 --json");
    const Run b = run_cli("verify all --N 3 --json");
    const std::regex duration("\"duration_ms\":\\s*[0-9.eE+-]+");
    CHECK(a.code == b.code);
    CHECK(std::regex_replace(a.out, duration, "") == std::regex_replace(b.out, duration, ""));
    CHECK(a.out.find("\"schema_version\"") != std::string::npos);
}
