#pragma once

// Deliberately broken inputs shared by the unit tests and the acceptance binary.

#include "skein/algebras.hpp"
#include "skein/errors.hpp"
#include "skein/format.hpp"
#include "skein/frobenius.hpp"
#include "skein/poisson.hpp"

namespace skein::controls {

/// Bigon with q replaced by q^2 in the rule a[-,-]a[+,+] -> 1 + q a[+,-]a[-,+].
inline PresentationPtr perturbed_bigon(Ring ring) {
    const auto b = bigon(ring);
    const Word lhs{bigon_letter(State::Minus, State::Minus), bigon_letter(State::Plus, State::Plus)};
    std::vector<RewriteRule> rules;
    bool found = false;
    for (const auto& r : b->rules()) {
        if (r.lhs != lhs) {
            rules.push_back(r);
            continue;
        }
        NCPoly rhs(ring);
        for (const auto& [w, c] : r.rhs.terms()) rhs.add_term(w, w.empty() ? c : c * b->omega_power(-4));
        rules.push_back({r.lhs, rhs});
        found = true;
    }
    if (!found) throw ConsistencyError("bigon has no rule a[-,-]a[+,+]");
    Presentation::Options opts = b->options();
    opts.check = false;
    return std::make_shared<Presentation>("bigon-perturbed", ring, b->alphabet(), std::move(rules), opts);
}

inline Report perturbed_rule_control() { return diamond_check(*perturbed_bigon(Ring::laurent())); }

/// Psi for the (-,+) bigon with the sign of the a[+,-] image flipped: it must break the relations
/// and the Poisson property.
inline Report wrong_psi_sign_control() {
    const Orientation o = parse_orientation("-,+", Surface::Bigon);
    const PsiMap psi = psi_transport(Surface::Bigon, o);
    AlgebraMorphism m = psi.morphism;
    const auto& src = m.source();
    const Letter flipped = src->letter(GeneratorId::with_states("a", State::Plus, State::Minus));
    m.set_image(flipped, -*m.image(flipped));
    Report rep = m.relation_check("mutated Psi");
    const BracketTable table = r_matrix_bracket(Surface::Bigon, o);
    for (Letter u = 0; u < src->letter_count(); ++u) {
        for (Letter v = 0; v < src->letter_count(); ++v) {
            const NCPoly lhs = m.apply(star_bracket(src->gen(u), src->gen(v), src));
            const NCPoly rhs = table.bracket(m.apply(src->gen(u)), m.apply(src->gen(v)));
            const NCPoly d = lhs - rhs;
            rep.add("{" + src->generator_name(u) + "," + src->generator_name(v) + "}", "Psi({u,v}) = {Psi u, Psi v}",
                    d.is_zero(), d.is_zero() ? "" : format_poly(*table.algebra(), d));
        }
    }
    return rep;
}

/// T_3(a++ + a--) = a++^3 + a--^3 with formal w.
inline Report formal_chebyshev_control() { return trace_identity_check(1, 3, Ring::laurent()); }

}  // namespace skein::controls
