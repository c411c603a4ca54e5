#include "skein/morphism.hpp"

#include "skein/errors.hpp"
#include "skein/format.hpp"

namespace skein {

AlgebraMorphism::AlgebraMorphism(PresentationPtr source, PresentationPtr target)
    : source_(std::move(source)), target_(std::move(target)), images_(source_->letter_count()) {}

void AlgebraMorphism::set_image(Letter l, NCPoly image) {
    if (l >= images_.size()) throw AlphabetError("morphism image for a letter outside the source alphabet");
    if (!(image.ring() == target_->ring())) throw RingMismatchError("morphism image lives in the wrong ring");
    images_[l] = target_->normal_form(image);
}

Scalar AlgebraMorphism::map_coeff(const Scalar& c) const {
    if (coeff_map_) return coeff_map_(c);
    if (!(c.ring() == target_->ring()))
        throw RingMismatchError("morphism needs a coefficient map from " + c.ring().name() + " to " +
                                target_->ring().name());
    return c;
}

NCPoly AlgebraMorphism::apply(const Word& w) const {
    NCPoly acc = target_->one();
    for (std::size_t i = 0; i < w.size(); ++i) {
        Letter l = anti_ ? w[w.size() - 1 - i] : w[i];
        if (l >= images_.size() || !images_[l])
            throw MorphismError("no image for generator " + source_->generator_name(l) + " of " + source_->name());
        acc = target_->multiply(acc, *images_[l]);
        if (acc.is_zero()) break;
    }
    return acc;
}

NCPoly AlgebraMorphism::apply(const NCPoly& p) const {
    NCPoly out(target_->ring());
    for (const auto& [w, c] : p.terms()) out.add_scaled(apply(w), map_coeff(c));
    return out;
}

Report AlgebraMorphism::relation_check(const std::string& suite) const {
    Report rep;
    rep.suite = suite;
    for (const auto& r : source_->rules()) {
        NCPoly img = apply(r.lhs) - apply(r.rhs);
        rep.add("rule " + source_->word_to_string(r.lhs), "relation maps to zero", img.is_zero(),
                img.is_zero() ? "" : format_poly(*target_, img));
    }
    return rep;
}

AlgebraMorphism::CoefficientMap rational_into(Ring target) {
    return [target](const Scalar& c) { return Scalar(target, c.rational_value()); };
}

}  // namespace skein
