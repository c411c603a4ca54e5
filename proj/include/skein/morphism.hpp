#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "skein/ncpoly.hpp"

namespace skein {

/// Generator-image map between presentations, extended linearly and multiplicatively
/// (anti-multiplicatively when `anti` is set), followed by normal_form in the target.
class AlgebraMorphism {
public:
    using CoefficientMap = std::function<Scalar(const Scalar&)>;

    AlgebraMorphism(PresentationPtr source, PresentationPtr target);

    const PresentationPtr& source() const { return source_; }
    const PresentationPtr& target() const { return target_; }

    void set_image(Letter l, NCPoly image);
    const std::optional<NCPoly>& image(Letter l) const { return images_.at(l); }
    void set_anti(bool anti) { anti_ = anti; }
    bool anti() const { return anti_; }
    /// Needed when source and target rings differ (e.g. rational constants into a cyclotomic ring).
    void set_coefficient_map(CoefficientMap f) { coeff_map_ = std::move(f); }

    NCPoly apply(const NCPoly& p) const;
    NCPoly apply(const Word& w) const;

    /// Image of (lhs - rhs) for every rule of the source; all zero iff the map is well defined.
    Report relation_check(const std::string& suite) const;

private:
    Scalar map_coeff(const Scalar& c) const;

    PresentationPtr source_;
    PresentationPtr target_;
    std::vector<std::optional<NCPoly>> images_;
    bool anti_ = false;
    CoefficientMap coeff_map_;
};

/// Coefficient map sending a rational constant to the same constant in `target`.
AlgebraMorphism::CoefficientMap rational_into(Ring target);

}  // namespace skein
