#pragma once

#include <string>

#include "skein/ncpoly.hpp"

namespace skein {

/// Text form in the expression language: terms in descending term order, e.g. `(w^-4)*a[+,-]*a[-,+] + 1`.
std::string format_poly(const Presentation& p, const NCPoly& f);

/// JSON list of {"coeff": ..., "word": [...]}.
std::string format_poly_json(const Presentation& p, const NCPoly& f);

}  // namespace skein
