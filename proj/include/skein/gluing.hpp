#pragma once

#include <string>
#include <vector>

#include "skein/poisson.hpp"

namespace skein {

enum class ScenarioKind { Square, Disc };
ScenarioKind parse_scenario(std::string_view s);
const char* scenario_name(ScenarioKind k);

/// Square: two triangles, edge b of the first glued to edge c of the second.
/// Disc: one triangle with its edges a and b glued to each other.
struct GluingScenario {
    ScenarioKind kind;
    PresentationPtr algebra;  // T (x) T or T
    PresentationPtr target;   // B (x) algebra
    AlgebraMorphism left;     // Delta^L at the glued edge that sees the bigon on its left
    AlgebraMorphism right;    // sigma o Delta^R at the other glued edge
    std::vector<unsigned> seam_degree;  // per letter of `algebra`: endpoints on glued edges
};

GluingScenario make_scenario(ScenarioKind kind, Ring ring, bool at_one = false);

/// Delta^L(x) - sigma Delta^R(x), reduced.
NCPoly coaction_defect(const GluingScenario& s, const NCPoly& x);
bool is_in_kernel(const GluingScenario& s, const NCPoly& x);
/// Sum of seam degrees of the letters of w.
unsigned filtration_degree(const GluingScenario& s, const Word& w);

/// Square: abar[e,e'] (arc through the seam), b[e,e']@0 and g[e,e']@1 (arcs away from it).
/// Disc: eta (the curve around the puncture), delta[e,e'] (arc across the glued edge).
std::vector<std::string> catalog_names(ScenarioKind kind);
/// Throws std::invalid_argument for an unknown name.
NCPoly glued_element(const GluingScenario& s, const std::string& name);

struct KernelResult {
    std::size_t domain_dimension = 0;  // normal words with seam degree <= d and length <= max_length
    std::size_t rank = 0;              // rank of the defect map on that span
    std::vector<NCPoly> basis;         // kernel basis in reduced echelon form
};

/// Kernel of the defect map on normal words of seam degree <= degree and length <= max_length.
/// Needs a field ring. Throws PresentationError when the span exceeds `cap` words.
KernelResult truncated_kernel_solve(const GluingScenario& s, unsigned degree, unsigned max_length = 2,
                                    std::size_t cap = 20000);
/// x lies in the span of `basis` (exact elimination).
bool in_span(const std::vector<NCPoly>& basis, const NCPoly& x);

/// Catalogued elements have zero defect, products of pairs too.
Report gluing_catalog_check(ScenarioKind kind, Ring ring);
/// Degree-d kernel over the field contains the catalogued elements of that degree and omits a++@0 (square).
Report kernel_check(ScenarioKind kind, Ring ring, unsigned degree, unsigned max_length = 2);
/// N-th power identities for the glued generators, the disc curve via T_N, and kernel stability of the images.
Report frobenius_glued_check(int N, Ring ring);
/// In the square: star bracket in T (x) T agrees with the factorwise bracket on glued generators,
/// and brackets of glued elements stay glued.
Report poisson_gluing_check();

}  // namespace skein
