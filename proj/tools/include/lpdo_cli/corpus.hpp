#pragma once

#include <functional>
#include <string>
#include <vector>

namespace lpdo::cli {

struct CorpusOutcome {
    bool passed = false;
    std::string detail;
};

/// One reproducible claim about a named operator.
struct CorpusItem {
    std::string name;
    std::string claim;
    std::function<CorpusOutcome()> check;
};

/// Landau operator, the three triple-factorization examples, A3, the
/// fourth-order operator and DxDy(Dx+Dy).
const std::vector<CorpusItem> &corpus();

namespace ops {
// Operator texts shared by the corpus and the tests.
inline constexpr const char *landau = "Dx^3 + x*Dx^2*Dy + 2*Dx^2 + (2*x+2)*Dx*Dy + Dx + (2+x)*Dy";
inline constexpr const char *landau_P = "Dx + x*Dy";
inline constexpr const char *landau_Q = "Dx + 1";
inline constexpr const char *landau_R = "Dxx + x*Dxy + Dx + (2+x)*Dy";

inline constexpr const char *example1_left = "Dx + Dy + x";
inline constexpr const char *example1_second = "Dx*Dy + y*Dx + y^2*Dy + y^3";
inline constexpr const char *example1_alt_left = "Dxx + Dxy + (x+y^2)*Dx + y^2*Dy + x*y^2 + 2*y";
inline constexpr const char *example1_right = "Dy + y";
inline constexpr const char *example1_middle = "Dx + y^2";

inline constexpr const char *example2_left = "Dx + x";
inline constexpr const char *example2_alt_left = "Dxx + (x+y^2)*Dx + x*y^2";
inline constexpr const char *example2_right = "Dy + y";
inline constexpr const char *example2_middle = "Dx + y^2";

inline constexpr const char *example3_left = "Dy + x";
inline constexpr const char *example3_second = "Dxx + y*Dx + y^3 - y^4";
inline constexpr const char *example3_alt_left = "Dxy + x*Dx + y^2*Dy + x*y^2 + 2*y";
inline constexpr const char *example3_right = "Dx + y - y^2";
inline constexpr const char *example3_middle = "Dx + y^2";

inline constexpr const char *a3 = "Dxxy + Dxyy + (x-y)*(Dx+Dy)";
inline constexpr const char *a3_order2 = "Dxy + x - y";
inline constexpr const char *a3_order1 = "Dx + Dy";

inline constexpr const char *order4_left = "Dx + Dy";
inline constexpr const char *order4_inner = "Dx*Dy*(Dx+Dy) + x*Dxx + (2-x^2)*Dx + x*Dy - 2*x + x^2";
inline constexpr const char *order4_alt_left =
    "Dx*(Dx+Dy)^2 - x*Dx*(Dx+Dy) + (x-2)*Dx + (x-1)*Dy + 1";
inline constexpr const char *order4_right = "Dy + x";
/// Right factor of the inner operator with quotient order4_inner_quotient.
inline constexpr const char *order4_inner_quotient = "Dxx + Dxy - x*Dx + x - 1";

inline constexpr const char *constant = "Dx*Dy*(Dx+Dy)";
} // namespace ops

} // namespace lpdo::cli
