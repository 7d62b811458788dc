#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lpdo/invariants.hpp"
#include "lpdo/symbol.hpp"

namespace lpdo {

/// The twelve factorization types of an operator with symbol XY·S,
/// S = X + qY. Factors are listed left to right.
enum class FactType {
    S_XY,   // (S)(XY)
    S_X_Y,  // (S)(X)(Y)
    S_Y_X,  // (S)(Y)(X)
    X_SY,   // (X)(SY)
    X_S_Y,  // (X)(S)(Y)
    X_Y_S,  // (X)(Y)(S)
    XY_S,   // (XY)(S)
    YS_X,   // (YS)(X)
    XS_Y,   // (XS)(Y)
    Y_SX,   // (Y)(SX)
    Y_X_S,  // (Y)(X)(S)
    Y_S_X,  // (Y)(S)(X)
};

inline constexpr std::array<FactType, 12> all_fact_types = {
    FactType::S_XY, FactType::S_X_Y, FactType::S_Y_X, FactType::X_SY, FactType::X_S_Y, FactType::X_Y_S,
    FactType::XY_S, FactType::YS_X,  FactType::XS_Y,  FactType::Y_SX, FactType::Y_X_S, FactType::Y_S_X};

/// "(S)(XY)" etc.
std::string to_string(FactType t);

/// Accepts the printed names; letters inside one group may come in any
/// order, so "(SX)" and "(XS)" denote the same factor. Throws
/// PreconditionError for anything that is not one of the twelve types.
FactType parse_fact_type(std::string_view name);

/// Factor symbols left to right, e.g. {"S", "XY"}; letters sorted X, Y, S.
std::vector<std::string> factor_patterns(FactType t);

struct Residual {
    std::string name;
    RatFunc value;
};

/// Verdict of an invariant condition set: holds iff every residual is zero.
struct ConditionReport {
    std::string label;
    std::vector<Residual> residuals;
    bool holds = false;
};

/// Evaluates the condition set for `t` on the invariants of a p = 1 form-1
/// operator. holds ⟺ the gauge class admits a factorization of type t.
ConditionReport condition_residuals(const InvariantSet &inv, FactType t);

/// All twelve reports in all_fact_types order.
std::vector<ConditionReport> condition_sweep(const InvariantSet &inv);

struct Factorization {
    std::vector<Lpdo> factors;

    Lpdo product() const { return compose_all(factors); }
};

/// Composes the factors left to right and compares with L exactly.
bool verify_factorization(const Lpdo &L, const Factorization &fac);

/// The unique factorization L = (s1 + g)∘(s2 + f) of a second-order L with
/// Sym(L) = s1·s2, s1 and s2 not proportional. The order-one equations fix
/// f and g through a 2×2 linear system; the result exists iff the remaining
/// order-zero equation holds. Throws PreconditionError on symbol mismatch or
/// proportional forms.
std::optional<Factorization> solve_order2_coprime(const Lpdo &L, const LinearForm &s1, const LinearForm &s2);

/// Given a third-order L with left factor F1 and right factor F2 whose
/// symbols are coprime, returns [F1, T, F2] with L = F1∘T∘F2. The outer
/// factors are returned verbatim.
///
/// Throws PreconditionError if F1 is not a left factor, F2 is not a right
/// factor, either is not first order, or their symbols are proportional.
/// Throws InconsistencyError if the middle division leaves a remainder,
/// which would contradict the triple-factorization theorem.
Factorization construct_triple(const Lpdo &L, const Lpdo &F1, const Lpdo &F2);

} // namespace lpdo
