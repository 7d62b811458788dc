#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lpdo/factorization.hpp"

namespace lpdo {

/// X^x Y^y S^s with S = X + qY. `q` is only meaningful when s > 0.
struct SymbolFactorPattern {
    unsigned x = 0;
    unsigned y = 0;
    unsigned s = 0;
    std::optional<RatFunc> q;

    unsigned degree() const noexcept { return x + y + s; }
    /// "XYS", "SX", "X^2", "1".
    std::string to_string() const;
    bool same_slots(const SymbolFactorPattern &o) const noexcept { return x == o.x && y == o.y && s == o.s; }
};

/// Slot-wise maximum. Throws PreconditionError when two patterns with an S
/// slot disagree on q.
SymbolFactorPattern symbol_lcm(const std::vector<SymbolFactorPattern> &patterns);

/// Pattern of Sym(F) relative to S = X + qY, up to a factor in K; nullopt if
/// Sym(F) is not a product of X, Y and S. F must have order 1 or 2.
std::optional<SymbolFactorPattern> symbol_pattern(const Lpdo &F, const RatFunc &q);

/// The eight right-factor symbol sets of the hyperbolic case that are not
/// ruled out by the triple-factorization theorem.
enum class ReducibilityGroup { I, IIa, IIb, IIc, IIIa, IIIb, IIIc, V };

inline constexpr std::array<ReducibilityGroup, 8> all_groups = {
    ReducibilityGroup::I,    ReducibilityGroup::IIa,  ReducibilityGroup::IIb,  ReducibilityGroup::IIc,
    ReducibilityGroup::IIIa, ReducibilityGroup::IIIb, ReducibilityGroup::IIIc, ReducibilityGroup::V};

/// "I", "II.a", …, "V".
std::string to_string(ReducibilityGroup g);
ReducibilityGroup parse_group(std::string_view name);
/// Right-factor symbols of the group, e.g. {"SX", "SY"} for II.a.
std::vector<std::string> group_symbols(ReducibilityGroup g);

enum class Irreducibility { Irreducible, Reducible, Unknown };
std::string to_string(Irreducibility i);

struct FactorCheck {
    Lpdo factor;
    /// Right division leaves no remainder.
    bool divides = false;
    std::optional<SymbolFactorPattern> pattern;
    Irreducibility irreducible = Irreducibility::Unknown;
    /// A splitting witness when the factor is reducible.
    std::optional<Factorization> split;
};

struct ReducibilityVerdict {
    enum class Status { CompletelyReducible, NotByTheseFactors, Unknown };

    Status status = Status::Unknown;
    std::vector<FactorCheck> factors;
    SymbolFactorPattern lcm;
    bool lcm_matches_symbol = false;
    std::optional<ReducibilityGroup> group;
    std::string reason;
};

std::string to_string(ReducibilityVerdict::Status s);

/// Certifies <L> = <L1> ∩ … ∩ <Lk> with irreducible Li from the supplied
/// right factors: every factor must divide L exactly, the lcm of their
/// symbol patterns must equal Sym(L) = XYS, and every factor must be
/// certified irreducible (first-order factors always are; coprime-symbol
/// second-order factors are when neither ordering splits; repeated-symbol
/// ones give Unknown).
///
/// L must be third order with symbol XY(pX + qY); it is normalized to p = 1
/// first. Identical factors (up to a factor in K) are merged. Throws
/// PreconditionError for factors of order 0 or > 2 and for two distinct
/// factors of the same symbol type.
ReducibilityVerdict check_complete_reducibility(const Lpdo &L, const std::vector<Lpdo> &factors);

/// Sufficient conditions for complete reducibility with the group's factor
/// symbols, for the class q = 1. Throws PreconditionError unless inv.q == 1.
ConditionReport group_conditions(const InvariantSet &inv, ReducibilityGroup g);

} // namespace lpdo
