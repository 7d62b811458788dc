// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Everything is exact; there is no tolerance anywhere.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "lpdo/lpdo.hpp"
#include "lpdo_cli/corpus.hpp"
#include "support/random_ops.hpp"

using namespace lpdo;
using lpdo::testing::RandomOps;
namespace ops = lpdo::cli::ops;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

Lpdo P(const char *t) { return parse_operator(t); }
Lpdo Dx() { return Lpdo::dx(); }
Lpdo Dy() { return Lpdo::dy(); }
Lpdo C(const RatFunc &f) { return Lpdo(f); }

std::vector<std::string> holding(const InvariantSet &inv) {
    std::vector<std::string> out;
    for (const auto &r : condition_sweep(inv))
        if (r.holds)
            out.push_back(r.label);
    return out;
}

std::string join(const std::vector<std::string> &v) {
    std::string s;
    for (const auto &x : v)
        s += (s.empty() ? "" : ", ") + x;
    return s.empty() ? "none" : s;
}

Outcome c1() {
    const Lpdo L = P(ops::landau);
    const Lpdo Q = P(ops::landau_Q);
    const bool a = compose_all(std::vector{Q, Q, P(ops::landau_P)}) == L;
    const bool b = compose(P(ops::landau_R), Q) == L;
    const DivisionResult d = right_divide(L, Q);
    const bool c = d.exact() && d.quotient == P(ops::landau_R);
    return {a && b && c, "quotient " + d.quotient.to_string()};
}

Outcome c2() {
    const Lpdo L = P(ops::landau);
    const Lpdo Q = P(ops::landau_Q);
    const DivisionResult l = left_divide(L, Q);
    if (!l.exact())
        return {false, "Dx+1 is not a left factor"};
    const DivisionResult r = right_divide(l.quotient, Q);
    return {!r.exact(), "left quotient " + l.quotient.to_string() + ", right remainder " + r.remainder.to_string()};
}

Outcome c3() {
    struct Ex {
        const char *left, *second, *alt_left, *right, *middle;
    };
    const Ex exs[] = {
        {ops::example1_left, ops::example1_second, ops::example1_alt_left, ops::example1_right, ops::example1_middle},
        {ops::example2_left, ops::example1_second, ops::example2_alt_left, ops::example2_right, ops::example2_middle},
        {ops::example3_left, ops::example3_second, ops::example3_alt_left, ops::example3_right, ops::example3_middle},
    };
    std::string detail;
    bool ok = true;
    for (const auto &e : exs) {
        const Lpdo L = compose(P(e.left), P(e.second));
        const bool same = compose(P(e.alt_left), P(e.right)) == L;
        const Factorization f = construct_triple(L, P(e.left), P(e.right));
        const bool triple = f.factors[0] == P(e.left) && f.factors[1] == P(e.middle) && f.factors[2] == P(e.right) &&
                            verify_factorization(L, f);
        ok = ok && same && triple;
        detail += (detail.empty() ? "middles " : ", ") + f.factors[1].to_string();
    }
    return {ok, detail};
}

Outcome c4() {
    const Lpdo L = P(ops::a3);
    const InvariantSet inv = compute_invariants(normalize_form1(L));
    const RatFunc d = parse_function("x - y");
    const bool invs = inv == InvariantSet{RatFunc(1), RatFunc(0), RatFunc(0), d, d, RatFunc(0)};
    const auto h = holding(inv);
    const bool sweep = h == std::vector<std::string>{"(S)(XY)", "(XY)(S)"};
    const bool facts = compose(P(ops::a3_order1), P(ops::a3_order2)) == L &&
                       compose(P(ops::a3_order2), P(ops::a3_order1)) == L;
    return {invs && sweep && facts, "holding: " + join(h)};
}

Outcome c5() {
    const Lpdo L4 = compose(P(ops::order4_left), P(ops::order4_inner));
    const bool same = compose(P(ops::order4_alt_left), P(ops::order4_right)) == L4;
    const Lpdo inner = P(ops::order4_inner);
    const NormalForm nf = classify_normal_form(inner);
    const bool form = nf.kind == NormalForm::Kind::Form1 && nf.p == RatFunc(1) && nf.q == RatFunc(1);
    const auto h = holding(compute_invariants(normalize_form1(inner)));
    std::string detail = std::string("factorizations ") + (same ? "agree" : "differ") + ", form 1 with q=1 " +
                         (form ? "yes" : "no") + ", holding: " + join(h);
    if (!h.empty()) {
        const Lpdo split = compose(P(ops::order4_inner_quotient), P(ops::order4_right));
        if (split == inner)
            detail += "; witness: inner = (" + split.to_string() + ") is (" +
                      P(ops::order4_inner_quotient).to_string() + ")*(" + P(ops::order4_right).to_string() + ")";
    }
    return {same && form && h.empty(), detail};
}

Outcome c6() {
    RandomOps r(6);
    int ops_checked = 0, gauges = 0;
    for (int n = 0; n < 100; ++n) {
        const RatFunc q(r.nonzero_poly(2, 0.4));
        const Lpdo L = r.form1(q, 2);
        const InvariantSet base = compute_invariants(L);
        for (int k = 0; k < 5; ++k) {
            const RatFunc g(r.nonzero_poly(2, 0.5));
            if (!(compute_invariants(gauge(L, g)) == base))
                return {false, "mismatch for L = " + L.to_string() + ", g = " + g.to_string()};
            ++gauges;
        }
        ++ops_checked;
    }
    return {true, std::to_string(ops_checked) + " operators, " + std::to_string(gauges) + " gauges"};
}

Outcome c7() {
    RandomOps r(7);
    for (int n = 0; n < 100; ++n) {
        const Lpdo A = r.rat_op(r.integer(1, 2)), B = r.rat_op(r.integer(1, 2)), E = r.rat_op(r.integer(0, 2));
        if (!(symbol(compose(A, B)) == symbol(A) * symbol(B)))
            return {false, "symbol not multiplicative for " + A.to_string() + " and " + B.to_string()};
        if (!(compose(compose(A, B), E) == compose(A, compose(B, E))))
            return {false, "associativity fails"};
    }
    return {true, "100 pairs and 100 triples"};
}

Outcome c8() {
    RandomOps r(8);
    for (int n = 0; n < 100; ++n) {
        const Lpdo Q = r.rat_op(r.integer(0, 2));
        const Lpdo F = r.rat_op(1);
        const DivisionResult rd = right_divide(compose(Q, F), F);
        const DivisionResult ld = left_divide(compose(F, Q), F);
        if (!(rd.exact() && rd.quotient == Q && ld.exact() && ld.quotient == Q))
            return {false, "round trip fails for Q = " + Q.to_string() + ", F = " + F.to_string()};
    }
    return {true, "100 random (Q, F)"};
}

Outcome c9() {
    RandomOps r(9);
    for (int n = 0; n < 50; ++n) {
        std::vector<Lpdo> base{Dx(), Dy(), Dx() + Dy()};
        std::shuffle(base.begin(), base.end(), r.engine());
        std::vector<Lpdo> f;
        for (const auto &b : base)
            f.push_back(b + C(RatFunc(r.poly(2))));
        const Lpdo L = compose_all(f);
        const Factorization got = construct_triple(L, f[0], f[2]);
        if (got.factors != f)
            return {false, "reconstruction differs for " + L.to_string()};
    }
    return {true, "50 triples"};
}

Outcome c10() {
    RandomOps r(10);
    int successes = 0;
    for (int n = 0; n < 120; ++n) {
        const RatFunc a(r.poly(2)), b(r.poly(2));
        const RatFunc c = n % 2 ? RatFunc(r.poly(2)) : partial(a, Var::x) + a * b;
        const Lpdo L = Lpdo::term(RatFunc(1), {1, 1}) + a * Dx() + b * Dy() + C(c);
        const bool laplace = (c - partial(a, Var::x) - a * b).is_zero();
        const auto f = solve_order2_coprime(L, LinearForm::X(), LinearForm::Y());
        if (f.has_value() != laplace)
            return {false, "solver disagrees with c - a_x - ab for " + L.to_string()};
        if (f) {
            ++successes;
            if (!(f->factors == std::vector<Lpdo>{Dx() + C(b), Dy() + C(a)}))
                return {false, "unexpected factors for " + L.to_string()};
        }
    }
    return {successes > 0, "120 operators, " + std::to_string(successes) + " factorizable"};
}

Outcome c11() {
    const Lpdo L = P(ops::constant);
    const ReducibilityVerdict full = check_complete_reducibility(L, {Dx(), Dy(), Dx() + Dy()});
    const ConditionReport g = group_conditions(compute_invariants(normalize_form1(L)), ReducibilityGroup::I);
    const ReducibilityVerdict part = check_complete_reducibility(L, {Dx(), Dy()});
    const bool ok = full.status == ReducibilityVerdict::Status::CompletelyReducible && g.holds &&
                    !part.lcm_matches_symbol && part.status == ReducibilityVerdict::Status::NotByTheseFactors;
    return {ok, to_string(full.status) + "; group I " + (g.holds ? "holds" : "fails") + "; [Dx, Dy]: " +
                    to_string(part.status)};
}

// A factor whose symbol is the given product of X, Y and S = X + qY.
Lpdo factor_with_symbol(RandomOps &r, const std::string &pattern, const RatFunc &q) {
    Lpdo F(1);
    for (char c : pattern)
        F = compose(F, c == 'X' ? Dx() : c == 'Y' ? Dy() : Dx() + q * Dy());
    const unsigned ord = static_cast<unsigned>(pattern.size());
    for (unsigned t = 0; t < ord; ++t)
        for (unsigned i = 0; i <= t; ++i)
            F += Lpdo::term(RatFunc(r.poly(1, 0.6)), {i, t - i});
    return F;
}

Outcome c12() {
    RandomOps r(12);
    const std::vector<RatFunc> qs{RatFunc(1), RatFunc(2), parse_function("x + 1"), parse_function("y + 1")};
    int n = 0;
    for (int round = 0; round < 2; ++round) {
        for (FactType t : all_fact_types) {
            const RatFunc &q = qs[(n++) % qs.size()];
            std::vector<Lpdo> factors;
            for (const auto &p : factor_patterns(t))
                factors.push_back(factor_with_symbol(r, p, q));
            const Lpdo L = compose_all(factors);
            if (!condition_residuals(compute_invariants(normalize_form1(L)), t).holds)
                return {false, to_string(t) + " fails on its own product " + L.to_string()};
            const Lpdo Lp = L + C(parse_function("x*y"));
            if (condition_residuals(compute_invariants(normalize_form1(Lp)), t).holds)
                return {false, to_string(t) + " survives the x*y perturbation of " + L.to_string()};
        }
    }
    return {true, std::to_string(n) + " products, every perturbation detected"};
}

} // namespace

int main() {
    const std::vector<std::pair<const char *, std::function<Outcome()>>> criteria{
        {"Landau identity and right division", c1},
        {"Landau has no (X)(S)(X) triple", c2},
        {"Examples 1-3: factorizations and middle factors", c3},
        {"A3: invariants, type sweep, factorizations", c4},
        {"fourth-order operator: inner factor has no factorization type", c5},
        {"gauge invariance of q, I1..I5", c6},
        {"symbol multiplicativity and associativity", c7},
        {"division round trips", c8},
        {"triple reconstruction", c9},
        {"order-2 solver vs Laplace invariant", c10},
        {"complete reducibility of DxDy(Dx+Dy)", c11},
        {"type conditions vs x*y perturbation", c12},
    };
    int failed = 0, index = 0;
    for (const auto &[name, fn] : criteria) {
        ++index;
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        if (!o.pass)
            ++failed;
        std::printf("criterion %2d: %s  %s (%.0f ms)\n    %s\n", index, o.pass ? "PASS" : "FAIL", name, ms,
                    o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", index - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
