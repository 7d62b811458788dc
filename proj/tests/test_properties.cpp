// Randomized identities with fixed seeds.

#include <doctest.h>

#include "lpdo/lpdo.hpp"
#include "support/random_ops.hpp"

using namespace lpdo;
using lpdo::testing::RandomOps;

TEST_SUITE("properties") {

TEST_CASE("field axioms") {
    RandomOps r(101);
    for (int n = 0; n < 60; ++n) {
        const RatFunc a = r.ratfunc(), b = r.ratfunc(), c = r.ratfunc();
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == RatFunc(0));
        if (!a.is_zero())
            CHECK(a * a.inverse() == RatFunc(1));
    }
}

TEST_CASE("derivations") {
    RandomOps r(102);
    for (int n = 0; n < 60; ++n) {
        const RatFunc a = r.ratfunc(), b = r.ratfunc();
        for (Var v : {Var::x, Var::y}) {
            CHECK(partial(a * b, v) == partial(a, v) * b + a * partial(b, v));
            CHECK(partial(a + b, v) == partial(a, v) + partial(b, v));
        }
        CHECK(partial(partial(a, Var::x), Var::y) == partial(partial(a, Var::y), Var::x));
    }
}

TEST_CASE("polynomial gcd divides both arguments") {
    RandomOps r(103);
    for (int n = 0; n < 40; ++n) {
        const BivarPoly common = r.nonzero_poly(2), a = r.nonzero_poly(2) * common, b = r.nonzero_poly(2) * common;
        const BivarPoly g = gcd(a, b);
        CHECK(BivarPoly::divide_exact(a, g).has_value());
        CHECK(BivarPoly::divide_exact(b, g).has_value());
        CHECK(BivarPoly::divide_exact(g, common.primitive()).has_value());
    }
}

TEST_CASE("Leibniz rule for composition") {
    RandomOps r(104);
    for (int n = 0; n < 40; ++n) {
        const RatFunc f = r.ratfunc();
        CHECK(compose(Lpdo::dx(), Lpdo(f)) == f * Lpdo::dx() + Lpdo(partial(f, Var::x)));
        CHECK(compose(Lpdo::dy(), Lpdo(f)) == f * Lpdo::dy() + Lpdo(partial(f, Var::y)));
    }
}

TEST_CASE("ring properties") {
    RandomOps r(105);
    for (int n = 0; n < 40; ++n) {
        const Lpdo A = r.rat_op(r.integer(0, 2)), B = r.rat_op(r.integer(0, 2)), C = r.rat_op(r.integer(0, 2));
        CHECK(compose(compose(A, B), C) == compose(A, compose(B, C)));
        CHECK(compose(A, B + C) == compose(A, B) + compose(A, C));
        CHECK(compose(A + B, C) == compose(A, C) + compose(B, C));
        CHECK(symbol(compose(A, B)) == symbol(A) * symbol(B));
    }
}

TEST_CASE("gauge is a ring homomorphism") {
    RandomOps r(106);
    for (int n = 0; n < 30; ++n) {
        const Lpdo A = r.rat_op(r.integer(1, 2)), B = r.poly_op(r.integer(1, 2), 1);
        const RatFunc g = r.nonzero_ratfunc(1);
        CHECK(gauge(compose(A, B), g) == compose(gauge(A, g), gauge(B, g)));
        CHECK(gauge(A + B, g) == gauge(A, g) + gauge(B, g));
        CHECK(symbol(gauge(A, g)) == symbol(A));
    }
}

TEST_CASE("division round trips") {
    RandomOps r(107);
    for (int n = 0; n < 40; ++n) {
        const Lpdo Q = r.rat_op(r.integer(0, 2)), F = r.rat_op(1), R = r.rat_op(r.integer(0, 2));
        const DivisionResult d = right_divide(compose(Q, F), F);
        CHECK(d.exact());
        CHECK(d.quotient == Q);
        const DivisionResult e = left_divide(compose(F, Q), F);
        CHECK(e.exact());
        CHECK(e.quotient == Q);
        const DivisionResult g = right_divide(R, F);
        CHECK(compose(g.quotient, F) + g.remainder == R);
    }
}

TEST_CASE("factorization types transport along gauges") {
    RandomOps r(108);
    const std::vector<RatFunc> qs{RatFunc(1), RatFunc(-3), parse_function("x + 1"), parse_function("x*y + 1"),
                                  parse_function("x^2 - y + 3")};
    int n = 0;
    for (FactType t : all_fact_types) {
        const RatFunc &q = qs[(n++) % qs.size()];
        std::vector<Lpdo> factors;
        for (const auto &p : factor_patterns(t)) {
            Lpdo F(1);
            for (char c : p)
                F = compose(F, c == 'X' ? Lpdo::dx() : c == 'Y' ? Lpdo::dy() : Lpdo::dx() + q * Lpdo::dy());
            for (unsigned k = 0; k < p.size(); ++k)
                for (unsigned i = 0; i <= k; ++i)
                    F += Lpdo::term(RatFunc(r.poly(1, 0.6)), {i, k - i});
            factors.push_back(F);
        }
        const Lpdo L = compose_all(factors);
        const InvariantSet inv = compute_invariants(L);
        CHECK_MESSAGE(condition_residuals(inv, t).holds, to_string(t));
        // a gauge keeps the class and transports each factor
        const RatFunc g = r.nonzero_ratfunc(1);
        CHECK(compute_invariants(gauge(L, g)) == inv);
        std::vector<Lpdo> moved;
        for (const auto &F : factors)
            moved.push_back(gauge(F, g));
        CHECK(compose_all(moved) == gauge(L, g));
    }
}

TEST_CASE("print and parse") {
    RandomOps r(109);
    for (int n = 0; n < 60; ++n) {
        const Lpdo L = r.rat_op(r.integer(0, 3), 2);
        CHECK(parse_operator(L.to_string()) == L);
        CHECK(L.to_string() == Lpdo(L).to_string());
    }
}

}
