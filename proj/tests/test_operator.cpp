#include <doctest.h>

#include "lpdo/lpdo.hpp"

using namespace lpdo;

namespace {
Lpdo P(const char *t) { return parse_operator(t); }
RatFunc F(const char *t) { return parse_function(t); }
} // namespace

TEST_SUITE("operator") {

TEST_CASE("composition applies Leibniz") {
    CHECK(compose(Lpdo::dx(), Lpdo(F("x"))) == P("x*Dx + 1"));
    CHECK(compose(P("Dx^2"), Lpdo(F("x^2"))) == P("x^2*Dx^2 + 4*x*Dx + 2"));
    CHECK(compose(P("Dx*Dy"), Lpdo(F("x*y"))) == P("x*y*Dx*Dy + x*Dx + y*Dy + 1"));
    CHECK(compose(Lpdo(F("x")), Lpdo::dx()) == P("x*Dx"));
    CHECK(compose(Lpdo::dx(), Lpdo::dy()) == compose(Lpdo::dy(), Lpdo::dx()));
}

TEST_CASE("Landau operator") {
    const Lpdo L = P("Dx^3 + x*Dx^2*Dy + 2*Dx^2 + (2*x+2)*Dx*Dy + Dx + (2+x)*Dy");
    CHECK(L.to_string() == "Dx^3 + x*Dx^2*Dy + 2*Dx^2 + (2*x + 2)*Dx*Dy + Dx + (x + 2)*Dy");
    CHECK(L == compose_all(std::vector{P("Dx + 1"), P("Dx + 1"), P("Dx + x*Dy")}));
    CHECK(L == compose(P("Dxx + x*Dxy + Dx + (2+x)*Dy"), P("Dx + 1")));
    CHECK(L.order() == 3u);
    CHECK(L.layer(2) == P("2*Dx^2 + (2*x + 2)*Dx*Dy"));
}

TEST_CASE("Example 1 expansion") {
    const Lpdo L = compose(P("Dx + Dy + x"), P("Dx*Dy + y*Dx + y^2*Dy + y^3"));
    CHECK(L.to_string() == "Dx^2*Dy + Dx*Dy^2 + y*Dx^2 + (y^2 + x + y)*Dx*Dy + y^2*Dy^2 + (y^3 + x*y + 1)*Dx + "
                           "(x*y^2 + y^3 + 2*y)*Dy + x*y^3 + 3*y^2");
}

TEST_CASE("printing signs") {
    CHECK(P("Dx - x*Dy - 1").to_string() == "Dx - x*Dy - 1");
    CHECK(P("-Dx + (1/y)*Dy").to_string() == "-Dx + (1/y)*Dy");
    CHECK(P("Dy + y^3 - y^4").to_string() == "Dy - y^4 + y^3");
    CHECK(P("(x - 1)/(x*y)").to_string() == "(x - 1)/(x*y)");
    CHECK(Lpdo().to_string() == "0");
    CHECK_FALSE(Lpdo().order().has_value());
}

TEST_CASE("symbol") {
    CHECK(symbol(P("Dx^3 + x*Dx^2*Dy + 2*Dx^2")).to_string() == "X^3 + x*X^2*Y");
    CHECK(symbol(P("Dx + Dy + x")) == LinearForm(RatFunc(1), RatFunc(1)).to_symbol());
    const SymbolForm s = symbol(compose(P("Dx + x*Dy"), P("y*Dx - Dy")));
    CHECK(s == symbol(P("Dx + x*Dy")) * symbol(P("y*Dx - Dy")));
    CHECK_THROWS_AS(symbol(Lpdo()), PreconditionError);
}

TEST_CASE("binary form division") {
    const SymbolForm t = symbol(P("Dx^2*Dy + Dx*Dy^2"));
    const FormDivision d = divide_forms(t, symbol(P("Dx + Dy")));
    CHECK(d.remainder.is_zero());
    CHECK(d.quotient == symbol(P("Dx*Dy")));
    CHECK_FALSE(divide_forms(t, symbol(P("Dx - Dy"))).remainder.is_zero());
}

TEST_CASE("gauge") {
    const Lpdo L = P("Dx*Dy + y*Dx");
    const RatFunc g = F("x*y");
    const Lpdo G = gauge(L, g);
    CHECK(G == compose_all(std::vector{Lpdo(g.inverse()), L, Lpdo(g)}));
    CHECK(gauge(G, g.inverse()) == L);
    CHECK(symbol(G) == symbol(L));
    CHECK_THROWS_AS(gauge(L, RatFunc(0)), PreconditionError);
}

TEST_CASE("swap") {
    CHECK(swap_xy(P("x*Dx^2 + y^2*Dy")) == P("y*Dy^2 + x^2*Dx"));
}

}
