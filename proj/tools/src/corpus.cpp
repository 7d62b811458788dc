#include "lpdo_cli/corpus.hpp"

#include "lpdo/lpdo.hpp"

namespace lpdo::cli {

namespace {

Lpdo P(const char *text) { return parse_operator(text); }

CorpusOutcome outcome(bool ok, std::string detail) { return {ok, std::move(detail)}; }

CorpusOutcome same_product(const std::vector<Lpdo> &a, const std::vector<Lpdo> &b) {
    const Lpdo pa = compose_all(a), pb = compose_all(b);
    if (pa == pb)
        return outcome(true, pa.to_string());
    return outcome(false, pa.to_string() + " != " + pb.to_string());
}

CorpusOutcome triple_middle(const Lpdo &L, const char *left, const char *right, const char *middle) {
    const Factorization f = construct_triple(L, P(left), P(right));
    const Lpdo expected = P(middle);
    if (f.factors.size() == 3 && f.factors[1] == expected && verify_factorization(L, f))
        return outcome(true, "middle " + f.factors[1].to_string());
    return outcome(false, "middle " + f.factors[1].to_string() + ", expected " + expected.to_string());
}

std::string holding_types(const Lpdo &L) {
    const InvariantSet inv = compute_invariants(normalize_form1(L));
    std::string out;
    for (const auto &rep : condition_sweep(inv))
        if (rep.holds)
            out += (out.empty() ? "" : " ") + rep.label;
    return out.empty() ? "none" : out;
}

CorpusOutcome types_exactly(const Lpdo &L, const std::string &expected) {
    const std::string got = holding_types(L);
    return outcome(got == expected, "holding: " + got);
}

std::vector<CorpusItem> build() {
    using namespace ops;
    std::vector<CorpusItem> items;

    items.push_back({"landau/expanded", "(Dx+1)(Dx+1)(Dx+xDy) and R(Dx+1) both expand to the Landau operator", [] {
                         const Lpdo L = P(landau);
                         const Lpdo a = compose_all(std::vector{P(landau_Q), P(landau_Q), P(landau_P)});
                         const Lpdo b = compose(P(landau_R), P(landau_Q));
                         return outcome(a == L && b == L, a.to_string());
                     }});
    items.push_back({"landau/right-division", "right division by Dx+1 is exact with quotient R", [] {
                         const DivisionResult d = right_divide(P(landau), P(landau_Q));
                         return outcome(d.exact() && d.quotient == P(landau_R), "quotient " + d.quotient.to_string());
                     }});
    items.push_back({"landau/no-XSX", "Dx+1 is a left factor but no (X)(S)(X) triple exists", [] {
                         const DivisionResult l = left_divide(P(landau), P(landau_Q));
                         if (!l.exact())
                             return outcome(false, "Dx+1 is not a left factor");
                         const DivisionResult r = right_divide(l.quotient, P(landau_Q));
                         return outcome(!r.exact(), "remainder " + r.remainder.to_string());
                     }});
    items.push_back({"landau/symbol", "symbol X^2(X + xY) has a repeated factor", [] {
                         const NormalForm nf = classify_normal_form(P(landau));
                         return outcome(nf.kind == NormalForm::Kind::Other && nf.repeated_factor, nf.pattern);
                     }});

    items.push_back({"example1/factorizations", "both factorizations give the same operator", [] {
                         return same_product({P(example1_left), P(example1_second)},
                                             {P(example1_alt_left), P(example1_right)});
                     }});
    items.push_back({"example1/triple", "outer factors Dx+Dy+x and Dy+y leave middle Dx+y^2", [] {
                         return triple_middle(compose(P(example1_left), P(example1_second)), example1_left,
                                              example1_right, example1_middle);
                     }});
    items.push_back({"example1/types", "(S)(XY), (S)(X)(Y) and (XS)(Y) hold", [] {
                         return types_exactly(compose(P(example1_left), P(example1_second)),
                                              "(S)(XY) (S)(X)(Y) (XS)(Y)");
                     }});

    items.push_back({"example2/factorizations", "both factorizations give the same operator", [] {
                         return same_product({P(example2_left), P(example1_second)},
                                             {P(example2_alt_left), P(example2_right)});
                     }});
    items.push_back({"example2/triple", "outer factors Dx+x and Dy+y leave middle Dx+y^2", [] {
                         return triple_middle(compose(P(example2_left), P(example1_second)), example2_left,
                                              example2_right, example2_middle);
                     }});

    items.push_back({"example3/factorizations", "both factorizations give the same operator", [] {
                         return same_product({P(example3_left), P(example3_second)},
                                             {P(example3_alt_left), P(example3_right)});
                     }});
    items.push_back({"example3/triple", "outer factors Dy+x and Dx+y-y^2 leave middle Dx+y^2", [] {
                         return triple_middle(compose(P(example3_left), P(example3_second)), example3_left,
                                              example3_right, example3_middle);
                     }});

    items.push_back({"a3/factorizations", "(Dx+Dy)(Dxy+x-y) and (Dxy+x-y)(Dx+Dy) both give A3", [] {
                         const Lpdo L = P(a3);
                         const Lpdo a = compose(P(a3_order1), P(a3_order2));
                         const Lpdo b = compose(P(a3_order2), P(a3_order1));
                         return outcome(a == L && b == L, L.to_string());
                     }});
    items.push_back({"a3/invariants", "invariants are (1, 0, 0, x-y, x-y, 0)", [] {
                         const InvariantSet inv = compute_invariants(normalize_form1(P(a3)));
                         const RatFunc d = parse_function("x - y");
                         const InvariantSet expected{RatFunc(1), RatFunc(0), RatFunc(0), d, d, RatFunc(0)};
                         return outcome(inv == expected, "I3 = " + inv.I3.to_string());
                     }});
    items.push_back({"a3/types", "only (S)(XY) and (XY)(S) hold", [] {
                         return types_exactly(P(a3), "(S)(XY) (XY)(S)");
                     }});

    items.push_back({"order4/factorizations", "both factorizations of the fourth-order operator agree", [] {
                         return same_product({P(order4_left), P(order4_inner)}, {P(order4_alt_left), P(order4_right)});
                     }});
    items.push_back({"order4/inner-form", "the third-order inner factor has symbol XY(X + Y)", [] {
                         const NormalForm nf = classify_normal_form(P(order4_inner));
                         return outcome(nf.kind == NormalForm::Kind::Form1 && nf.p == RatFunc(1) && nf.q == RatFunc(1),
                                        nf.pattern);
                     }});
    // The inner factor does split: (Dxx + Dxy - xDx + x - 1)(Dy + x).
    items.push_back({"order4/inner-types", "the inner factor factors as (XS)(Y) and has no other type", [] {
                         const Lpdo inner = P(order4_inner);
                         const Lpdo split = compose(P(order4_inner_quotient), P(order4_right));
                         const CorpusOutcome t = types_exactly(inner, "(XS)(Y)");
                         return outcome(split == inner && t.passed, t.detail);
                     }});

    items.push_back({"constant/reducible", "DxDy(Dx+Dy) is completely reducible by Dx, Dy, Dx+Dy", [] {
                         const ReducibilityVerdict v =
                             check_complete_reducibility(P(constant), {P("Dx"), P("Dy"), P("Dx + Dy")});
                         return outcome(v.status == ReducibilityVerdict::Status::CompletelyReducible,
                                        to_string(v.status));
                     }});
    items.push_back({"constant/lcm", "Dx, Dy alone do not cover the symbol", [] {
                         const ReducibilityVerdict v = check_complete_reducibility(P(constant), {P("Dx"), P("Dy")});
                         return outcome(v.status == ReducibilityVerdict::Status::NotByTheseFactors && !v.lcm_matches_symbol,
                                        "lcm " + v.lcm.to_string());
                     }});
    items.push_back({"constant/group-I", "group I conditions hold", [] {
                         const InvariantSet inv = compute_invariants(normalize_form1(P(constant)));
                         const ConditionReport r = group_conditions(inv, ReducibilityGroup::I);
                         return outcome(r.holds, r.label);
                     }});
    return items;
}

} // namespace

const std::vector<CorpusItem> &corpus() {
    static const std::vector<CorpusItem> items = build();
    return items;
}

} // namespace lpdo::cli
