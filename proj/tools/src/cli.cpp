#include "lpdo_cli/cli.hpp"

#include <algorithm>
#include <sstream>

#include <CLI11.hpp>

#include "lpdo/lpdo.hpp"
#include "lpdo_cli/corpus.hpp"

namespace lpdo::cli {

using nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Invocation {
    std::string command;
    std::vector<std::string> operands;
    std::string left, right, g, type, group;
    std::function<std::string()> read_stdin;
};

std::string trim(std::string s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

// The operator operand: first positional argument, else stdin.
std::string operator_text(const Invocation &inv) {
    if (!inv.operands.empty())
        return inv.operands.front();
    if (inv.read_stdin) {
        std::string s = trim(inv.read_stdin());
        if (!s.empty())
            return s;
    }
    throw UsageError("missing operator expression (argument or stdin)");
}

void expect_operands(const Invocation &inv, std::size_t max) {
    if (inv.operands.size() > max)
        throw UsageError("too many operands for '" + inv.command + "'");
}

std::string str(const RatFunc &f) { return f.to_string(); }
std::string str(const Lpdo &L) { return L.to_string(); }

ordered_json invariants_json(const InvariantSet &s) {
    ordered_json j;
    j["q"] = str(s.q);
    j["I1"] = str(s.I1);
    j["I2"] = str(s.I2);
    j["I3"] = str(s.I3);
    j["I4"] = str(s.I4);
    j["I5"] = str(s.I5);
    return j;
}

ordered_json residuals_json(const ConditionReport &r) {
    ordered_json arr = ordered_json::array();
    for (const auto &res : r.residuals)
        arr.push_back({{"name", res.name}, {"value", str(res.value)}});
    return arr;
}

ordered_json factors_json(const Factorization &f) {
    ordered_json arr = ordered_json::array();
    for (const auto &F : f.factors)
        arr.push_back(str(F));
    return arr;
}

struct Prepared {
    Lpdo L;
    Lpdo normalized;
    InvariantSet inv;
};

Prepared prepare_form1(const std::string &text) {
    Prepared p{parse_operator(text), {}, {}};
    p.normalized = normalize_form1(p.L);
    p.inv = compute_invariants(p.normalized);
    return p;
}

void cmd_echo(const Invocation &inv, Report &r) {
    expect_operands(inv, 1);
    const std::string text = operator_text(inv);
    const Lpdo L = parse_operator(text);
    r.document["input"] = text;
    r.document["normalized_operator"] = str(L);
    ordered_json res;
    res["operator"] = str(L);
    if (auto o = L.order())
        res["order"] = *o;
    else
        res["order"] = nullptr;
    r.document["result"] = res;
}

void cmd_compose(const Invocation &inv, Report &r) {
    if (inv.operands.empty())
        throw UsageError("compose needs at least one operator");
    std::vector<Lpdo> factors;
    ordered_json input = ordered_json::array();
    for (const auto &t : inv.operands) {
        factors.push_back(parse_operator(t));
        input.push_back(t);
    }
    const Lpdo P = compose_all(factors);
    r.document["input"] = input;
    r.document["normalized_operator"] = str(P);
    r.document["result"] = {{"operator", str(P)}};
}

void cmd_symbol(const Invocation &inv, Report &r) {
    expect_operands(inv, 1);
    const std::string text = operator_text(inv);
    const Lpdo L = parse_operator(text);
    r.document["input"] = text;
    r.document["normalized_operator"] = str(L);
    ordered_json res;
    res["symbol"] = symbol(L).to_string();
    if (L.order() == 3u) {
        const NormalForm nf = classify_normal_form(L);
        ordered_json j;
        j["kind"] = to_string(nf.kind);
        j["pattern"] = nf.pattern;
        if (nf.kind == NormalForm::Kind::Form1) {
            j["p"] = str(nf.p);
            j["q"] = str(nf.q);
        }
        j["swapped"] = nf.swapped;
        j["repeated_factor"] = nf.repeated_factor;
        res["normal_form"] = j;
    }
    r.document["result"] = res;
}

void cmd_invariants(const Invocation &inv, Report &r) {
    expect_operands(inv, 1);
    const std::string text = operator_text(inv);
    const Prepared p = prepare_form1(text);
    r.document["input"] = text;
    r.document["normalized_operator"] = str(p.normalized);
    r.document["result"] = invariants_json(p.inv);
}

void cmd_gauge(const Invocation &inv, Report &r) {
    expect_operands(inv, 1);
    if (inv.g.empty())
        throw UsageError("gauge needs --g");
    const std::string text = operator_text(inv);
    const Lpdo L = parse_operator(text);
    const RatFunc g = parse_function(inv.g);
    const Lpdo G = gauge(L, g);
    r.document["input"] = text;
    r.document["normalized_operator"] = str(L);
    r.document["result"] = {{"g", str(g)}, {"operator", str(G)}};
}

void cmd_divide(const Invocation &inv, Report &r, bool left) {
    expect_operands(inv, 2);
    const std::string &flag = left ? inv.left : inv.right;
    std::string divisor;
    if (!flag.empty()) {
        expect_operands(inv, 1);
        divisor = flag;
    } else if (inv.operands.size() == 2) {
        divisor = inv.operands[1];
    } else {
        throw UsageError(std::string("missing divisor (") + (left ? "--left" : "--right") + " or second operand)");
    }
    const std::string text = operator_text(inv);
    const Lpdo L = parse_operator(text);
    const Lpdo F = parse_operator(divisor);
    const DivisionResult d = left ? left_divide_layered(L, F) : right_divide_layered(L, F);
    r.document["input"] = text;
    r.document["normalized_operator"] = str(L);
    r.document["result"] = {{"divisor", str(F)}, {"quotient", str(d.quotient)}, {"remainder", str(d.remainder)}};
    r.document["verdict"] = {{"exact", d.exact()}};
    r.exit_code = d.exact() ? kSuccess : kCheckFailed;
}

void cmd_types(const Invocation &inv, Report &r) {
    expect_operands(inv, 1);
    const std::string text = operator_text(inv);
    const Prepared p = prepare_form1(text);
    r.document["input"] = text;
    r.document["normalized_operator"] = str(p.normalized);

    std::vector<ConditionReport> reports;
    if (!inv.type.empty())
        reports.push_back(condition_residuals(p.inv, parse_fact_type(inv.type)));
    else
        reports = condition_sweep(p.inv);

    ordered_json result = ordered_json::array(), residuals = ordered_json::object(),
                 holding = ordered_json::array();
    for (const auto &rep : reports) {
        result.push_back({{"type", rep.label}, {"holds", rep.holds}});
        residuals[rep.label] = residuals_json(rep);
        if (rep.holds)
            holding.push_back(rep.label);
    }
    r.document["result"] = result;
    r.document["residuals"] = residuals;
    r.document["verdict"] = {{"invariants", invariants_json(p.inv)}, {"holding", holding}};
    if (!inv.type.empty() && !reports.front().holds)
        r.exit_code = kCheckFailed;
}

void cmd_triple(const Invocation &inv, Report &r) {
    expect_operands(inv, 1);
    if (inv.left.empty() || inv.right.empty())
        throw UsageError("triple needs --left and --right");
    const std::string text = operator_text(inv);
    const Lpdo L = parse_operator(text);
    const Factorization f = construct_triple(L, parse_operator(inv.left), parse_operator(inv.right));
    r.document["input"] = text;
    r.document["normalized_operator"] = str(L);
    r.document["result"] = {{"factors", factors_json(f)}, {"middle", str(f.factors[1])}};
    r.document["verdict"] = {{"verified", verify_factorization(L, f)}};
}

void cmd_order2(const Invocation &inv, Report &r) {
    expect_operands(inv, 1);
    if (inv.left.empty() || inv.right.empty())
        throw UsageError("order2-factor needs --left and --right symbols");
    const std::string text = operator_text(inv);
    const Lpdo L = parse_operator(text);
    const LinearForm s1 = LinearForm::of(parse_operator(inv.left));
    const LinearForm s2 = LinearForm::of(parse_operator(inv.right));
    const auto f = solve_order2_coprime(L, s1, s2);
    r.document["input"] = text;
    r.document["normalized_operator"] = str(L);
    r.document["result"] = f ? ordered_json{{"factors", factors_json(*f)}} : ordered_json{{"factors", nullptr}};
    r.document["verdict"] = {{"factorizable", f.has_value()}};
    r.exit_code = f ? kSuccess : kCheckFailed;
}

void cmd_reducible(const Invocation &inv, Report &r) {
    if (inv.operands.size() < 2)
        throw UsageError("reducible needs an operator and at least one right factor");
    const std::string &text = inv.operands.front();
    const Lpdo L = parse_operator(text);
    std::vector<Lpdo> factors;
    for (std::size_t k = 1; k < inv.operands.size(); ++k)
        factors.push_back(parse_operator(inv.operands[k]));
    const ReducibilityVerdict v = check_complete_reducibility(L, factors);

    ordered_json input = ordered_json::array();
    for (const auto &t : inv.operands)
        input.push_back(t);
    r.document["input"] = input;
    r.document["normalized_operator"] = str(normalize_form1(L));

    ordered_json fs = ordered_json::array();
    for (const auto &fc : v.factors) {
        ordered_json j;
        j["factor"] = str(fc.factor);
        j["divides"] = fc.divides;
        j["pattern"] = fc.pattern ? ordered_json(fc.pattern->to_string()) : ordered_json(nullptr);
        j["irreducible"] = to_string(fc.irreducible);
        if (fc.split)
            j["split"] = factors_json(*fc.split);
        fs.push_back(j);
    }
    ordered_json res;
    res["factors"] = fs;
    res["lcm"] = v.lcm.to_string();
    res["lcm_matches_symbol"] = v.lcm_matches_symbol;
    res["group"] = v.group ? ordered_json(to_string(*v.group)) : ordered_json(nullptr);
    r.document["result"] = res;
    r.document["verdict"] = {{"status", to_string(v.status)}, {"reason", v.reason}};
    r.exit_code = v.status == ReducibilityVerdict::Status::CompletelyReducible ? kSuccess : kCheckFailed;
}

void cmd_groups(const Invocation &inv, Report &r) {
    expect_operands(inv, 1);
    const std::string text = operator_text(inv);
    const Prepared p = prepare_form1(text);
    r.document["input"] = text;
    r.document["normalized_operator"] = str(p.normalized);

    std::vector<ReducibilityGroup> groups;
    if (!inv.group.empty())
        groups.push_back(parse_group(inv.group));
    else
        groups.assign(all_groups.begin(), all_groups.end());

    ordered_json result = ordered_json::array(), residuals = ordered_json::object(),
                 holding = ordered_json::array();
    bool any = false;
    for (auto g : groups) {
        const ConditionReport rep = group_conditions(p.inv, g);
        ordered_json syms = ordered_json::array();
        for (const auto &s : group_symbols(g))
            syms.push_back(s);
        result.push_back({{"group", to_string(g)}, {"right_factor_symbols", syms}, {"holds", rep.holds}});
        residuals[to_string(g)] = residuals_json(rep);
        if (rep.holds) {
            holding.push_back(to_string(g));
            any = true;
        }
    }
    r.document["result"] = result;
    r.document["residuals"] = residuals;
    r.document["verdict"] = {{"kind", "sufficient-condition certificate"}, {"holding", holding}};
    if (!inv.group.empty() && !any)
        r.exit_code = kCheckFailed;
}

void cmd_examples(const Invocation &inv, Report &r) {
    expect_operands(inv, 0);
    r.document["input"] = nullptr;
    r.document["normalized_operator"] = nullptr;
    ordered_json items = ordered_json::array();
    int failed = 0;
    for (const auto &item : corpus()) {
        CorpusOutcome o;
        try {
            o = item.check();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.passed)
            ++failed;
        items.push_back({{"name", item.name}, {"claim", item.claim}, {"passed", o.passed}, {"detail", o.detail}});
    }
    r.document["result"] = items;
    r.document["verdict"] = {{"total", items.size()}, {"failed", failed}};
    r.exit_code = failed == 0 ? kSuccess : kCheckFailed;
}

void render(std::ostringstream &os, const ordered_json &j, int indent) {
    const std::string pad(indent, ' ');
    auto scalar = [](const ordered_json &v) {
        if (v.is_string())
            return v.get<std::string>();
        if (v.is_null())
            return std::string("-");
        return v.dump();
    };
    if (j.is_object()) {
        for (const auto &[k, v] : j.items()) {
            if (v.is_structured() && !v.empty()) {
                os << pad << k << ":\n";
                render(os, v, indent + 2);
            } else {
                os << pad << k << ": " << (v.is_structured() ? std::string("(none)") : scalar(v)) << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto &v : j) {
            if (v.is_object() && !v.empty()) {
                // first key on the dash line, the rest aligned under it
                std::ostringstream inner;
                render(inner, v, indent + 2);
                std::string s = inner.str();
                s.replace(indent, 2, "- ");
                os << s;
            } else if (v.is_array()) {
                os << pad << "-\n";
                render(os, v, indent + 2);
            } else {
                os << pad << "- " << scalar(v) << "\n";
            }
        }
    } else {
        os << pad << scalar(j) << "\n";
    }
}

} // namespace

std::string Report::text() const {
    if (help)
        return *help;
    std::ostringstream os;
    render(os, document, 0);
    return os.str();
}

bool wants_json(const std::vector<std::string> &args) {
    return std::find(args.begin(), args.end(), "--json") != args.end();
}

Report run(const std::vector<std::string> &args, const std::function<std::string()> &read_stdin) {
    Report r;
    Invocation inv;
    inv.read_stdin = read_stdin;

    CLI::App app{"Exact factorization tools for bivariate linear partial differential operators", "lpdo"};
    app.require_subcommand(1, 1);
    bool json = false;
    app.add_flag("--json", json, "Machine-readable output");
    app.fallthrough();

    struct Spec {
        const char *name;
        const char *help;
        bool left, right, g, type, group;
    };
    static const Spec specs[] = {
        {"echo", "Parse and print an operator in canonical form", false, false, false, false, false},
        {"compose", "Compose operators left to right", false, false, false, false, false},
        {"symbol", "Principal symbol and normal form", false, false, false, false, false},
        {"invariants", "Gauge invariants q, I1..I5 of a form-1 operator", false, false, false, false, false},
        {"gauge", "Gauge transform g^-1 * L * g", false, false, true, false, false},
        {"divide-left", "L = F*Q + R", true, false, false, false, false},
        {"divide-right", "L = Q*F + R", false, true, false, false, false},
        {"types", "Factorization-type conditions from invariants", false, false, false, true, false},
        {"triple", "Middle factor T with L = F1*T*F2", true, true, false, false, false},
        {"order2-factor", "Factor a second-order operator with given coprime symbols", true, true, false, false, false},
        {"reducible", "Complete reducibility from right factors: L F1 F2 ...", false, false, false, false, false},
        {"groups", "Sufficient conditions for complete reducibility (q = 1)", false, false, false, false, true},
        {"examples", "Run the built-in example corpus", false, false, false, false, false},
    };
    for (const auto &s : specs) {
        auto *sc = app.add_subcommand(s.name, s.help);
        sc->add_option("operands", inv.operands, "Operator expressions");
        if (s.left)
            sc->add_option("--left", inv.left, "Left factor");
        if (s.right)
            sc->add_option("--right", inv.right, "Right factor");
        if (s.g)
            sc->add_option("--g", inv.g, "Gauge function");
        if (s.type)
            sc->add_option("--type", inv.type, "Factorization type, e.g. (S)(XY)");
        if (s.group)
            sc->add_option("--group", inv.group, "Group label I, II.a, ..., V");
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        r.help = app.help();
        return r;
    } catch (const CLI::ParseError &e) {
        r.document["command"] = nullptr;
        r.document["error"] = {{"kind", "usage"}, {"message", e.what()}};
        r.exit_code = kUsageError;
        return r;
    }

    for (auto *sc : app.get_subcommands())
        inv.command = sc->get_name();
    r.document["command"] = inv.command;

    try {
        const std::string &c = inv.command;
        if (c == "echo")
            cmd_echo(inv, r);
        else if (c == "compose")
            cmd_compose(inv, r);
        else if (c == "symbol")
            cmd_symbol(inv, r);
        else if (c == "invariants")
            cmd_invariants(inv, r);
        else if (c == "gauge")
            cmd_gauge(inv, r);
        else if (c == "divide-left")
            cmd_divide(inv, r, true);
        else if (c == "divide-right")
            cmd_divide(inv, r, false);
        else if (c == "types")
            cmd_types(inv, r);
        else if (c == "triple")
            cmd_triple(inv, r);
        else if (c == "order2-factor")
            cmd_order2(inv, r);
        else if (c == "reducible")
            cmd_reducible(inv, r);
        else if (c == "groups")
            cmd_groups(inv, r);
        else
            cmd_examples(inv, r);
    } catch (const UsageError &e) {
        r.document["error"] = {{"kind", "usage"}, {"message", e.what()}};
        r.exit_code = kUsageError;
    } catch (const ParseError &e) {
        r.document["error"] = {{"kind", "parse"}, {"message", e.message()}, {"position", e.position()}};
        r.exit_code = kUsageError;
    } catch (const PreconditionError &e) {
        r.document["error"] = {{"kind", "precondition"}, {"predicate", e.predicate()}, {"message", e.what()}};
        r.exit_code = kPrecondition;
    } catch (const DivisionByZero &e) {
        r.document["error"] = {{"kind", "division-by-zero"}, {"message", e.what()}};
        r.exit_code = kPrecondition;
    } catch (const InconsistencyError &e) {
        r.document["error"] = {{"kind", "inconsistency"}, {"message", e.what()}};
        r.exit_code = kPrecondition;
    }
    return r;
}

} // namespace lpdo::cli
