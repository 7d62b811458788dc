#include <doctest.h>

#include "lpdo_cli/cli.hpp"
#include "lpdo_cli/corpus.hpp"

using namespace lpdo::cli;

namespace {
Report run_args(std::vector<std::string> args, std::string in = "") {
    return run(args, [in] { return in; });
}
} // namespace

TEST_SUITE("cli") {

TEST_CASE("document layout") {
    const Report r = run_args({"echo", "Dx*x", "--json"});
    CHECK(r.exit_code == kSuccess);
    std::vector<std::string> keys;
    for (const auto &[k, v] : r.document.items())
        keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"command", "input", "normalized_operator", "result"});
    CHECK(r.document["result"]["operator"] == "x*Dx + 1");
}

TEST_CASE("A3 type sweep") {
    const Report r = run_args({"types", "Dxxy + Dxyy + (x-y)*(Dx+Dy)"});
    CHECK(r.exit_code == kSuccess);
    CHECK(r.document["verdict"]["holding"] == nlohmann::json::array({"(S)(XY)", "(XY)(S)"}));
    CHECK(r.document["residuals"]["(S)(X)(Y)"][2]["value"] == "-x + y");
    const Report one = run_args({"types", "--type", "(X)(SY)", "Dxxy + Dxyy + (x-y)*(Dx+Dy)"});
    CHECK(one.exit_code == kCheckFailed);
}

TEST_CASE("triple") {
    const Report r = run_args({"triple", "--left", "Dx+Dy+x", "--right", "Dy+y",
                               "(Dx + Dy + x) * (Dx*Dy + y*Dx + y^2*Dy + y^3)"});
    CHECK(r.exit_code == kSuccess);
    CHECK(r.document["result"]["middle"] == "Dx + y^2");
}

TEST_CASE("operator from stdin") {
    const Report r = run_args({"invariants"}, "Dx*Dy*(Dx+Dy) + x*Dxx + (2-x^2)*Dx + x*Dy - 2*x + x^2\n");
    CHECK(r.exit_code == kSuccess);
    CHECK(r.document["result"]["I1"] == "2*x");
    CHECK(r.document["result"]["I4"] == "x");
}

TEST_CASE("exit codes") {
    CHECK(run_args({}).exit_code == kUsageError);
    CHECK(run_args({"frobnicate"}).exit_code == kUsageError);
    CHECK(run_args({"echo"}).exit_code == kUsageError);
    CHECK(run_args({"echo", "Dx / y"}).exit_code == kUsageError);
    CHECK(run_args({"gauge", "Dx"}).exit_code == kUsageError);
    const Report pre = run_args({"invariants", "Dx^3"});
    CHECK(pre.exit_code == kPrecondition);
    CHECK(pre.document["error"]["kind"] == "precondition");
    CHECK(run_args({"groups", "Dxxy + 2*Dxyy"}).exit_code == kPrecondition);
    CHECK(run_args({"divide-right", "Dx^2 + 1", "Dx"}).exit_code == kCheckFailed);
    CHECK(run_args({"divide-left", "--left", "Dx + 1", "Dx^2 + 2*Dx + 1"}).exit_code == kSuccess);
    CHECK(run_args({"order2-factor", "--left", "Dx", "--right", "Dy", "Dxy + x - y"}).exit_code == kCheckFailed);
    CHECK(run_args({"reducible", "Dx*Dy*(Dx+Dy)", "Dx", "Dy", "Dx+Dy"}).exit_code == kSuccess);
    CHECK(run_args({"reducible", "Dx*Dy*(Dx+Dy)", "Dx", "Dy"}).exit_code == kCheckFailed);
    CHECK(run_args({"groups", "--group", "I", "Dx*Dy*(Dx+Dy)"}).exit_code == kSuccess);
    CHECK(run_args({"--help"}).help.has_value());
}

TEST_CASE("other commands") {
    CHECK(run_args({"compose", "Dx + 1", "Dx + 1", "Dx + x*Dy"}).document["result"]["operator"] ==
          "Dx^3 + x*Dx^2*Dy + 2*Dx^2 + (2*x + 2)*Dx*Dy + Dx + (x + 2)*Dy");
    const Report s = run_args({"symbol", "Dx^3 + x*Dx^2*Dy + 2*Dx^2"});
    CHECK(s.document["result"]["symbol"] == "X^3 + x*X^2*Y");
    CHECK(s.document["result"]["normal_form"]["pattern"] == "X^2*(X + x*Y)");
    CHECK(run_args({"gauge", "--g", "x", "Dx"}).document["result"]["operator"] == "Dx + 1/x");
}

TEST_CASE("text and json agree") {
    const Report r = run_args({"invariants", "Dxxy + Dxyy + (x-y)*(Dx+Dy)"});
    const std::string text = r.text();
    for (const auto &[k, v] : r.document["result"].items())
        CHECK(text.find(k + ": " + v.get<std::string>()) != std::string::npos);
}

TEST_CASE("deterministic output") {
    const std::vector<std::string> args{"types", "--json", "(Dx + Dy + x) * (Dx*Dy + y*Dx + y^2*Dy + y^3)"};
    CHECK(run_args(args).json() == run_args(args).json());
}

TEST_CASE("corpus") {
    const Report r = run_args({"examples"});
    CHECK(r.exit_code == kSuccess);
    CHECK(r.document["verdict"]["failed"] == 0);
    CHECK(r.document["result"].size() == corpus().size());
}

}
