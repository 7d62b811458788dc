#include <iostream>
#include <iterator>
#include <string>
#include <vector>

#include "lpdo_cli/cli.hpp"

int main(int argc, char **argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    const auto read_stdin = [] { return std::string(std::istreambuf_iterator<char>(std::cin), {}); };
    const lpdo::cli::Report report = lpdo::cli::run(args, read_stdin);
    std::ostream &out = report.exit_code == lpdo::cli::kUsageError && !report.help ? std::cerr : std::cout;
    if (lpdo::cli::wants_json(args) && !report.help)
        out << report.json() << "\n";
    else
        out << report.text();
    return report.exit_code;
}
