#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "tamegamma/parser.hpp"
#include "tamegamma/report.hpp"

using namespace tamegamma;

namespace {

constexpr int kUsage = 2;
constexpr int kParse = 2;
constexpr int kPrecondition = 3;
constexpr int kExhausted = 4;

std::string read_input(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool applies(const std::string& command, std::initializer_list<const char*> allowed) {
    for (const char* c : allowed)
        if (command == c) return true;
    return false;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Newton-polyhedral regularity analyzer"};
    app.set_version_flag("--version", kToolVersion);

    std::string command;
    std::string path;
    std::size_t n = 0;
    std::string order = "grevlex";
    std::size_t steps = 0;
    std::uint64_t degree = 0;
    std::uint64_t seed = 1;
    int grid = 20;
    unsigned power = 0;
    std::vector<std::uint32_t> convenient;
    bool as_json = false;

    app.add_option("command", command, "analyze | check-family | stratify | probe | transform")
        ->required()
        ->check(CLI::IsMember(std::vector<std::string>(std::begin(kCommands), std::end(kCommands))));
    app.add_option("input", path, "polynomial file, or - for stdin")->required();
    auto* n_opt = app.add_option("--n", n, "number of variables z1..zn")->check(CLI::PositiveNumber);
    auto* order_opt = app.add_option("--order", order, "order inside elimination blocks")
                          ->check(CLI::IsMember({"grevlex", "lex"}));
    auto* steps_opt = app.add_option("--budget-steps", steps, "maximum reductions per basis")->check(CLI::PositiveNumber);
    auto* degree_opt = app.add_option("--budget-degree", degree, "maximum total degree in a basis")->check(CLI::PositiveNumber);
    auto* seed_opt = app.add_option("--seed", seed, "probe seed");
    auto* grid_opt = app.add_option("--grid", grid, "probe finest grid index k")->check(CLI::Range(4, 60));
    auto* power_opt = app.add_option("--power", power, "branched cover power p")->check(CLI::Range(1u, 64u));
    auto* conv_opt = app.add_option("--convenient", convenient, "exponents N1,N2,.. added as zk^Nk")->delimiter(',');
    app.add_flag("--json", as_json, "emit JSON instead of text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }

    const auto reject = [&](CLI::Option* opt, std::initializer_list<const char*> allowed) {
        if (opt->count() > 0 && !applies(command, allowed)) {
            std::cerr << "error: " << opt->get_name() << " does not apply to " << command << "\n";
            return true;
        }
        return false;
    };
    const std::initializer_list<const char*> exact = {"analyze", "check-family", "transform"};
    if (reject(order_opt, exact) || reject(steps_opt, exact) || reject(degree_opt, exact) ||
        reject(seed_opt, {"probe"}) || reject(grid_opt, {"probe"}) || reject(power_opt, {"transform"}) ||
        reject(conv_opt, {"transform"}))
        return kUsage;

    Request request;
    request.command = command;
    request.source = path;
    if (n_opt->count() > 0) request.n = n;
    try {
        request.budget = Budget::from_environment();
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    if (order == "lex") request.budget.inner_order = MonomialOrder::Kind::Lex;
    if (steps_opt->count() > 0) request.budget.max_reductions = steps;
    if (degree_opt->count() > 0) request.budget.max_degree = degree;
    request.probe.seed = seed;
    request.probe.grid = grid;
    if (power_opt->count() > 0) request.power = power;
    request.convenient = convenient;

    try {
        request.text = read_input(path);
        const Report report = run_request(request);
        std::cout << (as_json ? emit_json(report) : emit_text(report));
        return report.is_unknown() ? kExhausted : 0;
    } catch (const ParseError& e) {
        std::cerr << path << ":" << e.line() << ":" << e.column() << ": parse error: " << e.detail() << "\n";
        return kParse;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kPrecondition;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
}
