#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cohfun/commands.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw cohfun::InputError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Coherent functors on finitely presented modules over Z or F_p"};
    app.require_subcommand(1, 1);
    app.fallthrough();

    std::string input, ring_text, battery, kind = "functor";
    std::uint64_t seed = 0;
    std::size_t cases = 100;
    bool serial = false;
    app.add_option("--input", input, "workspace JSON file");
    app.add_option("--seed", seed, "random seed")->capture_default_str();
    app.add_option("--cases", cases, "cases per randomized check")->capture_default_str();
    app.add_option("--battery", battery, "probe modules, e.g. Z,Z/2,Z^2+Z/4");
    app.add_option("--ring", ring_text, "Z or Fp:P (default Z, or the ring declared by --input)");
    app.add_option("--kind", kind, "random: module, morphism, functor, nat or ses")->capture_default_str();
    app.add_flag("--serial", serial, "run checks on one thread");

    std::vector<std::string> args;
    for (const auto& info : cohfun::command_table()) {
        auto* sub = app.add_subcommand(info.name, info.summary);
        if (info.max_args > 0) sub->add_option("args", args, info.usage);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    const std::string command = app.get_subcommands().front()->get_name();

    try {
        cohfun::CommandOptions options;
        std::optional<cohfun::BaseRing> ring;
        if (!ring_text.empty()) ring = cohfun::parse_ring(ring_text);
        options.ring = ring.value_or(cohfun::BaseRing::integers());
        options.seed = seed;
        options.cases = cases;
        options.battery = battery;
        options.kind = kind;
        options.execution = serial ? cohfun::Execution::Serial : cohfun::Execution::Parallel;

        std::optional<cohfun::Workspace> ws;
        if (!input.empty()) ws = cohfun::parse_workspace(read_file(input), ring);

        const cohfun::CommandResult r = cohfun::run_command(command, args, ws, options);
        std::cout << r.output << std::flush;
        return r.exit_code;
    } catch (const cohfun::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
