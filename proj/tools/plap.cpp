#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "plap/cli/commands.hpp"
#include "plap/cli/config.hpp"

namespace {

struct Overrides {
    std::string config;
    std::optional<std::string> out;
    std::optional<std::uint64_t> seed;
    std::optional<unsigned> workers;
    std::optional<std::size_t> count;
    bool svg = false;
};

void add_common(CLI::App* sub, Overrides& o) {
    sub->add_option("--config", o.config, "experiment config file (key=value)");
    sub->add_option("--out", o.out, "output directory");
    sub->add_option("--seed", o.seed, "random seed");
    sub->add_option("--workers", o.workers, "concurrent sweep entries")->check(CLI::PositiveNumber);
    sub->add_flag("--svg", o.svg, "also write SVG figures");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Discrete p-Laplacian evolution experiments"};
    app.require_subcommand(1);
    Overrides o;
    const char* names[] = {"evolve", "semigroup-continuity", "equilibrium-sweep", "attractor", "verify-bounds"};
    const char* help[] = {"integrate one trajectory", "flow gap against p - 2", "equilibrium gap against p - 2",
                          "attractor distance sweep", "fuzz the two inequalities"};
    for (std::size_t i = 0; i < std::size(names); ++i) {
        auto* sub = app.add_subcommand(names[i], help[i]);
        add_common(sub, o);
        if (std::string(names[i]) == "verify-bounds") sub->add_option("--count", o.count, "Tartar samples");
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : plap::cli::kExitConfig;
    }
    const std::string command = app.get_subcommands().front()->get_name();

    plap::cli::ExperimentConfig config;
    try {
        if (!o.config.empty()) config = plap::cli::load_config(o.config);
    } catch (const std::exception& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return plap::cli::kExitConfig;
    }
    if (o.out) config.out = *o.out;
    if (o.seed) config.seed = *o.seed;
    if (o.workers) config.workers = *o.workers;
    if (o.count) config.count = *o.count;
    if (o.svg) config.svg = true;
    return plap::cli::run_command(command, config, std::cout, std::cerr);
}
