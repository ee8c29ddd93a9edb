#include "gsamp/error.hpp"
#include "gsamp/experiment.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>

namespace {

namespace ex = gsamp::experiment;

int exit_code(gsamp::ErrorKind kind)
{
    switch (kind) {
    case gsamp::ErrorKind::invalid_parameter:
    case gsamp::ErrorKind::parse_error:
    case gsamp::ErrorKind::data_error:
        return 1;
    case gsamp::ErrorKind::numeric_error:
    case gsamp::ErrorKind::range_error:
    case gsamp::ErrorKind::generation_failure:
        return 2;
    case gsamp::ErrorKind::io_error:
        return 3;
    }
    return 2;
}

// A readable file is a config; anything else is taken as a preset name.
ex::ExperimentConfig resolve(const std::string& what)
{
    if (std::filesystem::is_regular_file(what)) {
        return ex::load_config(what);
    }
    if (what.ends_with(".json")) {
        gsamp::fail(gsamp::ErrorKind::io_error, "cannot open config " + what);
    }
    return ex::preset(what);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Graph spectral-domain sampling experiments"};
    app.require_subcommand(1);

    std::string target;
    std::string out_dir;
    std::optional<std::uint64_t> seed;
    std::string edges;
    std::string coordinates;
    auto* run = app.add_subcommand("run", "Run a config file or preset and write its artifacts");
    run->add_option("config", target, "Config JSON path or preset name")->required();
    run->add_option("--out", out_dir, "Output directory")->required();
    run->add_option("--seed", seed, "Run seed (overrides the config)");
    run->add_option("--edges", edges, "Edge-list CSV for edge_list graphs (e.g. minnesota-energy)");
    run->add_option("--coordinates", coordinates, "Coordinates CSV for edge_list graphs");

    auto* list = app.add_subcommand("list-presets", "Print the preset names");

    std::string to_validate;
    auto* validate = app.add_subcommand("validate", "Check a config file or preset without running it");
    validate->add_option("config", to_validate, "Config JSON path or preset name")->required();
    validate->add_option("--edges", edges, "Edge-list CSV for edge_list graphs");

    std::string to_show;
    auto* show = app.add_subcommand("show", "Print a preset as config JSON");
    show->add_option("preset", to_show, "Preset name")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (list->parsed()) {
            for (const auto& name : ex::list_presets()) {
                std::cout << name << '\n';
            }
            return 0;
        }
        if (show->parsed()) {
            std::cout << ex::config_to_json(ex::preset(to_show)).dump(2) << '\n';
            return 0;
        }
        ex::ExperimentConfig config = resolve(run->parsed() ? target : to_validate);
        if (!edges.empty()) {
            config.graph.edges = edges;
        }
        if (!coordinates.empty()) {
            config.graph.coordinates = coordinates;
        }
        if (validate->parsed()) {
            const auto problems = ex::validate_config(config);
            if (problems.empty()) {
                std::cout << "ok\n";
                return 0;
            }
            for (const auto& p : problems) {
                std::cerr << "error: " << p << '\n';
            }
            return 1;
        }
        if (seed) {
            config.seed = *seed;
        }
        const auto result = ex::run_experiment(config, out_dir);
        std::cout << "wrote " << result.files.size() + 1 << " files to " << out_dir << '\n';
        std::cout << result.scalars.dump(2) << '\n';
        return 0;
    } catch (const gsamp::Error& e) {
        std::cerr << e.what() << '\n';
        return exit_code(e.kind());
    }
}
