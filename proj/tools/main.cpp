// maj-confine: spectra, wavefunctions, validation and b-sweeps for a
// Majorana fermion under linear scalar confinement.

#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"
#include "run_config.hpp"

using namespace majconf::cli;

int main(int argc, char** argv) {
    CLI::App app{"Bound states of a (1+1)-d Majorana fermion in a linear scalar potential m + b x", "maj-confine"};
    app.set_version_flag("--version", std::string(MAJ_CONFINE_VERSION));
    app.set_config("--config", "", "Flat key=value file; keys are long flag names, flags override it");
    app.require_subcommand(1);

    RunConfig config;
    std::string method = "analytic";
    std::string format = "csv";
    std::string grid_text;
    std::optional<double> tol;

    app.add_option("--m", config.m, "Mass term m")->capture_default_str();
    app.add_option("--b", config.b, "Slope b of the scalar potential (> 0)")->capture_default_str();
    app.add_option("--n-max", config.n_max, "Highest level index n")->capture_default_str();
    app.add_option("--method", method, "analytic | fd | shooting | all")
        ->check(CLI::IsMember({"analytic", "fd", "shooting", "all"}))
        ->capture_default_str();
    app.add_option("--grid", grid_text, "Working grid as min:max:points (default r in [-10, 10], 4001 points)");
    app.add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    app.add_option("--out", config.out, "Output path, - for stdout")->capture_default_str();
    app.add_option("--tol", tol, "Override every numerical tolerance");
    app.add_flag("--allow-narrow-grid", config.allow_narrow_grid,
                 "Accept a grid that does not reach |r| = 8 around the potential minimum");

    auto* spectrum = app.add_subcommand("spectrum", "Energy levels E_n^+-, n <= n-max, per method");
    auto* modes = app.add_subcommand("modes", "Sampled normalized wavefunction (phi, chi) of level n");
    int mode_n = 0;
    int mode_sign = +1;
    modes->add_option("--n", mode_n, "Level index")->required();
    modes->add_option("--sign", mode_sign, "Energy branch, +1 or -1")->capture_default_str();
    auto* validate = app.add_subcommand("validate", "Run every registered check; JSON lines report");
    auto* sweep = app.add_subcommand("sweep", "Levels over a list of b values with the sqrt(b) collapse");
    std::string b_values_text;
    sweep->add_option("--b-values", b_values_text, "Comma-separated b list, e.g. 0.5,1,2")->required();
    for (auto* sub : {spectrum, modes, validate, sweep}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kSuccess : kUsageError;
    }

    try {
        config.method = method == "fd"         ? Method::fd
                        : method == "shooting" ? Method::shooting
                        : method == "all"      ? Method::all
                                               : Method::analytic;
        config.format = format == "json" ? Format::json : Format::csv;
        if (!grid_text.empty()) config.grid = parse_grid_spec(grid_text);
        config.tol = tol;
        config.validate();
        if (config.m < 0.0) std::cerr << "warning: m < 0 only shifts the origin x0 = m/b; continuing\n";

        CommandResult result;
        if (*spectrum) {
            result = cmd_spectrum(config);
        } else if (*modes) {
            result = cmd_modes(config, mode_n, mode_sign);
        } else if (*validate) {
            std::string table;
            result = cmd_validate(config, table);
            // Keep stdout clean when the report itself goes there.
            (config.out == "-" ? std::cerr : std::cout) << table << std::flush;
        } else {
            result = cmd_sweep(config, parse_b_values(b_values_text));
        }
        write_output(config.out, result.text);
        return result.exit_code;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kValidationFailure;
    }
}
