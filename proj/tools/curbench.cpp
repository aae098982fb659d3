// curbench: seeded CUR selection experiments, property suites and matrix generators.
//
//   curbench run --config <file> [--plot out.svg] [--out out.csv] [--full-scale]
//   curbench suite <name> --seed <u64> [--out report.json]
//   curbench gen <name> [--n N --m M --noise X --seed S ...] --out <path>
//
// Exit codes: 0 ok, 1 test failure, 2 config error, 3 I/O error.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "cursel/bench/experiment.hpp"
#include "cursel/bench/suites.hpp"
#include "cursel/cursel.hpp"

namespace {

enum Exit : int { ok = 0, test_failure = 1, config_error = 2, io_error = 3 };

int exit_code_for(cursel::ErrorKind kind)
{
    using cursel::ErrorKind;
    switch (kind) {
    case ErrorKind::IoError:
        return io_error;
    case ErrorKind::ConfigError:
    case ErrorKind::InvalidInput:
    case ErrorKind::IndexError:
        return config_error;
    default:
        return test_failure;
    }
}

nlohmann::json to_json(const cursel::bench::SuiteReport& rep)
{
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : rep.checks)
        checks.push_back({{"name", c.name},
                          {"passed", c.passed},
                          {"instances", c.instances},
                          {"failures", c.failures},
                          {"worst", c.worst},
                          {"detail", c.detail}});
    return {{"suite", rep.suite}, {"seed", rep.seed}, {"passed", rep.passed()}, {"checks", checks}};
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out || !(out << text))
        cursel::fail(cursel::ErrorKind::IoError, "cannot write '" + path + "'");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"curbench: CUR row/column selection experiments"};
    app.require_subcommand(1);

    // run
    auto* run = app.add_subcommand("run", "run a seeded multi-trial experiment");
    std::string config_path, plot_path, csv_path;
    bool full_scale = false;
    std::size_t threads = 0;
    run->add_option("--config", config_path, "experiment config file")->required();
    run->add_option("--plot", plot_path, "write an SVG plot (log-y)");
    run->add_option("--out", csv_path, "CSV path (overrides output.csv)");
    run->add_flag("--full-scale", full_scale, "use 1000 x 1000 matrices");
    run->add_option("--threads", threads, "worker threads (capped by CURBENCH_THREADS)");

    // suite
    auto* suite = app.add_subcommand("suite", "run a property suite and print a JSON report");
    std::string suite_name, report_path;
    std::uint64_t suite_seed = 0;
    suite->add_option("name", suite_name, "srrqr-guarantees | bounds | recovery | linalg")->required();
    suite->add_option("--seed", suite_seed, "base seed");
    suite->add_option("--out", report_path, "also write the report here");

    // gen
    auto* gen = app.add_subcommand("gen", "write a generated matrix (.csv, or .dmat/.bin binary)");
    cursel::bench::GeneratorConfig g;
    std::string out_path;
    gen->add_option("name", g.name, "bivariate | inverse_quadratic | cross | block | gaussian | assumption")
        ->required();
    gen->add_option("--n", g.n, "rows (grid size for bivariate)");
    gen->add_option("--m", g.m, "columns (default n)");
    gen->add_option("--noise", g.noise, "noise norm (bivariate)");
    gen->add_option("--seed", g.seed, "generator seed");
    gen->add_option("--k1", g.assumption.k1);
    gen->add_option("--k2", g.assumption.k2);
    gen->add_option("--k3", g.assumption.k3);
    gen->add_option("--beta", g.assumption.beta);
    gen->add_option("--epsilon", g.assumption.epsilon);
    gen->add_option("--kappa", g.assumption.kappa);
    gen->add_option("--out", out_path, "output file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? ok : config_error;
    }

    try {
        if (*run) {
            auto cfg = cursel::bench::load_config(config_path);
            if (!plot_path.empty())
                cfg.plot_path = plot_path;
            if (!csv_path.empty())
                cfg.csv_path = csv_path;
            cfg.full_scale = cfg.full_scale || full_scale;
            const auto res = cursel::bench::run_experiment(cfg, {threads, std::nullopt});
            if (cfg.csv_path.empty())
                std::cout << cursel::bench::csv_string(res);
            else
                std::cerr << "wrote " << cfg.csv_path << "\n";
            return ok;
        }
        if (*suite) {
            const auto rep = cursel::bench::run_property_suite(suite_name, suite_seed);
            const std::string text = to_json(rep).dump(2) + "\n";
            std::cout << text;
            if (!report_path.empty())
                write_file(report_path, text);
            return rep.passed() ? ok : test_failure;
        }
        if (g.name == "file")
            cursel::fail(cursel::ErrorKind::ConfigError, "gen: 'file' is not a generator");
        cursel::io::save(out_path, cursel::bench::make_matrix(g));
        return ok;
    } catch (const cursel::Error& e) {
        std::cerr << "curbench: " << to_string(e.kind()) << ": " << e.what() << "\n";
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "curbench: " << e.what() << "\n";
        return test_failure;
    }
}
