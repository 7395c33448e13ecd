// Command-line front end: series / invariants / tower / graph subcommands
// over a seed specification given inline or via a config file.
//
// Exit codes: 0 success or verdict pass, 1 verdict fail, 2 usage or parse
// error, 3 vertex cap exceeded.

#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "ltower/config.hpp"

namespace {

struct SpecInput {
    std::vector<std::string> seeds;
    std::uint64_t prime = 0;
    std::string config_path;
};

struct Options {
    SpecInput input;
    ltower::RunParams params;
    std::optional<unsigned> max_level;
    unsigned series_digits = 4;
    unsigned graph_level = 1;
    std::string format = "table";
    std::string out_path;
    std::optional<long long> assume_nu;
    std::optional<unsigned> assume_lambda;
    std::uint64_t test_seed = 0;
};

void add_spec_options(CLI::App* cmd, Options& opt) {
    auto* prime = cmd->add_option("--prime", opt.input.prime, "tower prime l");
    auto* seeds = cmd->add_option("--seeds", opt.input.seeds,
                                  "seed list; each is an integer, p/q, or sqrt(m)@branch");
    auto* config =
        cmd->add_option("--config", opt.input.config_path, "config file with prime and seeds");
    config->excludes(prime)->excludes(seeds);
    prime->needs(seeds);
    seeds->needs(prime);

    cmd->add_option("--terms", opt.params.terms, "series truncation order K")
        ->check(CLI::Range(1u, 4096u));
    cmd->add_option("--precision", opt.params.precision, "target digits per coefficient")
        ->check(CLI::Range(1u, 1u << 20));
    cmd->add_option("--levels", opt.max_level, "deepest tower level to measure")
        ->check(CLI::Range(0u, 64u));
    cmd->add_option("--cap", opt.params.vertex_cap, "largest allowed vertex count per level");
    cmd->add_option("--jobs", opt.params.jobs, "worker threads for independent levels")
        ->check(CLI::Range(1u, 256u));
    cmd->add_option("--test-seed", opt.test_seed,
                    "RNG seed passed through to randomized self-checks (reserved)");
    cmd->add_option("--out", opt.out_path, "write output to this file instead of stdout");
}

ltower::SeedSpec build_spec(const Options& opt, ltower::RunParams& params,
                            std::optional<unsigned> cli_level) {
    ltower::SeedSpec spec;
    std::optional<unsigned> level = cli_level;

    if (!opt.input.config_path.empty()) {
        ltower::ParsedConfig cfg = ltower::parse_config_file(opt.input.config_path);
        spec = std::move(cfg.spec);
        if (cfg.terms)
            params.terms = *cfg.terms;
        if (cfg.precision)
            params.precision = *cfg.precision;
        if (cfg.vertex_cap)
            params.vertex_cap = *cfg.vertex_cap;
        if (!level && cfg.max_level)
            level = cfg.max_level;
    } else {
        if (opt.input.prime == 0 || opt.input.seeds.empty())
            throw CLI::ValidationError("spec", "give either --config or --prime with --seeds");
        spec.prime = static_cast<unsigned long>(opt.input.prime);
        for (const std::string& s : opt.input.seeds)
            spec.seeds.push_back(ltower::parse_seed(s));
        ltower::validate_spec(spec);
    }

    if (level) {
        params.max_level = *level;
    } else {
        // Default: five levels, fewer when the cap does not allow that many.
        unsigned n = 0;
        while (n < 5 && ltower::prime_power(spec.prime, n + 1) <= params.vertex_cap)
            ++n;
        params.max_level = n;
    }
    return spec;
}

std::ostream& open_output(const Options& opt, std::ofstream& file) {
    if (opt.out_path.empty())
        return std::cout;
    file.open(opt.out_path);
    if (!file)
        throw ltower::Error("cannot write to " + opt.out_path);
    return file;
}

int run_series(const Options& opt) {
    ltower::RunParams params = opt.params;
    ltower::SeedSpec spec = build_spec(opt, params, opt.max_level);
    ltower::PadicSeries series = ltower::tower_series(spec, params.terms, params.precision);

    std::ofstream file;
    std::ostream& out = open_output(opt, file);
    for (unsigned k = 1; k <= series.terms(); ++k) {
        const ltower::PadicInt& c = series.c(k);
        unsigned shown = std::min(opt.series_digits, c.precision());
        out << "c" << k << " = " << c.digits(shown) << (shown < c.precision() ? "..." : "")
            << "\n";
    }
    return 0;
}

int run_invariants(const Options& opt) {
    ltower::RunParams params = opt.params;
    ltower::SeedSpec spec = build_spec(opt, params, opt.max_level);
    ltower::InvariantResult inv =
        ltower::extract_invariants(ltower::tower_series(spec, params.terms, params.precision));

    std::ofstream file;
    std::ostream& out = open_output(opt, file);
    out << "mu = " << inv.mu << "\n"
        << "lambda = " << inv.lambda << "\n"
        << "k0 = " << inv.k0 << "\n"
        << "provisional = " << (inv.provisional ? "yes" : "no") << "\n"
        << "n0_bound = " << inv.n0_bound << "\n";
    return 0;
}

int run_tower_cmd(const Options& opt) {
    ltower::RunParams params = opt.params;
    ltower::SeedSpec spec = build_spec(opt, params, opt.max_level);
    ltower::TowerReport report = ltower::run_tower(spec, params);

    if (opt.assume_lambda) {
        report.lambda = *opt.assume_lambda;
        report.diagnostics.push_back("lambda forced to " + std::to_string(*opt.assume_lambda) +
                                     " by --assume-lambda");
    }
    if (opt.assume_nu) {
        report.nu = *opt.assume_nu;
        report.diagnostics.push_back("nu forced to " + std::to_string(*opt.assume_nu) +
                                     " by --assume-nu");
    }
    if (opt.assume_lambda || opt.assume_nu) {
        report.verdict = ltower::validate_growth(report);
        report.difference_check = ltower::check_consecutive_differences(report);
    }

    std::ofstream file;
    std::ostream& out = open_output(opt, file);
    out << (opt.format == "machine" ? ltower::render_machine(report)
                                    : ltower::render_table(report));
    return report.verdict == ltower::Verdict::Fail ? 1 : 0;
}

int run_graph(const Options& opt) {
    ltower::RunParams params = opt.params;
    ltower::SeedSpec spec = build_spec(opt, params, opt.max_level);
    if (ltower::prime_power(spec.prime, opt.graph_level) > params.vertex_cap)
        throw ltower::LevelTooLarge("level " + std::to_string(opt.graph_level) +
                                    " exceeds the vertex cap");
    ltower::Multigraph g = ltower::cayley_serre(spec, opt.graph_level);

    std::ofstream file;
    std::ostream& out = open_output(opt, file);
    ltower::write_edge_list(g, out);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Iwasawa invariants and spanning-tree growth of abelian l-towers of bouquets"};
    app.require_subcommand(1);

    Options opt;

    CLI::App* series = app.add_subcommand("series", "print the tower power series coefficients");
    add_spec_options(series, opt);
    series->add_option("--digits", opt.series_digits, "digits to display per coefficient")
        ->check(CLI::Range(1u, 1u << 16));

    CLI::App* invariants =
        app.add_subcommand("invariants", "print mu, lambda and the stabilization bound");
    add_spec_options(invariants, opt);

    CLI::App* tower =
        app.add_subcommand("tower", "measure tree counts and verify the growth law");
    add_spec_options(tower, opt);
    tower->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"table", "machine"}));
    tower->add_option("--assume-lambda", opt.assume_lambda,
                      "override lambda before the verdict (diagnostic)");
    tower->add_option("--assume-nu", opt.assume_nu,
                      "override nu before the verdict (diagnostic)");

    CLI::App* graph = app.add_subcommand("graph", "export one tower level as an edge list");
    add_spec_options(graph, opt);
    graph->add_option("--level", opt.graph_level, "tower level to export")
        ->check(CLI::Range(0u, 64u));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (series->parsed())
            return run_series(opt);
        if (invariants->parsed())
            return run_invariants(opt);
        if (tower->parsed())
            return run_tower_cmd(opt);
        return run_graph(opt);
    } catch (const ltower::LevelTooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
