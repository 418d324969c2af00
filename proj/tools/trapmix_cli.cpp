// trapmix command line: bound calculators, single experiments, and the
// figure-style sweep presets, all driven through the trapmix C API.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "trapmix/trapmix.h"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitRuntime = 2;

std::string format_real(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

[[noreturn]] void fail(trapmix_status status) {
    std::cerr << "error: " << trapmix_last_error() << "\n";
    std::exit(status == TRAPMIX_ERR_INVALID_ARGUMENT ? kExitUsage : kExitRuntime);
}

void check(trapmix_status status) {
    if (status != TRAPMIX_OK) {
        fail(status);
    }
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open output file " << out_path << "\n";
        std::exit(kExitRuntime);
    }
    out << text;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot read file " << path << "\n";
        std::exit(kExitRuntime);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// Owned experiment handle with the shared problem/run flags applied.
struct ExperimentHandle {
    trapmix_experiment* ptr = nullptr;
    ExperimentHandle() { check(trapmix_experiment_create(&ptr)); }
    ~ExperimentHandle() { trapmix_experiment_destroy(ptr); }
    ExperimentHandle(const ExperimentHandle&) = delete;
    ExperimentHandle& operator=(const ExperimentHandle&) = delete;
};

struct ResultHandle {
    trapmix_result* ptr = nullptr;
    ~ResultHandle() { trapmix_result_destroy(ptr); }
    ResultHandle() = default;
    ResultHandle(const ResultHandle&) = delete;
    ResultHandle& operator=(const ResultHandle&) = delete;
};

// ---- bound subcommand -----------------------------------------------------

struct BoundArgs {
    std::string formula;
    std::string shape = "";
    int m = 0, k = 0, z = 0, s = 0, u = 0;
    double a = 0.0, b = 0.0, c = 1.0, t = 0.0, mu = 0.0, pstar = 0.0;
    bool with_mutation = false;
    std::string out;
};

std::string bound_row(const std::string& formula, const std::string& params, double value) {
    return formula + ',' + params + ',' + format_real(value) + '\n';
}

int run_bound(const BoundArgs& args) {
    std::ostringstream rows;
    const std::string& f = args.formula;
    if (f == "ea") {
        double value;
        check(trapmix_bound_ea_upper(args.m, args.k, &value));
        rows << bound_row("ea", "m=" + std::to_string(args.m) + " k=" + std::to_string(args.k),
                          value);
    } else if (f == "ea-drift") {
        double exact, floor_value;
        check(trapmix_bound_ea_drift(args.s, args.m, args.k, &exact, &floor_value));
        std::string params = "s=" + std::to_string(args.s) + " m=" + std::to_string(args.m) +
                             " k=" + std::to_string(args.k);
        rows << bound_row("ea-drift-exact", params, exact);
        rows << bound_row("ea-drift-floor", params, floor_value);
    } else if (f == "gomea") {
        double value;
        check(trapmix_bound_gomea(args.m, args.k, args.c, &value));
        rows << bound_row("gomea",
                          "m=" + std::to_string(args.m) + " k=" + std::to_string(args.k) +
                              " c=" + format_real(args.c),
                          value);
    } else if (f == "lemma1") {
        long long mu;
        double eps;
        check(trapmix_bound_lemma1_mu(args.m, args.k, args.c, &mu));
        check(trapmix_bound_lemma1_failure(args.m, args.c, &eps));
        std::string params = "m=" + std::to_string(args.m) + " k=" + std::to_string(args.k) +
                             " c=" + format_real(args.c);
        rows << bound_row("lemma1-mu", params, static_cast<double>(mu));
        rows << bound_row("lemma1-failure", params, eps);
    } else if (f == "lemma2") {
        long long mu;
        check(trapmix_bound_lemma2_mu(args.m, args.pstar, args.c, &mu));
        rows << bound_row("lemma2-mu",
                          "m=" + std::to_string(args.m) + " pstar=" + format_real(args.pstar) +
                              " c=" + format_real(args.c),
                          static_cast<double>(mu));
    } else if (f == "logistic") {
        double value;
        check(trapmix_bound_logistic(args.t, args.mu, args.with_mutation ? 1 : 0, &value));
        rows << bound_row("logistic",
                          "t=" + format_real(args.t) + " mu=" + format_real(args.mu) +
                              " mutation=" + (args.with_mutation ? "1" : "0"),
                          value);
    } else if (f == "thm3") {
        double full, dominant;
        check(trapmix_bound_thm3(args.m, args.k, args.a, args.b, args.z, args.c, &full,
                                 &dominant));
        std::string params = "m=" + std::to_string(args.m) + " k=" + std::to_string(args.k) +
                             " a=" + format_real(args.a) + " b=" + format_real(args.b) +
                             " z=" + std::to_string(args.z) + " c=" + format_real(args.c);
        rows << bound_row("thm3-full", params, full);
        rows << bound_row("thm3-dominant", params, dominant);
    } else if (f == "pstar") {
        // Without a/b/z this is the standard trap; otherwise generalized
        // unless --shape says tailed.
        std::string shape = args.shape;
        if (shape.empty()) {
            shape = (args.a == 0.0 && args.b == 0.0 && args.z == 0) ? "standard" : "generalized";
        }
        double value;
        check(trapmix_bound_pstar(shape.c_str(), args.k, args.a, args.b, args.z, &value));
        std::string params = "shape=" + shape + " k=" + std::to_string(args.k);
        if (shape != "standard") {
            params += " a=" + format_real(args.a) + " b=" + format_real(args.b) +
                      " z=" + std::to_string(args.z);
        }
        rows << bound_row("pstar", params, value);
    } else if (f == "level") {
        int value;
        check(trapmix_bound_level(args.u, args.k, args.a, args.b, args.z, &value));
        rows << bound_row("level",
                          "u=" + std::to_string(args.u) + " k=" + std::to_string(args.k) +
                              " a=" + format_real(args.a) + " b=" + format_real(args.b) +
                              " z=" + std::to_string(args.z),
                          static_cast<double>(value));
    } else {
        std::cerr << "error: unknown bound formula '" << f << "'\n";
        return kExitUsage;
    }
    write_output("formula,params,value\n" + rows.str(), args.out);
    return 0;
}

// ---- run subcommand ---------------------------------------------------------

struct RunArgs {
    std::string shape = "standard";
    int m = 0, k = 0, z = 0;
    double a = 0.0, b = 0.0;
    std::string alg;
    std::optional<std::uint64_t> mu;
    std::optional<double> c;
    std::string init = "uniform";
    std::optional<std::uint64_t> budget;
    std::string budget_preset;
    int reps = 100;
    std::uint64_t seed = 1;
    std::string fos_file;
    std::string out;
    int threads = 0;
};

void apply_run_args(trapmix_experiment* experiment, const RunArgs& args) {
    check(trapmix_experiment_set_problem(experiment, args.shape.c_str(), args.m, args.k, args.a,
                                         args.b, args.z));
    check(trapmix_experiment_set_algorithm(experiment, args.alg.c_str()));
    if (args.mu) {
        check(trapmix_experiment_set_mu(experiment, *args.mu));
    }
    if (args.c) {
        check(trapmix_experiment_set_c(experiment, *args.c));
    }
    check(trapmix_experiment_set_init(experiment, args.init.c_str()));
    if (args.budget) {
        check(trapmix_experiment_set_budget(experiment, *args.budget));
    } else if (!args.budget_preset.empty()) {
        check(trapmix_experiment_set_budget_preset(experiment, args.budget_preset.c_str()));
    } else {
        std::cerr << "error: give --budget or --budget-preset\n";
        std::exit(kExitUsage);
    }
    check(trapmix_experiment_set_replications(experiment, args.reps));
    check(trapmix_experiment_set_seed(experiment, args.seed));
    int threads = args.threads > 0
                      ? args.threads
                      : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    check(trapmix_experiment_set_threads(experiment, threads));
    if (!args.fos_file.empty()) {
        std::string text = read_file(args.fos_file);
        check(trapmix_experiment_set_fos_text(experiment, text.c_str()));
    }
}

int run_single(const RunArgs& args) {
    ExperimentHandle experiment;
    apply_run_args(experiment.ptr, args);
    ResultHandle result;
    check(trapmix_experiment_run(experiment.ptr, &result.ptr));
    write_output(trapmix_result_csv(result.ptr), args.out);
    return 0;
}

// ---- sweep subcommand -------------------------------------------------------

struct SweepPoint {
    std::string shape;
    int m, k, z;
    double a, b;
    std::string alg;
    std::string init;
    double c;
    // Explicit budget when nonzero, otherwise the named preset.
    std::uint64_t budget = 0;
    std::string budget_preset;
};

struct SweepArgs {
    std::string preset;
    int reps = 0;  // 0 keeps the preset default
    std::uint64_t seed = 1;
    std::string out;
    int threads = 0;
};

std::vector<SweepPoint> build_grid(const std::string& preset, int& default_reps) {
    std::vector<SweepPoint> grid;
    if (preset == "fig3") {
        // Worst-case hitting time vs the Theorem 2 bound, k by k.
        default_reps = 100;
        const std::vector<std::pair<int, std::vector<int>>> axes{
            {4, {4, 6, 8, 10, 12}}, {5, {4, 6, 8, 10}}, {6, {4, 6, 8, 10}}, {7, {4, 6, 8}}};
        for (const auto& [k, ms] : axes) {
            for (int m : ms) {
                for (const char* alg : {"gomea", "gomea-mut"}) {
                    grid.push_back({"standard", m, k, 0, 0.0, 0.0, alg, "worst-standard", 1.0, 0,
                                    "thm2"});
                }
            }
        }
    } else if (preset == "fig4") {
        // Success rate against c at k=4, m=6, with the GA comparison.
        default_reps = 1000;
        for (double c : {1.0, 2.0, 3.0, 4.0}) {
            for (const char* alg : {"gomea", "gomea-mut", "ga"}) {
                grid.push_back({"standard", 6, 4, 0, 0.0, 0.0, alg, "uniform", c, 0, "s42"});
            }
        }
    } else if (preset == "fig6") {
        // Generalized-trap worst case against the Theorem 3 bound; budget is
        // 10x the full bound, resolved per point below.
        default_reps = 100;
        const std::vector<std::pair<int, int>> kz{{4, 2}, {4, 3}, {5, 3}, {6, 4}, {7, 5}};
        for (const auto& [k, z] : kz) {
            for (int m : {4, 6, 8, 10}) {
                SweepPoint point{"generalized", m,   k,   z, 1.0, static_cast<double>(k),
                                 "gomea-mut",   "worst-generalized", 1.0, 0, ""};
                double full, dominant;
                check(trapmix_bound_thm3(m, k, 1.0, k, z, 1.0, &full, &dominant));
                point.budget = static_cast<std::uint64_t>(10.0 * full);
                grid.push_back(point);
            }
        }
    } else if (preset == "fig7") {
        // Generalized vs tailed trap at m=8, k=6, z=4 (equal p*).
        default_reps = 1000;
        for (double c : {1.0, 2.0, 3.0, 4.0}) {
            for (const char* alg : {"gomea-mut", "ga"}) {
                grid.push_back({"generalized", 8, 6, 4, 1.0, 6.0, alg, "uniform", c, 0, "s632"});
                grid.push_back({"tailed", 8, 6, 4, 5.0, 6.0, alg, "uniform", c, 0, "s632"});
            }
        }
    } else {
        std::cerr << "error: unknown sweep preset '" << preset << "'\n";
        std::exit(kExitUsage);
    }
    return grid;
}

int run_sweep(const SweepArgs& args) {
    int default_reps = 100;
    std::vector<SweepPoint> grid = build_grid(args.preset, default_reps);
    const int reps = args.reps > 0 ? args.reps : default_reps;
    int threads = args.threads > 0
                      ? args.threads
                      : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

    std::ostringstream out;
    out << "# trapmix sweep preset=" << args.preset << " replications=" << reps
        << " base_seed=" << args.seed << " rng_id=" << trapmix_rng_id() << "\n";
    out << "preset,shape,m,k,a,b,z,alg,init,mu,c,budget,replications,seed,"
           "success_rate,successes,censored,mean_hitting_time,std_hitting_time,"
           "bound,bound_full,bound_dominant\n";

    for (std::size_t index = 0; index < grid.size(); ++index) {
        const SweepPoint& point = grid[index];
        ExperimentHandle experiment;
        check(trapmix_experiment_set_problem(experiment.ptr, point.shape.c_str(), point.m,
                                             point.k, point.a, point.b, point.z));
        check(trapmix_experiment_set_algorithm(experiment.ptr, point.alg.c_str()));
        check(trapmix_experiment_set_c(experiment.ptr, point.c));
        check(trapmix_experiment_set_init(experiment.ptr, point.init.c_str()));
        if (point.budget > 0) {
            check(trapmix_experiment_set_budget(experiment.ptr, point.budget));
        } else {
            check(trapmix_experiment_set_budget_preset(experiment.ptr,
                                                       point.budget_preset.c_str()));
        }
        check(trapmix_experiment_set_replications(experiment.ptr, reps));
        std::uint64_t point_seed = args.seed + 7919ULL * index;
        check(trapmix_experiment_set_seed(experiment.ptr, point_seed));
        check(trapmix_experiment_set_threads(experiment.ptr, threads));

        ResultHandle result;
        check(trapmix_experiment_run(experiment.ptr, &result.ptr));

        std::string bound_full = "";
        std::string bound_dominant = "";
        if (point.shape != "standard") {
            double full, dominant;
            check(trapmix_bound_thm3(point.m, point.k, point.a, point.b, point.z, point.c, &full,
                                     &dominant));
            bound_full = format_real(full);
            bound_dominant = format_real(dominant);
        }

        out << args.preset << ',' << point.shape << ',' << point.m << ',' << point.k << ','
            << format_real(point.a) << ',' << format_real(point.b) << ',' << point.z << ','
            << point.alg << ',' << point.init << ',' << trapmix_result_mu(result.ptr) << ','
            << format_real(point.c) << ',' << trapmix_result_budget(result.ptr) << ',' << reps
            << ',' << point_seed << ',' << format_real(trapmix_result_success_rate(result.ptr))
            << ',' << trapmix_result_successes(result.ptr) << ','
            << (reps - trapmix_result_successes(result.ptr)) << ','
            << format_real(trapmix_result_mean_hitting_time(result.ptr)) << ','
            << format_real(trapmix_result_std_hitting_time(result.ptr)) << ','
            << format_real(trapmix_result_bound(result.ptr)) << ',' << bound_full << ','
            << bound_dominant << '\n';
    }

    write_output(out.str(), args.out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Concatenated trap benchmarks: GOMEA, (1+1) EA, and (mu+1) GA "
                 "with deterministic crowding, plus runtime-bound calculators"};
    app.require_subcommand(1);

    // bound ------------------------------------------------------------------
    BoundArgs bound_args;
    CLI::App* bound = app.add_subcommand("bound", "Evaluate a runtime bound or probability");
    bound->add_option("formula", bound_args.formula,
                      "One of: ea, ea-drift, gomea, lemma1, lemma2, logistic, thm3, pstar, level")
        ->required();
    bound->add_option("--shape", bound_args.shape, "Trap shape for pstar");
    bound->add_option("--m", bound_args.m, "Number of blocks");
    bound->add_option("--k", bound_args.k, "Block length");
    bound->add_option("--a", bound_args.a, "Local optimum fitness");
    bound->add_option("--b", bound_args.b, "Global optimum fitness");
    bound->add_option("--z", bound_args.z, "Slope breakpoint");
    bound->add_option("--c", bound_args.c, "Sizing constant");
    bound->add_option("--s", bound_args.s, "Non-optimal block count (ea-drift)");
    bound->add_option("--u", bound_args.u, "Best block unitation (level)");
    bound->add_option("--t", bound_args.t, "GOM steps (logistic)");
    bound->add_option("--mu", bound_args.mu, "Population size (logistic)");
    bound->add_flag("--with-mutation", bound_args.with_mutation, "Mutation-slowed diffusion");
    bound->add_option("--pstar", bound_args.pstar, "Optimal-region probability (lemma2)");
    bound->add_option("--out", bound_args.out, "Output file (default stdout)");

    // run --------------------------------------------------------------------
    RunArgs run_args;
    std::uint64_t opt_mu = 0;
    double opt_c = 0.0;
    std::uint64_t opt_budget = 0;
    CLI::App* run = app.add_subcommand("run", "Run one experiment and emit its CSV");
    run->set_config("--config", "", "Config file with key=value lines");
    run->add_option("--shape", run_args.shape, "standard|generalized|tailed")
        ->default_val("standard");
    run->add_option("--m", run_args.m, "Number of blocks")->required();
    run->add_option("--k", run_args.k, "Block length")->required();
    run->add_option("--a", run_args.a, "Local optimum fitness (non-standard shapes)");
    run->add_option("--b", run_args.b, "Global optimum fitness (non-standard shapes)");
    run->add_option("--z", run_args.z, "Slope breakpoint (non-standard shapes)");
    run->add_option("--alg", run_args.alg, "gomea|gomea-mut|ea|ga")->required();
    auto* mu_opt = run->add_option("--mu", opt_mu, "Population size");
    auto* c_opt = run->add_option("--c", opt_c, "Sizing constant (Lemma 1/2 population)");
    mu_opt->excludes(c_opt);
    run->add_option("--init", run_args.init, "uniform|worst-standard|worst-generalized")
        ->default_val("uniform");
    auto* budget_opt = run->add_option("--budget", opt_budget, "Evaluation budget");
    auto* preset_opt =
        run->add_option("--budget-preset", run_args.budget_preset, "thm2|s42|s632");
    budget_opt->excludes(preset_opt);
    run->add_option("--reps", run_args.reps, "Replications")->default_val(100);
    run->add_option("--seed", run_args.seed, "Base seed")->default_val(1);
    run->add_option("--fos-file", run_args.fos_file, "FOS file (one subset per line)");
    run->add_option("--out", run_args.out, "Output file (default stdout)");
    run->add_option("--threads", run_args.threads, "Worker threads (default: hardware)");

    // sweep ------------------------------------------------------------------
    SweepArgs sweep_args;
    CLI::App* sweep = app.add_subcommand("sweep", "Run a figure-style preset grid");
    sweep->add_option("preset", sweep_args.preset, "fig3|fig4|fig6|fig7")->required();
    sweep->add_option("--reps", sweep_args.reps, "Replications (0 = preset default)");
    sweep->add_option("--seed", sweep_args.seed, "Base seed")->default_val(1);
    sweep->add_option("--out", sweep_args.out, "Output file (default stdout)");
    sweep->add_option("--threads", sweep_args.threads, "Worker threads (default: hardware)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (bound->parsed()) {
        return run_bound(bound_args);
    }
    if (run->parsed()) {
        if (mu_opt->count() > 0) {
            run_args.mu = opt_mu;
        }
        if (c_opt->count() > 0) {
            run_args.c = opt_c;
        }
        if (budget_opt->count() > 0) {
            run_args.budget = opt_budget;
        }
        return run_single(run_args);
    }
    return run_sweep(sweep_args);
}
