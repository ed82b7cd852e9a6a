#include "commands.hpp"
#include "support.hpp"

#include "gallai/cut_engine.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace gallai::cli;

int main(int argc, char** argv)
{
    CLI::App app{"Gallai colorings of complete graphs: construction, exact decision, bounds on g(k)"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    std::vector<std::string> arguments(argv + 1, argv + argc);
    Common common;
    auto add_common = [&](CLI::App* sub, bool with_jobs) {
        sub->add_option("--out", common.out, "JSON-lines record file; a .manifest.json is written beside it");
        if (with_jobs)
            sub->add_option("--jobs", common.jobs, "worker threads")->check(CLI::Range(1, 256));
    };

    DecideArgs decide;
    auto* cmd_decide = app.add_subcommand("decide", "decide whether a sequence is realized by a Gallai coloring");
    cmd_decide->add_option("--n", decide.n, "vertices")->required();
    cmd_decide->add_option("--seq", decide.seq, "color-class sizes, comma separated")->required();
    cmd_decide->add_option("--witness", decide.witness, "write a certificate when the answer is yes");
    cmd_decide->add_option("--scale-cap", decide.scale_cap, "largest n accepted")->check(CLI::Range(1, 64));
    cmd_decide->add_flag("--no-pruning", decide.no_pruning, "search every decomposition, not only connected base colors");
    add_common(cmd_decide, false);

    ColorArgs color;
    auto* cmd_color = app.add_subcommand("color", "build a Gallai coloring with the cut algorithm");
    cmd_color->add_option("--n", color.n, "vertices")->required();
    cmd_color->add_option("--seq", color.seq, "color-class sizes, comma separated")->required();
    cmd_color->add_option("--strategy", color.strategy, "greedy_largest | star_first | halving | paper_order");
    cmd_color->add_option("--budget", color.budget, "search-tree node budget");
    cmd_color->add_option("--trace", color.trace, "write the branch tree");
    cmd_color->add_option("--cert", color.cert, "write the certificate");
    cmd_color->add_flag("--large", color.large, "peel blocks first (needs n >= 2k(n0+1))");
    add_common(cmd_color, false);

    ValidateArgs validate;
    auto* cmd_validate = app.add_subcommand("validate", "check a certificate file");
    cmd_validate->add_option("file", validate.file, "certificate")->required();
    add_common(cmd_validate, false);

    SweepArgs sweep;
    auto* cmd_sweep = app.add_subcommand("sweep", "list every (n,k)-sequence that is not a G-sequence");
    cmd_sweep->add_option("--n", sweep.n, "vertices")->required();
    cmd_sweep->add_option("--k", sweep.k, "colors")->required()->check(CLI::Range(1, 64));
    cmd_sweep->add_flag("--no-verify", sweep.no_verify, "skip certificate checks of yes answers");
    add_common(cmd_sweep, true);

    GtableArgs gtable;
    auto* cmd_gtable = app.add_subcommand("gtable", "g(k) for small k by downward sweeps");
    cmd_gtable->add_option("--kmax", gtable.kmax, "largest k")->required()->check(CLI::Range(2, 12));
    cmd_gtable->add_option("--nmax", gtable.nmax, "sweep start")->required()->check(CLI::Range(1, 16));
    add_common(cmd_gtable, true);

    BoundsArgs bounds;
    auto* cmd_bounds = app.add_subcommand("bounds", "bracket g(k) between the lower family and the peeling threshold");
    cmd_bounds->add_option("--k", bounds.k, "colors")->required()->check(CLI::Range(std::int64_t{2}, std::int64_t{100'000'000}));
    cmd_bounds->add_option("--alpha", bounds.alpha, "lower-family parameter in (0,1]")->check(CLI::Range(1e-9, 1.0));
    cmd_bounds->add_flag("--full-range", bounds.full_range, "check every x for the largest-component bound");
    add_common(cmd_bounds, false);

    BoundsSweepArgs bsweep;
    auto* cmd_bsweep = app.add_subcommand("bounds-sweep", "tabulate the bracket over a range of k");
    cmd_bsweep->add_option("--kmin", bsweep.kmin, "first k")->required()->check(CLI::Range(std::int64_t{2}, std::int64_t{100'000'000}));
    cmd_bsweep->add_option("--kmax", bsweep.kmax, "last k")->required()->check(CLI::Range(std::int64_t{2}, std::int64_t{100'000'000}));
    cmd_bsweep->add_option("--step", bsweep.step, "k increment")->check(CLI::Range(std::int64_t{1}, std::int64_t{100'000'000}));
    cmd_bsweep->add_option("--alpha", bsweep.alpha, "lower-family parameter in (0,1]")->check(CLI::Range(1e-9, 1.0));
    add_common(cmd_bsweep, true);

    ReproArgs repro;
    auto* cmd_repro = app.add_subcommand("repro", "reproduce a published result");
    cmd_repro->add_option("id", repro.id, "result id")->required()->check(CLI::IsMember(repro_ids()));
    add_common(cmd_repro, true);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? Exit::ok : Exit::usage;
    }

    try {
        if (*cmd_decide)
            return run_decide(decide, common, arguments);
        if (*cmd_color)
            return run_color(color, common, arguments);
        if (*cmd_validate)
            return run_validate(validate, common, arguments);
        if (*cmd_sweep)
            return run_sweep(sweep, common, arguments);
        if (*cmd_gtable)
            return run_gtable(gtable, common, arguments);
        if (*cmd_bounds)
            return run_bounds(bounds, common, arguments);
        if (*cmd_bsweep)
            return run_bounds_sweep(bsweep, common, arguments);
        return run_repro(repro, common, arguments);
    }
    catch (const gallai::SequenceError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return Exit::usage;
    }
    catch (const gallai::ScaleCapExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return Exit::capped;
    }
    catch (const gallai::SearchBudgetExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return Exit::capped;
    }
    catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return Exit::usage;
    }
    catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return Exit::usage;
    }
}
