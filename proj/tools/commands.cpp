#include "commands.hpp"

#include "gallai/bounds.hpp"
#include "gallai/certificate.hpp"
#include "gallai/cut_engine.hpp"
#include "gallai/exact.hpp"
#include "support.hpp"

#include <cmath>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

namespace gallai::cli {

using nlohmann::ordered_json;

namespace {

    ordered_json counts_json(const std::vector<Count>& v) { return ordered_json(v); }

    std::string on_kn(const GallaiSequence& s) { return to_string(s) + " on K_" + std::to_string(s.n); }

    void write_certificate_file(const std::string& path, const EdgeColoring& c, const GallaiSequence& s, Recorder& rec)
    {
        const auto check = verify_certificate(c, s);
        if (!is_ok(check))
            throw std::logic_error("refusing to write an invalid certificate: " + describe(check));
        write_text_file(path, write_certificate(make_certificate(c, s)));
        rec.emitted(path);
    }

    std::string describe_cut(const Cut& c)
    {
        std::ostringstream out;
        out << "K_" << c.component << " -> K_" << c.first << " + K_" << c.second << ", color " << c.color << " ("
            << c.cost() << (c.cost() == 1 ? " edge)" : " edges)");
        return out.str();
    }

} // namespace

int run_decide(const DecideArgs& a, const Common& c, const Args& argv)
{
    const auto s = validate(a.n, parse_counts(a.seq));
    MemoStore memo;
    CacheSession cache(memo);
    ExactOptions options;
    options.scale_cap = a.scale_cap;
    options.base_color_pruning = !a.no_pruning;
    ExactDecider decider(memo, options);

    Recorder rec("decide", argv);
    rec.set_out(c.out);
    const auto v = decider.decide(s, a.witness.has_value());
    std::cout << on_kn(s) << ": " << (v.yes() ? "G-sequence" : "NOT a G-sequence") << '\n';
    std::cout << "search: " << v.stats.nodes << " decompositions explored, " << v.stats.memo_hits << " memo hits, "
              << v.stats.constructive_hits << " settled by cuts\n";
    if (v.yes() && a.witness) {
        write_certificate_file(*a.witness, *v.witness, s, rec);
        std::cout << "witness written to " << *a.witness << '\n';
    }
    rec.add({{"command", "decide"}, {"n", s.n}, {"sequence", counts_json(s.counts)}, {"answer", v.yes() ? "yes" : "no"}});
    rec.summary(v.yes() ? "G-sequence" : "NOT a G-sequence");
    rec.finish();
    return v.yes() ? Exit::ok : Exit::negative;
}

int run_color(const ColorArgs& a, const Common& c, const Args& argv)
{
    const auto s = validate(a.n, parse_counts(a.seq));
    const auto strategy = parse_strategy(a.strategy);
    if (!strategy)
        throw std::invalid_argument("unknown strategy '" + a.strategy + "'");

    Recorder rec("color", argv);
    rec.set_out(c.out);
    ordered_json record{{"command", "color"}, {"n", s.n}, {"sequence", counts_json(s.counts)},
                        {"strategy", a.large ? "large" : std::string(strategy_name(*strategy))}};

    auto save_trace = [&](const CutTrace& trace) {
        if (!a.trace)
            return;
        write_text_file(*a.trace, format_trace(trace));
        rec.emitted(*a.trace);
    };
    auto report_success = [&](const CutSuccess& ok) {
        std::cout << on_kn(s) << ": colored with " << ok.path.size() << " cuts, " << ok.nodes_explored
                  << " search nodes\n";
        for (const auto& cut : ok.path)
            std::cout << "  " << describe_cut(cut) << '\n';
        save_trace(ok.trace);
        if (a.cert)
            write_certificate_file(*a.cert, ok.coloring, s, rec);
        record["outcome"] = "success";
        record["cuts"] = ok.path.size();
        record["nodes"] = ok.nodes_explored;
    };

    int code = Exit::ok;
    auto report_other = [&](const auto& r) {
        using R = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<R, IrreducibleReport>) {
            std::cout << on_kn(s) << ": irreducible on every branch; smallest stuck component K_" << r.stuck_size
                      << " with residual (" << format_counts(r.stuck_residual) << ")\n";
            save_trace(r.trace);
            record["outcome"] = "irreducible";
            record["stuck_size"] = r.stuck_size;
            record["stuck_residual"] = counts_json(r.stuck_residual);
            code = Exit::negative;
        }
        else if constexpr (std::is_same_v<R, BudgetExhausted>) {
            std::cout << on_kn(s) << ": budget exhausted after " << r.nodes_explored << " nodes\n";
            record["outcome"] = "budget";
            code = Exit::capped;
        }
        else if constexpr (std::is_same_v<R, Refused>) {
            std::cout << on_kn(s) << ": refused: " << r.reason << '\n';
            record["outcome"] = "refused";
            record["reason"] = r.reason;
            code = Exit::negative;
        }
    };

    if (a.large) {
        const auto result = construct_large_n(s, static_cast<int>(s.k()), a.budget);
        if (const auto* ok = std::get_if<LargeSuccess>(&result)) {
            const auto& sched = ok->schedule;
            std::cout << "schedule: n0 = " << sched.n0 << ", threshold " << sched.threshold << ", "
                      << sched.blocks.size() << " blocks peeled, surplus " << sched.surplus << " (need "
                      << sched.surplus_needed << ")\n";
            report_success(ok->result);
            record["n0"] = sched.n0;
            record["blocks"] = sched.blocks;
        }
        else {
            std::visit([&](const auto& r) {
                if constexpr (!std::is_same_v<std::decay_t<decltype(r)>, LargeSuccess>)
                    report_other(r);
            }, result);
        }
    }
    else {
        CutOptions options;
        options.strategy = *strategy;
        options.budget = a.budget;
        options.trace = a.trace ? TraceMode::full : TraceMode::none;
        const auto result = run_cut_algorithm(s, options);
        if (const auto* ok = std::get_if<CutSuccess>(&result))
            report_success(*ok);
        else
            std::visit([&](const auto& r) {
                if constexpr (!std::is_same_v<std::decay_t<decltype(r)>, CutSuccess>)
                    report_other(r);
            }, result);
    }
    rec.add(record);
    rec.summary(record["outcome"].get<std::string>());
    rec.finish();
    return code;
}

int run_validate(const ValidateArgs& a, const Common& c, const Args& argv)
{
    const std::string text = read_text_file(a.file);
    Recorder rec("validate", argv);
    rec.set_out(c.out);

    std::string verdict;
    bool valid = false;
    try {
        const auto cert = read_certificate(text);
        const auto coloring = coloring_of(cert);
        const auto s = validate(cert.n, cert.sequence);
        if (static_cast<std::size_t>(cert.k) != cert.sequence.size())
            throw CertificateError("k = " + std::to_string(cert.k) + " but the sequence has " +
                                   std::to_string(cert.sequence.size()) + " entries");
        const auto result = verify_certificate(coloring, s);
        valid = is_ok(result);
        verdict = valid ? "valid Gallai certificate for " + on_kn(s) : "INVALID certificate: " + describe(result);
    }
    catch (const CertificateError& e) {
        verdict = std::string("INVALID certificate: ") + e.what();
    }
    catch (const SequenceError& e) {
        verdict = std::string("INVALID certificate: ") + e.what();
    }
    std::cout << verdict << '\n';
    rec.add({{"command", "validate"}, {"file", a.file}, {"valid", valid}, {"detail", verdict}});
    rec.summary(verdict);
    rec.finish();
    return valid ? Exit::ok : Exit::negative;
}

int run_sweep(const SweepArgs& a, const Common& c, const Args& argv)
{
    MemoStore memo;
    CacheSession cache(memo);
    SweepOptions options;
    options.jobs = c.jobs;
    options.verify_witnesses = !a.no_verify;
    const auto report = sweep(a.n, a.k, memo, options);

    std::cout << "sweep n=" << a.n << " k=" << a.k << ": " << report.checked << " sequences, "
              << report.witnesses_verified << " witnesses verified, " << report.non_g.size()
              << " not G-sequences\n";
    auto list = ordered_json::array();
    for (const auto& s : report.non_g) {
        std::cout << "  " << to_string(s) << '\n';
        list.push_back(s.counts);
    }
    Recorder rec("sweep", argv);
    rec.set_out(c.out);
    rec.add({{"command", "sweep"}, {"n", a.n}, {"k", a.k}, {"checked", report.checked},
             {"witnesses_verified", report.witnesses_verified}, {"non_g", list}});
    rec.summary(std::to_string(report.non_g.size()) + " non-G sequences");
    rec.finish();
    return Exit::ok;
}

int run_gtable(const GtableArgs& a, const Common& c, const Args& argv)
{
    MemoStore memo;
    CacheSession cache(memo);
    SweepOptions options;
    options.jobs = c.jobs;
    Recorder rec("gtable", argv);
    rec.set_out(c.out);

    std::cout << std::left << std::setw(4) << "k" << std::setw(10) << "g(k)" << "largest non-G level\n";
    for (int k = 2; k <= a.kmax; ++k) {
        const auto r = g_of_k(k, a.nmax, memo, options);
        std::ostringstream g;
        if (r.g)
            g << *r.g;
        else
            g << ">= " << r.lower_evidence;
        std::string level = "-";
        if (r.last_non_g)
            level = on_kn(*r.last_non_g);
        std::cout << std::left << std::setw(4) << k << std::setw(10) << g.str() << level << '\n';
        ordered_json row{{"command", "gtable"}, {"k", k}, {"nmax", a.nmax}};
        if (r.g)
            row["g"] = *r.g;
        else
            row["g_at_least"] = r.lower_evidence;
        if (r.last_non_g)
            row["witness"] = {{"n", r.last_non_g->n}, {"sequence", r.last_non_g->counts}};
        rec.add(row);
    }
    rec.summary("k = 2.." + std::to_string(a.kmax));
    rec.finish();
    return Exit::ok;
}

namespace {

    ordered_json report_json(const BoundReport& r)
    {
        auto checks = ordered_json::array();
        for (const auto& ch : r.checks)
            checks.push_back({{"name", ch.name}, {"pass", ch.pass}, {"detail", ch.detail}});
        return {{"k", r.k}, {"alpha", r.alpha}, {"lower", r.lower}, {"lower_source", r.lower_source},
                {"lower_strict", r.lower_strict}, {"upper", r.upper}, {"n0", r.n0}, {"checks", checks}};
    }

} // namespace

int run_bounds(const BoundsArgs& a, const Common& c, const Args& argv)
{
    std::optional<std::int64_t> exact;
    if (a.k <= 5) {
        MemoStore memo;
        CacheSession cache(memo);
        const auto r = g_of_k(static_cast<int>(a.k), static_cast<int>(2 * a.k + 2), memo);
        if (r.g)
            exact = *r.g;
    }
    Step2Options step2;
    step2.full_range = a.full_range;
    const auto r = g_bracket(a.k, a.alpha, exact, step2);

    std::cout << std::left;
    std::cout << std::setw(8) << "k" << r.k << '\n';
    std::cout << std::setw(8) << "alpha" << r.alpha << '\n';
    std::cout << std::setw(8) << "lower" << r.lower << (r.lower_strict ? " (g(k) > lower, " : " (")
              << r.lower_source << ")\n";
    std::cout << std::setw(8) << "upper" << r.upper << " (n0 = " << r.n0 << ")\n";
    std::cout << "checks\n";
    for (const auto& ch : r.checks)
        std::cout << "  " << std::setw(22) << ch.name << std::setw(6) << (ch.pass ? "pass" : "FAIL") << ch.detail
                  << '\n';

    Recorder rec("bounds", argv);
    rec.set_out(c.out);
    ordered_json j{{"command", "bounds"}};
    j.update(report_json(r));
    rec.add(j);
    rec.summary("[" + std::to_string(r.lower) + ", " + std::to_string(r.upper) + "]");
    rec.finish();
    return Exit::ok;
}

int run_bounds_sweep(const BoundsSweepArgs& a, const Common& c, const Args& argv)
{
    if (a.kmax < a.kmin)
        throw std::invalid_argument("--kmax must be at least --kmin");
    std::vector<std::int64_t> ks;
    for (std::int64_t k = a.kmin; k <= a.kmax; k += a.step)
        ks.push_back(k);
    std::vector<BoundReport> reports(ks.size());
    std::vector<Count> fs(ks.size(), 0);

    const int jobs = std::max(1, c.jobs);
    auto work = [&](int t) {
        for (std::size_t i = static_cast<std::size_t>(t); i < ks.size(); i += static_cast<std::size_t>(jobs)) {
            reports[i] = g_bracket(ks[i], a.alpha);
            try {
                fs[i] = evaluate_lower_instance(ks[i], a.alpha).f;
            }
            catch (const std::overflow_error&) {
                fs[i] = -1;
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < jobs; ++t)
        pool.emplace_back(work, t);
    work(0);
    for (auto& th : pool)
        th.join();

    Recorder rec("bounds-sweep", argv);
    rec.set_out(c.out);
    std::cout << std::right << std::setw(10) << "k" << std::setw(14) << "f" << std::setw(14) << "lower"
              << std::setw(14) << "source" << std::setw(14) << "upper" << std::setw(8) << "n0" << std::setw(12)
              << "n0/sqrt3k" << '\n';
    for (std::size_t i = 0; i < ks.size(); ++i) {
        const auto& r = reports[i];
        const double ratio = static_cast<double>(r.n0) / std::sqrt(3.0 * static_cast<double>(r.k));
        std::cout << std::setw(10) << r.k << std::setw(14) << fs[i] << std::setw(14) << r.lower << std::setw(14)
                  << r.lower_source << std::setw(14) << r.upper << std::setw(8) << r.n0 << std::setw(12)
                  << std::fixed << std::setprecision(6) << ratio << '\n';
        ordered_json j{{"command", "bounds-sweep"}, {"f", fs[i]}};
        j.update(report_json(r));
        rec.add(j);
    }
    rec.summary(std::to_string(ks.size()) + " rows");
    rec.finish();
    return Exit::ok;
}

} // namespace gallai::cli
