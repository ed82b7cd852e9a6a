#include "commands.hpp"

#include "gallai/bounds.hpp"
#include "gallai/cut_engine.hpp"
#include "gallai/exact.hpp"
#include "support.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

namespace gallai::cli {

namespace {

    struct Context {
        MemoStore& memo;
        int jobs;
        std::vector<std::string> lines;
        bool confirmed = true;

        void say(const std::string& line) { lines.push_back(line); }
        void expect(bool ok, const std::string& what)
        {
            say(std::string(ok ? "ok    " : "FAIL  ") + what);
            confirmed = confirmed && ok;
        }
        SweepReport sweep_level(int n, int k)
        {
            SweepOptions o;
            o.jobs = jobs;
            return sweep(n, k, memo, o);
        }
    };

    std::set<std::vector<Count>> as_set(const SweepReport& r)
    {
        std::set<std::vector<Count>> out;
        for (const auto& s : r.non_g)
            out.insert(s.counts);
        return out;
    }

    std::string list(const SweepReport& r)
    {
        if (r.non_g.empty())
            return "none";
        std::string out;
        for (const auto& s : r.non_g)
            out += (out.empty() ? "" : " ") + to_string(s);
        return out;
    }

    void expect_empty(Context& cx, int n, int k)
    {
        const auto r = cx.sweep_level(n, k);
        cx.expect(r.non_g.empty() && r.witnesses_verified == r.checked,
                  "(" + std::to_string(n) + "," + std::to_string(k) + "): " + std::to_string(r.checked) +
                      " sequences, all realized, " + std::to_string(r.witnesses_verified) + " witnesses verified");
    }

    void expect_exact(Context& cx, int n, int k, const std::set<std::vector<Count>>& want)
    {
        const auto r = cx.sweep_level(n, k);
        cx.expect(as_set(r) == want && r.non_g.size() == want.size(),
                  "(" + std::to_string(n) + "," + std::to_string(k) + ") non-G sequences: " + list(r));
    }

    void repro_g3(Context& cx)
    {
        const auto r4 = cx.sweep_level(4, 3);
        const auto has = as_set(r4).count({2, 2, 2}) == 1;
        cx.expect(has, "(4,3) non-G sequences: " + list(r4));
        const auto brute = tiny_oracle(validate(4, std::vector<Count>{2, 2, 2}));
        cx.expect(!brute.yes(), "exhaustive search finds no Gallai coloring of K_4 with (2,2,2)");
        for (int n = 5; n <= 7; ++n)
            expect_empty(cx, n, 3);
        if (cx.confirmed)
            cx.say("g(3)=5 confirmed over n∈[4,7]");
    }

    const std::set<std::vector<Count>> kSix4{{7, 4, 2, 2}, {7, 3, 3, 2}, {6, 3, 3, 3}, {4, 4, 4, 3}};
    const std::set<std::vector<Count>> kSeven4{{9, 4, 4, 4}};

    void repro_g4(Context& cx)
    {
        expect_exact(cx, 7, 4, kSeven4);
        expect_empty(cx, 8, 4);
        expect_empty(cx, 9, 4);
        if (cx.confirmed)
            cx.say("g(4)=8 confirmed over n∈[7,9]");
    }

    void repro_g5(Context& cx)
    {
        ExactDecider d(cx.memo);
        const auto s = validate(9, std::vector<Count>{12, 6, 6, 6, 6});
        cx.expect(!d.decide(s, false).yes(), "(12,6,6,6,6) on K_9 is NOT a G-sequence");
        const auto r9 = cx.sweep_level(9, 5);
        cx.expect(as_set(r9).count(s.counts) == 1,
                  "(9,5): (12,6,6,6,6) among " + std::to_string(r9.non_g.size()) + " non-G sequences");
        expect_empty(cx, 10, 5);
        expect_empty(cx, 11, 5);
        if (cx.confirmed)
            cx.say("g(5)=10 confirmed over n∈[9,11]");
    }

    void repro_example(Context& cx)
    {
        const auto s = validate(8, std::vector<Count>{14, 8, 3, 3});
        CutOptions o;
        o.strategy = Strategy::paper_order;
        const auto r = run_cut_algorithm(s, o);
        const auto* ok = std::get_if<CutSuccess>(&r);
        cx.expect(ok != nullptr, "paper_order cut search colors (14,8,3,3) on K_8");
        if (!ok)
            return;
        const bool node = std::any_of(ok->trace.nodes.begin(), ok->trace.nodes.end(), [](const TraceNode& t) {
            return t.components == std::vector<int>{6, 2} && t.residual == std::vector<Count>{2, 8, 3, 3};
        });
        cx.expect(node, "trace passes through {K_6, K_2} with residual (2,8,3,3)");
        for (const auto& cut : ok->path)
            cx.say("      K_" + std::to_string(cut.component) + " -> K_" + std::to_string(cut.first) + " + K_" +
                   std::to_string(cut.second) + ", color " + std::to_string(cut.color));
        cx.expect(is_ok(verify_certificate(ok->coloring, s)), "certificate verifies");
    }

    void repro_boundcomp(Context& cx)
    {
        int cases = 0;
        bool all = true;
        for (int n = 3; n <= 12; ++n)
            for (int j = n / 2 + 1; j < n; ++j) {
                ++cases;
                all = all && max_internal_edges(n, j) == brute_force_internal(n, j);
            }
        cx.expect(all, "C(j,2)+C(n-j,2) is the most internal edges with parts <= j, " + std::to_string(cases) +
                           " cases with 3 <= n <= 12");
    }

    void repro_lb_family(Context& cx)
    {
        Step2Options step2;
        step2.grid_points = 64;
        const auto scan = scan_lower_family(10, 1'000'000, 0.5, step2, cx.jobs);
        cx.expect(scan.identity_failures == 0, "sum, range and a < b^2/9 identities hold wherever non-degenerate");
        cx.say("      degenerate instances: " + std::to_string(scan.degenerate) + ", largest at k = " +
               (scan.largest_degenerate ? std::to_string(*scan.largest_degenerate) : "-"));
        cx.expect(scan.k_star.has_value(), "construction certifies g(k) > f(k) for every k in [" +
                                               (scan.k_star ? std::to_string(*scan.k_star) : "?") +
                                               ", 1000000] at alpha = 1/2");
    }

    void repro_ub_n0(Context& cx)
    {
        bool positive = true;
        bool sign_change = true;
        for (std::int64_t k = 2; k <= 1'000'000; ++k) {
            const auto u = upper_bound_n0(k);
            positive = positive && u.value_at_witness > 0;
            sign_change = sign_change && u.value_before <= 0 && u.value_at_n0 > 0;
        }
        cx.expect(positive, "surplus cubic positive at ceil(2 sqrt k) for every k in [2, 1000000]");
        cx.expect(sign_change, "least positive n0 brackets a sign change for every k");
        double prev = 1e9;
        bool decreasing = true;
        for (std::int64_t k = 100; k <= 1'000'000; k *= 10) {
            const auto u = upper_bound_n0(k);
            const double ratio = static_cast<double>(u.n0) / std::sqrt(3.0 * static_cast<double>(k));
            std::ostringstream line;
            line << "      k = " << k << ": n0 = " << u.n0 << ", n0/sqrt(3k) = " << ratio;
            cx.say(line.str());
            decreasing = decreasing && ratio < prev;
            prev = ratio;
        }
        cx.expect(decreasing && prev <= 1.35, "n0/sqrt(3k) decreases across decades and ends <= 1.35");
        bool peel = true;
        for (Count k = 2; k <= 12; ++k) {
            for (Count j = 1; j <= 6; ++j)
                peel = peel && peel_always_funded(2 * k * j - j + 1, k, j);
            peel = peel && ceil_average_at_star_threshold(k) == 2 * k - 2;
        }
        cx.expect(peel, "peeling arithmetic for k in [2,12], j in [1,6]");
    }

    const std::map<std::string, std::function<void(Context&)>>& table()
    {
        static const std::map<std::string, std::function<void(Context&)>> t{
            {"g3", repro_g3},
            {"g4", repro_g4},
            {"g5", repro_g5},
            {"lemma-6-4", [](Context& cx) { expect_exact(cx, 6, 4, kSix4); }},
            {"lemma-7-4", [](Context& cx) { expect_exact(cx, 7, 4, kSeven4); }},
            {"example-1", repro_example},
            {"boundcomp", repro_boundcomp},
            {"lb-family", repro_lb_family},
            {"ub-n0", repro_ub_n0},
        };
        return t;
    }

} // namespace

std::vector<std::string> repro_ids()
{
    std::vector<std::string> ids;
    for (const auto& [id, fn] : table())
        ids.push_back(id);
    return ids;
}

int run_repro(const ReproArgs& a, const Common& c, const Args& argv)
{
    MemoStore memo;
    CacheSession cache(memo);
    Context cx{memo, std::max(1, c.jobs), {}};
    table().at(a.id)(cx);
    for (const auto& line : cx.lines)
        std::cout << line << '\n';

    Recorder rec("repro", argv);
    rec.set_out(c.out);
    rec.add({{"command", "repro"}, {"id", a.id}, {"confirmed", cx.confirmed}, {"lines", cx.lines}});
    rec.summary(cx.confirmed ? "confirmed" : "NOT confirmed");
    rec.finish();
    return cx.confirmed ? Exit::ok : Exit::negative;
}

} // namespace gallai::cli
