#include "gallai/cut_engine.hpp"
#include "gallai/exact.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

using namespace gallai;

namespace {

GallaiSequence seq(int n, std::vector<Count> c) { return validate(n, c); }

bool yes(int n, std::vector<Count> c, ExactOptions o = {})
{
    MemoStore memo;
    ExactDecider d(memo, o);
    const auto s = seq(n, c);
    const auto v = d.decide(s);
    if (v.yes()) {
        REQUIRE(v.witness.has_value());
        CHECK(is_ok(verify_certificate(*v.witness, s)));
        CHECK(v.witness->k() == static_cast<int>(s.k()));
    }
    else {
        CHECK_FALSE(v.witness.has_value());
    }
    return v.yes();
}

std::set<std::vector<Count>> non_g(int n, int k, int jobs = 1)
{
    MemoStore memo;
    SweepOptions o;
    o.jobs = jobs;
    const auto r = sweep(n, k, memo, o);
    CHECK(r.witnesses_verified + r.non_g.size() == r.checked);
    std::set<std::vector<Count>> out;
    for (const auto& s : r.non_g)
        out.insert(s.counts);
    return out;
}

} // namespace

TEST_CASE("fixed verdicts")
{
    CHECK_FALSE(yes(6, {7, 4, 2, 2}));
    CHECK_FALSE(yes(7, {9, 4, 4, 4}));
    CHECK_FALSE(yes(9, {12, 6, 6, 6, 6}));
    CHECK(yes(5, {8, 1, 1}));
    CHECK_FALSE(yes(4, {2, 2, 2}));
    CHECK_FALSE(yes(3, {1, 1, 1}));
    CHECK(yes(1, {0}));
    CHECK(yes(2, {1, 0}));
    for (int n = 1; n <= 12; ++n)
        CHECK(yes(n, {edge_count(n)}));
    CHECK(yes(10, {25, 5, 5, 5, 5}));
    CHECK(yes(5, {8, 1, 1, 0, 0}));
}

TEST_CASE("scale cap")
{
    MemoStore memo;
    ExactDecider d(memo);
    CHECK_THROWS_AS(d.decide(seq(13, {78})), ScaleCapExceeded);
    ExactOptions wide;
    wide.scale_cap = 13;
    ExactDecider d13(memo, wide);
    CHECK(d13.decide(seq(13, {78})).yes());
    CHECK_THROWS_AS(sweep(13, 2, memo), ScaleCapExceeded);
}

TEST_CASE("small sweeps")
{
    CHECK(non_g(3, 3) == std::set<std::vector<Count>>{{1, 1, 1}});
    CHECK(non_g(4, 3) == std::set<std::vector<Count>>{{2, 2, 2}});
    CHECK(non_g(5, 3).empty());
    CHECK(non_g(6, 4) == std::set<std::vector<Count>>{{7, 4, 2, 2}, {7, 3, 3, 2}, {6, 3, 3, 3}, {4, 4, 4, 3}});
    CHECK(non_g(7, 4) == std::set<std::vector<Count>>{{9, 4, 4, 4}});
    CHECK(non_g(8, 4).empty());
    CHECK(non_g(9, 5).count({12, 6, 6, 6, 6}) == 1);
}

TEST_CASE("parallel sweeps agree with serial ones")
{
    MemoStore a, b;
    SweepOptions serial, parallel;
    parallel.jobs = 4;
    const auto r1 = sweep(9, 5, a, serial);
    const auto r2 = sweep(9, 5, b, parallel);
    CHECK(r1.non_g == r2.non_g);
    CHECK(r1.checked == r2.checked);
    CHECK(r1.witnesses_verified == r2.witnesses_verified);
}

TEST_CASE("g(k) by downward sweeps")
{
    MemoStore memo;
    CHECK(g_of_k(3, 8, memo).g == 5);
    CHECK(g_of_k(4, 9, memo).g == 8);
    const auto g5 = g_of_k(5, 11, memo);
    CHECK(g5.g == 10);
    CHECK(g5.checked_from == 9);
    REQUIRE(g5.last_non_g.has_value());
    CHECK(g5.last_non_g->n == 9);
    const auto capped = g_of_k(4, 7, memo);
    CHECK_FALSE(capped.g.has_value());
    CHECK(capped.lower_evidence == 8);
}

TEST_CASE("decide agrees with exhaustive search on tiny cases")
{
    for (int n = 2; n <= 5; ++n)
        for (int k = 1; k <= 3; ++k)
            for (const auto& s : all_sequences(n, k, true)) {
                MemoStore memo;
                ExactDecider d(memo);
                const auto truth = tiny_oracle(s);
                CHECK_MESSAGE(d.decide(s).yes() == truth.yes(), to_string(s));
                if (truth.yes()) {
                    REQUIRE(truth.witness.has_value());
                    CHECK(is_ok(verify_certificate(*truth.witness, s)));
                }
            }
    MemoStore memo;
    ExactDecider d(memo);
    CHECK(tiny_oracle(seq(5, {4, 3, 3})).yes() == d.decide(seq(5, {4, 3, 3})).yes());
    CHECK_FALSE(tiny_oracle(seq(4, {2, 2, 2})).yes());
    CHECK_FALSE(tiny_oracle(seq(3, {1, 1, 1})).yes());
    CHECK_THROWS_AS(tiny_oracle(seq(7, {7, 7, 7})), ScaleCapExceeded);
}

TEST_CASE("connected-base pruning never changes a verdict")
{
    ExactOptions pruned;
    ExactOptions plain;
    plain.base_color_pruning = false;
    plain.constructive_first = false;
    for (int n = 2; n <= 7; ++n)
        for (int k = 1; k <= 7; ++k) {
            MemoStore m1, m2;
            ExactDecider d1(m1, pruned), d2(m2, plain);
            for (const auto& s : all_sequences(n, k, true)) {
                const auto a = d1.decide(s);
                const auto b = d2.decide(s);
                CHECK_MESSAGE(a.yes() == b.yes(), to_string(s));
                if (b.yes())
                    CHECK(is_ok(verify_certificate(*b.witness, s)));
            }
        }
}

TEST_CASE("cut success implies a yes verdict")
{
    MemoStore memo;
    ExactDecider d(memo);
    int successes = 0;
    for (int n = 3; n <= 9; ++n)
        for (int k = 2; k <= 5; ++k)
            for (const auto& s : all_sequences(n, k, true)) {
                const auto r = run_cut_algorithm(s);
                if (std::holds_alternative<CutSuccess>(r)) {
                    ++successes;
                    CHECK_MESSAGE(d.decide(s, false).yes(), to_string(s));
                }
            }
    CHECK(successes > 100);
}

TEST_CASE("verdicts depend only on the canonical key")
{
    std::mt19937 rng(29);
    MemoStore memo;
    ExactDecider d(memo);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 7);
        const int k = 2 + static_cast<int>(rng() % 4);
        auto all = all_sequences(n, k, true);
        if (all.empty())
            continue;
        const auto& s = all[rng() % all.size()];
        auto raw = s.counts;
        raw.push_back(0);
        std::shuffle(raw.begin(), raw.end(), rng);
        const auto padded = validate(n, raw);
        const auto a = d.decide(s);
        const auto b = d.decide(padded);
        CHECK(a.yes() == b.yes());
        if (b.yes())
            CHECK(is_ok(verify_certificate(*b.witness, padded)));
    }
}

TEST_CASE("shared memo gives the same verdicts as cold runs in any order")
{
    auto seqs = all_sequences(8, 4, true);
    auto more = all_sequences(7, 4, true);
    seqs.insert(seqs.end(), more.begin(), more.end());
    std::vector<bool> cold;
    for (const auto& s : seqs) {
        MemoStore m;
        ExactDecider d(m);
        cold.push_back(d.decide(s, false).yes());
    }
    std::mt19937 rng(31);
    for (int round = 0; round < 3; ++round) {
        std::vector<std::size_t> order(seqs.size());
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        MemoStore shared;
        ExactDecider d(shared);
        for (std::size_t i : order)
            CHECK(d.decide(seqs[i], round == 1).yes() == cold[i]);
    }
}

TEST_CASE("memo store persistence")
{
    MemoStore memo;
    ExactDecider d(memo);
    for (const auto& s : all_sequences(7, 4, true))
        d.decide(s, false);
    std::ostringstream out;
    memo.save(out);
    const std::string text = out.str();
    CHECK(text.rfind(MemoStore::format_tag, 0) == 0);
    CHECK(text.find("7:9,4,4,4 NO") != std::string::npos);

    MemoStore back;
    std::istringstream in(text);
    CHECK_FALSE(back.load(in).has_value());
    CHECK(back.size() == memo.size());
    std::ostringstream again;
    back.save(again);
    CHECK(again.str() == text);

    // verdicts loaded without witnesses still produce verified witnesses
    ExactDecider fresh(back);
    const auto s = seq(7, {12, 3, 3, 3});
    const auto v = fresh.decide(s);
    REQUIRE(v.yes());
    CHECK(is_ok(verify_certificate(*v.witness, s)));
    CHECK(fresh.stats().memo_hits > 0);
}

TEST_CASE("corrupt or foreign caches are rejected without side effects")
{
    for (const std::string& bad : {std::string("# gallai-memo v0\n7:21 YES\n"), std::string("garbage"),
                                  std::string("# gallai-memo v1\n7:20 YES\n"),
                                  std::string("# gallai-memo v1\n7:21 MAYBE\n"),
                                  std::string("# gallai-memo v1\n7:3,18 YES\n"),
                                  std::string("# gallai-memo v1\n6:7,4,2,2 NO\nnonsense\n")}) {
        MemoStore memo;
        std::istringstream in(bad);
        CHECK(memo.load(in).has_value());
        CHECK(memo.size() == 0);
    }
}

TEST_CASE("a witness is never replaced by a bare verdict")
{
    MemoStore memo;
    const SequenceKey key{3, {3}};
    memo.insert(key, {Answer::yes, EdgeColoring(3, 1, {1, 1, 1})});
    memo.insert(key, {Answer::yes, std::nullopt});
    REQUIRE(memo.find(key).has_value());
    CHECK(memo.find(key)->witness.has_value());
}

TEST_CASE("internal edge bound")
{
    CHECK(max_internal_edges(9, 6) == 18);
    CHECK(brute_force_internal(9, 6) == 18);
    CHECK(max_internal_edges(10, 9) == 36);
    CHECK_THROWS_AS(max_internal_edges(10, 5), std::domain_error);
    CHECK_THROWS_AS(max_internal_edges(10, 10), std::domain_error);
    for (int n = 3; n <= 12; ++n)
        for (int j = n / 2 + 1; j < n; ++j)
            CHECK(max_internal_edges(n, j) == brute_force_internal(n, j));
}
