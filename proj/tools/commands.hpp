#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gallai::cli {

struct Common {
    std::optional<std::string> out;
    int jobs = 1;
};

struct DecideArgs {
    int n = 0;
    std::string seq;
    std::optional<std::string> witness;
    int scale_cap = 12;
    bool no_pruning = false;
};

struct ColorArgs {
    int n = 0;
    std::string seq;
    std::string strategy = "greedy_largest";
    std::size_t budget = 1'000'000;
    std::optional<std::string> trace;
    std::optional<std::string> cert;
    bool large = false;
};

struct ValidateArgs {
    std::string file;
};

struct SweepArgs {
    int n = 0;
    int k = 0;
    bool no_verify = false;
};

struct GtableArgs {
    int kmax = 0;
    int nmax = 0;
};

struct BoundsArgs {
    std::int64_t k = 0;
    double alpha = 0.5;
    bool full_range = false;
};

struct BoundsSweepArgs {
    std::int64_t kmin = 0;
    std::int64_t kmax = 0;
    std::int64_t step = 1;
    double alpha = 0.5;
};

struct ReproArgs {
    std::string id;
};

using Args = std::vector<std::string>;

int run_decide(const DecideArgs& a, const Common& c, const Args& argv);
int run_color(const ColorArgs& a, const Common& c, const Args& argv);
int run_validate(const ValidateArgs& a, const Common& c, const Args& argv);
int run_sweep(const SweepArgs& a, const Common& c, const Args& argv);
int run_gtable(const GtableArgs& a, const Common& c, const Args& argv);
int run_bounds(const BoundsArgs& a, const Common& c, const Args& argv);
int run_bounds_sweep(const BoundsSweepArgs& a, const Common& c, const Args& argv);
int run_repro(const ReproArgs& a, const Common& c, const Args& argv);

std::vector<std::string> repro_ids();

} // namespace gallai::cli
