#pragma once

#include "gallai/sequence.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gallai {

class DegenerateInstance : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The large/small two-level sequence on K_f used to show g(k) > f:
/// c copies of a+1, ceil(k/2)-c copies of a, floor(k/2) copies of b.
struct LowerBoundInstance {
    std::int64_t k = 0;
    double alpha = 0;
    Count f = 0;
    Count b = 0;
    Count a = 0;
    Count c = 0;

    bool sum_identity = false;   // c(a+1) + (ceil(k/2)-c)a + floor(k/2)b == C(f,2)
    bool c_in_range = false;     // 0 <= c < ceil(k/2)
    bool a_exceeds_b = false;
    bool a_below_b2_over_9 = false;

    std::int64_t large_slots() const { return (k + 1) / 2; }
    std::int64_t small_slots() const { return k / 2; }
    std::vector<Count> sequence() const;
};

/// Throws DegenerateInstance when f < 2 or a <= b.
LowerBoundInstance build_lower_instance(std::int64_t k, double alpha);

/// Unchecked variant: evaluates every field and flag even for degenerate k.
LowerBoundInstance evaluate_lower_instance(std::int64_t k, double alpha);

struct Step2Options {
    bool full_range = false;
    std::int64_t dense_limit = 100'000;  // ranges up to this many points are checked densely
    std::int64_t grid_points = 2'000;    // log-spaced interior samples otherwise
};

struct Step2Report {
    Count x_first = 0;  // b + 2
    Count x_last = 0;   // f
    std::int64_t points_checked = 0;
    bool sampled = false;
    bool h_non_increasing = true;
    std::optional<Count> first_edge_failure;   // internal-edge inequality violated
    std::optional<Count> first_ratio_failure;  // x > 3h(x) violated
    bool pass() const { return !first_edge_failure && !first_ratio_failure && h_non_increasing; }
};

/// h(x) = ceil(3(a+1)/x)
Count step2_h(const LowerBoundInstance& inst, Count x);

Step2Report check_step2(const LowerBoundInstance& inst, const Step2Options& options = {});

struct Step4Report {
    double lhs = 0;   // (k-2) b
    double rhs = 0;   // 3(a+1) ln k + b^2
    bool pass = false;
    bool exact_fallback = false;
};

/// (k-2)b > 3(a+1) ln k + b^2, decided in floating point with a certified
/// rational fallback when the margin is within 1e-9 relative.
Step4Report check_step4(const LowerBoundInstance& inst, bool force_exact = false);

/// Certified comparison: lhs > coef * ln(k) for integers lhs, coef >= 0, k >= 1.
bool exceeds_coef_ln(Count lhs, Count coef, std::int64_t k);

/// 3 * (-n0^3/3 + k n0^2 + (1/3 - k) n0 - 3k^2 + 7k - 2), exact.
__int128 peel_surplus_poly3(std::int64_t k, std::int64_t n0);

struct UpperBoundN0 {
    std::int64_t k = 0;
    std::int64_t n0 = 0;
    std::int64_t n = 0;                 // 2k(n0+1)
    __int128 value_at_n0 = 0;           // scaled by 3
    __int128 value_before = 0;          // at n0 - 1
    std::int64_t witness_n0 = 0;        // ceil(2 sqrt k)
    __int128 value_at_witness = 0;
};

UpperBoundN0 upper_bound_n0(std::int64_t k);

/// Least q >= 0 with q*q >= num/den style ceilings done exactly.
std::int64_t ceil_sqrt(std::int64_t v);

/// Lower family over a k-range: exact identities everywhere, and the largest
/// failing k of the certification chain (degenerate, step 2 or step 4).
struct FamilyScan {
    std::int64_t kmin = 0;
    std::int64_t kmax = 0;
    std::int64_t degenerate = 0;
    std::optional<std::int64_t> largest_degenerate;
    std::int64_t identity_failures = 0;
    std::optional<std::int64_t> first_identity_failure;
    std::int64_t step2_failures = 0;
    std::int64_t step4_failures = 0;
    std::int64_t step4_exact = 0;              // comparisons settled by the rational fallback
    std::optional<std::int64_t> last_failure;  // largest k not certified
    std::optional<std::int64_t> k_star;        // every k in [k_star, kmax] certified
};

FamilyScan scan_lower_family(std::int64_t kmin, std::int64_t kmax, double alpha, const Step2Options& step2 = {},
                             int jobs = 1);

struct BoundCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct BoundReport {
    std::int64_t k = 0;
    double alpha = 0;
    std::int64_t lower = 0;
    std::string lower_source;   // "construction", "exact", "2k-2"
    bool lower_strict = false;  // true when g(k) > lower is certified
    std::int64_t upper = 0;
    std::int64_t n0 = 0;
    std::vector<BoundCheck> checks;

    bool contains(std::int64_t g) const { return g >= lower && g <= upper; }
};

/// exact_g: a known exact value of g(k) (e.g. from an exhaustive sweep) used
/// as the lower end when the construction does not certify anything larger.
BoundReport g_bracket(std::int64_t k, double alpha, std::optional<std::int64_t> exact_g = std::nullopt,
                      const Step2Options& step2 = {});

} // namespace gallai
