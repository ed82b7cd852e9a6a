#include "gallai/bounds.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <thread>

namespace gallai {

namespace {

    using i128 = __int128;
    using Rational = boost::multiprecision::cpp_rational;

    i128 choose2(i128 m) { return m < 2 ? 0 : m * (m - 1) / 2; }

    i128 floor_div(i128 num, i128 den)
    {
        i128 q = num / den;
        if ((num % den != 0) && ((num < 0) != (den < 0)))
            --q;
        return q;
    }

    i128 ceil_div(i128 num, i128 den) { return -floor_div(-num, den); }

    std::string str128(i128 v)
    {
        if (v == 0)
            return "0";
        const bool neg = v < 0;
        std::string s;
        while (v != 0) {
            const int d = static_cast<int>(v % 10);
            s.push_back(static_cast<char>('0' + (neg ? -d : d)));
            v /= 10;
        }
        if (neg)
            s.push_back('-');
        std::reverse(s.begin(), s.end());
        return s;
    }

    struct Interval {
        Rational lo;
        Rational hi;
    };

    // ln(y) for rational y in [1, 2) via 2*atanh((y-1)/(y+1)); the tail after
    // `terms` terms is at most 2 z^(2N+1) / ((2N+1)(1 - z^2)).
    Interval ln_near_one(const Rational& y, int terms)
    {
        const Rational z = (y - 1) / (y + 1);
        const Rational z2 = z * z;
        Rational power = z;
        Rational sum = 0;
        for (int i = 0; i < terms; ++i) {
            sum += power / (2 * i + 1);
            power *= z2;
        }
        const Rational tail = power / ((2 * terms + 1) * (1 - z2));
        return {2 * sum, 2 * (sum + tail)};
    }

    Interval ln_interval(std::int64_t k, int terms)
    {
        int m = 0;
        while ((std::int64_t{1} << (m + 1)) <= k)
            ++m;
        const Rational y(k, std::int64_t{1} << m);
        const Interval ln2 = ln_near_one(Rational(2), terms); // z = 1/3
        const Interval ly = ln_near_one(y, terms);
        return {ln2.lo * m + ly.lo, ln2.hi * m + ly.hi};
    }

} // namespace

std::vector<Count> LowerBoundInstance::sequence() const
{
    std::vector<Count> out;
    out.reserve(static_cast<std::size_t>(k));
    for (std::int64_t i = 0; i < c; ++i)
        out.push_back(a + 1);
    for (std::int64_t i = c; i < large_slots(); ++i)
        out.push_back(a);
    for (std::int64_t i = 0; i < small_slots(); ++i)
        out.push_back(b);
    return out;
}

std::int64_t ceil_sqrt(std::int64_t v)
{
    if (v <= 0)
        return 0;
    auto q = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
    while (static_cast<i128>(q) * q < v)
        ++q;
    while (q > 0 && static_cast<i128>(q - 1) * (q - 1) >= v)
        --q;
    return q;
}

LowerBoundInstance evaluate_lower_instance(std::int64_t k, double alpha)
{
    if (k < 2)
        throw std::invalid_argument("lower-bound family needs k >= 2");
    if (!(alpha > 0 && alpha <= 1))
        throw std::invalid_argument("alpha must lie in (0, 1]");

    LowerBoundInstance inst;
    inst.k = k;
    inst.alpha = alpha;
    const double kd = static_cast<double>(k);
    inst.f = static_cast<Count>(std::floor(alpha * kd * std::sqrt(kd) / std::log(kd)));

    const i128 pairs = choose2(inst.f);
    if (pairs >= kCountLimit)
        throw std::overflow_error("C(f,2) exceeds 2^62 at k = " + std::to_string(k));

    // ceil(f / sqrt k) is the least q with q^2 k >= f^2.
    const i128 f2 = static_cast<i128>(inst.f) * inst.f;
    const auto q2 = ceil_div(f2, k);
    if (q2 >= kCountLimit)
        throw std::overflow_error("f^2/k exceeds 2^62 at k = " + std::to_string(k));
    inst.b = 3 * ceil_sqrt(static_cast<std::int64_t>(q2));

    const i128 large = inst.large_slots();
    const i128 small = inst.small_slots();
    const i128 a = floor_div(pairs - small * inst.b, large);
    const i128 c = pairs - small * inst.b - a * large;
    inst.a = static_cast<Count>(a);
    inst.c = static_cast<Count>(c);

    inst.sum_identity = c * (a + 1) + (large - c) * a + small * inst.b == pairs;
    inst.c_in_range = c >= 0 && c < large;
    inst.a_exceeds_b = a > inst.b;
    inst.a_below_b2_over_9 = 9 * a < static_cast<i128>(inst.b) * inst.b;
    return inst;
}

LowerBoundInstance build_lower_instance(std::int64_t k, double alpha)
{
    auto inst = evaluate_lower_instance(k, alpha);
    if (inst.f < 2)
        throw DegenerateInstance("k = " + std::to_string(k) + ": f = " + std::to_string(inst.f) + " < 2");
    if (!inst.a_exceeds_b)
        throw DegenerateInstance("k = " + std::to_string(k) + ": a = " + std::to_string(inst.a) +
                                 " does not exceed b = " + std::to_string(inst.b));
    return inst;
}

Count step2_h(const LowerBoundInstance& inst, Count x)
{
    return static_cast<Count>(ceil_div(3 * (static_cast<i128>(inst.a) + 1), x));
}

Step2Report check_step2(const LowerBoundInstance& inst, const Step2Options& options)
{
    Step2Report r;
    r.x_first = inst.b + 2;
    r.x_last = inst.f;
    if (r.x_first > r.x_last)
        return r;

    const i128 a1 = static_cast<i128>(inst.a) + 1;
    std::optional<Count> prev_h;
    auto visit = [&](Count x) {
        ++r.points_checked;
        const Count h = step2_h(inst, x);
        if (prev_h && h > *prev_h)
            r.h_non_increasing = false;
        prev_h = h;
        const bool edge_ok = h <= x && choose2(x) - 2 * a1 > choose2(x - h) + choose2(h);
        if (!edge_ok && !r.first_edge_failure)
            r.first_edge_failure = x;
        if (!(x > 3 * h) && !r.first_ratio_failure)
            r.first_ratio_failure = x;
    };

    const Count span = r.x_last - r.x_first + 1;
    if (options.full_range || span <= options.dense_limit) {
        for (Count x = r.x_first; x <= r.x_last; ++x)
            visit(x);
        return r;
    }

    r.sampled = true;
    const double lo = std::log(static_cast<double>(r.x_first));
    const double hi = std::log(static_cast<double>(r.x_last));
    Count last = r.x_first;
    visit(last);
    for (std::int64_t i = 1; i < options.grid_points; ++i) {
        const double t = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(options.grid_points);
        const auto x = std::clamp(static_cast<Count>(std::llround(std::exp(t))), r.x_first, r.x_last);
        if (x <= last || x == r.x_last)
            continue;
        visit(x);
        last = x;
    }
    visit(r.x_last);
    return r;
}

bool exceeds_coef_ln(Count lhs, Count coef, std::int64_t k)
{
    if (k < 1 || coef < 0)
        throw std::invalid_argument("exceeds_coef_ln needs k >= 1 and coef >= 0");
    if (lhs <= 0)
        return false;
    if (coef == 0 || k == 1)
        return true;
    // ln k is irrational for k >= 2, so some finite precision separates the sides.
    for (int terms = 20;; terms *= 2) {
        const auto ln = ln_interval(k, terms);
        if (Rational(lhs) > Rational(coef) * ln.hi)
            return true;
        if (Rational(lhs) <= Rational(coef) * ln.lo)
            return false;
    }
}

Step4Report check_step4(const LowerBoundInstance& inst, bool force_exact)
{
    Step4Report r;
    const double kd = static_cast<double>(inst.k);
    const double bd = static_cast<double>(inst.b);
    r.lhs = (kd - 2) * bd;
    r.rhs = 3 * (static_cast<double>(inst.a) + 1) * std::log(kd) + bd * bd;

    const double margin = std::abs(r.lhs - r.rhs);
    const double scale = std::max(std::abs(r.lhs), std::abs(r.rhs));
    if (!force_exact && margin > 1e-9 * scale) {
        r.pass = r.lhs > r.rhs;
        return r;
    }
    r.exact_fallback = true;
    const i128 integer_part = static_cast<i128>(inst.k - 2) * inst.b - static_cast<i128>(inst.b) * inst.b;
    const i128 coef = 3 * (static_cast<i128>(inst.a) + 1);
    if (integer_part >= kCountLimit || coef >= kCountLimit)
        throw std::overflow_error("step-4 operands exceed 2^62");
    r.pass = integer_part > 0 && exceeds_coef_ln(static_cast<Count>(integer_part), static_cast<Count>(coef), inst.k);
    return r;
}

__int128 peel_surplus_poly3(std::int64_t k, std::int64_t n0)
{
    const i128 K = k;
    const i128 x = n0;
    return -x * x * x + 3 * K * x * x + (1 - 3 * K) * x - 9 * K * K + 21 * K - 6;
}

UpperBoundN0 upper_bound_n0(std::int64_t k)
{
    if (k < 2)
        throw std::invalid_argument("upper_bound_n0 needs k >= 2");
    UpperBoundN0 r;
    r.k = k;
    // The cubic increases on [1, 2k-1], and is non-positive at 1, so the least
    // positive point is found by walking from just below sqrt(3k).
    std::int64_t x = std::max<std::int64_t>(1, ceil_sqrt(3 * k) - 2);
    while (x > 1 && peel_surplus_poly3(k, x - 1) > 0)
        --x;
    while (peel_surplus_poly3(k, x) <= 0)
        ++x;
    r.n0 = x;
    r.n = 2 * k * (x + 1);
    r.value_at_n0 = peel_surplus_poly3(k, x);
    r.value_before = peel_surplus_poly3(k, x - 1);
    r.witness_n0 = ceil_sqrt(4 * k);
    r.value_at_witness = peel_surplus_poly3(k, r.witness_n0);
    return r;
}

BoundReport g_bracket(std::int64_t k, double alpha, std::optional<std::int64_t> exact_g, const Step2Options& step2)
{
    BoundReport r;
    r.k = k;
    r.alpha = alpha;

    const auto ub = upper_bound_n0(k);
    r.n0 = ub.n0;
    r.upper = ub.n;
    r.checks.push_back({"n0-sign-change", ub.value_before <= 0 && ub.value_at_n0 > 0,
                        "3*P(n0-1) = " + str128(ub.value_before) + ", 3*P(n0) = " + str128(ub.value_at_n0)});
    r.checks.push_back({"n0-witness-positive", ub.value_at_witness > 0,
                        "3*P(" + std::to_string(ub.witness_n0) + ") = " + str128(ub.value_at_witness)});

    bool certified = false;
    Count f = 0;
    try {
        const auto inst = build_lower_instance(k, alpha);
        f = inst.f;
        const bool identities = inst.sum_identity && inst.c_in_range && inst.a_below_b2_over_9;
        std::ostringstream ident;
        ident << "f=" << inst.f << " a=" << inst.a << " b=" << inst.b << " c=" << inst.c;
        r.checks.push_back({"construction", identities, ident.str()});

        const auto s2 = check_step2(inst, step2);
        std::ostringstream d2;
        d2 << "x in [" << s2.x_first << ", " << s2.x_last << "], " << s2.points_checked << " points"
           << (s2.sampled ? " (sampled)" : "");
        if (s2.first_edge_failure)
            d2 << ", internal-edge bound fails at x=" << *s2.first_edge_failure;
        if (s2.first_ratio_failure)
            d2 << ", x > 3h(x) fails at x=" << *s2.first_ratio_failure;
        r.checks.push_back({"largest-component", s2.pass(), d2.str()});

        const auto s4 = check_step4(inst);
        std::ostringstream d4;
        d4.precision(12);
        d4 << "lhs=" << s4.lhs << " rhs=" << s4.rhs << (s4.exact_fallback ? " (exact)" : "");
        r.checks.push_back({"contradiction", s4.pass, d4.str()});

        certified = identities && s2.pass() && s4.pass;
    }
    catch (const DegenerateInstance& e) {
        r.checks.push_back({"construction", false, e.what()});
    }
    catch (const std::overflow_error& e) {
        r.checks.push_back({"construction", false, e.what()});
    }

    if (certified) {
        r.lower = f;
        r.lower_source = "construction";
        r.lower_strict = true;
    }
    else {
        r.lower = 2 * k - 2;
        r.lower_source = "2k-2";
        if (exact_g && *exact_g > r.lower) {
            r.lower = *exact_g;
            r.lower_source = "exact";
        }
    }
    return r;
}

FamilyScan scan_lower_family(std::int64_t kmin, std::int64_t kmax, double alpha, const Step2Options& step2, int jobs)
{
    if (kmin < 2 || kmax < kmin)
        throw std::invalid_argument("scan_lower_family needs 2 <= kmin <= kmax");
    jobs = std::max(1, jobs);
    std::vector<FamilyScan> partial(static_cast<std::size_t>(jobs));

    // Worker t takes k = kmin + t, kmin + t + jobs, ...
    auto work = [&](int t) {
        FamilyScan& r = partial[static_cast<std::size_t>(t)];
        for (std::int64_t k = kmin + t; k <= kmax; k += jobs) {
            const auto inst = evaluate_lower_instance(k, alpha);
            const bool degenerate = inst.f < 2 || !inst.a_exceeds_b;
            if (degenerate) {
                ++r.degenerate;
                r.largest_degenerate = std::max(r.largest_degenerate.value_or(k), k);
                r.last_failure = std::max(r.last_failure.value_or(k), k);
                continue;
            }
            if (!(inst.sum_identity && inst.c_in_range && inst.a_below_b2_over_9)) {
                ++r.identity_failures;
                r.first_identity_failure = std::min(r.first_identity_failure.value_or(k), k);
            }
            const bool s2 = check_step2(inst, step2).pass();
            const auto s4 = check_step4(inst);
            r.step2_failures += s2 ? 0 : 1;
            r.step4_failures += s4.pass ? 0 : 1;
            r.step4_exact += s4.exact_fallback ? 1 : 0;
            if (!s2 || !s4.pass)
                r.last_failure = std::max(r.last_failure.value_or(k), k);
        }
    };
    if (jobs == 1) {
        work(0);
    }
    else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back(work, t);
        for (auto& th : pool)
            th.join();
    }

    FamilyScan out;
    out.kmin = kmin;
    out.kmax = kmax;
    auto merge_max = [](std::optional<std::int64_t>& into, const std::optional<std::int64_t>& v) {
        if (v)
            into = std::max(into.value_or(*v), *v);
    };
    for (const auto& r : partial) {
        out.degenerate += r.degenerate;
        out.identity_failures += r.identity_failures;
        out.step2_failures += r.step2_failures;
        out.step4_failures += r.step4_failures;
        out.step4_exact += r.step4_exact;
        merge_max(out.largest_degenerate, r.largest_degenerate);
        merge_max(out.last_failure, r.last_failure);
        if (r.first_identity_failure)
            out.first_identity_failure = std::min(out.first_identity_failure.value_or(*r.first_identity_failure),
                                                  *r.first_identity_failure);
    }
    if (!out.last_failure)
        out.k_star = kmin;
    else if (*out.last_failure < kmax)
        out.k_star = *out.last_failure + 1;
    return out;
}

} // namespace gallai
