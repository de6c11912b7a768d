// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "vilenkin/analysis.hpp"
#include "vilenkin/corpus.hpp"
#include "vilenkin/kernels.hpp"
#include "vilenkin/means.hpp"

using namespace vilenkin;

namespace {

const char* const small_bases[] = {"2,2,2,2", "2,3,2", "3,3,3"};

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, pattern, a, b, c);
    return buf;
}

/// Least-squares slope of y against ln x.
double log_slope(const std::vector<double>& x, const std::vector<double>& y) {
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += std::log(x[i]);
        my += y[i];
    }
    mx /= static_cast<double>(x.size());
    my /= static_cast<double>(x.size());
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = std::log(x[i]) - mx;
        sxy += dx * (y[i] - my);
        sxx += dx * dx;
    }
    return sxy / sxx;
}

Outcome orthonormality() {
    double worst = 0.0;
    for (const char* spec : small_bases) {
        const auto base = VilenkinBase::parse(spec);
        CharacterSampler sampler(base);
        std::vector<std::vector<cplx>> rows;
        for (std::size_t n = 0; n < base.size(); ++n) rows.push_back(sampler.sample(n));
        for (std::size_t n = 0; n < base.size(); ++n)
            for (std::size_t k = 0; k < base.size(); ++k) {
                cplx acc{};
                for (std::size_t x = 0; x < base.size(); ++x) acc += rows[n][x] * std::conj(rows[k][x]);
                worst = std::max(worst, std::abs(acc / static_cast<double>(base.size()) - (n == k ? 1.0 : 0.0)));
            }
    }
    return {worst <= 1e-12, fmt("max residual %.3e", worst)};
}

Outcome fast_vs_naive() {
    using clock = std::chrono::steady_clock;
    double worst = 0.0;
    for (const char* spec : {"2,2,2,2", "2,3,2", "3,3,3", "2,3,4,5,6", "2,2,2,2,2,2,2,2,2,2,2,2"}) {
        const auto base = VilenkinBase::parse(spec);
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            const auto f = random_function(base, seed);
            worst = std::max(worst, max_abs_diff(forward(f).coeffs(), forward_naive(f).coeffs()));
        }
    }
    const auto big = VilenkinBase::uniform(2, 12);
    const auto f = random_function(big, 12345);
    auto time_it = [](const std::function<void()>& fn) {
        std::size_t reps = 0;
        const auto start = clock::now();
        double elapsed = 0.0;
        do {
            fn();
            ++reps;
            elapsed = std::chrono::duration<double>(clock::now() - start).count();
        } while (elapsed < 0.2);
        return elapsed / static_cast<double>(reps);
    };
    Spectrum sink;
    const double fast = time_it([&] { sink = forward(f); });
    const double naive = time_it([&] { sink = forward_naive(f); });
    const double speedup = naive / fast;
    return {worst <= 1e-12 && speedup >= 10.0, fmt("max deviation %.3e, speedup %.1fx at M_N=4096", worst, speedup)};
}

Outcome dirichlet_integral() {
    double worst = 0.0;
    for (const char* spec : {"2,2,2,2", "2,3,2", "3,3,3", "2,2,2,2,2,2,2,2,2,2"}) {
        const auto base = VilenkinBase::parse(spec);
        for (std::size_t n = 1; n <= base.size(); ++n)
            worst = std::max(worst, std::abs(dirichlet(base, n).integral() - 1.0));
    }
    return {worst <= 1e-12, fmt("max |int D_n - 1| %.3e", worst)};
}

Outcome paley() {
    double worst = 0.0;
    for (const char* spec : small_bases) {
        const auto base = VilenkinBase::parse(spec);
        for (std::size_t r = 0; r <= base.depth(); ++r)
            for (std::size_t j = 0; j < base.block(r); ++j) worst = std::max(worst, paley_residual(base, r, j));
    }
    return {worst <= 1e-10, fmt("max residual %.3e", worst)};
}

Outcome abel() {
    const char* families[] = {"constant", "cesaro:0.5", "valpha:0.5", "riesz_log", "norlund_log", "blog:0.5:1"};
    double scalar = 0.0, kernel = 0.0, paths = 0.0;
    const auto kbase = VilenkinBase::parse("2,3,2,2");
    const FejerLadder ladder(kbase, kbase.size());
    const auto mbase = VilenkinBase::parse("2,3,2");
    const std::vector<StepFunction> inputs = {random_function(mbase, 1), corpus("smooth2", mbase),
                                              corpus("spike:2", mbase), corpus("character:3", mbase)};
    for (const char* name : families) {
        const auto w = make_weights(name, 1024);
        for (std::size_t n = 1; n <= 512; ++n) scalar = std::max(scalar, abel_scalar_residual(w, n));
        for (std::size_t n = 1; n <= kbase.size(); ++n) {
            if (!(w.Q(n) > 0.0)) continue;
            kernel = std::max(kernel, max_abs_diff(norlund_kernel_abel(ladder, w, n).values(),
                                                   norlund_kernel(w, kbase, n).values.values()));
        }
        for (auto family : {MeanFamily::norlund, MeanFamily::t})
            for (const auto& f : inputs)
                for (std::size_t n = 1; n <= mbase.size(); ++n) {
                    if (!(w.Q(n) > 0.0)) continue;
                    const auto direct = mean(f, w, n, MeanMethod::direct, family);
                    for (auto method : {MeanMethod::kernel, MeanMethod::abel})
                        paths = std::max(paths, max_abs_diff(direct.values(), mean(f, w, n, method, family).values()));
                }
    }
    return {scalar <= 1e-10 && kernel <= 1e-10 && paths <= 1e-10,
            fmt("scalar %.3e, kernel %.3e, mean paths %.3e", scalar, kernel, paths)};
}

Outcome bounded_kernels() {
    const auto base = VilenkinBase::uniform(2, 9);
    double integral = 0.0;
    double worst_slope = -1e300;
    bool tails_decrease = true;
    std::string detail;
    for (const char* name : {"constant", "cesaro:0.5", "valpha:0.5", "blog:0.5:1"}) {
        const auto w = make_weights(name, 1024);
        std::vector<double> orders, norms;
        double sup = 0.0;
        for (std::size_t n = 1; n <= 512; ++n) {
            if (!(w.Q(n) > 0.0)) continue;
            const auto k = norlund_kernel(w, base, n);
            integral = std::max(integral, std::abs(k.integral() - 1.0));
            const double l1 = l1_norm(k.values);
            orders.push_back(static_cast<double>(n));
            norms.push_back(l1);
            sup = std::max(sup, l1);
        }
        const double slope = log_slope(orders, norms);
        worst_slope = std::max(worst_slope, slope);
        double previous = std::numeric_limits<double>::infinity();
        for (std::size_t a = 2; a <= base.depth(); ++a) {
            const double tail = kernel_tail(w, base, base.block(a), 2);
            if (tail > previous) tails_decrease = false;
            previous = tail;
        }
        detail += std::string(" ") + name + fmt(": sup %.4f slope %.4f;", sup, slope);
    }
    const bool pass = integral <= 1e-12 && worst_slope <= 0.01 && tails_decrease;
    return {pass, fmt("max |int F_n - 1| %.3e, tails decreasing %.0f;", integral, tails_decrease ? 1.0 : 0.0) + detail};
}

Outcome log_divergence() {
    const auto base = VilenkinBase::uniform(2, 9);
    const auto w = make_weights("norlund_log", 1024);
    std::vector<double> orders, norms;
    bool increasing = true;
    for (std::size_t k = 1; k <= 9; ++k) {
        const std::size_t n = std::size_t{1} << k;
        const double l1 = l1_norm(norlund_kernel(w, base, n).values);
        if (!norms.empty() && !(l1 > norms.back())) increasing = false;
        orders.push_back(static_cast<double>(n));
        norms.push_back(l1);
    }
    const double slope = log_slope(orders, norms);
    return {increasing && slope > 0.0,
            fmt("||F_2||_1 %.4f -> ||F_512||_1 %.4f, slope %.4f", norms.front(), norms.back(), slope)};
}

Outcome block_identity() {
    double worst = 0.0;
    for (const char* spec : small_bases) {
        const auto base = VilenkinBase::parse(spec);
        for (const char* name : {"constant", "valpha:0.5", "cesaro:0.5"}) {
            const auto w = make_weights(name, base.size() + 1);
            for (std::size_t r = 1; r <= base.depth(); ++r) worst = std::max(worst, norlund_block_residual(w, base, r));
        }
    }
    return {worst <= 1e-10, fmt("max residual %.3e", worst)};
}

Outcome reproduction() {
    double exact = 0.0;
    bool decreasing = true;
    double first_err = 0.0, last_err = 0.0;
    for (const char* spec : {"2,3,2", "2,2,2,2,2,2,2,2", "2,3,2,3,2"}) {
        const auto base = VilenkinBase::parse(spec);
        for (std::size_t r = 0; r <= base.depth(); ++r) {
            const auto f = corpus("coset:" + std::to_string(r), base);
            for (std::size_t s = r; s <= base.depth(); ++s)
                exact = std::max(exact, max_abs_diff(partial_sum(f, base.block(s)).values(), f.values()));
        }
        for (std::size_t level = 1; level < base.depth(); ++level) {
            const auto f = corpus("coset:" + std::to_string(level), base);
            for (std::size_t x : {std::size_t{0}, GroupPoint::unit(base, 0).rank()}) {
                if (!is_continuity_point(f, x)) continue;
                for (const char* name : {"constant", "cesaro:0.5", "valpha:0.5", "norlund_log"}) {
                    const auto w = make_weights(name, base.size() + 1);
                    std::vector<double> errors;
                    for (std::size_t r = std::max<std::size_t>(level, 1); r <= base.depth(); ++r) {
                        const std::size_t n = base.block(r);
                        if (!(w.Q(n) > 0.0)) continue;
                        errors.push_back(std::abs(mean(f, w, n)[x] - f[x]));
                    }
                    for (std::size_t i = 1; i < errors.size(); ++i)
                        if (errors[i] > errors[i - 1] + 1e-12) decreasing = false;
                    if (errors.size() >= 2 && errors.front() > 1e-12 && !(errors.back() < errors.front()))
                        decreasing = false;
                    first_err = std::max(first_err, errors.front());
                    last_err = std::max(last_err, errors.back());
                }
            }
        }
    }
    return {exact <= 1e-12 && decreasing,
            fmt("max |S_{M_r} f - f| %.3e, pointwise error %.3e -> %.3e", exact, first_err, last_err)};
}

Outcome smooth_sweep() {
    const auto base = VilenkinBase::parse("2,3,2,2");
    const auto f = corpus("smooth2", base);
    const std::vector<std::size_t> n = {4, base.size()};
    const std::vector<double> p = {1.0};
    bool pass = true;
    std::string detail;
    for (const char* name : {"constant", "cesaro:0.5", "valpha:0.5", "blog:0.5:1"}) {
        const auto records = convergence_sweep(f, make_weights(name, base.size() + 1), n, p, std::vector<std::size_t>{});
        const double ratio = records[1].error / records[0].error;
        if (!(records[0].error > 0.0 && ratio <= 0.25)) pass = false;
        detail += std::string(" ") + name + fmt(": %.3f;", ratio);
    }
    return {pass, "error ratio n=M_N vs n=4:" + detail};
}

Outcome weak_type() {
    constexpr double recorded = 1.0 + 1e-9;
    double worst = 0.0;
    bool stable = true;
    for (const char* spec : {"2,2,2,2,2,2,2,2,2,2", "2,3,2,3,2,3"}) {
        const auto base = VilenkinBase::parse(spec);
        double first_s = 0.0, first_sigma = 0.0;
        for (std::size_t r = 0; r <= base.depth(); ++r) {
            const auto f = corpus("spike:" + std::to_string(r), base);
            const double s = weak11_ratio(restricted_maximal(f, MaximalFamily::partial_sums_at_blocks), f);
            const double sigma = weak11_ratio(full_maximal_fejer(f, base.size()), f);
            if (r == 0) {
                first_s = s;
                first_sigma = sigma;
            }
            if (s > first_s + 1e-9 || sigma > first_sigma + 1e-9) stable = false;
            worst = std::max({worst, s, sigma});
        }
    }
    return {worst <= recorded && stable, fmt("max ratio %.12f (recorded %.12f)", worst, recorded)};
}

Outcome lebesgue_decay() {
    bool pass = true;
    double last = 0.0;
    std::size_t decaying = 0;
    for (const char* spec : {"2,2,2,2,2,2,2,2,2,2", "2,3,2,3,2,3"}) {
        const auto base = VilenkinBase::parse(spec);
        for (std::size_t r = 1; r + 2 <= base.depth(); ++r) {
            const auto f = corpus("spike:" + std::to_string(r), base);
            for (std::size_t x = 1; x < base.size(); ++x) {
                if (!is_continuity_point(f, x) || digit_at(x, 0, base) == 0) continue;
                // Past the spike depth W_A either vanishes or decays exactly like 1/M_A.
                const auto w = vilenkin_lebesgue_profile(f, x, base.depth());
                const double scaled = w[r] * static_cast<double>(base.block(r + 1));
                for (std::size_t a = r + 1; a < w.size(); ++a) {
                    if (w[a] > w[a - 1]) pass = false;
                    if (w[a] != 0.0 &&
                        std::abs(w[a] * static_cast<double>(base.block(a + 1)) - scaled) > 1e-9 * std::max(1.0, scaled))
                        pass = false;
                }
                if (w[r] > 0.0) ++decaying;
                last = std::max(last, w.back() / std::max(w[r], 1e-300));
            }
        }
    }
    pass = pass && decaying > 0;
    return {pass, fmt("W_A non-increasing past the spike depth, nonzero values scale as 1/M_A (%.0f profiles); "
                      "max W_N / W_{r+1} %.3e",
                      static_cast<double>(decaying), last)};
}

}  // namespace

int main() {
    using clock = std::chrono::steady_clock;
    const std::vector<std::pair<const char*, Outcome (*)()>> criteria = {
        {"orthonormality", orthonormality},     {"fast transform", fast_vs_naive},
        {"dirichlet integral", dirichlet_integral}, {"paley identity", paley},
        {"abel rearrangement", abel},           {"bounded kernels", bounded_kernels},
        {"log divergence", log_divergence},     {"block identity", block_identity},
        {"reproduction", reproduction},         {"smooth convergence", smooth_sweep},
        {"weak type", weak_type},               {"lebesgue decay", lebesgue_decay},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = clock::now();
        Outcome o{false, ""};
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(clock::now() - start).count();
        std::printf("%s %2zu %-20s %s [%.2fs]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str(),
                    secs);
        std::fflush(stdout);
        if (!o.pass) ++failures;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
