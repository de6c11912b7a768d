#ifndef VILENKIN_EXPERIMENTS_HPP
#define VILENKIN_EXPERIMENTS_HPP

// Drivers behind the CLI subcommands: the identity/bound verification suite,
// convergence sweeps, the transform benchmark and kernel export.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "vilenkin/analysis.hpp"
#include "vilenkin/config.hpp"
#include "vilenkin/corpus.hpp"
#include "vilenkin/kernels.hpp"
#include "vilenkin/means.hpp"
#include "vilenkin/transform.hpp"
#include "vilenkin/weights.hpp"

namespace vilenkin {

inline constexpr double exact_tolerance = 1e-12;
inline constexpr double composed_tolerance = 1e-10;

struct CheckResult {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;

    bool passed() const noexcept { return residual <= tolerance; }
};

struct VerifyReport {
    std::string base;
    std::vector<CheckResult> checks;

    bool ok() const noexcept {
        return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
    }
};

namespace detail {

/// Orders probed by the per-weight checks: small orders, block orders and the top.
inline std::vector<std::size_t> probe_orders(const VilenkinBase& base) {
    std::set<std::size_t> orders = {1, 2, 3, base.size() / 2 + 1, base.size()};
    for (std::size_t r = 1; r <= base.depth(); ++r) orders.insert(base.block(r));
    std::vector<std::size_t> out;
    for (std::size_t n : orders)
        if (n >= 1 && n <= base.size()) out.push_back(n);
    return out;
}

inline double orthonormality_residual(const VilenkinBase& base) {
    const std::size_t size = base.size();
    const double inv = 1.0 / static_cast<double>(size);
    double worst = 0.0;
    if (size <= 256) {
        CharacterSampler sampler(base);
        std::vector<std::vector<cplx>> rows(size);
        for (std::size_t n = 0; n < size; ++n) rows[n] = sampler.sample(n);
        for (std::size_t n = 0; n < size; ++n)
            for (std::size_t k = 0; k < size; ++k) {
                cplx acc{};
                for (std::size_t x = 0; x < size; ++x) acc += rows[n][x] * std::conj(rows[k][x]);
                worst = std::max(worst, std::abs(acc * inv - (n == k ? 1.0 : 0.0)));
            }
        return worst;
    }
    // Large groups: the transform of each sampled character must be a delta.
    std::set<std::size_t> ks = {0, 1, size - 1, size / 2};
    for (std::size_t r = 0; r < base.depth(); ++r) ks.insert(base.block(r));
    for (std::size_t k : ks) {
        const Spectrum s = forward(sample_character(k, base));
        for (std::size_t n = 0; n < size; ++n) worst = std::max(worst, std::abs(s[n] - (n == k ? 1.0 : 0.0)));
    }
    return worst;
}

}  // namespace detail

inline VerifyReport run_verify(const ExperimentConfig& config) {
    const VilenkinBase base = config.make_base();
    const std::size_t size = base.size();
    VerifyReport report;
    report.base = base.to_string();
    auto add = [&](std::string name, double residual, double tol) {
        report.checks.push_back({std::move(name), residual, tol});
    };

    std::vector<StepFunction> samples;
    for (const auto& name : config.corpus) samples.push_back(corpus(name, base, config.seed));
    for (std::uint64_t s = 0; s < 3; ++s) samples.push_back(random_function(base, config.seed + 1 + s));

    add("orthonormality", detail::orthonormality_residual(base), exact_tolerance);

    double fast_naive = 0.0, roundtrip = 0.0, parseval = 0.0;
    for (const auto& f : samples) {
        const Spectrum fast = forward(f);
        fast_naive = std::max(fast_naive, max_abs_diff(fast.coeffs(), forward_naive(f).coeffs()));
        roundtrip = std::max(roundtrip, max_abs_diff(inverse(fast).values(), f.values()));
        double energy = 0.0, coeff_energy = 0.0;
        for (const cplx& v : f.values()) energy += std::norm(v);
        for (const cplx& c : fast.coeffs()) coeff_energy += std::norm(c);
        energy /= static_cast<double>(size);
        parseval = std::max(parseval, std::abs(energy - coeff_energy) / std::max(1.0, energy));
    }
    add("fast_vs_naive", fast_naive, exact_tolerance);
    add("inverse_roundtrip", roundtrip, exact_tolerance);
    add("parseval", parseval, exact_tolerance);

    {
        const StepFunction& f = samples.front();
        const StepFunction& g = samples.back();
        const StepFunction direct = convolve(f, g);
        const Spectrum fs = forward(f), gs = forward(g), cs = forward(direct);
        double theorem = 0.0;
        for (std::size_t n = 0; n < size; ++n) theorem = std::max(theorem, std::abs(cs[n] - fs[n] * gs[n]));
        add("convolution_theorem", theorem, exact_tolerance);
        add("convolution_paths", max_abs_diff(direct.values(), convolve_spectral(f, g).values()), composed_tolerance);
    }

    {
        // Running D_n from sampled characters; its mean is the psi_0 coefficient.
        CharacterSampler sampler(base);
        std::vector<cplx> running(size, cplx{}), psi(size);
        double worst = 0.0;
        for (std::size_t n = 1; n <= size; ++n) {
            sampler.sample(n - 1, psi);
            cplx sum{};
            for (std::size_t x = 0; x < size; ++x) sum += (running[x] += psi[x]);
            worst = std::max(worst, std::abs(sum / static_cast<double>(size) - 1.0));
        }
        add("dirichlet_integral", worst, exact_tolerance);
    }

    {
        double worst = 0.0;
        for (std::size_t r = 0; r <= base.depth(); ++r) {
            const std::size_t Mr = base.block(r);
            std::set<std::size_t> js;
            if (size <= 512) {
                for (std::size_t j = 0; j < Mr; ++j) js.insert(j);
            } else {
                js = {0, 1, Mr / 2, Mr - 1};
            }
            for (std::size_t j : js)
                if (j < Mr) worst = std::max(worst, paley_residual(base, r, j));
        }
        add("paley_identity", worst, composed_tolerance);
    }

    {
        double worst = 0.0;
        for (std::size_t r = 0; r <= base.depth(); ++r) {
            const StepFunction f = coset_indicator(base, r);
            worst = std::max(worst, max_abs_diff(partial_sum(f, base.block(r)).values(), f.values()));
            const StepFunction d = dirichlet(base, base.block(r)).values;
            const StepFunction expected = coset_indicator(base, r, static_cast<double>(base.block(r)));
            worst = std::max(worst, max_abs_diff(d.values(), expected.values()));
        }
        add("block_reproduction", worst, exact_tolerance);
    }

    const std::size_t horizon = std::max<std::size_t>(size, 512) + 1;
    const std::size_t ladder_top = std::min<std::size_t>(size, 64);
    const FejerLadder ladder(base, ladder_top);
    for (const auto& spec : config.weights) {
        const WeightSequence w = make_weights(spec, horizon);
        const std::string tag = "[" + w.name() + "]";
        const MeanFamily family = w.natural_family();

        double scalar = 0.0;
        for (std::size_t n = 1; n <= 512; ++n) scalar = std::max(scalar, abel_scalar_residual(w, n));
        add("abel_scalar" + tag, scalar, composed_tolerance);

        double kernel_abel = 0.0, integral = 0.0;
        for (std::size_t n = 1; n <= ladder_top; ++n) {
            if (!(w.Q(n) > 0.0)) continue;
            const KernelTable k = norlund_kernel(w, base, n);
            kernel_abel = std::max(kernel_abel, max_abs_diff(k.values.values(), norlund_kernel_abel(ladder, w, n).values()));
        }
        for (std::size_t n : detail::probe_orders(base))
            if (w.Q(n) > 0.0) integral = std::max(integral, std::abs(norlund_kernel(w, base, n).integral() - 1.0));
        add("abel_kernel" + tag, kernel_abel, composed_tolerance);
        add("norlund_integral" + tag, integral, exact_tolerance);

        double paths = 0.0;
        for (const StepFunction& f : {samples.front(), samples.back()}) {
            for (std::size_t n : detail::probe_orders(base)) {
                if (!(w.Q(n) > 0.0)) continue;
                const StepFunction ref = mean(f, w, n, MeanMethod::direct, family);
                for (MeanMethod m : {MeanMethod::kernel, MeanMethod::abel, MeanMethod::spectral})
                    paths = std::max(paths, max_abs_diff(ref.values(), mean(f, w, n, m, family).values()));
            }
        }
        add("mean_paths" + tag, paths, composed_tolerance);

        if (w.non_increasing()) {
            double block = 0.0;
            for (std::size_t r = 1; r <= base.depth(); ++r) block = std::max(block, norlund_block_residual(w, base, r));
            add("block_identity" + tag, block, composed_tolerance);
        }
    }
    return report;
}

/// Convergence records for the single configured corpus over every weight
/// family; orders with Q_n = 0 are skipped for that family.
inline std::vector<ConvergenceRecord> run_converge(const ExperimentConfig& config) {
    if (config.corpus.size() != 1) throw std::invalid_argument("converge takes exactly one corpus");
    const VilenkinBase base = config.make_base();
    const StepFunction f = corpus(config.corpus.front(), base, config.seed);
    std::vector<std::size_t> orders;
    if (config.n_list) {
        orders = *config.n_list;
    } else {
        for (std::size_t r = 1; r <= base.depth(); ++r) orders.push_back(base.block(r));
    }
    std::vector<ConvergenceRecord> out;
    for (const auto& spec : config.weights) {
        const WeightSequence w = make_weights(spec, base.size() + 1);
        std::vector<std::size_t> usable;
        for (std::size_t n : orders) {
            if (n < 1 || n > base.size()) throw std::out_of_range("order " + std::to_string(n) + " outside [1, M_N]");
            if (w.Q(n) > 0.0) usable.push_back(n);
        }
        auto records = convergence_sweep(f, w, usable, config.p_list, config.points);
        out.insert(out.end(), records.begin(), records.end());
    }
    return out;
}

struct BenchReport {
    std::size_t size = 0;
    double fast_seconds = 0.0;   // per transform
    double naive_seconds = 0.0;  // per transform
    double speedup = 0.0;
    double max_deviation = 0.0;
    std::size_t fast_repeats = 0;
    std::size_t naive_repeats = 0;
};

inline BenchReport run_bench(const ExperimentConfig& config, double min_seconds = 0.05) {
    using clock = std::chrono::steady_clock;
    const VilenkinBase base = config.make_base();
    const StepFunction f = random_function(base, config.seed);
    BenchReport report;
    report.size = base.size();

    auto time_it = [&](auto&& fn, std::size_t& repeats) {
        repeats = 0;
        const auto start = clock::now();
        double elapsed = 0.0;
        do {
            fn();
            ++repeats;
            elapsed = std::chrono::duration<double>(clock::now() - start).count();
        } while (elapsed < min_seconds);
        return elapsed / static_cast<double>(repeats);
    };

    Spectrum fast, naive;
    report.fast_seconds = time_it([&] { fast = forward(f); }, report.fast_repeats);
    report.naive_seconds = time_it([&] { naive = forward_naive(f); }, report.naive_repeats);
    report.speedup = report.naive_seconds / report.fast_seconds;
    report.max_deviation = max_abs_diff(fast.coeffs(), naive.coeffs());
    return report;
}

inline KernelKind parse_kernel_kind(std::string_view text) {
    if (text == "dirichlet") return KernelKind::dirichlet;
    if (text == "fejer") return KernelKind::fejer;
    if (text == "norlund") return KernelKind::norlund;
    if (text == "tmean") return KernelKind::tmean;
    throw std::invalid_argument("unknown kernel '" + std::string(text) + "'");
}

inline KernelTable kernel_dump(const VilenkinBase& base, KernelKind kind, std::size_t n, const std::string& weights) {
    switch (kind) {
        case KernelKind::dirichlet: return dirichlet(base, n);
        case KernelKind::fejer: return fejer_kernel(base, n);
        case KernelKind::norlund: return norlund_kernel(make_weights(weights, base.size() + 1), base, n);
        case KernelKind::tmean: return t_kernel(make_weights(weights, base.size() + 1), base, n);
    }
    throw std::invalid_argument("kernel_dump: unknown kind");
}

}  // namespace vilenkin

#endif  // VILENKIN_EXPERIMENTS_HPP
