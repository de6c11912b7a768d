#ifndef VILENKIN_ANALYSIS_HPP
#define VILENKIN_ANALYSIS_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "vilenkin/group.hpp"
#include "vilenkin/kernels.hpp"
#include "vilenkin/means.hpp"
#include "vilenkin/transform.hpp"
#include "vilenkin/weights.hpp"

namespace vilenkin {

inline constexpr double infinity_norm = std::numeric_limits<double>::infinity();

inline void require_norm_exponent(double p, const char* what) {
    if (!(p >= 1.0)) throw std::domain_error(std::string(what) + ": exponent must be >= 1 or infinity");
}

/// ||f||_p with the normalized Haar measure; p = infinity gives the max.
inline double lp_norm(const StepFunction& f, double p) {
    require_norm_exponent(p, "lp_norm");
    if (std::isinf(p)) {
        double best = 0.0;
        for (const cplx& v : f.values()) best = std::max(best, std::abs(v));
        return best;
    }
    double sum = 0.0;
    for (const cplx& v : f.values()) sum += std::pow(std::abs(v), p);
    return std::pow(sum / static_cast<double>(f.size()), 1.0 / p);
}

/// sup_{lambda > 0} lambda mu(|f| > lambda)^{1/p}. On a finite range the
/// supremum is max_v v mu(|f| >= v) over the distinct values v of |f|.
inline double weak_lp(const StepFunction& f, double p) {
    require_norm_exponent(p, "weak_lp");
    std::vector<double> mags;
    mags.reserve(f.size());
    for (const cplx& v : f.values()) mags.push_back(std::abs(v));
    std::sort(mags.begin(), mags.end());
    const double total = static_cast<double>(mags.size());
    double best = 0.0;
    for (std::size_t i = 0; i < mags.size(); ++i) {
        if (i > 0 && mags[i] == mags[i - 1]) continue;
        if (mags[i] <= 0.0) continue;
        const double measure = static_cast<double>(mags.size() - i) / total;
        const double value = std::isinf(p) ? mags[i] : mags[i] * std::pow(measure, 1.0 / p);
        best = std::max(best, value);
    }
    return best;
}

/// a_n = (1/|I_n(x)|) int_{I_n(x)} |f(t) - f(x)| dmu(t) for n = 0..N.
inline std::vector<double> lebesgue_profile(const StepFunction& f, std::size_t x) {
    const VilenkinBase& base = f.base();
    if (x >= base.size()) throw std::out_of_range("lebesgue_profile: point out of range");
    const cplx fx = f[x];
    std::vector<double> out(base.depth() + 1);
    for (std::size_t n = 0; n <= base.depth(); ++n) {
        const std::size_t step = base.block(n);
        double sum = 0.0;
        for (std::size_t t = x % step; t < base.size(); t += step) sum += std::abs(f[t] - fx);
        out[n] = sum * static_cast<double>(step) / static_cast<double>(base.size());
    }
    return out;
}

/// W_A f(x) = sum_{s<A} M_s sum_{r=1}^{m_s-1} int_{I_A(x - r e_s)} |f(t) - f(x)| dmu(t),
/// for A = 1..a_max (entry A-1 of the result).
inline std::vector<double> vilenkin_lebesgue_profile(const StepFunction& f, std::size_t x, std::size_t a_max) {
    const VilenkinBase& base = f.base();
    if (x >= base.size()) throw std::out_of_range("vilenkin_lebesgue_profile: point out of range");
    if (a_max > base.depth()) throw std::out_of_range("vilenkin_lebesgue_profile: A_max exceeds depth");
    const cplx fx = f[x];
    const double inv_total = 1.0 / static_cast<double>(base.size());
    std::vector<double> out(a_max);
    for (std::size_t a = 1; a <= a_max; ++a) {
        const std::size_t step = base.block(a);
        double w = 0.0;
        for (std::size_t s = 0; s < a; ++s) {
            double inner = 0.0;
            for (int r = 1; r < base.radix(s); ++r) {
                const std::size_t shift = static_cast<std::size_t>(r) * base.block(s);
                const std::size_t y = sub_ranks(x, shift, base);
                for (std::size_t t = y % step; t < base.size(); t += step) inner += std::abs(f[t] - fx);
            }
            w += static_cast<double>(base.block(s)) * inner * inv_total;
        }
        out[a - 1] = w;
    }
    return out;
}

/// Smallest r such that f is constant on I_r(x); N when only the trivial
/// coset qualifies.
inline std::size_t continuity_level(const StepFunction& f, std::size_t x, double tol = 0.0) {
    const VilenkinBase& base = f.base();
    for (std::size_t r = 0; r < base.depth(); ++r) {
        const std::size_t step = base.block(r);
        bool constant = true;
        for (std::size_t t = x % step; t < base.size() && constant; t += step)
            constant = std::abs(f[t] - f[x]) <= tol;
        if (constant) return r;
    }
    return base.depth();
}

inline bool is_continuity_point(const StepFunction& f, std::size_t x, double tol = 0.0) {
    return continuity_level(f, x, tol) < f.base().depth();
}

enum class MaximalFamily {
    partial_sums_at_blocks,  // sup_r |S_{M_r} f|
    log_means_at_blocks,     // sup_r |L_{M_r} f|
    means_at_blocks,         // sup_r |t_{M_r} f| for given weights
};

namespace detail {

inline void raise_to_abs(std::vector<double>& best, const StepFunction& g) {
    for (std::size_t x = 0; x < best.size(); ++x) best[x] = std::max(best[x], std::abs(g[x]));
}

inline StepFunction as_step(const VilenkinBase& base, const std::vector<double>& v) {
    StepFunction out(base);
    for (std::size_t x = 0; x < v.size(); ++x) out[x] = v[x];
    return out;
}

}  // namespace detail

/// Pointwise sup over r = 0..N of the block-indexed operator family. Orders
/// with Q_{M_r} = 0 are skipped.
inline StepFunction restricted_maximal(const StepFunction& f, MaximalFamily family,
                                       const WeightSequence* weights = nullptr) {
    const VilenkinBase& base = f.base();
    std::vector<double> best(base.size(), 0.0);
    if (family == MaximalFamily::partial_sums_at_blocks) {
        for (std::size_t r = 0; r <= base.depth(); ++r) detail::raise_to_abs(best, partial_sum(f, base.block(r)));
        return detail::as_step(base, best);
    }
    std::optional<WeightSequence> owned;
    if (family == MaximalFamily::log_means_at_blocks) {
        owned = make_weights(WeightSpec{WeightKind::norlund_log}, base.size() + 1);
        weights = &*owned;
    } else if (weights == nullptr) {
        throw std::invalid_argument("restricted_maximal: weights required for means_at_blocks");
    }
    const MeanFamily mf = family == MaximalFamily::log_means_at_blocks ? MeanFamily::norlund : weights->natural_family();
    for (std::size_t r = 0; r <= base.depth(); ++r) {
        const std::size_t n = base.block(r);
        if (!(weights->Q(n) > 0.0)) continue;
        detail::raise_to_abs(best, mean(f, *weights, n, MeanMethod::spectral, mf));
    }
    return detail::as_step(base, best);
}

/// sup_{1 <= n <= n_max} |sigma_n f|.
inline StepFunction full_maximal_fejer(const StepFunction& f, std::size_t n_max) {
    if (n_max < 1 || n_max > f.size()) throw std::out_of_range("full_maximal_fejer: n_max outside [1, M_N]");
    PartialSumStream sums(f);
    StepFunction scaled(f.base());
    std::vector<double> best(f.size(), 0.0);
    for (std::size_t n = 1; n <= n_max; ++n) {
        scaled += sums.advance();
        const double inv = 1.0 / static_cast<double>(n);
        for (std::size_t x = 0; x < f.size(); ++x) best[x] = std::max(best[x], std::abs(scaled[x]) * inv);
    }
    return detail::as_step(f.base(), best);
}

/// sup_lambda lambda mu(maximal > lambda) / ||f||_1.
inline double weak11_ratio(const StepFunction& maximal, const StepFunction& f) {
    const double norm = lp_norm(f, 1.0);
    if (!(norm > 0.0)) throw std::domain_error("weak11_ratio: f has zero L1 norm");
    return weak_lp(maximal, 1.0) / norm;
}

struct PointError {
    std::size_t rank;
    double error;
};

struct ConvergenceRecord {
    std::string mean_kind;
    std::size_t n = 0;
    double p = 1.0;
    double error = 0.0;
    std::vector<PointError> points;
};

namespace detail {

inline std::string mean_label(const WeightSequence& w, MeanFamily family) {
    return std::string(family == MeanFamily::norlund ? "norlund/" : "T/") + w.name();
}

inline void append_records(std::vector<ConvergenceRecord>& out, const std::string& label, std::size_t n,
                           const StepFunction& approx, const StepFunction& f, std::span<const double> p_list,
                           std::span<const std::size_t> points) {
    const StepFunction diff = approx - f;
    std::vector<PointError> pe;
    pe.reserve(points.size());
    for (std::size_t x : points) pe.push_back({x, std::abs(diff[x])});
    for (double p : p_list) out.push_back({label, n, p, lp_norm(diff, p), pe});
}

}  // namespace detail

/// ||t_n f - f||_p and |t_n f(x) - f(x)| over the grid, ordered by (n, p).
/// Orders n = M_r also get a "partial_sum" record for S_{M_r} f.
inline std::vector<ConvergenceRecord> convergence_sweep(const StepFunction& f, const WeightSequence& w,
                                                        std::span<const std::size_t> n_list,
                                                        std::span<const double> p_list,
                                                        std::span<const std::size_t> points) {
    const VilenkinBase& base = f.base();
    for (double p : p_list) require_norm_exponent(p, "convergence_sweep");
    for (std::size_t x : points)
        if (x >= base.size()) throw std::out_of_range("convergence_sweep: point out of range");
    const MeanFamily family = w.natural_family();
    const std::string label = detail::mean_label(w, family);
    std::vector<ConvergenceRecord> out;
    for (std::size_t n : n_list) {
        if (n < 1 || n > base.size()) throw std::out_of_range("convergence_sweep: order outside [1, M_N]");
        detail::append_records(out, label, n, mean(f, w, n, MeanMethod::spectral, family), f, p_list, points);
        const auto cum = base.cumprod();
        if (std::find(cum.begin(), cum.end(), n) != cum.end())
            detail::append_records(out, "partial_sum", n, partial_sum(f, n), f, p_list, points);
    }
    return out;
}

}  // namespace vilenkin

#endif  // VILENKIN_ANALYSIS_HPP
