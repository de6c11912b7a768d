#ifndef VILENKIN_MEANS_HPP
#define VILENKIN_MEANS_HPP

// Partial sums and Norlund / T means of Vilenkin-Fourier series.
//
// Every mean is reachable along four independent routes:
//   direct    weighted sum of partial sums S_k f built term by term
//   kernel    group convolution with the tabulated kernel
//   abel      weighted sum of Fejer means (Abel rearrangement)
//   spectral  coefficient multipliers applied to the transform

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "vilenkin/kernels.hpp"
#include "vilenkin/transform.hpp"
#include "vilenkin/weights.hpp"

namespace vilenkin {

enum class MeanMethod { direct, kernel, abel, spectral };

inline const char* method_name(MeanMethod m) {
    switch (m) {
        case MeanMethod::direct: return "direct";
        case MeanMethod::kernel: return "kernel";
        case MeanMethod::abel: return "abel";
        case MeanMethod::spectral: return "spectral";
    }
    return "?";
}

inline StepFunction apply_multipliers(const StepFunction& f, std::span<const double> multipliers) {
    Spectrum s = forward(f);
    for (std::size_t j = 0; j < s.size(); ++j) s[j] *= multipliers[j];
    return inverse(s);
}

/// S_n f = sum_{k<n} f^(k) psi_k.
inline StepFunction partial_sum(const StepFunction& f, std::size_t n) {
    if (n > f.size())
        throw std::out_of_range("partial_sum: order " + std::to_string(n) + " beyond M_N = " + std::to_string(f.size()));
    return apply_multipliers(f, dirichlet_multipliers(n, f.size()));
}

/// sigma_n f = (1/n) sum_{k=1}^n S_k f.
inline StepFunction fejer_mean(const StepFunction& f, std::size_t n) {
    if (n < 1 || n > f.size()) throw std::out_of_range("fejer_mean: order outside [1, M_N]");
    return apply_multipliers(f, fejer_multipliers(n, f.size()));
}

/// Emits S_1 f, S_2 f, ... one at a time by adding f^(k) psi_k.
class PartialSumStream {
public:
    explicit PartialSumStream(const StepFunction& f)
        : spectrum_(forward(f)), sampler_(f.base()), current_(f.base()), psi_(f.size()) {}

    /// Order of the partial sum currently held (0 before the first advance).
    std::size_t order() const noexcept { return order_; }
    const StepFunction& current() const noexcept { return current_; }

    const StepFunction& advance() {
        if (order_ >= spectrum_.size()) throw std::out_of_range("PartialSumStream: exhausted");
        const cplx c = spectrum_[order_];
        if (c != cplx{}) {
            sampler_.sample(order_, psi_);
            for (std::size_t x = 0; x < psi_.size(); ++x) current_[x] += c * psi_[x];
        }
        ++order_;
        return current_;
    }

private:
    Spectrum spectrum_;
    CharacterSampler sampler_;
    StepFunction current_;
    std::vector<cplx> psi_;
    std::size_t order_ = 0;
};

namespace detail {

inline void axpy(StepFunction& acc, double a, const StepFunction& x) {
    if (a == 0.0) return;
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += a * x[i];
}

inline StepFunction mean_direct(const StepFunction& f, const WeightSequence& w, std::size_t n, MeanFamily family) {
    const double Qn = w.require_positive_Q(n);
    PartialSumStream sums(f);
    StepFunction acc(f.base());
    if (family == MeanFamily::norlund) {
        for (std::size_t k = 1; k <= n; ++k) axpy(acc, w.q(n - k), sums.advance());
    } else {
        // S_0 = 0, so the k = 0 term vanishes.
        for (std::size_t k = 1; k < n; ++k) axpy(acc, w.q(k), sums.advance());
    }
    acc *= 1.0 / Qn;
    return acc;
}

inline StepFunction mean_abel(const StepFunction& f, const WeightSequence& w, std::size_t n, MeanFamily family) {
    const double Qn = w.require_positive_Q(n);
    PartialSumStream sums(f);
    StepFunction scaled_fejer(f.base());  // j sigma_j f
    StepFunction acc(f.base());
    auto step = [&] { scaled_fejer += sums.advance(); };
    if (family == MeanFamily::norlund) {
        for (std::size_t j = 1; j < n; ++j) {
            step();
            axpy(acc, w.q(n - j) - w.q(n - j - 1), scaled_fejer);
        }
        step();
        axpy(acc, w.q(0), scaled_fejer);
    } else {
        // sum_{k=1}^{n-2} (q_k - q_{k+1}) k sigma_k + q_{n-1} (n-1) sigma_{n-1}
        for (std::size_t k = 1; k + 1 < n; ++k) {
            step();
            axpy(acc, w.q(k) - w.q(k + 1), scaled_fejer);
        }
        if (n >= 2) {
            step();
            axpy(acc, w.q(n - 1), scaled_fejer);
        }
    }
    acc *= 1.0 / Qn;
    return acc;
}

}  // namespace detail

/// t_n f (Norlund) or T_n f, evaluated along the requested route.
inline StepFunction mean(const StepFunction& f, const WeightSequence& w, std::size_t n, MeanMethod method,
                         MeanFamily family) {
    if (n < 1 || n > f.size())
        throw std::out_of_range("mean: order " + std::to_string(n) + " outside [1, " + std::to_string(f.size()) + "]");
    if (n > w.horizon()) throw std::out_of_range("mean: order beyond tabulated weights");
    switch (method) {
        case MeanMethod::direct: return detail::mean_direct(f, w, n, family);
        case MeanMethod::kernel: return convolve(f, mean_kernel(w, f.base(), n, family).values);
        case MeanMethod::abel: return detail::mean_abel(f, w, n, family);
        case MeanMethod::spectral: return apply_multipliers(f, mean_multipliers(w, n, f.size(), family));
    }
    throw std::invalid_argument("mean: unknown method");
}

inline StepFunction mean(const StepFunction& f, const WeightSequence& w, std::size_t n,
                         MeanMethod method = MeanMethod::spectral) {
    return mean(f, w, n, method, w.natural_family());
}

}  // namespace vilenkin

#endif  // VILENKIN_MEANS_HPP
