#ifndef VILENKIN_KERNELS_HPP
#define VILENKIN_KERNELS_HPP

// Dirichlet, Fejer, Norlund and T kernels at resolution N, plus the exact
// kernel identities (Paley splitting, Abel rearrangement, block identity at
// n = M_r) evaluated pointwise on all M_N cosets.
//
// Conventions: D_0 = 0; K_n = (1/n) sum_{k=1}^n D_k;
// F_n = (1/Q_n) sum_{k=1}^n q_{n-k} D_k; F^{-1}_n = (1/Q_n) sum_{k=0}^{n-1} q_k D_k.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vilenkin/group.hpp"
#include "vilenkin/transform.hpp"
#include "vilenkin/weights.hpp"

namespace vilenkin {

enum class KernelKind { dirichlet, fejer, norlund, tmean };

inline const char* kernel_name(KernelKind kind) {
    switch (kind) {
        case KernelKind::dirichlet: return "dirichlet";
        case KernelKind::fejer: return "fejer";
        case KernelKind::norlund: return "norlund";
        case KernelKind::tmean: return "tmean";
    }
    return "?";
}

struct KernelTable {
    KernelKind kind;
    std::size_t order;
    StepFunction values;

    const VilenkinBase& base() const noexcept { return values.base(); }
    cplx integral() const { return values.integral(); }
};

namespace detail {

inline void check_order(std::size_t n, const VilenkinBase& base, std::size_t lowest, const char* what) {
    if (n < lowest || n > base.size())
        throw std::out_of_range(std::string(what) + ": order " + std::to_string(n) + " outside [" +
                                std::to_string(lowest) + ", " + std::to_string(base.size()) + "]");
}

}  // namespace detail

// Spectral multipliers: the coefficient of psi_j in each kernel, j < M_N.

inline std::vector<double> dirichlet_multipliers(std::size_t n, std::size_t size) {
    std::vector<double> c(size, 0.0);
    std::fill_n(c.begin(), std::min(n, size), 1.0);
    return c;
}

inline std::vector<double> fejer_multipliers(std::size_t n, std::size_t size) {
    std::vector<double> c(size, 0.0);
    for (std::size_t j = 0; j < std::min(n, size); ++j)
        c[j] = static_cast<double>(n - j) / static_cast<double>(n);
    return c;
}

/// Q_{n-j} / Q_n for j < n.
inline std::vector<double> norlund_multipliers(const WeightSequence& w, std::size_t n, std::size_t size) {
    const double Qn = w.require_positive_Q(n);
    std::vector<double> c(size, 0.0);
    for (std::size_t j = 0; j < std::min(n, size); ++j) c[j] = w.Q(n - j) / Qn;
    return c;
}

/// (Q_n - Q_{j+1}) / Q_n for j < n.
inline std::vector<double> t_multipliers(const WeightSequence& w, std::size_t n, std::size_t size) {
    const double Qn = w.require_positive_Q(n);
    std::vector<double> c(size, 0.0);
    for (std::size_t j = 0; j < std::min(n, size); ++j) c[j] = (Qn - w.Q(j + 1)) / Qn;
    return c;
}

inline std::vector<double> mean_multipliers(const WeightSequence& w, std::size_t n, std::size_t size,
                                            MeanFamily family) {
    return family == MeanFamily::norlund ? norlund_multipliers(w, n, size) : t_multipliers(w, n, size);
}

inline StepFunction synthesize(const VilenkinBase& base, std::span<const double> multipliers) {
    Spectrum s(base);
    for (std::size_t j = 0; j < s.size(); ++j) s[j] = multipliers[j];
    return inverse(s);
}

/// D_n = sum_{k<n} psi_k, 0 <= n <= M_N.
inline KernelTable dirichlet(const VilenkinBase& base, std::size_t n) {
    detail::check_order(n, base, 0, "dirichlet");
    return {KernelKind::dirichlet, n, synthesize(base, dirichlet_multipliers(n, base.size()))};
}

inline KernelTable fejer_kernel(const VilenkinBase& base, std::size_t n) {
    detail::check_order(n, base, 1, "fejer_kernel");
    return {KernelKind::fejer, n, synthesize(base, fejer_multipliers(n, base.size()))};
}

inline KernelTable norlund_kernel(const WeightSequence& w, const VilenkinBase& base, std::size_t n) {
    detail::check_order(n, base, 1, "norlund_kernel");
    return {KernelKind::norlund, n, synthesize(base, norlund_multipliers(w, n, base.size()))};
}

inline KernelTable t_kernel(const WeightSequence& w, const VilenkinBase& base, std::size_t n) {
    detail::check_order(n, base, 1, "t_kernel");
    return {KernelKind::tmean, n, synthesize(base, t_multipliers(w, n, base.size()))};
}

inline KernelTable mean_kernel(const WeightSequence& w, const VilenkinBase& base, std::size_t n, MeanFamily family) {
    return family == MeanFamily::norlund ? norlund_kernel(w, base, n) : t_kernel(w, base, n);
}

/// Running sums j K_j = sum_{k=1}^j D_k for j = 0..max_order, built by adding
/// sampled characters one at a time (no transform involved).
class FejerLadder {
public:
    FejerLadder(const VilenkinBase& base, std::size_t max_order) : base_(base), max_order_(max_order) {
        detail::check_order(max_order, base, 0, "FejerLadder");
        const std::size_t size = base.size();
        CharacterSampler sampler(base);
        std::vector<cplx> dirichlet_running(size, cplx{});
        std::vector<cplx> psi(size);
        scaled_.assign((max_order + 1) * size, cplx{});
        for (std::size_t j = 1; j <= max_order; ++j) {
            sampler.sample(j - 1, psi);
            cplx* row = &scaled_[j * size];
            const cplx* prev = &scaled_[(j - 1) * size];
            for (std::size_t x = 0; x < size; ++x) {
                dirichlet_running[x] += psi[x];
                row[x] = prev[x] + dirichlet_running[x];
            }
        }
    }

    const VilenkinBase& base() const noexcept { return base_; }
    std::size_t max_order() const noexcept { return max_order_; }

    /// j K_j sampled on every rank.
    std::span<const cplx> scaled(std::size_t j) const {
        if (j > max_order_) throw std::out_of_range("FejerLadder: order beyond ladder");
        return {&scaled_[j * base_.size()], base_.size()};
    }

    /// D_j = j K_j - (j-1) K_{j-1}.
    StepFunction dirichlet(std::size_t j) const {
        StepFunction out(base_);
        if (j == 0) return out;
        auto cur = scaled(j);
        auto prev = scaled(j - 1);
        for (std::size_t x = 0; x < base_.size(); ++x) out[x] = cur[x] - prev[x];
        return out;
    }

    StepFunction fejer(std::size_t j) const {
        if (j == 0) throw std::out_of_range("FejerLadder: K_0 is undefined");
        StepFunction out(base_, std::vector<cplx>(scaled(j).begin(), scaled(j).end()));
        out *= 1.0 / static_cast<double>(j);
        return out;
    }

private:
    VilenkinBase base_;
    std::size_t max_order_;
    std::vector<cplx> scaled_;
};

/// F_n through the Abel rearrangement
/// (1/Q_n)(sum_{j=1}^{n-1} (q_{n-j} - q_{n-j-1}) j K_j + q_0 n K_n).
inline StepFunction norlund_kernel_abel(const FejerLadder& ladder, const WeightSequence& w, std::size_t n) {
    if (n < 1 || n > ladder.max_order()) throw std::out_of_range("norlund_kernel_abel: order outside ladder");
    const double Qn = w.require_positive_Q(n);
    const std::size_t size = ladder.base().size();
    StepFunction out(ladder.base());
    for (std::size_t j = 1; j + 1 <= n; ++j) {
        const double coeff = w.q(n - j) - w.q(n - j - 1);
        if (coeff == 0.0) continue;
        auto row = ladder.scaled(j);
        for (std::size_t x = 0; x < size; ++x) out[x] += coeff * row[x];
    }
    auto last = ladder.scaled(n);
    for (std::size_t x = 0; x < size; ++x) out[x] = (out[x] + w.q(0) * last[x]) / Qn;
    return out;
}

/// Relative residual of Q_n = sum_{j=1}^{n-1} (q_{n-j} - q_{n-j-1}) j + q_0 n.
inline double abel_scalar_residual(const WeightSequence& w, std::size_t n) {
    if (n < 1) throw std::out_of_range("abel_scalar_residual: n must be >= 1");
    double rearranged = w.q(0) * static_cast<double>(n);
    for (std::size_t j = 1; j + 1 <= n; ++j) rearranged += (w.q(n - j) - w.q(n - j - 1)) * static_cast<double>(j);
    const double Qn = w.Q(n);
    const double diff = std::abs(Qn - rearranged);
    return Qn > 0.0 ? diff / Qn : diff;
}

inline double max_abs_diff(std::span<const cplx> a, std::span<const cplx> b) {
    if (a.size() != b.size()) throw std::invalid_argument("max_abs_diff: size mismatch");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

/// max_x |D_{M_r - j} - (D_{M_r} - psi_{M_r - 1} conj(D_j))|.
inline double paley_residual(const VilenkinBase& base, std::size_t r, std::size_t j) {
    if (r > base.depth()) throw std::out_of_range("paley_residual: level beyond depth");
    const std::size_t Mr = base.block(r);
    if (j >= Mr) throw std::out_of_range("paley_residual: j must be < M_r");
    const StepFunction lhs = dirichlet(base, Mr - j).values;
    const StepFunction full = dirichlet(base, Mr).values;
    const StepFunction dj = dirichlet(base, j).values;
    const std::vector<cplx> psi = CharacterSampler(base).sample(Mr - 1);
    double worst = 0.0;
    for (std::size_t x = 0; x < base.size(); ++x)
        worst = std::max(worst, std::abs(lhs[x] - (full[x] - psi[x] * std::conj(dj[x]))));
    return worst;
}

/// max_x |F_{M_r} - (D_{M_r} - psi_{M_r - 1} conj(F^{-1}_{M_r}))| for
/// non-increasing weights, 1 <= r <= N.
inline double norlund_block_residual(const WeightSequence& w, const VilenkinBase& base, std::size_t r) {
    if (!w.non_increasing())
        throw std::invalid_argument("norlund_block_residual: weights " + w.name() + " are not non-increasing");
    if (r < 1 || r > base.depth()) throw std::out_of_range("norlund_block_residual: level must be in [1, N]");
    const std::size_t Mr = base.block(r);
    const StepFunction lhs = norlund_kernel(w, base, Mr).values;
    const StepFunction dm = dirichlet(base, Mr).values;
    const StepFunction tk = t_kernel(w, base, Mr).values;
    const std::vector<cplx> psi = CharacterSampler(base).sample(Mr - 1);
    double worst = 0.0;
    for (std::size_t x = 0; x < base.size(); ++x)
        worst = std::max(worst, std::abs(lhs[x] - (dm[x] - psi[x] * std::conj(tk[x]))));
    return worst;
}

inline double l1_norm(const StepFunction& f) {
    double sum = 0.0;
    for (const cplx& v : f.values()) sum += std::abs(v);
    return sum / static_cast<double>(f.size());
}

struct KernelNorm {
    std::size_t n;
    double l1;
};

/// ||F_n||_1 for each requested order (T kernels for T-family weights).
inline std::vector<KernelNorm> kernel_l1_profile(const WeightSequence& w, const VilenkinBase& base,
                                                 std::span<const std::size_t> orders,
                                                 MeanFamily family = MeanFamily::norlund) {
    std::vector<KernelNorm> out;
    out.reserve(orders.size());
    for (std::size_t n : orders) out.push_back({n, l1_norm(mean_kernel(w, base, n, family).values)});
    return out;
}

/// Integral of |F_n| over G_m minus I_{cut}(0).
inline double kernel_tail(const WeightSequence& w, const VilenkinBase& base, std::size_t n, std::size_t cut,
                          MeanFamily family = MeanFamily::norlund) {
    if (cut >= base.depth()) throw std::out_of_range("kernel_tail: cut level must be < N");
    const StepFunction k = mean_kernel(w, base, n, family).values;
    const std::size_t block = base.block(cut);
    double sum = 0.0;
    for (std::size_t x = 0; x < base.size(); ++x)
        if (x % block != 0) sum += std::abs(k[x]);
    return sum / static_cast<double>(base.size());
}

/// max_x n|K_n(x)| / sum_{l=<n>}^{|n|} M_l |K_{M_l}(x)|, with 0/0 counted as
/// satisfied and a positive numerator over a zero denominator as infinity.
inline double fejer_order_bound_ratio(const VilenkinBase& base, std::size_t n) {
    detail::check_order(n, base, 1, "fejer_order_bound_ratio");
    constexpr double tiny = 1e-11;
    const StepFunction kn = fejer_kernel(base, n).values;
    std::vector<double> denom(base.size(), 0.0);
    // n = M_N has a single nonzero digit at position N, outside the digit range.
    std::size_t lo = base.depth();
    std::size_t hi = base.depth();
    if (n < base.size()) {
        const OrderStats stats = order_stats(n, base);
        lo = stats.lowest;
        hi = stats.highest;
    }
    for (std::size_t l = lo; l <= hi; ++l) {
        const StepFunction kl = fejer_kernel(base, base.block(l)).values;
        const double Ml = static_cast<double>(base.block(l));
        for (std::size_t x = 0; x < base.size(); ++x) denom[x] += Ml * std::abs(kl[x]);
    }
    double worst = 0.0;
    for (std::size_t x = 0; x < base.size(); ++x) {
        const double num = static_cast<double>(n) * std::abs(kn[x]);
        if (num <= tiny) continue;
        if (denom[x] <= tiny) return std::numeric_limits<double>::infinity();
        worst = std::max(worst, num / denom[x]);
    }
    return worst;
}

}  // namespace vilenkin

#endif  // VILENKIN_KERNELS_HPP
