#ifndef VILENKIN_TRANSFORM_HPP
#define VILENKIN_TRANSFORM_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vilenkin/group.hpp"

namespace vilenkin {

using cplx = std::complex<double>;

/// A function constant on every rank-N coset, stored by rank. Integrals
/// against the Haar measure are exact sums with weight 1/M_N.
class StepFunction {
public:
    StepFunction() = default;
    explicit StepFunction(VilenkinBase base) : base_(std::move(base)), values_(base_.size()) {}
    StepFunction(VilenkinBase base, std::vector<cplx> values) : base_(std::move(base)), values_(std::move(values)) {
        if (values_.size() != base_.size())
            throw std::invalid_argument("StepFunction: expected " + std::to_string(base_.size()) + " values, got " +
                                        std::to_string(values_.size()));
    }

    const VilenkinBase& base() const noexcept { return base_; }
    std::size_t size() const noexcept { return values_.size(); }
    std::span<const cplx> values() const noexcept { return values_; }
    std::span<cplx> values() noexcept { return values_; }
    cplx operator[](std::size_t rank) const { return values_[rank]; }
    cplx& operator[](std::size_t rank) { return values_[rank]; }
    cplx at(const GroupPoint& x) const {
        require_same_base(base_, x.base(), "StepFunction::at");
        return values_[x.rank()];
    }

    cplx integral() const {
        cplx sum{};
        for (const cplx& v : values_) sum += v;
        return sum / static_cast<double>(values_.size());
    }

    StepFunction& operator+=(const StepFunction& other) {
        require_same_base(base_, other.base_, "StepFunction::operator+=");
        for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
        return *this;
    }
    StepFunction& operator-=(const StepFunction& other) {
        require_same_base(base_, other.base_, "StepFunction::operator-=");
        for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
        return *this;
    }
    StepFunction& operator*=(cplx c) {
        for (cplx& v : values_) v *= c;
        return *this;
    }
    friend StepFunction operator+(StepFunction a, const StepFunction& b) { return a += b; }
    friend StepFunction operator-(StepFunction a, const StepFunction& b) { return a -= b; }
    friend StepFunction operator*(cplx c, StepFunction a) { return a *= c; }
    friend StepFunction operator*(StepFunction a, cplx c) { return a *= c; }

private:
    VilenkinBase base_;
    std::vector<cplx> values_;
};

/// Vilenkin-Fourier coefficients f^(0), ..., f^(M_N - 1).
class Spectrum {
public:
    Spectrum() = default;
    explicit Spectrum(VilenkinBase base) : base_(std::move(base)), coeffs_(base_.size()) {}
    Spectrum(VilenkinBase base, std::vector<cplx> coeffs) : base_(std::move(base)), coeffs_(std::move(coeffs)) {
        if (coeffs_.size() != base_.size())
            throw std::invalid_argument("Spectrum: expected " + std::to_string(base_.size()) + " coefficients, got " +
                                        std::to_string(coeffs_.size()));
    }

    const VilenkinBase& base() const noexcept { return base_; }
    std::size_t size() const noexcept { return coeffs_.size(); }
    std::span<const cplx> coeffs() const noexcept { return coeffs_; }
    std::span<cplx> coeffs() noexcept { return coeffs_; }
    cplx operator[](std::size_t n) const { return coeffs_[n]; }
    cplx& operator[](std::size_t n) { return coeffs_[n]; }

private:
    VilenkinBase base_;
    std::vector<cplx> coeffs_;
};

namespace detail {

/// exp(2*pi*i*j/m) for j < m.
inline std::vector<cplx> unit_roots(int m) {
    std::vector<cplx> table(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
        // Quarter turns are stored exactly so that m = 2, 4 characters are exact.
        if (4 * j % m == 0) {
            static constexpr cplx quarter[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
            table[static_cast<std::size_t>(j)] = quarter[(4 * j / m) % 4];
        } else {
            table[static_cast<std::size_t>(j)] = std::polar(1.0, 2.0 * std::numbers::pi * j / m);
        }
    }
    return table;
}

/// Per-position root tables, shared between equal radices.
inline std::vector<std::vector<cplx>> root_tables(const VilenkinBase& base) {
    std::vector<std::vector<cplx>> by_radix(static_cast<std::size_t>(base.max_radix()) + 1);
    std::vector<std::vector<cplx>> tables(base.depth());
    for (std::size_t k = 0; k < base.depth(); ++k) {
        auto& cached = by_radix[static_cast<std::size_t>(base.radix(k))];
        if (cached.empty()) cached = unit_roots(base.radix(k));
        tables[k] = cached;
    }
    return tables;
}

// One size-m DFT per stage, applied M_N / m_k times with stride M_k. Input
// and output digit k share position k, so no reordering pass is needed.
inline void vilenkin_butterflies(const VilenkinBase& base, std::vector<cplx>& data, bool conjugate) {
    const auto tables = root_tables(base);
    std::vector<cplx> in(static_cast<std::size_t>(base.max_radix()));
    const std::size_t total = base.size();
    for (std::size_t k = 0; k < base.depth(); ++k) {
        const auto m = static_cast<std::size_t>(base.radix(k));
        const std::size_t stride = base.block(k);
        const std::size_t span = base.block(k + 1);
        const auto& roots = tables[k];
        for (std::size_t hi = 0; hi < total; hi += span) {
            for (std::size_t lo = 0; lo < stride; ++lo) {
                const std::size_t origin = hi + lo;
                for (std::size_t j = 0; j < m; ++j) in[j] = data[origin + j * stride];
                for (std::size_t u = 0; u < m; ++u) {
                    cplx acc = in[0];
                    for (std::size_t j = 1; j < m; ++j) {
                        const std::size_t e = (u * j) % m;
                        const std::size_t idx = conjugate ? (m - e) % m : e;
                        acc += in[j] * roots[idx];
                    }
                    data[origin + u * stride] = acc;
                }
            }
        }
    }
}

}  // namespace detail

/// r_k(x) = exp(2*pi*i*x_k/m_k).
inline cplx rademacher(std::size_t k, const GroupPoint& x) {
    const VilenkinBase& base = x.base();
    if (k >= base.depth())
        throw std::out_of_range("rademacher: coordinate " + std::to_string(k) + " >= depth " +
                                std::to_string(base.depth()));
    return detail::unit_roots(base.radix(k))[static_cast<std::size_t>(x.coord(k))];
}

/// psi_n(x) = prod_k r_k(x)^{n_k}.
inline cplx character(std::size_t n, const GroupPoint& x) {
    const VilenkinBase& base = x.base();
    if (n >= base.size())
        throw std::out_of_range("character: index " + std::to_string(n) + " outside [0, " +
                                std::to_string(base.size()) + ")");
    const Digits nd = decode_index(n, base);
    const Digits xd = x.coords();
    cplx value{1.0, 0.0};
    for (std::size_t k = 0; k < base.depth(); ++k) {
        if (nd[k] == 0 || xd[k] == 0) continue;
        const int m = base.radix(k);
        value *= detail::unit_roots(m)[static_cast<std::size_t>((nd[k] * xd[k]) % m)];
    }
    return value;
}

/// Samples psi_n on every rank through a phase walk: the exponent
/// sum_k n_k x_k / m_k is tracked as an integer modulo lcm(m).
class CharacterSampler {
public:
    explicit CharacterSampler(const VilenkinBase& base) : base_(base) {
        std::size_t l = 1;
        for (int m : base.radices()) l = std::lcm(l, static_cast<std::size_t>(m));
        if (l > (std::size_t{1} << 24)) throw std::domain_error("CharacterSampler: radix lcm too large");
        lcm_ = l;
        roots_ = detail::unit_roots(static_cast<int>(l));
    }

    const VilenkinBase& base() const noexcept { return base_; }

    /// Writes psi_n(x) for x = 0, ..., M_N - 1 into `out`.
    void sample(std::size_t n, std::span<cplx> out) const {
        if (n >= base_.size()) throw std::out_of_range("CharacterSampler: index out of range");
        const std::size_t depth = base_.depth();
        std::vector<std::size_t> step(depth);
        std::vector<std::size_t> wrap(depth);
        const Digits nd = decode_index(n, base_);
        for (std::size_t k = 0; k < depth; ++k) {
            const auto m = static_cast<std::size_t>(base_.radix(k));
            step[k] = static_cast<std::size_t>(nd[k]) * (lcm_ / m) % lcm_;
            // x_k: m - 1 -> 0 removes (m - 1) steps.
            wrap[k] = (lcm_ - (m - 1) * step[k] % lcm_) % lcm_;
        }
        Digits xd(depth, 0);
        std::size_t phase = 0;
        const std::size_t total = base_.size();
        for (std::size_t x = 0; x < total; ++x) {
            out[x] = roots_[phase];
            for (std::size_t k = 0; k < depth; ++k) {
                if (++xd[k] < base_.radix(k)) {
                    phase += step[k];
                    if (phase >= lcm_) phase -= lcm_;
                    break;
                }
                xd[k] = 0;
                phase += wrap[k];
                if (phase >= lcm_) phase -= lcm_;
            }
        }
    }

    std::vector<cplx> sample(std::size_t n) const {
        std::vector<cplx> out(base_.size());
        sample(n, out);
        return out;
    }

private:
    VilenkinBase base_;
    std::size_t lcm_ = 1;
    std::vector<cplx> roots_;
};

inline StepFunction sample_character(std::size_t n, const VilenkinBase& base) {
    return StepFunction(base, CharacterSampler(base).sample(n));
}

/// f^(n) = (1/M_N) sum_x f(x) conj(psi_n(x)) in O(M_N sum_k m_k).
inline Spectrum forward(const StepFunction& f) {
    std::vector<cplx> data(f.values().begin(), f.values().end());
    detail::vilenkin_butterflies(f.base(), data, /*conjugate=*/true);
    const double scale = 1.0 / static_cast<double>(data.size());
    for (cplx& c : data) c *= scale;
    return Spectrum(f.base(), std::move(data));
}

/// sum_n S[n] psi_n, unnormalized.
inline StepFunction inverse(const Spectrum& s) {
    std::vector<cplx> data(s.coeffs().begin(), s.coeffs().end());
    detail::vilenkin_butterflies(s.base(), data, /*conjugate=*/false);
    return StepFunction(s.base(), std::move(data));
}

/// The literal O(M_N^2) coefficient sum.
inline Spectrum forward_naive(const StepFunction& f) {
    const VilenkinBase& base = f.base();
    const std::size_t total = base.size();
    CharacterSampler sampler(base);
    std::vector<cplx> row(total);
    Spectrum out(base);
    for (std::size_t n = 0; n < total; ++n) {
        sampler.sample(n, row);
        // Plain real arithmetic: std::complex multiplication goes through the
        // NaN-recovering library routine.
        double re = 0.0, im = 0.0;
        for (std::size_t x = 0; x < total; ++x) {
            const cplx a = f[x], c = row[x];
            re += a.real() * c.real() + a.imag() * c.imag();
            im += a.imag() * c.real() - a.real() * c.imag();
        }
        out[n] = cplx(re, im) / static_cast<double>(total);
    }
    return out;
}

/// (f * g)(x) = (1/M_N) sum_t f(x - t) g(t).
inline StepFunction convolve(const StepFunction& f, const StepFunction& g) {
    require_same_base(f.base(), g.base(), "convolve");
    const VilenkinBase& base = f.base();
    const std::size_t total = base.size();
    StepFunction out(base);
    for (std::size_t x = 0; x < total; ++x) {
        DifferenceWalker walk(base, x);
        cplx acc{};
        for (std::size_t t = 0; t < total; ++t, walk.advance()) acc += f[walk.difference()] * g[t];
        out[x] = acc / static_cast<double>(total);
    }
    return out;
}

inline StepFunction convolve_spectral(const StepFunction& f, const StepFunction& g) {
    require_same_base(f.base(), g.base(), "convolve_spectral");
    Spectrum fs = forward(f);
    const Spectrum gs = forward(g);
    for (std::size_t n = 0; n < fs.size(); ++n) fs[n] *= gs[n];
    return inverse(fs);
}

}  // namespace vilenkin

#endif  // VILENKIN_TRANSFORM_HPP
