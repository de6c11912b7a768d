#ifndef VILENKIN_CORPUS_HPP
#define VILENKIN_CORPUS_HPP

// Named test functions:
//   constant      f = 1
//   character:k   psi_k
//   coset:r       indicator of I_r(0)
//   spike:r       M_r times the indicator of I_r(0) (unit L1 mass)
//   smooth2       cos(2 pi u), u = x_0/m_0 + x_1/(m_0 m_1); depends on x_0, x_1 only
//   random        i.i.d. real values in [-1, 1] from a seeded mt19937_64

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

#include "vilenkin/group.hpp"
#include "vilenkin/transform.hpp"

namespace vilenkin {

/// Deterministic uniform draw in [-1, 1]; avoids std::uniform_real_distribution,
/// whose output is implementation-defined.
inline double signed_unit(std::mt19937_64& gen) {
    const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
    return 2.0 * u - 1.0;
}

inline StepFunction random_function(const VilenkinBase& base, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    StepFunction f(base);
    for (std::size_t x = 0; x < f.size(); ++x) f[x] = signed_unit(gen);
    return f;
}

inline StepFunction coset_indicator(const VilenkinBase& base, std::size_t r, double height = 1.0) {
    if (r > base.depth()) throw std::out_of_range("coset level " + std::to_string(r) + " exceeds depth");
    StepFunction f(base);
    for (std::size_t x = 0; x < f.size(); x += base.block(r)) f[x] = height;
    return f;
}

inline StepFunction corpus(std::string_view name, const VilenkinBase& base, std::uint64_t seed = 0) {
    const std::size_t colon = name.find(':');
    const std::string_view head = name.substr(0, colon);
    const bool has_arg = colon != std::string_view::npos;
    auto arg = [&]() -> std::size_t {
        if (!has_arg) throw std::invalid_argument("corpus '" + std::string(head) + "' needs an integer argument");
        const std::string text(name.substr(colon + 1));
        std::size_t used = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(text, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != text.size() || text[0] == '-')
            throw std::invalid_argument("corpus '" + std::string(name) + "': bad argument");
        return static_cast<std::size_t>(v);
    };
    auto no_arg = [&] {
        if (has_arg) throw std::invalid_argument("corpus '" + std::string(head) + "' takes no argument");
    };

    if (head == "constant") {
        no_arg();
        StepFunction f(base);
        for (std::size_t x = 0; x < f.size(); ++x) f[x] = 1.0;
        return f;
    }
    if (head == "character") return sample_character(arg(), base);
    if (head == "coset") return coset_indicator(base, arg());
    if (head == "spike") {
        const std::size_t r = arg();
        if (r > base.depth()) throw std::out_of_range("spike level exceeds depth");
        return coset_indicator(base, r, static_cast<double>(base.block(r)));
    }
    if (head == "smooth2") {
        no_arg();
        StepFunction f(base);
        const double m0 = base.radix(0);
        const double m1 = base.depth() > 1 ? base.radix(1) : 1.0;
        for (std::size_t x = 0; x < f.size(); ++x) {
            const double x0 = digit_at(x, 0, base);
            const double x1 = base.depth() > 1 ? digit_at(x, 1, base) : 0.0;
            f[x] = std::cos(2.0 * std::numbers::pi * (x0 / m0 + x1 / (m0 * m1)));
        }
        return f;
    }
    if (head == "random") {
        no_arg();
        return random_function(base, seed);
    }
    throw std::invalid_argument("unknown corpus '" + std::string(name) + "'");
}

}  // namespace vilenkin

#endif  // VILENKIN_CORPUS_HPP
