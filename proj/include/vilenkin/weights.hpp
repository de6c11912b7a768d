#ifndef VILENKIN_WEIGHTS_HPP
#define VILENKIN_WEIGHTS_HPP

// Weight sequences {q_k} for Norlund and T summation, tabulated together
// with their prefix sums Q_n = q_0 + ... + q_{n-1}.

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace vilenkin {

enum class WeightKind { constant, cesaro, valpha, riesz_log, norlund_log, blog };

enum class Monotonicity { constant, non_decreasing, non_increasing, none };

/// Which partial-sum average a weight family drives by default.
enum class MeanFamily { norlund, t };

struct WeightSpec {
    WeightKind kind = WeightKind::constant;
    double alpha = 1.0;
    int beta = 1;

    friend bool operator==(const WeightSpec&, const WeightSpec&) = default;
};

/// Error for weights whose prefix sum vanishes at the requested order.
class degenerate_weights : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

inline const char* kind_name(WeightKind kind) {
    switch (kind) {
        case WeightKind::constant: return "constant";
        case WeightKind::cesaro: return "cesaro";
        case WeightKind::valpha: return "valpha";
        case WeightKind::riesz_log: return "riesz_log";
        case WeightKind::norlund_log: return "norlund_log";
        case WeightKind::blog: return "blog";
    }
    return "?";
}

namespace detail {

inline std::string format_param(double v) {
    std::string s = std::to_string(v);
    while (!s.empty() && s.back() == '0') s.pop_back();
    if (!s.empty() && s.back() == '.') s.pop_back();
    return s;
}

inline double parse_double(std::string_view text, std::string_view what) {
    std::string s(text);
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad " + std::string(what) + " '" + s + "'");
    }
    if (used != s.size()) throw std::invalid_argument("bad " + std::string(what) + " '" + s + "'");
    return v;
}

/// log applied `beta` times to k^alpha; 0 wherever a step is undefined or
/// the result is not strictly positive.
inline double iterated_log_weight(std::size_t k, double alpha, int beta) {
    if (k < 1) return 0.0;
    double v = alpha * std::log(static_cast<double>(k));
    for (int i = 1; i < beta; ++i) {
        if (!(v > 0.0)) return 0.0;
        v = std::log(v);
    }
    return v > 0.0 ? v : 0.0;
}

}  // namespace detail

inline std::string to_string(const WeightSpec& spec) {
    switch (spec.kind) {
        case WeightKind::cesaro:
        case WeightKind::valpha: return std::string(kind_name(spec.kind)) + ":" + detail::format_param(spec.alpha);
        case WeightKind::blog:
            return std::string("blog:") + detail::format_param(spec.alpha) + ":" + std::to_string(spec.beta);
        default: return kind_name(spec.kind);
    }
}

/// Grammar: constant | fejer | cesaro:A | valpha:A | riesz_log | norlund_log | blog:A:B
inline WeightSpec parse_weight_spec(std::string_view text) {
    std::vector<std::string_view> parts;
    std::size_t pos = 0;
    while (true) {
        std::size_t colon = text.find(':', pos);
        parts.push_back(text.substr(pos, colon == std::string_view::npos ? std::string_view::npos : colon - pos));
        if (colon == std::string_view::npos) break;
        pos = colon + 1;
    }
    const std::string_view head = parts[0];
    auto arity = [&](std::size_t n) {
        if (parts.size() != n + 1)
            throw std::invalid_argument("weight kind '" + std::string(head) + "' takes " + std::to_string(n) +
                                        " parameter(s): '" + std::string(text) + "'");
    };
    WeightSpec spec;
    if (head == "constant" || head == "fejer") {
        arity(0);
        spec.kind = WeightKind::constant;
    } else if (head == "cesaro" || head == "valpha") {
        arity(1);
        spec.kind = head == "cesaro" ? WeightKind::cesaro : WeightKind::valpha;
        spec.alpha = detail::parse_double(parts[1], "alpha");
    } else if (head == "riesz_log") {
        arity(0);
        spec.kind = WeightKind::riesz_log;
    } else if (head == "norlund_log") {
        arity(0);
        spec.kind = WeightKind::norlund_log;
    } else if (head == "blog") {
        arity(2);
        spec.kind = WeightKind::blog;
        spec.alpha = detail::parse_double(parts[1], "alpha");
        const double beta = detail::parse_double(parts[2], "beta");
        if (beta != std::floor(beta) || beta > 64) throw std::invalid_argument("blog: beta must be an integer");
        spec.beta = static_cast<int>(beta);
    } else {
        throw std::invalid_argument("unknown weight kind '" + std::string(text) + "'");
    }
    return spec;
}

class WeightSequence {
public:
    static constexpr std::size_t default_horizon = std::size_t{1} << 16;

    WeightSequence(WeightSpec spec, std::vector<double> q) : spec_(spec), q_(std::move(q)) {
        prefix_.resize(q_.size() + 1);
        prefix_[0] = 0.0;
        for (std::size_t k = 0; k < q_.size(); ++k) {
            if (!(q_[k] >= 0.0)) throw std::domain_error("WeightSequence: negative weight at " + std::to_string(k));
            prefix_[k + 1] = prefix_[k] + q_[k];
        }
    }

    const WeightSpec& spec() const noexcept { return spec_; }
    WeightKind kind() const noexcept { return spec_.kind; }
    std::string name() const { return to_string(spec_); }
    /// Number of tabulated weights; Q_n is available for n <= horizon().
    std::size_t horizon() const noexcept { return q_.size(); }

    double q(std::size_t k) const {
        if (k >= q_.size())
            throw std::out_of_range("weight index " + std::to_string(k) + " beyond horizon " +
                                    std::to_string(q_.size()));
        return q_[k];
    }

    double Q(std::size_t n) const {
        if (n >= prefix_.size())
            throw std::out_of_range("prefix sum index " + std::to_string(n) + " beyond horizon " +
                                    std::to_string(q_.size()));
        return prefix_[n];
    }

    /// Throws degenerate_weights unless Q_n > 0.
    double require_positive_Q(std::size_t n) const {
        const double value = Q(n);
        if (!(value > 0.0))
            throw degenerate_weights("weights " + name() + " have Q_" + std::to_string(n) + " = 0");
        return value;
    }

    Monotonicity monotonicity() const noexcept {
        switch (spec_.kind) {
            case WeightKind::constant: return Monotonicity::constant;
            case WeightKind::cesaro:
                return spec_.alpha == 1.0 ? Monotonicity::constant : Monotonicity::non_increasing;
            case WeightKind::valpha: return Monotonicity::non_increasing;
            case WeightKind::blog: return Monotonicity::non_decreasing;
            case WeightKind::riesz_log:
            case WeightKind::norlund_log: return Monotonicity::none;
        }
        return Monotonicity::none;
    }

    bool non_increasing() const noexcept {
        const auto m = monotonicity();
        return m == Monotonicity::constant || m == Monotonicity::non_increasing;
    }
    bool non_decreasing() const noexcept {
        const auto m = monotonicity();
        return m == Monotonicity::constant || m == Monotonicity::non_decreasing;
    }

    /// The logarithmic families have q_0 = 0.
    bool exceptional() const noexcept {
        return spec_.kind == WeightKind::norlund_log || spec_.kind == WeightKind::riesz_log ||
               spec_.kind == WeightKind::blog;
    }

    /// Riesz logarithmic weights drive T means; everything else is Norlund.
    MeanFamily natural_family() const noexcept {
        return spec_.kind == WeightKind::riesz_log ? MeanFamily::t : MeanFamily::norlund;
    }

private:
    WeightSpec spec_;
    std::vector<double> q_;
    std::vector<double> prefix_;
};

inline WeightSequence make_weights(const WeightSpec& spec, std::size_t horizon = WeightSequence::default_horizon) {
    if (horizon == 0) throw std::invalid_argument("make_weights: horizon must be positive");
    std::vector<double> q(horizon);
    switch (spec.kind) {
        case WeightKind::constant:
            for (double& v : q) v = 1.0;
            break;
        case WeightKind::cesaro: {
            // q_k = A_k^{alpha-1}; alpha = 1 is the Fejer limit q = 1.
            if (!(spec.alpha > 0.0 && spec.alpha <= 1.0))
                throw std::domain_error("cesaro: alpha must lie in (0, 1], got " + detail::format_param(spec.alpha));
            const double a = spec.alpha - 1.0;
            q[0] = 1.0;
            for (std::size_t k = 1; k < horizon; ++k) q[k] = q[k - 1] * (a + static_cast<double>(k)) / static_cast<double>(k);
            break;
        }
        case WeightKind::valpha:
            if (!(spec.alpha > 0.0 && spec.alpha < 1.0))
                throw std::domain_error("valpha: alpha must lie in (0, 1), got " + detail::format_param(spec.alpha));
            q[0] = 1.0;
            for (std::size_t k = 1; k < horizon; ++k) q[k] = std::pow(static_cast<double>(k), spec.alpha - 1.0);
            break;
        case WeightKind::riesz_log:
        case WeightKind::norlund_log:
            q[0] = 0.0;
            for (std::size_t k = 1; k < horizon; ++k) q[k] = 1.0 / static_cast<double>(k);
            break;
        case WeightKind::blog:
            if (!(spec.alpha > 0.0)) throw std::domain_error("blog: alpha must be positive");
            if (spec.beta < 1) throw std::domain_error("blog: beta must be >= 1");
            for (std::size_t k = 0; k < horizon; ++k) q[k] = detail::iterated_log_weight(k, spec.alpha, spec.beta);
            break;
    }
    return WeightSequence(spec, std::move(q));
}

inline WeightSequence make_weights(std::string_view text, std::size_t horizon = WeightSequence::default_horizon) {
    return make_weights(parse_weight_spec(text), horizon);
}

struct RegularityReport {
    std::size_t horizon = 0;
    /// max over n <= horizon (Q_n > 0) of n q_{n-1} / Q_n.
    double max_ratio = 0.0;
    std::size_t argmax = 0;
    double final_ratio = 0.0;
    /// n q_{n-1} / Q_n never increases across the scanned range.
    bool ratio_non_increasing = true;
    /// q_{horizon-1} / Q_horizon, the Norlund regularity quantity itself.
    double final_norlund_quantity = 0.0;
    double final_Q = 0.0;
    /// Q_n strictly increasing on the upper half of the range (T criterion trend).
    bool Q_growing = false;
};

inline RegularityReport regularity_check(const WeightSequence& w, std::size_t horizon) {
    if (horizon < 2) throw std::invalid_argument("regularity_check: horizon must be >= 2");
    if (horizon > w.horizon()) throw std::out_of_range("regularity_check: horizon beyond tabulated weights");
    RegularityReport report;
    report.horizon = horizon;
    double previous = std::numeric_limits<double>::infinity();
    for (std::size_t n = 1; n <= horizon; ++n) {
        const double Qn = w.Q(n);
        if (!(Qn > 0.0)) continue;
        const double ratio = static_cast<double>(n) * w.q(n - 1) / Qn;
        if (ratio > report.max_ratio) {
            report.max_ratio = ratio;
            report.argmax = n;
        }
        if (ratio > previous * (1.0 + 1e-12)) report.ratio_non_increasing = false;
        previous = ratio;
        report.final_ratio = ratio;
    }
    report.final_Q = w.Q(horizon);
    report.final_norlund_quantity = report.final_Q > 0.0 ? w.q(horizon - 1) / report.final_Q : 0.0;
    report.Q_growing = true;
    for (std::size_t n = horizon / 2 + 1; n <= horizon; ++n)
        if (!(w.Q(n) > w.Q(n - 1))) report.Q_growing = false;
    return report;
}

}  // namespace vilenkin

#endif  // VILENKIN_WEIGHTS_HPP
