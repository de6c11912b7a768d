#ifndef VILENKIN_CONFIG_HPP
#define VILENKIN_CONFIG_HPP

// Experiment configuration: a flat key=value file (with '#' comments) plus
// command-line overrides. Keys mirror the CLI flags: base, depth, weights,
// corpus, n, p, seed, out, points, cap.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "vilenkin/group.hpp"
#include "vilenkin/weights.hpp"

namespace vilenkin {

namespace detail {

inline std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(first, last - first + 1));
}

inline std::vector<std::string> split_list(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t next = s.find(sep, pos);
        if (next == std::string_view::npos) next = s.size();
        std::string item = trim(s.substr(pos, next - pos));
        if (!item.empty()) out.push_back(std::move(item));
        pos = next + 1;
    }
    return out;
}

inline std::size_t parse_size(std::string_view text) {
    const std::string s(text);
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size() || s[0] == '-') throw std::invalid_argument("bad integer '" + s + "'");
    return static_cast<std::size_t>(v);
}

}  // namespace detail

/// "1..512", "4,8,16", "1..4,64" (ranges inclusive).
inline std::vector<std::size_t> parse_index_list(std::string_view text) {
    std::vector<std::size_t> out;
    for (const std::string& item : detail::split_list(text, ',')) {
        const auto dots = item.find("..");
        if (dots == std::string::npos) {
            out.push_back(detail::parse_size(item));
            continue;
        }
        const std::size_t lo = detail::parse_size(item.substr(0, dots));
        const std::size_t hi = detail::parse_size(item.substr(dots + 2));
        if (lo > hi) throw std::invalid_argument("empty range '" + item + "'");
        for (std::size_t n = lo; n <= hi; ++n) out.push_back(n);
    }
    if (out.empty()) throw std::invalid_argument("empty index list");
    return out;
}

/// "1,2,inf".
inline std::vector<double> parse_p_list(std::string_view text) {
    std::vector<double> out;
    for (const std::string& item : detail::split_list(text, ',')) {
        double p = 0.0;
        if (item == "inf" || item == "infinity") {
            p = std::numeric_limits<double>::infinity();
        } else {
            std::size_t used = 0;
            try {
                p = std::stod(item, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used == 0 || used != item.size()) throw std::invalid_argument("bad exponent '" + item + "'");
        }
        if (!(p >= 1.0)) throw std::domain_error("norm exponent must be >= 1: '" + item + "'");
        out.push_back(p);
    }
    if (out.empty()) throw std::invalid_argument("empty exponent list");
    return out;
}

inline const std::vector<std::string>& default_weight_kinds() {
    static const std::vector<std::string> kinds = {"constant",    "cesaro:0.5",  "valpha:0.5",
                                                   "riesz_log",   "norlund_log", "blog:0.5:1"};
    return kinds;
}

struct ExperimentConfig {
    std::string base = "2,3,2";
    std::optional<std::size_t> depth;
    std::vector<std::string> weights = default_weight_kinds();
    std::vector<std::string> corpus = {"smooth2"};
    std::optional<std::vector<std::size_t>> n_list;  // empty: command default
    std::vector<double> p_list = {1.0, 2.0, std::numeric_limits<double>::infinity()};
    std::vector<std::size_t> points = {0};
    std::uint64_t seed = 1;
    std::string out;  // empty: stdout
    std::size_t cap = 4096;

    VilenkinBase make_base() const {
        VilenkinBase b = VilenkinBase::parse(base, depth);
        if (b.size() > cap)
            throw std::domain_error("group order " + std::to_string(b.size()) + " exceeds cap " + std::to_string(cap));
        return b;
    }

    std::vector<WeightSequence> make_weight_sequences(std::size_t horizon) const {
        std::vector<WeightSequence> out;
        for (const auto& w : weights) out.push_back(make_weights(w, horizon));
        return out;
    }

    /// Applies one key=value setting; unknown keys are usage errors.
    void set(std::string_view key, std::string_view value) {
        const std::string v = detail::trim(value);
        if (key == "base") {
            VilenkinBase::parse(v);
            base = v;
        } else if (key == "depth") {
            depth = detail::parse_size(v);
        } else if (key == "weights") {
            weights = detail::split_list(v, ',');
            for (const auto& w : weights) parse_weight_spec(w);
        } else if (key == "corpus") {
            corpus = detail::split_list(v, ',');
        } else if (key == "n") {
            n_list = parse_index_list(v);
        } else if (key == "p") {
            p_list = parse_p_list(v);
        } else if (key == "points") {
            points = parse_index_list(v);
        } else if (key == "seed") {
            seed = detail::parse_size(v);
        } else if (key == "out") {
            out = v;
        } else if (key == "cap") {
            cap = detail::parse_size(v);
        } else {
            throw std::invalid_argument("unknown config key '" + std::string(key) + "'");
        }
    }

    void load(std::istream& is) {
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(is, line)) {
            ++lineno;
            const auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            const std::string t = detail::trim(line);
            if (t.empty()) continue;
            const auto eq = t.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key=value");
            set(detail::trim(t.substr(0, eq)), t.substr(eq + 1));
        }
    }
};

}  // namespace vilenkin

#endif  // VILENKIN_CONFIG_HPP
