#ifndef VILENKIN_GROUP_HPP
#define VILENKIN_GROUP_HPP

// Mixed-radix coordinates for a bounded Vilenkin group truncated at a finite
// depth N. Every point is a coordinate vector (x_0, ..., x_{N-1}) with
// 0 <= x_k < m_k; the canonical storage form is the rank
// sum_k x_k * M_k, where M_0 = 1 and M_{k+1} = m_k * M_k.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace vilenkin {

using Digits = std::vector<int>;

class VilenkinBase {
public:
    VilenkinBase() = default;

    explicit VilenkinBase(std::vector<int> radices) : radices_(std::move(radices)) {
        if (radices_.empty())
            throw std::invalid_argument("VilenkinBase: at least one radix is required");
        cumprod_.reserve(radices_.size() + 1);
        cumprod_.push_back(1);
        for (int m : radices_) {
            if (m < 2)
                throw std::domain_error("VilenkinBase: every radix must be >= 2, got " +
                                        std::to_string(m));
            std::size_t next = cumprod_.back() * static_cast<std::size_t>(m);
            if (next / static_cast<std::size_t>(m) != cumprod_.back() || next > (std::size_t{1} << 40))
                throw std::domain_error("VilenkinBase: group order overflows");
            cumprod_.push_back(next);
        }
    }

    /// Builds m ≡ radix truncated at `depth`.
    static VilenkinBase uniform(int radix, std::size_t depth) {
        return VilenkinBase(std::vector<int>(depth, radix));
    }

    /// Parses "2,3,2,4". With `depth`, the list is truncated or repeated
    /// periodically until it has exactly `depth` entries ("2" + depth 10 is
    /// the dyadic group at resolution 2^10).
    static VilenkinBase parse(std::string_view text, std::optional<std::size_t> depth = std::nullopt) {
        std::vector<int> list;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t comma = text.find(',', pos);
            if (comma == std::string_view::npos) comma = text.size();
            std::string item(text.substr(pos, comma - pos));
            if (item.empty()) throw std::invalid_argument("empty radix in base '" + std::string(text) + "'");
            std::size_t used = 0;
            int value = 0;
            try {
                value = std::stoi(item, &used);
            } catch (const std::exception&) {
                throw std::invalid_argument("bad radix '" + item + "'");
            }
            if (used != item.size()) throw std::invalid_argument("bad radix '" + item + "'");
            list.push_back(value);
            pos = comma + 1;
        }
        if (depth) {
            if (*depth == 0) throw std::invalid_argument("depth must be positive");
            std::vector<int> cycled(*depth);
            for (std::size_t k = 0; k < *depth; ++k) cycled[k] = list[k % list.size()];
            list = std::move(cycled);
        }
        return VilenkinBase(std::move(list));
    }

    std::size_t depth() const noexcept { return radices_.size(); }
    int radix(std::size_t k) const { return radices_.at(k); }
    std::span<const int> radices() const noexcept { return radices_; }
    std::span<const std::size_t> cumprod() const noexcept { return cumprod_; }
    /// M_k for 0 <= k <= N.
    std::size_t block(std::size_t k) const { return cumprod_.at(k); }
    /// M_N, the number of rank-N cosets.
    std::size_t size() const noexcept { return cumprod_.empty() ? 0 : cumprod_.back(); }
    int max_radix() const noexcept {
        int best = 0;
        for (int m : radices_) best = m > best ? m : best;
        return best;
    }

    std::string to_string() const {
        std::string out;
        for (std::size_t k = 0; k < radices_.size(); ++k) {
            if (k) out += ',';
            out += std::to_string(radices_[k]);
        }
        return out;
    }

    friend bool operator==(const VilenkinBase& a, const VilenkinBase& b) { return a.radices_ == b.radices_; }

private:
    std::vector<int> radices_;
    std::vector<std::size_t> cumprod_;
};

inline void require_same_base(const VilenkinBase& a, const VilenkinBase& b, const char* what) {
    if (!(a == b))
        throw std::domain_error(std::string(what) + ": base mismatch (" + a.to_string() + " vs " +
                                b.to_string() + ")");
}

/// Digits (n_0, ..., n_{N-1}) with n = sum n_j M_j.
inline Digits decode_index(std::size_t n, const VilenkinBase& base) {
    if (n >= base.size())
        throw std::out_of_range("decode_index: " + std::to_string(n) + " is outside [0, " +
                                std::to_string(base.size()) + ")");
    Digits digits(base.depth());
    for (std::size_t k = 0; k < base.depth(); ++k) {
        auto m = static_cast<std::size_t>(base.radix(k));
        digits[k] = static_cast<int>(n % m);
        n /= m;
    }
    return digits;
}

inline std::size_t encode_index(std::span<const int> digits, const VilenkinBase& base) {
    if (digits.size() > base.depth())
        throw std::domain_error("encode_index: more digits than the base depth");
    std::size_t n = 0;
    for (std::size_t k = 0; k < digits.size(); ++k) {
        if (digits[k] < 0 || digits[k] >= base.radix(k))
            throw std::domain_error("encode_index: digit " + std::to_string(digits[k]) + " at position " +
                                    std::to_string(k) + " is outside [0, " + std::to_string(base.radix(k)) +
                                    ")");
        n += static_cast<std::size_t>(digits[k]) * base.block(k);
    }
    return n;
}

/// Digit k of rank n without decoding the rest.
inline int digit_at(std::size_t n, std::size_t k, const VilenkinBase& base) {
    return static_cast<int>((n / base.block(k)) % static_cast<std::size_t>(base.radix(k)));
}

/// Coordinatewise (x + y) mod m on ranks.
inline std::size_t add_ranks(std::size_t x, std::size_t y, const VilenkinBase& base) {
    std::size_t out = 0;
    for (std::size_t k = 0; k < base.depth(); ++k) {
        auto m = static_cast<std::size_t>(base.radix(k));
        out += ((x % m + y % m) % m) * base.block(k);
        x /= m;
        y /= m;
    }
    return out;
}

inline std::size_t sub_ranks(std::size_t x, std::size_t y, const VilenkinBase& base) {
    std::size_t out = 0;
    for (std::size_t k = 0; k < base.depth(); ++k) {
        auto m = static_cast<std::size_t>(base.radix(k));
        out += ((x % m + m - y % m) % m) * base.block(k);
        x /= m;
        y /= m;
    }
    return out;
}

inline std::size_t neg_rank(std::size_t x, const VilenkinBase& base) { return sub_ranks(0, x, base); }

/// Walks t = 0, 1, ..., M_N - 1 in rank order while keeping the rank of
/// (x - t) current in amortized O(1) per step.
class DifferenceWalker {
public:
    DifferenceWalker(const VilenkinBase& base, std::size_t x)
        : base_(&base), t_digits_(base.depth(), 0), diff_digits_(decode_index(x, base)), diff_(x) {}

    std::size_t t() const noexcept { return t_; }
    std::size_t difference() const noexcept { return diff_; }

    void advance() {
        ++t_;
        for (std::size_t k = 0; k < base_->depth(); ++k) {
            const int m = base_->radix(k);
            const auto block = base_->block(k);
            if (diff_digits_[k] == 0) {
                diff_digits_[k] = m - 1;
                diff_ += static_cast<std::size_t>(m - 1) * block;
            } else {
                --diff_digits_[k];
                diff_ -= block;
            }
            if (++t_digits_[k] < m) return;
            t_digits_[k] = 0;
        }
    }

private:
    const VilenkinBase* base_;
    Digits t_digits_;
    Digits diff_digits_;
    std::size_t t_ = 0;
    std::size_t diff_;
};

class GroupPoint {
public:
    GroupPoint(VilenkinBase base, std::size_t rank) : base_(std::move(base)), rank_(rank) {
        if (rank_ >= base_.size())
            throw std::out_of_range("GroupPoint: rank " + std::to_string(rank_) + " outside [0, " +
                                    std::to_string(base_.size()) + ")");
    }

    static GroupPoint from_coords(VilenkinBase base, std::span<const int> coords) {
        if (coords.size() != base.depth())
            throw std::domain_error("GroupPoint: coordinate count differs from base depth");
        const std::size_t rank = encode_index(coords, base);
        return GroupPoint(std::move(base), rank);
    }

    static GroupPoint zero(VilenkinBase base) { return GroupPoint(std::move(base), 0); }

    /// e_s: 1 in coordinate s, 0 elsewhere.
    static GroupPoint unit(VilenkinBase base, std::size_t s) {
        if (s >= base.depth()) throw std::out_of_range("GroupPoint::unit: coordinate out of range");
        const std::size_t rank = base.block(s);
        return GroupPoint(std::move(base), rank);
    }

    const VilenkinBase& base() const noexcept { return base_; }
    std::size_t rank() const noexcept { return rank_; }
    Digits coords() const { return decode_index(rank_, base_); }
    int coord(std::size_t k) const { return digit_at(rank_, k, base_); }

    friend bool operator==(const GroupPoint& a, const GroupPoint& b) {
        return a.rank_ == b.rank_ && a.base_ == b.base_;
    }

private:
    VilenkinBase base_;
    std::size_t rank_;
};

inline GroupPoint group_add(const GroupPoint& x, const GroupPoint& y) {
    require_same_base(x.base(), y.base(), "group_add");
    return GroupPoint(x.base(), add_ranks(x.rank(), y.rank(), x.base()));
}

inline GroupPoint group_sub(const GroupPoint& x, const GroupPoint& y) {
    require_same_base(x.base(), y.base(), "group_sub");
    return GroupPoint(x.base(), sub_ranks(x.rank(), y.rank(), x.base()));
}

inline GroupPoint operator+(const GroupPoint& x, const GroupPoint& y) { return group_add(x, y); }
inline GroupPoint operator-(const GroupPoint& x, const GroupPoint& y) { return group_sub(x, y); }

/// Identifies the coset I_n(x) = {y : y_0 = x_0, ..., y_{n-1} = x_{n-1}}.
struct CosetId {
    std::size_t level;   // n
    std::size_t prefix;  // rank of (x_0, ..., x_{n-1}), in [0, M_n)

    friend bool operator==(const CosetId&, const CosetId&) = default;
};

inline CosetId coset_of(std::size_t rank, std::size_t n, const VilenkinBase& base) {
    if (n > base.depth())
        throw std::out_of_range("coset_of: level " + std::to_string(n) + " exceeds depth " +
                                std::to_string(base.depth()));
    return CosetId{n, rank % base.block(n)};
}

inline CosetId coset_of(const GroupPoint& x, std::size_t n) { return coset_of(x.rank(), n, x.base()); }

inline bool in_coset(std::size_t rank, const CosetId& coset, const VilenkinBase& base) {
    return rank % base.block(coset.level) == coset.prefix;
}

/// Haar measure of a rank-n coset, 1/M_n.
inline double coset_measure(std::size_t n, const VilenkinBase& base) {
    return 1.0 / static_cast<double>(base.block(n));
}

/// Ranks of all points of I_n(x), ascending.
inline std::vector<std::size_t> coset_members(const CosetId& coset, const VilenkinBase& base) {
    const std::size_t step = base.block(coset.level);
    std::vector<std::size_t> out;
    out.reserve(base.size() / step);
    for (std::size_t r = coset.prefix; r < base.size(); r += step) out.push_back(r);
    return out;
}

/// |n| and <n>: positions of the highest and lowest nonzero digits.
struct OrderStats {
    std::size_t highest;
    std::size_t lowest;
};

inline OrderStats order_stats(std::size_t n, const VilenkinBase& base) {
    if (n == 0) throw std::domain_error("order_stats: n = 0 has no nonzero digit");
    const Digits digits = decode_index(n, base);
    OrderStats out{0, digits.size()};
    for (std::size_t j = 0; j < digits.size(); ++j) {
        if (digits[j] == 0) continue;
        out.highest = j;
        if (out.lowest == digits.size()) out.lowest = j;
    }
    return out;
}

}  // namespace vilenkin

#endif  // VILENKIN_GROUP_HPP
