#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "oracles.hpp"
#include "vilenkin/group.hpp"

using namespace vilenkin;

TEST(VilenkinBase, CumulativeProducts) {
    const VilenkinBase base({2, 3, 2, 4});
    ASSERT_EQ(base.depth(), 4u);
    const std::vector<std::size_t> expected = {1, 2, 6, 12, 48};
    EXPECT_EQ(std::vector<std::size_t>(base.cumprod().begin(), base.cumprod().end()), expected);
    EXPECT_EQ(base.size(), 48u);
}

TEST(VilenkinBase, RejectsSmallRadix) {
    EXPECT_THROW(VilenkinBase({2, 1}), std::domain_error);
    EXPECT_THROW(VilenkinBase(std::vector<int>{}), std::invalid_argument);
}

TEST(VilenkinBase, ParseAndDepth) {
    EXPECT_EQ(VilenkinBase::parse("2,3,2,4"), VilenkinBase({2, 3, 2, 4}));
    EXPECT_EQ(VilenkinBase::parse("2", 5), VilenkinBase::uniform(2, 5));
    EXPECT_EQ(VilenkinBase::parse("2,3", 5), VilenkinBase({2, 3, 2, 3, 2}));
    EXPECT_EQ(VilenkinBase::parse("2,3,4", 2), VilenkinBase({2, 3}));
    EXPECT_THROW(VilenkinBase::parse("2,,3"), std::invalid_argument);
    EXPECT_THROW(VilenkinBase::parse("2,x"), std::invalid_argument);
    EXPECT_THROW(VilenkinBase::parse("2,3", 0), std::invalid_argument);
}

TEST(DecodeIndex, Examples) {
    EXPECT_EQ(decode_index(5, VilenkinBase({2, 3})), (Digits{1, 2}));
    EXPECT_EQ(decode_index(0, VilenkinBase({3, 4, 5})), (Digits{0, 0, 0}));
    EXPECT_EQ(decode_index(6, VilenkinBase({2, 2, 2})), (Digits{0, 1, 1}));
    EXPECT_THROW(decode_index(6, VilenkinBase({2, 3})), std::out_of_range);
}

TEST(EncodeIndex, Examples) {
    const VilenkinBase base({2, 3});
    EXPECT_EQ(encode_index(Digits{1, 2}, base), 5u);
    EXPECT_EQ(encode_index(Digits{0, 0}, base), 0u);
    EXPECT_THROW(encode_index(Digits{2, 0}, base), std::domain_error);
    EXPECT_THROW(encode_index(Digits{0, -1}, base), std::domain_error);
}

TEST(EncodeIndex, BijectionExhaustive) {
    for (const auto& spec : {"2,2,2,2", "2,3,2", "3,3,3", "2,3,4,5,6", "7,2,5,3", "2,2,2,2,2,2,2,2,2,2,2,2,2"}) {
        const auto base = VilenkinBase::parse(spec);
        ASSERT_LE(base.size(), 10000u);
        for (std::size_t n = 0; n < base.size(); ++n) {
            const Digits d = decode_index(n, base);
            ASSERT_EQ(d, oracle::digits(n, base));
            ASSERT_EQ(encode_index(d, base), n) << spec << " n=" << n;
        }
    }
}

TEST(GroupAdd, Examples) {
    const VilenkinBase base({2, 3});
    const auto x = GroupPoint::from_coords(base, Digits{1, 2});
    EXPECT_EQ((x + x).coords(), (Digits{0, 1}));
    EXPECT_EQ(x + GroupPoint::zero(base), x);
    EXPECT_THROW(group_add(x, GroupPoint::zero(VilenkinBase({2, 2}))), std::domain_error);
    EXPECT_THROW(group_sub(x, GroupPoint::zero(VilenkinBase({3, 2}))), std::domain_error);
}

TEST(GroupAdd, AbelianAxiomsExhaustive) {
    for (const auto& spec : {"2,3", "3,3", "4,2", "5", "2,2"}) {
        const auto base = VilenkinBase::parse(spec);
        const std::size_t size = base.size();
        const auto zero = GroupPoint::zero(base);
        for (std::size_t a = 0; a < size; ++a) {
            const GroupPoint x(base, a);
            EXPECT_EQ(x + zero, x);
            EXPECT_EQ(x + (zero - x), zero);
            for (std::size_t b = 0; b < size; ++b) {
                const GroupPoint y(base, b);
                ASSERT_EQ(x + y, y + x);
                ASSERT_EQ((x + y) - y, x);
                ASSERT_EQ((x - y).rank(), oracle::sub(a, b, base));
                for (std::size_t c = 0; c < size; ++c) {
                    const GroupPoint z(base, c);
                    ASSERT_EQ((x + y) + z, x + (y + z));
                }
            }
        }
    }
}

TEST(DifferenceWalker, TracksSubtraction) {
    for (const auto& spec : {"2,3,2", "3,5", "2,2,2,2,2", "4,3,2"}) {
        const auto base = VilenkinBase::parse(spec);
        for (std::size_t x = 0; x < base.size(); ++x) {
            DifferenceWalker walk(base, x);
            for (std::size_t t = 0; t < base.size(); ++t, walk.advance()) {
                ASSERT_EQ(walk.t(), t);
                ASSERT_EQ(walk.difference(), sub_ranks(x, t, base)) << spec << " x=" << x << " t=" << t;
            }
        }
    }
}

TEST(CosetOf, Examples) {
    const VilenkinBase base({2, 3});
    for (std::size_t x = 0; x < base.size(); ++x) EXPECT_EQ(coset_of(x, 0, base), (CosetId{0, 0}));

    const auto x = GroupPoint::from_coords(base, Digits{1, 0});
    const auto members = coset_members(coset_of(x, 1), base);
    ASSERT_EQ(members.size(), 3u);
    for (std::size_t r : members) EXPECT_EQ(digit_at(r, 0, base), 1);

    EXPECT_THROW(coset_of(x, 3), std::out_of_range);
}

TEST(CosetOf, PartitionAndMeasure) {
    const auto base = VilenkinBase::parse("2,3,2,4");
    for (std::size_t n = 0; n <= base.depth(); ++n) {
        std::set<std::size_t> prefixes;
        std::vector<std::size_t> counts(base.block(n), 0);
        for (std::size_t x = 0; x < base.size(); ++x) {
            const CosetId c = coset_of(x, n, base);
            ASSERT_TRUE(in_coset(x, c, base));
            prefixes.insert(c.prefix);
            ++counts[c.prefix];
        }
        EXPECT_EQ(prefixes.size(), base.block(n));
        for (std::size_t c : counts) EXPECT_EQ(c, base.size() / base.block(n));
        EXPECT_DOUBLE_EQ(static_cast<double>(prefixes.size()) * coset_measure(n, base), 1.0);
    }
}

TEST(OrderStats, Examples) {
    const VilenkinBase base({2, 3});
    const auto s = order_stats(4, base);
    EXPECT_EQ(s.highest, 1u);
    EXPECT_EQ(s.lowest, 1u);
    EXPECT_THROW(order_stats(0, base), std::domain_error);

    const auto deep = VilenkinBase::parse("2,3,2,4");
    for (std::size_t k = 0; k < deep.depth(); ++k) {
        const auto single = order_stats(deep.block(k), deep);
        EXPECT_EQ(single.highest, k);
        EXPECT_EQ(single.lowest, k);
        if (k >= 1) {
            const auto two = order_stats(deep.block(k) + 1, deep);
            EXPECT_EQ(two.highest, k);
            EXPECT_EQ(two.lowest, 0u);
        }
    }
}

TEST(GroupPoint, UnitVector) {
    const auto base = VilenkinBase::parse("3,2,4");
    const auto e1 = GroupPoint::unit(base, 1);
    EXPECT_EQ(e1.coords(), (Digits{0, 1, 0}));
    EXPECT_THROW(GroupPoint::unit(base, 3), std::out_of_range);
    EXPECT_THROW(GroupPoint(base, 24), std::out_of_range);
}
