#include <gtest/gtest.h>

#include "builders.hpp"
#include "hvlab/error.hpp"
#include "hvlab/hyperstructure.hpp"
#include "oracles.hpp"

using namespace hvlab;
using build::set;

TEST(Carrier, Validation)
{
    EXPECT_THROW(Carrier(std::vector<std::string>{}), ConstructionError);
    EXPECT_THROW(Carrier({"a", "a"}), ConstructionError);
    const Carrier c({"a", "b"});
    EXPECT_EQ(c.index_of("b"), 1U);
    EXPECT_FALSE(c.index_of("z"));
    EXPECT_EQ(c.format(set({0, 1})), "{a,b}");
}

TEST(HyperOp, EmptyCellRejected)
{
    EXPECT_THROW(HyperOp(2, {set({0}), Subset{}, set({1}), set({0})}), ConstructionError);
    EXPECT_THROW(HyperOp(2, {set({0})}), ConstructionError);
    EXPECT_THROW(HyperOp(2, {set({0}), set({2}), set({1}), set({0})}), ConstructionError);
}

TEST(HyperOp, SubsetProduct)
{
    const auto total = HyperOp::total(2);
    EXPECT_EQ(subset_product(total, set({0}), set({1})), set({0, 1}));
    const auto z2 = HyperOp::from_function(2, {0, 1, 1, 0});
    EXPECT_EQ(subset_product(z2, set({1}), set({1})), set({0}));
    const auto all = set({0, 1});
    const auto sum = subset_product(z2, all, all);
    for (const auto& c : z2.cells()) {
        EXPECT_TRUE(c.subset_of(sum));
    }
    EXPECT_THROW(subset_product(z2, Subset{}, all), std::invalid_argument);
}

TEST(HvGroup, TotalOperation)
{
    const auto r = check_hv_group(HyperOp::total(2));
    EXPECT_TRUE(r.passed());
    EXPECT_TRUE(r.flags.at("weak_commutative"));
    EXPECT_TRUE(oracle::hv_group(HyperOp::total(2)));
}

TEST(HvGroup, Z2)
{
    const auto r = check_hv_group(HyperOp::from_function(2, {0, 1, 1, 0}));
    EXPECT_TRUE(r.passed());
    EXPECT_TRUE(r.flags.at("weak_commutative"));
}

TEST(HvGroup, LeftProjectionFailsReproduction)
{
    // x + y = {x}
    const auto op = HyperOp::from_function(2, {0, 0, 1, 1});
    const auto r = check_hv_group(op);
    ASSERT_TRUE(r.failed());
    EXPECT_EQ(r.witness->condition, "reproduction-left");
    EXPECT_EQ(r.witness->at("a"), 0U);
    EXPECT_EQ(r.witness->sides.at(0), "{0}");
}

TEST(HvRing, SmallRings)
{
    EXPECT_TRUE(check_hv_ring(build::z2_ring().embed()).passed());
    EXPECT_TRUE(check_hv_ring(build::trivial_ring()).passed());
    // total addition, x.y = {x}: verdict must agree with the brute-force oracle
    const HvRing r{Carrier::numbered(2), HyperOp::total(2), HyperOp::from_function(2, {0, 0, 1, 1})};
    EXPECT_EQ(check_hv_ring(r).passed(), oracle::hv_ring(r));
    EXPECT_TRUE(check_hv_ring(r).passed());
}

TEST(HvModule, M2totAndZ2)
{
    EXPECT_TRUE(check_hv_module(build::m2tot()).passed());
    EXPECT_TRUE(oracle::hv_module(build::m2tot()));
    EXPECT_TRUE(check_hv_module(build::z2()).passed());
}

TEST(HvModule, EmptyActionCellIsAConstructionError)
{
    EXPECT_THROW(ExternalOp(1, 2, {set({0}), Subset{}}), ConstructionError);
}

TEST(HvModule, AdditionMustBeAnHvGroup)
{
    // x + y = {y}: a + H = H, but H + 0 = {0}
    auto m = build::m2tot();
    m.add = HyperOp::from_function(2, {0, 1, 0, 1});
    const auto r = check_hv_module(m);
    ASSERT_TRUE(r.failed());
    EXPECT_EQ(r.witness->condition, "(M,+) reproduction-right");
    EXPECT_FALSE(oracle::hv_module(m));
}

TEST(HvModule, NonCommutativeAdditionFails)
{
    // Z3 with 0+1 = {1,2} and 1+0 = {0}: still reproductive and weakly
    // associative, but the two cells are disjoint
    std::vector<Subset> cells;
    for (std::size_t x = 0; x < 3; ++x) {
        for (std::size_t y = 0; y < 3; ++y) {
            cells.push_back(Subset::singleton((x + y) % 3));
        }
    }
    cells[0 * 3 + 1] = set({1, 2});
    cells[1 * 3 + 0] = set({0});
    const HyperOp op(3, cells);
    ASSERT_EQ(check_hv_group(op).passed(), oracle::hv_group(op));
    EXPECT_FALSE(check_hv_group(op).flags.at("weak_commutative"));
    EXPECT_FALSE(oracle::weak_commutative(op));
    if (check_hv_group(op).passed()) {
        const HvModule m{build::trivial_ring(), Carrier::numbered(3), op, ExternalOp::from_function(1, 3, {0, 1, 2}), {}};
        const auto r = check_hv_module(m);
        ASSERT_TRUE(r.failed());
        EXPECT_EQ(r.witness->condition, "(M,+) weak-commutativity");
    }
}

TEST(HvSubmodule, Z2)
{
    const auto m = build::z2();
    EXPECT_TRUE(check_hv_submodule(m, m.carrier.all()).passed());
    EXPECT_TRUE(check_hv_submodule(m, set({0})).passed());
    const auto r = check_hv_submodule(m, set({1}));
    ASSERT_TRUE(r.failed());
    EXPECT_EQ(r.witness->condition, "closure");
    EXPECT_EQ(r.witness->sides.at(0), "{0}");
    EXPECT_TRUE(check_hv_submodule(m, Subset{}).failed());
    EXPECT_EQ(hv_submodules(m), (std::vector<Subset>{set({0}), set({0, 1})}));
}

TEST(Ordinary, ValidatingConstructors)
{
    EXPECT_THROW(OrdinaryRing::make(Carrier::numbered(2), {0, 1, 1, 1}, {0, 0, 0, 1}), ConstructionError);
    const auto z2 = build::z2_ordinary();
    EXPECT_EQ(z2.zero, 0U);
    EXPECT_EQ(z2.neg, (std::vector<std::size_t>{0, 1}));
    const auto embedded = z2.embed();
    EXPECT_EQ(embedded.zero, 0U);
    ASSERT_TRUE(as_ordinary(embedded));
    EXPECT_FALSE(as_ordinary(build::m2tot()));
    EXPECT_TRUE(check_ordinary_module(z2.ring, 2, {0, 1, 1, 0}, {0, 1, 0, 1}).failed());
}

TEST(Induced, ModuleSubsetZero)
{
    const auto m = build_induced_module(build::z2_ordinary(), InducedAction::ModuleSubset, {}, set({0}));
    for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t x = 0; x < 2; ++x) {
            EXPECT_EQ(m.action(r, x), Subset::singleton(r * x));
        }
    }
    EXPECT_TRUE(check_hv_module(m).passed());
}

TEST(Induced, ModuleSubsetWhole)
{
    const auto m = build_induced_module(build::z2_ordinary(), InducedAction::ModuleSubset, {}, set({0, 1}));
    EXPECT_EQ(m.action(1, 0), set({0, 1}));
    EXPECT_EQ(m.action(1, 1), set({0, 1}));
    EXPECT_EQ(m.action(0, 1), set({0}));
    EXPECT_TRUE(check_hv_module(m).passed());
    EXPECT_TRUE(oracle::hv_module(m));
}

TEST(Induced, ModuleSubsetWithoutZero)
{
    try {
        build_induced_module(build::z2_ordinary(), InducedAction::ModuleSubset, {}, set({1}));
        FAIL() << "expected a precondition error";
    } catch (const PreconditionError& e) {
        EXPECT_STREQ(e.what(), "hypothesis (b) fails: 0 ∉ P");
    }
}

TEST(Induced, RingSubsetAndCombined)
{
    const auto z2 = build::z2_ordinary();
    // P = {1}: 1 is central and 1.1 = 1 lies in P
    const auto a = build_induced_module(z2, InducedAction::RingSubset, set({1}), {});
    EXPECT_TRUE(check_hv_module(a).passed());
    // P = {0} also qualifies (0 is central, 0.0 = 0), collapsing the action to zero
    const auto zero = build_induced_module(z2, InducedAction::RingSubset, set({0}), {});
    EXPECT_EQ(zero.action(1, 1), set({0}));
    EXPECT_THROW(build_induced_module(z2, InducedAction::RingSubset, Subset{}, {}), PreconditionError);
    const auto c = build_induced_module(z2, InducedAction::Combined, set({1}), set({0}));
    EXPECT_TRUE(check_hv_module(c).passed());
    EXPECT_THROW(build_induced_module(z2, InducedAction::Combined, set({1}), set({1})), PreconditionError);
}
