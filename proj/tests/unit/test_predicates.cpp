#include <gtest/gtest.h>

#include "builders.hpp"
#include "hvlab/predicates.hpp"

using namespace hvlab;
using build::iv;
using build::q;

namespace {

const IntervalNormPair kMinMax = IntervalNormPair::min_max();

} // namespace

TEST(ScalarPredicate, Examples)
{
    const auto z2 = build::z2();
    EXPECT_TRUE(check_fuzzy_hv_submodule(z2, std::vector<Rational01>{q("0.4"), q("0.4")}).passed());
    EXPECT_TRUE(check_fuzzy_hv_submodule(z2, std::vector<Rational01>{q("0.8"), q("0.3")}).passed());
    const auto r = check_fuzzy_hv_submodule(z2, std::vector<Rational01>{q("0.3"), q("0.8")});
    ASSERT_TRUE(r.failed());
    EXPECT_EQ(r.witness->condition, "i");
    EXPECT_EQ(r.witness->at("x"), 1U);
    EXPECT_EQ(r.witness->at("y"), 1U);
    EXPECT_EQ(r.witness->sides, (std::vector<std::string>{"4/5", "3/10"}));
}

TEST(StPredicate, ConstantAlwaysPasses)
{
    const auto c = Ivifs::constant(2, iv("0.6", "0.7"), iv("0.1", "0.2"));
    EXPECT_TRUE(check_st_hv_submodule(build::z2(), c, kMinMax).passed());
    EXPECT_TRUE(check_st_hv_submodule(build::m2tot(), c, kMinMax).passed());
}

TEST(StPredicate, Z2Passing)
{
    EXPECT_TRUE(check_st_hv_submodule(build::z2(), build::z2_passing(), kMinMax).passed());
    EXPECT_TRUE(check_st_hv_submodule(build::z2(), build::z2_passing(), kMinMax, Witnessing::Independent).passed());
}

TEST(StPredicate, M2totFailsAtZeroZero)
{
    const auto r = check_st_hv_submodule(build::m2tot(), build::m2tot_failing(), kMinMax);
    ASSERT_TRUE(r.failed());
    EXPECT_EQ(r.witness->condition, "C1.M");
    EXPECT_EQ(r.witness->at("x"), 0U);
    EXPECT_EQ(r.witness->at("y"), 0U);
    EXPECT_EQ(r.witness->sides, (std::vector<std::string>{"[3/5,7/10]", "[1/5,3/10]"}));
}

TEST(StPredicate, ActionCondition)
{
    // Z2 addition with 1.0 = {1}: conditions (1)-(3) hold, but the action
    // carries 0 to the lower-membership element 1
    auto m = build::z2();
    m.action = ExternalOp::from_function(2, 2, {0, 0, 1, 1});
    const auto r = check_st_hv_submodule(m, build::z2_passing(), kMinMax);
    ASSERT_TRUE(r.failed());
    EXPECT_EQ(r.witness->condition, "C4.M");
    EXPECT_EQ(r.witness->at("r"), 1U);
    EXPECT_EQ(r.witness->at("x"), 0U);
    // same shape on the non-membership side
    auto a = build::z2_passing();
    a.membership = {iv("0.3", "0.4"), iv("0.3", "0.4")};
    const auto s = check_st_hv_submodule(m, a, kMinMax);
    ASSERT_TRUE(s.failed());
    EXPECT_EQ(s.witness->condition, "C4.N");
}

TEST(StPredicate, ShapeMismatch)
{
    EXPECT_TRUE(check_st_hv_submodule(build::z2(), Ivifs::constant(3, top_interval(), bottom_interval()), kMinMax)
                    .failed());
}

TEST(OrdinaryPredicate, Examples)
{
    const auto z2 = build::z2_ordinary();
    const Ivifs a{{iv("1", "1"), iv("0.3", "0.4")}, {iv("0", "0"), iv("0.4", "0.5")}};
    EXPECT_TRUE(check_st_submodule_ordinary(z2, a, kMinMax).passed());
    auto b = a;
    b.membership[0] = iv("0.9", "1");
    const auto r = check_st_submodule_ordinary(z2, b, kMinMax);
    ASSERT_TRUE(r.failed());
    EXPECT_EQ(r.witness->condition, "i.M");
    const auto one = build::one_point();
    const auto trivial = as_ordinary(one);
    ASSERT_TRUE(trivial);
    EXPECT_TRUE(check_st_submodule_ordinary(*trivial, Ivifs::constant(1, top_interval(), bottom_interval()), kMinMax)
                    .passed());
}

TEST(CutCharacterization, Z2Passing)
{
    const auto eq = verify_cut_characterization(build::z2(), build::z2_passing(), kMinMax);
    EXPECT_TRUE(eq.predicate);
    EXPECT_TRUE(eq.cuts);
    EXPECT_TRUE(eq.report.passed());
    for (const auto& c : level_cuts(build::z2(), build::z2_passing())) {
        if (!c.upper.empty()) {
            EXPECT_TRUE(c.upper == build::set({0}) || c.upper == build::set({0, 1}));
            EXPECT_TRUE(c.upper_submodule);
        }
        if (!c.lower.empty()) {
            EXPECT_TRUE(c.lower_submodule);
        }
    }
}

TEST(CutCharacterization, M2totFailing)
{
    const auto eq = verify_cut_characterization(build::m2tot(), build::m2tot_failing(), kMinMax);
    EXPECT_FALSE(eq.predicate);
    EXPECT_FALSE(eq.cuts);
    EXPECT_TRUE(eq.report.passed());
    EXPECT_EQ(eq.cut_kind, "upper");
    EXPECT_EQ(eq.cut, build::set({0}));
    ASSERT_TRUE(eq.threshold);
    // the first failing attained threshold: [0, 3/5]
    EXPECT_EQ(eq.threshold->as_interval(), iv("0", "0.6"));
    // the threshold quoted for this instance also isolates {0}
    EXPECT_EQ(upper_cut(build::m2tot_failing().membership, Threshold::make(q("0.6"), q("0.7"))), build::set({0}));
}

TEST(CutCharacterization, ConstantIsImproper)
{
    const auto c = Ivifs::constant(2, iv("0.5", "0.6"), iv("0.2", "0.3"));
    const auto eq = verify_cut_characterization(build::m2tot(), c, kMinMax);
    EXPECT_TRUE(eq.predicate);
    EXPECT_TRUE(eq.cuts);
}

TEST(CutCharacterization, SkipsOnInvalidInputs)
{
    const auto bad = Ivifs::constant(2, iv("0.5", "0.7"), iv("0.2", "0.4"));
    EXPECT_TRUE(verify_cut_characterization(build::z2(), bad, kMinMax).report.skipped());
    const IntervalNormPair product{lift_norm(ScalarNorm::product()), lift_norm(ScalarNorm::probabilistic_sum())};
    EXPECT_TRUE(verify_cut_characterization(build::z2(), build::z2_passing(), product).report.skipped());
    CutEquivalenceOptions lax;
    lax.require_valid_norms = false;
    EXPECT_FALSE(verify_cut_characterization(build::z2(), build::z2_passing(), product, lax).report.skipped());
}
