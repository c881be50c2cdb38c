#include <gtest/gtest.h>

#include <algorithm>

#include "builders.hpp"
#include "hvlab/generator.hpp"
#include "hvlab/io.hpp"
#include "hvlab/predicates.hpp"
#include "oracles.hpp"

using namespace hvlab;

namespace {

GenConfig enumerate(std::size_t m, std::size_t r)
{
    GenConfig cfg;
    cfg.mode = GenMode::Enumerate;
    cfg.max_module_size = m;
    cfg.max_ring_size = r;
    return cfg;
}

GenConfig random(std::uint64_t seed, std::size_t budget)
{
    GenConfig cfg;
    cfg.seed = seed;
    cfg.budget = budget;
    return cfg;
}

bool same_tables(const HvModule& a, const HvModule& b)
{
    return a.ring == b.ring && a.carrier == b.carrier && a.add == b.add && a.action == b.action;
}

// Valid H_v-modules on {0,1} over the trivial ring, counted by brute force:
// 3^4 addition tables times 3^2 action tables.
std::size_t brute_force_two_point_count()
{
    const std::vector<Subset> cells{build::set({0}), build::set({1}), build::set({0, 1})};
    std::size_t count = 0;
    for (int code = 0; code < 729; ++code) {
        std::vector<Subset> add, act;
        int c = code;
        for (int i = 0; i < 4; ++i, c /= 3) {
            add.push_back(cells[c % 3]);
        }
        for (int i = 0; i < 2; ++i, c /= 3) {
            act.push_back(cells[c % 3]);
        }
        const HvModule m{build::trivial_ring(), Carrier::numbered(2), HyperOp(2, add), ExternalOp(1, 2, act), {}};
        count += oracle::hv_module(m) ? 1 : 0;
    }
    return count;
}

} // namespace

TEST(Config, Validation)
{
    EXPECT_NO_THROW(validate(GenConfig{}));
    EXPECT_THROW(validate(enumerate(3, 1)), std::invalid_argument);
    EXPECT_THROW(validate(enumerate(2, 3)), std::invalid_argument);
    auto cfg = GenConfig{};
    cfg.grid = {Rational01::make(1, 2), Rational01::one()};
    EXPECT_THROW(validate(cfg), std::invalid_argument);
    cfg.max_module_size = 100;
    cfg.grid = GenConfig::ninths();
    EXPECT_THROW(validate(cfg), std::invalid_argument);
    EXPECT_EQ(GenConfig::uniform_grid(4).size(), 5U);
    EXPECT_EQ(GenConfig::ninths().size(), 10U);
}

TEST(Enumerate, OnePoint)
{
    const auto all = generate_hv_modules(enumerate(1, 1));
    ASSERT_EQ(all.size(), 1U);
    EXPECT_TRUE(same_tables(all[0], build::one_point()));
}

TEST(Enumerate, TwoPointsOverTrivialRing)
{
    const auto all = generate_hv_modules(enumerate(2, 1));
    std::vector<HvModule> two;
    std::copy_if(all.begin(), all.end(), std::back_inserter(two),
                 [](const HvModule& m) { return m.carrier.size() == 2; });
    // regression pin; equals the brute-force count below
    EXPECT_EQ(two.size(), 193U);
    EXPECT_EQ(two.size(), brute_force_two_point_count());
    EXPECT_EQ(all.size(), 194U);
    const HvModule z2_trivial{build::trivial_ring(), Carrier::numbered(2), HyperOp::from_function(2, {0, 1, 1, 0}),
                              ExternalOp::from_function(1, 2, {0, 0}), {}};
    auto found = [&](const HvModule& target) {
        return std::any_of(two.begin(), two.end(), [&](const HvModule& m) { return same_tables(m, target); });
    };
    EXPECT_TRUE(found(build::m2tot()));
    EXPECT_TRUE(found(z2_trivial));
    for (const auto& m : all) {
        EXPECT_TRUE(check_hv_module(m).passed());
    }
}

TEST(Enumerate, IsLazy)
{
    ModuleStream s(enumerate(2, 2));
    for (int i = 0; i < 5; ++i) {
        ASSERT_TRUE(s.next());
    }
}

TEST(Random, DeterministicAndValid)
{
    GenConfig cfg = random(17, 60);
    const auto a = generate_hv_modules(cfg);
    const auto b = generate_hv_modules(cfg);
    ASSERT_EQ(a.size(), 60U);
    EXPECT_EQ(a, b);
    cfg.seed = 18;
    EXPECT_NE(generate_hv_modules(cfg), a);
    for (const auto& m : a) {
        EXPECT_TRUE(check_hv_module(m).passed()) << format_json(structure_to_json(structure_of(m)));
        EXPECT_TRUE(oracle::hv_module(m));
        EXPECT_LE(m.carrier.size(), cfg.max_module_size);
        EXPECT_LE(m.ring.carrier.size(), cfg.max_ring_size);
    }
}

TEST(Random, ReachesMultivaluedStructures)
{
    const auto ms = generate_hv_modules(random(3, 200));
    const auto multi = std::count_if(ms.begin(), ms.end(), [](const HvModule& m) { return !m.add.single_valued(); });
    EXPECT_GT(multi, 40);
}

TEST(Ivifs, ValidAndDeterministic)
{
    const auto m = build::z2();
    for (auto target : {IvifsTarget::Passing, IvifsTarget::Layered, IvifsTarget::Unconstrained}) {
        const auto a = generate_ivifs(m, random(5, 30), target);
        EXPECT_EQ(a, generate_ivifs(m, random(5, 30), target));
        EXPECT_FALSE(a.empty());
        for (const auto& x : a) {
            EXPECT_TRUE(validate_ivifs(x).passed());
        }
    }
}

TEST(Ivifs, PassingOnZ2IsLayeredOverTheZeroChain)
{
    const auto mm = IntervalNormPair::min_max();
    for (const auto& a : generate_ivifs(build::z2(), random(9, 40), IvifsTarget::Passing)) {
        EXPECT_TRUE(check_st_hv_submodule(build::z2(), a, mm).passed());
        EXPECT_TRUE(interval_leq(a.membership[1], a.membership[0]));
        EXPECT_TRUE(interval_leq(a.nonmembership[0], a.nonmembership[1]));
    }
    // the worked instance has exactly this shape
    const auto w = build::z2_passing();
    EXPECT_TRUE(interval_leq(w.membership[1], w.membership[0]));
    EXPECT_TRUE(interval_leq(w.nonmembership[0], w.nonmembership[1]));
}

TEST(Ivifs, UnconstrainedOnM2totIncludesFailures)
{
    const auto mm = IntervalNormPair::min_max();
    const auto sets = generate_ivifs(build::m2tot(), random(2, 50), IvifsTarget::Unconstrained);
    const auto failing = std::count_if(sets.begin(), sets.end(), [&](const Ivifs& a) {
        const auto r = check_st_hv_submodule(build::m2tot(), a, mm);
        return r.failed() && r.witness->condition == "C1.M";
    });
    EXPECT_GT(failing, 0);
}

TEST(Maps, Lexicographic)
{
    const auto maps = enumerate_maps(2, 3);
    ASSERT_EQ(maps.size(), 9U);
    EXPECT_EQ(maps.front(), (ElementMap{0, 0}));
    EXPECT_EQ(maps[1], (ElementMap{0, 1}));
    EXPECT_EQ(maps.back(), (ElementMap{2, 2}));
}

TEST(Catalogue, OrdinaryModules)
{
    const auto cat = ordinary_catalogue(4, 3);
    EXPECT_EQ(cat.size(), 28U);
    for (const auto& m : cat) {
        EXPECT_TRUE(check_hv_module(m.embed()).passed());
    }
}

TEST(ModulesOver, ShareTheRing)
{
    const auto ring = build::z2_ring().embed();
    GenConfig cfg = random(4, 12);
    cfg.max_module_size = 3;
    const auto ms = generate_modules_over(ring, cfg);
    EXPECT_FALSE(ms.empty());
    for (const auto& m : ms) {
        EXPECT_EQ(m.ring, ring);
        EXPECT_TRUE(check_hv_module(m).passed());
    }
}

TEST(Scalar, GridValues)
{
    const auto cfg = random(1, 10);
    for (const auto& mu : generate_scalar_fuzzy(3, cfg)) {
        ASSERT_EQ(mu.size(), 3U);
        for (const auto& v : mu) {
            EXPECT_NE(std::find(cfg.grid.begin(), cfg.grid.end(), v), cfg.grid.end());
        }
    }
}

TEST(Hunt, Names)
{
    EXPECT_EQ(parse_hunt_target("thm32"), HuntTarget::CutCharacterization);
    EXPECT_EQ(parse_hunt_target("lemma35"), HuntTarget::PreimageSubmodule);
    EXPECT_EQ(parse_hunt_target("thm36"), HuntTarget::HomomorphicTransfer);
    EXPECT_EQ(parse_hunt_target("thm39"), HuntTarget::QuotientTransfer);
    EXPECT_FALSE(parse_hunt_target("thm99"));
    EXPECT_EQ(parse_weakening("omega"), Weakening::NoCoreOverride);
    EXPECT_FALSE(parse_weakening("everything"));
    EXPECT_EQ(parse_hunt_target(to_string(HuntTarget::QuotientTransfer)), HuntTarget::QuotientTransfer);
}

TEST(Hunt, UnweakenedFindsNothing)
{
    GenConfig cfg = random(11, 40);
    cfg.max_module_size = 3;
    for (auto t : {HuntTarget::CutCharacterization, HuntTarget::PreimageSubmodule, HuntTarget::HomomorphicTransfer,
                   HuntTarget::QuotientTransfer}) {
        const auto r = hunt_counterexamples(t, Weakening::None, cfg);
        EXPECT_FALSE(r.found) << to_string(t);
        EXPECT_GT(r.cases, 0U) << to_string(t);
    }
}

TEST(Hunt, InapplicableWeakening)
{
    EXPECT_THROW(hunt_counterexamples(HuntTarget::CutCharacterization, Weakening::NonStrongMap, GenConfig{}),
                 std::invalid_argument);
    EXPECT_THROW(hunt_counterexamples(HuntTarget::QuotientTransfer, Weakening::NonIdempotentNorm, GenConfig{}),
                 std::invalid_argument);
}

TEST(Hunt, WeakenedRunsAreDeterministic)
{
    GenConfig cfg = random(6, 30);
    cfg.max_module_size = 3;
    const auto a = hunt_counterexamples(HuntTarget::HomomorphicTransfer, Weakening::NonStrongMap, cfg);
    const auto b = hunt_counterexamples(HuntTarget::HomomorphicTransfer, Weakening::NonStrongMap, cfg);
    EXPECT_EQ(a.found, b.found);
    EXPECT_EQ(a.cases, b.cases);
    EXPECT_GT(a.cases, 0U);
    if (a.found) {
        ASSERT_TRUE(a.failure);
        EXPECT_TRUE(a.failure->failed());
    }
}
