#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hvlab/fuzzy.hpp"
#include "hvlab/hyperstructure.hpp"
#include "hvlab/interval.hpp"

namespace hvlab {

enum class GenMode { Enumerate, Random };

struct GenConfig {
    std::size_t max_module_size = 4;
    std::size_t max_ring_size = 3;
    std::uint64_t seed = 0;
    /// Instances per stream in random mode (and per IVIFS request).
    std::size_t budget = 100;
    GenMode mode = GenMode::Random;
    /// Endpoint grid for generated intervals; must contain 0 and 1.
    std::vector<Rational01> grid = ninths();

    static std::vector<Rational01> ninths();
    /// {0, 1/d, ..., 1}.
    static std::vector<Rational01> uniform_grid(std::int64_t d);
};

/// Throws std::invalid_argument on sizes beyond the carrier cap, a grid
/// without 0 and 1, or enumeration beyond |M| <= 2, |R| <= 2.
void validate(const GenConfig& cfg);

/// A lazy stream of valid H_v-modules. Enumeration visits every table
/// assignment with |R| <= max_ring_size and |M| <= max_module_size and
/// yields the ones passing check_hv_module. Random mode yields `budget`
/// modules: half grown from small ordinary modules by enlarging cells,
/// half drawn cell by cell, repaired for reproduction and filtered.
class ModuleStream {
public:
    explicit ModuleStream(GenConfig cfg);
    ~ModuleStream();
    ModuleStream(ModuleStream&&) noexcept;
    ModuleStream& operator=(ModuleStream&&) noexcept;

    std::optional<HvModule> next();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

std::vector<HvModule> generate_hv_modules(const GenConfig& cfg);

/// Up to cfg.budget H_v-modules over a fixed ring, for map targets: small
/// abelian groups with the zero action (cells enlarged at random), weak
/// commutative H_v-groups with the total action, and repaired random draws.
/// Module sizes stay within cfg.max_module_size.
std::vector<HvModule> generate_modules_over(const HvRing& ring, const GenConfig& cfg);

/// Small ordinary modules (trivial ring, Z2, Z3, zero-multiplication rings;
/// groups Z1..Z4 and Z2xZ2) with |R| <= max_r, |M| <= max_m.
std::vector<OrdinaryModule> ordinary_catalogue(std::size_t max_m, std::size_t max_r);

enum class IvifsTarget { Passing, Layered, Unconstrained };

/// Up to cfg.budget IVIFS on m, seeded from cfg.seed. Unconstrained draws
/// every endpoint from cfg.grid subject to lo <= hi and the Atanassov
/// bound. Layered puts constant values on the layers of chains of
/// H_v-submodules (membership non-increasing outward, non-membership
/// non-decreasing), so every level cut is a submodule. Passing keeps only
/// the layered sets that satisfy check_st_hv_submodule (strict witnessing).
std::vector<Ivifs> generate_ivifs(const HvModule& m, const GenConfig& cfg, IvifsTarget target);

/// Every map from an n-element set into an m-element set, in
/// lexicographic order.
std::vector<ElementMap> enumerate_maps(std::size_t n, std::size_t m);

/// Scalar fuzzy sets drawn from the grid.
std::vector<std::vector<Rational01>> generate_scalar_fuzzy(std::size_t n, const GenConfig& cfg);

// ---------------------------------------------------------------------------
// Counterexample hunting

enum class HuntTarget { CutCharacterization, PreimageSubmodule, HomomorphicTransfer, QuotientTransfer };
enum class Weakening {
    None,
    NonIdempotentNorm,  // product / probabilistic sum, validation bypassed
    NonStrongMap,       // weak and inclusion homomorphisms admitted
    NoCoreOverride,     // quotient fuzzy set keeps sup/inf on the core
};

/// Accepts "thm32", "lemma35", "thm36", "thm39" and descriptive names.
std::optional<HuntTarget> parse_hunt_target(const std::string& name);
/// Accepts "none", "norm", "map", "omega".
std::optional<Weakening> parse_weakening(const std::string& name);
std::string to_string(HuntTarget t);
std::string to_string(Weakening w);

struct HuntReport {
    HuntTarget target = HuntTarget::CutCharacterization;
    Weakening weakening = Weakening::None;
    std::uint64_t seed = 0;
    std::size_t modules = 0;
    std::size_t cases = 0;  // (instance, fuzzy set / map) pairs evaluated
    std::size_t skipped = 0;
    bool found = false;
    /// Module, fuzzy set, map and failing report of the first find.
    std::optional<HvModule> module;
    std::optional<HvModule> target_module;
    std::optional<ElementMap> map;
    std::optional<Ivifs> fuzzy;
    std::optional<Subset> subset;
    std::optional<CheckReport> failure;
};

/// Throws std::invalid_argument when the weakening does not apply to the
/// target (e.g. a map weakening for the cut characterization).
HuntReport hunt_counterexamples(HuntTarget target, Weakening weaken, const GenConfig& cfg);

} // namespace hvlab
