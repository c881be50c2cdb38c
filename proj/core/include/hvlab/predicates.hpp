#pragma once

#include <optional>
#include <span>
#include <string>

#include "hvlab/fuzzy.hpp"
#include "hvlab/hyperstructure.hpp"
#include "hvlab/interval.hpp"
#include "hvlab/report.hpp"

namespace hvlab {

/// How the existential conditions of the (S,T) predicate pick their element.
/// Strict: one y must satisfy the membership and the non-membership
/// inequality together. Independent: each inequality may use its own y.
enum class Witnessing { Strict, Independent };

/// Scalar fuzzy H_v-submodule conditions (i)-(iv) for mu : M -> [0,1].
CheckReport check_fuzzy_hv_submodule(const HvModule& m, std::span<const Rational01> mu);

/// Interval-valued intuitionistic (S,T)-fuzzy H_v-submodule, conditions
/// C1-C4, checked exhaustively. Witness condition names carry a ".M" or
/// ".N" suffix for the side that failed (".MN" when a strict existential
/// found no common element).
CheckReport check_st_hv_submodule(const HvModule& m, const Ivifs& a, const IntervalNormPair& norms,
                                  Witnessing witnessing = Witnessing::Strict);

/// (S,T)-fuzzy submodule of an ordinary module: (i) values at zero,
/// (ii) the difference law, (iii) the scalar law.
CheckReport check_st_submodule_ordinary(const OrdinaryModule& m, const Ivifs& a, const IntervalNormPair& norms);

/// Outcome of comparing the fuzzy predicate with its level-cut characterization.
struct CutEquivalence {
    bool predicate = false;  // check_st_hv_submodule verdict
    bool cuts = false;       // every nonempty attained cut is an H_v-submodule
    CheckReport predicate_report;
    /// First threshold whose nonempty cut is not a submodule, when cuts is false.
    std::optional<Threshold> threshold;
    std::string cut_kind;  // "upper" or "lower"
    Subset cut;
    CheckReport cut_report;
    /// PASS iff predicate == cuts; SKIP when the inputs fail validation.
    CheckReport report;
};

struct CutEquivalenceOptions {
    Witnessing witnessing = Witnessing::Strict;
    /// When false the norms are used as given, even if they fail validation.
    bool require_valid_norms = true;
};

CutEquivalence verify_cut_characterization(const HvModule& m, const Ivifs& a, const IntervalNormPair& norms,
                                           CutEquivalenceOptions options = {});

/// Upper cuts of membership and lower cuts of non-membership at every
/// attained threshold, each with its submodule verdict.
struct LevelCut {
    Threshold threshold;
    Subset upper;
    Subset lower;
    bool upper_submodule = false;
    bool lower_submodule = false;
};
std::vector<LevelCut> level_cuts(const HvModule& m, const Ivifs& a);

} // namespace hvlab
