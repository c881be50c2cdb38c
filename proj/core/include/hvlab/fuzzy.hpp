#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hvlab/interval.hpp"
#include "hvlab/report.hpp"
#include "hvlab/subset.hpp"

namespace hvlab {

/// Interval-valued membership, one value per carrier element.
using IVFuzzySet = std::vector<Interval>;

/// A total map between carriers, stored as target indices.
using ElementMap = std::vector<std::size_t>;

/// Interval-valued intuitionistic fuzzy set (membership, non-membership).
struct Ivifs {
    IVFuzzySet membership;
    IVFuzzySet nonmembership;

    std::size_t size() const { return membership.size(); }
    bool operator==(const Ivifs&) const = default;

    /// Same value everywhere on an n-element carrier.
    static Ivifs constant(std::size_t n, Interval m, Interval nm);
};

/// A level [t, s] with t <= s.
struct Threshold {
    Rational01 t;
    Rational01 s;

    /// Throws ConstructionError when t > s.
    static Threshold make(Rational01 t, Rational01 s);
    Interval as_interval() const { return Interval{t, s}; }

    bool operator==(const Threshold&) const = default;
};

/// Pointwise hi(M(x)) + hi(N(x)) <= 1, plus matching lengths.
CheckReport validate_ivifs(const Ivifs& a);

/// {x : f(x) >= th} and {x : f(x) <= th}; either may be empty.
Subset upper_cut(std::span<const Interval> f, const Threshold& th);
Subset lower_cut(std::span<const Interval> f, const Threshold& th);

/// Sorted endpoints of both maps together with 0 and 1.
std::vector<Rational01> attained_endpoints(const Ivifs& a);

/// Every [t, s] with t <= s over attained_endpoints. Any threshold in
/// D[0,1] produces a cut that some returned threshold also produces.
std::vector<Threshold> attained_thresholds(const Ivifs& a);

/// Sup over preimages (or [0,0]) for membership, inf (or [1,1]) for
/// non-membership. Throws ConstructionError on a map leaving the target.
Ivifs image_ivifs(std::span<const std::size_t> f, const Ivifs& a, std::size_t target_size);

/// x |-> B(f(x)).
Ivifs preimage_ivifs(std::span<const std::size_t> f, const Ivifs& b);

/// {f(x) : x in s} and {x : f(x) in s}.
Subset map_image(std::span<const std::size_t> f, Subset s);
Subset map_preimage(std::span<const std::size_t> f, Subset s);

} // namespace hvlab
