#pragma once

#include <cstddef>
#include <vector>

#include "hvlab/fuzzy.hpp"
#include "hvlab/hyperstructure.hpp"
#include "hvlab/predicates.hpp"
#include "hvlab/report.hpp"

namespace hvlab {

/// Union-find with path compression and union by size.
class DisjointSets {
public:
    explicit DisjointSets(std::size_t n);

    std::size_t find(std::size_t x);
    /// Returns true when x and y were in different sets.
    bool unite(std::size_t x, std::size_t y);

private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> size_;
};

/// Every subset of R (resp. M) that some finite expression evaluates to.
/// Ring expressions close the singletons under subsetwise + and .; module
/// expressions close the singletons under subsetwise + and under S.A for a
/// ring expression S and module expression A.
struct ExpressionFamily {
    std::vector<Subset> ring_sets;    // sorted by bits
    std::vector<Subset> module_sets;  // sorted by bits
};

struct ClosureStats {
    std::size_t ring_rounds = 0;
    std::size_t module_rounds = 0;
    std::size_t combinations = 0;
};

/// Least fixed point by a generation-by-generation worklist.
ExpressionFamily achievable_sets(const HvModule& m, ClosureStats* stats = nullptr);
/// Ring half only.
std::vector<Subset> achievable_ring_sets(const HvRing& r, ClosureStats* stats = nullptr);

/// Equivalence classes of a carrier. Classes are ordered by their lowest
/// element and class_of maps each element to its class position.
struct Partition {
    std::vector<std::size_t> class_of;
    std::vector<Subset> classes;

    std::size_t size() const { return classes.size(); }
    bool is_identity() const { return classes.size() == class_of.size(); }

    /// Joins co-members of every set, then normalizes.
    static Partition from_sets(std::size_t n, const std::vector<Subset>& sets);
};

/// Transitive closure of co-membership in a module expression.
Partition epsilon_star(const HvModule& m, const ExpressionFamily& fam);

/// Transitive closure of co-membership in a ring expression. Throws
/// ConsistencyError when the quotient fails the ring axioms.
Partition gamma_star(const HvRing& r);

/// M/eps* over R/gamma* with its induced single-valued operations.
struct FundamentalQuotient {
    Partition module_partition;
    Partition ring_partition;
    /// Classes as elements: carrier labels are the class contents.
    OrdinaryModule module;
    /// Class of the additive identity (the core).
    std::size_t core = 0;

    std::size_t module_class(std::size_t x) const { return module_partition.class_of[x]; }
    std::size_t ring_class(std::size_t r) const { return ring_partition.class_of[r]; }
};

/// Builds the quotient, checking that every induced operation is single-
/// valued and that the result is an exact module over an exact ring. When
/// m designates a zero, checks core = eps*(0); when m's addition is also
/// single-valued with inverses, checks eps*(-x) = -eps*(x). Throws
/// ConsistencyError on any violation.
FundamentalQuotient build_fundamental_quotient(const HvModule& m);

/// Sup of membership / inf of non-membership over each class, with the
/// core forced to ([1,1], [0,0]) unless `override_core` is false.
Ivifs quotient_ivifs(const Ivifs& a, const FundamentalQuotient& q, bool override_core = true);

struct QuotientTransferOptions {
    Witnessing witnessing = Witnessing::Strict;
    bool override_core = true;
};

/// A predicate-passing IVIFS induces an (S,T)-fuzzy submodule of the
/// fundamental module. SKIP when `a` does not pass on m.
CheckReport verify_quotient_transfer(const HvModule& m, const Ivifs& a, const IntervalNormPair& norms,
                                     QuotientTransferOptions options = {});

/// The quotient viewed as an H_v-module over the original ring, with the
/// canonical projection onto it.
struct Projection {
    HvModule module;
    ElementMap map;
};
Projection canonical_projection(const HvModule& m, const FundamentalQuotient& q);

} // namespace hvlab
