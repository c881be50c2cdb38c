#pragma once

#include "hvlab/fuzzy.hpp"
#include "hvlab/hyperstructure.hpp"
#include "hvlab/predicates.hpp"
#include "hvlab/report.hpp"

namespace hvlab {

/// A map between two H_v-modules over the same H_v-ring.
struct ModuleMap {
    HvModule source;
    HvModule target;
    ElementMap mapping;

    /// Throws ConstructionError when the rings differ or the map is not total.
    static ModuleMap make(HvModule source, HvModule target, ElementMap mapping);

    Subset image(Subset s) const { return map_image(mapping, s); }
    Subset preimage(Subset s) const { return map_preimage(mapping, s); }
    bool surjective() const;
};

/// Ordered weakest to strongest.
enum class MapClass { None, Weak, Inclusion, Strong };

const char* to_string(MapClass c);

struct MapClassification {
    MapClass cls = MapClass::None;
    /// Fails with the tuple that rules out the next stronger class; passes
    /// for strong maps.
    CheckReport report;
};

MapClassification classify_map(const ModuleMap& f);

/// The preimage of a target submodule under a strong epimorphism is a
/// source submodule. SKIP when f is not a strong epimorphism or `n` is not
/// a target submodule.
CheckReport verify_preimage_submodule(const ModuleMap& f, Subset n);

/// Image (resp. preimage) of a predicate-passing IVIFS under a strong
/// homomorphism passes the predicate on the other side. SKIP when the
/// preconditions fail. `require_strong = false` admits any map, which is
/// how the counterexample hunt weakens the hypothesis.
struct TransferOptions {
    Witnessing witnessing = Witnessing::Strict;
    bool require_strong = true;
};
CheckReport verify_image_transfer(const ModuleMap& f, const Ivifs& a, const IntervalNormPair& norms,
                                  TransferOptions options = {});
CheckReport verify_preimage_transfer(const ModuleMap& f, const Ivifs& b, const IntervalNormPair& norms,
                                     TransferOptions options = {});

/// Whether U(f(M);th) = f(U(M;th)) and L(f(N);th) = f(L(N;th)) at every
/// attained threshold of `a`. Observational: the identity is not implied
/// by strongness alone.
CheckReport check_cut_image_identity(const ModuleMap& f, const Ivifs& a);

} // namespace hvlab
