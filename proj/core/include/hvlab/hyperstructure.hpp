#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hvlab/report.hpp"
#include "hvlab/subset.hpp"

namespace hvlab {

/// Ordered, distinct element labels; elements are addressed by index.
class Carrier {
public:
    Carrier() = default;
    /// Throws ConstructionError on an empty, duplicated or oversize label list.
    explicit Carrier(std::vector<std::string> labels);

    /// Labels "0", "1", ..., "n-1".
    static Carrier numbered(std::size_t n);

    std::size_t size() const { return labels_.size(); }
    const std::string& label(std::size_t i) const { return labels_.at(i); }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<std::size_t> index_of(const std::string& label) const;
    Subset all() const { return Subset::full(size()); }

    /// "{a,b}" using this carrier's labels.
    std::string format(Subset s) const;

    bool operator==(const Carrier&) const = default;

private:
    std::vector<std::string> labels_;
};

/// A binary hyperoperation on an n-element carrier: every cell is a
/// nonempty subset.
class HyperOp {
public:
    HyperOp() = default;
    /// `cells` is row-major (x * n + y). Throws ConstructionError on an empty
    /// cell or an out-of-range member.
    HyperOp(std::size_t n, std::vector<Subset> cells);

    /// Singleton cells from a single-valued table.
    static HyperOp from_function(std::size_t n, const std::vector<std::size_t>& table);
    /// Every cell is the whole carrier.
    static HyperOp total(std::size_t n);

    std::size_t size() const { return n_; }
    Subset operator()(std::size_t x, std::size_t y) const { return cells_[x * n_ + y]; }
    const std::vector<Subset>& cells() const { return cells_; }

    /// A . B as the union of the cellwise products. Throws
    /// std::invalid_argument on an empty operand.
    Subset apply(Subset a, Subset b) const;
    Subset apply(std::size_t x, Subset b) const { return apply(Subset::singleton(x), b); }
    Subset apply(Subset a, std::size_t y) const { return apply(a, Subset::singleton(y)); }

    bool single_valued() const;

    bool operator==(const HyperOp&) const = default;

private:
    std::size_t n_ = 0;
    std::vector<Subset> cells_;
};

inline Subset subset_product(const HyperOp& op, Subset a, Subset b) { return op.apply(a, b); }

/// The external hyperaction R x M -> P*(M).
class ExternalOp {
public:
    ExternalOp() = default;
    /// Row-major over (r, x). Throws ConstructionError on an empty cell.
    ExternalOp(std::size_t ring_size, std::size_t module_size, std::vector<Subset> cells);

    static ExternalOp from_function(std::size_t ring_size, std::size_t module_size,
                                    const std::vector<std::size_t>& table);

    std::size_t ring_size() const { return ring_n_; }
    std::size_t module_size() const { return module_n_; }
    Subset operator()(std::size_t r, std::size_t x) const { return cells_[r * module_n_ + x]; }
    const std::vector<Subset>& cells() const { return cells_; }

    /// Union of r . x over r in rs, x in xs.
    Subset apply(Subset rs, Subset xs) const;

    bool single_valued() const;

    bool operator==(const ExternalOp&) const = default;

private:
    std::size_t ring_n_ = 0;
    std::size_t module_n_ = 0;
    std::vector<Subset> cells_;
};

struct HvRing {
    Carrier carrier;
    HyperOp add;
    HyperOp mul;

    bool operator==(const HvRing&) const = default;
};

struct HvModule {
    HvRing ring;
    Carrier carrier;
    HyperOp add;
    ExternalOp action;
    /// Zero of an underlying ordinary module, when the structure came from one.
    std::optional<std::size_t> zero;

    bool operator==(const HvModule&) const = default;
};

/// Throws ConstructionError when table sizes disagree with the carriers.
void check_shapes(const HvRing& r);
void check_shapes(const HvModule& m);

/// Weak associativity only.
CheckReport check_hv_semigroup(const HyperOp& op);
/// Weak associativity and reproduction; flags["weak_commutative"] is set.
CheckReport check_hv_group(const HyperOp& op);
CheckReport check_hv_ring(const HvRing& r);
/// Ring axioms, (M,+) a weak commutative H_v-group, and the three
/// weak module laws for the action.
CheckReport check_hv_module(const HvModule& m);
/// (S,+) closed with a+S = S = S+a for a in S, and R.S inside S.
CheckReport check_hv_submodule(const HvModule& m, Subset s);
bool is_hv_submodule(const HvModule& m, Subset s);

/// Every nonempty subset passing check_hv_submodule, in increasing bit order.
std::vector<Subset> hv_submodules(const HvModule& m);

// ---------------------------------------------------------------------------
// Ordinary (single-valued) structures.

struct OrdinaryRing {
    Carrier carrier;
    std::vector<std::size_t> add;  // n*n
    std::vector<std::size_t> mul;  // n*n
    std::size_t zero = 0;
    std::vector<std::size_t> neg;

    std::size_t sum(std::size_t a, std::size_t b) const { return add[a * carrier.size() + b]; }
    std::size_t product(std::size_t a, std::size_t b) const { return mul[a * carrier.size() + b]; }

    /// Derives zero and negation and checks the classical ring axioms
    /// (abelian group, associative multiplication, both distributive laws).
    /// Throws ConstructionError with the failing law.
    static OrdinaryRing make(Carrier carrier, std::vector<std::size_t> add, std::vector<std::size_t> mul);

    /// Elements commuting multiplicatively with every element.
    Subset center() const;

    HvRing embed() const;
};

struct OrdinaryModule {
    OrdinaryRing ring;
    Carrier carrier;
    std::vector<std::size_t> add;     // n*n
    std::vector<std::size_t> action;  // ring n * module n
    std::size_t zero = 0;
    std::vector<std::size_t> neg;

    std::size_t sum(std::size_t x, std::size_t y) const { return add[x * carrier.size() + y]; }
    std::size_t difference(std::size_t x, std::size_t y) const { return sum(x, neg[y]); }
    std::size_t act(std::size_t r, std::size_t x) const { return action[r * carrier.size() + x]; }

    /// Checks the abelian group and the three module laws exactly; throws
    /// ConstructionError naming the failing law.
    static OrdinaryModule make(OrdinaryRing ring, Carrier carrier, std::vector<std::size_t> add,
                               std::vector<std::size_t> action);

    /// Singleton-cell embedding, zero designated.
    HvModule embed() const;
};

/// Report-returning counterparts of the validating constructors.
CheckReport check_ordinary_ring(const Carrier& carrier, const std::vector<std::size_t>& add,
                                const std::vector<std::size_t>& mul);
CheckReport check_ordinary_module(const OrdinaryRing& ring, std::size_t module_size,
                                  const std::vector<std::size_t>& add, const std::vector<std::size_t>& action);

/// The ordinary module behind an all-singleton H_v-module, if it is one.
std::optional<OrdinaryModule> as_ordinary(const HvModule& m);

// ---------------------------------------------------------------------------
// Hyperactions induced on an ordinary module by fixed subsets.

enum class InducedAction {
    RingSubset,      // r P* x = (r P) x,          P inside R
    ModuleSubset,    // r P+ x = r (P + x),        P inside M
    Combined,        // r P+* x = (r P1)(P2 + x),  P1 inside R, P2 inside M
};

/// Builds the H_v-module (M, +, induced action). `ring_subset` is used by
/// RingSubset and Combined, `module_subset` by ModuleSubset and Combined.
/// Throws PreconditionError when the variant's hypothesis fails:
///  RingSubset   some p in P with p central and p*p in P;
///  ModuleSubset 0 in P;
///  Combined     some central p1 in P1 with p1*p1 = p1 and p2 in P2 with p1.p2 = 0.
HvModule build_induced_module(const OrdinaryModule& m, InducedAction variant, Subset ring_subset,
                              Subset module_subset);

} // namespace hvlab
