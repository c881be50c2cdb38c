#include "hvlab/hyperstructure.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "hvlab/error.hpp"

namespace hvlab {

// ---------------------------------------------------------------------------
// Carrier

Carrier::Carrier(std::vector<std::string> labels) : labels_(std::move(labels))
{
    if (labels_.empty()) {
        throw ConstructionError("carrier must be nonempty");
    }
    if (labels_.size() > max_carrier_size()) {
        throw ConstructionError("carrier of size " + std::to_string(labels_.size()) + " exceeds the cap of " +
                                std::to_string(max_carrier_size()) + " (set HVLAB_MAX_CARRIER to raise it)");
    }
    std::set<std::string> seen;
    for (const auto& l : labels_) {
        if (!seen.insert(l).second) {
            throw ConstructionError("duplicate element label \"" + l + "\"");
        }
    }
}

Carrier Carrier::numbered(std::size_t n)
{
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        labels.push_back(std::to_string(i));
    }
    return Carrier(std::move(labels));
}

std::optional<std::size_t> Carrier::index_of(const std::string& label) const
{
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - labels_.begin());
}

std::string Carrier::format(Subset s) const
{
    std::string out = "{";
    bool first = true;
    s.for_each([&](std::size_t i) {
        if (!first) {
            out += ",";
        }
        first = false;
        out += i < labels_.size() ? labels_[i] : std::to_string(i);
    });
    return out + "}";
}

// ---------------------------------------------------------------------------
// HyperOp / ExternalOp

HyperOp::HyperOp(std::size_t n, std::vector<Subset> cells) : n_(n), cells_(std::move(cells))
{
    if (cells_.size() != n * n) {
        throw ConstructionError("hyperoperation table has " + std::to_string(cells_.size()) + " cells, expected " +
                                std::to_string(n * n));
    }
    const Subset universe = Subset::full(n);
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        if (cells_[i].empty()) {
            throw ConstructionError("empty hyperoperation cell at [" + std::to_string(i / n) + "][" +
                                    std::to_string(i % n) + "]");
        }
        if (!cells_[i].subset_of(universe)) {
            throw ConstructionError("hyperoperation cell out of carrier at [" + std::to_string(i / n) + "][" +
                                    std::to_string(i % n) + "]");
        }
    }
}

HyperOp HyperOp::from_function(std::size_t n, const std::vector<std::size_t>& table)
{
    std::vector<Subset> cells;
    cells.reserve(table.size());
    for (auto v : table) {
        cells.push_back(Subset::singleton(v));
    }
    return HyperOp(n, std::move(cells));
}

HyperOp HyperOp::total(std::size_t n) { return HyperOp(n, std::vector<Subset>(n * n, Subset::full(n))); }

Subset HyperOp::apply(Subset a, Subset b) const
{
    if (a.empty() || b.empty()) {
        throw std::invalid_argument("subset product with an empty operand");
    }
    Subset out;
    a.for_each([&](std::size_t x) { b.for_each([&](std::size_t y) { out |= cells_[x * n_ + y]; }); });
    return out;
}

bool HyperOp::single_valued() const
{
    return std::all_of(cells_.begin(), cells_.end(), [](Subset s) { return s.size() == 1; });
}

ExternalOp::ExternalOp(std::size_t ring_size, std::size_t module_size, std::vector<Subset> cells)
    : ring_n_(ring_size), module_n_(module_size), cells_(std::move(cells))
{
    if (cells_.size() != ring_size * module_size) {
        throw ConstructionError("action table has " + std::to_string(cells_.size()) + " cells, expected " +
                                std::to_string(ring_size * module_size));
    }
    const Subset universe = Subset::full(module_size);
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        if (cells_[i].empty() || !cells_[i].subset_of(universe)) {
            throw ConstructionError(std::string(cells_[i].empty() ? "empty" : "out-of-carrier") + " action cell at [" +
                                    std::to_string(i / module_size) + "][" + std::to_string(i % module_size) + "]");
        }
    }
}

ExternalOp ExternalOp::from_function(std::size_t ring_size, std::size_t module_size,
                                     const std::vector<std::size_t>& table)
{
    std::vector<Subset> cells;
    cells.reserve(table.size());
    for (auto v : table) {
        cells.push_back(Subset::singleton(v));
    }
    return ExternalOp(ring_size, module_size, std::move(cells));
}

Subset ExternalOp::apply(Subset rs, Subset xs) const
{
    if (rs.empty() || xs.empty()) {
        throw std::invalid_argument("action applied to an empty operand");
    }
    Subset out;
    rs.for_each([&](std::size_t r) { xs.for_each([&](std::size_t x) { out |= cells_[r * module_n_ + x]; }); });
    return out;
}

bool ExternalOp::single_valued() const
{
    return std::all_of(cells_.begin(), cells_.end(), [](Subset s) { return s.size() == 1; });
}

void check_shapes(const HvRing& r)
{
    const auto n = r.carrier.size();
    if (r.add.size() != n || r.mul.size() != n) {
        throw ConstructionError("ring tables do not match the ring carrier");
    }
}

void check_shapes(const HvModule& m)
{
    check_shapes(m.ring);
    if (m.add.size() != m.carrier.size()) {
        throw ConstructionError("module addition does not match the module carrier");
    }
    if (m.action.ring_size() != m.ring.carrier.size() || m.action.module_size() != m.carrier.size()) {
        throw ConstructionError("action table does not match the carriers");
    }
    if (m.zero && *m.zero >= m.carrier.size()) {
        throw ConstructionError("designated zero is not a module element");
    }
}

// ---------------------------------------------------------------------------
// Axiom checks

namespace {

WitnessElement el(std::string role, Domain d, std::size_t i) { return WitnessElement{std::move(role), d, i}; }

// Index-based rendering; report consumers relabel through the carrier.
std::string fmt(Subset s)
{
    std::string out = "{";
    s.for_each([&](std::size_t i) {
        if (out.size() > 1) {
            out += ",";
        }
        out += std::to_string(i);
    });
    return out + "}";
}

CheckReport semigroup_report(const HyperOp& op, Domain d, const std::string& check)
{
    const auto n = op.size();
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            const Subset xy = op(x, y);
            for (std::size_t z = 0; z < n; ++z) {
                const Subset left = op.apply(x, op(y, z));
                const Subset right = op.apply(xy, z);
                if (!left.intersects(right)) {
                    Witness w{"weak-associativity",
                              {el("x", d, x), el("y", d, y), el("z", d, z)},
                              {fmt(left), fmt(right)},
                              "x(yz) and (xy)z are disjoint"};
                    return CheckReport::fail(check, std::move(w));
                }
            }
        }
    }
    return CheckReport::pass(check);
}

bool weakly_commutative(const HyperOp& op, std::size_t* wx = nullptr, std::size_t* wy = nullptr)
{
    for (std::size_t x = 0; x < op.size(); ++x) {
        for (std::size_t y = x + 1; y < op.size(); ++y) {
            if (!op(x, y).intersects(op(y, x))) {
                if (wx != nullptr) {
                    *wx = x;
                    *wy = y;
                }
                return false;
            }
        }
    }
    return true;
}

CheckReport group_report(const HyperOp& op, Domain d, const std::string& check)
{
    auto report = semigroup_report(op, d, check);
    report.flags["weak_commutative"] = weakly_commutative(op);
    if (report.failed()) {
        return report;
    }
    const Subset universe = Subset::full(op.size());
    for (std::size_t a = 0; a < op.size(); ++a) {
        const Subset left = op.apply(a, universe);
        if (left != universe) {
            report.verdict = Verdict::Fail;
            report.witness = Witness{"reproduction-left", {el("a", d, a)}, {fmt(left), fmt(universe)}, "a.H ≠ H"};
            return report;
        }
        const Subset right = op.apply(universe, a);
        if (right != universe) {
            report.verdict = Verdict::Fail;
            report.witness = Witness{"reproduction-right", {el("a", d, a)}, {fmt(right), fmt(universe)}, "H.a ≠ H"};
            return report;
        }
    }
    return report;
}

CheckReport ring_report(const HvRing& r)
{
    check_shapes(r);
    const std::string check = "hv-ring";
    auto add = group_report(r.add, Domain::Ring, "hv-group(+R)");
    if (add.failed()) {
        auto out = CheckReport::fail(check, *add.witness);
        out.witness->condition = "(R,+) " + out.witness->condition;
        return out;
    }
    auto mul = semigroup_report(r.mul, Domain::Ring, "hv-semigroup(.R)");
    if (mul.failed()) {
        auto out = CheckReport::fail(check, *mul.witness);
        out.witness->condition = "(R,.) " + out.witness->condition;
        return out;
    }
    const auto n = r.carrier.size();
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            for (std::size_t z = 0; z < n; ++z) {
                const Subset left = r.mul.apply(x, r.add(y, z));
                const Subset right = r.add.apply(r.mul(x, y), r.mul(x, z));
                if (!left.intersects(right)) {
                    return CheckReport::fail(
                        check, Witness{"left-weak-distributivity",
                                       {el("x", Domain::Ring, x), el("y", Domain::Ring, y), el("z", Domain::Ring, z)},
                                       {fmt(left), fmt(right)},
                                       "x(y+z) and xy+xz are disjoint"});
                }
                const Subset left2 = r.mul.apply(r.add(x, y), z);
                const Subset right2 = r.add.apply(r.mul(x, z), r.mul(y, z));
                if (!left2.intersects(right2)) {
                    return CheckReport::fail(
                        check, Witness{"right-weak-distributivity",
                                       {el("x", Domain::Ring, x), el("y", Domain::Ring, y), el("z", Domain::Ring, z)},
                                       {fmt(left2), fmt(right2)},
                                       "(x+y)z and xz+yz are disjoint"});
                }
            }
        }
    }
    auto out = CheckReport::pass(check);
    out.flags["additive_weak_commutative"] = add.flags["weak_commutative"];
    return out;
}

} // namespace

CheckReport check_hv_semigroup(const HyperOp& op) { return semigroup_report(op, Domain::Module, "hv-semigroup"); }

CheckReport check_hv_group(const HyperOp& op) { return group_report(op, Domain::Module, "hv-group"); }

CheckReport check_hv_ring(const HvRing& r) { return ring_report(r); }

CheckReport check_hv_module(const HvModule& m)
{
    check_shapes(m);
    const std::string check = "hv-module";
    auto ring = ring_report(m.ring);
    if (ring.failed()) {
        auto out = CheckReport::fail(check, *ring.witness);
        out.children.push_back(std::move(ring));
        return out;
    }
    auto group = group_report(m.add, Domain::Module, "hv-group(+M)");
    if (group.failed()) {
        auto out = CheckReport::fail(check, *group.witness);
        out.witness->condition = "(M,+) " + out.witness->condition;
        return out;
    }
    std::size_t wx = 0, wy = 0;
    if (!weakly_commutative(m.add, &wx, &wy)) {
        return CheckReport::fail(check, Witness{"(M,+) weak-commutativity",
                                                {el("x", Domain::Module, wx), el("y", Domain::Module, wy)},
                                                {fmt(m.add(wx, wy)), fmt(m.add(wy, wx))},
                                                "x+y and y+x are disjoint"});
    }
    const auto rn = m.ring.carrier.size();
    const auto mn = m.carrier.size();
    const auto R = [](std::size_t i) { return Subset::singleton(i); };
    for (std::size_t a = 0; a < rn; ++a) {
        for (std::size_t x = 0; x < mn; ++x) {
            for (std::size_t y = 0; y < mn; ++y) {
                const Subset left = m.action.apply(R(a), m.add(x, y));
                const Subset right = m.add.apply(m.action(a, x), m.action(a, y));
                if (!left.intersects(right)) {
                    return CheckReport::fail(
                        check, Witness{"module-law-i",
                                       {el("a", Domain::Ring, a), el("x", Domain::Module, x), el("y", Domain::Module, y)},
                                       {fmt(left), fmt(right)},
                                       "a(x+y) and ax+ay are disjoint"});
                }
            }
        }
    }
    for (std::size_t a = 0; a < rn; ++a) {
        for (std::size_t b = 0; b < rn; ++b) {
            for (std::size_t x = 0; x < mn; ++x) {
                const Subset left = m.action.apply(m.ring.add(a, b), R(x));
                const Subset right = m.add.apply(m.action(a, x), m.action(b, x));
                if (!left.intersects(right)) {
                    return CheckReport::fail(
                        check, Witness{"module-law-ii",
                                       {el("a", Domain::Ring, a), el("b", Domain::Ring, b), el("x", Domain::Module, x)},
                                       {fmt(left), fmt(right)},
                                       "(a+b)x and ax+bx are disjoint"});
                }
                const Subset left3 = m.action.apply(m.ring.mul(a, b), R(x));
                const Subset right3 = m.action.apply(R(a), m.action(b, x));
                if (!left3.intersects(right3)) {
                    return CheckReport::fail(
                        check, Witness{"module-law-iii",
                                       {el("a", Domain::Ring, a), el("b", Domain::Ring, b), el("x", Domain::Module, x)},
                                       {fmt(left3), fmt(right3)},
                                       "(ab)x and a(bx) are disjoint"});
                }
            }
        }
    }
    auto out = CheckReport::pass(check);
    out.flags["weak_commutative"] = true;
    out.flags["ring_additive_weak_commutative"] = ring.flags["additive_weak_commutative"];
    return out;
}

CheckReport check_hv_submodule(const HvModule& m, Subset s)
{
    const std::string check = "hv-submodule";
    if (s.empty()) {
        return CheckReport::fail(check, Witness{"nonempty", {}, {}, "the empty set is not a submodule"});
    }
    if (!s.subset_of(m.carrier.all())) {
        return CheckReport::fail(check, Witness{"carrier", {}, {}, "subset leaves the module carrier"});
    }
    // Closure first: it makes a+S, S+a subsets of S, so reproduction is an equality test.
    const auto xs = s.elements();
    for (auto x : xs) {
        for (auto y : xs) {
            const Subset sum = m.add(x, y);
            if (!sum.subset_of(s)) {
                return CheckReport::fail(
                    check, Witness{"closure", {el("x", Domain::Module, x), el("y", Domain::Module, y)},
                                   {m.carrier.format(sum), m.carrier.format(s)}, "x+y leaves S"});
            }
        }
    }
    for (auto a : xs) {
        const Subset left = m.add.apply(a, s);
        if (left != s) {
            return CheckReport::fail(check, Witness{"reproduction-left", {el("a", Domain::Module, a)},
                                                    {m.carrier.format(left), m.carrier.format(s)}, "a+S ≠ S"});
        }
        const Subset right = m.add.apply(s, a);
        if (right != s) {
            return CheckReport::fail(check, Witness{"reproduction-right", {el("a", Domain::Module, a)},
                                                    {m.carrier.format(right), m.carrier.format(s)}, "S+a ≠ S"});
        }
    }
    for (std::size_t r = 0; r < m.ring.carrier.size(); ++r) {
        for (auto x : xs) {
            const Subset rx = m.action(r, x);
            if (!rx.subset_of(s)) {
                return CheckReport::fail(
                    check, Witness{"action-closure", {el("r", Domain::Ring, r), el("x", Domain::Module, x)},
                                   {m.carrier.format(rx), m.carrier.format(s)}, "r.x leaves S"});
            }
        }
    }
    return CheckReport::pass(check);
}

bool is_hv_submodule(const HvModule& m, Subset s) { return check_hv_submodule(m, s).passed(); }

std::vector<Subset> hv_submodules(const HvModule& m)
{
    std::vector<Subset> out;
    const std::uint64_t limit = Subset::full(m.carrier.size()).bits();
    for (std::uint64_t bits = 1; bits <= limit && bits != 0; ++bits) {
        if (is_hv_submodule(m, Subset{bits})) {
            out.push_back(Subset{bits});
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Ordinary structures

namespace {

std::optional<std::string> abelian_group_violation(std::size_t n, const std::vector<std::size_t>& add,
                                                   std::size_t* zero_out, std::vector<std::size_t>* neg_out)
{
    auto sum = [&](std::size_t a, std::size_t b) { return add[a * n + b]; };
    for (auto v : add) {
        if (v >= n) {
            return "addition leaves the carrier";
        }
    }
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (sum(a, b) != sum(b, a)) {
                return "addition is not commutative at (" + std::to_string(a) + "," + std::to_string(b) + ")";
            }
            for (std::size_t c = 0; c < n; ++c) {
                if (sum(sum(a, b), c) != sum(a, sum(b, c))) {
                    return "addition is not associative at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                           std::to_string(c) + ")";
                }
            }
        }
    }
    std::optional<std::size_t> zero;
    for (std::size_t e = 0; e < n && !zero; ++e) {
        bool identity = true;
        for (std::size_t a = 0; a < n; ++a) {
            identity = identity && sum(e, a) == a;
        }
        if (identity) {
            zero = e;
        }
    }
    if (!zero) {
        return "addition has no identity";
    }
    std::vector<std::size_t> neg(n, n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (sum(a, b) == *zero) {
                neg[a] = b;
                break;
            }
        }
        if (neg[a] == n) {
            return "element " + std::to_string(a) + " has no additive inverse";
        }
    }
    if (zero_out != nullptr) {
        *zero_out = *zero;
    }
    if (neg_out != nullptr) {
        *neg_out = std::move(neg);
    }
    return std::nullopt;
}

std::optional<std::string> ring_violation(std::size_t n, const std::vector<std::size_t>& add,
                                          const std::vector<std::size_t>& mul, std::size_t* zero,
                                          std::vector<std::size_t>* neg)
{
    if (add.size() != n * n || mul.size() != n * n) {
        return "ring tables have the wrong size";
    }
    if (auto v = abelian_group_violation(n, add, zero, neg)) {
        return v;
    }
    auto sum = [&](std::size_t a, std::size_t b) { return add[a * n + b]; };
    auto prod = [&](std::size_t a, std::size_t b) { return mul[a * n + b]; };
    for (auto v : mul) {
        if (v >= n) {
            return "multiplication leaves the carrier";
        }
    }
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            for (std::size_t c = 0; c < n; ++c) {
                auto at = "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
                if (prod(prod(a, b), c) != prod(a, prod(b, c))) {
                    return "multiplication is not associative at " + at;
                }
                if (prod(a, sum(b, c)) != sum(prod(a, b), prod(a, c))) {
                    return "left distributivity fails at " + at;
                }
                if (prod(sum(a, b), c) != sum(prod(a, c), prod(b, c))) {
                    return "right distributivity fails at " + at;
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<std::string> module_violation(const OrdinaryRing& ring, std::size_t n, const std::vector<std::size_t>& add,
                                            const std::vector<std::size_t>& action, std::size_t* zero,
                                            std::vector<std::size_t>* neg)
{
    const auto rn = ring.carrier.size();
    if (add.size() != n * n || action.size() != rn * n) {
        return "module tables have the wrong size";
    }
    if (auto v = abelian_group_violation(n, add, zero, neg)) {
        return v;
    }
    for (auto v : action) {
        if (v >= n) {
            return "action leaves the carrier";
        }
    }
    auto sum = [&](std::size_t x, std::size_t y) { return add[x * n + y]; };
    auto act = [&](std::size_t r, std::size_t x) { return action[r * n + x]; };
    for (std::size_t a = 0; a < rn; ++a) {
        for (std::size_t x = 0; x < n; ++x) {
            for (std::size_t y = 0; y < n; ++y) {
                if (act(a, sum(x, y)) != sum(act(a, x), act(a, y))) {
                    return "a(x+y) = ax+ay fails at a=" + std::to_string(a) + " x=" + std::to_string(x) +
                           " y=" + std::to_string(y);
                }
            }
            for (std::size_t b = 0; b < rn; ++b) {
                if (act(ring.sum(a, b), x) != sum(act(a, x), act(b, x))) {
                    return "(a+b)x = ax+bx fails at a=" + std::to_string(a) + " b=" + std::to_string(b) +
                           " x=" + std::to_string(x);
                }
                if (act(ring.product(a, b), x) != act(a, act(b, x))) {
                    return "(ab)x = a(bx) fails at a=" + std::to_string(a) + " b=" + std::to_string(b) +
                           " x=" + std::to_string(x);
                }
            }
        }
    }
    return std::nullopt;
}

} // namespace

CheckReport check_ordinary_ring(const Carrier& carrier, const std::vector<std::size_t>& add,
                                const std::vector<std::size_t>& mul)
{
    if (auto v = ring_violation(carrier.size(), add, mul, nullptr, nullptr)) {
        return CheckReport::fail("ring", Witness{"ring-axioms", {}, {}, *v});
    }
    return CheckReport::pass("ring");
}

CheckReport check_ordinary_module(const OrdinaryRing& ring, std::size_t module_size,
                                  const std::vector<std::size_t>& add, const std::vector<std::size_t>& action)
{
    if (auto v = module_violation(ring, module_size, add, action, nullptr, nullptr)) {
        return CheckReport::fail("module", Witness{"module-axioms", {}, {}, *v});
    }
    return CheckReport::pass("module");
}

OrdinaryRing OrdinaryRing::make(Carrier carrier, std::vector<std::size_t> add, std::vector<std::size_t> mul)
{
    OrdinaryRing r;
    if (auto v = ring_violation(carrier.size(), add, mul, &r.zero, &r.neg)) {
        throw ConstructionError("not a ring: " + *v);
    }
    r.carrier = std::move(carrier);
    r.add = std::move(add);
    r.mul = std::move(mul);
    return r;
}

Subset OrdinaryRing::center() const
{
    Subset out;
    const auto n = carrier.size();
    for (std::size_t p = 0; p < n; ++p) {
        bool central = true;
        for (std::size_t r = 0; r < n && central; ++r) {
            central = product(p, r) == product(r, p);
        }
        if (central) {
            out.insert(p);
        }
    }
    return out;
}

HvRing OrdinaryRing::embed() const
{
    const auto n = carrier.size();
    return HvRing{carrier, HyperOp::from_function(n, add), HyperOp::from_function(n, mul)};
}

OrdinaryModule OrdinaryModule::make(OrdinaryRing ring, Carrier carrier, std::vector<std::size_t> add,
                                    std::vector<std::size_t> action)
{
    OrdinaryModule m;
    if (auto v = module_violation(ring, carrier.size(), add, action, &m.zero, &m.neg)) {
        throw ConstructionError("not a module: " + *v);
    }
    m.ring = std::move(ring);
    m.carrier = std::move(carrier);
    m.add = std::move(add);
    m.action = std::move(action);
    return m;
}

HvModule OrdinaryModule::embed() const
{
    const auto n = carrier.size();
    return HvModule{ring.embed(), carrier, HyperOp::from_function(n, add),
                    ExternalOp::from_function(ring.carrier.size(), n, action), zero};
}

std::optional<OrdinaryModule> as_ordinary(const HvModule& m)
{
    if (!m.ring.add.single_valued() || !m.ring.mul.single_valued() || !m.add.single_valued() ||
        !m.action.single_valued()) {
        return std::nullopt;
    }
    auto flatten = [](const std::vector<Subset>& cells) {
        std::vector<std::size_t> out;
        out.reserve(cells.size());
        for (auto c : cells) {
            out.push_back(c.lowest());
        }
        return out;
    };
    try {
        auto ring = OrdinaryRing::make(m.ring.carrier, flatten(m.ring.add.cells()), flatten(m.ring.mul.cells()));
        return OrdinaryModule::make(std::move(ring), m.carrier, flatten(m.add.cells()), flatten(m.action.cells()));
    } catch (const ConstructionError&) {
        return std::nullopt;
    }
}

// ---------------------------------------------------------------------------
// Induced hyperactions

HvModule build_induced_module(const OrdinaryModule& m, InducedAction variant, Subset ring_subset,
                              Subset module_subset)
{
    const auto rn = m.ring.carrier.size();
    const auto mn = m.carrier.size();
    const Subset center = m.ring.center();
    if (!ring_subset.subset_of(m.ring.carrier.all()) || !module_subset.subset_of(m.carrier.all())) {
        throw PreconditionError("subset leaves its carrier");
    }

    switch (variant) {
    case InducedAction::RingSubset: {
        bool ok = false;
        (ring_subset & center).for_each([&](std::size_t p) { ok = ok || ring_subset.contains(m.ring.product(p, p)); });
        if (!ok) {
            throw PreconditionError("hypothesis (a) fails: no central p ∈ P with p² ∈ P");
        }
        break;
    }
    case InducedAction::ModuleSubset:
        if (!module_subset.contains(m.zero)) {
            throw PreconditionError("hypothesis (b) fails: 0 ∉ P");
        }
        break;
    case InducedAction::Combined: {
        bool ok = false;
        (ring_subset & center).for_each([&](std::size_t p1) {
            if (m.ring.product(p1, p1) != p1) {
                return;
            }
            module_subset.for_each([&](std::size_t p2) { ok = ok || m.act(p1, p2) == m.zero; });
        });
        if (!ok) {
            throw PreconditionError(
                "hypothesis (c) fails: no central idempotent p1 ∈ P1 with p1·p2 = 0 for some p2 ∈ P2");
        }
        break;
    }
    }

    std::vector<Subset> cells(rn * mn);
    for (std::size_t r = 0; r < rn; ++r) {
        for (std::size_t x = 0; x < mn; ++x) {
            Subset cell;
            switch (variant) {
            case InducedAction::RingSubset:
                ring_subset.for_each([&](std::size_t p) { cell.insert(m.act(m.ring.product(r, p), x)); });
                break;
            case InducedAction::ModuleSubset:
                module_subset.for_each([&](std::size_t p) { cell.insert(m.act(r, m.sum(p, x))); });
                break;
            case InducedAction::Combined:
                ring_subset.for_each([&](std::size_t p1) {
                    module_subset.for_each(
                        [&](std::size_t p2) { cell.insert(m.act(m.ring.product(r, p1), m.sum(p2, x))); });
                });
                break;
            }
            cells[r * mn + x] = cell;
        }
    }
    HvModule out = m.embed();
    out.action = ExternalOp(rn, mn, std::move(cells));
    return out;
}

} // namespace hvlab
