#include "hvlab/generator.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "hvlab/error.hpp"
#include "hvlab/fundamental.hpp"
#include "hvlab/homomorphism.hpp"
#include "hvlab/predicates.hpp"

namespace hvlab {

std::vector<Rational01> GenConfig::ninths() { return uniform_grid(9); }

std::vector<Rational01> GenConfig::uniform_grid(std::int64_t d)
{
    std::vector<Rational01> out;
    for (std::int64_t i = 0; i <= d; ++i) {
        out.push_back(Rational01::make(i, d));
    }
    return out;
}

void validate(const GenConfig& cfg)
{
    if (cfg.max_module_size == 0 || cfg.max_ring_size == 0) {
        throw std::invalid_argument("carrier sizes must be positive");
    }
    if (cfg.max_module_size > max_carrier_size() || cfg.max_ring_size > max_carrier_size()) {
        throw std::invalid_argument("carrier sizes exceed the cap of " + std::to_string(max_carrier_size()));
    }
    const bool has0 = std::find(cfg.grid.begin(), cfg.grid.end(), Rational01::zero()) != cfg.grid.end();
    const bool has1 = std::find(cfg.grid.begin(), cfg.grid.end(), Rational01::one()) != cfg.grid.end();
    if (!has0 || !has1) {
        throw std::invalid_argument("value grid must contain 0 and 1");
    }
    if (cfg.mode == GenMode::Enumerate && (cfg.max_module_size > 2 || cfg.max_ring_size > 2)) {
        throw std::invalid_argument("exhaustive enumeration supports |M| <= 2 and |R| <= 2 only");
    }
}

namespace {

using Rng = std::mt19937_64;

// Plain modulo keeps streams identical across standard libraries.
std::size_t pick(Rng& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }
bool coin(Rng& rng, std::size_t num, std::size_t den) { return pick(rng, den) < num; }

Subset random_nonempty(Rng& rng, std::size_t n)
{
    if (coin(rng, 1, 2)) {
        return Subset::singleton(pick(rng, n));
    }
    const std::uint64_t span = Subset::full(n).bits();
    return Subset{1 + rng() % span};
}

// ---------------------------------------------------------------------------
// Ordinary catalogue

std::vector<std::size_t> cyclic_add(std::size_t n)
{
    std::vector<std::size_t> t(n * n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            t[a * n + b] = (a + b) % n;
        }
    }
    return t;
}

std::vector<std::size_t> klein_add()
{
    std::vector<std::size_t> t(16);
    for (std::size_t a = 0; a < 4; ++a) {
        for (std::size_t b = 0; b < 4; ++b) {
            t[a * 4 + b] = a ^ b;
        }
    }
    return t;
}

struct RingSpec {
    OrdinaryRing ring;
    bool integer_mult;  // Z_n with the usual product
};

std::vector<RingSpec> ring_catalogue(std::size_t max_r)
{
    std::vector<RingSpec> out;
    for (std::size_t n = 1; n <= std::min<std::size_t>(max_r, 3); ++n) {
        std::vector<std::size_t> mul(n * n);
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
                mul[a * n + b] = (a * b) % n;
            }
        }
        out.push_back({OrdinaryRing::make(Carrier::numbered(n), cyclic_add(n), mul), true});
        if (n > 1) {
            out.push_back({OrdinaryRing::make(Carrier::numbered(n), cyclic_add(n), std::vector<std::size_t>(n * n, 0)),
                           false});
        }
    }
    return out;
}

struct GroupSpec {
    std::vector<std::size_t> add;
    std::size_t size;
    std::size_t exponent;
};

std::vector<GroupSpec> group_catalogue(std::size_t max_m)
{
    std::vector<GroupSpec> out;
    for (std::size_t n = 1; n <= std::min<std::size_t>(max_m, 4); ++n) {
        out.push_back({cyclic_add(n), n, n});
    }
    if (max_m >= 4) {
        out.push_back({klein_add(), 4, 2});
    }
    return out;
}

std::size_t multiple(const GroupSpec& g, std::size_t k, std::size_t x)
{
    std::size_t acc = 0;  // identity is element 0 in every catalogue group
    for (std::size_t i = 0; i < k; ++i) {
        acc = g.add[acc * g.size + x];
    }
    return acc;
}

HvModule permute_module(const HvModule& m, const std::vector<std::size_t>& perm)
{
    const auto n = m.carrier.size();
    const auto rn = m.ring.carrier.size();
    auto map_set = [&](Subset s) {
        Subset out;
        s.for_each([&](std::size_t i) { out.insert(perm[i]); });
        return out;
    };
    std::vector<Subset> add(n * n), action(rn * n);
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            add[perm[x] * n + perm[y]] = map_set(m.add(x, y));
        }
        for (std::size_t r = 0; r < rn; ++r) {
            action[r * n + perm[x]] = map_set(m.action(r, x));
        }
    }
    HvModule out{m.ring, m.carrier, HyperOp(n, std::move(add)), ExternalOp(rn, n, std::move(action)), std::nullopt};
    if (m.zero) {
        out.zero = perm[*m.zero];
    }
    return out;
}

std::vector<std::size_t> random_permutation(Rng& rng, std::size_t n)
{
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    for (std::size_t i = n; i > 1; --i) {
        std::swap(p[i - 1], p[pick(rng, i)]);
    }
    return p;
}

template <class Cells>
Cells inflate(Rng& rng, Cells cells, std::size_t n, std::size_t num, std::size_t den)
{
    for (auto& c : cells) {
        if (coin(rng, num, den)) {
            c |= random_nonempty(rng, n);
        }
    }
    return cells;
}

HyperOp inflate_op(Rng& rng, const HyperOp& op, std::size_t num, std::size_t den)
{
    return HyperOp(op.size(), inflate(rng, op.cells(), op.size(), num, den));
}

// Grows cells until every row and column union covers the carrier, adding
// missing elements to the lowest-index cell of the row (column).
std::vector<Subset> repair_reproduction(std::vector<Subset> cells, std::size_t n)
{
    const Subset all = Subset::full(n);
    for (std::size_t a = 0; a < n; ++a) {
        Subset row, col;
        for (std::size_t u = 0; u < n; ++u) {
            row |= cells[a * n + u];
            col |= cells[u * n + a];
        }
        cells[a * n + 0] |= Subset{all.bits() & ~row.bits()};
        cells[0 * n + a] |= Subset{all.bits() & ~col.bits()};
    }
    return cells;
}

std::vector<Subset> repair_commutativity(std::vector<Subset> cells, std::size_t n)
{
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = x + 1; y < n; ++y) {
            if (!cells[x * n + y].intersects(cells[y * n + x])) {
                cells[y * n + x].insert(cells[x * n + y].lowest());
            }
        }
    }
    return cells;
}

std::vector<Subset> random_cells(Rng& rng, std::size_t count, std::size_t n)
{
    std::vector<Subset> cells(count);
    for (auto& c : cells) {
        c = random_nonempty(rng, n);
    }
    return cells;
}

} // namespace

std::vector<OrdinaryModule> ordinary_catalogue(std::size_t max_m, std::size_t max_r)
{
    std::vector<OrdinaryModule> out;
    for (const auto& rs : ring_catalogue(max_r)) {
        const auto rn = rs.ring.carrier.size();
        for (const auto& g : group_catalogue(max_m)) {
            out.push_back(OrdinaryModule::make(rs.ring, Carrier::numbered(g.size), g.add,
                                               std::vector<std::size_t>(rn * g.size, 0)));
            if (rs.integer_mult && rn > 1 && rn % g.exponent == 0 && g.size > 1) {
                std::vector<std::size_t> action(rn * g.size);
                for (std::size_t r = 0; r < rn; ++r) {
                    for (std::size_t x = 0; x < g.size; ++x) {
                        action[r * g.size + x] = multiple(g, r, x);
                    }
                }
                out.push_back(OrdinaryModule::make(rs.ring, Carrier::numbered(g.size), g.add, action));
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Module streams

struct ModuleStream::Impl {
    GenConfig cfg;
    Rng rng;
    std::size_t emitted = 0;

    // Random mode
    std::vector<OrdinaryModule> catalogue;

    // Enumeration mode
    std::vector<std::pair<std::size_t, std::size_t>> shapes;  // (|R|, |M|)
    std::size_t shape = 0;
    std::vector<HvRing> rings;
    std::vector<HyperOp> groups;
    std::size_t ring_i = 0, group_i = 0;
    std::uint64_t action_code = 0, action_count = 0;
    bool shape_ready = false;

    explicit Impl(GenConfig c) : cfg(std::move(c)), rng(cfg.seed)
    {
        validate(cfg);
        if (cfg.mode == GenMode::Random) {
            catalogue = ordinary_catalogue(cfg.max_module_size, cfg.max_ring_size);
        } else {
            for (std::size_t r = 1; r <= cfg.max_ring_size; ++r) {
                for (std::size_t m = 1; m <= cfg.max_module_size; ++m) {
                    shapes.emplace_back(r, m);
                }
            }
        }
    }

    static std::vector<Subset> decode(std::uint64_t code, std::size_t cells, std::size_t n)
    {
        const std::uint64_t base = Subset::full(n).bits();  // nonempty subsets 1..base
        std::vector<Subset> out(cells);
        for (auto& c : out) {
            c = Subset{1 + code % base};
            code /= base;
        }
        return out;
    }

    static std::uint64_t power(std::uint64_t b, std::size_t e)
    {
        std::uint64_t v = 1;
        for (std::size_t i = 0; i < e; ++i) {
            v *= b;
        }
        return v;
    }

    void prepare_shape()
    {
        const auto [rn, mn] = shapes[shape];
        rings.clear();
        groups.clear();
        const auto rbase = Subset::full(rn).bits();
        const auto rtables = power(rbase, rn * rn);
        const Carrier rc = Carrier::numbered(rn);
        for (std::uint64_t a = 0; a < rtables; ++a) {
            HyperOp add(rn, decode(a, rn * rn, rn));
            if (!check_hv_group(add).passed()) {
                continue;
            }
            for (std::uint64_t b = 0; b < rtables; ++b) {
                HvRing ring{rc, add, HyperOp(rn, decode(b, rn * rn, rn))};
                if (check_hv_ring(ring).passed()) {
                    rings.push_back(std::move(ring));
                }
            }
        }
        const auto mbase = Subset::full(mn).bits();
        const auto mtables = power(mbase, mn * mn);
        for (std::uint64_t a = 0; a < mtables; ++a) {
            HyperOp add(mn, decode(a, mn * mn, mn));
            auto g = check_hv_group(add);
            if (g.passed() && g.flags["weak_commutative"]) {
                groups.push_back(std::move(add));
            }
        }
        action_count = power(mbase, rn * mn);
        ring_i = group_i = 0;
        action_code = 0;
        shape_ready = true;
    }

    std::optional<HvModule> next_enumerated()
    {
        while (shape < shapes.size()) {
            if (!shape_ready) {
                prepare_shape();
            }
            const auto [rn, mn] = shapes[shape];
            while (ring_i < rings.size() && group_i < groups.size()) {
                const std::size_t r_idx = ring_i, g_idx = group_i;
                const std::uint64_t code = action_code;
                if (++action_code == action_count) {
                    action_code = 0;
                    if (++group_i == groups.size()) {
                        group_i = 0;
                        ++ring_i;
                    }
                }
                HvModule m{rings[r_idx], Carrier::numbered(mn), groups[g_idx],
                           ExternalOp(rn, mn, decode(code, rn * mn, mn)), std::nullopt};
                if (check_hv_module(m).passed()) {
                    return m;
                }
            }
            ++shape;
            shape_ready = false;
        }
        return std::nullopt;
    }

    std::optional<HvModule> grown_from_base(std::size_t rn, std::size_t mn)
    {
        std::vector<const OrdinaryModule*> fits;
        for (const auto& om : catalogue) {
            if (om.ring.carrier.size() == rn && om.carrier.size() == mn) {
                fits.push_back(&om);
            }
        }
        if (fits.empty()) {
            return std::nullopt;
        }
        HvModule m = fits[pick(rng, fits.size())]->embed();
        const std::size_t level = pick(rng, 5);  // none, 1/4, ..., all of the cells grow
        m.ring.add = inflate_op(rng, m.ring.add, level, 4);
        m.ring.mul = inflate_op(rng, m.ring.mul, level, 4);
        m.add = inflate_op(rng, m.add, level, 4);
        m.action = ExternalOp(rn, mn, inflate(rng, m.action.cells(), mn, level, 4));
        return permute_module(m, random_permutation(rng, mn));
    }

    std::optional<HvModule> drawn(std::size_t rn, std::size_t mn)
    {
        HvRing ring{Carrier::numbered(rn), HyperOp(rn, repair_reproduction(random_cells(rng, rn * rn, rn), rn)),
                    HyperOp(rn, random_cells(rng, rn * rn, rn))};
        auto add = repair_commutativity(repair_reproduction(random_cells(rng, mn * mn, mn), mn), mn);
        HvModule m{std::move(ring), Carrier::numbered(mn), HyperOp(mn, std::move(add)),
                   ExternalOp(rn, mn, random_cells(rng, rn * mn, mn)), std::nullopt};
        if (check_hv_module(m).passed()) {
            return m;
        }
        return std::nullopt;
    }

    std::optional<HvModule> next_random()
    {
        if (emitted >= cfg.budget) {
            return std::nullopt;
        }
        ++emitted;
        for (int attempt = 0; attempt < 64; ++attempt) {
            const std::size_t rn = 1 + pick(rng, cfg.max_ring_size);
            const std::size_t mn = 1 + pick(rng, cfg.max_module_size);
            auto m = coin(rng, 1, 2) ? grown_from_base(rn, mn) : drawn(rn, mn);
            if (m) {
                return m;
            }
        }
        // Always available: trivial ring acting on the one-point module.
        auto m = ordinary_catalogue(1, 1).front().embed();
        return m;
    }
};

ModuleStream::ModuleStream(GenConfig cfg) : impl_(std::make_unique<Impl>(std::move(cfg))) {}
ModuleStream::~ModuleStream() = default;
ModuleStream::ModuleStream(ModuleStream&&) noexcept = default;
ModuleStream& ModuleStream::operator=(ModuleStream&&) noexcept = default;

std::optional<HvModule> ModuleStream::next()
{
    return impl_->cfg.mode == GenMode::Enumerate ? impl_->next_enumerated() : impl_->next_random();
}

std::vector<HvModule> generate_hv_modules(const GenConfig& cfg)
{
    ModuleStream stream(cfg);
    std::vector<HvModule> out;
    while (auto m = stream.next()) {
        out.push_back(std::move(*m));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Fuzzy sets

namespace {

Interval random_interval(Rng& rng, const std::vector<Rational01>& grid)
{
    auto a = grid[pick(rng, grid.size())];
    auto b = grid[pick(rng, grid.size())];
    return Interval{std::min(a, b), std::max(a, b)};
}

Interval random_interval_below(Rng& rng, const std::vector<Rational01>& grid, const Rational01& bound)
{
    std::vector<Rational01> allowed;
    for (const auto& v : grid) {
        if (v <= bound) {
            allowed.push_back(v);
        }
    }
    return random_interval(rng, allowed);
}

// Values for nested layers, componentwise non-increasing from the inside out.
std::vector<Interval> descending_layers(Rng& rng, const std::vector<Rational01>& grid, std::size_t k)
{
    std::vector<Rational01> lo(k), hi(k);
    for (std::size_t i = 0; i < k; ++i) {
        lo[i] = grid[pick(rng, grid.size())];
        hi[i] = grid[pick(rng, grid.size())];
    }
    std::sort(lo.rbegin(), lo.rend());
    std::sort(hi.rbegin(), hi.rend());
    std::vector<Interval> out(k);
    for (std::size_t i = 0; i < k; ++i) {
        out[i] = Interval{lo[i], std::max(lo[i], hi[i])};
    }
    return out;
}

// A chain of submodules ending in the whole carrier, innermost first.
std::vector<Subset> random_chain(Rng& rng, const std::vector<Subset>& submodules, Subset all)
{
    std::vector<Subset> chain{all};
    while (coin(rng, 2, 3)) {
        std::vector<Subset> smaller;
        for (Subset s : submodules) {
            if (s != chain.back() && s.subset_of(chain.back())) {
                smaller.push_back(s);
            }
        }
        if (smaller.empty()) {
            break;
        }
        chain.push_back(smaller[pick(rng, smaller.size())]);
    }
    std::reverse(chain.begin(), chain.end());
    return chain;
}

IVFuzzySet layered(const std::vector<Subset>& chain, const std::vector<Interval>& values, std::size_t n)
{
    IVFuzzySet f(n);
    std::vector<bool> set(n, false);
    for (std::size_t layer = 0; layer < chain.size(); ++layer) {
        chain[layer].for_each([&](std::size_t x) {
            if (!set[x]) {
                f[x] = values[layer];
                set[x] = true;
            }
        });
    }
    return f;
}

Ivifs unconstrained(Rng& rng, std::size_t n, const std::vector<Rational01>& grid)
{
    Ivifs a;
    for (std::size_t x = 0; x < n; ++x) {
        a.membership.push_back(random_interval(rng, grid));
        a.nonmembership.push_back(random_interval_below(rng, grid, complement(a.membership.back().hi)));
    }
    return a;
}

} // namespace

std::vector<Ivifs> generate_ivifs(const HvModule& m, const GenConfig& cfg, IvifsTarget target)
{
    validate(cfg);
    Rng rng(cfg.seed ^ 0x9e3779b97f4a7c15ULL);
    const auto n = m.carrier.size();
    std::vector<Ivifs> out;
    if (target == IvifsTarget::Unconstrained) {
        for (std::size_t i = 0; i < cfg.budget; ++i) {
            out.push_back(unconstrained(rng, n, cfg.grid));
        }
        return out;
    }
    const auto submodules = hv_submodules(m);
    const auto norms = IntervalNormPair::min_max();
    for (std::size_t attempt = 0; attempt < cfg.budget * 10 && out.size() < cfg.budget; ++attempt) {
        const auto mchain = random_chain(rng, submodules, m.carrier.all());
        const auto nchain = coin(rng, 1, 2) ? mchain : random_chain(rng, submodules, m.carrier.all());
        Ivifs a;
        a.membership = layered(mchain, descending_layers(rng, cfg.grid, mchain.size()), n);
        bool valid = false;
        for (int tries = 0; tries < 8 && !valid; ++tries) {
            // Non-membership grows outward.
            auto values = descending_layers(rng, cfg.grid, nchain.size());
            std::reverse(values.begin(), values.end());
            a.nonmembership = layered(nchain, values, n);
            valid = validate_ivifs(a).passed();
        }
        if (!valid) {
            a.nonmembership.assign(n, bottom_interval());
        }
        if (target == IvifsTarget::Layered || check_st_hv_submodule(m, a, norms).passed()) {
            out.push_back(std::move(a));
        }
    }
    return out;
}

std::vector<ElementMap> enumerate_maps(std::size_t n, std::size_t m)
{
    std::vector<ElementMap> out;
    ElementMap f(n, 0);
    while (true) {
        out.push_back(f);
        std::size_t i = n;
        while (i > 0) {
            --i;
            if (++f[i] < m) {
                break;
            }
            f[i] = 0;
            if (i == 0) {
                return out;
            }
        }
        if (n == 0) {
            return out;
        }
    }
}

std::vector<std::vector<Rational01>> generate_scalar_fuzzy(std::size_t n, const GenConfig& cfg)
{
    validate(cfg);
    Rng rng(cfg.seed ^ 0x5bd1e995ULL);
    std::vector<std::vector<Rational01>> out;
    for (std::size_t i = 0; i < cfg.budget; ++i) {
        std::vector<Rational01> mu(n);
        for (auto& v : mu) {
            v = cfg.grid[pick(rng, cfg.grid.size())];
        }
        out.push_back(std::move(mu));
    }
    return out;
}

std::vector<HvModule> generate_modules_over(const HvRing& ring, const GenConfig& cfg)
{
    validate(cfg);
    Rng rng(cfg.seed ^ 0xc2b2ae3d27d4eb4fULL);
    const auto rn = ring.carrier.size();
    const auto groups = group_catalogue(cfg.max_module_size);
    std::vector<HvModule> out;
    for (std::size_t attempt = 0; attempt < cfg.budget * 8 && out.size() < cfg.budget; ++attempt) {
        const std::size_t mn = 1 + pick(rng, cfg.max_module_size);
        switch (pick(rng, 3)) {
        case 0: {
            std::vector<const GroupSpec*> fits;
            for (const auto& g : groups) {
                if (g.size == mn) {
                    fits.push_back(&g);
                }
            }
            if (fits.empty()) {
                break;
            }
            const auto level = pick(rng, 3);
            HvModule m{ring, Carrier::numbered(mn), inflate_op(rng, HyperOp::from_function(mn, fits[pick(rng, fits.size())]->add), level, 4),
                       ExternalOp(rn, mn, inflate(rng, std::vector<Subset>(rn * mn, Subset::singleton(0)), mn, level, 4)),
                       0};
            out.push_back(permute_module(m, random_permutation(rng, mn)));
            break;
        }
        case 1: {
            HyperOp add(mn, repair_commutativity(repair_reproduction(random_cells(rng, mn * mn, mn), mn), mn));
            if (check_hv_group(add).passed()) {
                out.push_back(HvModule{ring, Carrier::numbered(mn), std::move(add),
                                       ExternalOp(rn, mn, std::vector<Subset>(rn * mn, Subset::full(mn))), std::nullopt});
            }
            break;
        }
        default: {
            HvModule m{ring, Carrier::numbered(mn),
                       HyperOp(mn, repair_commutativity(repair_reproduction(random_cells(rng, mn * mn, mn), mn), mn)),
                       ExternalOp(rn, mn, random_cells(rng, rn * mn, mn)), std::nullopt};
            if (check_hv_module(m).passed()) {
                out.push_back(std::move(m));
            }
            break;
        }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Counterexample hunting

std::optional<HuntTarget> parse_hunt_target(const std::string& name)
{
    if (name == "thm32" || name == "cut-characterization") {
        return HuntTarget::CutCharacterization;
    }
    if (name == "lemma35" || name == "preimage-submodule") {
        return HuntTarget::PreimageSubmodule;
    }
    if (name == "thm36" || name == "homomorphic-transfer") {
        return HuntTarget::HomomorphicTransfer;
    }
    if (name == "thm39" || name == "quotient-transfer") {
        return HuntTarget::QuotientTransfer;
    }
    return std::nullopt;
}

std::optional<Weakening> parse_weakening(const std::string& name)
{
    if (name == "none") {
        return Weakening::None;
    }
    if (name == "norm") {
        return Weakening::NonIdempotentNorm;
    }
    if (name == "map") {
        return Weakening::NonStrongMap;
    }
    if (name == "omega") {
        return Weakening::NoCoreOverride;
    }
    return std::nullopt;
}

std::string to_string(HuntTarget t)
{
    switch (t) {
    case HuntTarget::CutCharacterization:
        return "cut-characterization";
    case HuntTarget::PreimageSubmodule:
        return "preimage-submodule";
    case HuntTarget::HomomorphicTransfer:
        return "homomorphic-transfer";
    case HuntTarget::QuotientTransfer:
        return "quotient-transfer";
    }
    return "?";
}

std::string to_string(Weakening w)
{
    switch (w) {
    case Weakening::None:
        return "none";
    case Weakening::NonIdempotentNorm:
        return "norm";
    case Weakening::NonStrongMap:
        return "map";
    case Weakening::NoCoreOverride:
        return "omega";
    }
    return "?";
}

namespace {

bool applicable(HuntTarget t, Weakening w)
{
    switch (w) {
    case Weakening::None:
        return true;
    case Weakening::NonIdempotentNorm:
        return t == HuntTarget::CutCharacterization;
    case Weakening::NonStrongMap:
        return t == HuntTarget::HomomorphicTransfer || t == HuntTarget::PreimageSubmodule;
    case Weakening::NoCoreOverride:
        return t == HuntTarget::QuotientTransfer;
    }
    return false;
}

GenConfig derived(const GenConfig& cfg, std::uint64_t salt, std::size_t budget)
{
    GenConfig c = cfg;
    c.mode = GenMode::Random;
    c.seed = cfg.seed * 0x100000001b3ULL + salt;
    c.budget = budget;
    return c;
}

// Fuzzy sets tried per module: half built to pass, half unconstrained.
std::vector<Ivifs> probe_sets(const HvModule& m, const GenConfig& cfg, std::uint64_t salt, std::size_t each)
{
    const GenConfig c = derived(cfg, salt, each);
    auto out = generate_ivifs(m, c, IvifsTarget::Passing);
    for (auto& a : generate_ivifs(m, c, IvifsTarget::Unconstrained)) {
        out.push_back(std::move(a));
    }
    return out;
}

// Targets over the same ring: the module itself, its projection onto the
// fundamental quotient and a handful of generated modules.
std::vector<HvModule> map_targets(const HvModule& m, const GenConfig& cfg, std::uint64_t salt)
{
    std::vector<HvModule> out{m};
    try {
        out.push_back(canonical_projection(m, build_fundamental_quotient(m)).module);
    } catch (const ConsistencyError&) {
    }
    for (auto& t : generate_modules_over(m.ring, derived(cfg, salt, 4))) {
        out.push_back(std::move(t));
    }
    return out;
}

bool admitted(MapClass cls, Weakening w)
{
    return w == Weakening::NonStrongMap ? cls != MapClass::None : cls == MapClass::Strong;
}

} // namespace

HuntReport hunt_counterexamples(HuntTarget target, Weakening weaken, const GenConfig& cfg)
{
    if (!applicable(target, weaken)) {
        throw std::invalid_argument("weakening '" + to_string(weaken) + "' does not apply to " + to_string(target));
    }
    validate(cfg);
    HuntReport rep;
    rep.target = target;
    rep.weakening = weaken;
    rep.seed = cfg.seed;

    const auto norms = weaken == Weakening::NonIdempotentNorm
                           ? IntervalNormPair{lift_norm(ScalarNorm::product()), lift_norm(ScalarNorm::probabilistic_sum())}
                           : IntervalNormPair::min_max();

    auto record = [&](const HvModule& m, CheckReport failure) {
        rep.found = true;
        rep.module = m;
        rep.failure = std::move(failure);
    };

    ModuleStream stream(cfg);
    std::uint64_t salt = 0;
    while (auto m = stream.next()) {
        ++rep.modules;
        ++salt;
        switch (target) {
        case HuntTarget::CutCharacterization: {
            CutEquivalenceOptions opts;
            opts.require_valid_norms = weaken == Weakening::None;
            for (const auto& a : probe_sets(*m, cfg, salt, 5)) {
                ++rep.cases;
                auto eq = verify_cut_characterization(*m, a, norms, opts);
                if (eq.report.skipped()) {
                    ++rep.skipped;
                } else if (eq.report.failed()) {
                    rep.fuzzy = a;
                    if (eq.threshold) {
                        rep.subset = eq.cut;
                    }
                    record(*m, eq.report);
                    return rep;
                }
            }
            break;
        }
        case HuntTarget::QuotientTransfer: {
            QuotientTransferOptions opts;
            opts.override_core = weaken != Weakening::NoCoreOverride;
            for (const auto& a : probe_sets(*m, cfg, salt, 5)) {
                ++rep.cases;
                auto r = verify_quotient_transfer(*m, a, norms, opts);
                if (r.skipped()) {
                    ++rep.skipped;
                } else if (r.failed()) {
                    rep.fuzzy = a;
                    record(*m, std::move(r));
                    return rep;
                }
            }
            break;
        }
        case HuntTarget::PreimageSubmodule:
        case HuntTarget::HomomorphicTransfer: {
            const auto source_sets = target == HuntTarget::HomomorphicTransfer ? probe_sets(*m, cfg, salt, 3)
                                                                                 : std::vector<Ivifs>{};
            for (const auto& t : map_targets(*m, cfg, salt)) {
                const auto target_subs = target == HuntTarget::PreimageSubmodule ? hv_submodules(t) : std::vector<Subset>{};
                const auto target_sets = target == HuntTarget::HomomorphicTransfer ? probe_sets(t, cfg, salt + 7, 3)
                                                                                   : std::vector<Ivifs>{};
                for (const auto& mapping : enumerate_maps(m->carrier.size(), t.carrier.size())) {
                    const auto f = ModuleMap::make(*m, t, mapping);
                    if (!admitted(classify_map(f).cls, weaken)) {
                        continue;
                    }
                    auto found = [&](CheckReport r, std::optional<Ivifs> a, std::optional<Subset> n) {
                        rep.target_module = t;
                        rep.map = mapping;
                        rep.fuzzy = std::move(a);
                        rep.subset = n;
                        record(*m, std::move(r));
                    };
                    if (target == HuntTarget::PreimageSubmodule) {
                        if (!f.surjective()) {
                            continue;
                        }
                        for (Subset n : target_subs) {
                            ++rep.cases;
                            // Under the weakening the strongness precondition is dropped.
                            auto r = weaken == Weakening::None ? verify_preimage_submodule(f, n)
                                                               : check_hv_submodule(*m, f.preimage(n));
                            if (r.skipped()) {
                                ++rep.skipped;
                            } else if (r.failed()) {
                                found(std::move(r), std::nullopt, n);
                                return rep;
                            }
                        }
                        continue;
                    }
                    TransferOptions opts;
                    opts.require_strong = weaken == Weakening::None;
                    for (const auto& a : source_sets) {
                        ++rep.cases;
                        auto r = verify_image_transfer(f, a, norms, opts);
                        if (r.skipped()) {
                            ++rep.skipped;
                        } else if (r.failed()) {
                            found(std::move(r), a, std::nullopt);
                            return rep;
                        }
                    }
                    for (const auto& b : target_sets) {
                        ++rep.cases;
                        auto r = verify_preimage_transfer(f, b, norms, opts);
                        if (r.skipped()) {
                            ++rep.skipped;
                        } else if (r.failed()) {
                            found(std::move(r), b, std::nullopt);
                            return rep;
                        }
                    }
                }
            }
            break;
        }
        }
    }
    return rep;
}

} // namespace hvlab
