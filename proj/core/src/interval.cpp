#include "hvlab/interval.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hvlab/error.hpp"

namespace hvlab {

// 64x64-bit products fit without overflow checks.
__extension__ using Wide = __int128;
__extension__ using UWide = unsigned __int128;

namespace {

std::int64_t narrow(Wide v)
{
    if (v > INT64_MAX || v < INT64_MIN) {
        throw std::overflow_error("rational component exceeds 64 bits");
    }
    return static_cast<std::int64_t>(v);
}

Rational01 reduced(Wide num, Wide den)
{
    UWide a = static_cast<UWide>(num), b = static_cast<UWide>(den);
    while (b != 0) {
        auto t = a % b;
        a = b;
        b = t;
    }
    auto common = static_cast<Wide>(a == 0 ? 1 : a);
    return Rational01::make(narrow(num / common), narrow(den / common));
}

} // namespace

Rational01 Rational01::make(std::int64_t num, std::int64_t den)
{
    if (den <= 0) {
        throw ConstructionError("rational denominator must be positive");
    }
    if (num < 0 || num > den) {
        throw ConstructionError("rational " + std::to_string(num) + "/" + std::to_string(den) + " is outside [0,1]");
    }
    Rational01 r;
    auto g = std::gcd(num, den);
    r.num_ = num / g;
    r.den_ = den / g;
    if (r.num_ == 0) {
        r.den_ = 1;
    }
    return r;
}

Rational01 Rational01::parse(std::string_view text)
{
    auto parse_int = [&](std::string_view part) {
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (part.empty() || ec != std::errc{} || ptr != part.data() + part.size()) {
            throw ConstructionError("malformed rational \"" + std::string(text) + "\"");
        }
        return v;
    };
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        // Finite decimals are exact: "0.25" is 25/100.
        const auto whole = text.substr(0, dot);
        const auto frac = text.substr(dot + 1);
        if (frac.empty() || frac.size() > 15 || frac.find_first_not_of("0123456789") != std::string_view::npos) {
            throw ConstructionError("malformed rational \"" + std::string(text) + "\"");
        }
        std::int64_t den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) {
            den *= 10;
        }
        const std::int64_t w = whole.empty() ? 0 : parse_int(whole);
        if (w < 0 || w > 1) {
            throw ConstructionError("value " + std::string(text) + " is outside [0,1]");
        }
        return make(w * den + parse_int(frac), den);
    }
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return make(parse_int(text), 1);
    }
    return make(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::string Rational01::to_string() const
{
    if (den_ == 1) {
        return std::to_string(num_);
    }
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::strong_ordering operator<=>(const Rational01& a, const Rational01& b)
{
    Wide lhs = static_cast<Wide>(a.num_) * b.den_;
    Wide rhs = static_cast<Wide>(b.num_) * a.den_;
    return lhs <=> rhs;
}

Rational01 operator*(const Rational01& a, const Rational01& b)
{
    return reduced(static_cast<Wide>(a.num_) * b.num_, static_cast<Wide>(a.den_) * b.den_);
}

std::optional<Rational01> checked_add(const Rational01& a, const Rational01& b)
{
    Wide num = static_cast<Wide>(a.num()) * b.den() + static_cast<Wide>(b.num()) * a.den();
    Wide den = static_cast<Wide>(a.den()) * b.den();
    if (num > den) {
        return std::nullopt;
    }
    return reduced(num, den);
}

Rational01 complement(const Rational01& a) { return Rational01::make(a.den() - a.num(), a.den()); }

std::string Interval::to_string() const { return "[" + lo.to_string() + "," + hi.to_string() + "]"; }

Interval make_interval(Rational01 lo, Rational01 hi)
{
    if (hi < lo) {
        throw ConstructionError("interval lower end " + lo.to_string() + " exceeds upper end " + hi.to_string());
    }
    return Interval{lo, hi};
}

Interval bottom_interval() { return Interval{Rational01::zero(), Rational01::zero()}; }
Interval top_interval() { return Interval{Rational01::one(), Rational01::one()}; }

bool interval_leq(const Interval& a, const Interval& b) { return a.lo <= b.lo && a.hi <= b.hi; }

Interval meet(const Interval& a, const Interval& b) { return Interval{std::min(a.lo, b.lo), std::min(a.hi, b.hi)}; }
Interval join(const Interval& a, const Interval& b) { return Interval{std::max(a.lo, b.lo), std::max(a.hi, b.hi)}; }

Interval inf_set(std::span<const Interval> xs)
{
    if (xs.empty()) {
        throw std::invalid_argument("inf of an empty collection of intervals");
    }
    Interval acc = xs.front();
    for (const auto& x : xs.subspan(1)) {
        acc = meet(acc, x);
    }
    return acc;
}

Interval sup_set(std::span<const Interval> xs)
{
    if (xs.empty()) {
        throw std::invalid_argument("sup of an empty collection of intervals");
    }
    Interval acc = xs.front();
    for (const auto& x : xs.subspan(1)) {
        acc = join(acc, x);
    }
    return acc;
}

Interval scale(const Rational01& k, const Interval& a) { return Interval{k * a.lo, k * a.hi}; }

// ---------------------------------------------------------------------------
// Scalar norms

ScalarNorm::ScalarNorm(NormKind kind, std::string name, Rule rule)
    : kind_(kind), name_(std::move(name)), rule_(std::move(rule))
{
}

ScalarNorm ScalarNorm::minimum()
{
    return ScalarNorm(NormKind::TNorm, "min",
                      [](const Rational01& a, const Rational01& b) -> std::optional<Rational01> { return std::min(a, b); });
}

ScalarNorm ScalarNorm::maximum()
{
    return ScalarNorm(NormKind::SNorm, "max",
                      [](const Rational01& a, const Rational01& b) -> std::optional<Rational01> { return std::max(a, b); });
}

ScalarNorm ScalarNorm::product()
{
    return ScalarNorm(NormKind::TNorm, "product",
                      [](const Rational01& a, const Rational01& b) -> std::optional<Rational01> { return a * b; });
}

ScalarNorm ScalarNorm::probabilistic_sum()
{
    return ScalarNorm(NormKind::SNorm, "probabilistic-sum",
                      [](const Rational01& a, const Rational01& b) -> std::optional<Rational01> {
                          // a + b - ab = 1 - (1-a)(1-b)
                          return complement(complement(a) * complement(b));
                      });
}

ScalarNorm ScalarNorm::from_table(NormKind kind, std::string name, std::vector<Rational01> values,
                                  std::vector<std::vector<Rational01>> table)
{
    if (table.size() != values.size()) {
        throw ConstructionError("norm table has " + std::to_string(table.size()) + " rows for " +
                                std::to_string(values.size()) + " values");
    }
    std::map<Rational01, std::size_t> position;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!position.emplace(values[i], i).second) {
            throw ConstructionError("norm table lists value " + values[i].to_string() + " twice");
        }
        if (table[i].size() != values.size()) {
            throw ConstructionError("norm table row " + std::to_string(i) + " has the wrong length");
        }
    }
    auto rule = [position, table](const Rational01& a, const Rational01& b) -> std::optional<Rational01> {
        auto ia = position.find(a);
        auto ib = position.find(b);
        if (ia == position.end() || ib == position.end()) {
            return std::nullopt;
        }
        return table[ia->second][ib->second];
    };
    ScalarNorm n(kind, std::move(name), std::move(rule));
    n.domain_ = std::move(values);
    n.table_ = std::move(table);
    return n;
}

NormClosure norm_closure(const ScalarNorm& n, std::span<const Rational01> values, std::size_t limit)
{
    std::set<Rational01> seen(values.begin(), values.end());
    NormClosure out;
    std::vector<Rational01> frontier(seen.begin(), seen.end());
    while (!frontier.empty()) {
        std::vector<Rational01> current(seen.begin(), seen.end());
        std::vector<Rational01> fresh;
        for (const auto& a : frontier) {
            for (const auto& b : current) {
                for (int order = 0; order < 2; ++order) {
                    std::optional<Rational01> v;
                    try {
                        v = order == 0 ? n.apply(a, b) : n.apply(b, a);
                    } catch (const std::overflow_error&) {
                        out.complete = false;
                        out.reason = "arithmetic overflow while closing under " + n.name();
                        out.values.assign(seen.begin(), seen.end());
                        return out;
                    }
                    if (!v) {
                        out.complete = false;
                        out.reason = n.name() + " is undefined at (" + a.to_string() + "," + b.to_string() + ")";
                        out.values.assign(seen.begin(), seen.end());
                        return out;
                    }
                    if (seen.insert(*v).second) {
                        fresh.push_back(*v);
                        if (seen.size() > limit) {
                            out.complete = false;
                            out.reason = "closure under " + n.name() + " exceeds " + std::to_string(limit) + " values";
                            out.values.assign(seen.begin(), seen.end());
                            return out;
                        }
                    }
                }
            }
        }
        frontier = std::move(fresh);
    }
    out.values.assign(seen.begin(), seen.end());
    return out;
}

namespace {

Witness value_witness(std::string condition, std::string detail, std::vector<std::string> sides = {})
{
    Witness w;
    w.condition = std::move(condition);
    w.detail = std::move(detail);
    w.sides = std::move(sides);
    return w;
}

std::string call(const ScalarNorm&, const Rational01& a, const Rational01& b)
{
    return "δ(" + a.to_string() + "," + b.to_string() + ")";
}

} // namespace

CheckReport validate_idempotent_norm(const ScalarNorm& n, std::span<const Rational01> values)
{
    const std::string check = std::string("idempotent-") + (n.kind() == NormKind::TNorm ? "t" : "s") + "-norm";
    std::vector<Rational01> base(values.begin(), values.end());
    base.push_back(Rational01::zero());
    base.push_back(Rational01::one());
    std::sort(base.begin(), base.end());
    base.erase(std::unique(base.begin(), base.end()), base.end());

    // Every evaluation below stays inside vs whenever the closure is complete.
    auto eval = [&](const Rational01& a, const Rational01& b) -> std::optional<Rational01> {
        try {
            return n.apply(a, b);
        } catch (const std::overflow_error&) {
            return std::nullopt;
        }
    };

    // Idempotency on the given values first, so a non-idempotent norm is
    // reported at a value the caller supplied rather than deep in the closure.
    auto closure = NormClosure{base, true, {}};
    for (int pass = 0; pass < 2; ++pass) {
        for (const auto& x : closure.values) {
            auto v = eval(x, x);
            if (v && *v != x) {
                return CheckReport::fail(check, value_witness("idempotency",
                                                              call(n, x, x) + "=" + v->to_string() + " ≠ " + x.to_string(),
                                                              {v->to_string(), x.to_string()}));
            }
        }
        if (pass == 0) {
            closure = norm_closure(n, base);
        }
    }
    const auto& vs = closure.values;

    for (const auto& x : vs) {
        auto v = eval(x, x);
        if (v && *v != x) {
            return CheckReport::fail(check, value_witness("idempotency",
                                                          call(n, x, x) + "=" + v->to_string() + " ≠ " + x.to_string(),
                                                          {v->to_string(), x.to_string()}));
        }
    }
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            auto l = eval(vs[i], vs[j]);
            auto r = eval(vs[j], vs[i]);
            if (l && r && *l != *r) {
                return CheckReport::fail(check, value_witness("commutativity",
                                                              call(n, vs[i], vs[j]) + "=" + l->to_string() + " ≠ " +
                                                                  call(n, vs[j], vs[i]) + "=" + r->to_string(),
                                                              {l->to_string(), r->to_string()}));
            }
        }
    }
    const auto zero = Rational01::zero();
    const auto one = Rational01::one();
    if (n.kind() == NormKind::TNorm) {
        for (const auto& x : vs) {
            auto v = eval(x, one);
            if (v && *v != x) {
                return CheckReport::fail(check, value_witness("boundary", call(n, x, one) + "=" + v->to_string() +
                                                                              " ≠ " + x.to_string(),
                                                              {v->to_string(), x.to_string()}));
            }
        }
    } else {
        auto top = eval(one, one);
        if (top && *top != one) {
            return CheckReport::fail(check, value_witness("boundary", call(n, one, one) + "=" + top->to_string() + " ≠ 1",
                                                          {top->to_string(), "1"}));
        }
        for (const auto& x : vs) {
            auto v = eval(x, zero);
            if (v && *v != x) {
                return CheckReport::fail(check, value_witness("boundary", call(n, x, zero) + "=" + v->to_string() +
                                                                              " ≠ " + x.to_string(),
                                                              {v->to_string(), x.to_string()}));
            }
        }
    }
    // Monotone in the second argument; the first follows by commutativity,
    // but both are scanned.
    for (const auto& x : vs) {
        for (std::size_t u = 0; u < vs.size(); ++u) {
            for (std::size_t w = u + 1; w < vs.size(); ++w) {
                for (int side = 0; side < 2; ++side) {
                    auto lo = side == 0 ? eval(x, vs[u]) : eval(vs[u], x);
                    auto hi = side == 0 ? eval(x, vs[w]) : eval(vs[w], x);
                    if (lo && hi && *hi < *lo) {
                        std::string lhs = side == 0 ? call(n, x, vs[u]) : call(n, vs[u], x);
                        std::string rhs = side == 0 ? call(n, x, vs[w]) : call(n, vs[w], x);
                        return CheckReport::fail(
                            check, value_witness("monotonicity",
                                                 lhs + "=" + lo->to_string() + " > " + rhs + "=" + hi->to_string(),
                                                 {lo->to_string(), hi->to_string()}));
                    }
                }
            }
        }
    }
    for (const auto& x : vs) {
        for (const auto& y : vs) {
            for (const auto& z : vs) {
                auto xy = eval(x, y);
                auto yz = eval(y, z);
                if (!xy || !yz) {
                    continue;
                }
                auto l = eval(*xy, z);
                auto r = eval(x, *yz);
                if (l && r && *l != *r) {
                    return CheckReport::fail(
                        check, value_witness("associativity",
                                             "δ(δ(" + x.to_string() + "," + y.to_string() + ")," + z.to_string() + ")=" +
                                                 l->to_string() + " ≠ δ(" + x.to_string() + ",δ(" + y.to_string() + "," +
                                                 z.to_string() + "))=" + r->to_string(),
                                             {l->to_string(), r->to_string()}));
                }
            }
        }
    }
    if (!closure.complete) {
        return CheckReport::fail(check, value_witness("closure", closure.reason));
    }
    auto report = CheckReport::pass(check);
    report.note = "validated on " + std::to_string(vs.size()) + " values";
    return report;
}

Interval IntervalNorm::operator()(const Interval& a, const Interval& b) const
{
    auto lo = base_.apply(a.lo, b.lo);
    auto hi = base_.apply(a.hi, b.hi);
    if (!lo || !hi) {
        throw ConstructionError("norm " + base_.name() + " is undefined at " + a.to_string() + ", " + b.to_string());
    }
    // Monotone norms keep lo <= hi; an unvalidated table might not.
    return make_interval(*lo, *hi);
}

IntervalNorm lift_norm(ScalarNorm n) { return IntervalNorm(std::move(n)); }

IntervalNormPair IntervalNormPair::min_max()
{
    return IntervalNormPair{lift_norm(ScalarNorm::minimum()), lift_norm(ScalarNorm::maximum())};
}

CheckReport validate_norm_pair(const IntervalNormPair& norms, std::span<const Rational01> values)
{
    CheckReport report = CheckReport::pass("norm-pair");
    auto t = validate_idempotent_norm(norms.t.base(), values);
    auto s = validate_idempotent_norm(norms.s.base(), values);
    if (norms.t.base().kind() != NormKind::TNorm || norms.s.base().kind() != NormKind::SNorm) {
        report.verdict = Verdict::Fail;
        report.witness = value_witness("kind", "norm pair must be a t-norm followed by an s-norm");
    } else if (t.failed()) {
        report.verdict = Verdict::Fail;
        report.witness = t.witness;
    } else if (s.failed()) {
        report.verdict = Verdict::Fail;
        report.witness = s.witness;
    }
    report.children = {std::move(t), std::move(s)};
    return report;
}

} // namespace hvlab
