#include "hvlab/fuzzy.hpp"

#include <algorithm>
#include <set>

#include "hvlab/error.hpp"

namespace hvlab {

Ivifs Ivifs::constant(std::size_t n, Interval m, Interval nm)
{
    return Ivifs{IVFuzzySet(n, m), IVFuzzySet(n, nm)};
}

Threshold Threshold::make(Rational01 t, Rational01 s)
{
    if (s < t) {
        throw ConstructionError("threshold [" + t.to_string() + "," + s.to_string() + "] has t > s");
    }
    return Threshold{t, s};
}

CheckReport validate_ivifs(const Ivifs& a)
{
    const std::string check = "ivifs";
    if (a.membership.size() != a.nonmembership.size()) {
        return CheckReport::fail(check, Witness{"shape", {}, {}, "membership and non-membership differ in length"});
    }
    for (std::size_t x = 0; x < a.size(); ++x) {
        const auto& m = a.membership[x];
        const auto& n = a.nonmembership[x];
        if (m.hi < m.lo || n.hi < n.lo) {
            return CheckReport::fail(check, Witness{"interval", {WitnessElement{"x", Domain::Module, x}}, {},
                                                    "lower end exceeds upper end"});
        }
        if (!checked_add(m.hi, n.hi)) {
            return CheckReport::fail(check, Witness{"atanassov",
                                                    {WitnessElement{"x", Domain::Module, x}},
                                                    {m.hi.to_string(), n.hi.to_string()},
                                                    "sup M(x) + sup N(x) = " + m.hi.to_string() + " + " +
                                                        n.hi.to_string() + " > 1"});
        }
    }
    return CheckReport::pass(check);
}

Subset upper_cut(std::span<const Interval> f, const Threshold& th)
{
    Subset out;
    for (std::size_t x = 0; x < f.size(); ++x) {
        if (interval_leq(th.as_interval(), f[x])) {
            out.insert(x);
        }
    }
    return out;
}

Subset lower_cut(std::span<const Interval> f, const Threshold& th)
{
    Subset out;
    for (std::size_t x = 0; x < f.size(); ++x) {
        if (interval_leq(f[x], th.as_interval())) {
            out.insert(x);
        }
    }
    return out;
}

std::vector<Rational01> attained_endpoints(const Ivifs& a)
{
    std::set<Rational01> values{Rational01::zero(), Rational01::one()};
    for (const auto* f : {&a.membership, &a.nonmembership}) {
        for (const auto& v : *f) {
            values.insert(v.lo);
            values.insert(v.hi);
        }
    }
    return {values.begin(), values.end()};
}

std::vector<Threshold> attained_thresholds(const Ivifs& a)
{
    const auto values = attained_endpoints(a);
    std::vector<Threshold> out;
    out.reserve(values.size() * (values.size() + 1) / 2);
    for (std::size_t i = 0; i < values.size(); ++i) {
        for (std::size_t j = i; j < values.size(); ++j) {
            out.push_back(Threshold{values[i], values[j]});
        }
    }
    return out;
}

Ivifs image_ivifs(std::span<const std::size_t> f, const Ivifs& a, std::size_t target_size)
{
    if (f.size() != a.size()) {
        throw ConstructionError("map is not total on the fuzzy set's carrier");
    }
    std::vector<std::optional<Interval>> m(target_size), n(target_size);
    for (std::size_t x = 0; x < f.size(); ++x) {
        const auto y = f[x];
        if (y >= target_size) {
            throw ConstructionError("map sends element " + std::to_string(x) + " outside the target");
        }
        m[y] = m[y] ? join(*m[y], a.membership[x]) : a.membership[x];
        n[y] = n[y] ? meet(*n[y], a.nonmembership[x]) : a.nonmembership[x];
    }
    Ivifs out;
    out.membership.reserve(target_size);
    out.nonmembership.reserve(target_size);
    for (std::size_t y = 0; y < target_size; ++y) {
        out.membership.push_back(m[y].value_or(bottom_interval()));
        out.nonmembership.push_back(n[y].value_or(top_interval()));
    }
    return out;
}

Ivifs preimage_ivifs(std::span<const std::size_t> f, const Ivifs& b)
{
    Ivifs out;
    out.membership.reserve(f.size());
    out.nonmembership.reserve(f.size());
    for (auto y : f) {
        if (y >= b.size()) {
            throw ConstructionError("map leaves the fuzzy set's carrier");
        }
        out.membership.push_back(b.membership[y]);
        out.nonmembership.push_back(b.nonmembership[y]);
    }
    return out;
}

Subset map_image(std::span<const std::size_t> f, Subset s)
{
    Subset out;
    s.for_each([&](std::size_t x) { out.insert(f[x]); });
    return out;
}

Subset map_preimage(std::span<const std::size_t> f, Subset s)
{
    Subset out;
    for (std::size_t x = 0; x < f.size(); ++x) {
        if (s.contains(f[x])) {
            out.insert(x);
        }
    }
    return out;
}

} // namespace hvlab
