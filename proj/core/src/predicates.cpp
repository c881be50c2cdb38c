#include "hvlab/predicates.hpp"

#include <algorithm>
#include <unordered_map>

namespace hvlab {

namespace {

WitnessElement mod(std::string role, std::size_t i) { return WitnessElement{std::move(role), Domain::Module, i}; }
WitnessElement ring(std::string role, std::size_t i) { return WitnessElement{std::move(role), Domain::Ring, i}; }

Interval inf_over(const IVFuzzySet& f, Subset s)
{
    std::optional<Interval> acc;
    s.for_each([&](std::size_t i) { acc = acc ? meet(*acc, f[i]) : f[i]; });
    return *acc;
}

Interval sup_over(const IVFuzzySet& f, Subset s)
{
    std::optional<Interval> acc;
    s.for_each([&](std::size_t i) { acc = acc ? join(*acc, f[i]) : f[i]; });
    return *acc;
}

Rational01 scalar_inf(std::span<const Rational01> mu, Subset s)
{
    std::optional<Rational01> acc;
    s.for_each([&](std::size_t i) { acc = acc ? std::min(*acc, mu[i]) : mu[i]; });
    return *acc;
}

} // namespace

CheckReport check_fuzzy_hv_submodule(const HvModule& m, std::span<const Rational01> mu)
{
    const std::string check = "fuzzy-hv-submodule";
    const auto n = m.carrier.size();
    if (mu.size() != n) {
        return CheckReport::fail(check, Witness{"shape", {}, {}, "fuzzy set does not cover the carrier"});
    }
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            const auto lhs = std::min(mu[x], mu[y]);
            const auto rhs = scalar_inf(mu, m.add(x, y));
            if (rhs < lhs) {
                return CheckReport::fail(check, Witness{"i", {mod("x", x), mod("y", y)}, {lhs.to_string(), rhs.to_string()},
                                                        "min{μ(x),μ(y)} > inf μ(x+y)"});
            }
        }
    }
    for (int side = 0; side < 2; ++side) {
        for (std::size_t x = 0; x < n; ++x) {
            for (std::size_t a = 0; a < n; ++a) {
                const auto need = std::min(mu[a], mu[x]);
                bool found = false;
                for (std::size_t y = 0; y < n && !found; ++y) {
                    const Subset sum = side == 0 ? m.add(a, y) : m.add(y, a);
                    found = sum.contains(x) && need <= mu[y];
                }
                if (!found) {
                    return CheckReport::fail(check, Witness{side == 0 ? "ii" : "iii", {mod("x", x), mod("a", a)},
                                                            {need.to_string()},
                                                            side == 0 ? "no y with x ∈ a+y and μ(y) ≥ min{μ(a),μ(x)}"
                                                                      : "no z with x ∈ z+a and μ(z) ≥ min{μ(a),μ(x)}"});
                }
            }
        }
    }
    for (std::size_t r = 0; r < m.ring.carrier.size(); ++r) {
        for (std::size_t x = 0; x < n; ++x) {
            const auto rhs = scalar_inf(mu, m.action(r, x));
            if (rhs < mu[x]) {
                return CheckReport::fail(check, Witness{"iv", {ring("r", r), mod("x", x)},
                                                        {mu[x].to_string(), rhs.to_string()}, "μ(x) > inf μ(r·x)"});
            }
        }
    }
    return CheckReport::pass(check);
}

CheckReport check_st_hv_submodule(const HvModule& m, const Ivifs& a, const IntervalNormPair& norms,
                                  Witnessing witnessing)
{
    const std::string check = "st-hv-submodule";
    const auto n = m.carrier.size();
    if (a.size() != n || a.nonmembership.size() != n) {
        return CheckReport::fail(check, Witness{"shape", {}, {}, "fuzzy set does not cover the carrier"});
    }
    const auto& M = a.membership;
    const auto& N = a.nonmembership;

    // C1
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            const Subset sum = m.add(x, y);
            const auto t = norms.t(M[x], M[y]);
            const auto inf = inf_over(M, sum);
            if (!interval_leq(t, inf)) {
                return CheckReport::fail(check, Witness{"C1.M", {mod("x", x), mod("y", y)}, {t.to_string(), inf.to_string()},
                                                        "T(M(x),M(y)) ≰ inf M(x+y)"});
            }
            const auto s = norms.s(N[x], N[y]);
            const auto sup = sup_over(N, sum);
            if (!interval_leq(sup, s)) {
                return CheckReport::fail(check, Witness{"C1.N", {mod("x", x), mod("y", y)}, {s.to_string(), sup.to_string()},
                                                        "S(N(x),N(y)) ≱ sup N(x+y)"});
            }
        }
    }
    // C2 (y on the right: x ∈ a+y) and C3 (z on the left: x ∈ z+a).
    for (int side = 0; side < 2; ++side) {
        const std::string name = side == 0 ? "C2" : "C3";
        for (std::size_t x = 0; x < n; ++x) {
            for (std::size_t b = 0; b < n; ++b) {
                const auto t = norms.t(M[x], M[b]);
                const auto s = norms.s(N[x], N[b]);
                bool any_m = false;
                bool any_n = false;
                bool any_both = false;
                for (std::size_t y = 0; y < n; ++y) {
                    const Subset sum = side == 0 ? m.add(b, y) : m.add(y, b);
                    if (!sum.contains(x)) {
                        continue;
                    }
                    const bool ok_m = interval_leq(t, M[y]);
                    const bool ok_n = interval_leq(N[y], s);
                    any_m = any_m || ok_m;
                    any_n = any_n || ok_n;
                    any_both = any_both || (ok_m && ok_n);
                }
                std::string failed;
                if (!any_m) {
                    failed = ".M";
                } else if (!any_n) {
                    failed = ".N";
                } else if (witnessing == Witnessing::Strict && !any_both) {
                    failed = ".MN";
                }
                if (!failed.empty()) {
                    return CheckReport::fail(
                        check, Witness{name + failed, {mod("x", x), mod("a", b)}, {t.to_string(), s.to_string()},
                                       side == 0 ? "no y with x ∈ a+y meeting T(M(x),M(a)) ≤ M(y), S(N(x),N(a)) ≥ N(y)"
                                                 : "no z with x ∈ z+a meeting T(M(x),M(a)) ≤ M(z), S(N(x),N(a)) ≥ N(z)"});
                }
            }
        }
    }
    // C4
    for (std::size_t r = 0; r < m.ring.carrier.size(); ++r) {
        for (std::size_t x = 0; x < n; ++x) {
            const Subset rx = m.action(r, x);
            const auto inf = inf_over(M, rx);
            if (!interval_leq(M[x], inf)) {
                return CheckReport::fail(check, Witness{"C4.M", {ring("r", r), mod("x", x)},
                                                        {M[x].to_string(), inf.to_string()}, "M(x) ≰ inf M(r·x)"});
            }
            const auto sup = sup_over(N, rx);
            if (!interval_leq(sup, N[x])) {
                return CheckReport::fail(check, Witness{"C4.N", {ring("r", r), mod("x", x)},
                                                        {N[x].to_string(), sup.to_string()}, "N(x) ≱ sup N(r·x)"});
            }
        }
    }
    return CheckReport::pass(check);
}

CheckReport check_st_submodule_ordinary(const OrdinaryModule& m, const Ivifs& a, const IntervalNormPair& norms)
{
    const std::string check = "st-submodule";
    const auto n = m.carrier.size();
    if (a.size() != n || a.nonmembership.size() != n) {
        return CheckReport::fail(check, Witness{"shape", {}, {}, "fuzzy set does not cover the carrier"});
    }
    const auto& M = a.membership;
    const auto& N = a.nonmembership;
    if (M[m.zero] != top_interval()) {
        return CheckReport::fail(check, Witness{"i.M", {mod("zero", m.zero)}, {M[m.zero].to_string(), "[1,1]"},
                                                "M(0) ≠ [1,1]"});
    }
    if (N[m.zero] != bottom_interval()) {
        return CheckReport::fail(check, Witness{"i.N", {mod("zero", m.zero)}, {N[m.zero].to_string(), "[0,0]"},
                                                "N(0) ≠ [0,0]"});
    }
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            const auto d = m.difference(x, y);
            const auto t = norms.t(M[x], M[y]);
            if (!interval_leq(t, M[d])) {
                return CheckReport::fail(check, Witness{"ii.M", {mod("x", x), mod("y", y)}, {t.to_string(), M[d].to_string()},
                                                        "T(M(x),M(y)) ≰ M(x-y)"});
            }
            const auto s = norms.s(N[x], N[y]);
            if (!interval_leq(N[d], s)) {
                return CheckReport::fail(check, Witness{"ii.N", {mod("x", x), mod("y", y)}, {s.to_string(), N[d].to_string()},
                                                        "S(N(x),N(y)) ≱ N(x-y)"});
            }
        }
    }
    for (std::size_t r = 0; r < m.ring.carrier.size(); ++r) {
        for (std::size_t x = 0; x < n; ++x) {
            const auto rx = m.act(r, x);
            if (!interval_leq(M[x], M[rx])) {
                return CheckReport::fail(check, Witness{"iii.M", {ring("r", r), mod("x", x)},
                                                        {M[x].to_string(), M[rx].to_string()}, "M(x) ≰ M(r·x)"});
            }
            if (!interval_leq(N[rx], N[x])) {
                return CheckReport::fail(check, Witness{"iii.N", {ring("r", r), mod("x", x)},
                                                        {N[x].to_string(), N[rx].to_string()}, "N(x) ≱ N(r·x)"});
            }
        }
    }
    return CheckReport::pass(check);
}

CutEquivalence verify_cut_characterization(const HvModule& m, const Ivifs& a, const IntervalNormPair& norms,
                                           CutEquivalenceOptions options)
{
    CutEquivalence out;
    const std::string check = "cut-characterization";
    if (auto valid = validate_ivifs(a); !valid.passed()) {
        out.report = CheckReport::skip(check, "fuzzy set is not a valid IVIFS: " + valid.witness->detail);
        return out;
    }
    if (options.require_valid_norms) {
        const auto values = attained_endpoints(a);
        if (auto v = validate_norm_pair(norms, values); !v.passed()) {
            out.report = CheckReport::skip(check, "norms fail validation: " + v.witness->detail);
            return out;
        }
    }

    out.predicate_report = check_st_hv_submodule(m, a, norms, options.witnessing);
    out.predicate = out.predicate_report.passed();

    std::unordered_map<Subset, bool> memo;
    auto submodule = [&](Subset s) {
        auto [it, inserted] = memo.try_emplace(s, false);
        if (inserted) {
            it->second = is_hv_submodule(m, s);
        }
        return it->second;
    };
    out.cuts = true;
    for (const auto& th : attained_thresholds(a)) {
        const Subset upper = upper_cut(a.membership, th);
        if (!upper.empty() && !submodule(upper)) {
            out.cuts = false;
            out.threshold = th;
            out.cut_kind = "upper";
            out.cut = upper;
            break;
        }
        const Subset lower = lower_cut(a.nonmembership, th);
        if (!lower.empty() && !submodule(lower)) {
            out.cuts = false;
            out.threshold = th;
            out.cut_kind = "lower";
            out.cut = lower;
            break;
        }
    }
    if (!out.cuts) {
        out.cut_report = check_hv_submodule(m, out.cut);
    }

    if (out.predicate == out.cuts) {
        out.report = CheckReport::pass(check);
    } else if (out.predicate) {
        Witness w = *out.cut_report.witness;
        w.detail = out.cut_kind + " cut at " + out.threshold->as_interval().to_string() + " = " +
                   m.carrier.format(out.cut) + " is not an H_v-submodule (" + w.condition + ")";
        w.condition = "cuts";
        out.report = CheckReport::fail(check, std::move(w));
    } else {
        Witness w = *out.predicate_report.witness;
        w.detail = "predicate fails (" + w.condition + ") while every nonempty cut is an H_v-submodule";
        out.report = CheckReport::fail(check, std::move(w));
    }
    out.report.flags["predicate"] = out.predicate;
    out.report.flags["cuts"] = out.cuts;
    out.report.flags["equivalent"] = out.predicate == out.cuts;
    return out;
}

std::vector<LevelCut> level_cuts(const HvModule& m, const Ivifs& a)
{
    std::vector<LevelCut> out;
    std::unordered_map<Subset, bool> memo;
    auto submodule = [&](Subset s) {
        if (s.empty()) {
            return false;
        }
        auto [it, inserted] = memo.try_emplace(s, false);
        if (inserted) {
            it->second = is_hv_submodule(m, s);
        }
        return it->second;
    };
    for (const auto& th : attained_thresholds(a)) {
        LevelCut c{th, upper_cut(a.membership, th), lower_cut(a.nonmembership, th), false, false};
        c.upper_submodule = submodule(c.upper);
        c.lower_submodule = submodule(c.lower);
        out.push_back(c);
    }
    return out;
}

} // namespace hvlab
