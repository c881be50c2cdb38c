#include "hvlab/fundamental.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "hvlab/error.hpp"

namespace hvlab {

DisjointSets::DisjointSets(std::size_t n) : parent_(n), size_(n, 1) { std::iota(parent_.begin(), parent_.end(), 0); }

std::size_t DisjointSets::find(std::size_t x)
{
    std::size_t root = x;
    while (parent_[root] != root) {
        root = parent_[root];
    }
    while (parent_[x] != root) {
        x = std::exchange(parent_[x], root);
    }
    return root;
}

bool DisjointSets::unite(std::size_t x, std::size_t y)
{
    x = find(x);
    y = find(y);
    if (x == y) {
        return false;
    }
    if (size_[x] < size_[y]) {
        std::swap(x, y);
    }
    parent_[y] = x;
    size_[x] += size_[y];
    return true;
}

namespace {

// Set family with insertion-ordered storage for the worklist.
class Family {
public:
    bool insert(Subset s)
    {
        if (!seen_.insert(s).second) {
            return false;
        }
        items_.push_back(s);
        return true;
    }
    const std::vector<Subset>& items() const { return items_; }

    std::vector<Subset> sorted() const
    {
        auto out = items_;
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    std::unordered_set<Subset> seen_;
    std::vector<Subset> items_;
};

Family singletons(std::size_t n)
{
    Family f;
    for (std::size_t i = 0; i < n; ++i) {
        f.insert(Subset::singleton(i));
    }
    return f;
}

Family close_ring(const HvRing& r, ClosureStats* stats)
{
    Family fam = singletons(r.carrier.size());
    std::vector<Subset> frontier = fam.items();
    std::size_t rounds = 0;
    std::size_t combos = 0;
    while (!frontier.empty()) {
        ++rounds;
        std::vector<Subset> next;
        for (Subset s : frontier) {
            // items() grows while we iterate; index access keeps it valid.
            for (std::size_t i = 0; i < fam.items().size(); ++i) {
                const Subset t = fam.items()[i];
                for (Subset v : {r.add.apply(s, t), r.add.apply(t, s), r.mul.apply(s, t), r.mul.apply(t, s)}) {
                    ++combos;
                    if (fam.insert(v)) {
                        next.push_back(v);
                    }
                }
            }
        }
        frontier = std::move(next);
    }
    if (stats != nullptr) {
        stats->ring_rounds = rounds;
        stats->combinations += combos;
    }
    return fam;
}

} // namespace

std::vector<Subset> achievable_ring_sets(const HvRing& r, ClosureStats* stats)
{
    return close_ring(r, stats).sorted();
}

ExpressionFamily achievable_sets(const HvModule& m, ClosureStats* stats)
{
    check_shapes(m);
    const Family ring = close_ring(m.ring, stats);
    Family fam = singletons(m.carrier.size());
    std::vector<Subset> frontier = fam.items();
    std::size_t rounds = 0;
    std::size_t combos = 0;
    while (!frontier.empty()) {
        ++rounds;
        std::vector<Subset> next;
        auto add = [&](Subset v) {
            ++combos;
            if (fam.insert(v)) {
                next.push_back(v);
            }
        };
        for (Subset a : frontier) {
            for (std::size_t i = 0; i < fam.items().size(); ++i) {
                const Subset b = fam.items()[i];
                add(m.add.apply(a, b));
                add(m.add.apply(b, a));
            }
            for (Subset s : ring.items()) {
                add(m.action.apply(s, a));
            }
        }
        frontier = std::move(next);
    }
    if (stats != nullptr) {
        stats->module_rounds = rounds;
        stats->combinations += combos;
    }
    return ExpressionFamily{ring.sorted(), fam.sorted()};
}

Partition Partition::from_sets(std::size_t n, const std::vector<Subset>& sets)
{
    DisjointSets uf(n);
    for (Subset s : sets) {
        if (s.empty()) {
            continue;
        }
        const std::size_t first = s.lowest();
        s.for_each([&](std::size_t x) { uf.unite(first, x); });
    }
    Partition p;
    p.class_of.assign(n, n);
    std::vector<std::size_t> root_class(n, n);
    for (std::size_t x = 0; x < n; ++x) {
        const auto root = uf.find(x);
        if (root_class[root] == n) {
            root_class[root] = p.classes.size();
            p.classes.emplace_back();
        }
        p.class_of[x] = root_class[root];
        p.classes[root_class[root]].insert(x);
    }
    return p;
}

Partition epsilon_star(const HvModule& m, const ExpressionFamily& fam)
{
    return Partition::from_sets(m.carrier.size(), fam.module_sets);
}

namespace {

// Single-valued class operation induced by a hyperoperation on classes.
// Throws ConsistencyError when some class product straddles two classes.
template <class Apply>
std::vector<std::size_t> induced_table(const Partition& left, const Partition& right, const Partition& result,
                                       const Carrier& result_carrier, const std::string& what, Apply apply)
{
    std::vector<std::size_t> table(left.size() * right.size());
    for (std::size_t i = 0; i < left.size(); ++i) {
        for (std::size_t j = 0; j < right.size(); ++j) {
            const Subset values = apply(left.classes[i], right.classes[j]);
            const std::size_t c = result.class_of[values.lowest()];
            values.for_each([&](std::size_t v) {
                if (result.class_of[v] != c) {
                    throw ConsistencyError(what + " is not single-valued: classes " +
                                           result_carrier.format(result.classes[c]) + " and " +
                                           result_carrier.format(result.classes[result.class_of[v]]) +
                                           " both arise from " + std::to_string(i) + "," + std::to_string(j));
                }
            });
            table[i * right.size() + j] = c;
        }
    }
    return table;
}

Carrier class_carrier(const Carrier& base, const Partition& p)
{
    std::vector<std::string> labels;
    labels.reserve(p.size());
    for (Subset c : p.classes) {
        labels.push_back(base.format(c));
    }
    return Carrier(std::move(labels));
}

OrdinaryRing quotient_ring(const HvRing& r, const Partition& p)
{
    const auto add = induced_table(p, p, p, r.carrier, "quotient ring addition",
                                   [&](Subset a, Subset b) { return r.add.apply(a, b); });
    const auto mul = induced_table(p, p, p, r.carrier, "quotient ring multiplication",
                                   [&](Subset a, Subset b) { return r.mul.apply(a, b); });
    try {
        return OrdinaryRing::make(class_carrier(r.carrier, p), add, mul);
    } catch (const ConstructionError& e) {
        throw ConsistencyError(std::string("fundamental ring quotient is not a ring: ") + e.what());
    }
}

} // namespace

Partition gamma_star(const HvRing& r)
{
    auto p = Partition::from_sets(r.carrier.size(), achievable_ring_sets(r));
    (void)quotient_ring(r, p);
    return p;
}

FundamentalQuotient build_fundamental_quotient(const HvModule& m)
{
    const auto fam = achievable_sets(m);
    FundamentalQuotient q;
    q.ring_partition = Partition::from_sets(m.ring.carrier.size(), fam.ring_sets);
    q.module_partition = epsilon_star(m, fam);
    auto ring = quotient_ring(m.ring, q.ring_partition);

    const auto& mp = q.module_partition;
    const auto add = induced_table(mp, mp, mp, m.carrier, "quotient sum",
                                   [&](Subset a, Subset b) { return m.add.apply(a, b); });
    const auto action = induced_table(q.ring_partition, mp, mp, m.carrier, "quotient external product",
                                      [&](Subset rs, Subset xs) { return m.action.apply(rs, xs); });
    try {
        q.module = OrdinaryModule::make(std::move(ring), class_carrier(m.carrier, mp), add, action);
    } catch (const ConstructionError& e) {
        throw ConsistencyError(std::string("fundamental quotient is not a module: ") + e.what());
    }
    q.core = q.module.zero;

    if (m.zero && mp.class_of[*m.zero] != q.core) {
        throw ConsistencyError("core " + q.module.carrier.label(q.core) + " differs from the class of the zero " +
                               q.module.carrier.label(mp.class_of[*m.zero]));
    }
    if (m.zero && m.add.single_valued()) {
        for (std::size_t x = 0; x < m.carrier.size(); ++x) {
            for (std::size_t y = 0; y < m.carrier.size(); ++y) {
                if (m.add(x, y) == Subset::singleton(*m.zero) &&
                    mp.class_of[y] != q.module.neg[mp.class_of[x]]) {
                    throw ConsistencyError("class of -" + m.carrier.label(x) + " is not the negated class");
                }
            }
        }
    }
    return q;
}

Ivifs quotient_ivifs(const Ivifs& a, const FundamentalQuotient& q, bool override_core)
{
    Ivifs out;
    for (std::size_t c = 0; c < q.module_partition.size(); ++c) {
        std::vector<Interval> ms, ns;
        q.module_partition.classes[c].for_each([&](std::size_t x) {
            ms.push_back(a.membership[x]);
            ns.push_back(a.nonmembership[x]);
        });
        if (override_core && c == q.core) {
            out.membership.push_back(top_interval());
            out.nonmembership.push_back(bottom_interval());
        } else {
            out.membership.push_back(sup_set(ms));
            out.nonmembership.push_back(inf_set(ns));
        }
    }
    return out;
}

CheckReport verify_quotient_transfer(const HvModule& m, const Ivifs& a, const IntervalNormPair& norms,
                                     QuotientTransferOptions options)
{
    const std::string check = "quotient-transfer";
    if (auto v = validate_ivifs(a); !v.passed()) {
        return CheckReport::skip(check, "fuzzy set is not a valid IVIFS");
    }
    if (!check_st_hv_submodule(m, a, norms, options.witnessing).passed()) {
        return CheckReport::skip(check, "fuzzy set does not satisfy the predicate");
    }
    FundamentalQuotient q;
    try {
        q = build_fundamental_quotient(m);
    } catch (const ConsistencyError& e) {
        return CheckReport::fail(check, Witness{"quotient", {}, {}, e.what()});
    }
    const Ivifs induced = quotient_ivifs(a, q, options.override_core);
    auto result = check_st_submodule_ordinary(q.module, induced, norms);
    if (result.passed()) {
        auto out = CheckReport::pass(check);
        out.note = std::to_string(q.module_partition.size()) + " module classes over " +
                   std::to_string(q.ring_partition.size()) + " ring classes";
        return out;
    }
    Witness w = *result.witness;
    std::string classes;
    for (auto& e : w.elements) {
        if (e.domain == Domain::Module) {
            classes += " " + e.role + "=" + q.module.carrier.label(e.index);
        } else if (e.domain == Domain::Ring) {
            classes += " " + e.role + "=" + q.module.ring.carrier.label(e.index);
        }
        // Quotient classes are not elements of m; mark them as such.
        e.domain = e.domain == Domain::Ring ? Domain::Ring : Domain::Target;
    }
    w.detail = "induced fuzzy set on the quotient fails " + w.condition + " at" + classes + ": " + w.detail;
    auto out = CheckReport::fail(check, std::move(w));
    out.children.push_back(std::move(result));
    return out;
}

Projection canonical_projection(const HvModule& m, const FundamentalQuotient& q)
{
    const auto& qm = q.module;
    const auto k = qm.carrier.size();
    const auto rn = m.ring.carrier.size();
    std::vector<std::size_t> action(rn * k);
    for (std::size_t r = 0; r < rn; ++r) {
        for (std::size_t c = 0; c < k; ++c) {
            action[r * k + c] = qm.act(q.ring_class(r), c);
        }
    }
    HvModule target{m.ring, qm.carrier, HyperOp::from_function(k, qm.add), ExternalOp::from_function(rn, k, action),
                    q.core};
    return Projection{std::move(target), q.module_partition.class_of};
}

} // namespace hvlab
