#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hvlab/report.hpp"

namespace hvlab {

/// An exact rational in [0, 1], always kept in lowest terms.
class Rational01 {
public:
    constexpr Rational01() = default;

    /// Throws ConstructionError unless 0 <= num/den <= 1 and den > 0.
    static Rational01 make(std::int64_t num, std::int64_t den);

    /// Accepts "p/q", a plain integer or an exact decimal such as "0.25".
    static Rational01 parse(std::string_view text);

    static constexpr Rational01 zero() { return Rational01{}; }
    static Rational01 one() { return make(1, 1); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    std::string to_string() const;
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    friend std::strong_ordering operator<=>(const Rational01& a, const Rational01& b);
    friend bool operator==(const Rational01& a, const Rational01& b) = default;

    friend Rational01 operator*(const Rational01& a, const Rational01& b);

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

/// Sum of two values when it stays inside [0, 1].
std::optional<Rational01> checked_add(const Rational01& a, const Rational01& b);
/// 1 - a.
Rational01 complement(const Rational01& a);

/// An element [lo, hi] of D[0,1]. [a, a] stands for the scalar a.
struct Interval {
    Rational01 lo;
    Rational01 hi;

    /// Equality is componentwise; the order is the partial order interval_leq.
    bool operator==(const Interval&) const = default;

    std::string to_string() const;
};

Interval make_interval(Rational01 lo, Rational01 hi);
inline Interval degenerate(Rational01 a) { return Interval{a, a}; }
Interval bottom_interval();
Interval top_interval();

/// Componentwise order; incomparable pairs yield false both ways.
bool interval_leq(const Interval& a, const Interval& b);

/// Componentwise meet / join of a nonempty collection. Throws
/// std::invalid_argument on an empty collection.
Interval inf_set(std::span<const Interval> xs);
Interval sup_set(std::span<const Interval> xs);

Interval meet(const Interval& a, const Interval& b);
Interval join(const Interval& a, const Interval& b);

/// [k a-, k a+].
Interval scale(const Rational01& k, const Interval& a);

enum class NormKind { TNorm, SNorm };

/// A binary operation on [0,1] rationals, either a rule or a finite table.
/// A table norm is undefined (std::nullopt) outside its tabulated values.
class ScalarNorm {
public:
    using Rule = std::function<std::optional<Rational01>(const Rational01&, const Rational01&)>;

    ScalarNorm(NormKind kind, std::string name, Rule rule);

    static ScalarNorm minimum();            // idempotent t-norm
    static ScalarNorm maximum();            // idempotent s-norm
    static ScalarNorm product();            // non-idempotent t-norm
    static ScalarNorm probabilistic_sum();  // non-idempotent s-norm, a + b - ab

    /// `table[i][j]` is the value at (values[i], values[j]). Throws
    /// ConstructionError on shape mismatch or duplicate values.
    static ScalarNorm from_table(NormKind kind, std::string name, std::vector<Rational01> values,
                                 std::vector<std::vector<Rational01>> table);

    NormKind kind() const { return kind_; }
    const std::string& name() const { return name_; }

    std::optional<Rational01> apply(const Rational01& a, const Rational01& b) const { return rule_(a, b); }

    /// Tabulated domain when this norm came from a table.
    const std::optional<std::vector<Rational01>>& table_domain() const { return domain_; }
    /// Rows of the table in domain order, when tabulated.
    const std::optional<std::vector<std::vector<Rational01>>>& table() const { return table_; }

private:
    NormKind kind_;
    std::string name_;
    Rule rule_;
    std::optional<std::vector<Rational01>> domain_;
    std::optional<std::vector<std::vector<Rational01>>> table_;
};

/// Least superset of `values` closed under the norm, sorted. Stops early
/// when more than `limit` values appear or the norm is undefined somewhere;
/// `complete` reports whether the true closure was reached.
struct NormClosure {
    std::vector<Rational01> values;
    bool complete = true;
    std::string reason;
};
NormClosure norm_closure(const ScalarNorm& n, std::span<const Rational01> values, std::size_t limit = 256);

/// Exhaustive axiom check on the closure of `values` (which must contain 0
/// and 1): idempotency, commutativity, the boundary law, monotonicity and
/// associativity, reported in that order.
CheckReport validate_idempotent_norm(const ScalarNorm& n, std::span<const Rational01> values);

/// Componentwise lift of a scalar norm to D[0,1].
class IntervalNorm {
public:
    explicit IntervalNorm(ScalarNorm base) : base_(std::move(base)) {}

    /// Throws ConstructionError when the base norm is undefined at an endpoint.
    Interval operator()(const Interval& a, const Interval& b) const;

    const ScalarNorm& base() const { return base_; }

private:
    ScalarNorm base_;
};

IntervalNorm lift_norm(ScalarNorm n);

struct IntervalNormPair {
    IntervalNorm t;
    IntervalNorm s;

    static IntervalNormPair min_max();
};

/// Both scalar bases validated against `values` (plus 0 and 1).
CheckReport validate_norm_pair(const IntervalNormPair& norms, std::span<const Rational01> values);

} // namespace hvlab
