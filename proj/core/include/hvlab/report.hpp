#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hvlab {

enum class Verdict { Pass, Fail, Skip };

const char* to_string(Verdict v);

/// Which carrier an element of a witness tuple lives in.
enum class Domain { Ring, Module, Target, Value };

struct WitnessElement {
    std::string role;  // "x", "y", "r", "a", ...
    Domain domain = Domain::Module;
    std::size_t index = 0;

    bool operator==(const WitnessElement&) const = default;
};

/// The first violating tuple of a quantified condition, in lexicographic
/// order of the quantified variables.
struct Witness {
    std::string condition;
    std::vector<WitnessElement> elements;
    /// Rendered values of the two sides that were compared, when meaningful.
    std::vector<std::string> sides;
    std::string detail;

    bool operator==(const Witness&) const = default;

    /// Index of the element with the given role; throws std::out_of_range.
    std::size_t at(const std::string& role) const;
};

struct CheckReport {
    std::string check;
    Verdict verdict = Verdict::Pass;
    std::optional<Witness> witness;
    std::string note;
    std::map<std::string, bool> flags;
    std::vector<CheckReport> children;

    bool passed() const { return verdict == Verdict::Pass; }
    bool failed() const { return verdict == Verdict::Fail; }
    bool skipped() const { return verdict == Verdict::Skip; }

    static CheckReport pass(std::string check) { return CheckReport{std::move(check), Verdict::Pass, {}, {}, {}, {}}; }
    static CheckReport fail(std::string check, Witness w)
    {
        return CheckReport{std::move(check), Verdict::Fail, std::move(w), {}, {}, {}};
    }
    static CheckReport skip(std::string check, std::string why)
    {
        return CheckReport{std::move(check), Verdict::Skip, {}, std::move(why), {}, {}};
    }
};

} // namespace hvlab
