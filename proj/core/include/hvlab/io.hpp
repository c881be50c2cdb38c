#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "hvlab/fundamental.hpp"
#include "hvlab/fuzzy.hpp"
#include "hvlab/hyperstructure.hpp"
#include "hvlab/interval.hpp"
#include "hvlab/predicates.hpp"
#include "hvlab/report.hpp"

namespace hvlab {

using Json = nlohmann::ordered_json;

inline constexpr int kStructureFormatVersion = 1;

struct NamedIvifs {
    std::string name;
    Ivifs value;

    bool operator==(const NamedIvifs&) const = default;
};

/// A map from the file's module into `target` (over the same ring).
struct NamedMap {
    std::string name;
    HvModule target;
    ElementMap mapping;
    /// Fuzzy sets on the target; empty when the target is the module itself.
    std::vector<NamedIvifs> target_fuzzy;

    bool operator==(const NamedMap&) const = default;
};

/// A norm as written in a file: a built-in name or a finite table.
struct NormSpec {
    std::string name;  // "min", "max", "product", "probabilistic-sum" or "table"
    std::vector<Rational01> values;
    std::vector<std::vector<Rational01>> table;

    bool operator==(const NormSpec&) const = default;

    ScalarNorm build(NormKind kind) const;
};

struct StructureFile {
    HvModule module;
    std::vector<NamedIvifs> fuzzy;
    std::vector<NamedMap> maps;
    std::optional<std::pair<NormSpec, NormSpec>> norms;  // (t, s)

    bool operator==(const StructureFile&) const = default;

    /// Throws std::out_of_range naming the missing entry.
    const Ivifs& fuzzy_set(const std::string& name) const;
    const NamedMap& map(const std::string& name) const;

    /// min/max unless the file names other norms.
    IntervalNormPair norm_pair() const;
};

/// Parses and structurally validates a structure file: labels resolve,
/// tables are total with nonempty cells, intervals are ordered and every
/// IVIFS meets the Atanassov bound. Axioms are not checked here. Throws
/// ParseError whose where() is a JSON path such as "module.add[0][1]".
StructureFile parse_structure_file(std::string_view text);
StructureFile load_structure_file(const std::filesystem::path& path);

Json structure_to_json(const StructureFile& file);
/// format_json of structure_to_json, with a trailing newline.
std::string serialize_structure_file(const StructureFile& file);

/// Two-space indented JSON that keeps arrays without objects on one line,
/// so tables read as rows.
std::string format_json(const Json& j);

/// A file holding just `m`.
StructureFile structure_of(const HvModule& m);

/// Carriers used to label witness elements in rendered reports.
struct LabelContext {
    const Carrier* ring = nullptr;
    const Carrier* module = nullptr;
    const Carrier* target = nullptr;
};

Json report_to_json(const CheckReport& report, const LabelContext& labels = {});
/// Indented text: one line per report, witness on the following lines.
std::string render_report(const CheckReport& report, const LabelContext& labels = {}, int indent = 0);

Json interval_to_json(const Interval& v);
Json ivifs_to_json(const Carrier& carrier, const Ivifs& a);
Json subset_to_json(const Carrier& carrier, Subset s);
Json partition_to_json(const Carrier& carrier, const Partition& p);
Json quotient_to_json(const HvModule& m, const FundamentalQuotient& q);
Json cut_equivalence_to_json(const HvModule& m, const CutEquivalence& eq);

} // namespace hvlab
