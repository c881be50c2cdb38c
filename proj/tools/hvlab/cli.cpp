#include "hvlab/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "hvlab/error.hpp"
#include "hvlab/fundamental.hpp"
#include "hvlab/generator.hpp"
#include "hvlab/homomorphism.hpp"
#include "hvlab/io.hpp"
#include "hvlab/predicates.hpp"

namespace hvlab::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string file;
    std::vector<std::string> fuzzy;
    std::string map;
    std::string submodule;
    std::string witnessing = "strict";
    bool json = false;
    bool lenient = false;
    bool no_core_override = false;

    std::string theorem;
    std::string what;
    std::string variant;
    std::string p, p1, p2;
    std::string output;

    std::uint64_t seed = 0;
    std::size_t max_m = 3;
    std::size_t max_r = 2;
    std::size_t budget = 20;
    std::string grid = "9";
    std::string mode = "random";
    std::string ivifs_target = "passing";
    std::string weaken = "none";
};

int exit_code(const std::vector<CheckReport>& reports)
{
    bool any_pass = false, any_skip = false;
    for (const auto& r : reports) {
        if (r.failed()) {
            return kExitFail;
        }
        any_pass |= r.passed();
        any_skip |= r.skipped();
    }
    return any_skip && !any_pass ? kExitSkip : kExitPass;
}

Witnessing witnessing_of(const Options& o)
{
    return o.witnessing == "independent" ? Witnessing::Independent : Witnessing::Strict;
}

std::vector<Rational01> parse_grid(const std::string& text)
{
    if (text.find_first_not_of("0123456789") == std::string::npos) {
        const auto d = std::stoll(text);
        if (d < 1 || d > 1000) {
            throw UsageError("--grid denominator must be between 1 and 1000");
        }
        return GenConfig::uniform_grid(d);
    }
    std::vector<Rational01> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        try {
            out.push_back(Rational01::parse(item));
        } catch (const ConstructionError& e) {
            throw UsageError(std::string("--grid: ") + e.what());
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

GenConfig config_of(const Options& o)
{
    GenConfig cfg;
    cfg.seed = o.seed;
    cfg.max_module_size = o.max_m;
    cfg.max_ring_size = o.max_r;
    cfg.budget = o.budget;
    cfg.mode = o.mode == "enumerate" ? GenMode::Enumerate : GenMode::Random;
    cfg.grid = parse_grid(o.grid);
    try {
        validate(cfg);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    return cfg;
}

Subset parse_labels(const Carrier& c, const std::string& text, const std::string& flag)
{
    Subset s;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        item.erase(0, item.find_first_not_of(" {"));
        item.erase(item.find_last_not_of(" }") + 1);
        if (item.empty()) {
            continue;
        }
        auto i = c.index_of(item);
        if (!i) {
            throw UsageError(flag + ": unknown label \"" + item + "\"");
        }
        s.insert(*i);
    }
    return s;
}

std::vector<NamedIvifs> selected_fuzzy(const StructureFile& f, const Options& o)
{
    if (o.fuzzy.empty()) {
        return f.fuzzy;
    }
    std::vector<NamedIvifs> out;
    for (const auto& name : o.fuzzy) {
        try {
            out.push_back({name, f.fuzzy_set(name)});
        } catch (const std::out_of_range& e) {
            throw UsageError(e.what());
        }
    }
    return out;
}

const NamedMap& selected_map(const StructureFile& f, const Options& o)
{
    if (o.map.empty()) {
        if (f.maps.size() == 1) {
            return f.maps.front();
        }
        throw UsageError(f.maps.empty() ? "the file defines no maps" : "several maps defined; choose one with --map");
    }
    try {
        return f.map(o.map);
    } catch (const std::out_of_range& e) {
        throw UsageError(e.what());
    }
}

// Tags a report with the fuzzy set or map it concerns.
CheckReport named(CheckReport r, const std::string& name)
{
    r.check += " [" + name + "]";
    return r;
}

// Collects reports and prints them in the requested mode.
class Session {
public:
    Session(std::string command, const Options& opts, std::ostream& out) : opts_(opts), out_(out)
    {
        doc_["command"] = std::move(command);
    }

    Json& doc() { return doc_; }
    bool json() const { return opts_.json; }
    std::ostream& text() { return out_; }

    void add(CheckReport r, const LabelContext& labels)
    {
        if (opts_.json) {
            doc_["reports"].push_back(report_to_json(r, labels));
        } else {
            out_ << render_report(r, labels);
        }
        reports_.push_back(std::move(r));
    }

    void add_input(const StructureFile& f) { doc_["input"] = structure_to_json(f); }

    int finish()
    {
        const int code = exit_code(reports_);
        if (opts_.json) {
            if (!doc_.contains("reports")) {
                doc_["reports"] = Json::array();
            }
            doc_["exit"] = code;
            out_ << format_json(doc_) << '\n';
        }
        return code;
    }

    int finish_with(int code)
    {
        if (opts_.json) {
            doc_["exit"] = code;
            out_ << format_json(doc_) << '\n';
        }
        return code;
    }

private:
    const Options& opts_;
    std::ostream& out_;
    Json doc_;
    std::vector<CheckReport> reports_;
};

// SKIP report when the module fails its axioms and --lenient is off.
std::optional<CheckReport> module_gate(const HvModule& m, const Options& o, const std::string& what)
{
    if (o.lenient) {
        return std::nullopt;
    }
    auto r = check_hv_module(m);
    if (r.passed()) {
        return std::nullopt;
    }
    auto skip = CheckReport::skip(what, "input is not an H_v-module (use --lenient to proceed)");
    skip.children.push_back(std::move(r));
    return skip;
}

LabelContext labels_of(const HvModule& m) { return LabelContext{&m.ring.carrier, &m.carrier, nullptr}; }

std::vector<Rational01> endpoints_of(const StructureFile& f)
{
    std::vector<Rational01> vals;
    for (const auto& nf : f.fuzzy) {
        for (const auto& v : attained_endpoints(nf.value)) {
            vals.push_back(v);
        }
    }
    return vals;
}

// ---------------------------------------------------------------------------

int cmd_check(const Options& o, std::ostream& out)
{
    const auto file = load_structure_file(o.file);
    const auto& m = file.module;
    Session s("check", o, out);
    s.add_input(file);
    const auto labels = labels_of(m);
    s.add(check_hv_module(m), labels);
    if (file.norms) {
        s.add(validate_norm_pair(file.norm_pair(), endpoints_of(file)), labels);
    }
    const auto norms = file.norm_pair();
    for (const auto& nf : selected_fuzzy(file, o)) {
        s.add(named(check_st_hv_submodule(m, nf.value, norms, witnessing_of(o)), nf.name), labels);
    }
    for (const auto& nm : file.maps) {
        if (!o.map.empty() && nm.name != o.map) {
            continue;
        }
        const auto f = ModuleMap::make(m, nm.target, nm.mapping);
        auto cls = classify_map(f);
        // Any homomorphism class passes; only non-homomorphisms fail.
        CheckReport r = cls.cls == MapClass::None ? cls.report : CheckReport::pass("map-class");
        r.note = to_string(cls.cls);
        s.add(named(std::move(r), nm.name), LabelContext{&m.ring.carrier, &m.carrier, &nm.target.carrier});
    }
    return s.finish();
}

int cmd_cuts(const Options& o, std::ostream& out)
{
    const auto file = load_structure_file(o.file);
    const auto& m = file.module;
    auto sets = selected_fuzzy(file, o);
    if (sets.size() != 1) {
        throw UsageError("cuts needs exactly one fuzzy set (--fuzzy NAME)");
    }
    const auto& a = sets.front();
    Session s("cuts", o, out);
    s.add_input(file);
    s.doc()["fuzzy"] = a.name;
    s.doc()["cuts"] = Json::array();
    bool all_ok = true;
    auto verdict = [](Subset c, bool ok) { return c.empty() ? "empty" : ok ? "submodule" : "not a submodule"; };
    for (const auto& lc : level_cuts(m, a.value)) {
        all_ok &= (lc.upper.empty() || lc.upper_submodule) && (lc.lower.empty() || lc.lower_submodule);
        if (s.json()) {
            Json j;
            j["threshold"] = interval_to_json(lc.threshold.as_interval());
            j["upper"] = subset_to_json(m.carrier, lc.upper);
            j["upper_verdict"] = verdict(lc.upper, lc.upper_submodule);
            j["lower"] = subset_to_json(m.carrier, lc.lower);
            j["lower_verdict"] = verdict(lc.lower, lc.lower_submodule);
            s.doc()["cuts"].push_back(std::move(j));
        } else {
            out << lc.threshold.as_interval().to_string() << "  U = " << m.carrier.format(lc.upper) << " ("
                << verdict(lc.upper, lc.upper_submodule) << ")  L = " << m.carrier.format(lc.lower) << " ("
                << verdict(lc.lower, lc.lower_submodule) << ")\n";
        }
    }
    return s.finish_with(all_ok ? kExitPass : kExitFail);
}

// Display width of a UTF-8 label (code points; labels are short symbols).
std::size_t display_width(const std::string& t)
{
    return static_cast<std::size_t>(
        std::count_if(t.begin(), t.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

void print_table(std::ostream& out, const std::string& title, const Carrier& rows, const Carrier& cols,
                 const Carrier& values, const std::vector<std::size_t>& table)
{
    std::size_t w = 1;
    for (const auto* c : {&rows, &cols, &values}) {
        for (const auto& l : c->labels()) {
            w = std::max(w, display_width(l));
        }
    }
    auto cell = [&](const std::string& t) { return t + std::string(w - std::min(w, display_width(t)) + 2, ' '); };
    auto emit = [&](std::string line) {
        line.erase(line.find_last_not_of(' ') + 1);
        out << line << '\n';
    };
    out << title << '\n';
    std::string header = "  " + cell("");
    for (const auto& l : cols.labels()) {
        header += cell(l);
    }
    emit(header);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::string line = "  " + cell(rows.label(i));
        for (std::size_t k = 0; k < cols.size(); ++k) {
            line += cell(values.label(table[i * cols.size() + k]));
        }
        emit(line);
    }
}

int cmd_quotient(const Options& o, std::ostream& out)
{
    const auto file = load_structure_file(o.file);
    const auto& m = file.module;
    Session s("quotient", o, out);
    s.add_input(file);
    if (auto gate = module_gate(m, o, "fundamental-quotient")) {
        s.add(std::move(*gate), labels_of(m));
        return s.finish();
    }
    FundamentalQuotient q;
    try {
        q = build_fundamental_quotient(m);
    } catch (const ConsistencyError& e) {
        s.add(CheckReport::fail("fundamental-quotient", Witness{"quotient", {}, {}, e.what()}), labels_of(m));
        return s.finish();
    }
    const bool override_core = !o.no_core_override;
    const auto& qm = q.module;
    if (s.json()) {
        s.doc()["quotient"] = quotient_to_json(m, q);
        s.doc()["fuzzy"] = Json::object();
        for (const auto& nf : selected_fuzzy(file, o)) {
            s.doc()["fuzzy"][nf.name] = ivifs_to_json(qm.carrier, quotient_ivifs(nf.value, q, override_core));
        }
    } else {
        auto classes = [&](const Carrier& c, const Partition& p) {
            std::string t;
            for (Subset cl : p.classes) {
                t += (t.empty() ? "" : " ") + c.format(cl);
            }
            return t;
        };
        out << "ε* classes: " << classes(m.carrier, q.module_partition) << '\n';
        out << "γ* classes: " << classes(m.ring.carrier, q.ring_partition) << '\n';
        print_table(out, "R/γ* ⊕", qm.ring.carrier, qm.ring.carrier, qm.ring.carrier, qm.ring.add);
        print_table(out, "R/γ* ⊙", qm.ring.carrier, qm.ring.carrier, qm.ring.carrier, qm.ring.mul);
        print_table(out, "M/ε* ⊕", qm.carrier, qm.carrier, qm.carrier, qm.add);
        print_table(out, "R/γ* ⊙ M/ε*", qm.ring.carrier, qm.carrier, qm.carrier, qm.action);
        out << "ω_M = " << qm.carrier.label(q.core) << '\n';
        for (const auto& nf : selected_fuzzy(file, o)) {
            const auto qa = quotient_ivifs(nf.value, q, override_core);
            out << nf.name << "/ε*:";
            for (std::size_t c = 0; c < qm.carrier.size(); ++c) {
                out << ' ' << qm.carrier.label(c) << " ↦ (" << qa.membership[c].to_string() << ", "
                    << qa.nonmembership[c].to_string() << ')';
            }
            out << '\n';
        }
    }
    auto ok = CheckReport::pass("fundamental-quotient");
    ok.note = std::to_string(qm.carrier.size()) + " module classes over " + std::to_string(qm.ring.carrier.size()) +
              " ring classes";
    s.add(std::move(ok), labels_of(m));
    return s.finish();
}

int verify_thm32(const StructureFile& file, const Options& o, Session& s)
{
    const auto& m = file.module;
    const auto labels = labels_of(m);
    const auto sets = selected_fuzzy(file, o);
    if (sets.empty()) {
        throw UsageError("the file defines no fuzzy sets");
    }
    CutEquivalenceOptions opts;
    opts.witnessing = witnessing_of(o);
    for (const auto& nf : sets) {
        auto eq = verify_cut_characterization(m, nf.value, file.norm_pair(), opts);
        if (s.json()) {
            s.doc()["equivalence"][nf.name] = cut_equivalence_to_json(m, eq);
        } else if (!eq.report.skipped()) {
            s.text() << nf.name << ": predicate " << (eq.predicate ? "holds" : "fails") << ", level cuts "
                     << (eq.cuts ? "all submodules" : "not all submodules");
            if (eq.threshold) {
                s.text() << " (" << eq.cut_kind << " cut at " << eq.threshold->as_interval().to_string() << " is "
                         << m.carrier.format(eq.cut) << ")";
            }
            s.text() << '\n';
        }
        s.add(named(eq.report, nf.name), labels);
    }
    return s.finish();
}

int verify_lemma35(const StructureFile& file, const Options& o, Session& s)
{
    const auto& nm = selected_map(file, o);
    const auto f = ModuleMap::make(file.module, nm.target, nm.mapping);
    const LabelContext labels{&file.module.ring.carrier, &file.module.carrier, &nm.target.carrier};
    std::vector<Subset> targets;
    if (!o.submodule.empty()) {
        targets.push_back(parse_labels(nm.target.carrier, o.submodule, "--submodule"));
    } else {
        targets = hv_submodules(nm.target);
    }
    for (Subset n : targets) {
        s.add(named(verify_preimage_submodule(f, n), nm.name + " ← " + nm.target.carrier.format(n)), labels);
    }
    return s.finish();
}

int verify_thm36(const StructureFile& file, const Options& o, Session& s)
{
    const auto& nm = selected_map(file, o);
    const auto& m = file.module;
    const auto f = ModuleMap::make(m, nm.target, nm.mapping);
    if (auto gate = module_gate(nm.target, o, "homomorphic-transfer")) {
        s.add(std::move(*gate), LabelContext{&m.ring.carrier, &nm.target.carrier, nullptr});
        return s.finish();
    }
    TransferOptions opts;
    opts.witnessing = witnessing_of(o);
    const auto norms = file.norm_pair();
    const LabelContext on_target{&m.ring.carrier, &nm.target.carrier, nullptr};
    for (const auto& nf : selected_fuzzy(file, o)) {
        s.add(named(verify_image_transfer(f, nf.value, norms, opts), nm.name + "(" + nf.name + ")"), on_target);
    }
    auto target_sets = nm.target_fuzzy;
    if (nm.target == m && target_sets.empty()) {
        target_sets = selected_fuzzy(file, o);
    }
    for (const auto& nf : target_sets) {
        s.add(named(verify_preimage_transfer(f, nf.value, norms, opts), nm.name + "⁻¹(" + nf.name + ")"),
              labels_of(m));
    }
    return s.finish();
}

int verify_thm39(const StructureFile& file, const Options& o, Session& s)
{
    const auto& m = file.module;
    QuotientTransferOptions opts;
    opts.witnessing = witnessing_of(o);
    opts.override_core = !o.no_core_override;
    std::optional<FundamentalQuotient> q;
    try {
        q = build_fundamental_quotient(m);
    } catch (const ConsistencyError&) {
    }
    const LabelContext labels = q ? LabelContext{&q->module.ring.carrier, &m.carrier, &q->module.carrier} : labels_of(m);
    for (const auto& nf : selected_fuzzy(file, o)) {
        s.add(named(verify_quotient_transfer(m, nf.value, file.norm_pair(), opts), nf.name), labels);
    }
    return s.finish();
}

int cmd_verify(const Options& o, std::ostream& out)
{
    const auto file = load_structure_file(o.file);
    Session s("verify " + o.theorem, o, out);
    s.add_input(file);
    if (auto gate = module_gate(file.module, o, o.theorem)) {
        s.add(std::move(*gate), labels_of(file.module));
        return s.finish();
    }
    if (o.theorem == "thm32") {
        return verify_thm32(file, o, s);
    }
    if (o.theorem == "lemma35") {
        return verify_lemma35(file, o, s);
    }
    if (o.theorem == "thm36") {
        return verify_thm36(file, o, s);
    }
    return verify_thm39(file, o, s);
}

void write_output(const Options& o, const std::string& text)
{
    std::ofstream f(o.output, std::ios::binary);
    if (!f) {
        throw UsageError("cannot write " + o.output);
    }
    f << text;
}

int gen_example24(const Options& o, std::ostream& out)
{
    const auto file = load_structure_file(o.file);
    const auto ord = as_ordinary(file.module);
    if (!ord) {
        throw UsageError("example24 needs an ordinary module (singleton tables) as input");
    }
    InducedAction variant = InducedAction::RingSubset;
    Subset ring_subset, module_subset;
    if (o.variant == "a") {
        ring_subset = parse_labels(ord->ring.carrier, o.p, "--P");
    } else if (o.variant == "b") {
        variant = InducedAction::ModuleSubset;
        module_subset = parse_labels(ord->carrier, o.p, "--P");
    } else {
        variant = InducedAction::Combined;
        ring_subset = parse_labels(ord->ring.carrier, o.p1, "--P1");
        module_subset = parse_labels(ord->carrier, o.p2, "--P2");
    }
    if ((variant != InducedAction::ModuleSubset && ring_subset.empty()) ||
        (variant != InducedAction::RingSubset && module_subset.empty())) {
        throw UsageError("variant " + o.variant + " needs nonempty subsets (--P, or --P1 and --P2)");
    }
    HvModule built;
    try {
        built = build_induced_module(*ord, variant, ring_subset, module_subset);
    } catch (const PreconditionError& e) {
        throw UsageError(e.what());
    }
    const auto structure = structure_of(built);
    Session s("gen example24", o, out);
    s.doc()["variant"] = o.variant;
    s.doc()["structure"] = structure_to_json(structure);
    if (!o.output.empty()) {
        write_output(o, serialize_structure_file(structure));
    } else if (!s.json()) {
        out << serialize_structure_file(structure);
    }
    s.add(check_hv_module(built), labels_of(built));
    return s.finish();
}

int gen_modules(const Options& o, std::ostream& out)
{
    const auto cfg = config_of(o);
    Json doc;
    doc["seed"] = cfg.seed;
    doc["mode"] = o.mode;
    doc["instances"] = Json::array();
    ModuleStream stream(cfg);
    while (auto m = stream.next()) {
        doc["instances"].push_back(structure_to_json(structure_of(*m)));
    }
    const auto text = format_json(doc) + "\n";
    if (!o.output.empty()) {
        write_output(o, text);
        out << "seed " << cfg.seed << ": " << doc["instances"].size() << " modules written to " << o.output << '\n';
    } else {
        out << text;
    }
    return kExitPass;
}

int gen_ivifs(const Options& o, std::ostream& out)
{
    auto file = load_structure_file(o.file);
    const auto cfg = config_of(o);
    const auto target = o.ivifs_target == "unconstrained" ? IvifsTarget::Unconstrained : IvifsTarget::Passing;
    std::size_t k = 0;
    for (auto& a : generate_ivifs(file.module, cfg, target)) {
        std::string name;
        do {
            name = "G" + std::to_string(++k);
        } while (std::any_of(file.fuzzy.begin(), file.fuzzy.end(), [&](const NamedIvifs& f) { return f.name == name; }));
        file.fuzzy.push_back({name, std::move(a)});
    }
    Json doc;
    doc["seed"] = cfg.seed;
    doc["structure"] = structure_to_json(file);
    if (!o.output.empty()) {
        write_output(o, serialize_structure_file(file));
        out << "seed " << cfg.seed << ": " << (k == 0 ? 0 : k) << " fuzzy sets written to " << o.output << '\n';
    } else {
        out << format_json(doc) << '\n';
    }
    return kExitPass;
}

int cmd_gen(const Options& o, std::ostream& out)
{
    if (o.what == "example24") {
        if (o.file.empty() || o.variant.empty()) {
            throw UsageError("gen example24 needs an input file and --variant a|b|c");
        }
        return gen_example24(o, out);
    }
    if (o.what == "modules") {
        return gen_modules(o, out);
    }
    if (o.file.empty()) {
        throw UsageError("gen ivifs needs an input file");
    }
    return gen_ivifs(o, out);
}

int cmd_hunt(const Options& o, std::ostream& out)
{
    const auto target = parse_hunt_target(o.theorem);
    const auto weaken = parse_weakening(o.weaken);
    if (!target || !weaken) {
        throw UsageError(!target ? "unknown hunt target \"" + o.theorem + "\"" : "unknown weakening \"" + o.weaken + "\"");
    }
    const auto cfg = config_of(o);
    HuntReport rep;
    try {
        rep = hunt_counterexamples(*target, *weaken, cfg);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    Session s("hunt", o, out);
    s.doc()["target"] = to_string(rep.target);
    s.doc()["weakening"] = to_string(rep.weakening);
    s.doc()["seed"] = rep.seed;
    s.doc()["modules"] = rep.modules;
    s.doc()["cases"] = rep.cases;
    s.doc()["skipped"] = rep.skipped;
    s.doc()["found"] = rep.found;
    if (!s.json()) {
        out << "hunt " << to_string(rep.target) << " (weakening " << to_string(rep.weakening) << ", seed " << rep.seed
            << "): " << rep.modules << " modules, " << rep.cases << " cases, " << rep.skipped << " skipped\n";
    }
    if (!rep.found) {
        if (!s.json()) {
            out << "no counterexample found\n";
        }
        return s.finish_with(kExitPass);
    }
    StructureFile instance = structure_of(*rep.module);
    if (rep.fuzzy && !rep.target_module) {
        instance.fuzzy.push_back({"A", *rep.fuzzy});
    }
    if (rep.map) {
        NamedMap nm{"f", *rep.target_module, *rep.map, {}};
        if (rep.fuzzy) {
            // The fuzzy set lives on whichever side the failing transfer started from.
            if (rep.fuzzy->size() == rep.module->carrier.size()) {
                instance.fuzzy.push_back({"A", *rep.fuzzy});
            } else {
                nm.target_fuzzy.push_back({"B", *rep.fuzzy});
            }
        }
        instance.maps.push_back(std::move(nm));
    }
    if (rep.weakening == Weakening::NonIdempotentNorm) {
        instance.norms = std::pair{NormSpec{"product", {}, {}}, NormSpec{"probabilistic-sum", {}, {}}};
    }
    s.doc()["instance"] = structure_to_json(instance);
    if (!s.json()) {
        out << "counterexample:\n" << serialize_structure_file(instance);
    }
    const LabelContext labels{&rep.module->ring.carrier, &rep.module->carrier,
                              rep.target_module ? &rep.target_module->carrier : nullptr};
    s.add(*rep.failure, labels);
    return s.finish();
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Finite H_v-modules and interval-valued intuitionistic (S,T)-fuzzy submodules", "hvlab"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for all subcommands");

    auto add_common = [&](CLI::App* sub) {
        sub->add_flag("--json", o.json, "Machine-readable output");
        sub->add_option("--witnessing", o.witnessing, "Existential conditions: strict or independent")
            ->check(CLI::IsMember({"strict", "independent"}));
        sub->add_flag("--lenient", o.lenient, "Proceed even if the input fails the H_v-module axioms");
    };
    auto add_generator = [&](CLI::App* sub) {
        sub->add_option("--seed", o.seed, "Random seed (echoed in the output)");
        sub->add_option("--max-m", o.max_m, "Largest module carrier");
        sub->add_option("--max-r", o.max_r, "Largest ring carrier");
        sub->add_option("--budget", o.budget, "Instances to draw");
        sub->add_option("--grid", o.grid, "Endpoint grid: a denominator d for {0,1/d,...,1} or a comma list");
        sub->add_option("--mode", o.mode, "random or enumerate")->check(CLI::IsMember({"random", "enumerate"}));
    };

    auto* check = app.add_subcommand("check", "Run the axiom and predicate suites on a structure file");
    check->add_option("file", o.file, "Structure file")->required();
    check->add_option("--fuzzy", o.fuzzy, "Fuzzy sets to check (default: all)");
    check->add_option("--map", o.map, "Only classify this map");
    add_common(check);

    auto* cuts = app.add_subcommand("cuts", "List the level cuts at every attained threshold");
    cuts->add_option("file", o.file, "Structure file")->required();
    cuts->add_option("--fuzzy", o.fuzzy, "Fuzzy set");
    add_common(cuts);

    auto* quotient = app.add_subcommand("quotient", "Fundamental quotient M/ε* over R/γ*");
    quotient->add_option("file", o.file, "Structure file")->required();
    quotient->add_option("--fuzzy", o.fuzzy, "Fuzzy sets to push to the quotient (default: all)");
    quotient->add_flag("--no-core-override", o.no_core_override, "Keep sup/inf on the core class");
    add_common(quotient);

    auto* verify = app.add_subcommand("verify", "Check a theorem's conclusion on a concrete instance");
    verify->add_option("theorem", o.theorem, "thm32, lemma35, thm36 or thm39")
        ->required()
        ->check(CLI::IsMember({"thm32", "lemma35", "thm36", "thm39"}));
    verify->add_option("file", o.file, "Structure file")->required();
    verify->add_option("--fuzzy", o.fuzzy, "Fuzzy sets (default: all)");
    verify->add_option("--map", o.map, "Map for lemma35 / thm36");
    verify->add_option("--submodule", o.submodule, "Target submodule for lemma35, e.g. \"0,1\"");
    verify->add_flag("--no-core-override", o.no_core_override, "thm39: keep sup/inf on the core class");
    add_common(verify);

    auto* gen = app.add_subcommand("gen", "Build or sample structures");
    gen->add_option("what", o.what, "example24, modules or ivifs")
        ->required()
        ->check(CLI::IsMember({"example24", "modules", "ivifs"}));
    gen->add_option("file", o.file, "Input structure file (example24, ivifs)");
    gen->add_option("--variant", o.variant, "example24 variant")->check(CLI::IsMember({"a", "b", "c"}));
    gen->add_option("--P", o.p, "Subset P (labels, comma separated)");
    gen->add_option("--P1", o.p1, "Ring subset P1 (variant c)");
    gen->add_option("--P2", o.p2, "Module subset P2 (variant c)");
    gen->add_option("--target", o.ivifs_target, "ivifs: passing or unconstrained")
        ->check(CLI::IsMember({"passing", "unconstrained"}));
    gen->add_option("-o,--output", o.output, "Write the generated structure here");
    add_generator(gen);
    add_common(gen);

    auto* hunt = app.add_subcommand("hunt", "Search generated instances for a counterexample");
    hunt->add_option("theorem", o.theorem, "thm32, lemma35, thm36 or thm39")->required();
    hunt->add_option("--weaken", o.weaken, "none, norm (thm32), map (thm36, lemma35) or omega (thm39)");
    add_generator(hunt);
    add_common(hunt);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (check->parsed()) {
            return cmd_check(o, out);
        }
        if (cuts->parsed()) {
            return cmd_cuts(o, out);
        }
        if (quotient->parsed()) {
            return cmd_quotient(o, out);
        }
        if (verify->parsed()) {
            return cmd_verify(o, out);
        }
        if (gen->parsed()) {
            return cmd_gen(o, out);
        }
        return cmd_hunt(o, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const ConstructionError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
    }
    return kExitUsage;
}

} // namespace hvlab::cli
