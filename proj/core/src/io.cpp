#include "hvlab/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "hvlab/error.hpp"

namespace hvlab {

namespace {

std::string key_path(const std::string& base, const std::string& key) { return base.empty() ? key : base + "." + key; }
std::string index_path(const std::string& base, std::size_t i) { return base + "[" + std::to_string(i) + "]"; }

const Json& field(const Json& obj, const std::string& key, const std::string& path)
{
    if (!obj.is_object()) {
        throw ParseError(path, "expected an object");
    }
    auto it = obj.find(key);
    if (it == obj.end()) {
        throw ParseError(path, "missing field \"" + key + "\"");
    }
    return *it;
}

const Json& array_of(const Json& j, std::size_t n, const std::string& path)
{
    if (!j.is_array()) {
        throw ParseError(path, "expected an array");
    }
    if (j.size() != n) {
        throw ParseError(path, "expected " + std::to_string(n) + " entries, found " + std::to_string(j.size()));
    }
    return j;
}

std::string label_text(const Json& j, const std::string& path)
{
    if (j.is_string()) {
        return j.get<std::string>();
    }
    if (j.is_number_integer()) {
        return std::to_string(j.get<std::int64_t>());
    }
    throw ParseError(path, "expected a label (string)");
}

Carrier parse_carrier(const Json& j, const std::string& path)
{
    if (!j.is_array()) {
        throw ParseError(path, "expected an array of labels");
    }
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < j.size(); ++i) {
        labels.push_back(label_text(j[i], index_path(path, i)));
    }
    try {
        return Carrier(std::move(labels));
    } catch (const ConstructionError& e) {
        throw ParseError(path, e.what());
    }
}

std::size_t resolve(const Carrier& c, const Json& j, const std::string& path)
{
    const auto text = label_text(j, path);
    if (auto i = c.index_of(text)) {
        return *i;
    }
    throw ParseError(path, "unknown label \"" + text + "\"");
}

Subset parse_cell(const Carrier& c, const Json& j, const std::string& path)
{
    if (!j.is_array()) {
        return Subset::singleton(resolve(c, j, path));
    }
    if (j.empty()) {
        throw ParseError(path, "empty hyperoperation cell");
    }
    Subset s;
    for (std::size_t i = 0; i < j.size(); ++i) {
        s.insert(resolve(c, j[i], index_path(path, i)));
    }
    return s;
}

std::vector<Subset> parse_cells(const Carrier& rows, const Carrier& cols, const Carrier& values, const Json& j,
                                const std::string& path)
{
    array_of(j, rows.size(), path);
    std::vector<Subset> cells;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto row_path = index_path(path, i);
        array_of(j[i], cols.size(), row_path);
        for (std::size_t k = 0; k < cols.size(); ++k) {
            cells.push_back(parse_cell(values, j[i][k], index_path(row_path, k)));
        }
    }
    return cells;
}

HyperOp parse_op(const Carrier& c, const Json& j, const std::string& path)
{
    return HyperOp(c.size(), parse_cells(c, c, c, j, path));
}

Rational01 parse_rational(const Json& j, const std::string& path)
{
    if (!j.is_string()) {
        throw ParseError(path, "malformed rational: expected a string such as \"1/2\"");
    }
    try {
        return Rational01::parse(j.get<std::string>());
    } catch (const ConstructionError& e) {
        throw ParseError(path, e.what());
    }
}

Interval parse_interval(const Json& j, const std::string& path)
{
    if (!j.is_array() || j.size() != 2) {
        throw ParseError(path, "expected an interval [lo, hi]");
    }
    const auto lo = parse_rational(j[0], index_path(path, 0));
    const auto hi = parse_rational(j[1], index_path(path, 1));
    if (hi < lo) {
        throw ParseError(path, "interval lower end " + lo.to_string() + " exceeds upper end " + hi.to_string());
    }
    return Interval{lo, hi};
}

IVFuzzySet parse_iv(const Carrier& c, const Json& j, const std::string& path)
{
    if (!j.is_object()) {
        throw ParseError(path, "expected an object from labels to intervals");
    }
    IVFuzzySet out(c.size());
    std::vector<bool> seen(c.size(), false);
    for (const auto& [key, value] : j.items()) {
        const auto where = key_path(path, key);
        auto i = c.index_of(key);
        if (!i) {
            throw ParseError(where, "unknown label \"" + key + "\"");
        }
        out[*i] = parse_interval(value, where);
        seen[*i] = true;
    }
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (!seen[i]) {
            throw ParseError(path, "missing value for label \"" + c.label(i) + "\"");
        }
    }
    return out;
}

Ivifs parse_ivifs(const Carrier& c, const Json& j, const std::string& path)
{
    Ivifs a{parse_iv(c, field(j, "M", path), key_path(path, "M")), parse_iv(c, field(j, "N", path), key_path(path, "N"))};
    for (std::size_t x = 0; x < c.size(); ++x) {
        if (!checked_add(a.membership[x].hi, a.nonmembership[x].hi)) {
            throw ParseError(key_path(path, c.label(x)),
                             "Atanassov constraint violated: sup M(" + c.label(x) + ") + sup N(" + c.label(x) +
                                 ") = " + a.membership[x].hi.to_string() + " + " + a.nonmembership[x].hi.to_string() +
                                 " > 1");
        }
    }
    return a;
}

NormSpec parse_norm(const Json& j, const std::string& path)
{
    static const std::set<std::string> builtin{"min", "max", "product", "probabilistic-sum"};
    NormSpec spec;
    if (j.is_string()) {
        spec.name = j.get<std::string>();
        if (!builtin.contains(spec.name)) {
            throw ParseError(path, "unknown norm \"" + spec.name + "\"");
        }
        return spec;
    }
    spec.name = "table";
    const auto& values = field(j, "values", path);
    if (!values.is_array() || values.empty()) {
        throw ParseError(key_path(path, "values"), "expected a nonempty array of rationals");
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
        spec.values.push_back(parse_rational(values[i], index_path(key_path(path, "values"), i)));
    }
    const auto tpath = key_path(path, "table");
    const auto& table = array_of(field(j, "table", path), spec.values.size(), tpath);
    for (std::size_t i = 0; i < table.size(); ++i) {
        array_of(table[i], spec.values.size(), index_path(tpath, i));
        std::vector<Rational01> row;
        for (std::size_t k = 0; k < table[i].size(); ++k) {
            row.push_back(parse_rational(table[i][k], index_path(index_path(tpath, i), k)));
        }
        spec.table.push_back(std::move(row));
    }
    try {
        (void)spec.build(NormKind::TNorm);
    } catch (const ConstructionError& e) {
        throw ParseError(path, e.what());
    }
    return spec;
}

// A module section plus its action, over an already parsed ring.
HvModule parse_module(const HvRing& ring, const Json& module, const Json& action, const std::string& mpath,
                      const std::string& apath)
{
    HvModule m;
    m.ring = ring;
    m.carrier = parse_carrier(field(module, "labels", mpath), key_path(mpath, "labels"));
    m.add = parse_op(m.carrier, field(module, "add", mpath), key_path(mpath, "add"));
    m.action = ExternalOp(ring.carrier.size(), m.carrier.size(),
                          parse_cells(ring.carrier, m.carrier, m.carrier, action, apath));
    if (auto it = module.find("zero"); it != module.end()) {
        m.zero = resolve(m.carrier, *it, key_path(mpath, "zero"));
    }
    return m;
}

Json labels_json(const Carrier& c) { return Json(c.labels()); }

Json cell_json(const Carrier& c, Subset s)
{
    Json out = Json::array();
    s.for_each([&](std::size_t i) { out.push_back(c.label(i)); });
    return out;
}

Json op_json(const Carrier& rows, const Carrier& cols, const Carrier& values, const std::vector<Subset>& cells)
{
    Json out = Json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < cols.size(); ++k) {
            row.push_back(cell_json(values, cells[i * cols.size() + k]));
        }
        out.push_back(std::move(row));
    }
    return out;
}

Json module_section(const HvModule& m)
{
    Json out;
    out["labels"] = labels_json(m.carrier);
    out["add"] = op_json(m.carrier, m.carrier, m.carrier, m.add.cells());
    if (m.zero) {
        out["zero"] = m.carrier.label(*m.zero);
    }
    return out;
}

Json iv_json(const Carrier& c, const IVFuzzySet& f)
{
    Json out = Json::object();
    for (std::size_t i = 0; i < c.size(); ++i) {
        out[c.label(i)] = interval_to_json(f[i]);
    }
    return out;
}

Json norm_json(const NormSpec& n)
{
    if (n.name != "table") {
        return n.name;
    }
    Json out;
    out["values"] = Json::array();
    for (const auto& v : n.values) {
        out["values"].push_back(v.to_string());
    }
    out["table"] = Json::array();
    for (const auto& row : n.table) {
        Json r = Json::array();
        for (const auto& v : row) {
            r.push_back(v.to_string());
        }
        out["table"].push_back(std::move(r));
    }
    return out;
}

const char* domain_name(Domain d)
{
    switch (d) {
    case Domain::Ring:
        return "ring";
    case Domain::Module:
        return "module";
    case Domain::Target:
        return "target";
    case Domain::Value:
        return "value";
    }
    return "?";
}

std::string element_label(const WitnessElement& e, const LabelContext& labels)
{
    const Carrier* c = nullptr;
    switch (e.domain) {
    case Domain::Ring:
        c = labels.ring;
        break;
    case Domain::Module:
        c = labels.module;
        break;
    case Domain::Target:
        c = labels.target;
        break;
    case Domain::Value:
        break;
    }
    if (c != nullptr && e.index < c->size()) {
        return c->label(e.index);
    }
    return "#" + std::to_string(e.index);
}

Json class_table(const Carrier& rows, const Carrier& cols, const Carrier& values, const std::vector<std::size_t>& t)
{
    Json out = Json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < cols.size(); ++k) {
            row.push_back(values.label(t[i * cols.size() + k]));
        }
        out.push_back(std::move(row));
    }
    return out;
}

} // namespace

ScalarNorm NormSpec::build(NormKind kind) const
{
    if (name == "min") {
        return ScalarNorm::minimum();
    }
    if (name == "max") {
        return ScalarNorm::maximum();
    }
    if (name == "product") {
        return ScalarNorm::product();
    }
    if (name == "probabilistic-sum") {
        return ScalarNorm::probabilistic_sum();
    }
    return ScalarNorm::from_table(kind, "table", values, table);
}

const Ivifs& StructureFile::fuzzy_set(const std::string& name) const
{
    for (const auto& f : fuzzy) {
        if (f.name == name) {
            return f.value;
        }
    }
    throw std::out_of_range("no fuzzy set named \"" + name + "\"");
}

const NamedMap& StructureFile::map(const std::string& name) const
{
    for (const auto& f : maps) {
        if (f.name == name) {
            return f;
        }
    }
    throw std::out_of_range("no map named \"" + name + "\"");
}

IntervalNormPair StructureFile::norm_pair() const
{
    if (!norms) {
        return IntervalNormPair::min_max();
    }
    return IntervalNormPair{lift_norm(norms->first.build(NormKind::TNorm)),
                            lift_norm(norms->second.build(NormKind::SNorm))};
}

StructureFile parse_structure_file(std::string_view text)
{
    Json doc;
    try {
        doc = Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        throw ParseError("byte " + std::to_string(e.byte), "invalid JSON");
    }
    if (!doc.is_object()) {
        throw ParseError("", "structure file must be a JSON object");
    }
    if (auto it = doc.find("version"); it != doc.end()) {
        if (!it->is_number_integer() || it->get<int>() != kStructureFormatVersion) {
            throw ParseError("version", "unsupported format version");
        }
    }

    try {
        StructureFile file;
        const auto& ring = field(doc, "ring", "");
        HvRing r;
        r.carrier = parse_carrier(field(ring, "labels", "ring"), "ring.labels");
        r.add = parse_op(r.carrier, field(ring, "add", "ring"), "ring.add");
        r.mul = parse_op(r.carrier, field(ring, "mul", "ring"), "ring.mul");
        file.module = parse_module(r, field(doc, "module", ""), field(doc, "action", ""), "module", "action");

        if (auto it = doc.find("fuzzy"); it != doc.end()) {
            if (!it->is_object()) {
                throw ParseError("fuzzy", "expected an object of named fuzzy sets");
            }
            for (const auto& [name, value] : it->items()) {
                file.fuzzy.push_back({name, parse_ivifs(file.module.carrier, value, "fuzzy." + name)});
            }
        }
        if (auto it = doc.find("maps"); it != doc.end()) {
            if (!it->is_object()) {
                throw ParseError("maps", "expected an object of named maps");
            }
            for (const auto& [name, value] : it->items()) {
                const std::string path = "maps." + name;
                NamedMap nm{name, file.module, {}, {}};
                if (auto t = value.find("target"); t != value.end()) {
                    const auto tpath = key_path(path, "target");
                    nm.target = parse_module(r, field(*t, "module", tpath), field(*t, "action", tpath),
                                             key_path(tpath, "module"), key_path(tpath, "action"));
                    if (auto fz = t->find("fuzzy"); fz != t->end()) {
                        if (!fz->is_object()) {
                            throw ParseError(key_path(tpath, "fuzzy"), "expected an object of named fuzzy sets");
                        }
                        for (const auto& [fname, fvalue] : fz->items()) {
                            nm.target_fuzzy.push_back(
                                {fname, parse_ivifs(nm.target.carrier, fvalue, key_path(tpath, "fuzzy." + fname))});
                        }
                    }
                }
                const auto& mapping = field(value, "map", path);
                if (!mapping.is_object()) {
                    throw ParseError(key_path(path, "map"), "expected an object from source to target labels");
                }
                nm.mapping.assign(file.module.carrier.size(), nm.target.carrier.size());
                for (const auto& [src, dst] : mapping.items()) {
                    const auto where = key_path(key_path(path, "map"), src);
                    auto i = file.module.carrier.index_of(src);
                    if (!i) {
                        throw ParseError(where, "unknown label \"" + src + "\"");
                    }
                    nm.mapping[*i] = resolve(nm.target.carrier, dst, where);
                }
                for (std::size_t i = 0; i < nm.mapping.size(); ++i) {
                    if (nm.mapping[i] == nm.target.carrier.size()) {
                        throw ParseError(key_path(path, "map"),
                                         "map is not total: no image for \"" + file.module.carrier.label(i) + "\"");
                    }
                }
                file.maps.push_back(std::move(nm));
            }
        }
        if (auto it = doc.find("norms"); it != doc.end()) {
            file.norms = std::pair{parse_norm(field(*it, "t", "norms"), "norms.t"),
                                   parse_norm(field(*it, "s", "norms"), "norms.s")};
        }
        return file;
    } catch (const ConstructionError& e) {
        throw ParseError("", e.what());
    }
}

StructureFile load_structure_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("", "cannot open " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_structure_file(buf.str());
}

Json structure_to_json(const StructureFile& file)
{
    const auto& m = file.module;
    Json out;
    out["version"] = kStructureFormatVersion;
    out["ring"]["labels"] = labels_json(m.ring.carrier);
    out["ring"]["add"] = op_json(m.ring.carrier, m.ring.carrier, m.ring.carrier, m.ring.add.cells());
    out["ring"]["mul"] = op_json(m.ring.carrier, m.ring.carrier, m.ring.carrier, m.ring.mul.cells());
    out["module"] = module_section(m);
    out["action"] = op_json(m.ring.carrier, m.carrier, m.carrier, m.action.cells());
    if (!file.fuzzy.empty()) {
        out["fuzzy"] = Json::object();
        for (const auto& f : file.fuzzy) {
            out["fuzzy"][f.name] = ivifs_to_json(m.carrier, f.value);
        }
    }
    if (!file.maps.empty()) {
        out["maps"] = Json::object();
        for (const auto& f : file.maps) {
            Json entry;
            Json mapping = Json::object();
            for (std::size_t i = 0; i < f.mapping.size(); ++i) {
                mapping[m.carrier.label(i)] = f.target.carrier.label(f.mapping[i]);
            }
            entry["map"] = std::move(mapping);
            if (!(f.target == m)) {
                entry["target"]["module"] = module_section(f.target);
                entry["target"]["action"] = op_json(m.ring.carrier, f.target.carrier, f.target.carrier,
                                                    f.target.action.cells());
                for (const auto& g : f.target_fuzzy) {
                    entry["target"]["fuzzy"][g.name] = ivifs_to_json(f.target.carrier, g.value);
                }
            }
            out["maps"][f.name] = std::move(entry);
        }
    }
    if (file.norms) {
        out["norms"]["t"] = norm_json(file.norms->first);
        out["norms"]["s"] = norm_json(file.norms->second);
    }
    return out;
}

namespace {

bool has_object(const Json& j)
{
    if (j.is_object()) {
        return true;
    }
    if (j.is_array()) {
        return std::any_of(j.begin(), j.end(), [](const Json& e) { return has_object(e); });
    }
    return false;
}

void write_inline(std::ostream& os, const Json& j)
{
    if (!j.is_array()) {
        os << j.dump();
        return;
    }
    os << '[';
    for (std::size_t i = 0; i < j.size(); ++i) {
        os << (i == 0 ? "" : ", ");
        write_inline(os, j[i]);
    }
    os << ']';
}

void write_json(std::ostream& os, const Json& j, int depth)
{
    const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
    const std::string inner(static_cast<std::size_t>(depth + 1) * 2, ' ');
    if (j.is_object()) {
        if (j.empty()) {
            os << "{}";
            return;
        }
        os << "{\n";
        std::size_t i = 0;
        for (const auto& [key, value] : j.items()) {
            os << inner << Json(key).dump() << ": ";
            write_json(os, value, depth + 1);
            os << (++i < j.size() ? ",\n" : "\n");
        }
        os << pad << '}';
    } else if (j.is_array() && has_object(j)) {
        os << "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            os << inner;
            write_json(os, j[i], depth + 1);
            os << (i + 1 < j.size() ? ",\n" : "\n");
        }
        os << pad << ']';
    } else if (j.is_array() && j.size() > 1 && j[0].is_array() && j[0].size() > 0 && j[0][0].is_array()) {
        // A table: one row per line.
        os << "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            os << inner;
            write_inline(os, j[i]);
            os << (i + 1 < j.size() ? ",\n" : "\n");
        }
        os << pad << ']';
    } else {
        write_inline(os, j);
    }
}

} // namespace

std::string format_json(const Json& j)
{
    std::ostringstream os;
    write_json(os, j, 0);
    return os.str();
}

std::string serialize_structure_file(const StructureFile& file) { return format_json(structure_to_json(file)) + "\n"; }

StructureFile structure_of(const HvModule& m)
{
    StructureFile f;
    f.module = m;
    return f;
}

Json interval_to_json(const Interval& v) { return Json::array({v.lo.to_string(), v.hi.to_string()}); }

Json ivifs_to_json(const Carrier& carrier, const Ivifs& a)
{
    Json out;
    out["M"] = iv_json(carrier, a.membership);
    out["N"] = iv_json(carrier, a.nonmembership);
    return out;
}

Json subset_to_json(const Carrier& carrier, Subset s) { return cell_json(carrier, s); }

Json partition_to_json(const Carrier& carrier, const Partition& p)
{
    Json out = Json::array();
    for (Subset c : p.classes) {
        out.push_back(cell_json(carrier, c));
    }
    return out;
}

Json report_to_json(const CheckReport& report, const LabelContext& labels)
{
    Json out;
    out["check"] = report.check;
    out["verdict"] = to_string(report.verdict);
    if (!report.note.empty()) {
        out["note"] = report.note;
    }
    if (!report.flags.empty()) {
        out["flags"] = Json::object();
        for (const auto& [k, v] : report.flags) {
            out["flags"][k] = v;
        }
    }
    if (report.witness) {
        const auto& w = *report.witness;
        Json wj;
        wj["condition"] = w.condition;
        wj["elements"] = Json::array();
        for (const auto& e : w.elements) {
            Json ej;
            ej["role"] = e.role;
            ej["domain"] = domain_name(e.domain);
            ej["index"] = e.index;
            ej["label"] = element_label(e, labels);
            wj["elements"].push_back(std::move(ej));
        }
        if (!w.sides.empty()) {
            wj["sides"] = w.sides;
        }
        wj["detail"] = w.detail;
        out["witness"] = std::move(wj);
    }
    if (!report.children.empty()) {
        out["children"] = Json::array();
        for (const auto& c : report.children) {
            out["children"].push_back(report_to_json(c, labels));
        }
    }
    return out;
}

std::string render_report(const CheckReport& report, const LabelContext& labels, int indent)
{
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    std::ostringstream os;
    os << pad << to_string(report.verdict) << ' ' << report.check;
    if (!report.note.empty()) {
        os << " (" << report.note << ')';
    }
    os << '\n';
    if (report.witness) {
        const auto& w = *report.witness;
        os << pad << "  witness " << w.condition;
        if (!w.elements.empty()) {
            os << ':';
            for (const auto& e : w.elements) {
                os << ' ' << e.role << '=' << element_label(e, labels);
            }
        }
        os << '\n';
        if (!w.sides.empty()) {
            os << pad << "  compared";
            for (std::size_t i = 0; i < w.sides.size(); ++i) {
                os << (i == 0 ? " " : " vs ") << w.sides[i];
            }
            os << '\n';
        }
        if (!w.detail.empty()) {
            os << pad << "  " << w.detail << '\n';
        }
    }
    for (const auto& c : report.children) {
        os << render_report(c, labels, indent + 2);
    }
    return os.str();
}

Json quotient_to_json(const HvModule& m, const FundamentalQuotient& q)
{
    const auto& qm = q.module;
    const auto& qr = qm.ring;
    Json out;
    out["epsilon_star"] = partition_to_json(m.carrier, q.module_partition);
    out["gamma_star"] = partition_to_json(m.ring.carrier, q.ring_partition);
    out["ring"]["classes"] = labels_json(qr.carrier);
    out["ring"]["add"] = class_table(qr.carrier, qr.carrier, qr.carrier, qr.add);
    out["ring"]["mul"] = class_table(qr.carrier, qr.carrier, qr.carrier, qr.mul);
    out["module"]["classes"] = labels_json(qm.carrier);
    out["module"]["add"] = class_table(qm.carrier, qm.carrier, qm.carrier, qm.add);
    out["module"]["action"] = class_table(qr.carrier, qm.carrier, qm.carrier, qm.action);
    out["core"] = qm.carrier.label(q.core);
    return out;
}

Json cut_equivalence_to_json(const HvModule& m, const CutEquivalence& eq)
{
    const LabelContext labels{&m.ring.carrier, &m.carrier, nullptr};
    Json out;
    out["verdict"] = to_string(eq.report.verdict);
    out["predicate"] = eq.predicate;
    out["cuts"] = eq.cuts;
    if (eq.threshold) {
        out["threshold"] = interval_to_json(eq.threshold->as_interval());
        out["cut_kind"] = eq.cut_kind;
        out["cut"] = subset_to_json(m.carrier, eq.cut);
    }
    out["report"] = report_to_json(eq.report, labels);
    return out;
}

} // namespace hvlab
