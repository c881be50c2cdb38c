#include "hvlab/homomorphism.hpp"

#include "hvlab/error.hpp"

namespace hvlab {

ModuleMap ModuleMap::make(HvModule source, HvModule target, ElementMap mapping)
{
    if (!(source.ring == target.ring)) {
        throw ConstructionError("source and target are modules over different H_v-rings");
    }
    if (mapping.size() != source.carrier.size()) {
        throw ConstructionError("map is not total on the source carrier");
    }
    for (auto y : mapping) {
        if (y >= target.carrier.size()) {
            throw ConstructionError("map sends an element outside the target carrier");
        }
    }
    return ModuleMap{std::move(source), std::move(target), std::move(mapping)};
}

bool ModuleMap::surjective() const { return image(source.carrier.all()) == target.carrier.all(); }

const char* to_string(MapClass c)
{
    switch (c) {
    case MapClass::None:
        return "none";
    case MapClass::Weak:
        return "weak";
    case MapClass::Inclusion:
        return "inclusion";
    case MapClass::Strong:
        return "strong";
    }
    return "?";
}

MapClassification classify_map(const ModuleMap& f)
{
    const auto& src = f.source;
    const auto& dst = f.target;
    const auto single = [](std::size_t i) { return Subset::singleton(i); };

    bool weak = true, inclusion = true, strong = true;
    std::optional<Witness> weak_w, incl_w, strong_w;
    auto record = [](bool& flag, std::optional<Witness>& slot, Witness w) {
        if (flag) {
            flag = false;
            slot = std::move(w);
        }
    };

    const auto n = src.carrier.size();
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            const Subset lhs = f.image(src.add(x, y));
            const Subset rhs = dst.add(f.mapping[x], f.mapping[y]);
            const std::vector<WitnessElement> els{{"x", Domain::Module, x}, {"y", Domain::Module, y}};
            const std::vector<std::string> sides{dst.carrier.format(lhs), dst.carrier.format(rhs)};
            if (!lhs.intersects(rhs)) {
                record(weak, weak_w, Witness{"weak.add", els, sides, "f(x+y) ∩ (f(x)+f(y)) = ∅"});
            }
            if (!lhs.subset_of(rhs)) {
                record(inclusion, incl_w, Witness{"inclusion.add", els, sides, "f(x+y) ⊄ f(x)+f(y)"});
            }
            if (lhs != rhs) {
                record(strong, strong_w, Witness{"strong.add", els, sides, "f(x+y) ≠ f(x)+f(y)"});
            }
        }
    }
    for (std::size_t r = 0; r < src.ring.carrier.size(); ++r) {
        for (std::size_t x = 0; x < n; ++x) {
            const Subset lhs = f.image(src.action(r, x));
            const Subset rhs = dst.action.apply(single(r), single(f.mapping[x]));
            const std::vector<WitnessElement> els{{"r", Domain::Ring, r}, {"x", Domain::Module, x}};
            const std::vector<std::string> sides{dst.carrier.format(lhs), dst.carrier.format(rhs)};
            if (!lhs.intersects(rhs)) {
                record(weak, weak_w, Witness{"weak.action", els, sides, "f(r·x) ∩ r·f(x) = ∅"});
            }
            if (!lhs.subset_of(rhs)) {
                record(inclusion, incl_w, Witness{"inclusion.action", els, sides, "f(r·x) ⊄ r·f(x)"});
            }
            if (lhs != rhs) {
                record(strong, strong_w, Witness{"strong.action", els, sides, "f(r·x) ≠ r·f(x)"});
            }
        }
    }
    if (strong && (!inclusion || !weak)) {
        throw ConsistencyError("strong map failed a weaker homomorphism condition");
    }
    if (inclusion && !weak) {
        throw ConsistencyError("inclusion map failed the weak homomorphism condition");
    }

    MapClassification out;
    const std::string check = "map-class";
    if (strong) {
        out.cls = MapClass::Strong;
        out.report = CheckReport::pass(check);
    } else if (inclusion) {
        out.cls = MapClass::Inclusion;
        out.report = CheckReport::fail(check, *strong_w);
    } else if (weak) {
        out.cls = MapClass::Weak;
        out.report = CheckReport::fail(check, *incl_w);
    } else {
        out.cls = MapClass::None;
        out.report = CheckReport::fail(check, *weak_w);
    }
    out.report.note = to_string(out.cls);
    return out;
}

CheckReport verify_preimage_submodule(const ModuleMap& f, Subset n)
{
    const std::string check = "preimage-submodule";
    if (classify_map(f).cls != MapClass::Strong) {
        return CheckReport::skip(check, "map is not a strong homomorphism");
    }
    if (!f.surjective()) {
        return CheckReport::skip(check, "map is not surjective");
    }
    if (!is_hv_submodule(f.target, n)) {
        return CheckReport::skip(check, f.target.carrier.format(n) + " is not an H_v-submodule of the target");
    }
    const Subset pre = f.preimage(n);
    auto inner = check_hv_submodule(f.source, pre);
    if (inner.passed()) {
        auto out = CheckReport::pass(check);
        out.note = "preimage " + f.source.carrier.format(pre);
        return out;
    }
    Witness w = *inner.witness;
    w.detail = "preimage " + f.source.carrier.format(pre) + " of " + f.target.carrier.format(n) +
               " is not an H_v-submodule (" + w.condition + ": " + w.detail + ")";
    auto out = CheckReport::fail(check, std::move(w));
    out.children.push_back(std::move(inner));
    return out;
}

namespace {

CheckReport transfer(const ModuleMap& f, const Ivifs& given, const IntervalNormPair& norms, TransferOptions options,
                     bool image)
{
    const std::string check = image ? "image-transfer" : "preimage-transfer";
    if (options.require_strong && classify_map(f).cls != MapClass::Strong) {
        return CheckReport::skip(check, "map is not a strong homomorphism");
    }
    const HvModule& from = image ? f.source : f.target;
    const HvModule& to = image ? f.target : f.source;
    if (auto v = validate_ivifs(given); !v.passed() || given.size() != from.carrier.size()) {
        return CheckReport::skip(check, "fuzzy set is not a valid IVIFS on the " +
                                            std::string(image ? "source" : "target"));
    }
    if (!check_st_hv_submodule(from, given, norms, options.witnessing).passed()) {
        return CheckReport::skip(check, "fuzzy set does not satisfy the predicate on the " +
                                            std::string(image ? "source" : "target"));
    }
    const Ivifs moved = image ? image_ivifs(f.mapping, given, f.target.carrier.size())
                              : preimage_ivifs(f.mapping, given);
    auto result = check_st_hv_submodule(to, moved, norms, options.witnessing);
    if (result.passed()) {
        return CheckReport::pass(check);
    }
    Witness w = *result.witness;
    w.detail = std::string(image ? "image" : "preimage") + " fails the predicate: " + w.detail;
    auto out = CheckReport::fail(check, std::move(w));
    out.children.push_back(std::move(result));
    return out;
}

} // namespace

CheckReport verify_image_transfer(const ModuleMap& f, const Ivifs& a, const IntervalNormPair& norms,
                                  TransferOptions options)
{
    return transfer(f, a, norms, options, true);
}

CheckReport verify_preimage_transfer(const ModuleMap& f, const Ivifs& b, const IntervalNormPair& norms,
                                     TransferOptions options)
{
    return transfer(f, b, norms, options, false);
}

CheckReport check_cut_image_identity(const ModuleMap& f, const Ivifs& a)
{
    const std::string check = "cut-image-identity";
    const Ivifs img = image_ivifs(f.mapping, a, f.target.carrier.size());
    for (const auto& th : attained_thresholds(a)) {
        const Subset u_img = upper_cut(img.membership, th);
        const Subset img_u = f.image(upper_cut(a.membership, th));
        if (u_img != img_u) {
            return CheckReport::fail(check, Witness{"upper", {}, {f.target.carrier.format(u_img), f.target.carrier.format(img_u)},
                                                    "U(f(M);" + th.as_interval().to_string() + ") ≠ f(U(M;" +
                                                        th.as_interval().to_string() + "))"});
        }
        const Subset l_img = lower_cut(img.nonmembership, th);
        const Subset img_l = f.image(lower_cut(a.nonmembership, th));
        if (l_img != img_l) {
            return CheckReport::fail(check, Witness{"lower", {}, {f.target.carrier.format(l_img), f.target.carrier.format(img_l)},
                                                    "L(f(N);" + th.as_interval().to_string() + ") ≠ f(L(N;" +
                                                        th.as_interval().to_string() + "))"});
        }
    }
    return CheckReport::pass(check);
}

} // namespace hvlab
