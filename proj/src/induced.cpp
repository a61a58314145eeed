#include "cfdom/induced.hpp"

#include <algorithm>

namespace cfdom {

namespace {

// Top element of m, if any: a member whose down-set covers m.  Unique by
// antisymmetry.
std::optional<int> top_of(const FinitePoset& p, Mask m) {
    for (int c = 0; c < p.size(); ++c)
        if ((m >> c & 1) && subset(m, p.down_set(c))) return c;
    return std::nullopt;
}

std::vector<Mask> topped_subsets(const FinitePoset& p, Mask pool, FamilyMode mode) {
    std::vector<Mask> out;
    if (mode == FamilyMode::full) {
        for_each_subset(pool, [&](Mask m) {
            if (m != 0 && top_of(p, m)) out.push_back(m);
        });
        std::sort(out.begin(), out.end());
        return out;
    }
    for (int x = 0; x < p.size(); ++x)
        if (pool >> x & 1) out.push_back(Mask{1} << x);
    for (int x = 0; x < p.size(); ++x)
        for (int y = x + 1; y < p.size(); ++y) {
            if (!(pool >> x & 1) || !(pool >> y & 1)) continue;
            const Mask m = (Mask{1} << x) | (Mask{1} << y);
            if (top_of(p, m)) out.push_back(m);
        }
    std::sort(out.begin(), out.end());
    return out;
}

InducedSpace induce_over(const FinitePoset& p, Mask pool, FamilyMode mode, int max_carrier,
                         const char* what) {
    if (p.size() == 0) throw input_error(std::string(what) + " needs a nonempty poset");
    if (p.size() > max_carrier)
        throw budget_error(std::string(what) + ": carrier exceeds the family-enumeration bound");
    std::vector<std::string> names;
    std::vector<int> element_map;
    for (int x = 0; x < p.size(); ++x) {
        if (!(pool >> x & 1)) continue;
        if (!valid_token(p.label(x)))
            throw input_error(std::string(what) + ": label '" + p.label(x) +
                              "' is not a valid element token");
        element_map.push_back(static_cast<int>(names.size()));
        names.push_back(p.label(x));
    }
    Universe u(std::move(names));
    std::vector<Mask> rows;
    rows.reserve(u.size());
    for (int x = 0; x < p.size(); ++x)
        if (pool >> x & 1) rows.push_back(compress(p.up_set(x) & pool, pool));
    std::vector<Mask> members;
    for (Mask m : topped_subsets(p, pool, mode)) members.push_back(compress(m, pool));
    CfSpace space = CfSpace::validate_or_throw(GaSpace(u, Relation(u, std::move(rows))),
                                               FiniteFamily(u, std::move(members)));
    return InducedSpace{p, std::move(space), std::move(element_map)};
}

}  // namespace

InducedSpace induce_cf_space(const FinitePoset& p, FamilyMode mode, int max_carrier) {
    return induce_over(p, p.carrier_mask(), mode, max_carrier, "induce_cf_space");
}

InducedSpace induce_topological_space(const FinitePoset& p, FamilyMode mode, int max_carrier) {
    return induce_over(p, p.compacts(), mode, max_carrier, "induce_topological_space");
}

RoundtripReport representation_roundtrip(const FinitePoset& p) {
    RoundtripReport rep;
    rep.poset_report = classify_poset(p);
    InducedSpace ind = induce_cf_space(p);
    rep.space_report = classify_space(ind.space);
    for (int x = 0; x < p.size(); ++x) rep.down_sets.push_back(p.down_set(x));
    rep.induced = std::move(ind);
    const CfSpace& sp = rep.induced->space;

    std::vector<Mask> image = rep.down_sets;
    std::sort(image.begin(), image.end(), set_lex_less);
    if (std::adjacent_find(image.begin(), image.end()) != image.end()) {
        rep.failure = "down-set map is not injective";
        return rep;
    }
    if (image != sp.closed_sets()) {
        rep.failure = "down-sets differ from the closed sets of the induced space";
        return rep;
    }
    for (int x = 0; x < p.size(); ++x)
        for (int y = 0; y < p.size(); ++y)
            if (p.leq(x, y) != subset(rep.down_sets[x], rep.down_sets[y])) {
                rep.failure = "down-set map does not preserve and reflect the order";
                return rep;
            }
    auto mismatch = [&](bool dom, bool spc, const char* name) {
        if (dom == spc) return false;
        rep.failure = std::string("classification transfer fails at ") + name;
        return true;
    };
    if (mismatch(rep.poset_report.sl_domain, rep.space_report.sl, "sl") ||
        mismatch(rep.poset_report.l_domain, rep.space_report.l, "l") ||
        mismatch(rep.poset_report.bc_domain, rep.space_report.bc, "bc"))
        return rep;
    rep.ok = true;
    return rep;
}

}  // namespace cfdom
