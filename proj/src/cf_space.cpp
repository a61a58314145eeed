#include "cfdom/cf_space.hpp"

#include <algorithm>
#include <cassert>

namespace cfdom {

FiniteFamily::FiniteFamily(Universe u, std::vector<Mask> members)
    : universe_(std::move(u)) {
    const Mask full = universe_.full_mask();
    for (Mask m : members) {
        if (!subset(m, full)) throw input_error("family member outside the carrier");
        if (std::find(members_.begin(), members_.end(), m) == members_.end())
            members_.push_back(m);
    }
}

std::optional<int> FiniteFamily::find(Mask m) const {
    auto it = std::find(members_.begin(), members_.end(), m);
    if (it == members_.end()) return std::nullopt;
    return static_cast<int>(it - members_.begin());
}

std::string CfViolation::str(const Universe& u) const {
    switch (kind) {
        case Kind::not_transitive:
            return "not-transitive " + u.name(chain[0]) + " " + u.name(chain[1]) + " " +
                   u.name(chain[2]);
        case Kind::empty_family:
            return "empty-family";
        case Kind::axiom:
            return "F=" + set_str(u, family_member) + " K=" + set_str(u, witness);
    }
    return "";
}

CfSpace::CfSpace(GaSpace ga, FiniteFamily family)
    : ga_(std::move(ga)), family_(std::move(family)) {
    if (!ga_.universe().same(family_.universe()))
        throw input_error("family carrier differs from the relation carrier");
    images_.reserve(family_.size());
    for (Mask f : family_.members()) images_.push_back(ga_.upper_mask(f));
}

namespace {

// A member F satisfies the covering axiom iff the single set K = upper(F) has
// a witness: some member G with upper(F) contained in upper(G) and G inside
// upper(F).  Witnesses propagate to all smaller K.
bool member_has_witness(const FiniteFamily& family, const std::vector<Mask>& images,
                        Mask image_f) {
    for (int g = 0; g < family.size(); ++g)
        if (subset(image_f, images[g]) && subset(family.member(g), image_f)) return true;
    return false;
}

}  // namespace

std::variant<CfSpace, CfViolation> CfSpace::validate(GaSpace ga, FiniteFamily family) {
    if (auto gap = ga.relation().transitivity_gap())
        return CfViolation{CfViolation::Kind::not_transitive, *gap, 0, 0};
    if (family.size() == 0)
        return CfViolation{CfViolation::Kind::empty_family, {0, 0, 0}, 0, 0};
    CfSpace space(std::move(ga), std::move(family));
    std::optional<Mask> worst;
    for (int i = 0; i < space.family_.size(); ++i) {
        if (member_has_witness(space.family_, space.images_, space.images_[i])) continue;
        Mask f = space.family_.member(i);
        if (!worst || set_lex_less(f, *worst)) worst = f;
    }
    if (worst)
        return CfViolation{CfViolation::Kind::axiom, {0, 0, 0}, *worst,
                           space.ga_.upper_mask(*worst)};
    return space;
}

CfSpace CfSpace::validate_or_throw(GaSpace ga, FiniteFamily family) {
    Universe u = ga.universe();
    auto r = validate(std::move(ga), std::move(family));
    if (auto* v = std::get_if<CfViolation>(&r))
        throw input_error("covering axiom fails: " + v->str(u));
    return std::get<CfSpace>(std::move(r));
}

CfSpace CfSpace::trusted(GaSpace ga, FiniteFamily family) {
    return CfSpace(std::move(ga), std::move(family));
}

bool CfSpace::is_cf_closed(Mask e, int max_bits) const {
    if (popcount(e) > max_bits) throw budget_error("closedness sweep too large");
    std::vector<Mask> usable;  // images of members lying inside e, image inside e
    for (int i = 0; i < family_.size(); ++i)
        if (subset(family_.member(i), e) && subset(images_[i], e))
            usable.push_back(images_[i]);
    bool ok = true;
    for_each_subset(e, [&](Mask k) {
        if (!ok) return;
        for (Mask img : usable)
            if (subset(k, img)) return;
        ok = false;
    });
    return ok;
}

bool CfSpace::is_closed_fast(Mask e) const {
    for (int i = 0; i < family_.size(); ++i)
        if (images_[i] == e && subset(family_.member(i), e)) return true;
    return false;
}

bool CfSpace::closed_by_directed_union(Mask e) const {
    std::vector<Mask> inside;
    for (int i = 0; i < family_.size(); ++i)
        if (subset(family_.member(i), e)) inside.push_back(images_[i]);
    if (inside.empty()) return false;
    Mask all = 0;
    for (Mask a : inside) all |= a;
    if (all != e) return false;
    for (Mask a : inside)
        for (Mask b : inside) {
            bool bounded = false;
            for (Mask c : inside)
                if (subset(a, c) && subset(b, c)) {
                    bounded = true;
                    break;
                }
            if (!bounded) return false;
        }
    return true;
}

bool CfSpace::closed_by_image(Mask e) const {
    for (Mask img : images_)
        if (img == e) return true;
    return false;
}

bool CfSpace::closed_by_cover(Mask e, int max_bits) const {
    if (popcount(e) > max_bits) throw budget_error("closedness sweep too large");
    std::vector<Mask> usable;
    for (int i = 0; i < family_.size(); ++i)
        if (subset(images_[i], e)) usable.push_back(images_[i]);
    bool ok = true;
    for_each_subset(e, [&](Mask k) {
        if (!ok) return;
        for (Mask img : usable)
            if (subset(k, img)) return;
        ok = false;
    });
    return ok;
}

std::vector<Mask> CfSpace::closed_sets() const {
    std::vector<Mask> out = images_;
    std::sort(out.begin(), out.end(), set_lex_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Mask> CfSpace::closed_sets_oracle(int max_bits) const {
    if (universe().size() > max_bits) throw budget_error("closed-set sweep too large");
    std::vector<Mask> out;
    for_each_subset(universe().full_mask(), [&](Mask e) {
        if (is_cf_closed(e, max_bits)) out.push_back(e);
    });
    std::sort(out.begin(), out.end(), set_lex_less);
    return out;
}

FinitePoset CfSpace::closed_poset() const {
    std::vector<Mask> sets = closed_sets();
    std::vector<std::string> labels;
    labels.reserve(sets.size());
    for (Mask s : sets) labels.push_back(set_str(universe(), s));
    std::vector<std::pair<int, int>> leq;
    for (int i = 0; i < static_cast<int>(sets.size()); ++i)
        for (int j = 0; j < static_cast<int>(sets.size()); ++j)
            if (subset(sets[i], sets[j])) leq.emplace_back(i, j);
    return FinitePoset::make_or_throw(std::move(labels), leq);
}

bool CfSpace::way_below_closed(Mask e1, Mask e2) const {
    if (!is_closed_fast(e1) || !is_closed_fast(e2))
        throw input_error("way_below_closed expects closed sets");
    for (int i = 0; i < family_.size(); ++i)
        if (subset(e1, images_[i]) && subset(family_.member(i), e2)) return true;
    return false;
}

bool CfSpace::compacts_match_basis() const {
    FinitePoset p = closed_poset();
    return p.compacts() == p.carrier_mask();
}

std::vector<std::pair<int, Mask>> axiom_violations_exhaustive(const GaSpace& ga,
                                                              const FiniteFamily& family,
                                                              int max_bits) {
    std::vector<Mask> images;
    images.reserve(family.size());
    for (Mask f : family.members()) images.push_back(ga.upper_mask(f));
    std::vector<int> order(family.size());
    for (int i = 0; i < family.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return set_lex_less(family.member(a), family.member(b));
    });
    std::vector<std::pair<int, Mask>> out;
    for (int i : order) {
        if (popcount(images[i]) > max_bits) throw budget_error("axiom sweep too large");
        for (Mask k : subsets_of(images[i], max_bits)) {
            bool hit = false;
            for (int g = 0; g < family.size() && !hit; ++g)
                hit = subset(k, images[g]) && subset(family.member(g), images[i]);
            if (!hit) out.emplace_back(i, k);
        }
    }
    return out;
}

namespace {

Universe select_universe(const Universe& u, Mask keep) {
    std::vector<std::string> names;
    for (int i = 0; i < u.size(); ++i)
        if (keep >> i & 1) names.push_back(u.name(i));
    return Universe(std::move(names));
}

void require_subfamily(const CfSpace& space, Mask v, const std::vector<Mask>& g) {
    for (Mask m : g) {
        if (!space.family().contains(m))
            throw input_error("subfamily member " + set_str(space.universe(), m) +
                              " is not in the family");
        if (!subset(m, v))
            throw input_error("subfamily member " + set_str(space.universe(), m) +
                              " lies outside the chosen carrier");
    }
}

}  // namespace

CfSpace principal_subspace(const CfSpace& space, Mask e) {
    if (!space.is_closed_fast(e)) throw input_error("principal subspace needs a closed set");
    Universe sub = select_universe(space.universe(), e);
    Relation rel = space.ga().relation().restricted(e, sub);
    std::vector<Mask> members;
    for (Mask f : space.family().members())
        if (subset(f, e)) members.push_back(compress(f, e));
    // Members inside a closed set keep their images inside it, so the
    // restriction always satisfies the covering axiom.
    return CfSpace::validate_or_throw(GaSpace(sub, std::move(rel)),
                                      FiniteFamily(sub, std::move(members)));
}

std::variant<CfSpace, CfViolation> restrict_subspace(const CfSpace& space, Mask v,
                                                     const std::vector<Mask>& g) {
    if (!subset(v, space.universe().full_mask()))
        throw input_error("carrier outside the universe");
    require_subfamily(space, v, g);
    Universe sub = select_universe(space.universe(), v);
    Relation rel = space.ga().relation().restricted(v, sub);
    std::vector<Mask> members;
    members.reserve(g.size());
    for (Mask m : g) members.push_back(compress(m, v));
    return CfSpace::validate(GaSpace(sub, std::move(rel)), FiniteFamily(sub, std::move(members)));
}

std::optional<std::pair<Mask, Mask>> find_dense_violation(const CfSpace& space,
                                                          const std::vector<Mask>& g) {
    std::optional<Mask> worst;
    for (int i = 0; i < space.family().size(); ++i) {
        Mask image_f = space.image(i);
        bool hit = false;
        for (Mask m : g) {
            if (subset(image_f, space.upper(m)) && subset(m, image_f)) {
                hit = true;
                break;
            }
        }
        if (hit) continue;
        Mask f = space.family().member(i);
        if (!worst || set_lex_less(f, *worst)) worst = f;
    }
    if (!worst) return std::nullopt;
    return std::make_pair(*worst, space.upper(*worst));
}

bool is_dense_subspace(const CfSpace& space, Mask v, const std::vector<Mask>& g) {
    require_subfamily(space, v, g);
    return !find_dense_violation(space, g).has_value();
}

DenseIso dense_iso(const CfSpace& space, Mask v, const std::vector<Mask>& g) {
    DenseIso out;
    require_subfamily(space, v, g);
    if (auto viol = find_dense_violation(space, g)) {
        out.failure = "not dense: F=" + set_str(space.universe(), viol->first) +
                      " K=" + set_str(space.universe(), viol->second);
        return out;
    }
    auto restricted = restrict_subspace(space, v, g);
    if (auto* cv = std::get_if<CfViolation>(&restricted)) {
        out.failure = "subspace violates the covering axiom: " +
                      cv->str(select_universe(space.universe(), v));
        return out;
    }
    CfSpace sub = std::get<CfSpace>(std::move(restricted));

    std::vector<Mask> parent = space.closed_sets();
    std::vector<Mask> traces;
    traces.reserve(parent.size());
    for (Mask e : parent) {
        Mask t = compress(e & v, v);
        out.pairs.emplace_back(e, t);
        traces.push_back(t);
    }
    std::vector<Mask> sub_closed = sub.closed_sets();
    std::vector<Mask> sorted_traces = traces;
    std::sort(sorted_traces.begin(), sorted_traces.end(), set_lex_less);

    if (std::adjacent_find(sorted_traces.begin(), sorted_traces.end()) != sorted_traces.end()) {
        out.failure = "trace map is not injective";
        return out;
    }
    if (sorted_traces != sub_closed) {
        out.failure = "traces differ from the closed sets of the subspace";
        return out;
    }
    for (size_t i = 0; i < parent.size(); ++i)
        for (size_t j = 0; j < parent.size(); ++j) {
            bool big = subset(parent[i], parent[j]);
            bool small = subset(traces[i], traces[j]);
            if (big != small) {
                out.failure = "trace map does not preserve and reflect inclusion";
                return out;
            }
        }
    out.ok = true;
    out.sub = std::move(sub);
    return out;
}

}  // namespace cfdom
