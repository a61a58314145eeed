#include "cfdom/classify.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace cfdom {

std::vector<Mask> join_saturation(const FiniteFamily& family) {
    constexpr std::size_t kCap = 1u << 16;
    std::set<Mask> cur(family.members().begin(), family.members().end());
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Mask> snapshot(cur.begin(), cur.end());
        for (Mask a : snapshot)
            for (Mask b : family.members()) {
                if (cur.insert(a | b).second) grew = true;
                if (cur.size() > kCap) throw budget_error("join saturation too large");
            }
    }
    std::vector<Mask> out(cur.begin(), cur.end());
    std::sort(out.begin(), out.end(), set_lex_less);
    return out;
}

namespace {

// Everything here depends on the query only through (upper(M), upper(F)).
struct FamilyFlags {
    bool s = false;
    bool s_star = false;
    bool sigma = false;
};

bool sandwich(const std::vector<Mask>& images, int g, Mask upper_m, Mask image_f) {
    return subset(upper_m, images[g]) && subset(images[g], image_f);
}

// (sL-2): upper(G) is contained in every qualifying image, so all of S(M,F)
// shares a single image value.
bool image_least_in(const std::vector<Mask>& images, int g, Mask upper_m, Mask image_f) {
    for (int j = 0; j < static_cast<int>(images.size()); ++j)
        if (sandwich(images, j, upper_m, image_f) && !subset(images[g], images[j]))
            return false;
    return true;
}

bool image_globally_least(const std::vector<Mask>& images, int g, Mask upper_m) {
    for (int j = 0; j < static_cast<int>(images.size()); ++j)
        if (subset(upper_m, images[j]) && !subset(images[g], images[j])) return false;
    return true;
}

FamilyFlags family_flags(const CfSpace& sp, Mask upper_m, Mask image_f) {
    const auto& images = sp.images();
    FamilyFlags out;
    for (int g = 0; g < static_cast<int>(images.size()); ++g) {
        if (!sandwich(images, g, upper_m, image_f)) continue;
        if (image_least_in(images, g, upper_m, image_f)) {
            out.s = true;
            if (subset(sp.family().member(g), image_f)) out.s_star = true;
        }
        if (image_globally_least(images, g, upper_m)) out.sigma = true;
        if (out.s_star && out.sigma) break;
    }
    return out;
}

}  // namespace

WitnessFamilies witness_families(const CfSpace& space, Mask m, Mask f) {
    auto fi = space.family().find(f);
    if (!fi) throw input_error("query F must be a family member");
    if (m != 0) {
        auto sat = join_saturation(space.family());
        if (std::find(sat.begin(), sat.end(), m) == sat.end())
            throw input_error("query M must lie in the join saturation or be empty");
    }
    const Mask upper_m = space.upper(m);
    const Mask image_f = space.image(*fi);
    const auto& images = space.images();
    WitnessFamilies out;
    for (int g = 0; g < space.family().size(); ++g) {
        if (!sandwich(images, g, upper_m, image_f)) continue;
        if (image_least_in(images, g, upper_m, image_f)) {
            out.s.push_back(g);
            if (subset(space.family().member(g), image_f)) out.s_star.push_back(g);
        }
        if (image_globally_least(images, g, upper_m)) out.sigma.push_back(g);
    }
    return out;
}

const char* space_flag_name(SpaceFlag f) {
    switch (f) {
        case SpaceFlag::topological: return "topological";
        case SpaceFlag::ultra_sl: return "ultra_sl";
        case SpaceFlag::sl: return "sl";
        case SpaceFlag::l: return "l";
        case SpaceFlag::bc: return "bc";
    }
    return "";
}

bool SpaceClassReport::flag(SpaceFlag f) const {
    switch (f) {
        case SpaceFlag::topological: return topological;
        case SpaceFlag::ultra_sl: return ultra_sl;
        case SpaceFlag::sl: return sl;
        case SpaceFlag::l: return l;
        case SpaceFlag::bc: return bc;
    }
    return false;
}

SpaceClassReport classify_space(const CfSpace& space) {
    SpaceClassReport rep;
    rep.topological = space.is_topological();

    const auto& fam = space.family();
    std::vector<Mask> sat = join_saturation(fam);
    std::vector<Mask> sat0 = sat;  // range for l and bc: saturation plus ∅
    if (sat0.empty() || sat0.front() != 0) sat0.insert(sat0.begin(), 0);

    std::vector<int> forder(fam.size());
    std::iota(forder.begin(), forder.end(), 0);
    std::sort(forder.begin(), forder.end(),
              [&](int a, int b) { return set_lex_less(fam.member(a), fam.member(b)); });

    std::map<std::pair<Mask, Mask>, FamilyFlags> memo;
    auto flags_for = [&](Mask upper_m, Mask image_f) -> const FamilyFlags& {
        auto [it, fresh] = memo.try_emplace({upper_m, image_f});
        if (fresh) it->second = family_flags(space, upper_m, image_f);
        return it->second;
    };

    // Each flag scans its own query range in set order and records the first
    // failing query as the witness.
    rep.ultra_sl = true;
    for (Mask m : sat) {
        const Mask um = space.upper(m);
        for (int f : forder) {
            if (!subset(um, space.image(f))) continue;
            if (flags_for(um, space.image(f)).s_star) continue;
            rep.ultra_sl = false;
            rep.witnesses[SpaceFlag::ultra_sl] = {m, fam.member(f)};
            break;
        }
        if (!rep.ultra_sl) break;
    }

    auto scan = [&](const std::vector<Mask>& range, bool FamilyFlags::* field,
                    SpaceFlag flag, bool& value) {
        value = true;
        for (Mask m : range) {
            for (int f : forder) {
                if (!subset(m, space.image(f))) continue;
                if (flags_for(space.upper(m), space.image(f)).*field) continue;
                value = false;
                rep.witnesses[flag] = {m, fam.member(f)};
                return;
            }
        }
    };
    scan(sat, &FamilyFlags::s, SpaceFlag::sl, rep.sl);
    scan(sat0, &FamilyFlags::s, SpaceFlag::l, rep.l);
    scan(sat0, &FamilyFlags::sigma, SpaceFlag::bc, rep.bc);
    return rep;
}

IdealOps::IdealOps(CfSpace space)
    : space_(std::move(space)), report_(classify_space(space_)), n_(space_.family().size()) {
    const auto& fam = space_.family();
    const auto& images = space_.images();
    s_image_.assign(static_cast<std::size_t>(n_) * n_ * n_, 0);
    triple_ok_.assign(s_image_.size(), 0);
    std::map<std::pair<Mask, Mask>, Mask> memo;  // (upper(Fi∪Fj), upper(F3)) -> ∪ S images
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            for (int k = 0; k < n_; ++k) {
                if (!subset(fam.member(i) | fam.member(j), images[k])) continue;
                const Mask um = images[i] | images[j];
                auto [it, fresh] = memo.try_emplace({um, images[k]});
                if (fresh) {
                    Mask value = 0;
                    for (int g = 0; g < n_; ++g)
                        if (sandwich(images, g, um, images[k]) &&
                            image_least_in(images, g, um, images[k]))
                            value |= images[g];
                    it->second = value;
                }
                const std::size_t idx =
                    (static_cast<std::size_t>(i) * n_ + j) * n_ + k;
                s_image_[idx] = it->second;
                triple_ok_[idx] = 1;
            }
}

Mask IdealOps::sup_in_ideal(Mask h1, Mask h2, Mask e) const {
    if (!report_.sl) throw input_error("supremum construction needs an sl space");
    if (!space_.is_closed_fast(h1) || !space_.is_closed_fast(h2) || !space_.is_closed_fast(e))
        throw input_error("supremum construction expects closed sets");
    if (!subset(h1 | h2, e)) throw input_error("bounding set must contain both arguments");
    if ((h1 | h2) == 0) return 0;
    const auto& fam = space_.family();
    Mask h = 0;
    for (int i = 0; i < n_; ++i) {
        if (!subset(fam.member(i), h1)) continue;
        for (int j = 0; j < n_; ++j) {
            if (!subset(fam.member(j), h2)) continue;
            for (int k = 0; k < n_; ++k) {
                if (!subset(fam.member(k), e)) continue;
                const std::size_t idx =
                    (static_cast<std::size_t>(i) * n_ + j) * n_ + k;
                if (triple_ok_[idx]) h |= s_image_[idx];
            }
        }
    }
    return h;
}

Mask IdealOps::least_in_ideal(Mask e) const {
    if (!report_.l) throw input_error("least-element construction needs an l space");
    if (e == 0) {
        if (space_.family().contains(0)) return 0;
        throw input_error("empty set is closed only when the family contains it");
    }
    if (!space_.is_closed_fast(e)) throw input_error("least-element construction expects a closed set");
    const auto& fam = space_.family();
    const auto& images = space_.images();
    std::optional<int> pick;
    for (int i = 0; i < n_; ++i)
        if (subset(fam.member(i), e) &&
            (!pick || set_lex_less(fam.member(i), fam.member(*pick))))
            pick = i;
    // e closed guarantees a member inside it
    const Mask image_f = images[*pick];
    std::optional<Mask> best;
    for (int g = 0; g < n_; ++g) {
        if (!subset(images[g], image_f)) continue;
        if (!image_least_in(images, g, 0, image_f)) continue;
        best = images[g];  // S(∅,F) members share one image
        break;
    }
    return *best;
}

Mask supremum_in_ideal(const CfSpace& space, Mask h1, Mask h2, Mask e) {
    return IdealOps(space).sup_in_ideal(h1, h2, e);
}

Mask least_in_ideal(const CfSpace& space, Mask e) {
    return IdealOps(space).least_in_ideal(e);
}

bool sl_cusl_criterion(const CfSpace& space) {
    if (!space.is_topological())
        throw input_error("the sl-cusl criterion applies to preorder spaces");
    return classify_poset(space.closed_poset()).sl_cusl;
}

}  // namespace cfdom
