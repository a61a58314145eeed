#include "cfdom/morphisms.hpp"

#include <algorithm>
#include <set>

namespace cfdom {

bool ApproximableRelation::has(int f, int g) const {
    return std::binary_search(arrows_.begin(), arrows_.end(), std::make_pair(f, g));
}

namespace {

std::string pair_str(const CfSpace& src, const CfSpace& dst, int f, int g) {
    return "F=" + set_str(src.universe(), src.family().member(f)) +
           " G=" + set_str(dst.universe(), dst.family().member(g));
}

}  // namespace

std::variant<ApproximableRelation, std::vector<AxiomViolation>> validate_approximable(
    CfSpace src, CfSpace dst, std::vector<std::pair<int, int>> arrows) {
    const int ns = src.family().size();
    const int nd = dst.family().size();
    for (auto [f, g] : arrows)
        if (f < 0 || f >= ns || g < 0 || g >= nd)
            throw input_error("arrow references a member outside either family");
    std::sort(arrows.begin(), arrows.end());
    arrows.erase(std::unique(arrows.begin(), arrows.end()), arrows.end());

    std::vector<std::vector<char>> has(ns, std::vector<char>(nd, 0));
    for (auto [f, g] : arrows) has[f][g] = 1;

    std::vector<AxiomViolation> bad;

    for (int f = 0; f < ns; ++f) {
        if (std::none_of(has[f].begin(), has[f].end(), [](char c) { return c != 0; })) {
            bad.push_back({1, "no arrow out of F=" + set_str(src.universe(), src.family().member(f))});
            break;
        }
    }

    bool done2 = false;
    for (int f = 0; f < ns && !done2; ++f)
        for (int fp = 0; fp < ns && !done2; ++fp) {
            if (!subset(src.family().member(f), src.image(fp))) continue;
            for (int g = 0; g < nd && !done2; ++g)
                if (has[f][g] && !has[fp][g]) {
                    bad.push_back({2, pair_str(src, dst, f, g) + " F'=" +
                                          set_str(src.universe(), src.family().member(fp))});
                    done2 = true;
                }
        }

    bool done3 = false;
    for (int f = 0; f < ns && !done3; ++f)
        for (int g = 0; g < nd && !done3; ++g) {
            if (!has[f][g]) continue;
            for (int gp = 0; gp < nd && !done3; ++gp)
                if (subset(dst.family().member(gp), dst.image(g)) && !has[f][gp]) {
                    bad.push_back({3, pair_str(src, dst, f, g) + " G'=" +
                                          set_str(dst.universe(), dst.family().member(gp))});
                    done3 = true;
                }
        }

    bool done4 = false;
    for (int f = 0; f < ns && !done4; ++f)
        for (int g = 0; g < nd && !done4; ++g) {
            if (!has[f][g]) continue;
            bool found = false;
            for (int fp = 0; fp < ns && !found; ++fp) {
                if (!subset(src.family().member(fp), src.image(f))) continue;
                for (int gp = 0; gp < nd && !found; ++gp)
                    found = has[fp][gp] && subset(dst.family().member(g), dst.image(gp));
            }
            if (!found) {
                bad.push_back({4, "no interpolant for " + pair_str(src, dst, f, g)});
                done4 = true;
            }
        }

    bool done5 = false;
    for (int f = 0; f < ns && !done5; ++f)
        for (int g1 = 0; g1 < nd && !done5; ++g1) {
            if (!has[f][g1]) continue;
            for (int g2 = g1; g2 < nd && !done5; ++g2) {
                if (!has[f][g2]) continue;
                const Mask need = dst.family().member(g1) | dst.family().member(g2);
                bool found = false;
                for (int g3 = 0; g3 < nd && !found; ++g3)
                    found = has[f][g3] && subset(need, dst.image(g3));
                if (!found) {
                    bad.push_back({5, pair_str(src, dst, f, g1) + " G2=" +
                                          set_str(dst.universe(), dst.family().member(g2))});
                    done5 = true;
                }
            }
        }

    if (!bad.empty()) return bad;
    return ApproximableRelation(std::move(src), std::move(dst), std::move(arrows));
}

ApproximableRelation identity_relation(const CfSpace& space) {
    std::vector<std::pair<int, int>> arrows;
    const int n = space.family().size();
    for (int f = 0; f < n; ++f)
        for (int g = 0; g < n; ++g)
            if (subset(space.family().member(g), space.image(f))) arrows.emplace_back(f, g);
    auto r = validate_approximable(space, space, std::move(arrows));
    if (auto* bad = std::get_if<std::vector<AxiomViolation>>(&r))
        throw input_error("identity relation failed axiom " + std::to_string(bad->front().axiom) +
                          ": " + bad->front().detail);
    return std::get<ApproximableRelation>(std::move(r));
}

std::variant<ApproximableRelation, std::vector<AxiomViolation>> compose(
    const ApproximableRelation& first, const ApproximableRelation& second) {
    if (!(first.dst() == second.src()))
        throw input_error("composition needs matching middle spaces");
    std::set<std::pair<int, int>> pairs;
    for (auto [f, g] : first.arrows())
        for (auto [g2, h] : second.arrows())
            if (g == g2) pairs.emplace(f, h);
    return validate_approximable(first.src(), second.dst(),
                                 std::vector<std::pair<int, int>>(pairs.begin(), pairs.end()));
}

Mask apply_relation(const ApproximableRelation& theta, Mask e) {
    Mask h = 0;
    for (auto [f, g] : theta.arrows())
        if (subset(theta.src().family().member(f), e)) h |= theta.dst().image(g);
    return h;
}

std::vector<std::pair<Mask, Mask>> induced_map(const ApproximableRelation& theta) {
    std::vector<std::pair<Mask, Mask>> out;
    for (Mask e : theta.src().closed_sets()) out.emplace_back(e, apply_relation(theta, e));
    return out;
}

std::variant<ApproximableRelation, std::vector<AxiomViolation>> relation_for_map(
    const CfSpace& src, const CfSpace& dst, const std::function<Mask(Mask)>& f) {
    std::vector<std::pair<int, int>> arrows;
    for (int i = 0; i < src.family().size(); ++i) {
        const Mask value = f(src.image(i));
        for (int g = 0; g < dst.family().size(); ++g)
            if (subset(dst.image(g), value)) arrows.emplace_back(i, g);
    }
    return validate_approximable(src, dst, std::move(arrows));
}

}  // namespace cfdom
