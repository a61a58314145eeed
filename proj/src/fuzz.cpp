#include "cfdom/fuzz.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "cfdom/classify.hpp"
#include "cfdom/io.hpp"

namespace cfdom {

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) { return bound ? next() % bound : 0; }

bool SplitMix64::chance(double p) { return static_cast<double>(next() >> 11) * 0x1.0p-53 < p; }

FinitePoset gen_poset(const GenParams& params, SplitMix64& rng) {
    const int n = 1 + static_cast<int>(rng.below(std::max(1, params.max_universe)));
    // Edges point forward along a random total order, so closure never cycles.
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
    std::vector<std::pair<int, int>> leqs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.chance(params.density)) leqs.emplace_back(perm[i], perm[j]);
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
    return FinitePoset::make_or_throw(std::move(labels), leqs);
}

GaSpace gen_ga_space(const GenParams& params, SplitMix64& rng) {
    const int n = 1 + static_cast<int>(rng.below(std::max(1, params.max_universe)));
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
    Universe u{std::move(names)};
    std::vector<Mask> rows(n, 0);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (rng.chance(params.density)) rows[x] |= Mask{1} << y;
    return GaSpace{u, Relation{u, std::move(rows)}};
}

std::optional<CfSpace> gen_cf_space(const GenParams& params, SplitMix64& rng) {
    constexpr int kResampleLimit = 40;
    for (int attempt = 0; attempt < kResampleLimit; ++attempt) {
        const int n = 1 + static_cast<int>(rng.below(std::max(1, params.max_universe)));
        std::vector<std::string> names;
        for (int i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
        Universe u{std::move(names)};
        std::vector<Mask> rows(n, 0);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (rng.chance(params.density)) rows[x] |= Mask{1} << y;
        Relation rel{u, std::move(rows)};
        if (params.mode == GenMode::preorder) rel = rel.closed_reflexively();
        rel = rel.closed_transitively();
        GaSpace ga{u, rel};
        const int fcount = 1 + static_cast<int>(rng.below(std::max(1, params.max_family)));
        std::vector<Mask> members;
        for (int i = 0; i < fcount; ++i) {
            Mask m = 0;
            for (int x = 0; x < n; ++x)
                if (rng.chance(0.4)) m |= Mask{1} << x;
            members.push_back(m);
        }
        // Each added witness fixes its violating member for good (the witness
        // reproduces the member's image), so the rounds are bounded by the
        // initial family size.
        bool stuck = false;
        for (int round = 0; round <= fcount && !stuck; ++round) {
            auto v = CfSpace::validate(ga, FiniteFamily{u, members});
            if (auto* sp = std::get_if<CfSpace>(&v)) return std::move(*sp);
            const Mask image_f = ga.upper_mask(std::get<CfViolation>(v).family_member);
            stuck = true;
            for (Mask g : subsets_size_lex(image_f))
                if (subset(image_f, ga.upper_mask(g))) {
                    members.push_back(g);
                    stuck = false;
                    break;
                }
        }
    }
    return std::nullopt;
}

std::vector<int> gen_monotone_map(const FinitePoset& p, const FinitePoset& q, SplitMix64& rng) {
    const int n = p.size();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const int da = popcount(p.down_set(a)), db = popcount(p.down_set(b));
        return da != db ? da < db : a < b;
    });
    std::vector<int> img(n, 0);
    for (int x : order) {
        Mask cand = q.carrier_mask();
        for (int y = 0; y < n; ++y)
            if (y != x && p.leq(y, x)) cand &= q.up_set(img[y]);
        if (!cand) {  // no common upper bound left; settle for a constant map
            return std::vector<int>(n, lowest_bit(q.maximal_elements()));
        }
        Mask rest = cand;
        for (std::uint64_t skip = rng.below(popcount(cand)); skip; --skip) rest &= rest - 1;
        img[x] = lowest_bit(rest);
    }
    return img;
}

namespace {

const char* yn(bool b) { return b ? "yes" : "no"; }

std::string space_text(const CfSpace& sp) { return print_space(to_space_file(sp)); }

std::string ga_text(const GaSpace& ga) {
    SpaceFile f;
    f.universe = ga.universe();
    f.pairs = ga.relation().pairs();
    return print_space(f);
}

std::string poset_text(const FinitePoset& p) {
    PosetFile f;
    f.labels = p.labels();
    for (int a = 0; a < p.size(); ++a)
        for (int b = 0; b < p.size(); ++b)
            if (a != b && p.leq(a, b)) f.leqs.emplace_back(a, b);
    return print_poset_file(f);
}

std::string family_str(const Universe& u, const std::vector<Mask>& sets) {
    std::string s = "[";
    for (std::size_t i = 0; i < sets.size(); ++i) {
        if (i) s += ' ';
        s += set_str(u, sets[i]);
    }
    return s + "]";
}

std::string flags_line(const SpaceClassReport& rep) {
    std::string s;
    for (SpaceFlag f : {SpaceFlag::topological, SpaceFlag::ultra_sl, SpaceFlag::sl, SpaceFlag::l,
                        SpaceFlag::bc}) {
        if (!s.empty()) s += ' ';
        s += std::string(space_flag_name(f)) + "=" + yn(rep.flag(f));
    }
    return s;
}

template <class Fn>
void run_law(std::vector<Finding>& out, const std::string& text, const char* name, Fn&& fn) {
    std::optional<std::string> verdict;
    try {
        verdict = fn();
    } catch (const std::exception& ex) {
        verdict = std::string("exception: ") + ex.what();
    }
    if (verdict) out.push_back(Finding{name, text, *verdict, false});
}

}  // namespace

std::vector<Finding> check_ga_laws(const GaSpace& ga) {
    std::vector<Finding> out;
    const int n = ga.universe().size();
    if (n > 12) return out;
    const std::string text = ga_text(ga);
    const Universe& u = ga.universe();
    const Mask full = u.full_mask();

    run_law(out, text, "upper-union-preservation", [&]() -> std::optional<std::string> {
        for (Mask a = 0; a <= full; ++a) {
            Mask singles = 0;
            for (Mask rest = a; rest; rest &= rest - 1)
                singles |= ga.upper_mask(Mask{1} << lowest_bit(rest));
            if (ga.upper_mask(a) != singles)
                return "upper(" + set_str(u, a) + ") is not the union of its point images";
        }
        if (n <= 8)
            for (Mask a = 0; a <= full; ++a)
                for (Mask b = 0; b <= full; ++b)
                    if (ga.upper_mask(a | b) != (ga.upper_mask(a) | ga.upper_mask(b)))
                        return "upper(A∪B) != upper(A)∪upper(B) at A=" + set_str(u, a) +
                               " B=" + set_str(u, b);
        return std::nullopt;
    });

    run_law(out, text, "upper-lower-duality", [&]() -> std::optional<std::string> {
        for (Mask a = 0; a <= full; ++a)
            if (ga.lower_mask(a) != (full & ~ga.upper_mask(full & ~a)))
                return "lower(" + set_str(u, a) + ") breaks the complement duality";
        return std::nullopt;
    });

    run_law(out, text, "point-law", [&]() -> std::optional<std::string> {
        for (int x = 0; x < n; ++x)
            if (ga.upper_mask(Mask{1} << x) != ga.pred_mask(x))
                return "upper({" + u.name(x) + "}) != predecessors(" + u.name(x) + ")";
        return std::nullopt;
    });

    run_law(out, text, "reflexive-iff-expansive", [&]() -> std::optional<std::string> {
        bool expansive = true;
        Mask bad = 0;
        for (Mask a = 0; a <= full && expansive; ++a)
            if (!subset(a, ga.upper_mask(a))) {
                expansive = false;
                bad = a;
            }
        if (ga.is_reflexive() != expansive)
            return std::string("reflexivity=") + yn(ga.is_reflexive()) +
                   " but expansiveness=" + yn(expansive) +
                   (expansive ? "" : " at " + set_str(u, bad));
        return std::nullopt;
    });

    run_law(out, text, "transitive-iff-idempotent", [&]() -> std::optional<std::string> {
        bool contracting = true;
        Mask bad = 0;
        for (Mask a = 0; a <= full && contracting; ++a)
            if (!subset(ga.upper_mask(ga.upper_mask(a)), ga.upper_mask(a))) {
                contracting = false;
                bad = a;
            }
        if (ga.is_transitive() != contracting)
            return std::string("transitivity=") + yn(ga.is_transitive()) +
                   " but upper∘upper ⊆ upper is " + yn(contracting) +
                   (contracting ? "" : " failing at " + set_str(u, bad));
        return std::nullopt;
    });

    run_law(out, text, "transitive-monotone-law", [&]() -> std::optional<std::string> {
        if (!ga.is_transitive() || n > 8) return std::nullopt;
        for (Mask a = 0; a <= full; ++a) {
            const Mask ua = ga.upper_mask(a);
            std::optional<std::string> fail;
            for_each_subset(ua, [&](Mask b) {
                if (!fail && !subset(ga.upper_mask(b), ua))
                    fail = "B=" + set_str(u, b) + " inside upper(" + set_str(u, a) +
                           ") but upper(B) escapes it";
            });
            if (fail) return fail;
        }
        return std::nullopt;
    });

    run_law(out, text, "preorder-closure-operator", [&]() -> std::optional<std::string> {
        if (!ga.is_preorder()) return std::nullopt;
        for (Mask a = 0; a <= full; ++a) {
            const Mask ua = ga.upper_mask(a);
            if (!subset(a, ua) || ga.upper_mask(ua) != ua)
                return "upper is not a closure operator at " + set_str(u, a);
        }
        return std::nullopt;
    });

    return out;
}

std::vector<Finding> check_space_laws(const CfSpace& space) {
    std::vector<Finding> out;
    const Universe& u = space.universe();
    const int n = u.size();
    if (n > 12) return out;
    const std::string text = space_text(space);
    const Mask full = u.full_mask();
    const FiniteFamily& fam = space.family();
    const std::vector<Mask> closed = space.closed_sets();
    const SpaceClassReport rep = classify_space(space);

    run_law(out, text, "closed-oracle", [&]() -> std::optional<std::string> {
        auto oracle = space.closed_sets_oracle();
        if (oracle == closed) return std::nullopt;
        return "images " + family_str(u, closed) + " vs sweep " + family_str(u, oracle);
    });

    run_law(out, text, "closedness-four-way", [&]() -> std::optional<std::string> {
        for (Mask e = 0; e <= full; ++e) {
            const bool definitional = space.is_cf_closed(e);
            const bool fast = space.is_closed_fast(e);
            const bool directed = space.closed_by_directed_union(e);
            const bool image = space.closed_by_image(e);
            const bool cover = space.closed_by_cover(e);
            if (definitional != fast || definitional != directed || definitional != image ||
                definitional != cover)
                return "characterizations split at " + set_str(u, e) + ": definitional=" +
                       yn(definitional) + " fast=" + yn(fast) + " directed-union=" +
                       yn(directed) + " image=" + yn(image) + " cover=" + yn(cover);
        }
        return std::nullopt;
    });

    run_law(out, text, "closed-poset-dcpo", [&]() -> std::optional<std::string> {
        if (closed.size() > 12) return std::nullopt;
        FinitePoset cp = space.closed_poset();
        for (Mask d : cp.directed_subsets())
            if (!cp.sup(d))
                return "directed family of closed sets without a supremum (" +
                       std::to_string(popcount(d)) + " members)";
        return std::nullopt;
    });

    run_law(out, text, "way-below-agreement", [&]() -> std::optional<std::string> {
        FinitePoset cp = space.closed_poset();
        const int c = cp.size();
        if (c > 12) return std::nullopt;
        const auto definitional = way_below_matrix_definitional(cp);
        for (int i = 0; i < c; ++i)
            for (int j = 0; j < c; ++j) {
                const bool member = space.way_below_closed(closed[i], closed[j]);
                const bool incl = subset(closed[i], closed[j]);
                if (member != incl || member != definitional[i][j])
                    return set_str(u, closed[i]) + " vs " + set_str(u, closed[j]) +
                           ": member-form=" + yn(member) + " inclusion=" + yn(incl) +
                           " directed-sup-form=" + yn(definitional[i][j]);
            }
        return std::nullopt;
    });

    run_law(out, text, "compacts-match-basis", [&]() -> std::optional<std::string> {
        if (!rep.topological) return std::nullopt;
        if (!space.compacts_match_basis())
            return std::string("preorder space whose member images miss a compact closed set");
        return std::nullopt;
    });

    run_law(out, text, "classification-implications", [&]() -> std::optional<std::string> {
        if (rep.ultra_sl && !rep.sl) return std::string("ultra_sl without sl");
        if (rep.bc && !rep.l) return std::string("bc without l");
        if (rep.l && !rep.sl) return std::string("l without sl");
        if (rep.topological && rep.ultra_sl != rep.sl)
            return std::string("preorder space with ultra_sl=") + yn(rep.ultra_sl) +
                   " but sl=" + yn(rep.sl);
        return std::nullopt;
    });

    run_law(out, text, "representation-theorems", [&]() -> std::optional<std::string> {
        auto pr = classify_poset(space.closed_poset());
        if (rep.sl && !pr.sl_domain) return std::string("sl space, closed poset not an sl-domain");
        if (rep.l && !pr.l_domain) return std::string("l space, closed poset not an l-domain");
        if (rep.bc && !pr.bc_domain) return std::string("bc space, closed poset not a bc-domain");
        if (rep.topological && rep.sl && !(pr.algebraic && pr.sl_domain))
            return std::string("preorder sl space, closed poset not an algebraic sl-domain");
        return std::nullopt;
    });

    run_law(out, text, "sl-cusl-agreement", [&]() -> std::optional<std::string> {
        if (!rep.topological) return std::nullopt;
        const bool crit = sl_cusl_criterion(space);
        if (crit != rep.sl)
            return std::string("image-poset sl-cusl=") + yn(crit) + " but sl=" + yn(rep.sl);
        return std::nullopt;
    });

    // Witness-family laws share one cache of S/S*/Σ per query.
    std::vector<Mask> sat0 = join_saturation(fam);
    if (sat0.empty() || sat0.front() != 0) sat0.insert(sat0.begin(), 0);
    const int ms = static_cast<int>(sat0.size());
    std::vector<Mask> um(ms);
    for (int i = 0; i < ms; ++i) um[i] = space.upper(sat0[i]);
    std::map<std::pair<int, int>, WitnessFamilies> wf_memo;
    auto wf_at = [&](int mi, int fi) -> const WitnessFamilies& {
        auto [it, fresh] = wf_memo.try_emplace({mi, fi});
        if (fresh) it->second = witness_families(space, sat0[mi], fam.member(fi));
        return it->second;
    };
    auto query_str = [&](int mi, int fi) {
        return "M=" + set_str(u, sat0[mi]) + " F=" + set_str(u, fam.member(fi));
    };
    const bool big = ms > 300;  // pairwise-M loops get skipped on huge saturations

    run_law(out, text, "witness-family-uniqueness", [&]() -> std::optional<std::string> {
        for (int mi = 0; mi < ms; ++mi)
            for (int fi = 0; fi < fam.size(); ++fi) {
                const WitnessFamilies& wf = wf_at(mi, fi);
                if (!std::includes(wf.s.begin(), wf.s.end(), wf.s_star.begin(), wf.s_star.end()))
                    return "S* escapes S at " + query_str(mi, fi);
                if (!std::includes(wf.s.begin(), wf.s.end(), wf.sigma.begin(), wf.sigma.end()))
                    return "Σ escapes S at " + query_str(mi, fi);
                if (!wf.s.empty()) {
                    const Mask image = space.image(wf.s.front());
                    std::vector<int> same;
                    for (int g = 0; g < fam.size(); ++g)
                        if (space.image(g) == image) same.push_back(g);
                    if (wf.s != same)
                        return "S is not the full image class of " + set_str(u, image) +
                               " at " + query_str(mi, fi);
                }
                if (!wf.sigma.empty()) {
                    const Mask image = space.image(wf.sigma.front());
                    std::vector<int> same;
                    for (int g = 0; g < fam.size(); ++g)
                        if (space.image(g) == image) same.push_back(g);
                    if (wf.sigma != same)
                        return "Σ is not the full image class of " + set_str(u, image) +
                               " at " + query_str(mi, fi);
                }
                if (rep.topological && wf.s != wf.s_star)
                    return "preorder space with S != S* at " + query_str(mi, fi);
            }
        return std::nullopt;
    });

    run_law(out, text, "witness-family-stability", [&]() -> std::optional<std::string> {
        for (int mi = 0; mi < ms; ++mi)
            for (int f1 = 0; f1 < fam.size(); ++f1) {
                if (!subset(um[mi], space.image(f1))) continue;
                for (int f2 = 0; f2 < fam.size(); ++f2) {
                    if (!subset(space.image(f1), space.image(f2))) continue;
                    const auto& a = wf_at(mi, f1);
                    const auto& b = wf_at(mi, f2);
                    if (!a.s.empty() && !b.s.empty() && a.s != b.s)
                        return "S(M,F1) != S(M,F2) under image(F1) ⊆ image(F2), " +
                               query_str(mi, f1) + " / F2=" + set_str(u, fam.member(f2));
                }
            }
        return std::nullopt;
    });

    run_law(out, text, "witness-family-monotone", [&]() -> std::optional<std::string> {
        if (big) return std::nullopt;
        for (int m1 = 0; m1 < ms; ++m1)
            for (int m2 = 0; m2 < ms; ++m2) {
                if (!subset(um[m1], um[m2])) continue;
                for (int fi = 0; fi < fam.size(); ++fi) {
                    if (!subset(um[m2], space.image(fi))) continue;
                    const auto& a = wf_at(m1, fi);
                    const auto& b = wf_at(m2, fi);
                    if (!a.s.empty() && !b.s.empty() &&
                        !subset(space.image(a.s.front()), space.image(b.s.front())))
                        return "S images not monotone in M: " + query_str(m1, fi) +
                               " vs M2=" + set_str(u, sat0[m2]);
                }
            }
        return std::nullopt;
    });

    run_law(out, text, "witness-family-common-bound", [&]() -> std::optional<std::string> {
        if (big) return std::nullopt;
        for (int mi = 0; mi < ms; ++mi)
            for (int f1 = 0; f1 < fam.size(); ++f1) {
                if (!subset(um[mi], space.image(f1))) continue;
                if (wf_at(mi, f1).s.empty()) continue;
                for (int f2 = 0; f2 < fam.size(); ++f2) {
                    if (!subset(um[mi], space.image(f2))) continue;
                    if (wf_at(mi, f2).s.empty()) continue;
                    const Mask join = space.image(f1) | space.image(f2);
                    for (int f3 = 0; f3 < fam.size(); ++f3) {
                        if (!subset(join, space.image(f3))) continue;
                        if (wf_at(mi, f3).s.empty()) continue;
                        if (wf_at(mi, f1).s != wf_at(mi, f2).s)
                            return "common bound F3=" + set_str(u, fam.member(f3)) +
                                   " but S differs between F1/F2 at " + query_str(mi, f1) +
                                   " / F2=" + set_str(u, fam.member(f2));
                    }
                }
            }
        return std::nullopt;
    });

    run_law(out, text, "sigma-agreement", [&]() -> std::optional<std::string> {
        for (int mi = 0; mi < ms; ++mi) {
            std::optional<Mask> seen;
            for (int fi = 0; fi < fam.size(); ++fi) {
                const auto& wf = wf_at(mi, fi);
                if (wf.sigma.empty()) continue;
                const Mask image = space.image(wf.sigma.front());
                if (seen && *seen != image)
                    return "Σ image depends on F at M=" + set_str(u, sat0[mi]);
                seen = image;
            }
        }
        return std::nullopt;
    });

    run_law(out, text, "sigma-monotone", [&]() -> std::optional<std::string> {
        if (big) return std::nullopt;
        std::vector<std::optional<Mask>> sigma_image(ms);
        for (int mi = 0; mi < ms; ++mi)
            for (int fi = 0; fi < fam.size() && !sigma_image[mi]; ++fi) {
                const auto& wf = wf_at(mi, fi);
                if (!wf.sigma.empty()) sigma_image[mi] = space.image(wf.sigma.front());
            }
        for (int m1 = 0; m1 < ms; ++m1)
            for (int m2 = 0; m2 < ms; ++m2)
                if (subset(um[m1], um[m2]) && sigma_image[m1] && sigma_image[m2] &&
                    !subset(*sigma_image[m1], *sigma_image[m2]))
                    return "Σ images not monotone in M: M1=" + set_str(u, sat0[m1]) +
                           " M2=" + set_str(u, sat0[m2]);
        return std::nullopt;
    });

    std::optional<IdealOps> ops;
    run_law(out, text, "constructive-sup-oracle", [&]() -> std::optional<std::string> {
        if (!rep.sl || closed.size() > 12) return std::nullopt;
        ops.emplace(space);
        FinitePoset cp = space.closed_poset();
        for (std::size_t e = 0; e < closed.size(); ++e)
            for (std::size_t i = 0; i < closed.size(); ++i)
                for (std::size_t j = 0; j < closed.size(); ++j) {
                    if (!subset(closed[i] | closed[j], closed[e])) continue;
                    const Mask got = ops->sup_in_ideal(closed[i], closed[j], closed[e]);
                    const Mask pair = (Mask{1} << i) | (Mask{1} << j);
                    auto want = cp.sup_within(pair, static_cast<int>(e));
                    if (!want)
                        return "sl space but " + set_str(u, closed[i]) + ", " +
                               set_str(u, closed[j]) + " lack a sup inside ↓" +
                               set_str(u, closed[e]);
                    if (got != closed[*want])
                        return "construction gives " + set_str(u, got) + " but the poset sup of " +
                               set_str(u, closed[i]) + ", " + set_str(u, closed[j]) + " in ↓" +
                               set_str(u, closed[e]) + " is " + set_str(u, closed[*want]);
                }
        return std::nullopt;
    });

    run_law(out, text, "constructive-least-oracle", [&]() -> std::optional<std::string> {
        if (!rep.l || closed.size() > 12) return std::nullopt;
        if (!ops) ops.emplace(space);
        FinitePoset cp = space.closed_poset();
        for (std::size_t e = 0; e < closed.size(); ++e) {
            const Mask got = ops->least_in_ideal(closed[e]);
            auto want = cp.sup_within(0, static_cast<int>(e));
            if (!want)
                return "l space but ↓" + set_str(u, closed[e]) + " has no least closed set";
            if (got != closed[*want])
                return "construction gives " + set_str(u, got) + " but the least closed set in ↓" +
                       set_str(u, closed[e]) + " is " + set_str(u, closed[*want]);
        }
        return std::nullopt;
    });

    run_law(out, text, "identity-relation-map", [&]() -> std::optional<std::string> {
        auto id = identity_relation(space);
        auto table = induced_map(id);
        if (table.size() != closed.size())
            return std::string("identity relation map misses closed sets");
        for (std::size_t i = 0; i < closed.size(); ++i)
            if (table[i] != std::make_pair(closed[i], closed[i]))
                return "identity relation moves " + set_str(u, closed[i]) + " to " +
                       set_str(u, table[i].second);
        return std::nullopt;
    });

    run_law(out, text, "dense-subfamilies", [&]() -> std::optional<std::string> {
        if (fam.size() > 7) return std::nullopt;
        for (unsigned sm = 1; sm < (1u << fam.size()); ++sm) {
            std::vector<Mask> g;
            for (int i = 0; i < fam.size(); ++i)
                if (sm >> i & 1) g.push_back(fam.member(i));
            const bool dense = is_dense_subspace(space, full, g);
            const auto viol = find_dense_violation(space, g);
            if (dense == viol.has_value())
                return "dense flag and violation search disagree on subfamily " +
                       family_str(u, g);
            if (dense) {
                DenseIso iso = dense_iso(space, full, g);
                if (!iso.ok)
                    return "dense subfamily " + family_str(u, g) + " but trace map fails: " +
                           iso.failure;
                if (rep.topological && rep.sl && !classify_space(*iso.sub).sl)
                    return "dense subfamily of a preorder sl space lost sl: " + family_str(u, g);
            } else {
                const Mask image_f = space.upper(viol->first);
                for (Mask gp : g)
                    if (subset(image_f, space.upper(gp)) && subset(gp, image_f))
                        return "reported non-dense at F=" + set_str(u, viol->first) + " but " +
                               set_str(u, gp) + " is a witness";
            }
        }
        return std::nullopt;
    });

    run_law(out, text, "principal-subspaces", [&]() -> std::optional<std::string> {
        for (Mask e : closed) {
            CfSpace sub = principal_subspace(space, e);
            std::vector<Mask> want;
            for (Mask d : closed)
                if (subset(d, e)) want.push_back(compress(d, e));
            std::sort(want.begin(), want.end(), set_lex_less);
            if (sub.closed_sets() != want)
                return "principal subspace at " + set_str(u, e) +
                       " does not carve out the ideal of closed sets";
        }
        return std::nullopt;
    });

    run_law(out, text, "restriction-identity", [&]() -> std::optional<std::string> {
        auto r = restrict_subspace(space, full, fam.members());
        if (auto* cv = std::get_if<CfViolation>(&r))
            return "full restriction rejected: " + cv->str(u);
        if (!(std::get<CfSpace>(r) == space))
            return std::string("restriction to the full carrier is not the identity");
        return std::nullopt;
    });

    return out;
}

std::vector<Finding> check_poset_laws(const FinitePoset& p) {
    std::vector<Finding> out;
    if (p.size() > 6) return out;
    const std::string text = poset_text(p);
    const int n = p.size();

    run_law(out, text, "way-below-collapse", [&]() -> std::optional<std::string> {
        const auto definitional = way_below_matrix_definitional(p);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (definitional[x][y] != p.leq(x, y) ||
                    p.way_below(x, y) != p.leq(x, y))
                    return "way-below differs from ≤ at " + p.label(x) + ", " + p.label(y);
        return std::nullopt;
    });

    run_law(out, text, "compacts-exhaust-carrier", [&]() -> std::optional<std::string> {
        if (p.compacts() != p.carrier_mask())
            return std::string("some element is not compact in a finite poset");
        return std::nullopt;
    });

    run_law(out, text, "poset-class-consistency", [&]() -> std::optional<std::string> {
        const PosetClassReport r = classify_poset(p);
        if (!r.continuous || !r.algebraic)
            return std::string("finite poset not recognized as continuous+algebraic");
        if (r.l_domain != (r.continuous && r.l_cusl))
            return std::string("l_domain disagrees with continuous ∧ l_cusl");
        if (r.bc_domain && !(r.pointed && r.l_domain))
            return std::string("bc_domain without pointed l_domain");
        if (r.pointed && r.sl_domain && !r.l_domain)
            return std::string("pointed sl_domain that is not an l_domain");
        if (r.complete_lattice && !(r.bc_poset && r.pointed && r.sup_semilattice))
            return std::string("complete lattice missing bc/pointed/sup-semilattice");
        if (r.bc_poset != r.cusl)
            return std::string("bc_poset and cusl split on a finite poset");
        if (r.bc_poset && !r.pointed)
            return std::string("bc_poset without a least element");
        if (r.sup_semilattice && !r.sl_cusl)
            return std::string("sup_semilattice that is not an sl_cusl");
        if (r.l_cusl && !r.sl_cusl)
            return std::string("l_cusl that is not an sl_cusl");
        return std::nullopt;
    });

    run_law(out, text, "witness-refutation", [&]() -> std::optional<std::string> {
        const PosetClassReport r = classify_poset(p);
        for (const auto& [flag, w] : r.witnesses)
            if (!witness_refutes(p, flag, w))
                return std::string("recorded witness fails to refute ") + poset_flag_name(flag);
        return std::nullopt;
    });

    run_law(out, text, "representation-roundtrip", [&]() -> std::optional<std::string> {
        RoundtripReport rr = representation_roundtrip(p);
        if (!rr.ok) return rr.failure;
        return std::nullopt;
    });

    run_law(out, text, "topological-induction-collapse", [&]() -> std::optional<std::string> {
        if (!(induce_topological_space(p) == induce_cf_space(p)))
            return std::string("compact-pool induction differs from the full induction");
        return std::nullopt;
    });

    run_law(out, text, "reduced-family-dense", [&]() -> std::optional<std::string> {
        InducedSpace ind = induce_cf_space(p);
        InducedSpace red = induce_cf_space(p, FamilyMode::reduced);
        const Mask full = ind.space.universe().full_mask();
        const auto& g = red.space.family().members();
        if (!is_dense_subspace(ind.space, full, g))
            return std::string("singleton/pair family is not dense in the full induction");
        DenseIso iso = dense_iso(ind.space, full, g);
        if (!iso.ok) return "reduced family trace map fails: " + iso.failure;
        return std::nullopt;
    });

    run_law(out, text, "self-isomorphism", [&]() -> std::optional<std::string> {
        if (!are_isomorphic(p, p)) return std::string("poset not isomorphic to itself");
        return std::nullopt;
    });

    return out;
}

std::vector<Finding> check_morphism_laws(const FinitePoset& p, const FinitePoset& q,
                                         const FinitePoset& r, SplitMix64& rng) {
    std::vector<Finding> out;
    if (p.size() > 4 || q.size() > 4 || r.size() > 4) return out;
    const std::string text = "# source\n" + poset_text(p) + "# middle\n" + poset_text(q) +
                             "# target\n" + poset_text(r);

    const InducedSpace A = induce_cf_space(p);
    const InducedSpace B = induce_cf_space(q);
    const InducedSpace C = induce_cf_space(r);
    const std::vector<int> f = gen_monotone_map(p, q, rng);
    const std::vector<int> g = gen_monotone_map(q, r, rng);
    const std::vector<int> h = gen_monotone_map(r, r, rng);

    auto lift = [](const FinitePoset& src, const FinitePoset& dst, const std::vector<int>& m) {
        return [&src, &dst, m](Mask e) {
            auto top = src.greatest(e);
            if (!top) throw input_error("induced closed sets are principal down-sets");
            return dst.down_set(m[*top]);
        };
    };
    auto fmap = lift(p, q, f);
    auto gmap = lift(q, r, g);
    auto hmap = lift(r, r, h);
    auto map_str = [](const FinitePoset& src, const std::vector<int>& m,
                      const FinitePoset& dst) {
        std::string s;
        for (int i = 0; i < src.size(); ++i)
            s += (i ? " " : "") + src.label(i) + "->" + dst.label(m[i]);
        return s;
    };
    const std::string fdesc = map_str(p, f, q);

    auto vf = relation_for_map(A.space, B.space, fmap);
    auto vg = relation_for_map(B.space, C.space, gmap);
    auto vh = relation_for_map(C.space, C.space, hmap);
    auto describe = [](const std::vector<AxiomViolation>& vs) {
        std::string s;
        for (const auto& v : vs)
            s += (s.empty() ? "" : "; ") + ("axiom " + std::to_string(v.axiom) + ": " + v.detail);
        return s;
    };

    run_law(out, text, "map-relation-axioms", [&]() -> std::optional<std::string> {
        for (const auto* v : {&vf, &vg, &vh})
            if (auto* bad = std::get_if<std::vector<AxiomViolation>>(v))
                return "monotone map lift breaks " + describe(*bad) + " (map " + fdesc + ")";
        return std::nullopt;
    });
    if (vf.index() == 1 || vg.index() == 1 || vh.index() == 1) return out;
    const ApproximableRelation& tf = std::get<ApproximableRelation>(vf);
    const ApproximableRelation& tg = std::get<ApproximableRelation>(vg);
    const ApproximableRelation& th = std::get<ApproximableRelation>(vh);

    const std::vector<Mask> ca = A.space.closed_sets();
    const Universe& ub = B.space.universe();

    run_law(out, text, "map-relation-recovers", [&]() -> std::optional<std::string> {
        auto table = induced_map(tf);
        if (table.size() != ca.size())
            return std::string("lifted relation map misses closed sets");
        std::size_t i = 0;
        for (Mask e : ca) {
            if (table[i] != std::make_pair(e, fmap(e)))
                return "lifted relation maps " + set_str(A.space.universe(), e) + " to " +
                       set_str(ub, table[i].second) + " instead of " + set_str(ub, fmap(e)) +
                       " (map " + fdesc + ")";
            ++i;
        }
        return std::nullopt;
    });

    run_law(out, text, "induced-map-monotone-closed", [&]() -> std::optional<std::string> {
        for (Mask e1 : ca) {
            const Mask v1 = apply_relation(tf, e1);
            if (!B.space.is_closed_fast(v1))
                return "image " + set_str(ub, v1) + " of " + set_str(A.space.universe(), e1) +
                       " is not closed";
            for (Mask e2 : ca)
                if (subset(e1, e2) && !subset(v1, apply_relation(tf, e2)))
                    return "induced map not monotone between " +
                           set_str(A.space.universe(), e1) + " and " +
                           set_str(A.space.universe(), e2);
        }
        return std::nullopt;
    });

    run_law(out, text, "induced-map-scott-continuous", [&]() -> std::optional<std::string> {
        FinitePoset pa = A.space.closed_poset();
        FinitePoset pb = B.space.closed_poset();
        const std::vector<Mask> cb = B.space.closed_sets();
        std::vector<int> idx(ca.size());
        for (std::size_t i = 0; i < ca.size(); ++i) {
            const Mask v = apply_relation(tf, ca[i]);
            idx[i] = static_cast<int>(std::find(cb.begin(), cb.end(), v) - cb.begin());
            if (idx[i] == static_cast<int>(cb.size()))
                return "induced value is not a closed set of the target";
        }
        if (!is_scott_continuous(pa, pb, idx))
            return std::string("induced map is not Scott continuous on the closed posets");
        return std::nullopt;
    });

    auto unwrap = [&](std::variant<ApproximableRelation, std::vector<AxiomViolation>>&& v,
                      const char* what,
                      std::optional<std::string>& err) -> std::optional<ApproximableRelation> {
        if (auto* bad = std::get_if<std::vector<AxiomViolation>>(&v)) {
            err = std::string(what) + " breaks " + describe(*bad);
            return std::nullopt;
        }
        return std::get<ApproximableRelation>(std::move(v));
    };

    run_law(out, text, "compose-axioms-and-map", [&]() -> std::optional<std::string> {
        std::optional<std::string> err;
        auto comp = unwrap(compose(tf, tg), "composite of two map lifts", err);
        if (!comp) return err;
        for (Mask e : ca) {
            const Mask got = apply_relation(*comp, e);
            const Mask want = gmap(fmap(e));
            if (got != want)
                return "composite maps " + set_str(A.space.universe(), e) + " to " +
                       set_str(C.space.universe(), got) + " instead of " +
                       set_str(C.space.universe(), want);
        }
        return std::nullopt;
    });

    run_law(out, text, "identity-laws", [&]() -> std::optional<std::string> {
        std::optional<std::string> err;
        auto left = unwrap(compose(identity_relation(A.space), tf), "id;θ", err);
        if (!left) return err;
        if (left->arrows() != tf.arrows())
            return std::string("pre-composition with the identity changes the arrow set");
        auto right = unwrap(compose(tf, identity_relation(B.space)), "θ;id", err);
        if (!right) return err;
        if (right->arrows() != tf.arrows())
            return std::string("post-composition with the identity changes the arrow set");
        return std::nullopt;
    });

    run_law(out, text, "compose-associative", [&]() -> std::optional<std::string> {
        std::optional<std::string> err;
        auto fg = unwrap(compose(tf, tg), "θf;θg", err);
        if (!fg) return err;
        auto gh = unwrap(compose(tg, th), "θg;θh", err);
        if (!gh) return err;
        auto left = unwrap(compose(*fg, th), "(θf;θg);θh", err);
        if (!left) return err;
        auto right = unwrap(compose(tf, *gh), "θf;(θg;θh)", err);
        if (!right) return err;
        if (left->arrows() != right->arrows())
            return std::string("relational composition is not associative on these arrows");
        return std::nullopt;
    });

    return out;
}

SuiteResult run_theorem_suite(const GenParams& params, int count) {
    SuiteResult out;
    SplitMix64 rng(params.seed);
    auto take = [&](std::vector<Finding>&& fs) {
        for (auto& f : fs) out.findings.push_back(std::move(f));
    };
    for (int i = 0; i < count; ++i) {
        if (params.mode == GenMode::poset) {
            take(check_poset_laws(gen_poset(params, rng)));
            GenParams small = params;
            small.max_universe = std::min(params.max_universe, 4);
            FinitePoset a = gen_poset(small, rng);
            FinitePoset b = gen_poset(small, rng);
            FinitePoset c = gen_poset(small, rng);
            take(check_morphism_laws(a, b, c, rng));
            ++out.instances;
        } else {
            take(check_ga_laws(gen_ga_space(params, rng)));
            if (auto sp = gen_cf_space(params, rng)) {
                take(check_space_laws(*sp));
                ++out.instances;
            } else {
                ++out.skipped;
            }
        }
    }
    return out;
}

namespace {

std::function<bool(const CfSpace&)> property_predicate(const std::string& name) {
    if (name == "sl-not-ultra")
        return [](const CfSpace& s) {
            auto r = classify_space(s);
            return r.sl && !r.ultra_sl;
        };
    if (name == "sl-not-ultra-topological")
        return [](const CfSpace& s) {
            if (!s.is_topological()) return false;
            auto r = classify_space(s);
            return r.sl && !r.ultra_sl;
        };
    if (name == "l-not-sl")
        return [](const CfSpace& s) {
            auto r = classify_space(s);
            return r.l && !r.sl;
        };
    if (name == "sl-not-l")
        return [](const CfSpace& s) {
            auto r = classify_space(s);
            return r.sl && !r.l;
        };
    if (name == "non-dcpo-closed-poset")
        return [](const CfSpace& s) {
            if (s.closed_sets().size() > 12) return false;
            FinitePoset cp = s.closed_poset();
            for (Mask d : cp.directed_subsets())
                if (!cp.sup(d)) return true;
            return false;
        };
    throw input_error("unknown search property '" + name + "'");
}

std::string property_witness(const std::string& name, const CfSpace& s) {
    const Universe& u = s.universe();
    if (name == "non-dcpo-closed-poset") {
        FinitePoset cp = s.closed_poset();
        for (Mask d : cp.directed_subsets())
            if (!cp.sup(d)) {
                std::string members;
                for (Mask rest = d; rest; rest &= rest - 1)
                    members += (members.empty() ? "" : ", ") + cp.label(lowest_bit(rest));
                return "directed family " + members + " has no supremum";
            }
        return "no witness";
    }
    auto rep = classify_space(s);
    std::string line = flags_line(rep);
    SpaceFlag flag = SpaceFlag::ultra_sl;
    if (name == "l-not-sl") flag = SpaceFlag::sl;
    if (name == "sl-not-l") flag = SpaceFlag::l;
    auto it = rep.witnesses.find(flag);
    if (it != rep.witnesses.end())
        line += std::string(" witness ") + space_flag_name(flag) + ": M=" +
                set_str(u, it->second.m) + " F=" + set_str(u, it->second.f);
    return line;
}

}  // namespace

std::vector<std::string> search_registry() {
    return {"sl-not-ultra", "sl-not-ultra-topological", "l-not-sl", "sl-not-l",
            "non-dcpo-closed-poset"};
}

std::optional<Finding> search_counterexample(const std::string& property,
                                             const GenParams& params, long long budget) {
    const auto pred = property_predicate(property);
    auto finish = [&](CfSpace hit) {
        CfSpace small = shrink_space(std::move(hit), pred);
        return Finding{property, space_text(small), property_witness(property, small), true};
    };

    // Deterministic sweep over every transitive relation and every family of
    // up to six members, exhaustive through |U| = 3 and a fixed prefix of
    // |U| = 4 until the budget runs out.
    const int nmax = std::min(4, std::max(1, params.max_universe));
    const int kmax = std::min(6, std::max(1, params.max_family));
    for (int n = 1; n <= nmax && budget > 0; ++n) {
        std::vector<std::string> names;
        for (int i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
        Universe u{std::move(names)};
        const Mask fullm = u.full_mask();
        const int pool = 1 << n;
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * n)) && budget > 0;
             ++code) {
            std::vector<Mask> rows(n);
            for (int x = 0; x < n; ++x) rows[x] = (code >> (x * n)) & fullm;
            Relation rel{u, std::move(rows)};
            if (!rel.is_transitive()) continue;
            GaSpace ga{u, rel};
            for (int k = 1; k <= std::min(kmax, pool) && budget > 0; ++k) {
                std::vector<int> idx(k);
                std::iota(idx.begin(), idx.end(), 0);
                while (budget > 0) {
                    std::vector<Mask> members;
                    for (int i : idx) members.push_back(static_cast<Mask>(i));
                    --budget;
                    auto v = CfSpace::validate(ga, FiniteFamily{u, std::move(members)});
                    if (auto* sp = std::get_if<CfSpace>(&v); sp && pred(*sp))
                        return finish(std::move(*sp));
                    int i = k - 1;
                    while (i >= 0 && idx[i] == pool - k + i) --i;
                    if (i < 0) break;
                    ++idx[i];
                    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                }
            }
        }
    }

    SplitMix64 rng(params.seed);
    while (budget-- > 0)
        if (auto sp = gen_cf_space(params, rng); sp && pred(*sp)) return finish(std::move(*sp));
    return std::nullopt;
}

CfSpace shrink_space(CfSpace space, const std::function<bool(const CfSpace&)>& keep) {
    auto try_candidate = [&](const Universe& u2, Relation rel,
                             std::vector<Mask> members) -> std::optional<CfSpace> {
        auto v = CfSpace::validate(GaSpace{u2, std::move(rel)}, FiniteFamily{u2, std::move(members)});
        if (auto* sp = std::get_if<CfSpace>(&v); sp && keep(*sp)) return std::move(*sp);
        return std::nullopt;
    };
    bool progress = true;
    while (progress) {
        progress = false;
        const Universe u = space.universe();
        const int n = u.size();
        for (int x = 0; x < n && n > 1 && !progress; ++x) {
            const Mask keep_mask = u.full_mask() & ~(Mask{1} << x);
            std::vector<std::string> names;
            for (int i = 0; i < n; ++i)
                if (i != x) names.push_back(u.name(i));
            Universe sub{std::move(names)};
            Relation rel = space.ga().relation().restricted(keep_mask, sub);
            std::vector<Mask> members;
            for (Mask m : space.family().members()) members.push_back(compress(m & keep_mask, keep_mask));
            if (auto c = try_candidate(sub, std::move(rel), std::move(members))) {
                space = std::move(*c);
                progress = true;
            }
        }
        for (int x = 0; x < n && !progress; ++x)
            for (int y = 0; y < n && !progress; ++y) {
                if (!space.ga().relation().has(x, y)) continue;
                auto rows = space.ga().relation().rows();
                rows[x] &= ~(Mask{1} << y);
                if (auto c = try_candidate(u, Relation{u, std::move(rows)},
                                           space.family().members())) {
                    space = std::move(*c);
                    progress = true;
                }
            }
        if (space.family().size() > 1)
            for (int i = 0; i < space.family().size() && !progress; ++i) {
                auto members = space.family().members();
                members.erase(members.begin() + i);
                if (auto c = try_candidate(u, space.ga().relation(), std::move(members))) {
                    space = std::move(*c);
                    progress = true;
                }
            }
    }
    return space;
}

}  // namespace cfdom
