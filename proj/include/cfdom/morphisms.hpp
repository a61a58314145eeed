#pragma once
// CF-approximable relations: arrow sets between the families of two spaces,
// subject to five axioms checked by enumeration —
//
//   (1) every source member has an arrow;
//   (2) F ⊆ upper(F') and F Θ G imply F' Θ G;
//   (3) F Θ G and G' ⊆ upper(G) imply F Θ G';
//   (4) every arrow (F, G) interpolates: some F' ⊆ upper(F), G ⊆ upper(G')
//       with F' Θ G';
//   (5) arrows out of one F are directed: G1, G2 reachable from F admit a G3
//       with G1 ∪ G2 ⊆ upper(G3) and F Θ G3.
//
// A valid relation induces a map on closed sets,
// h(E) = ∪ {upper(G) | F ⊆ E, F Θ G}, which axioms force to be closed and
// monotone; composition of relations tracks composition of maps.  These
// constructions are plumbing around the theory and are verified per instance,
// never assumed.

#include <functional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cfdom/cf_space.hpp"

namespace cfdom {

struct AxiomViolation {
    int axiom = 0;  // 1..5
    std::string detail;
};

class ApproximableRelation {
public:
    const CfSpace& src() const { return src_; }
    const CfSpace& dst() const { return dst_; }
    // (source member index, destination member index), sorted ascending
    const std::vector<std::pair<int, int>>& arrows() const { return arrows_; }
    bool has(int f, int g) const;

private:
    friend std::variant<ApproximableRelation, std::vector<AxiomViolation>>
    validate_approximable(CfSpace src, CfSpace dst, std::vector<std::pair<int, int>> arrows);

    ApproximableRelation(CfSpace src, CfSpace dst, std::vector<std::pair<int, int>> arrows)
        : src_(std::move(src)), dst_(std::move(dst)), arrows_(std::move(arrows)) {}

    CfSpace src_;
    CfSpace dst_;
    std::vector<std::pair<int, int>> arrows_;
};

// Checks all five axioms; on failure returns one lexicographically least
// witness per violated axiom.  Arrow indices must be in range.
std::variant<ApproximableRelation, std::vector<AxiomViolation>> validate_approximable(
    CfSpace src, CfSpace dst, std::vector<std::pair<int, int>> arrows);

// {(F, G) | G ⊆ upper(F)}; always valid (each axiom reduces to the covering
// axiom of the space) and induces the identity on closed sets.
ApproximableRelation identity_relation(const CfSpace& space);

// Relational composite {(F, H) | ∃G: F Θ₁ G, G Θ₂ H}; the middle spaces must
// be equal.  Validation is rerun on the composite rather than trusted.
std::variant<ApproximableRelation, std::vector<AxiomViolation>> compose(
    const ApproximableRelation& first, const ApproximableRelation& second);

// h(E) for one closed set of the source.
Mask apply_relation(const ApproximableRelation& theta, Mask e);

// The whole map as (E, h(E)) pairs, sources in set order.
std::vector<std::pair<Mask, Mask>> induced_map(const ApproximableRelation& theta);

// Arrow set {(F, G) | upper(G) ⊆ f(upper(F))} for a map f on closed sets of
// src; when f is monotone with closed values and dst is a preorder space this
// validates and recovers f as its induced map — checked by callers.
std::variant<ApproximableRelation, std::vector<AxiomViolation>> relation_for_map(
    const CfSpace& src, const CfSpace& dst, const std::function<Mask(Mask)>& f);

}  // namespace cfdom
