#pragma once
// From a finite poset to its induced CF-approximation space and back.
//
// The induced space keeps the carrier, takes the way-below relation (= the
// order, finitely) as R, and takes every nonempty subset possessing a top
// element as a family member.  Its closed sets are exactly the principal
// down-sets, so x -> down(x) is an order isomorphism onto the closed-set
// poset; representation_roundtrip machine-checks that together with the
// classification transfer (sl_domain <-> sl and so on).

#include <optional>
#include <string>
#include <vector>

#include "cfdom/classify.hpp"

namespace cfdom {

// The full topped-subset family is exponential in the carrier; reduced mode
// keeps only singletons and topped pairs.  Reduced mode is a speed knob for
// interactive use and is never what the theorems are stated about.
enum class FamilyMode { full, reduced };

struct InducedSpace {
    FinitePoset source;
    CfSpace space;
    std::vector<int> element_map;  // poset index -> universe index

    friend bool operator==(const InducedSpace& a, const InducedSpace& b) {
        return a.source == b.source && a.space == b.space && a.element_map == b.element_map;
    }
};

// Poset labels become universe tokens verbatim, so they must be valid tokens.
// Carriers beyond max_carrier are rejected to keep the family enumerable.
InducedSpace induce_cf_space(const FinitePoset& p, FamilyMode mode = FamilyMode::full,
                             int max_carrier = 10);

// Same construction over the compact elements only; on a finite poset every
// element is compact, so this coincides with induce_cf_space — a checked
// collapse, derived here independently.
InducedSpace induce_topological_space(const FinitePoset& p, FamilyMode mode = FamilyMode::full,
                                      int max_carrier = 10);

struct RoundtripReport {
    bool ok = false;
    std::string failure;  // first failing step when !ok
    std::optional<InducedSpace> induced;
    // poset element -> its down-set, in space coordinates; the iso image
    std::vector<Mask> down_sets;
    SpaceClassReport space_report;
    PosetClassReport poset_report;
};

// Verifies that x -> down(x) is a bijection onto the closed sets of the
// induced space, that it preserves and reflects the order, and that the
// domain flags of p coincide with the classification flags of the space.
RoundtripReport representation_roundtrip(const FinitePoset& p);

}  // namespace cfdom
