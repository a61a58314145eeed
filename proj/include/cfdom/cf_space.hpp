#pragma once
// CF-approximation spaces: a transitive relation on a finite carrier together
// with a nonempty family of finite subsets satisfying the covering axiom
//
//   for every family member F and every K inside upper(F) there is a member G
//   with K inside upper(G) and G inside upper(F).
//
// Satisfiability of the axiom is downward-closed in K (a witness for K works
// for every subset of K), so on a finite carrier the single check K = upper(F)
// decides each member and the maximal violating K is upper(F) itself.  The
// exhaustive K sweep is kept alongside as the oracle form.
//
// A set E is closed when every K inside E has a member F with
// K ⊆ upper(F) ⊆ E and F ⊆ E; finitely this pins E = upper(F) for some member
// F ⊆ E, which is what the fast paths use.

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cfdom/ga_space.hpp"
#include "cfdom/poset.hpp"

namespace cfdom {

// Ordered, deduplicated list of subsets of one universe.  Distinct members
// with equal upper approximations stay distinct members.
class FiniteFamily {
public:
    explicit FiniteFamily(Universe u, std::vector<Mask> members = {});

    const Universe& universe() const { return universe_; }
    int size() const { return static_cast<int>(members_.size()); }
    Mask member(int i) const { return members_.at(i); }
    const std::vector<Mask>& members() const { return members_; }
    std::optional<int> find(Mask m) const;
    bool contains(Mask m) const { return find(m).has_value(); }

    friend bool operator==(const FiniteFamily& a, const FiniteFamily& b) {
        return a.universe_.same(b.universe_) && a.members_ == b.members_;
    }

private:
    Universe universe_;
    std::vector<Mask> members_;
};

struct CfViolation {
    enum class Kind { not_transitive, empty_family, axiom };
    Kind kind = Kind::axiom;
    std::array<int, 3> chain{0, 0, 0};  // not_transitive: x R y, y R z, no x R z
    Mask family_member = 0;             // axiom: F
    Mask witness = 0;                   // axiom: K = upper(F)
    std::string str(const Universe& u) const;
};

class CfSpace {
public:
    static std::variant<CfSpace, CfViolation> validate(GaSpace ga, FiniteFamily family);
    static CfSpace validate_or_throw(GaSpace ga, FiniteFamily family);
    // Skips the axiom check; used by the fuzz harness self-test, which needs a
    // deliberately broken space to flow through the property registry.
    static CfSpace trusted(GaSpace ga, FiniteFamily family);

    const GaSpace& ga() const { return ga_; }
    const FiniteFamily& family() const { return family_; }
    const Universe& universe() const { return ga_.universe(); }

    Mask image(int member) const { return images_.at(member); }
    const std::vector<Mask>& images() const { return images_; }
    Mask upper(Mask a) const { return ga_.upper_mask(a); }

    bool is_topological() const { return ga_.is_preorder(); }

    // Definitional closedness: sweeps every K inside e.
    bool is_cf_closed(Mask e, int max_bits = 16) const;
    // E = upper(F) for some member F inside E.
    bool is_closed_fast(Mask e) const;

    // Alternative characterizations, equivalent on valid spaces; the test
    // suites check the four-way agreement rather than assuming it.
    // {upper(F) | F member, F inside e} is nonempty, directed under
    // inclusion, and unions to e.
    bool closed_by_directed_union(Mask e) const;
    // e is the union of a directed subfamily of images; a single image
    // equal to e is such a union, and finitely a directed family of sets
    // peaks at its largest member, so nothing more is needed.
    bool closed_by_image(Mask e) const;
    // Every K inside e is covered by some upper(F) inside e, with no demand
    // that F itself lie inside e.
    bool closed_by_cover(Mask e, int max_bits = 16) const;

    // Distinct member images, sorted in set order; equals the closed sets.
    std::vector<Mask> closed_sets() const;
    // Full powerset sweep through is_cf_closed.
    std::vector<Mask> closed_sets_oracle(int max_bits = 16) const;
    FinitePoset closed_poset() const;

    // E1 way below E2 in the closed-set order: some member F has
    // E1 ⊆ upper(F) and F ⊆ E2.  Both arguments must be closed.
    bool way_below_closed(Mask e1, Mask e2) const;

    // Preorder case: the basis {upper(F)} must exhaust the compact elements
    // of the closed-set poset.
    bool compacts_match_basis() const;

    friend bool operator==(const CfSpace& a, const CfSpace& b) {
        return a.ga_ == b.ga_ && a.family_ == b.family_;
    }

private:
    CfSpace(GaSpace ga, FiniteFamily family);

    GaSpace ga_;
    FiniteFamily family_;
    std::vector<Mask> images_;
};

// All axiom violations (member index, K) under the exhaustive sweep, ordered
// by (member set order, K ascending).  Test oracle for validate().
std::vector<std::pair<int, Mask>> axiom_violations_exhaustive(const GaSpace& ga,
                                                              const FiniteFamily& family,
                                                              int max_bits = 16);

// Subspace over a closed set E: carrier E, restricted relation, members inside E.
CfSpace principal_subspace(const CfSpace& space, Mask e);

// Subspace over arbitrary carrier v with chosen subfamily g (each member must
// belong to the parent family and lie inside v).  May fail the axiom.
std::variant<CfSpace, CfViolation> restrict_subspace(const CfSpace& space, Mask v,
                                                     const std::vector<Mask>& g);

// Density of (v, g) in the parent: every K ⊆ upper(F) has a witness G' in g
// with K ⊆ upper(G') and G' ⊆ upper(F).  The check collapses to K = upper(F).
bool is_dense_subspace(const CfSpace& space, Mask v, const std::vector<Mask>& g);
// First failing (F, K) in set order, if any.
std::optional<std::pair<Mask, Mask>> find_dense_violation(const CfSpace& space,
                                                          const std::vector<Mask>& g);

struct DenseIso {
    bool ok = false;
    std::string failure;
    // (closed set of the parent, its trace on v reindexed to the subspace)
    std::vector<std::pair<Mask, Mask>> pairs;
    std::optional<CfSpace> sub;
};

// Builds E -> E ∩ v over all closed sets and verifies it is an order
// isomorphism onto the closed sets of the subspace.
DenseIso dense_iso(const CfSpace& space, Mask v, const std::vector<Mask>& g);

}  // namespace cfdom
