#pragma once
// Witness-family classification of CF-approximation spaces.
//
// For a query (M, F) with M a union of family members (or empty) and F a
// family member, the witness families are
//
//   S(M,F)  : members G with upper(M) ⊆ upper(G) ⊆ upper(F) whose image is
//             least among all such G — so every member of S(M,F) carries one
//             and the same image,
//   S*(M,F) : members of S(M,F) lying inside upper(F),
//   Σ(M,F)  : members G satisfying the same sandwich whose image is least
//             among ALL images containing upper(M), not just those under F.
//
// The space classifies ultra-sL / sL / L / bc according to which family is
// nonempty over which query range; see classify_space.  Nonemptiness of each
// family depends only on the pair (upper(M), upper(F)), which the classifier
// memoizes.

#include <map>
#include <optional>
#include <vector>

#include "cfdom/cf_space.hpp"

namespace cfdom {

// All nonempty finite unions of family members, sorted in set order.  Contains
// the empty set exactly when the family does.
std::vector<Mask> join_saturation(const FiniteFamily& family);

struct WitnessFamilies {
    std::vector<int> s;       // member indices, ascending
    std::vector<int> s_star;  // subset of s
    std::vector<int> sigma;   // subset of s
};

// m must lie in the join saturation (or be empty); f must be a family member.
WitnessFamilies witness_families(const CfSpace& space, Mask m, Mask f);

enum class SpaceFlag { topological, ultra_sl, sl, l, bc };
const char* space_flag_name(SpaceFlag f);

// A query whose witness family came up empty.
struct SpaceQuery {
    Mask m = 0;
    Mask f = 0;
};

struct SpaceClassReport {
    bool topological = false;
    bool ultra_sl = false;
    bool sl = false;
    bool l = false;
    bool bc = false;
    std::map<SpaceFlag, SpaceQuery> witnesses;  // one per false classification flag

    bool flag(SpaceFlag f) const;
};

// ultra_sl: S* nonempty for every M in the saturation and member F with
//           upper(M) ⊆ upper(F);
// sl:       S nonempty for every M in the saturation and member F with
//           M ⊆ upper(F);
// l:        as sl with M also allowed to be empty;
// bc:       Σ nonempty over the same range as l.
// The ultra premise compares images while the others compare M itself against
// upper(F); the two ranges coincide exactly on topological spaces.
SpaceClassReport classify_space(const CfSpace& space);

// Constructive sup/least procedures on the closed-set poset.  Building one of
// these precomputes the witness-image unions for every member triple, so
// repeated queries against the same space stay cheap.
class IdealOps {
public:
    explicit IdealOps(CfSpace space);

    const CfSpace& space() const { return space_; }
    const SpaceClassReport& report() const { return report_; }

    // Least upper bound of closed sets h1, h2 inside {closed H | H ⊆ e},
    // computed as the union of upper(G) over G in S(F1 ∪ F2, F3) for all
    // member triples with F1 ⊆ h1, F2 ⊆ h2, F3 ⊆ e, F1 ∪ F2 ⊆ upper(F3).
    // Requires an sl classification and h1 ∪ h2 ⊆ e.
    Mask sup_in_ideal(Mask h1, Mask h2, Mask e) const;

    // Least element of {closed H | H ⊆ e}: the image of S(∅, F) for the first
    // member F inside e in set order.  Requires an l classification.
    Mask least_in_ideal(Mask e) const;

private:
    CfSpace space_;
    SpaceClassReport report_;
    int n_ = 0;
    // s_image_[(i*n_+j)*n_+k]: union of images of S(Fi ∪ Fj, Fk); valid only
    // where triple_ok_ is set, i.e. Fi ∪ Fj ⊆ upper(Fk).
    std::vector<Mask> s_image_;
    std::vector<char> triple_ok_;
};

// One-shot forms of the two procedures above.
Mask supremum_in_ideal(const CfSpace& space, Mask h1, Mask h2, Mask e);
Mask least_in_ideal(const CfSpace& space, Mask e);

// Preorder spaces only: whether every principal ideal of the poset of member
// images admits pairwise sups.  Must coincide with the sl flag.
bool sl_cusl_criterion(const CfSpace& space);

}  // namespace cfdom
