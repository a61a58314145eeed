#pragma once
// Finite posets with exhaustive order-theoretic classification.
//
// On a finite poset the way-below relation collapses to the order itself and
// every element is compact; way_below() uses that shortcut while
// way_below_matrix_definitional() re-derives the relation from directed
// subsets so the collapse stays a tested fact rather than an assumption.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cfdom/universe.hpp"

namespace cfdom {

// Distinct elements that are mutually related; witnesses an antisymmetry failure.
struct PosetCycle {
    std::vector<int> members;
    std::vector<std::string> labels;
};

class FinitePoset {
public:
    FinitePoset();

    // Applies the reflexive-transitive closure of `leq_pairs` and rejects the
    // result if antisymmetry fails.
    static std::variant<FinitePoset, PosetCycle> make(
        std::vector<std::string> labels,
        const std::vector<std::pair<int, int>>& leq_pairs);
    static FinitePoset make_or_throw(std::vector<std::string> labels,
                                     const std::vector<std::pair<int, int>>& leq_pairs);

    int size() const { return static_cast<int>(labels_.size()); }
    const std::string& label(int i) const { return labels_.at(i); }
    const std::vector<std::string>& labels() const { return labels_; }
    int index(std::string_view label) const;  // throws input_error
    Mask carrier_mask() const;

    bool leq(int a, int b) const { return up_.at(a) >> b & 1; }
    Mask up_set(int x) const { return up_.at(x); }
    Mask down_set(int x) const { return down_.at(x); }

    bool is_upper_bound(int z, Mask a) const { return subset(a, down_.at(z)); }
    // Nonempty and every pair of members has an upper bound among the members.
    bool is_directed(Mask d) const;

    std::optional<int> least(Mask within) const;
    std::optional<int> greatest(Mask within) const;
    std::optional<int> sup(Mask a) const;  // least upper bound in the whole poset
    // Least upper bound inside the subposet down_set(bound); a must lie in it.
    // For a = {} this is the least element of down_set(bound).
    std::optional<int> sup_within(Mask a, int bound) const;

    Mask minimal_elements() const;
    Mask maximal_elements() const;

    bool way_below(int x, int y) const { return leq(x, y); }
    Mask compacts() const;

    std::vector<Mask> directed_subsets(int max_bits = 16) const;

    friend bool operator==(const FinitePoset& a, const FinitePoset& b) {
        return a.labels_ == b.labels_ && a.up_ == b.up_;
    }

private:
    std::vector<std::string> labels_;
    std::vector<Mask> up_;    // up_[x] = {y | x <= y}
    std::vector<Mask> down_;  // down_[x] = {y | y <= x}
};

// x << y derived from the definition: every directed D whose sup dominates y
// contains a bound for x.  Exponential; intended for carriers of at most
// max_bits elements.
bool way_below_definitional(const FinitePoset& p, int x, int y, int max_bits = 12);
std::vector<std::vector<bool>> way_below_matrix_definitional(const FinitePoset& p,
                                                             int max_bits = 12);

// b is a basis: for every x the part of b way below x is directed with sup x.
bool is_basis(const FinitePoset& p, Mask b);

enum class PosetFlag {
    pointed,
    sup_semilattice,
    complete_lattice,
    bc_poset,
    cusl,
    sl_cusl,
    l_cusl,
    sl_domain,
    l_domain,
    bc_domain,
    continuous,
    algebraic,
};

const char* poset_flag_name(PosetFlag f);

// A subset refuting a flag, plus the principal-ideal bound for the flags that
// quantify over down-sets.
struct PosetWitness {
    Mask subset = 0;
    std::optional<int> bound;
};

struct PosetClassReport {
    bool pointed = false;
    bool sup_semilattice = false;
    bool complete_lattice = false;
    bool bc_poset = false;
    bool cusl = false;
    bool sl_cusl = false;
    bool l_cusl = false;
    bool sl_domain = false;
    bool l_domain = false;
    bool bc_domain = false;
    bool continuous = false;
    bool algebraic = false;
    std::map<PosetFlag, PosetWitness> witnesses;  // one per false flag

    bool flag(PosetFlag f) const;
};

// Exhaustive classification; carriers beyond 16 elements are rejected.
PosetClassReport classify_poset(const FinitePoset& p);

// Confirms that a recorded witness does refute the flag.
bool witness_refutes(const FinitePoset& p, PosetFlag f, const PosetWitness& w);

// Index map p -> q preserving and reflecting the order, if any exists.
std::optional<std::vector<int>> are_isomorphic(const FinitePoset& p,
                                               const FinitePoset& q);

// Covering pairs (x, y): x < y with nothing strictly between.
std::vector<std::pair<int, int>> hasse_edges(const FinitePoset& p);

// f preserves sups of directed subsets; on finite posets this coincides with
// monotonicity.
bool is_scott_continuous(const FinitePoset& p, const FinitePoset& q,
                         const std::vector<int>& f, int max_bits = 16);

}  // namespace cfdom
