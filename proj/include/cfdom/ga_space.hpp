#pragma once
// Binary relations on a finite carrier and the induced set approximations.
//
// For a relation R on U we write succ(x) = {y | x R y}.  The upper
// approximation of A is {x | succ(x) meets A}, the lower approximation is
// {x | succ(x) contained in A}; they are De Morgan duals.

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "cfdom/universe.hpp"

namespace cfdom {

// Dense boolean matrix stored as one successor mask per element.
class Relation {
public:
    explicit Relation(Universe u);
    Relation(Universe u, std::vector<Mask> rows);
    static Relation from_pairs(const Universe& u,
                               const std::vector<std::pair<int, int>>& pairs);

    const Universe& universe() const { return universe_; }
    int size() const { return static_cast<int>(rows_.size()); }
    bool has(int x, int y) const { return rows_.at(x) >> y & 1; }
    Mask row(int x) const { return rows_.at(x); }
    const std::vector<Mask>& rows() const { return rows_; }
    std::vector<std::pair<int, int>> pairs() const;  // row-major order

    bool is_reflexive() const;
    bool is_transitive() const;
    // First triple (x, y, z) with x R y, y R z but not x R z.
    std::optional<std::array<int, 3>> transitivity_gap() const;

    Relation closed_reflexively() const;
    Relation closed_transitively() const;
    // Restriction to `keep`, reindexed onto `sub` (tokens of keep, same order).
    Relation restricted(Mask keep, const Universe& sub) const;

    friend bool operator==(const Relation& a, const Relation& b) {
        return a.universe_.same(b.universe_) && a.rows_ == b.rows_;
    }

private:
    Universe universe_;
    std::vector<Mask> rows_;
};

class GaSpace {
public:
    GaSpace(Universe u, Relation r);

    const Universe& universe() const { return universe_; }
    const Relation& relation() const { return relation_; }

    ElemSet successors(int x) const;
    ElemSet successors(std::string_view token) const;
    ElemSet predecessors(int x) const;
    ElemSet predecessors(std::string_view token) const;
    ElemSet upper_approx(const ElemSet& a) const;
    ElemSet lower_approx(const ElemSet& a) const;

    Mask succ_mask(int x) const { return relation_.row(x); }
    Mask pred_mask(int x) const;
    Mask upper_mask(Mask a) const;
    Mask lower_mask(Mask a) const;

    bool is_reflexive() const { return relation_.is_reflexive(); }
    bool is_transitive() const { return relation_.is_transitive(); }
    bool is_preorder() const { return is_reflexive() && is_transitive(); }

    GaSpace transitive_closure() const;

    friend bool operator==(const GaSpace& a, const GaSpace& b) {
        return a.relation_ == b.relation_;
    }

private:
    Universe universe_;
    Relation relation_;
};

}  // namespace cfdom
