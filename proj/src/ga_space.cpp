#include "cfdom/ga_space.hpp"

namespace cfdom {

Relation::Relation(Universe u)
    : universe_(std::move(u)), rows_(universe_.size(), 0) {}

Relation::Relation(Universe u, std::vector<Mask> rows)
    : universe_(std::move(u)), rows_(std::move(rows)) {
    if (static_cast<int>(rows_.size()) != universe_.size())
        throw input_error("relation row count does not match universe size");
    for (Mask r : rows_)
        if ((r & ~universe_.full_mask()) != 0)
            throw input_error("relation row has bits outside universe");
}

Relation Relation::from_pairs(const Universe& u,
                              const std::vector<std::pair<int, int>>& pairs) {
    std::vector<Mask> rows(u.size(), 0);
    for (auto [x, y] : pairs) {
        if (x < 0 || x >= u.size() || y < 0 || y >= u.size())
            throw input_error("relation pair out of range");
        rows[x] |= Mask{1} << y;
    }
    return Relation(u, std::move(rows));
}

std::vector<std::pair<int, int>> Relation::pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int x = 0; x < size(); ++x)
        for (Mask rest = rows_[x]; rest; rest &= rest - 1)
            out.emplace_back(x, lowest_bit(rest));
    return out;
}

bool Relation::is_reflexive() const {
    for (int x = 0; x < size(); ++x)
        if (!(rows_[x] >> x & 1)) return false;
    return true;
}

bool Relation::is_transitive() const { return !transitivity_gap().has_value(); }

std::optional<std::array<int, 3>> Relation::transitivity_gap() const {
    for (int x = 0; x < size(); ++x)
        for (Mask rest = rows_[x]; rest; rest &= rest - 1) {
            int y = lowest_bit(rest);
            Mask missing = rows_[y] & ~rows_[x];
            if (missing) return std::array<int, 3>{x, y, lowest_bit(missing)};
        }
    return std::nullopt;
}

Relation Relation::closed_reflexively() const {
    auto rows = rows_;
    for (int x = 0; x < size(); ++x) rows[x] |= Mask{1} << x;
    return Relation(universe_, std::move(rows));
}

Relation Relation::closed_transitively() const {
    auto rows = rows_;
    const int n = size();
    for (int k = 0; k < n; ++k)
        for (int x = 0; x < n; ++x)
            if (rows[x] >> k & 1) rows[x] |= rows[k];
    return Relation(universe_, std::move(rows));
}

Relation Relation::restricted(Mask keep, const Universe& sub) const {
    if (popcount(keep) != sub.size())
        throw input_error("restriction carrier does not match sub-universe");
    std::vector<Mask> rows;
    rows.reserve(sub.size());
    for (Mask rest = keep; rest; rest &= rest - 1)
        rows.push_back(compress(rows_[lowest_bit(rest)] & keep, keep));
    return Relation(sub, std::move(rows));
}

GaSpace::GaSpace(Universe u, Relation r)
    : universe_(std::move(u)), relation_(std::move(r)) {
    if (!universe_.same(relation_.universe()))
        throw input_error("relation universe differs from space universe");
}

ElemSet GaSpace::successors(int x) const { return ElemSet(universe_, succ_mask(x)); }

ElemSet GaSpace::successors(std::string_view token) const {
    return successors(universe_.index(token));
}

Mask GaSpace::pred_mask(int x) const {
    Mask out = 0;
    for (int y = 0; y < universe_.size(); ++y)
        if (relation_.has(y, x)) out |= Mask{1} << y;
    return out;
}

ElemSet GaSpace::predecessors(int x) const { return ElemSet(universe_, pred_mask(x)); }

ElemSet GaSpace::predecessors(std::string_view token) const {
    return predecessors(universe_.index(token));
}

Mask GaSpace::upper_mask(Mask a) const {
    Mask out = 0;
    for (int x = 0; x < universe_.size(); ++x)
        if (relation_.row(x) & a) out |= Mask{1} << x;
    return out;
}

Mask GaSpace::lower_mask(Mask a) const {
    Mask out = 0;
    for (int x = 0; x < universe_.size(); ++x)
        if (subset(relation_.row(x), a)) out |= Mask{1} << x;
    return out;
}

ElemSet GaSpace::upper_approx(const ElemSet& a) const {
    if (!universe_.same(a.universe())) throw input_error("universe mismatch");
    return ElemSet(universe_, upper_mask(a.bits()));
}

ElemSet GaSpace::lower_approx(const ElemSet& a) const {
    if (!universe_.same(a.universe())) throw input_error("universe mismatch");
    return ElemSet(universe_, lower_mask(a.bits()));
}

GaSpace GaSpace::transitive_closure() const {
    return GaSpace(universe_, relation_.closed_transitively());
}

}  // namespace cfdom
