#include "cfdom/universe.hpp"

#include <algorithm>

namespace cfdom {

bool set_lex_less(Mask a, Mask b) {
    while (a && b) {
        int x = lowest_bit(a);
        int y = lowest_bit(b);
        if (x != y) return x < y;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

std::vector<Mask> subsets_of(Mask m, int max_bits) {
    if (popcount(m) > max_bits)
        throw budget_error("subset sweep over " + std::to_string(popcount(m)) +
                           " elements exceeds bound " + std::to_string(max_bits));
    std::vector<Mask> out;
    out.reserve(std::size_t{1} << popcount(m));
    for_each_subset(m, [&](Mask k) { out.push_back(k); });
    return out;
}

std::vector<Mask> subsets_size_lex(Mask m, int max_bits) {
    auto out = subsets_of(m, max_bits);
    std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
        int ca = popcount(a), cb = popcount(b);
        if (ca != cb) return ca < cb;
        return set_lex_less(a, b);
    });
    return out;
}

bool valid_token(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
                  (c >= '0' && c <= '9') || c == '_';
        if (!ok) return false;
    }
    return true;
}

Universe::Universe() : data_(std::make_shared<Data>()) {}

Universe::Universe(std::vector<std::string> names) {
    auto data = std::make_shared<Data>();
    if (names.size() > 60)
        throw input_error("universe too large: " + std::to_string(names.size()) +
                          " elements (limit 60)");
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (!valid_token(names[i]))
            throw input_error("invalid element token '" + names[i] + "'");
        if (!data->index.emplace(names[i], static_cast<int>(i)).second)
            throw input_error("duplicate element '" + names[i] + "'");
    }
    data->names = std::move(names);
    data_ = std::move(data);
}

std::optional<int> Universe::find(std::string_view token) const {
    auto it = data_->index.find(std::string(token));
    if (it == data_->index.end()) return std::nullopt;
    return it->second;
}

int Universe::index(std::string_view token) const {
    auto i = find(token);
    if (!i) throw input_error("unknown element '" + std::string(token) + "'");
    return *i;
}

bool Universe::same(const Universe& other) const {
    return data_ == other.data_ || data_->names == other.data_->names;
}

Mask Universe::full_mask() const {
    int n = size();
    return n == 0 ? 0 : (Mask{1} << n) - 1;
}

std::string set_str(const Universe& u, Mask bits) {
    std::string out = "{";
    bool first = true;
    for (int i = 0; i < u.size(); ++i) {
        if (!(bits >> i & 1)) continue;
        if (!first) out += ' ';
        out += u.name(i);
        first = false;
    }
    out += '}';
    return out;
}

Mask reindex(Mask bits, const Universe& from, const Universe& to) {
    Mask out = 0;
    for (int i = 0; i < from.size(); ++i)
        if (bits >> i & 1) out |= Mask{1} << to.index(from.name(i));
    return out;
}

Mask compress(Mask bits, Mask within) {
    Mask out = 0;
    int rank = 0;
    for (Mask rest = within; rest; rest &= rest - 1, ++rank) {
        int i = lowest_bit(rest);
        if (bits >> i & 1) out |= Mask{1} << rank;
    }
    return out;
}

ElemSet::ElemSet(Universe u, Mask bits) : universe_(std::move(u)), bits_(bits) {
    if ((bits_ & ~universe_.full_mask()) != 0)
        throw input_error("set bits outside universe");
}

ElemSet ElemSet::from_tokens(const Universe& u, const std::vector<std::string>& tokens) {
    Mask bits = 0;
    for (const auto& t : tokens) bits |= Mask{1} << u.index(t);
    return ElemSet(u, bits);
}

bool ElemSet::contains(int i) const {
    return i >= 0 && i < universe_.size() && (bits_ >> i & 1);
}

bool ElemSet::contains(std::string_view token) const {
    auto i = universe_.find(token);
    return i && (bits_ >> *i & 1);
}

void ElemSet::require_same(const ElemSet& other) const {
    if (!universe_.same(other.universe_)) throw input_error("universe mismatch");
}

bool ElemSet::subset_of(const ElemSet& other) const {
    require_same(other);
    return subset(bits_, other.bits_);
}

ElemSet ElemSet::unite(const ElemSet& other) const {
    require_same(other);
    return ElemSet(universe_, bits_ | other.bits_);
}

ElemSet ElemSet::intersect(const ElemSet& other) const {
    require_same(other);
    return ElemSet(universe_, bits_ & other.bits_);
}

ElemSet ElemSet::minus(const ElemSet& other) const {
    require_same(other);
    return ElemSet(universe_, bits_ & ~other.bits_);
}

ElemSet ElemSet::complement() const {
    return ElemSet(universe_, ~bits_ & universe_.full_mask());
}

std::vector<int> ElemSet::elements() const {
    std::vector<int> out;
    for (Mask rest = bits_; rest; rest &= rest - 1) out.push_back(lowest_bit(rest));
    return out;
}

}  // namespace cfdom
