#pragma once
// Finite carriers and bit-encoded subsets over them.

#include <bit>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace cfdom {

using Mask = std::uint64_t;

struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when an exhaustive sweep would exceed its configured bound.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline int popcount(Mask m) { return std::popcount(m); }
inline bool subset(Mask a, Mask b) { return (a & ~b) == 0; }
inline int lowest_bit(Mask m) { return std::countr_zero(m); }

// Order on sets viewed as ascending index sequences ({} < {0} < {0,1} < {1}).
bool set_lex_less(Mask a, Mask b);

// All subsets of m in ascending numeric order, 0 and m included.
// popcount(m) must not exceed max_bits.
std::vector<Mask> subsets_of(Mask m, int max_bits = 16);

// All subsets of m ordered by (size, set_lex). Used for minimal witnesses.
std::vector<Mask> subsets_size_lex(Mask m, int max_bits = 16);

template <class Fn>
void for_each_subset(Mask m, Fn&& fn) {
    Mask k = 0;
    while (true) {
        fn(k);
        if (k == m) break;
        k = (k - m) & m;
    }
}

bool valid_token(std::string_view s);

// Immutable list of distinct element tokens; index order is the set order
// used everywhere (printing, witness tie-breaks, enumeration).
class Universe {
public:
    Universe();
    explicit Universe(std::vector<std::string> names);

    int size() const { return static_cast<int>(data_->names.size()); }
    const std::string& name(int i) const { return data_->names.at(i); }
    const std::vector<std::string>& names() const { return data_->names; }
    std::optional<int> find(std::string_view token) const;
    int index(std::string_view token) const;  // throws input_error
    bool same(const Universe& other) const;   // token-for-token equality
    Mask full_mask() const;

private:
    struct Data {
        std::vector<std::string> names;
        std::unordered_map<std::string, int> index;
    };
    std::shared_ptr<const Data> data_;
};

// Renders a mask as "{a b}" using the universe order; "{}" when empty.
std::string set_str(const Universe& u, Mask bits);

// Maps a set across universes by token; every member token must exist in `to`.
Mask reindex(Mask bits, const Universe& from, const Universe& to);

// Compresses the bits of `bits` selected by `within` into a dense low mask;
// bit ranks follow ascending index order.
Mask compress(Mask bits, Mask within);

// Value type pairing a universe with one of its subsets.
class ElemSet {
public:
    ElemSet() = default;
    ElemSet(Universe u, Mask bits);
    static ElemSet from_tokens(const Universe& u, const std::vector<std::string>& tokens);

    const Universe& universe() const { return universe_; }
    Mask bits() const { return bits_; }
    bool empty() const { return bits_ == 0; }
    int count() const { return popcount(bits_); }
    bool contains(int i) const;
    bool contains(std::string_view token) const;
    bool subset_of(const ElemSet& other) const;
    ElemSet unite(const ElemSet& other) const;
    ElemSet intersect(const ElemSet& other) const;
    ElemSet minus(const ElemSet& other) const;
    ElemSet complement() const;
    std::vector<int> elements() const;
    std::string str() const { return set_str(universe_, bits_); }

    friend bool operator==(const ElemSet& a, const ElemSet& b) {
        return a.universe_.same(b.universe_) && a.bits_ == b.bits_;
    }

private:
    void require_same(const ElemSet& other) const;

    Universe universe_;
    Mask bits_ = 0;
};

}  // namespace cfdom
