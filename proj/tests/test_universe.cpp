#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "cfdom/universe.hpp"

using namespace cfdom;

TEST_CASE("tokens and lookup") {
    Universe u({"a", "b", "c"});
    CHECK(u.size() == 3);
    CHECK(u.name(1) == "b");
    CHECK(u.index("c") == 2);
    CHECK(u.find("z") == std::nullopt);
    CHECK_THROWS_AS(u.index("z"), input_error);
    CHECK_THROWS_AS(Universe({"a", "a"}), input_error);
    CHECK_THROWS_AS(Universe({"bad token"}), input_error);
    CHECK_THROWS_AS(Universe({""}), input_error);
    CHECK(valid_token("x_9"));
    CHECK_FALSE(valid_token("x y"));
    CHECK_FALSE(valid_token("#x"));
}

TEST_CASE("same is token-for-token") {
    Universe u({"a", "b"});
    Universe copy = u;
    Universe rebuilt({"a", "b"});
    Universe other({"b", "a"});
    CHECK(u.same(copy));
    CHECK(u.same(rebuilt));
    CHECK_FALSE(u.same(other));
}

TEST_CASE("set_str formatting") {
    Universe u({"a", "b", "c"});
    CHECK(set_str(u, 0) == "{}");
    CHECK(set_str(u, 0b101) == "{a c}");
    CHECK(set_str(u, u.full_mask()) == "{a b c}");
}

TEST_CASE("set_lex_less orders by ascending index sequences") {
    // {} < {0} < {0,1} < {0,2} < {1} < {1,2} < {2}
    std::vector<Mask> expect = {0b000, 0b001, 0b011, 0b101, 0b010, 0b110, 0b100};
    std::vector<Mask> got = expect;
    std::sort(got.begin(), got.end());  // numeric first, then re-sort set-lex
    std::sort(got.begin(), got.end(), set_lex_less);
    CHECK(got == expect);
    CHECK_FALSE(set_lex_less(0b001, 0b001));
}

TEST_CASE("subsets_of is every subset in numeric order") {
    auto subs = subsets_of(0b1011);
    CHECK(subs.size() == 8);
    CHECK(subs.front() == 0);
    CHECK(subs.back() == 0b1011);
    CHECK(std::is_sorted(subs.begin(), subs.end()));
    for (Mask s : subs) CHECK(subset(s, 0b1011));
    CHECK_THROWS_AS(subsets_of((Mask{1} << 20) - 1, 16), budget_error);
}

TEST_CASE("subsets_size_lex orders by size then set-lex") {
    auto subs = subsets_size_lex(0b111);
    std::vector<Mask> expect = {0b000, 0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111};
    CHECK(subs == expect);
}

TEST_CASE("for_each_subset visits the same sets as subsets_of") {
    Mask m = 0b10110;
    std::vector<Mask> seen;
    for_each_subset(m, [&](Mask k) { seen.push_back(k); });
    std::sort(seen.begin(), seen.end());
    CHECK(seen == subsets_of(m));
}

TEST_CASE("compress packs selected bits densely") {
    // within = {0,2,3}: bit0->0, bit2->1, bit3->2
    CHECK(compress(0b0100, 0b1101) == 0b010);
    CHECK(compress(0b1001, 0b1101) == 0b101);
    CHECK(compress(0b0010, 0b1101) == 0);  // bit outside `within` is dropped
    CHECK(compress(0, 0b1101) == 0);
}

TEST_CASE("reindex maps by token") {
    Universe from({"a", "b", "c"});
    Universe to({"c", "x", "a", "b"});
    CHECK(reindex(0b101, from, to) == 0b101);  // {a c} -> bits 2 and 0
    CHECK_THROWS_AS(reindex(0b1, from, Universe({"z"})), input_error);
}

TEST_CASE("ElemSet algebra") {
    Universe u({"a", "b", "c"});
    ElemSet s = ElemSet::from_tokens(u, {"a", "c"});
    CHECK(s.bits() == 0b101);
    CHECK(s.contains("a"));
    CHECK_FALSE(s.contains(1));
    CHECK(s.complement().bits() == 0b010);
    CHECK(s.intersect(ElemSet(u, 0b011)).bits() == 0b001);
    CHECK(s.unite(ElemSet(u, 0b010)).bits() == u.full_mask());
    CHECK(s.minus(ElemSet(u, 0b001)).bits() == 0b100);
    CHECK(s.subset_of(ElemSet(u, u.full_mask())));
    CHECK(s.elements() == std::vector<int>{0, 2});
    CHECK(s.str() == "{a c}");
    Universe v({"a", "b", "c", "d"});
    CHECK_THROWS_AS(s.unite(ElemSet(v, 0b1)), input_error);
}

TEST_CASE("bit helpers") {
    CHECK(popcount(0b1011) == 3);
    CHECK(lowest_bit(0b1100) == 2);
    CHECK(subset(0b101, 0b111));
    CHECK_FALSE(subset(0b101, 0b100));
}
