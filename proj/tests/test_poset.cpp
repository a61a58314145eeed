#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "cfdom/poset.hpp"

using namespace cfdom;

namespace {

// Fixed small posets used across the suite.  Bit i corresponds to label i.
const FinitePoset kVee =  // x, y below z
    FinitePoset::make_or_throw({"x", "y", "z"}, {{0, 2}, {1, 2}});
const FinitePoset kDiamond =
    FinitePoset::make_or_throw({"bot", "a", "b", "top"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
const FinitePoset kBowtie = FinitePoset::make_or_throw(
    {"bot", "a", "b", "t1", "t2"}, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
const FinitePoset kChain3 = FinitePoset::make_or_throw({"p", "q", "r"}, {{0, 1}, {1, 2}});

}  // namespace

TEST_CASE("closure and antisymmetry") {
    CHECK(kChain3.leq(0, 2));  // transitive closure filled p <= r
    CHECK(kChain3.leq(1, 1));  // reflexive closure
    CHECK_FALSE(kChain3.leq(2, 0));

    auto cyc = FinitePoset::make({"p", "q"}, {{0, 1}, {1, 0}});
    auto* cycle = std::get_if<PosetCycle>(&cyc);
    REQUIRE(cycle != nullptr);
    CHECK(cycle->members == std::vector<int>{0, 1});
    CHECK(cycle->labels == std::vector<std::string>{"p", "q"});
    CHECK_THROWS_AS(FinitePoset::make_or_throw({"p", "q"}, {{0, 1}, {1, 0}}), input_error);
}

TEST_CASE("up and down sets") {
    CHECK(kDiamond.up_set(0) == 0b1111);
    CHECK(kDiamond.down_set(3) == 0b1111);
    CHECK(kDiamond.up_set(1) == 0b1010);
    CHECK(kDiamond.down_set(1) == 0b0011);
    CHECK(kVee.down_set(2) == 0b111);
}

TEST_CASE("least, greatest, minimal, maximal") {
    CHECK(kDiamond.least(0b1111) == 0);
    CHECK(kDiamond.greatest(0b1111) == 3);
    CHECK(kDiamond.least(0b0110) == std::nullopt);  // a, b incomparable
    CHECK(kVee.least(kVee.carrier_mask()) == std::nullopt);
    CHECK(kVee.greatest(0b111) == 2);
    CHECK(kVee.minimal_elements() == 0b011);
    CHECK(kVee.maximal_elements() == 0b100);
    CHECK(kBowtie.maximal_elements() == 0b11000);
}

TEST_CASE("sup distinguishes least upper bound from minimal upper bounds") {
    CHECK(kDiamond.sup(0b0110) == 3);   // {a b} -> top
    CHECK(kDiamond.sup(0) == 0);        // sup {} = bottom
    CHECK(kVee.sup(0b011) == 2);        // {x y} -> z
    CHECK(kVee.sup(0) == std::nullopt); // no bottom
    // {a b} in the bowtie has upper bounds t1, t2 but no least one
    CHECK(kBowtie.sup(0b00110) == std::nullopt);
    CHECK(kBowtie.sup(0) == 0);
}

TEST_CASE("sup_within is sup of the principal ideal") {
    // inside down(t1) the pair {a b} does get a sup: t1 itself
    CHECK(kBowtie.sup_within(0b00110, 3) == 3);
    CHECK(kBowtie.sup_within(0b00110, 4) == 4);
    CHECK(kBowtie.sup_within(0, 3) == 0);  // least of down(t1)
    CHECK(kVee.sup_within(0, 2) == std::nullopt);
    CHECK(kDiamond.sup_within(0b0010, 3) == 1);
}

TEST_CASE("directedness") {
    CHECK_FALSE(kVee.is_directed(0));
    CHECK(kVee.is_directed(0b100));
    CHECK(kVee.is_directed(0b111));    // z bounds everything
    CHECK_FALSE(kVee.is_directed(0b011));
    CHECK(kBowtie.is_directed(0b01011));         // {bot a t1}: t1 bounds each pair
    CHECK_FALSE(kBowtie.is_directed(0b00111));   // {a b} has no bound inside
    CHECK_FALSE(kBowtie.is_directed(0b11000));
    auto dirs = kChain3.directed_subsets();
    CHECK(dirs.size() == 7);  // every nonempty subset of a chain plus... exactly the 7
    for (Mask d : dirs) CHECK(kChain3.is_directed(d));
}

TEST_CASE("finite way-below collapses to the order") {
    for (const FinitePoset* p : {&kVee, &kDiamond, &kBowtie, &kChain3}) {
        auto m = way_below_matrix_definitional(*p);
        for (int x = 0; x < p->size(); ++x)
            for (int y = 0; y < p->size(); ++y) {
                CHECK(m[x][y] == p->leq(x, y));
                CHECK(p->way_below(x, y) == p->leq(x, y));
            }
        CHECK(p->compacts() == p->carrier_mask());
        CHECK(is_basis(*p, p->carrier_mask()));
    }
    CHECK_FALSE(is_basis(kVee, 0b011));  // {x y} has nothing below z directed to z
}

TEST_CASE("classification truth table") {
    struct Row {
        const FinitePoset* p;
        bool pointed, sup_sl, complete, bc, sl_cusl, l_cusl, sl_dom, l_dom, bc_dom;
    };
    const Row rows[] = {
        {&kVee, false, true, false, false, true, false, true, false, false},
        {&kBowtie, true, false, false, false, true, true, true, true, false},
        {&kDiamond, true, true, true, true, true, true, true, true, true},
        {&kChain3, true, true, true, true, true, true, true, true, true},
    };
    for (const Row& r : rows) {
        PosetClassReport rep = classify_poset(*r.p);
        CAPTURE(r.p->labels());
        CHECK(rep.pointed == r.pointed);
        CHECK(rep.sup_semilattice == r.sup_sl);
        CHECK(rep.complete_lattice == r.complete);
        CHECK(rep.bc_poset == r.bc);
        CHECK(rep.cusl == r.bc);  // finite collapse: cusl == bc-poset
        CHECK(rep.sl_cusl == r.sl_cusl);
        CHECK(rep.l_cusl == r.l_cusl);
        CHECK(rep.sl_domain == r.sl_dom);
        CHECK(rep.l_domain == r.l_dom);
        CHECK(rep.bc_domain == r.bc_dom);
        CHECK(rep.continuous);  // finite posets are continuous and algebraic
        CHECK(rep.algebraic);
        for (const auto& [flag, w] : rep.witnesses) {
            CAPTURE(poset_flag_name(flag));
            CHECK_FALSE(rep.flag(flag));
            CHECK(witness_refutes(*r.p, flag, w));
        }
    }
}

TEST_CASE("bowtie witnesses name the incomparable pair") {
    PosetClassReport rep = classify_poset(kBowtie);
    REQUIRE(rep.witnesses.count(PosetFlag::sup_semilattice) == 1);
    CHECK(rep.witnesses.at(PosetFlag::sup_semilattice).subset == 0b00110);
}

TEST_CASE("isomorphism finds the relabeling") {
    FinitePoset q = FinitePoset::make_or_throw({"m", "n", "o", "w"},
                                               {{3, 1}, {3, 2}, {1, 0}, {2, 0}});
    auto iso = are_isomorphic(kDiamond, q);
    REQUIRE(iso.has_value());
    CHECK((*iso)[0] == 3);  // bot -> w
    CHECK((*iso)[3] == 0);  // top -> o
    CHECK(are_isomorphic(kDiamond, kVee) == std::nullopt);
    CHECK(are_isomorphic(kVee, kChain3) == std::nullopt);
}

TEST_CASE("hasse edges drop transitive pairs") {
    auto edges = hasse_edges(kChain3);
    CHECK(edges == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
    auto dia = hasse_edges(kDiamond);
    CHECK(dia == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 3}, {2, 3}});
}

TEST_CASE("scott continuity coincides with monotonicity finitely") {
    // collapse the diamond onto the 3-chain: bot->p, a->q, b->q, top->r
    CHECK(is_scott_continuous(kDiamond, kChain3, {0, 1, 1, 2}));
    // swap endpoints: not monotone
    CHECK_FALSE(is_scott_continuous(kDiamond, kChain3, {2, 1, 1, 0}));
    // constant maps always are
    CHECK(is_scott_continuous(kVee, kChain3, {1, 1, 1}));
}
