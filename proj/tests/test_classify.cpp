#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "cfdom/classify.hpp"
#include "cfdom/induced.hpp"

using namespace cfdom;

namespace {

CfSpace make_space(const std::vector<std::string>& names,
                   const std::vector<std::pair<int, int>>& pairs,
                   const std::vector<Mask>& members) {
    Universe u(names);
    return CfSpace::validate_or_throw(GaSpace(u, Relation::from_pairs(u, pairs)),
                                      FiniteFamily(u, members));
}

// a <= b reflexively; members {a}, {b}, {a b}.
CfSpace two_chain() {
    return make_space({"a", "b"}, {{0, 0}, {0, 1}, {1, 1}}, {0b01, 0b10, 0b11});
}

// Discrete order, members {p}, {q}, {p q r}, {p q s}, {p q r s}: inside the
// top member, {p q} has the two incomparable covers {p q r} and {p q s}.
CfSpace double_cover() {
    return make_space({"p", "q", "r", "s"}, {{0, 0}, {1, 1}, {2, 2}, {3, 3}},
                      {0b0001, 0b0010, 0b0111, 0b1011, 0b1111});
}

CfSpace induced_vee() {
    FinitePoset vee = FinitePoset::make_or_throw({"x", "y", "z"}, {{0, 2}, {1, 2}});
    return induce_cf_space(vee).space;
}

}  // namespace

TEST_CASE("join saturation is all finite unions of members") {
    Universe u({"a", "b", "c"});
    GaSpace ga(u, Relation::from_pairs(u, {{0, 0}, {1, 1}, {2, 2}}));
    FiniteFamily fam(u, {0b001, 0b010});
    auto sat = join_saturation(fam);
    CHECK(sat == std::vector<Mask>{0b001, 0b011, 0b010});  // set order, no empty set
    FiniteFamily with_empty(u, {0b000, 0b001});
    auto sat2 = join_saturation(with_empty);
    CHECK(sat2 == std::vector<Mask>{0b000, 0b001});
}

TEST_CASE("witness families on the two-point chain") {
    CfSpace s = two_chain();
    // members: 0 = {a}, 1 = {b}, 2 = {a b}; images {a}, {a b}, {a b}
    SUBCASE("M = {a}, F = {a b}: only {a} has the least qualifying image") {
        WitnessFamilies w = witness_families(s, 0b01, 0b11);
        CHECK(w.s == std::vector<int>{0});
        CHECK(w.s_star == std::vector<int>{0});
        CHECK(w.sigma == std::vector<int>{0});
    }
    SUBCASE("M = {b}, F = {b}: image of M is {a b}, so S = {b}, {a b}") {
        WitnessFamilies w = witness_families(s, 0b10, 0b10);
        CHECK(w.s == std::vector<int>{1, 2});
        CHECK(w.s_star == std::vector<int>{1, 2});
        CHECK(w.sigma == std::vector<int>{1, 2});
    }
    SUBCASE("M empty: the least image under any F") {
        WitnessFamilies w = witness_families(s, 0, 0b11);
        CHECK(w.s == std::vector<int>{0});
        WitnessFamilies w2 = witness_families(s, 0, 0b01);
        CHECK(w2.s == std::vector<int>{0});
    }
}

TEST_CASE("S is empty under incomparable covers") {
    CfSpace s = double_cover();
    // M = {p q}, F = {p q r s}: qualifying members {p q r}, {p q s}, {p q r s}
    // have incomparable images, none least.
    WitnessFamilies w = witness_families(s, 0b0011, 0b1111);
    CHECK(w.s.empty());
    CHECK(w.s_star.empty());
    CHECK(w.sigma.empty());
    // under F = {p q r} the only qualifier is {p q r} itself
    WitnessFamilies under = witness_families(s, 0b0011, 0b0111);
    CHECK(under.s == std::vector<int>{2});
}

TEST_CASE("classification flags") {
    SpaceClassReport chain = classify_space(two_chain());
    CHECK(chain.topological);
    CHECK(chain.ultra_sl);
    CHECK(chain.sl);
    CHECK(chain.l);
    CHECK(chain.bc);
    CHECK(chain.witnesses.empty());

    SpaceClassReport dc = classify_space(double_cover());
    CHECK(dc.topological);
    CHECK_FALSE(dc.ultra_sl);
    CHECK_FALSE(dc.sl);
    CHECK_FALSE(dc.l);
    CHECK_FALSE(dc.bc);
    REQUIRE(dc.witnesses.count(SpaceFlag::sl) == 1);
    CHECK(dc.witnesses.at(SpaceFlag::sl).m == 0b0011);
    CHECK(dc.witnesses.at(SpaceFlag::sl).f == 0b1111);

    SpaceClassReport vee = classify_space(induced_vee());
    CHECK(vee.topological);
    CHECK(vee.ultra_sl);
    CHECK(vee.sl);
    CHECK_FALSE(vee.l);
    CHECK_FALSE(vee.bc);
    // first failing L query: M empty under the member {x y z}
    CHECK(vee.witnesses.at(SpaceFlag::l).m == 0);
    CHECK(vee.witnesses.at(SpaceFlag::l).f == 0b111);
}

TEST_CASE("classification implications hold on fixed specimens") {
    for (const CfSpace& s : {two_chain(), double_cover(), induced_vee()}) {
        SpaceClassReport r = classify_space(s);
        if (r.ultra_sl) CHECK(r.sl);
        if (r.l) CHECK(r.sl);
        if (r.bc) CHECK(r.l);
        if (r.topological) CHECK(r.ultra_sl == r.sl);
    }
}

TEST_CASE("witnessed queries really are empty") {
    SpaceClassReport dc = classify_space(double_cover());
    CfSpace s = double_cover();
    for (const auto& [flag, q] : dc.witnesses) {
        CAPTURE(space_flag_name(flag));
        WitnessFamilies w = witness_families(s, q.m, q.f);
        if (flag == SpaceFlag::ultra_sl)
            CHECK(w.s_star.empty());
        else if (flag == SpaceFlag::bc)
            CHECK(w.sigma.empty());
        else
            CHECK(w.s.empty());
    }
}

TEST_CASE("sup and least agree with the closed poset") {
    // bowtie induced space is L: every ideal has sups and a least element
    FinitePoset bowtie = FinitePoset::make_or_throw(
        {"bot", "a", "b", "t1", "t2"}, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
    CfSpace s = induce_cf_space(bowtie).space;
    IdealOps ops(s);
    REQUIRE(ops.report().l);

    FinitePoset cp = s.closed_poset();
    std::vector<Mask> closed = s.closed_sets();
    auto index_of = [&](Mask e) {
        return static_cast<int>(std::find(closed.begin(), closed.end(), e) - closed.begin());
    };
    for (size_t i = 0; i < closed.size(); ++i)
        for (size_t j = 0; j < closed.size(); ++j)
            for (size_t k = 0; k < closed.size(); ++k) {
                if (!subset(closed[i] | closed[j], closed[k])) continue;
                Mask got = ops.sup_in_ideal(closed[i], closed[j], closed[k]);
                auto want = cp.sup_within((Mask{1} << i) | (Mask{1} << j), static_cast<int>(k));
                REQUIRE(want.has_value());
                CHECK(index_of(got) == *want);
            }
    for (size_t k = 0; k < closed.size(); ++k) {
        Mask got = ops.least_in_ideal(closed[k]);
        auto want = cp.sup_within(0, static_cast<int>(k));
        REQUIRE(want.has_value());
        CHECK(index_of(got) == *want);
    }
}

TEST_CASE("hand values: sup and least inside the bowtie ideals") {
    FinitePoset bowtie = FinitePoset::make_or_throw(
        {"bot", "a", "b", "t1", "t2"}, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
    CfSpace s = induce_cf_space(bowtie).space;
    IdealOps ops(s);
    Mask da = 0b00011, db = 0b00101;          // down(a), down(b)
    Mask dt1 = 0b01111, dt2 = 0b10111;        // down(t1), down(t2)
    CHECK(ops.sup_in_ideal(da, db, dt1) == dt1);
    CHECK(ops.sup_in_ideal(da, db, dt2) == dt2);
    // arguments must be closed; the empty set is not closed here
    CHECK_THROWS_AS(ops.sup_in_ideal(0, 0, dt1), input_error);
    CHECK(ops.least_in_ideal(dt2) == 0b00001);      // down(bot)
    CHECK(ops.least_in_ideal(0b00001) == 0b00001);
    CHECK_THROWS_AS(ops.sup_in_ideal(dt1, dt2, dt1), input_error);  // args not inside e
}

TEST_CASE("one-shot wrappers match the precomputed object") {
    CfSpace s = two_chain();
    CHECK(supremum_in_ideal(s, 0b01, 0b01, 0b11) == 0b01);
    CHECK(supremum_in_ideal(s, 0b01, 0b11, 0b11) == 0b11);
    CHECK(least_in_ideal(s, 0b11) == 0b01);
    CHECK(least_in_ideal(s, 0b01) == 0b01);
}

TEST_CASE("least_in_ideal requires an L space") {
    CfSpace vee = induced_vee();
    CHECK_THROWS_AS(least_in_ideal(vee, 0b111), input_error);
}

TEST_CASE("sl criterion coincides with classification on preorder spaces") {
    CHECK(sl_cusl_criterion(two_chain()) == classify_space(two_chain()).sl);
    CHECK(sl_cusl_criterion(double_cover()) == classify_space(double_cover()).sl);
    CHECK(sl_cusl_criterion(induced_vee()) == classify_space(induced_vee()).sl);
    // non-preorder spaces are out of range
    CfSpace np = make_space({"a", "b"}, {{0, 0}, {0, 1}}, {0b01, 0b10});
    CHECK_THROWS_AS(sl_cusl_criterion(np), input_error);
}
