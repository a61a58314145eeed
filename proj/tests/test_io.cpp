#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "cfdom/io.hpp"

using namespace cfdom;

TEST_CASE("space files parse and print canonically") {
    std::string text =
        "# comment line\n"
        "@elements a b c\n"
        "@pair a b   # trailing comment\n"
        "@pair a a\n"
        "@pair a b\n"  // duplicate collapses
        "@set c a\n"
        "@set\n";
    SpaceFile f = parse_space(text, "t");
    CHECK(f.universe.names() == std::vector<std::string>{"a", "b", "c"});
    CHECK(f.pairs == std::vector<std::pair<int, int>>{{0, 0}, {0, 1}});
    CHECK(f.family == std::vector<Mask>{0b101, 0b000});

    std::string printed = print_space(f);
    CHECK(printed ==
          "@elements a b c\n"
          "@pair a a\n"
          "@pair a b\n"
          "@set a c\n"
          "@set\n");
    CHECK(parse_space(printed, "again") == f);
}

TEST_CASE("space parse errors carry name, line, and column") {
    auto expect_error = [](const std::string& text, const std::string& what) {
        try {
            parse_space(text, "f");
            FAIL("expected a parse error for: " << text);
        } catch (const parse_error& e) {
            CHECK(std::string(e.what()).find(what) != std::string::npos);
        }
    };
    expect_error("@pair a b\n", "before @elements");
    expect_error("@elements a b\n@elements c\n", "duplicate @elements");
    expect_error("@elements a a\n", "duplicate element");
    expect_error("@elements a\n@pair a z\n", "unknown element 'z'");
    expect_error("@elements a\n@pair a\n", "expected two");
    expect_error("@elements a\n@frob a\n", "unknown directive");
    expect_error("@elements a$\n", "invalid token");

    try {
        parse_space("@elements a b\n@pair a z\n", "name");
        FAIL("unreachable");
    } catch (const parse_error& e) {
        CHECK(e.line == 2);
        CHECK(e.col == 9);
        CHECK(std::string(e.what()) == "name:2:9: unknown element 'z'");
    }
}

TEST_CASE("a space file with no @set lines parses to an empty family") {
    SpaceFile f = parse_space("@elements a\n@pair a a\n", "t");
    CHECK(f.family.empty());
    auto built = build_cf(f);
    auto* v = std::get_if<CfViolation>(&built);
    REQUIRE(v != nullptr);
    CHECK(v->kind == CfViolation::Kind::empty_family);
}

TEST_CASE("to_space_file round-trips through build_cf") {
    std::string text =
        "@elements a b\n"
        "@pair a a\n"
        "@pair a b\n"
        "@pair b b\n"
        "@set a\n"
        "@set b\n"
        "@set a b\n";
    SpaceFile f = parse_space(text, "t");
    CfSpace s = std::get<CfSpace>(build_cf(f));
    CHECK(to_space_file(s) == f);
    CHECK(print_space(to_space_file(s)) == text);
}

TEST_CASE("poset files: closure happens at build time") {
    PosetFile pf = parse_poset_file("@elements p q r\n@leq p q\n@leq q r\n", "t");
    CHECK(pf.labels == std::vector<std::string>{"p", "q", "r"});
    CHECK(pf.leqs == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
    FinitePoset p = build_poset(pf);
    CHECK(p.leq(0, 2));
    CHECK(print_poset_file(pf) == "@elements p q r\n@leq p q\n@leq q r\n");

    PosetFile cyc = parse_poset_file("@elements p q\n@leq p q\n@leq q p\n", "t");
    try {
        build_poset(cyc);
        FAIL("cycle accepted");
    } catch (const input_error& e) {
        CHECK(std::string(e.what()).find("cycle") != std::string::npos);
        CHECK(std::string(e.what()).find("p q") != std::string::npos);
    }
}

TEST_CASE("arrow files resolve against family members") {
    std::string space_text =
        "@elements a b\n@pair a a\n@pair a b\n@pair b b\n@set a\n@set b\n@set a b\n";
    CfSpace s = std::get<CfSpace>(build_cf(parse_space(space_text, "s")));
    ArrowFile af = parse_arrow_file("@arrow a -> a b\n@arrow b a -> a\n", "m");
    CHECK(af.arrows.size() == 2);
    auto arrows = resolve_arrows(af, s, s);
    // {a} -> {a b} and {a b} -> {a} (order inside a side is irrelevant)
    CHECK(arrows == std::vector<std::pair<int, int>>{{0, 2}, {2, 0}});

    ArrowFile missing = parse_arrow_file("@arrow b -> a\n@arrow a -> b b\n", "m");
    CHECK(missing.arrows[1].rhs == std::vector<std::string>{"b", "b"});
    ArrowFile unknown = parse_arrow_file("@arrow q -> a\n", "m");
    CHECK_THROWS_AS(resolve_arrows(unknown, s, s), input_error);
    ArrowFile nonmember = parse_arrow_file("@arrow a -> a\n@arrow a b b -> a\n", "m");
    CHECK_NOTHROW(resolve_arrows(nonmember, s, s));  // duplicate tokens still name {a b}

    CHECK_THROWS_AS(parse_arrow_file("@arrow a b\n", "m"), parse_error);  // missing ->
    // an empty side names the empty member; this space has none
    ArrowFile empty_side = parse_arrow_file("@arrow -> a\n", "m");
    CHECK(empty_side.arrows[0].lhs.empty());
    CHECK_THROWS_AS(resolve_arrows(empty_side, s, s), input_error);
}

TEST_CASE("dot output walks hasse edges bottom-up") {
    FinitePoset p = FinitePoset::make_or_throw({"lo", "hi"}, {{0, 1}});
    CHECK(poset_dot(p, "g") ==
          "digraph g {\n"
          "  rankdir=BT;\n"
          "  n0 [label=\"lo\"];\n"
          "  n1 [label=\"hi\"];\n"
          "  n0 -> n1;\n"
          "}\n");
}

TEST_CASE("file io errors are input errors") {
    CHECK_THROWS_AS(read_file("/nonexistent/path/x.cfspace"), input_error);
    std::filesystem::path tmp = std::filesystem::temp_directory_path() / "cfdom_io_test.txt";
    write_file(tmp.string(), "payload");
    CHECK(read_file(tmp.string()) == "payload");
    std::remove(tmp.string().c_str());
    CHECK_THROWS_AS(write_file("/nonexistent/dir/x.txt", "y"), input_error);
}
