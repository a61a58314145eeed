#pragma once
// Text formats and reports.
//
// Space files (.cfspace), line oriented, `#` starts a comment:
//   @elements a b c      one line, declares the carrier in order
//   @pair a b            one relation pair per line, "a R b"
//   @set a b             one family member per line; a bare "@set" is ∅
//
// Poset files (.poset):
//   @elements x y z
//   @leq x y             generators; the reflexive-transitive closure is taken
//
// Arrow files (.arrows):
//   @arrow a b -> u v    ({a,b}, {u,v}) goes into the relation; each side must
//                        equal an existing family member of its space
//
// Parsers report failures as "<name>:<line>:<col>: <message>".

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cfdom/cf_space.hpp"
#include "cfdom/poset.hpp"

namespace cfdom {

struct parse_error : input_error {
    parse_error(const std::string& name, int line, int col, const std::string& msg);
    int line = 0;
    int col = 0;
};

struct SpaceFile {
    Universe universe;
    std::vector<std::pair<int, int>> pairs;  // sorted row-major, deduplicated
    std::vector<Mask> family;                // file order, deduplicated

    friend bool operator==(const SpaceFile& a, const SpaceFile& b) {
        return a.universe.same(b.universe) && a.pairs == b.pairs && a.family == b.family;
    }
};

SpaceFile parse_space(std::string_view text, const std::string& name);
std::string print_space(const SpaceFile& f);
SpaceFile to_space_file(const CfSpace& space);

GaSpace build_ga(const SpaceFile& f);
std::variant<CfSpace, CfViolation> build_cf(const SpaceFile& f);

struct PosetFile {
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> leqs;  // generators, sorted, deduplicated

    friend bool operator==(const PosetFile& a, const PosetFile& b) {
        return a.labels == b.labels && a.leqs == b.leqs;
    }
};

PosetFile parse_poset_file(std::string_view text, const std::string& name);
std::string print_poset_file(const PosetFile& f);
// Closure plus antisymmetry check; a cycle is an input error naming its members.
FinitePoset build_poset(const PosetFile& f);

struct ArrowFile {
    struct Line {
        std::vector<std::string> lhs;
        std::vector<std::string> rhs;
        int line = 0;
    };
    std::string name;
    std::vector<Line> arrows;
};

ArrowFile parse_arrow_file(std::string_view text, const std::string& name);
// Each side must name a family member of its space (as a set, order-free).
std::vector<std::pair<int, int>> resolve_arrows(const ArrowFile& f, const CfSpace& src,
                                                const CfSpace& dst);

// Hasse diagram, bottom-up, node labels taken from the poset.
std::string poset_dot(const FinitePoset& p, const std::string& graph_name);

// Whole-file read; IO failures become input_error.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace cfdom
