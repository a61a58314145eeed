#include "cfdom/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace cfdom {

namespace {

std::string diag(const std::string& name, int line, int col, const std::string& msg) {
    return name + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + msg;
}

struct Tok {
    std::string text;
    int col = 0;  // 1-based
};

std::vector<Tok> tokenize(std::string_view line) {
    std::vector<Tok> out;
    size_t i = 0;
    while (i < line.size()) {
        if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
            ++i;
            continue;
        }
        size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        out.push_back({std::string(line.substr(start, i - start)), static_cast<int>(start) + 1});
    }
    return out;
}

std::string_view strip_comment(std::string_view line) {
    size_t pos = line.find('#');
    return pos == std::string_view::npos ? line : line.substr(0, pos);
}

// Shared "@elements" handling for the space and poset grammars.
std::vector<std::string> read_elements(const std::vector<Tok>& toks, const std::string& name,
                                       int line) {
    if (toks.size() < 2) throw parse_error(name, line, toks[0].col, "expected at least one element");
    std::vector<std::string> labels;
    for (size_t t = 1; t < toks.size(); ++t) {
        const auto& tok = toks[t];
        if (!valid_token(tok.text))
            throw parse_error(name, line, tok.col, "invalid token '" + tok.text + "'");
        if (std::find(labels.begin(), labels.end(), tok.text) != labels.end())
            throw parse_error(name, line, tok.col, "duplicate element '" + tok.text + "'");
        labels.push_back(tok.text);
    }
    return labels;
}

int resolve(const Universe& u, const Tok& tok, const std::string& name, int line) {
    if (!valid_token(tok.text))
        throw parse_error(name, line, tok.col, "invalid token '" + tok.text + "'");
    if (auto i = u.find(tok.text)) return *i;
    throw parse_error(name, line, tok.col, "unknown element '" + tok.text + "'");
}

template <class Fn>
void for_each_line(std::string_view text, Fn&& fn) {
    int line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        ++line_no;
        std::vector<Tok> toks = tokenize(strip_comment(text.substr(pos, end - pos)));
        if (!toks.empty()) fn(line_no, toks);
        pos = end + 1;
    }
}

}  // namespace

parse_error::parse_error(const std::string& name, int l, int c, const std::string& msg)
    : input_error(diag(name, l, c, msg)), line(l), col(c) {}

SpaceFile parse_space(std::string_view text, const std::string& name) {
    std::optional<Universe> universe;
    std::vector<std::pair<int, int>> pairs;
    std::vector<Mask> family;
    for_each_line(text, [&](int line, const std::vector<Tok>& toks) {
        const Tok& head = toks[0];
        if (head.text == "@elements") {
            if (universe)
                throw parse_error(name, line, head.col, "duplicate @elements line");
            universe = Universe(read_elements(toks, name, line));
        } else if (head.text == "@pair") {
            if (!universe) throw parse_error(name, line, head.col, "@pair before @elements");
            if (toks.size() != 3)
                throw parse_error(name, line, head.col, "expected two element tokens");
            pairs.emplace_back(resolve(*universe, toks[1], name, line),
                               resolve(*universe, toks[2], name, line));
        } else if (head.text == "@set") {
            if (!universe) throw parse_error(name, line, head.col, "@set before @elements");
            Mask m = 0;
            for (size_t t = 1; t < toks.size(); ++t)
                m |= Mask{1} << resolve(*universe, toks[t], name, line);
            if (std::find(family.begin(), family.end(), m) == family.end()) family.push_back(m);
        } else {
            throw parse_error(name, line, head.col, "unknown directive '" + head.text + "'");
        }
    });
    if (!universe) throw parse_error(name, 1, 1, "missing @elements line");
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    return SpaceFile{*universe, std::move(pairs), std::move(family)};
}

std::string print_space(const SpaceFile& f) {
    std::ostringstream out;
    out << "@elements";
    for (const auto& n : f.universe.names()) out << ' ' << n;
    out << '\n';
    for (auto [x, y] : f.pairs)
        out << "@pair " << f.universe.name(x) << ' ' << f.universe.name(y) << '\n';
    for (Mask m : f.family) {
        out << "@set";
        for (int i = 0; i < f.universe.size(); ++i)
            if (m >> i & 1) out << ' ' << f.universe.name(i);
        out << '\n';
    }
    return out.str();
}

SpaceFile to_space_file(const CfSpace& space) {
    return SpaceFile{space.universe(), space.ga().relation().pairs(),
                     space.family().members()};
}

GaSpace build_ga(const SpaceFile& f) {
    return GaSpace(f.universe, Relation::from_pairs(f.universe, f.pairs));
}

std::variant<CfSpace, CfViolation> build_cf(const SpaceFile& f) {
    return CfSpace::validate(build_ga(f), FiniteFamily(f.universe, f.family));
}

PosetFile parse_poset_file(std::string_view text, const std::string& name) {
    std::optional<Universe> universe;  // reused for token checks only
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> leqs;
    for_each_line(text, [&](int line, const std::vector<Tok>& toks) {
        const Tok& head = toks[0];
        if (head.text == "@elements") {
            if (universe)
                throw parse_error(name, line, head.col, "duplicate @elements line");
            labels = read_elements(toks, name, line);
            universe = Universe(labels);
        } else if (head.text == "@leq") {
            if (!universe) throw parse_error(name, line, head.col, "@leq before @elements");
            if (toks.size() != 3)
                throw parse_error(name, line, head.col, "expected two element tokens");
            leqs.emplace_back(resolve(*universe, toks[1], name, line),
                              resolve(*universe, toks[2], name, line));
        } else {
            throw parse_error(name, line, head.col, "unknown directive '" + head.text + "'");
        }
    });
    if (!universe) throw parse_error(name, 1, 1, "missing @elements line");
    std::sort(leqs.begin(), leqs.end());
    leqs.erase(std::unique(leqs.begin(), leqs.end()), leqs.end());
    return PosetFile{std::move(labels), std::move(leqs)};
}

std::string print_poset_file(const PosetFile& f) {
    std::ostringstream out;
    out << "@elements";
    for (const auto& n : f.labels) out << ' ' << n;
    out << '\n';
    for (auto [x, y] : f.leqs) out << "@leq " << f.labels[x] << ' ' << f.labels[y] << '\n';
    return out.str();
}

FinitePoset build_poset(const PosetFile& f) {
    auto made = FinitePoset::make(f.labels, f.leqs);
    if (auto* cycle = std::get_if<PosetCycle>(&made)) {
        std::string msg = "order has a cycle through:";
        for (const auto& l : cycle->labels) msg += " " + l;
        throw input_error(msg);
    }
    return std::get<FinitePoset>(std::move(made));
}

ArrowFile parse_arrow_file(std::string_view text, const std::string& name) {
    ArrowFile out;
    out.name = name;
    for_each_line(text, [&](int line, const std::vector<Tok>& toks) {
        const Tok& head = toks[0];
        if (head.text != "@arrow")
            throw parse_error(name, line, head.col, "unknown directive '" + head.text + "'");
        ArrowFile::Line arrow;
        arrow.line = line;
        bool seen_sep = false;
        for (size_t t = 1; t < toks.size(); ++t) {
            if (toks[t].text == "->") {
                if (seen_sep)
                    throw parse_error(name, line, toks[t].col, "duplicate '->' separator");
                seen_sep = true;
                continue;
            }
            (seen_sep ? arrow.rhs : arrow.lhs).push_back(toks[t].text);
        }
        if (!seen_sep) throw parse_error(name, line, head.col, "expected '->' separator");
        out.arrows.push_back(std::move(arrow));
    });
    return out;
}

std::vector<std::pair<int, int>> resolve_arrows(const ArrowFile& f, const CfSpace& src,
                                                const CfSpace& dst) {
    auto side = [&](const std::vector<std::string>& tokens, const CfSpace& space, int line,
                    const char* which) {
        Mask m = 0;
        for (const auto& t : tokens) {
            auto i = space.universe().find(t);
            if (!i)
                throw parse_error(f.name, line, 1,
                                  "unknown element '" + t + "' in the " + which + " space");
            m |= Mask{1} << *i;
        }
        if (auto idx = space.family().find(m)) return *idx;
        throw parse_error(f.name, line, 1,
                          std::string(which) + " side " + set_str(space.universe(), m) +
                              " is not a family member");
    };
    std::vector<std::pair<int, int>> out;
    for (const auto& a : f.arrows)
        out.emplace_back(side(a.lhs, src, a.line, "source"),
                         side(a.rhs, dst, a.line, "destination"));
    return out;
}

std::string poset_dot(const FinitePoset& p, const std::string& graph_name) {
    std::ostringstream out;
    out << "digraph " << graph_name << " {\n  rankdir=BT;\n";
    for (int i = 0; i < p.size(); ++i) {
        std::string label;
        for (char c : p.label(i)) {
            if (c == '"' || c == '\\') label += '\\';
            label += c;
        }
        out << "  n" << i << " [label=\"" << label << "\"];\n";
    }
    for (auto [x, y] : hasse_edges(p)) out << "  n" << x << " -> n" << y << ";\n";
    out << "}\n";
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw input_error("cannot write '" + path + "'");
    out << content;
    if (!out) throw input_error("cannot write '" + path + "'");
}

}  // namespace cfdom
