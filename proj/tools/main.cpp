// Command-line front end: validate and classify space files, explore closed
// sets, convert posets to spaces and back, check morphisms, and run the
// randomized law suite.  Exit codes: 0 success / property holds, 1 property
// fails, 2 input or IO error, 3 fuzzing found a counterexample.
#include <filesystem>
#include <functional>
#include <iostream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "cfdom/classify.hpp"
#include "cfdom/fuzz.hpp"
#include "cfdom/induced.hpp"
#include "cfdom/io.hpp"
#include "cfdom/morphisms.hpp"

namespace {

using namespace cfdom;

std::string base_name(const std::string& path) {
    return std::filesystem::path(path).filename().string();
}

SpaceFile load_space_file(const std::string& path) {
    return parse_space(read_file(path), base_name(path));
}

CfSpace must_space(const std::string& path) {
    SpaceFile sf = load_space_file(path);
    auto built = build_cf(sf);
    if (auto* bad = std::get_if<CfViolation>(&built))
        throw input_error(base_name(path) + ": not a CF-approximation space: " +
                          bad->str(sf.universe));
    return std::move(std::get<CfSpace>(built));
}

FinitePoset load_poset(const std::string& path) {
    return build_poset(parse_poset_file(read_file(path), base_name(path)));
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty())
        std::cout << text;
    else
        write_file(out_path, text);
}

int cmd_check(const std::string& file, bool close) {
    SpaceFile sf = load_space_file(file);
    GaSpace ga = build_ga(sf);
    if (close) ga = GaSpace(ga.universe(), ga.relation().closed_transitively());
    auto built = CfSpace::validate(ga, FiniteFamily(ga.universe(), sf.family));
    if (auto* bad = std::get_if<CfViolation>(&built)) {
        std::cout << "violation " << bad->str(ga.universe()) << "\n";
        return 1;
    }
    std::cout << "valid\n";
    return 0;
}

int cmd_closed(const std::string& file, bool oracle) {
    CfSpace space = must_space(file);
    std::vector<Mask> closed = space.closed_sets();
    for (Mask e : closed) std::cout << set_str(space.universe(), e) << "\n";
    if (oracle && closed != space.closed_sets_oracle()) {
        std::cerr << "oracle disagrees with the image enumeration\n";
        return 1;
    }
    return 0;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

int cmd_classify(const std::string& file) {
    CfSpace space = must_space(file);
    SpaceClassReport rep = classify_space(space);
    std::cout << "topological=" << yes_no(rep.topological) << " ultra_sl=" << yes_no(rep.ultra_sl)
              << " sl=" << yes_no(rep.sl) << " l=" << yes_no(rep.l) << " bc=" << yes_no(rep.bc)
              << "\n";
    const Universe& u = space.universe();
    for (const auto& [flag, query] : rep.witnesses)
        std::cout << "witness " << space_flag_name(flag) << ": M=" << set_str(u, query.m)
                  << " F=" << set_str(u, query.f) << "\n";
    return 0;
}

std::string poset_set_str(const FinitePoset& p, Mask m) {
    std::string out = "{";
    bool first = true;
    for (int i = 0; i < p.size(); ++i)
        if (m & (Mask{1} << i)) {
            if (!first) out += " ";
            out += p.label(i);
            first = false;
        }
    return out + "}";
}

int cmd_domain(const std::string& file) {
    FinitePoset p = load_poset(file);
    PosetClassReport rep = classify_poset(p);
    constexpr PosetFlag kOrder[] = {
        PosetFlag::pointed,   PosetFlag::sup_semilattice, PosetFlag::complete_lattice,
        PosetFlag::bc_poset,  PosetFlag::cusl,            PosetFlag::sl_cusl,
        PosetFlag::l_cusl,    PosetFlag::sl_domain,       PosetFlag::l_domain,
        PosetFlag::bc_domain, PosetFlag::continuous,      PosetFlag::algebraic,
    };
    for (PosetFlag f : kOrder)
        std::cout << poset_flag_name(f) << "=" << yes_no(rep.flag(f)) << "\n";
    for (const auto& [flag, w] : rep.witnesses) {
        std::cout << "witness " << poset_flag_name(flag) << ": set=" << poset_set_str(p, w.subset);
        if (w.bound) std::cout << " bound=" << p.label(*w.bound);
        std::cout << "\n";
    }
    return 0;
}

int cmd_induce(const std::string& file, const std::string& out, bool reduced) {
    FinitePoset p = load_poset(file);
    InducedSpace ind = induce_cf_space(p, reduced ? FamilyMode::reduced : FamilyMode::full);
    emit(out, print_space(to_space_file(ind.space)));
    return 0;
}

int cmd_roundtrip(const std::string& file) {
    FinitePoset p = load_poset(file);
    RoundtripReport rep = representation_roundtrip(p);
    if (!rep.ok) {
        std::cout << "failed: " << rep.failure << "\n";
        return 1;
    }
    std::cout << "ok\n";
    return 0;
}

int cmd_dense(const std::string& file, const std::vector<std::string>& elements,
              const std::vector<int>& indices) {
    CfSpace space = must_space(file);
    const Universe& u = space.universe();
    Mask v = 0;
    for (const std::string& tok : elements) v |= Mask{1} << u.index(tok);
    std::vector<Mask> g;
    for (int i : indices) {
        if (i < 0 || i >= space.family().size())
            throw input_error("family index out of range: " + std::to_string(i));
        g.push_back(space.family().member(i));
    }
    DenseIso iso = dense_iso(space, v, g);
    if (!iso.ok) {
        std::cout << iso.failure << "\n";
        return 1;
    }
    const Universe& su = iso.sub->universe();
    std::cout << "dense\n";
    for (const auto& [parent, trace] : iso.pairs)
        std::cout << set_str(u, parent) << " -> " << set_str(su, trace) << "\n";
    return 0;
}

int cmd_morphism(const std::string& src_file, const std::string& dst_file,
                 const std::string& arrow_file) {
    CfSpace src = must_space(src_file);
    CfSpace dst = must_space(dst_file);
    ArrowFile af = parse_arrow_file(read_file(arrow_file), base_name(arrow_file));
    auto arrows = resolve_arrows(af, src, dst);
    auto checked = validate_approximable(src, dst, arrows);
    if (auto* bad = std::get_if<std::vector<AxiomViolation>>(&checked)) {
        for (const AxiomViolation& v : *bad)
            std::cout << "axiom " << v.axiom << ": " << v.detail << "\n";
        return 1;
    }
    const ApproximableRelation& theta = std::get<ApproximableRelation>(checked);
    for (const auto& [e, h] : induced_map(theta))
        std::cout << set_str(src.universe(), e) << " -> " << set_str(dst.universe(), h) << "\n";
    return 0;
}

int cmd_poset(const std::string& file, const std::string& dot_out) {
    CfSpace space = must_space(file);
    emit(dot_out, poset_dot(space.closed_poset(), "closed_sets"));
    return 0;
}

std::string write_finding(const std::string& dir, const Finding& f, std::uint64_t seed) {
    std::filesystem::path folder = std::filesystem::path(dir) / f.property;
    std::filesystem::create_directories(folder);
    std::filesystem::path path = folder / (std::to_string(seed) + ".cfspace");
    for (int k = 2; std::filesystem::exists(path); ++k)
        path = folder / (std::to_string(seed) + "-" + std::to_string(k) + ".cfspace");
    write_file(path.string(), "# property: " + f.property + "\n" + f.instance);
    return path.string();
}

int cmd_fuzz(long long budget, std::uint64_t seed, const std::string& property,
             const std::string& dir, int max_universe, int max_family) {
    GenParams params;
    params.seed = seed;
    params.max_universe = max_universe;
    params.max_family = max_family;
    if (!property.empty()) {
        params.mode = GenMode::transitive;
        auto hit = search_counterexample(property, params, budget);
        if (!hit) {
            std::cout << "no counterexample: " << property << " within budget " << budget << "\n";
            return 0;
        }
        std::string path = write_finding(dir, *hit, seed);
        std::cout << "finding " << hit->property << ": " << hit->witness << " -> " << path << "\n";
        return 3;
    }
    SuiteResult total;
    constexpr GenMode kModes[] = {GenMode::preorder, GenMode::transitive, GenMode::poset};
    long long per = budget / 3;
    for (GenMode mode : kModes) {
        params.mode = mode;
        long long rounds = per + (mode == GenMode::preorder ? budget % 3 : 0);
        SuiteResult r = run_theorem_suite(params, static_cast<int>(rounds));
        total.instances += r.instances;
        total.skipped += r.skipped;
        for (Finding& f : r.findings) total.findings.push_back(std::move(f));
    }
    std::cout << "instances=" << total.instances << " skipped=" << total.skipped
              << " findings=" << total.findings.size() << "\n";
    for (const Finding& f : total.findings) {
        std::string path = write_finding(dir, f, seed);
        std::cout << "finding " << f.property << ": " << f.witness << " -> " << path << "\n";
    }
    return total.findings.empty() ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite CF-approximation spaces: validation, classification, representation"};
    app.require_subcommand(1);
    std::function<int()> action;

    {
        auto* c = app.add_subcommand("check", "validate a space file against the covering axiom");
        auto file = std::make_shared<std::string>();
        auto close = std::make_shared<bool>(false);
        c->add_option("file", *file, "space file")->required();
        c->add_flag("--close", *close, "transitively close the relation first");
        c->callback([=, &action] { action = [=] { return cmd_check(*file, *close); }; });
    }
    {
        auto* c = app.add_subcommand("closed", "list the closed sets, one per line");
        auto file = std::make_shared<std::string>();
        auto oracle = std::make_shared<bool>(false);
        c->add_option("file", *file, "space file")->required();
        c->add_flag("--oracle", *oracle, "cross-check against the exhaustive definition");
        c->callback([=, &action] { action = [=] { return cmd_closed(*file, *oracle); }; });
    }
    {
        auto* c = app.add_subcommand("classify", "report the approximation-space flags");
        auto file = std::make_shared<std::string>();
        c->add_option("file", *file, "space file")->required();
        c->callback([=, &action] { action = [=] { return cmd_classify(*file); }; });
    }
    {
        auto* c = app.add_subcommand("domain", "classify a finite poset");
        auto file = std::make_shared<std::string>();
        c->add_option("file", *file, "poset file")->required();
        c->callback([=, &action] { action = [=] { return cmd_domain(*file); }; });
    }
    {
        auto* c = app.add_subcommand("induce", "emit the CF space induced by a poset");
        auto file = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>();
        auto reduced = std::make_shared<bool>(false);
        c->add_option("file", *file, "poset file")->required();
        c->add_option("-o,--out", *out, "output path (stdout when omitted)");
        c->add_flag("--reduced", *reduced, "singletons and topped pairs only");
        c->callback([=, &action] { action = [=] { return cmd_induce(*file, *out, *reduced); }; });
    }
    {
        auto* c = app.add_subcommand("roundtrip",
                                     "check poset -> induced space -> closed-set poset");
        auto file = std::make_shared<std::string>();
        c->add_option("file", *file, "poset file")->required();
        c->callback([=, &action] { action = [=] { return cmd_roundtrip(*file); }; });
    }
    {
        auto* c = app.add_subcommand("dense", "check a dense subspace and its closed-set bijection");
        auto file = std::make_shared<std::string>();
        auto elements = std::make_shared<std::vector<std::string>>();
        auto indices = std::make_shared<std::vector<int>>();
        c->add_option("file", *file, "space file")->required();
        c->add_option("--elements", *elements, "subspace carrier tokens")->required();
        c->add_option("--family-indices", *indices, "member indices kept in the subfamily")
            ->required();
        c->callback([=, &action] {
            action = [=] { return cmd_dense(*file, *elements, *indices); };
        });
    }
    {
        auto* c = app.add_subcommand("morphism", "validate an approximable relation; print its map");
        auto src = std::make_shared<std::string>();
        auto dst = std::make_shared<std::string>();
        auto arrows = std::make_shared<std::string>();
        c->add_option("src", *src, "source space file")->required();
        c->add_option("dst", *dst, "destination space file")->required();
        c->add_option("arrows", *arrows, "arrow file")->required();
        c->callback([=, &action] { action = [=] { return cmd_morphism(*src, *dst, *arrows); }; });
    }
    {
        auto* c = app.add_subcommand("poset", "closed-set poset of a space, as a Hasse diagram");
        auto file = std::make_shared<std::string>();
        auto dot = std::make_shared<std::string>();
        c->add_option("file", *file, "space file")->required();
        c->add_option("--dot", *dot, "DOT output path (stdout when omitted)");
        c->callback([=, &action] { action = [=] { return cmd_poset(*file, *dot); }; });
    }
    {
        auto* c = app.add_subcommand("fuzz", "replay the law suite or search for a counterexample");
        auto budget = std::make_shared<long long>(200);
        auto seed = std::make_shared<std::uint64_t>(0);
        auto property = std::make_shared<std::string>();
        auto dir = std::make_shared<std::string>("findings");
        auto max_universe = std::make_shared<int>(6);
        auto max_family = std::make_shared<int>(5);
        c->add_option("--budget", *budget, "instances generated / candidates examined");
        c->add_option("--seed", *seed, "generator seed");
        c->add_option("--property", *property, "search for a space with this named property");
        c->add_option("--findings-dir", *dir, "where findings are written");
        c->add_option("--max-universe", *max_universe, "carrier size cap");
        c->add_option("--max-family", *max_family, "family size cap");
        c->callback([=, &action] {
            action = [=] {
                return cmd_fuzz(*budget, *seed, *property, *dir, *max_universe, *max_family);
            };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    try {
        return action();
    } catch (const cfdom::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const cfdom::budget_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
