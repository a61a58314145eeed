#pragma once
// Deterministic random instances, the replayable law registry, bounded
// counterexample search, and greedy shrinking.
//
// Every law the library claims — operator identities, closed-set oracles,
// classification implications, representation theorems, morphism laws — is
// registered here by name and replayed against generated instances.  A law
// that fails (or throws) yields a Finding carrying the serialized instance,
// so the run that found it can be reproduced from the artifact alone.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cfdom/induced.hpp"
#include "cfdom/morphisms.hpp"

namespace cfdom {

// Fixed-algorithm generator so identical seeds give identical instances on
// every platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    std::uint64_t below(std::uint64_t bound);  // uniform-ish in [0, bound)
    bool chance(double p);

private:
    std::uint64_t state_;
};

enum class GenMode { preorder, transitive, poset };

struct GenParams {
    int max_universe = 6;
    int max_family = 5;
    double density = 0.35;
    GenMode mode = GenMode::preorder;
    std::uint64_t seed = 0;
};

FinitePoset gen_poset(const GenParams& params, SplitMix64& rng);
// Unconstrained relation; substrate for the operator-law suite.
GaSpace gen_ga_space(const GenParams& params, SplitMix64& rng);
// preorder mode closes the relation reflexively-transitively, making any
// family valid; transitive mode closes transitively only and then repairs
// covering-axiom violations by adding, per violating member F, the smallest
// G ⊆ upper(F) whose image recovers upper(F).  Returns nothing when repair
// or the family-size cap keeps failing across resamples.
std::optional<CfSpace> gen_cf_space(const GenParams& params, SplitMix64& rng);

// A monotone map p -> q (as an image vector), built along a linear extension;
// falls back to a constant map when a random choice dead-ends.
std::vector<int> gen_monotone_map(const FinitePoset& p, const FinitePoset& q, SplitMix64& rng);

struct Finding {
    std::string property;
    std::string instance;  // serialized space/poset text, replayable
    std::string witness;
    bool shrunk = false;
};

// Law registries.  Each returns one Finding per violated law; exceptions
// inside a law are reported as findings, not propagated.
std::vector<Finding> check_ga_laws(const GaSpace& ga);
std::vector<Finding> check_space_laws(const CfSpace& space);
std::vector<Finding> check_poset_laws(const FinitePoset& p);
// Builds random monotone maps p -> q -> r over the induced spaces and checks
// relation axioms, induced-map laws, identity and associativity.
std::vector<Finding> check_morphism_laws(const FinitePoset& p, const FinitePoset& q,
                                         const FinitePoset& r, SplitMix64& rng);

struct SuiteResult {
    int instances = 0;
    int skipped = 0;  // generation failures
    std::vector<Finding> findings;
};

// poset mode: per round one poset through the poset laws plus a small-carrier
// triple through the morphism laws; other modes: one GA space through the
// operator laws and one CF space through the space laws.
SuiteResult run_theorem_suite(const GenParams& params, int count);

// Target properties for bounded search, by name.
std::vector<std::string> search_registry();

// Exhaustively enumerates all transitive-relation spaces with small carriers
// (full sweep through |U| = 3, then a budget-capped deterministic prefix at
// |U| = 4), then samples randomly; `budget` caps the number of candidate
// spaces examined.  A hit is shrunk before it is returned.
std::optional<Finding> search_counterexample(const std::string& property,
                                             const GenParams& params, long long budget);

// Greedy deletion of elements, relation pairs, and family members until no
// single deletion keeps the predicate true.  `keep` sees only valid spaces.
CfSpace shrink_space(CfSpace space, const std::function<bool(const CfSpace&)>& keep);

}  // namespace cfdom
