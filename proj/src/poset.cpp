#include "cfdom/poset.hpp"

#include <algorithm>
#include <numeric>

namespace cfdom {

FinitePoset::FinitePoset() = default;

std::variant<FinitePoset, PosetCycle> FinitePoset::make(
    std::vector<std::string> labels,
    const std::vector<std::pair<int, int>>& leq_pairs) {
    const int n = static_cast<int>(labels.size());
    if (n > 60) throw input_error("poset too large (limit 60)");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (labels[i] == labels[j])
                throw input_error("duplicate poset label '" + labels[i] + "'");

    std::vector<Mask> up(n, 0);
    for (int x = 0; x < n; ++x) up[x] = Mask{1} << x;
    for (auto [x, y] : leq_pairs) {
        if (x < 0 || x >= n || y < 0 || y >= n)
            throw input_error("order pair out of range");
        up[x] |= Mask{1} << y;
    }
    for (int k = 0; k < n; ++k)
        for (int x = 0; x < n; ++x)
            if (up[x] >> k & 1) up[x] |= up[k];

    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if ((up[x] >> y & 1) && (up[y] >> x & 1)) {
                PosetCycle cycle;
                for (int k = 0; k < n; ++k)
                    if ((up[x] >> k & 1) && (up[k] >> x & 1)) {
                        cycle.members.push_back(k);
                        cycle.labels.push_back(labels[k]);
                    }
                return cycle;
            }

    FinitePoset p;
    p.labels_ = std::move(labels);
    p.up_ = std::move(up);
    p.down_.assign(n, 0);
    for (int x = 0; x < n; ++x)
        for (Mask rest = p.up_[x]; rest; rest &= rest - 1)
            p.down_[lowest_bit(rest)] |= Mask{1} << x;
    return p;
}

FinitePoset FinitePoset::make_or_throw(
    std::vector<std::string> labels,
    const std::vector<std::pair<int, int>>& leq_pairs) {
    auto r = make(std::move(labels), leq_pairs);
    if (auto* cycle = std::get_if<PosetCycle>(&r)) {
        std::string msg = "antisymmetry violated by cycle:";
        for (const auto& l : cycle->labels) msg += " " + l;
        throw input_error(msg);
    }
    return std::get<FinitePoset>(std::move(r));
}

int FinitePoset::index(std::string_view label) const {
    for (int i = 0; i < size(); ++i)
        if (labels_[i] == label) return i;
    throw input_error("unknown poset element '" + std::string(label) + "'");
}

Mask FinitePoset::carrier_mask() const {
    return size() == 0 ? 0 : (Mask{1} << size()) - 1;
}

bool FinitePoset::is_directed(Mask d) const {
    if (d == 0) return false;
    for (Mask ra = d; ra; ra &= ra - 1) {
        int a = lowest_bit(ra);
        for (Mask rb = ra; rb; rb &= rb - 1) {
            int b = lowest_bit(rb);
            if ((up_[a] & up_[b] & d) == 0) return false;
        }
    }
    return true;
}

std::optional<int> FinitePoset::least(Mask within) const {
    for (Mask rest = within; rest; rest &= rest - 1) {
        int z = lowest_bit(rest);
        if (subset(within, up_[z])) return z;
    }
    return std::nullopt;
}

std::optional<int> FinitePoset::greatest(Mask within) const {
    for (Mask rest = within; rest; rest &= rest - 1) {
        int z = lowest_bit(rest);
        if (subset(within, down_[z])) return z;
    }
    return std::nullopt;
}

std::optional<int> FinitePoset::sup(Mask a) const {
    Mask ubs = 0;
    for (int z = 0; z < size(); ++z)
        if (subset(a, down_[z])) ubs |= Mask{1} << z;
    return least(ubs);
}

std::optional<int> FinitePoset::sup_within(Mask a, int bound) const {
    if (bound < 0 || bound >= size()) throw input_error("sup_within: bad bound");
    if (!subset(a, down_[bound]))
        throw input_error("sup_within: subset not inside the ideal");
    Mask candidates = 0;
    for (Mask rest = down_[bound]; rest; rest &= rest - 1) {
        int z = lowest_bit(rest);
        if (subset(a, down_[z])) candidates |= Mask{1} << z;
    }
    return least(candidates);
}

Mask FinitePoset::minimal_elements() const {
    Mask out = 0;
    for (int x = 0; x < size(); ++x)
        if ((down_[x] & ~(Mask{1} << x)) == 0) out |= Mask{1} << x;
    return out;
}

Mask FinitePoset::maximal_elements() const {
    Mask out = 0;
    for (int x = 0; x < size(); ++x)
        if ((up_[x] & ~(Mask{1} << x)) == 0) out |= Mask{1} << x;
    return out;
}

Mask FinitePoset::compacts() const {
    Mask out = 0;
    for (int x = 0; x < size(); ++x)
        if (way_below(x, x)) out |= Mask{1} << x;
    return out;
}

std::vector<Mask> FinitePoset::directed_subsets(int max_bits) const {
    if (size() > max_bits)
        throw budget_error("directed-subset sweep over " + std::to_string(size()) +
                           " elements exceeds bound " + std::to_string(max_bits));
    std::vector<Mask> out;
    for (Mask d = 1; d <= carrier_mask() && carrier_mask() != 0; ++d)
        if (is_directed(d)) out.push_back(d);
    return out;
}

bool way_below_definitional(const FinitePoset& p, int x, int y, int max_bits) {
    for (Mask d : p.directed_subsets(max_bits)) {
        auto s = p.sup(d);
        if (!s || !p.leq(y, *s)) continue;
        if ((p.up_set(x) & d) == 0) return false;
    }
    return true;
}

std::vector<std::vector<bool>> way_below_matrix_definitional(const FinitePoset& p,
                                                             int max_bits) {
    const int n = p.size();
    std::vector<std::vector<bool>> wb(n, std::vector<bool>(n, true));
    for (Mask d : p.directed_subsets(max_bits)) {
        auto s = p.sup(d);
        if (!s) continue;
        for (int x = 0; x < n; ++x) {
            if ((p.up_set(x) & d) != 0) continue;
            for (int y = 0; y < n; ++y)
                if (p.leq(y, *s)) wb[x][y] = false;
        }
    }
    return wb;
}

bool is_basis(const FinitePoset& p, Mask b) {
    for (int x = 0; x < p.size(); ++x) {
        Mask bx = b & p.down_set(x);
        if (!p.is_directed(bx)) return false;
        auto s = p.sup(bx);
        if (!s || *s != x) return false;
    }
    return true;
}

const char* poset_flag_name(PosetFlag f) {
    switch (f) {
        case PosetFlag::pointed: return "pointed";
        case PosetFlag::sup_semilattice: return "sup_semilattice";
        case PosetFlag::complete_lattice: return "complete_lattice";
        case PosetFlag::bc_poset: return "bc_poset";
        case PosetFlag::cusl: return "cusl";
        case PosetFlag::sl_cusl: return "sl_cusl";
        case PosetFlag::l_cusl: return "l_cusl";
        case PosetFlag::sl_domain: return "sl_domain";
        case PosetFlag::l_domain: return "l_domain";
        case PosetFlag::bc_domain: return "bc_domain";
        case PosetFlag::continuous: return "continuous";
        case PosetFlag::algebraic: return "algebraic";
    }
    return "?";
}

bool PosetClassReport::flag(PosetFlag f) const {
    switch (f) {
        case PosetFlag::pointed: return pointed;
        case PosetFlag::sup_semilattice: return sup_semilattice;
        case PosetFlag::complete_lattice: return complete_lattice;
        case PosetFlag::bc_poset: return bc_poset;
        case PosetFlag::cusl: return cusl;
        case PosetFlag::sl_cusl: return sl_cusl;
        case PosetFlag::l_cusl: return l_cusl;
        case PosetFlag::sl_domain: return sl_domain;
        case PosetFlag::l_domain: return l_domain;
        case PosetFlag::bc_domain: return bc_domain;
        case PosetFlag::continuous: return continuous;
        case PosetFlag::algebraic: return algebraic;
    }
    return false;
}

namespace {

bool up_bounded(const FinitePoset& p, Mask a) {
    if (a == 0) return p.size() > 0;
    for (int z = 0; z < p.size(); ++z)
        if (p.is_upper_bound(z, a)) return true;
    return false;
}

}  // namespace

PosetClassReport classify_poset(const FinitePoset& p) {
    const int n = p.size();
    if (n > 16)
        throw budget_error("classify_poset carrier " + std::to_string(n) +
                           " exceeds exhaustive bound 16");
    PosetClassReport r;
    auto fail = [&](bool& flag, PosetFlag which, Mask sub, std::optional<int> bound) {
        if (!flag) return;
        flag = false;
        r.witnesses[which] = PosetWitness{sub, bound};
    };

    r.pointed = p.least(p.carrier_mask()).has_value();
    if (!r.pointed)
        r.witnesses[PosetFlag::pointed] = PosetWitness{p.minimal_elements(), std::nullopt};

    const auto order = subsets_size_lex(p.carrier_mask());

    r.sup_semilattice = true;
    r.complete_lattice = true;
    r.bc_poset = true;
    r.cusl = true;
    for (Mask a : order) {
        bool has_sup = p.sup(a).has_value();
        if (has_sup) continue;
        if (popcount(a) == 2) fail(r.sup_semilattice, PosetFlag::sup_semilattice, a, std::nullopt);
        fail(r.complete_lattice, PosetFlag::complete_lattice, a, std::nullopt);
        if (up_bounded(p, a)) {
            fail(r.bc_poset, PosetFlag::bc_poset, a, std::nullopt);
            fail(r.cusl, PosetFlag::cusl, a, std::nullopt);
        }
    }

    r.sl_cusl = true;
    r.l_cusl = true;
    bool ideals_complete = true;
    PosetWitness ideals_witness;
    for (Mask a : order) {
        for (int b = 0; b < n; ++b) {
            if (!subset(a, p.down_set(b))) continue;
            if (p.sup_within(a, b).has_value()) continue;
            if (popcount(a) == 2) {
                fail(r.sl_cusl, PosetFlag::sl_cusl, a, b);
                fail(r.l_cusl, PosetFlag::l_cusl, a, b);
            }
            if (a == 0) fail(r.l_cusl, PosetFlag::l_cusl, a, b);
            if (ideals_complete) {
                ideals_complete = false;
                ideals_witness = PosetWitness{a, b};
            }
        }
    }

    r.continuous = true;
    r.algebraic = true;
    const Mask compacts = p.compacts();
    for (int x = 0; x < n; ++x) {
        Mask below = 0;
        for (int y = 0; y < n; ++y)
            if (p.way_below(y, x)) below |= Mask{1} << y;
        auto s1 = p.sup(below);
        if (!p.is_directed(below) || !s1 || *s1 != x)
            fail(r.continuous, PosetFlag::continuous, Mask{1} << x, std::nullopt);
        Mask kb = below & compacts;
        auto s2 = p.sup(kb);
        if (!p.is_directed(kb) || !s2 || *s2 != x)
            fail(r.algebraic, PosetFlag::algebraic, Mask{1} << x, std::nullopt);
    }

    auto combine = [&](bool& flag, PosetFlag which, bool other, PosetFlag other_flag) {
        flag = r.continuous && other;
        if (flag) return;
        if (!r.continuous)
            r.witnesses[which] = r.witnesses.at(PosetFlag::continuous);
        else
            r.witnesses[which] = r.witnesses.at(other_flag);
    };
    combine(r.sl_domain, PosetFlag::sl_domain, r.sl_cusl, PosetFlag::sl_cusl);
    r.l_domain = r.continuous && ideals_complete;
    if (!r.l_domain)
        r.witnesses[PosetFlag::l_domain] =
            !r.continuous ? r.witnesses.at(PosetFlag::continuous) : ideals_witness;
    combine(r.bc_domain, PosetFlag::bc_domain, r.bc_poset, PosetFlag::bc_poset);

    return r;
}

bool witness_refutes(const FinitePoset& p, PosetFlag f, const PosetWitness& w) {
    auto no_sup = [&] { return !p.sup(w.subset).has_value(); };
    auto no_sup_within = [&] {
        return w.bound && subset(w.subset, p.down_set(*w.bound)) &&
               !p.sup_within(w.subset, *w.bound).has_value();
    };
    auto not_approximated = [&](Mask pool) {
        if (popcount(w.subset) != 1) return false;
        int x = lowest_bit(w.subset);
        Mask below = pool & p.down_set(x);
        auto s = p.sup(below);
        return !p.is_directed(below) || !s || *s != x;
    };
    switch (f) {
        case PosetFlag::pointed:
            return !p.least(p.carrier_mask()).has_value();
        case PosetFlag::sup_semilattice:
            return popcount(w.subset) == 2 && no_sup();
        case PosetFlag::complete_lattice:
            return no_sup();
        case PosetFlag::bc_poset:
        case PosetFlag::cusl:
            return up_bounded(p, w.subset) && no_sup();
        case PosetFlag::sl_cusl:
            return popcount(w.subset) == 2 && no_sup_within();
        case PosetFlag::l_cusl:
            return (w.subset == 0 || popcount(w.subset) == 2) && no_sup_within();
        case PosetFlag::continuous:
            return not_approximated(p.carrier_mask());
        case PosetFlag::algebraic:
            return not_approximated(p.compacts());
        case PosetFlag::sl_domain:
            return (popcount(w.subset) == 2 && no_sup_within()) ||
                   not_approximated(p.carrier_mask());
        case PosetFlag::l_domain:
            return no_sup_within() || not_approximated(p.carrier_mask());
        case PosetFlag::bc_domain:
            return (up_bounded(p, w.subset) && no_sup()) ||
                   not_approximated(p.carrier_mask());
    }
    return false;
}

std::optional<std::vector<int>> are_isomorphic(const FinitePoset& p,
                                               const FinitePoset& q) {
    const int n = p.size();
    if (n != q.size()) return std::nullopt;
    if (n == 0) return std::vector<int>{};

    auto sig = [](const FinitePoset& r, int i) {
        return std::pair<int, int>(popcount(r.down_set(i)), popcount(r.up_set(i)));
    };
    std::vector<std::vector<int>> candidates(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            if (sig(p, i) == sig(q, j)) candidates[i].push_back(j);
        if (candidates[i].empty()) return std::nullopt;
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return candidates[a].size() < candidates[b].size();
    });

    std::vector<int> map(n, -1);
    Mask used = 0;
    std::function<bool(int)> dfs = [&](int k) -> bool {
        if (k == n) return true;
        int i = order[k];
        for (int j : candidates[i]) {
            if (used >> j & 1) continue;
            bool ok = true;
            for (int t = 0; t < k && ok; ++t) {
                int i2 = order[t], j2 = map[i2];
                ok = (p.leq(i, i2) == q.leq(j, j2)) && (p.leq(i2, i) == q.leq(j2, j));
            }
            if (!ok) continue;
            map[i] = j;
            used |= Mask{1} << j;
            if (dfs(k + 1)) return true;
            used &= ~(Mask{1} << j);
            map[i] = -1;
        }
        return false;
    };
    if (!dfs(0)) return std::nullopt;

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (p.leq(i, j) != q.leq(map[i], map[j])) return std::nullopt;
    return map;
}

std::vector<std::pair<int, int>> hasse_edges(const FinitePoset& p) {
    std::vector<std::pair<int, int>> out;
    const int n = p.size();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (x == y || !p.leq(x, y)) continue;
            bool cover = true;
            for (int z = 0; z < n && cover; ++z)
                if (z != x && z != y && p.leq(x, z) && p.leq(z, y)) cover = false;
            if (cover) out.emplace_back(x, y);
        }
    return out;
}

bool is_scott_continuous(const FinitePoset& p, const FinitePoset& q,
                         const std::vector<int>& f, int max_bits) {
    if (static_cast<int>(f.size()) != p.size())
        throw input_error("map size does not match carrier");
    for (int v : f)
        if (v < 0 || v >= q.size()) throw input_error("map value out of range");
    for (Mask d : p.directed_subsets(max_bits)) {
        auto s = p.sup(d);
        if (!s) continue;
        Mask image = 0;
        for (Mask rest = d; rest; rest &= rest - 1)
            image |= Mask{1} << f[lowest_bit(rest)];
        auto is = q.sup(image);
        if (!is || *is != f[*s]) return false;
    }
    return true;
}

}  // namespace cfdom
