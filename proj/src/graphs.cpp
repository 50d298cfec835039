#include "halg/graphs.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace halg {

namespace {

// Sorts blocks by minimum label and returns the permutation old -> new.
std::vector<std::size_t> canonical_block_order(std::vector<std::vector<Label>>& blocks) {
    std::vector<std::size_t> order(blocks.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return blocks[a].front() < blocks[b].front();
    });
    std::vector<std::vector<Label>> sorted;
    sorted.reserve(blocks.size());
    std::vector<std::size_t> old_to_new(blocks.size());
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        old_to_new[order[pos]] = pos;
        sorted.push_back(std::move(blocks[order[pos]]));
    }
    blocks = std::move(sorted);
    return old_to_new;
}

}  // namespace

BlockGraph::BlockGraph(std::vector<std::vector<Label>> b,
                       std::vector<std::pair<std::size_t, std::size_t>> e)
    : blocks(std::move(b)), edges(std::move(e)) {
    LabelSet seen;
    for (auto& block : blocks) {
        if (block.empty()) throw std::invalid_argument("empty block in graph");
        std::sort(block.begin(), block.end());
        block.erase(std::unique(block.begin(), block.end()), block.end());
        for (const auto& l : block)
            if (!seen.insert(l).second)
                throw std::invalid_argument("duplicate label across blocks: " + l);
    }
    auto old_to_new = canonical_block_order(blocks);
    for (auto& [i, j] : edges) {
        if (i >= old_to_new.size() || j >= old_to_new.size())
            throw std::invalid_argument("edge endpoint out of range");
        if (i == j) throw std::invalid_argument("loop edge");
        i = old_to_new[i];
        j = old_to_new[j];
        if (i > j) std::swap(i, j);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

LabelSet BlockGraph::ground() const {
    LabelSet g;
    for (const auto& block : blocks) g.insert(block.begin(), block.end());
    return g;
}

bool BlockGraph::has_edge(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(i, j));
}

std::size_t BlockGraph::component_count() const {
    std::vector<std::size_t> parent(blocks.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [i, j] : edges) parent[find(i)] = find(j);
    std::size_t count = 0;
    for (std::size_t i = 0; i < blocks.size(); ++i)
        if (find(i) == i) ++count;
    return count;
}

BlockGraph disjoint_union(const BlockGraph& g, const BlockGraph& h) {
    auto blocks = g.blocks;
    blocks.insert(blocks.end(), h.blocks.begin(), h.blocks.end());
    auto edges = g.edges;
    for (const auto& [i, j] : h.edges) edges.push_back({i + g.degree(), j + g.degree()});
    return BlockGraph(std::move(blocks), std::move(edges));
}

std::optional<BlockGraph> restrict_graph(const BlockGraph& g, const LabelSet& I) {
    LabelSet ground = g.ground();
    for (const auto& l : I)
        if (!ground.count(l)) throw std::invalid_argument("restriction set outside ground: " + l);
    std::vector<std::size_t> keep;
    std::size_t covered = 0;
    for (std::size_t i = 0; i < g.degree(); ++i) {
        bool inside = I.count(g.blocks[i].front()) > 0;
        for (const auto& l : g.blocks[i])
            if ((I.count(l) > 0) != inside) return std::nullopt;  // block straddles I
        if (inside) {
            keep.push_back(i);
            covered += g.blocks[i].size();
        }
    }
    if (covered != I.size()) return std::nullopt;
    std::vector<std::size_t> new_index(g.degree(), SIZE_MAX);
    std::vector<std::vector<Label>> blocks;
    for (std::size_t pos = 0; pos < keep.size(); ++pos) {
        new_index[keep[pos]] = pos;
        blocks.push_back(g.blocks[keep[pos]]);
    }
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (const auto& [i, j] : g.edges)
        if (new_index[i] != SIZE_MAX && new_index[j] != SIZE_MAX)
            edges.push_back({new_index[i], new_index[j]});
    return BlockGraph(std::move(blocks), std::move(edges));
}

std::vector<std::vector<std::vector<std::size_t>>> set_partitions(std::size_t n) {
    std::vector<std::vector<std::vector<std::size_t>>> out;
    // Restricted growth strings: rgs[0] = 0, rgs[i] <= 1 + max(rgs[0..i-1]).
    std::vector<std::size_t> rgs(n, 0);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t levels) {
        if (i == n) {
            std::vector<std::vector<std::size_t>> groups(levels);
            for (std::size_t v = 0; v < n; ++v) groups[rgs[v]].push_back(v);
            out.push_back(std::move(groups));
            return;
        }
        for (std::size_t v = 0; v <= levels; ++v) {
            rgs[i] = v;
            rec(i + 1, std::max(levels, v + 1));
        }
    };
    if (n == 0)
        out.push_back({});
    else
        rec(0, 0);
    return out;
}

namespace {

bool group_connected(const BlockGraph& g, const std::vector<std::size_t>& group) {
    if (group.empty()) return false;
    std::vector<bool> in_group(g.degree(), false);
    for (std::size_t v : group) in_group[v] = true;
    std::vector<std::size_t> stack{group.front()};
    std::vector<bool> seen(g.degree(), false);
    seen[group.front()] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t w : group) {
            if (!seen[w] && g.has_edge(v, w)) {
                seen[w] = true;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == group.size();
}

std::vector<std::size_t> group_of(const VertexEquivalence& e, std::size_t n) {
    std::vector<std::size_t> owner(n, SIZE_MAX);
    for (std::size_t gi = 0; gi < e.groups.size(); ++gi)
        for (std::size_t v : e.groups[gi]) owner[v] = gi;
    return owner;
}

}  // namespace

std::vector<VertexEquivalence> admissible_equivalences(const BlockGraph& g) {
    std::vector<VertexEquivalence> out;
    for (auto& partition : set_partitions(g.degree())) {
        bool ok = true;
        for (const auto& group : partition)
            if (!group_connected(g, group)) {
                ok = false;
                break;
            }
        if (ok) out.push_back(VertexEquivalence{partition});
    }
    std::sort(out.begin(), out.end());
    return out;
}

BlockGraph contract(const BlockGraph& g, const VertexEquivalence& e) {
    auto owner = group_of(e, g.degree());
    for (std::size_t v = 0; v < g.degree(); ++v)
        if (owner[v] == SIZE_MAX) throw std::invalid_argument("equivalence misses a block");
    std::vector<std::vector<Label>> blocks(e.groups.size());
    for (std::size_t gi = 0; gi < e.groups.size(); ++gi)
        for (std::size_t v : e.groups[gi])
            blocks[gi].insert(blocks[gi].end(), g.blocks[v].begin(), g.blocks[v].end());
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (const auto& [i, j] : g.edges)
        if (owner[i] != owner[j]) edges.push_back({owner[i], owner[j]});
    return BlockGraph(std::move(blocks), std::move(edges));
}

BlockGraph restrict_classes(const BlockGraph& g, const VertexEquivalence& e) {
    auto owner = group_of(e, g.degree());
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (const auto& [i, j] : g.edges)
        if (owner[i] == owner[j]) edges.push_back({i, j});
    return BlockGraph(g.blocks, std::move(edges));
}

LinComb<TensorKey<BlockGraph, BlockGraph>> internal_delta(const BlockGraph& g) {
    LinComb<TensorKey<BlockGraph, BlockGraph>> out;
    for (const auto& e : admissible_equivalences(g))
        out.add_term({contract(g, e), restrict_classes(g, e)}, 1);
    return out;
}

Rational eps_prime(const BlockGraph& g) {
    return g.edges.empty() ? Rational(1) : Rational(0);
}

std::vector<Surjection> valid_colorations(const BlockGraph& g) {
    std::vector<Surjection> out;
    std::size_t n = g.degree();
    std::vector<int> cur(n);
    std::function<void(std::size_t)> rec = [&](std::size_t pos) {
        if (pos == n) {
            Surjection c{cur};
            if (c.is_valid()) out.push_back(std::move(c));
            return;
        }
        for (int v = 1; v <= static_cast<int>(n); ++v) {
            bool ok = true;
            for (std::size_t w = 0; w < pos && ok; ++w)
                if (cur[w] == v && g.has_edge(w, pos)) ok = false;
            if (!ok) continue;
            cur[pos] = v;
            rec(pos + 1);
        }
    };
    if (n == 0)
        out.push_back(Surjection{});
    else
        rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

SetComposition fibers(const std::vector<std::vector<Label>>& blocks, const Surjection& c) {
    std::vector<std::vector<Label>> fiber(static_cast<std::size_t>(c.max_value()));
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        auto& dst = fiber[static_cast<std::size_t>(c.images[i] - 1)];
        dst.insert(dst.end(), blocks[i].begin(), blocks[i].end());
    }
    return SetComposition(std::move(fiber));
}

}  // namespace

LinComb<SetComposition> phi_chr(const BlockGraph& g) {
    LinComb<SetComposition> out;
    for (const auto& c : valid_colorations(g)) out.add_term(fibers(g.blocks, c), 1);
    return out;
}

LinComb<SetComposition> phi_hom(const BlockGraph& g, const std::vector<Rational>& u) {
    Rational scale = 1;
    LinComb<SetComposition> prod(SetComposition{});
    for (const auto& block : g.blocks) {
        if (block.size() >= u.size())
            throw std::invalid_argument("weight sequence shorter than largest block");
        scale *= u[block.size()];
        prod = bilinear_extend(
            [](const SetComposition& a, const SetComposition& b) { return quasi_shuffle(a, b); },
            prod, LinComb<SetComposition>(SetComposition({block})));
    }
    return prod * scale;
}

namespace {

bool orientation_acyclic(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& arcs) {
    std::vector<std::vector<std::size_t>> adj(n);
    std::vector<std::size_t> indeg(n, 0);
    for (const auto& [a, b] : arcs) {
        adj[a].push_back(b);
        ++indeg[b];
    }
    std::vector<std::size_t> queue;
    for (std::size_t v = 0; v < n; ++v)
        if (indeg[v] == 0) queue.push_back(v);
    std::size_t removed = 0;
    while (!queue.empty()) {
        std::size_t v = queue.back();
        queue.pop_back();
        ++removed;
        for (std::size_t w : adj[v])
            if (--indeg[w] == 0) queue.push_back(w);
    }
    return removed == n;
}

std::int64_t ao_brute(const BlockGraph& g) {
    std::size_t m = g.edges.size();
    std::int64_t count = 0;
    for (std::size_t mask = 0; mask < (1ull << m); ++mask) {
        std::vector<std::pair<std::size_t, std::size_t>> arcs;
        arcs.reserve(m);
        for (std::size_t e = 0; e < m; ++e) {
            auto [i, j] = g.edges[e];
            if ((mask >> e) & 1u)
                arcs.push_back({j, i});
            else
                arcs.push_back({i, j});
        }
        if (orientation_acyclic(g.degree(), arcs)) ++count;
    }
    return count;
}

std::int64_t ao_deletion_contraction(const BlockGraph& g) {
    if (g.edges.empty()) return 1;
    auto e = g.edges.front();
    return ao_deletion_contraction(delete_edge(g, e)) +
           ao_deletion_contraction(contract_edge(g, e));
}

}  // namespace

std::int64_t ao_count(const BlockGraph& g) {
    std::int64_t brute = ao_brute(g);
    if (brute != ao_deletion_contraction(g))
        throw std::logic_error("acyclic orientation count mismatch between methods");
    return brute;
}

LinComb<SetComposition> phi_chr_q(const BlockGraph& g, const Rational& q) {
    if (q == 0) return phi_hom(g, std::vector<Rational>(g.ground().size() + 2, Rational(1)));
    Rational qdeg = 1;
    for (std::size_t i = 0; i < g.degree(); ++i) qdeg *= q;
    return theta_q(phi_chr(g) * qdeg, Rational(1) / q);
}

LinComb<BlockGraph> gamma(const BlockGraph& g) {
    LinComb<BlockGraph> out;
    for (const auto& e : admissible_equivalences(g))
        out.add_term(contract(g, e), Rational(ao_count(restrict_classes(g, e))));
    return out;
}

LinComb<BlockGraph> gamma_inv(const BlockGraph& g) {
    LinComb<BlockGraph> out;
    for (const auto& e : admissible_equivalences(g)) {
        Rational sign = ((e.class_count() + g.degree()) % 2 == 0) ? 1 : -1;
        out.add_term(contract(g, e), sign * Rational(ao_count(restrict_classes(g, e))));
    }
    return out;
}

std::vector<BlockGraph> graph_components(const BlockGraph& g) {
    std::vector<std::size_t> parent(g.degree());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [i, j] : g.edges) parent[find(i)] = find(j);
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t v = 0; v < g.degree(); ++v) groups[find(v)].push_back(v);
    std::vector<BlockGraph> out;
    for (const auto& [root, members] : groups) {
        LabelSet I;
        for (std::size_t v : members) I.insert(g.blocks[v].begin(), g.blocks[v].end());
        out.push_back(*restrict_graph(g, I));
    }
    return out;
}

BlockGraph delete_edge(const BlockGraph& g, std::pair<std::size_t, std::size_t> e) {
    if (e.first > e.second) std::swap(e.first, e.second);
    if (!g.has_edge(e.first, e.second)) throw std::invalid_argument("edge not present");
    auto edges = g.edges;
    edges.erase(std::remove(edges.begin(), edges.end(), e), edges.end());
    return BlockGraph(g.blocks, std::move(edges));
}

BlockGraph contract_edge(const BlockGraph& g, std::pair<std::size_t, std::size_t> e) {
    if (e.first > e.second) std::swap(e.first, e.second);
    if (!g.has_edge(e.first, e.second)) throw std::invalid_argument("edge not present");
    VertexEquivalence eq;
    eq.groups.push_back({e.first, e.second});
    for (std::size_t v = 0; v < g.degree(); ++v)
        if (v != e.first && v != e.second) eq.groups.push_back({v});
    std::sort(eq.groups.begin(), eq.groups.end());
    return contract(g, eq);
}

}  // namespace halg
