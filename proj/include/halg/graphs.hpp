#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "halg/setcomp.hpp"

namespace halg {

// A simple graph whose vertices are the blocks of a set partition.
// Canonical form: blocks sorted by minimum label, edges stored as sorted
// index pairs with i < j.
struct BlockGraph {
    std::vector<std::vector<Label>> blocks;
    std::vector<std::pair<std::size_t, std::size_t>> edges;

    BlockGraph() = default;
    BlockGraph(std::vector<std::vector<Label>> b,
               std::vector<std::pair<std::size_t, std::size_t>> e);

    std::size_t degree() const { return blocks.size(); }  // number of blocks
    LabelSet ground() const;
    bool has_edge(std::size_t i, std::size_t j) const;
    std::size_t component_count() const;  // cc(G)

    auto operator<=>(const BlockGraph&) const = default;
};

// A partition of the block-index set into groups, each group listed as a
// sorted index vector, groups sorted by first element.
struct VertexEquivalence {
    std::vector<std::vector<std::size_t>> groups;

    std::size_t class_count() const { return groups.size(); }

    auto operator<=>(const VertexEquivalence&) const = default;
};

BlockGraph disjoint_union(const BlockGraph& g, const BlockGraph& h);

// Induced subgraph on the blocks contained in I, when I is a union of
// blocks; absent otherwise.
std::optional<BlockGraph> restrict_graph(const BlockGraph& g, const LabelSet& I);

// All partitions of the blocks whose groups induce connected subgraphs.
std::vector<VertexEquivalence> admissible_equivalences(const BlockGraph& g);

// G/~ : each group merged into one block, induced simple edges.
BlockGraph contract(const BlockGraph& g, const VertexEquivalence& e);
// G|~ : same blocks, only intra-group edges kept.
BlockGraph restrict_classes(const BlockGraph& g, const VertexEquivalence& e);

// Extraction-contraction coproduct: sum of G/~ tensor G|~ over admissible
// equivalences.
LinComb<TensorKey<BlockGraph, BlockGraph>> internal_delta(const BlockGraph& g);

// 1 iff the graph has no edges.
Rational eps_prime(const BlockGraph& g);

// Surjections from blocks to {1..max} taking different values across every
// edge.
std::vector<Surjection> valid_colorations(const BlockGraph& g);

// Chromatic morphism into set compositions: sum of color-fiber compositions
// over valid colorations.
LinComb<SetComposition> phi_chr(const BlockGraph& g);

// Homogeneous morphism: (product of u[|block|]) times the quasi-shuffle
// product of the one-block compositions. u is indexed by block size,
// u[0] unused.
LinComb<SetComposition> phi_hom(const BlockGraph& g, const std::vector<Rational>& u);

// Number of acyclic orientations, by brute force over orientations; the
// deletion-contraction recursion is computed alongside and must agree.
std::int64_t ao_count(const BlockGraph& g);

// q-deformed chromatic morphism; q = 0 falls back to the homogeneous
// morphism with all weights 1.
LinComb<SetComposition> phi_chr_q(const BlockGraph& g, const Rational& q);

// Automorphism driven by acyclic-orientation counts, and its inverse.
LinComb<BlockGraph> gamma(const BlockGraph& g);
LinComb<BlockGraph> gamma_inv(const BlockGraph& g);

BlockGraph delete_edge(const BlockGraph& g, std::pair<std::size_t, std::size_t> e);
BlockGraph contract_edge(const BlockGraph& g, std::pair<std::size_t, std::size_t> e);

// Connected components as separate graphs, ordered by minimum label.
std::vector<BlockGraph> graph_components(const BlockGraph& g);

// All set partitions of {0..n-1}, as sorted group lists; deterministic order.
std::vector<std::vector<std::vector<std::size_t>>> set_partitions(std::size_t n);

}  // namespace halg
