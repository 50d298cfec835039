#pragma once

#include "halg/characters.hpp"
#include "halg/graphs.hpp"
#include "halg/topology.hpp"

namespace halg {

// Descriptor for set compositions under quasi-shuffle / deconcatenation.
inline BialgebraDescriptor<SetComposition> comp_descriptor() {
    BialgebraDescriptor<SetComposition> d;
    d.ground = [](const SetComposition& c) { return c.ground(); };
    d.split = [](const SetComposition& c, const LabelSet& I) {
        LinComb<TensorKey<SetComposition, SetComposition>> out;
        if (auto cut = deconcat(c, I)) out.add_term({cut->first, cut->second}, 1);
        return out;
    };
    d.internal_delta = [](const SetComposition& c) { return internal_delta(c); };
    d.eps_prime = [](const SetComposition& c) { return eps_prime(c); };
    d.components = nullptr;
    d.piece_count = [](const SetComposition& c) { return c.length(); };
    return d;
}

// Descriptor for block graphs under disjoint union / vertex-set restriction.
inline BialgebraDescriptor<BlockGraph> graph_descriptor() {
    BialgebraDescriptor<BlockGraph> d;
    d.ground = [](const BlockGraph& g) { return g.ground(); };
    d.split = [](const BlockGraph& g, const LabelSet& I) {
        LinComb<TensorKey<BlockGraph, BlockGraph>> out;
        LabelSet J;
        for (const auto& l : g.ground())
            if (!I.count(l)) J.insert(l);
        auto left = restrict_graph(g, I);
        auto right = restrict_graph(g, J);
        if (left && right) out.add_term({*left, *right}, 1);
        return out;
    };
    d.internal_delta = [](const BlockGraph& g) { return internal_delta(g); };
    d.eps_prime = [](const BlockGraph& g) { return eps_prime(g); };
    d.components = [](const BlockGraph& g) { return graph_components(g); };
    d.piece_count = [](const BlockGraph& g) { return g.degree(); };
    return d;
}

// Descriptor for quasi-posets under disjoint union / closed-open splitting.
inline BialgebraDescriptor<QuasiPoset> top_descriptor() {
    BialgebraDescriptor<QuasiPoset> d;
    d.ground = [](const QuasiPoset& t) { return t.ground(); };
    d.split = [](const QuasiPoset& t, const LabelSet& I) {
        LinComb<TensorKey<QuasiPoset, QuasiPoset>> out;
        LabelSet J;
        for (const auto& l : t.ground())
            if (!I.count(l)) J.insert(l);
        if (auto cut = delta_split(t, I, J)) out.add_term({cut->first, cut->second}, 1);
        return out;
    };
    d.internal_delta = [](const QuasiPoset& t) { return internal_delta(t); };
    d.eps_prime = [](const QuasiPoset& t) { return eps_prime(t); };
    d.components = [](const QuasiPoset& t) { return top_components(t); };
    d.piece_count = [](const QuasiPoset& t) { return t.class_count(); };
    return d;
}

}  // namespace halg
