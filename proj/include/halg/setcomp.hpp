#pragma once

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "halg/lincomb.hpp"

namespace halg {

// Labels are text tokens ordered lexicographically.
using Label = std::string;
using LabelSet = std::set<Label>;

// An ordered sequence of disjoint nonempty blocks of labels. The empty
// sequence is the unit. Blocks are stored internally sorted; the canonical
// order on compositions is lexicographic on the block sequence.
struct SetComposition {
    std::vector<std::vector<Label>> blocks;

    SetComposition() = default;
    explicit SetComposition(std::vector<std::vector<Label>> b);

    std::size_t length() const { return blocks.size(); }
    LabelSet ground() const;

    auto operator<=>(const SetComposition&) const = default;
};

// A surjection onto an initial segment {1..max}, used both for
// quasi-shuffles and packed words.
struct Surjection {
    std::vector<int> images;

    int max_value() const;
    bool is_valid() const;

    auto operator<=>(const Surjection&) const = default;
};

// All surjections {1..k+l} -> {1..m} that are nondecreasing on {1..k} and on
// {k+1..k+l}; deterministic order.
std::vector<Surjection> enumerate_qsh(std::size_t k, std::size_t l);

// Pairs (sigma, tau): sigma a nondecreasing surjection, tau a surjection,
// with i < j and sigma(i) = sigma(j) implying tau(i) < tau(j).
std::vector<std::pair<Surjection, Surjection>> enumerate_cont(std::size_t k);

// Quasi-shuffle product: blocks mapped to the same level are merged by union.
LinComb<SetComposition> quasi_shuffle(const SetComposition& a, const SetComposition& b);

// Shuffle product: bijective quasi-shuffles only.
LinComb<SetComposition> shuffle(const SetComposition& a, const SetComposition& b);

// Deconcatenation: (prefix, suffix) when a block prefix has union exactly I;
// absent otherwise. I must be a subset of the ground set.
std::optional<std::pair<SetComposition, SetComposition>> deconcat(const SetComposition& c,
                                                                  const LabelSet& I);

// Left-nested iteration of deconcat along a partition of the ground set,
// linearized. Each result key lists one composition per part.
LinComb<std::vector<SetComposition>> iterated_split(const LinComb<SetComposition>& x,
                                                    const std::vector<LabelSet>& parts);

// Internal coproduct, closed cut-point formula: for each subset of cut
// points, (segments merged to single blocks) tensor (quasi-shuffle of the
// segments).
LinComb<TensorKey<SetComposition, SetComposition>> internal_delta(const SetComposition& c);

// Same coproduct computed through enumerate_cont; used as a cross-check.
LinComb<TensorKey<SetComposition, SetComposition>> internal_delta_via_cont(const SetComposition& c);

// Counit of the internal coproduct: 1 on one-block compositions and on the
// empty composition, 0 otherwise.
Rational eps_prime(const SetComposition& c);

// Graduation endomorphism: cut-point sum weighted by Hilbert polynomial
// values per merged run.
LinComb<SetComposition> theta_q(const SetComposition& c, const Rational& q);
LinComb<SetComposition> theta_q(const LinComb<SetComposition>& x, const Rational& q);

// Homogeneous isomorphism exchanging the shuffle and quasi-shuffle products:
// cut-point sum with factorial-reciprocal weights.
LinComb<SetComposition> rho_iso(const SetComposition& c);

// Text encoding helpers: [["a"],["b","c"]].
std::string setcomp_to_text(const SetComposition& c);

}  // namespace halg
