#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "halg/setcomp.hpp"

namespace halg {

// A finite topology in Alexandroff presentation: a partition of the ground
// set into classes plus a partial order on classes, stored through its Hasse
// covers. Canonical form: classes sorted by minimum label; covers are the
// transitive reduction, as sorted (lower, upper) index pairs.
struct QuasiPoset {
    std::vector<std::vector<Label>> classes;
    std::vector<std::pair<std::size_t, std::size_t>> covers;

    QuasiPoset() = default;
    QuasiPoset(std::vector<std::vector<Label>> cls,
               std::vector<std::pair<std::size_t, std::size_t>> cov);

    std::size_t class_count() const { return classes.size(); }  // cl(T)
    LabelSet ground() const;
    std::size_t component_count() const;  // cc(T), of the Hasse graph
    bool leq(std::size_t i, std::size_t j) const;  // class i <= class j

    auto operator<=>(const QuasiPoset&) const = default;
};

// A partition of the class-index set into groups.
struct ClassEquivalence {
    std::vector<std::vector<std::size_t>> groups;

    std::size_t class_count() const { return groups.size(); }

    auto operator<=>(const ClassEquivalence&) const = default;
};

QuasiPoset disjoint_union(const QuasiPoset& s, const QuasiPoset& t);

// All up-closed sets of class indices, deterministic order.
std::vector<std::vector<std::size_t>> open_sets(const QuasiPoset& t);

// Restriction to a union of classes; absent when I straddles a class.
std::optional<QuasiPoset> restrict_topology(const QuasiPoset& t, const LabelSet& I);

// (T restricted to I, T restricted to J) when I, J partition the ground set,
// both are unions of classes, and J is open; absent otherwise.
std::optional<std::pair<QuasiPoset, QuasiPoset>> delta_split(const QuasiPoset& t,
                                                             const LabelSet& I, const LabelSet& J);

// Class partitions with connected groups whose quotient preorder
// symmetrizes trivially.
std::vector<ClassEquivalence> compatible_equivalences(const QuasiPoset& t);

QuasiPoset quotient(const QuasiPoset& t, const ClassEquivalence& e);
QuasiPoset restriction(const QuasiPoset& t, const ClassEquivalence& e);

// Extraction-contraction coproduct: sum of T/~ tensor T|~ over compatible
// equivalences.
LinComb<TensorKey<QuasiPoset, QuasiPoset>> internal_delta(const QuasiPoset& t);

// 1 iff the order is an equivalence, i.e. there are no strict relations.
Rational eps_prime(const QuasiPoset& t);

// L(T): monotone surjections onto {1..m}, strictly increasing along strict
// relations.
std::vector<Surjection> strict_extensions(const QuasiPoset& t);

// L'(T): monotone surjections onto {1..m}.
std::vector<Surjection> weak_extensions(const QuasiPoset& t);

// Sum of fiber compositions over strict extensions.
LinComb<SetComposition> phi_ehr(const QuasiPoset& t);

// q-deformation by graduation conjugation; q = 0 falls back to the
// homogeneous morphism with all weights 1.
LinComb<SetComposition> phi_ehr_q(const QuasiPoset& t, const Rational& q);

// Heap orders: monotone bijections classes -> {1..cl(T)}.
std::int64_t heap_order_count(const QuasiPoset& t);
Rational lambda_ho(const QuasiPoset& t);

// Every class of s below every class of t.
QuasiPoset joint_product(const QuasiPoset& s, const QuasiPoset& t);

// Homogeneous morphism: (product of u[|class|]) times the lambda_ho action
// on phi_ehr. u is indexed by class size, u[0] unused.
LinComb<SetComposition> phi_hom_top(const QuasiPoset& t, const std::vector<Rational>& u);

// Connected components of the Hasse graph as separate quasi-posets.
std::vector<QuasiPoset> top_components(const QuasiPoset& t);

// Automorphism summing quotients over compatible equivalences, and its
// signed inverse.
LinComb<QuasiPoset> gamma_top(const QuasiPoset& t);
LinComb<QuasiPoset> gamma_top_inv(const QuasiPoset& t);

}  // namespace halg
