#pragma once

#include <string>
#include <vector>

#include "halg/graphs.hpp"
#include "halg/topology.hpp"

namespace halg {

// Packed words share the representation of surjections onto {1..max}.
using PackedWord = Surjection;

// A finite sequence of positive integers.
struct IntComposition {
    std::vector<int> parts;

    IntComposition() = default;
    explicit IntComposition(std::vector<int> p);

    std::size_t length() const { return parts.size(); }

    auto operator<=>(const IntComposition&) const = default;
};

// Dense univariate polynomial over the rationals, coefficients low-to-high,
// trailing coefficient nonzero unless zero.
struct Polynomial {
    std::vector<Rational> coeffs;

    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> c);

    bool is_zero() const { return coeffs.empty(); }
    std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }

    Polynomial& operator+=(const Polynomial& other);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c);

    auto operator<=>(const Polynomial&) const = default;
};

// Word whose i-th letter is the (1-based) index of the block containing
// label i; the ground set must be {"1".."n"}.
PackedWord k_encode(const SetComposition& c);

// Sequence of block sizes.
IntComposition khat_encode(const SetComposition& c);

LinComb<PackedWord> k_image(const LinComb<SetComposition>& x);
LinComb<IntComposition> khat_image(const LinComb<SetComposition>& x);

// Quasi-shuffle with integer addition as the merge.
LinComb<IntComposition> qsym_quasi_shuffle(const IntComposition& a, const IntComposition& b);

// Shifted quasi-shuffle product on packed words.
LinComb<PackedWord> wqsym_product(const PackedWord& u, const PackedWord& v);

// Internal coproduct on packed words through the surjection pairs of
// enumerate_cont.
LinComb<TensorKey<PackedWord, PackedWord>> wqsym_delta(const PackedWord& u);

// All deconcatenations (prefix, suffix) including the empty ones.
std::vector<std::pair<IntComposition, IntComposition>> qsym_deconcat(const IntComposition& c);

// Internal coproduct on integer compositions: merged runs tensor
// quasi-shuffle of the runs.
LinComb<TensorKey<IntComposition, IntComposition>> qsym_delta(const IntComposition& c);

// X(X-1)...(X-n+1)/n! as a polynomial.
Polynomial hilbert_poly(std::size_t n);

// Sends every length-n composition to the n-th Hilbert polynomial.
Polynomial H_morphism(const IntComposition& c);
Polynomial H_morphism(const LinComb<IntComposition>& x);

// Graduation endomorphism on integer compositions.
LinComb<IntComposition> theta_q_qsym(const IntComposition& c, const Rational& q);

// P_chr_q and P_ehr_q: Hilbert image of the block-size compositions of the
// q-deformed morphisms.
Polynomial chromatic_polynomial(const BlockGraph& g, const Rational& q);
Polynomial ehrhart_polynomial(const QuasiPoset& t, const Rational& q);

Rational poly_eval(const Polynomial& p, const Rational& x);
// P(X) -> P(qX).
Polynomial poly_scale_var(const Polynomial& p, const Rational& q);

std::string poly_to_string(const Polynomial& p);

// Isomorphism-class keys for decorated graphs / posets: minimal encoding
// over all block permutations; capped at 8 blocks or classes.
std::string canonical_class(const BlockGraph& g);
std::string canonical_class(const QuasiPoset& t);

}  // namespace halg
