// Acceptance gate: four end-to-end criteria, one pass/fail line each.
//
//   1. worked-example fidelity across every module
//   2. closed-form polynomial tables for the reference instances
//   3. exact agreement with brute-force counting oracles
//   4. the full identity-check suite on exhaustive small instances

#include <cstdio>
#include <string>

#include "halg/domains.hpp"
#include "halg/fock.hpp"
#include "halg/laws.hpp"

using namespace halg;

namespace {

SetComposition sc(std::vector<std::vector<Label>> blocks) {
    return SetComposition(std::move(blocks));
}

PackedWord pw(std::vector<int> images) { return PackedWord{std::move(images)}; }

IntComposition ic(std::vector<int> parts) { return IntComposition(std::move(parts)); }

int failures = 0;

void report(const char* name, bool pass, const std::string& detail = "") {
    if (pass) {
        std::printf("PASS: %s\n", name);
    } else {
        ++failures;
        std::printf("FAIL: %s%s%s\n", name, detail.empty() ? "" : " — ", detail.c_str());
    }
}

// reference instances
const BlockGraph kEdgeG({{"A"}, {"B"}}, {{0, 1}});
const BlockGraph kStarG({{"A"}, {"B"}, {"C"}}, {{0, 1}, {0, 2}});
const BlockGraph kPathG({{"A"}, {"B"}, {"C"}}, {{0, 1}, {1, 2}});
const QuasiPoset kChain2({{"A"}, {"B"}}, {{0, 1}});
const QuasiPoset kVee({{"A"}, {"B"}, {"C"}}, {{0, 1}, {0, 2}});
const QuasiPoset kChain3({{"A"}, {"B"}, {"C"}}, {{0, 1}, {1, 2}});

bool worked_examples() {
    bool ok = true;
    auto expect = [&](bool cond, const char* what) {
        if (!cond) {
            ok = false;
            std::printf("  mismatch: %s\n", what);
        }
    };

    // products on set compositions
    {
        LinComb<SetComposition> e;
        e.add_term(sc({{"A"}, {"B"}}), 1);
        e.add_term(sc({{"B"}, {"A"}}), 1);
        e.add_term(sc({{"A", "B"}}), 1);
        expect(quasi_shuffle(sc({{"A"}}), sc({{"B"}})) == e, "singleton quasi-shuffle");

        auto five = quasi_shuffle(sc({{"A"}, {"B"}}), sc({{"C"}}));
        expect(five.size() == 5 && five.coeff(sc({{"A", "C"}, {"B"}})) == 1 &&
                   five.coeff(sc({{"A"}, {"B", "C"}})) == 1,
               "pair-singleton quasi-shuffle");
        expect(quasi_shuffle(sc({{"A"}, {"B"}}), sc({{"C"}, {"D"}})).size() == 13,
               "pair-pair quasi-shuffle");
        expect(shuffle(sc({{"A"}, {"B"}}), sc({{"C"}, {"D"}})).size() == 6, "pair-pair shuffle");
    }

    // internal coproducts
    {
        auto d = internal_delta(sc({{"A"}, {"B"}}));
        LinComb<TensorKey<SetComposition, SetComposition>> e;
        e += tensor(LinComb<SetComposition>(sc({{"A"}, {"B"}})),
                    quasi_shuffle(sc({{"A"}}), sc({{"B"}})));
        e.add_term({sc({{"A", "B"}}), sc({{"A"}, {"B"}})}, 1);
        expect(d == e, "internal coproduct of a two-block composition");

        expect(internal_delta(kEdgeG).size() == 2 && internal_delta(kStarG).size() == 4,
               "graph extraction-contraction term counts");
        expect(internal_delta(kChain2).size() == 2 && internal_delta(kVee).size() == 4 &&
                   internal_delta(kChain3).size() == 4,
               "quasi-poset extraction-contraction term counts");
    }

    // coloration and extension morphisms
    {
        auto star = phi_chr(kStarG);
        expect(star.size() == 8 && star.coeff(sc({{"A"}, {"B", "C"}})) == 1 &&
                   star.coeff(sc({{"B", "C"}, {"A"}})) == 1,
               "coloration morphism on the star");
        auto path = phi_chr(kPathG);
        expect(path.size() == 8 && path.coeff(sc({{"A", "C"}, {"B"}})) == 1,
               "coloration morphism on the path");
        expect(phi_ehr(kChain2) == LinComb<SetComposition>(sc({{"A"}, {"B"}})),
               "strict-extension morphism on the two-chain");
        LinComb<SetComposition> vee;
        vee.add_term(sc({{"A"}, {"B"}, {"C"}}), 1);
        vee.add_term(sc({{"A"}, {"C"}, {"B"}}), 1);
        vee.add_term(sc({{"A"}, {"B", "C"}}), 1);
        expect(phi_ehr(kVee) == vee, "strict-extension morphism on the vee");
    }

    // graduation endomorphism, including the four-block table
    {
        Rational q(5);
        auto t4 = theta_q(sc({{"A"}, {"B"}, {"C"}, {"D"}}), q);
        expect(t4.coeff(sc({{"A"}, {"B"}, {"C"}, {"D"}})) == q * q * q * q &&
                   t4.coeff(sc({{"A", "B"}, {"C"}, {"D"}})) == q * q * q * (q - 1) / 2 &&
                   t4.coeff(sc({{"A", "B"}, {"C", "D"}})) == q * q * (q - 1) * (q - 1) / 4 &&
                   t4.coeff(sc({{"A", "B", "C"}, {"D"}})) == q * q * (q - 1) * (q - 2) / 6 &&
                   t4.coeff(sc({{"A", "B", "C", "D"}})) ==
                       q * (q - 1) * (q - 2) * (q - 3) / 24,
               "four-block graduation table");
    }

    // q-deformed morphisms
    {
        Rational q(7);
        LinComb<SetComposition> edge;
        edge.add_term(sc({{"A"}, {"B"}}), 1);
        edge.add_term(sc({{"B"}, {"A"}}), 1);
        edge.add_term(sc({{"A", "B"}}), 1 - q);
        expect(phi_chr_q(kEdgeG, q) == edge, "deformed coloration morphism on an edge");

        auto star = phi_chr_q(kStarG, q);
        expect(star.coeff(sc({{"A", "B"}, {"C"}})) == 1 - q &&
                   star.coeff(sc({{"A"}, {"B", "C"}})) == 1 &&
                   star.coeff(sc({{"A", "B", "C"}})) == (1 - q) * (1 - q),
               "deformed coloration morphism on the star");

        LinComb<SetComposition> chain2;
        chain2.add_term(sc({{"A"}, {"B"}}), 1);
        chain2.add_term(sc({{"A", "B"}}), (1 - q) / 2);
        expect(phi_ehr_q(kChain2, q) == chain2, "deformed extension morphism on the two-chain");
        auto chain3 = phi_ehr_q(kChain3, q);
        expect(chain3.coeff(sc({{"A", "B"}, {"C"}})) == (1 - q) / 2 &&
                   chain3.coeff(sc({{"A", "B", "C"}})) == (1 - q) * (1 - 2 * q) / 6,
               "deformed extension morphism on the three-chain");

        std::vector<Rational> ones{0, 1, 1, 1};
        expect(phi_chr_q(kStarG, Rational(0)) == phi_hom(kStarG, ones) &&
                   phi_ehr_q(kVee, Rational(0)) == phi_hom_top(kVee, ones),
               "specialization at zero is the unit-weight morphism");
    }

    // word-level images
    {
        LinComb<PackedWord> square_expected;
        square_expected.add_term(pw({1, 1, 2, 2}), 1);
        square_expected.add_term(pw({2, 2, 1, 1}), 1);
        square_expected.add_term(pw({1, 1, 1, 1}), 1);
        expect(wqsym_product(pw({1, 1}), pw({1, 1})) == square_expected, "packed-word square");

        LinComb<IntComposition> qs;
        qs.add_term(ic({1, 1}), 2);
        qs.add_term(ic({2}), 1);
        expect(qsym_quasi_shuffle(ic({1}), ic({1})) == qs, "integer-composition quasi-shuffle");

        BlockGraph edge13({{"1", "3"}, {"2"}}, {{0, 1}});
        LinComb<PackedWord> edge13_expected;
        edge13_expected.add_term(pw({1, 2, 1}), 1);
        edge13_expected.add_term(pw({2, 1, 2}), 1);
        expect(k_image(phi_chr(edge13)) == edge13_expected,
               "packed-word image of an edge coloration morphism");

        QuasiPoset chain134({{"1", "3"}, {"2"}, {"4"}}, {{0, 2}, {2, 1}});  // {1,3} < {4} < {2}
        expect(k_image(phi_ehr(chain134)) == LinComb<PackedWord>(pw({1, 3, 1, 2})),
               "packed-word image of a chain extension morphism");
        LinComb<PackedWord> weak_expected;
        weak_expected.add_term(pw({1, 3, 1, 2}), 1);
        weak_expected.add_term(pw({1, 2, 1, 1}), 1);
        weak_expected.add_term(pw({1, 2, 1, 2}), 1);
        weak_expected.add_term(pw({1, 1, 1, 1}), 1);
        expect(k_image(phi_ehr_q(chain134, Rational(-1))) == weak_expected,
               "packed-word image of the weak-extension specialization");

        QuasiPoset vee124({{"1", "4"}, {"2"}, {"3"}}, {{0, 1}, {0, 2}});
        LinComb<PackedWord> vee_weak;
        vee_weak.add_term(pw({1, 2, 3, 1}), 1);
        vee_weak.add_term(pw({1, 3, 2, 1}), 1);
        vee_weak.add_term(pw({1, 2, 2, 1}), 1);
        vee_weak.add_term(pw({1, 2, 1, 1}), 1);
        vee_weak.add_term(pw({1, 1, 2, 1}), 1);
        vee_weak.add_term(pw({1, 1, 1, 1}), 1);
        expect(k_image(phi_ehr_q(vee124, Rational(-1))) == vee_weak,
               "packed-word image of the vee weak-extension specialization");
    }

    return ok;
}

bool polynomial_tables() {
    bool ok = true;
    auto expect = [&](bool cond, const char* what) {
        if (!cond) {
            ok = false;
            std::printf("  mismatch: %s\n", what);
        }
    };
    Polynomial X({0, 1});

    expect(chromatic_polynomial(BlockGraph({{"A"}}, {}), Rational(1)) == X,
           "chromatic polynomial of a single block");
    expect(chromatic_polynomial(kEdgeG, Rational(1)) == X * Polynomial({-1, 1}),
           "chromatic polynomial of an edge");
    expect(chromatic_polynomial(kStarG, Rational(1)) ==
               X * Polynomial({-1, 1}) * Polynomial({-1, 1}),
           "chromatic polynomial of the star");

    expect(ehrhart_polynomial(QuasiPoset({{"A"}}, {}), Rational(1)) == X,
           "strict order polynomial of a single class");
    expect(ehrhart_polynomial(kChain2, Rational(1)) == hilbert_poly(2),
           "strict order polynomial of the two-chain");
    expect(ehrhart_polynomial(kVee, Rational(1)) == hilbert_poly(3) * Rational(2) + hilbert_poly(2),
           "strict order polynomial of the vee");
    expect(ehrhart_polynomial(kChain3, Rational(1)) == hilbert_poly(3),
           "strict order polynomial of the three-chain");

    expect(ehrhart_polynomial(QuasiPoset({{"A"}}, {}), Rational(-1)) == X,
           "weak order polynomial of a single class");
    expect(ehrhart_polynomial(kChain2, Rational(-1)) == hilbert_poly(2) + X,
           "weak order polynomial of the two-chain");
    expect(ehrhart_polynomial(kVee, Rational(-1)) ==
               hilbert_poly(3) * Rational(2) + hilbert_poly(2) * Rational(3) + X,
           "weak order polynomial of the vee");
    expect(ehrhart_polynomial(kChain3, Rational(-1)) ==
               hilbert_poly(3) + hilbert_poly(2) * Rational(2) + X,
           "weak order polynomial of the three-chain");
    return ok;
}

bool oracle_equivalence() {
    bool ok = true;
    for (std::size_t n = 1; n <= 4 && ok; ++n) {
        for (const auto& g : all_block_graphs(n)) {
            auto p = chromatic_polynomial(g, Rational(1));
            for (int k = 0; k <= 5; ++k)
                if (poly_eval(p, Rational(k)) != proper_coloring_count(g, k)) {
                    std::printf("  chromatic mismatch at %zu labels, k=%d\n", n, k);
                    ok = false;
                    break;
                }
            long sign = g.degree() % 2 == 0 ? 1 : -1;
            if (poly_eval(p, Rational(-1)) != sign * ao_count(g)) {
                std::printf("  orientation-count mismatch at %zu labels\n", n);
                ok = false;
            }
            if (!ok) break;
        }
        for (const auto& t : all_quasi_posets(n)) {
            auto strict = ehrhart_polynomial(t, Rational(1));
            auto weak = ehrhart_polynomial(t, Rational(-1));
            for (int k = 0; k <= 5; ++k) {
                if (poly_eval(strict, Rational(k)) != strict_monotone_count(t, k) ||
                    poly_eval(weak, Rational(k)) != weak_monotone_count(t, k)) {
                    std::printf("  order-polynomial mismatch at %zu labels, k=%d\n", n, k);
                    ok = false;
                    break;
                }
            }
            if (!ok) break;
        }
    }
    return ok;
}

bool law_suite() {
    auto report = run_law_suite(4);
    for (const auto& l : report.laws)
        if (!l.pass)
            std::printf("  law failed: %s (%s)\n", l.name.c_str(), l.counterexample.c_str());
    std::printf("  %zu laws over ground sets of size <= %zu in %lld ms\n", report.laws.size(),
                report.max_size, static_cast<long long>(report.elapsed_ms));
    return report.all_pass();
}

}  // namespace

int main() {
    report("worked-example fidelity", worked_examples());
    report("closed-form polynomial tables", polynomial_tables());
    report("brute-force oracle equivalence", oracle_equivalence());
    report("identity-check suite", law_suite());
    return failures == 0 ? 0 : 1;
}
