#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "halg/topology.hpp"

using namespace halg;

namespace {

SetComposition sc(std::vector<std::vector<Label>> blocks) {
    return SetComposition(std::move(blocks));
}

const QuasiPoset kSingle({{"A"}}, {});
const QuasiPoset kAntichain({{"A"}, {"B"}}, {});
const QuasiPoset kChain2({{"A"}, {"B"}}, {{0, 1}});  // A below B
// A below both B and C, which are incomparable
const QuasiPoset kVee({{"A"}, {"B"}, {"C"}}, {{0, 1}, {0, 2}});
const QuasiPoset kChain3({{"A"}, {"B"}, {"C"}}, {{0, 1}, {1, 2}});

}  // namespace

TEST_CASE("construction canonicalizes and validates") {
    QuasiPoset t({{"B"}, {"A"}}, {{1, 0}});
    CHECK(t == kChain2);
    CHECK(kChain2.class_count() == 2);
    CHECK(kChain2.ground() == LabelSet{"A", "B"});
    CHECK(kChain2.leq(0, 1));
    CHECK_FALSE(kChain2.leq(1, 0));
    CHECK(kChain3.leq(0, 2));  // order relation is transitive beyond covers
    CHECK(kChain3.leq(1, 1));

    CHECK_THROWS_AS(QuasiPoset({{"A"}, {"B"}}, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(QuasiPoset({{"A"}}, {{0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(QuasiPoset({{"A"}, {"A"}}, {}), std::invalid_argument);
}

TEST_CASE("component counting") {
    CHECK(kVee.component_count() == 1);
    auto two = disjoint_union(kChain2, QuasiPoset({{"C"}}, {}));
    CHECK(two.component_count() == 2);
    auto parts = top_components(two);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0] == kChain2);
    CHECK(parts[1] == QuasiPoset({{"C"}}, {}));
}

TEST_CASE("open sets are the up-closed class unions") {
    CHECK(open_sets(kAntichain).size() == 4);
    CHECK(open_sets(kChain2).size() == 3);
    CHECK(open_sets(kVee).size() == 5);
    CHECK(open_sets(kChain3).size() == 4);
}

TEST_CASE("splitting requires an open upper part") {
    auto cut = delta_split(kChain2, LabelSet{"A"}, LabelSet{"B"});
    REQUIRE(cut.has_value());
    CHECK(cut->first == QuasiPoset({{"A"}}, {}));
    CHECK(cut->second == QuasiPoset({{"B"}}, {}));
    CHECK_FALSE(delta_split(kChain2, LabelSet{"B"}, LabelSet{"A"}).has_value());

    auto vee = delta_split(kVee, LabelSet{"A"}, LabelSet{"B", "C"});
    REQUIRE(vee.has_value());
    CHECK(vee->second == QuasiPoset({{"B"}, {"C"}}, {}));

    CHECK_FALSE(restrict_topology(QuasiPoset({{"A", "B"}}, {}), LabelSet{"A"}).has_value());
}

TEST_CASE("compatible equivalences") {
    CHECK(compatible_equivalences(kChain2).size() == 2);
    CHECK(compatible_equivalences(kVee).size() == 4);
    CHECK(compatible_equivalences(kChain3).size() == 4);
    // incomparable classes never merge: the coproduct must factor over
    // disjoint unions
    CHECK(compatible_equivalences(kAntichain).size() == 1);
}

TEST_CASE("extraction-contraction coproduct of a two-chain") {
    LinComb<TensorKey<QuasiPoset, QuasiPoset>> expected;
    expected.add_term({kChain2, kAntichain}, 1);
    expected.add_term({QuasiPoset({{"A", "B"}}, {}), kChain2}, 1);
    CHECK(internal_delta(kChain2) == expected);
}

TEST_CASE("extraction-contraction coproduct of the vee") {
    LinComb<TensorKey<QuasiPoset, QuasiPoset>> expected;
    expected.add_term({kVee, QuasiPoset({{"A"}, {"B"}, {"C"}}, {})}, 1);
    expected.add_term({QuasiPoset({{"A", "B"}, {"C"}}, {{0, 1}}),
                       QuasiPoset({{"A"}, {"B"}, {"C"}}, {{0, 1}})},
                      1);
    expected.add_term({QuasiPoset({{"A", "C"}, {"B"}}, {{0, 1}}),
                       QuasiPoset({{"A"}, {"B"}, {"C"}}, {{0, 2}})},
                      1);
    expected.add_term({QuasiPoset({{"A", "B", "C"}}, {}), kVee}, 1);
    CHECK(internal_delta(kVee) == expected);
}

TEST_CASE("extraction-contraction coproduct of a three-chain") {
    LinComb<TensorKey<QuasiPoset, QuasiPoset>> expected;
    expected.add_term({kChain3, QuasiPoset({{"A"}, {"B"}, {"C"}}, {})}, 1);
    expected.add_term({QuasiPoset({{"A", "B"}, {"C"}}, {{0, 1}}),
                       QuasiPoset({{"A"}, {"B"}, {"C"}}, {{0, 1}})},
                      1);
    expected.add_term({QuasiPoset({{"A"}, {"B", "C"}}, {{0, 1}}),
                       QuasiPoset({{"A"}, {"B"}, {"C"}}, {{1, 2}})},
                      1);
    expected.add_term({QuasiPoset({{"A", "B", "C"}}, {}), kChain3}, 1);
    CHECK(internal_delta(kChain3) == expected);
}

TEST_CASE("cover-free counit") {
    CHECK(eps_prime(kSingle) == 1);
    CHECK(eps_prime(kAntichain) == 1);
    CHECK(eps_prime(QuasiPoset({{"A", "B"}}, {})) == 1);
    CHECK(eps_prime(kChain2) == 0);
}

TEST_CASE("strict and weak extensions") {
    CHECK(strict_extensions(kChain2).size() == 1);
    CHECK(strict_extensions(kAntichain).size() == 3);
    CHECK(strict_extensions(kVee).size() == 3);
    CHECK(strict_extensions(kChain3).size() == 1);

    CHECK(weak_extensions(kChain2).size() == 2);
    CHECK(weak_extensions(kChain3).size() == 4);
    CHECK(weak_extensions(kVee).size() == 6);
}

TEST_CASE("strict-extension morphism on small quasi-posets") {
    CHECK(phi_ehr(kSingle) == LinComb<SetComposition>(sc({{"A"}})));
    CHECK(phi_ehr(QuasiPoset({{"A", "B"}}, {})) == LinComb<SetComposition>(sc({{"A", "B"}})));
    CHECK(phi_ehr(kChain2) == LinComb<SetComposition>(sc({{"A"}, {"B"}})));

    LinComb<SetComposition> vee_expected;
    vee_expected.add_term(sc({{"A"}, {"B"}, {"C"}}), 1);
    vee_expected.add_term(sc({{"A"}, {"C"}, {"B"}}), 1);
    vee_expected.add_term(sc({{"A"}, {"B", "C"}}), 1);
    CHECK(phi_ehr(kVee) == vee_expected);

    CHECK(phi_ehr(kChain3) == LinComb<SetComposition>(sc({{"A"}, {"B"}, {"C"}})));
}

TEST_CASE("q-deformed strict-extension morphism") {
    Rational q(7);
    auto chain2 = phi_ehr_q(kChain2, q);
    LinComb<SetComposition> chain2_expected;
    chain2_expected.add_term(sc({{"A"}, {"B"}}), 1);
    chain2_expected.add_term(sc({{"A", "B"}}), (1 - q) / 2);
    CHECK(chain2 == chain2_expected);

    auto vee = phi_ehr_q(kVee, q);
    CHECK(vee.coeff(sc({{"A"}, {"B"}, {"C"}})) == 1);
    CHECK(vee.coeff(sc({{"A"}, {"C"}, {"B"}})) == 1);
    CHECK(vee.coeff(sc({{"A"}, {"B", "C"}})) == 1);
    CHECK(vee.coeff(sc({{"A", "B"}, {"C"}})) == (1 - q) / 2);
    CHECK(vee.coeff(sc({{"A", "C"}, {"B"}})) == (1 - q) / 2);
    CHECK(vee.coeff(sc({{"A", "B", "C"}})) == (1 - q) * (2 - q) / 6);
    CHECK(vee.size() == 6);

    auto chain3 = phi_ehr_q(kChain3, q);
    CHECK(chain3.coeff(sc({{"A"}, {"B"}, {"C"}})) == 1);
    CHECK(chain3.coeff(sc({{"A", "B"}, {"C"}})) == (1 - q) / 2);
    CHECK(chain3.coeff(sc({{"A"}, {"B", "C"}})) == (1 - q) / 2);
    CHECK(chain3.coeff(sc({{"A", "B", "C"}})) == (1 - q) * (1 - 2 * q) / 6);
    CHECK(chain3.size() == 4);

    CHECK(phi_ehr_q(kVee, Rational(1)) == phi_ehr(kVee));
}

TEST_CASE("specializations at zero and minus one") {
    // q = 0 is the unit-weight homogeneous morphism
    std::vector<Rational> ones{0, 1, 1, 1};
    auto vee0 = phi_ehr_q(kVee, Rational(0));
    CHECK(vee0 == phi_hom_top(kVee, ones));
    CHECK(vee0.coeff(sc({{"A", "B"}, {"C"}})) == Rational(1, 2));
    CHECK(vee0.coeff(sc({{"A", "B", "C"}})) == Rational(1, 3));

    auto chain3_0 = phi_ehr_q(kChain3, Rational(0));
    CHECK(chain3_0.coeff(sc({{"A", "B", "C"}})) == Rational(1, 6));

    // q = -1 enumerates the weak extensions, all with weight one
    LinComb<SetComposition> chain2_expected;
    chain2_expected.add_term(sc({{"A"}, {"B"}}), 1);
    chain2_expected.add_term(sc({{"A", "B"}}), 1);
    CHECK(phi_ehr_q(kChain2, Rational(-1)) == chain2_expected);

    LinComb<SetComposition> chain3_expected;
    chain3_expected.add_term(sc({{"A"}, {"B"}, {"C"}}), 1);
    chain3_expected.add_term(sc({{"A", "B"}, {"C"}}), 1);
    chain3_expected.add_term(sc({{"A"}, {"B", "C"}}), 1);
    chain3_expected.add_term(sc({{"A", "B", "C"}}), 1);
    CHECK(phi_ehr_q(kChain3, Rational(-1)) == chain3_expected);
}

TEST_CASE("heap orders") {
    CHECK(heap_order_count(kSingle) == 1);
    CHECK(heap_order_count(kAntichain) == 2);
    CHECK(heap_order_count(kChain2) == 1);
    CHECK(heap_order_count(kVee) == 2);
    CHECK(heap_order_count(kChain3) == 1);
    CHECK(lambda_ho(kVee) == Rational(1, 3));
    CHECK(lambda_ho(kChain3) == Rational(1, 6));
}

TEST_CASE("joint product stacks the second factor above the first") {
    CHECK(joint_product(QuasiPoset({{"A"}}, {}), QuasiPoset({{"B"}}, {})) == kChain2);
    auto stacked = joint_product(kAntichain, QuasiPoset({{"C"}}, {}));
    CHECK(stacked == QuasiPoset({{"A"}, {"B"}, {"C"}}, {{0, 2}, {1, 2}}));
}

TEST_CASE("quotient-sum automorphism and its inverse") {
    LinComb<QuasiPoset> expected(kChain2);
    expected.add_term(QuasiPoset({{"A", "B"}}, {}), 1);
    CHECK(gamma_top(kChain2) == expected);

    for (const auto& t : {kChain2, kAntichain, kVee, kChain3}) {
        LinComb<QuasiPoset> round;
        for (const auto& [k, c] : gamma_top(t).terms()) round += gamma_top_inv(k) * c;
        CHECK(round == LinComb<QuasiPoset>(t));
    }
}
