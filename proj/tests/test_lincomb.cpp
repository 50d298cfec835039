#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "halg/lincomb.hpp"
#include "halg/rational.hpp"

using namespace halg;

TEST_CASE("rational text round trip") {
    CHECK(rat_to_string(Rational(1, 2)) == "1/2");
    CHECK(rat_to_string(Rational(-3)) == "-3");
    CHECK(rat_to_string(Rational(0)) == "0");
    CHECK(rat_parse("2/4") == Rational(1, 2));
    CHECK(rat_parse("-7") == Rational(-7));
    CHECK(rat_parse("-1/3") == Rational(-1, 3));
    CHECK_THROWS_AS(rat_parse(""), std::invalid_argument);
    CHECK_THROWS_AS(rat_parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(rat_parse("abc"), std::invalid_argument);
}

TEST_CASE("factorials and falling-factorial binomials") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(hilbert(0, Rational(7)) == 1);
    CHECK(hilbert(1, Rational(7)) == 7);
    CHECK(hilbert(2, Rational(7)) == 21);   // 7*6/2
    CHECK(hilbert(3, Rational(-1)) == -1);  // (-1)(-2)(-3)/6
    CHECK(hilbert(2, Rational(1, 2)) == Rational(-1, 8));
}

TEST_CASE("zero coefficients are never stored") {
    LinComb<int> x;
    x.add_term(1, Rational(2));
    x.add_term(1, Rational(-2));
    CHECK(x.is_zero());
    CHECK(x.size() == 0);

    LinComb<int> y(3, Rational(0));
    CHECK(y.is_zero());

    LinComb<int> z(3, Rational(5));
    z *= Rational(0);
    CHECK(z.is_zero());
}

TEST_CASE("linear arithmetic") {
    LinComb<int> x(1);
    x.add_term(2, Rational(3));
    LinComb<int> y(2, Rational(-3));
    y.add_term(5, Rational(1, 2));

    auto sum = x + y;
    CHECK(sum.coeff(1) == 1);
    CHECK(sum.coeff(2) == 0);
    CHECK(sum.coeff(5) == Rational(1, 2));
    CHECK(sum.size() == 2);

    auto diff = sum - sum;
    CHECK(diff.is_zero());

    auto scaled = sum * Rational(4);
    CHECK(scaled.coeff(5) == 2);
    CHECK(scaled == Rational(4) * sum);
}

TEST_CASE("equal values compare equal regardless of construction order") {
    LinComb<int> a;
    a.add_term(2, Rational(1));
    a.add_term(1, Rational(1));
    LinComb<int> b;
    b.add_term(1, Rational(1));
    b.add_term(2, Rational(1));
    CHECK(a == b);
    b.add_term(2, Rational(1, 7));
    CHECK(a != b);
}

TEST_CASE("iteration follows the key order") {
    LinComb<int> x;
    x.add_term(9, Rational(1));
    x.add_term(-2, Rational(1));
    x.add_term(4, Rational(1));
    std::vector<int> keys;
    for (const auto& [k, c] : x.terms()) keys.push_back(k);
    CHECK(keys == std::vector<int>{-2, 4, 9});
}

TEST_CASE("linear map application") {
    LinComb<int> x(1);
    x.add_term(2, Rational(3));
    auto doubled = x.map([](int k) { return LinComb<int>(2 * k); });
    CHECK(doubled.coeff(2) == 1);
    CHECK(doubled.coeff(4) == 3);
}

TEST_CASE("bilinear extension and tensor product") {
    LinComb<int> x(1);
    x.add_term(2, Rational(2));
    LinComb<int> y(10, Rational(3));

    auto prod = bilinear_extend([](int a, int b) { return LinComb<int>(a + b); }, x, y);
    CHECK(prod.coeff(11) == 3);
    CHECK(prod.coeff(12) == 6);

    auto t = tensor(x, y);
    CHECK(t.coeff({1, 10}) == 3);
    CHECK(t.coeff({2, 10}) == 6);
    CHECK(t.size() == 2);
}
