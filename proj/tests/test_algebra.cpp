#include <doctest.h>

#include <random>
#include <vector>

#include "virlike/algebra.hpp"

using namespace virlike;

namespace {

LieElement random_element(std::mt19937& rng, long box, int max_terms) {
    std::uniform_int_distribution<long> idx(-box, box);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 5);
    std::uniform_int_distribution<int> count(0, max_terms);
    LieElement e;
    for (int i = count(rng); i > 0; --i)
        e.add_term(GenIndex::basis(idx(rng), idx(rng)), Rational(num(rng), den(rng)));
    return e;
}

void check_canonical(const LieElement& e) {
    for (const auto& [idx, c] : e.terms()) CHECK_FALSE(c.is_zero());
}

}  // namespace

TEST_CASE("bracket_basis spot values") {
    LieElement expected;
    expected.add_term(GenIndex::basis(3, 3), Rational(-1));
    CHECK(bracket_basis(2, 1, 1, 1) == expected);

    expected = LieElement{};
    expected.add_term(GenIndex::basis(0, -2), Rational(-2));
    expected.add_term(GenIndex::basis(0, -3), Rational(-1));
    expected.add_term(GenIndex::c(), Rational(1, 12));
    CHECK(bracket_basis(1, -1, -1, -2) == expected);

    CHECK(bracket_basis(5, 7, 5, 7).is_zero());

    expected = LieElement{};
    expected.add_term(GenIndex::basis(0, 0), Rational(-4));
    expected.add_term(GenIndex::c(), Rational(1, 2));
    CHECK(bracket_basis(0, 2, 0, -2) == expected);
}

TEST_CASE("central cocycle values and branches") {
    CHECK(central_cocycle(1, -1, -1, -2) == Rational(1, 12));
    CHECK(central_cocycle(2, 0, 1, 0) == Rational(0));
    CHECK(central_cocycle(0, 2, 0, -2) == Rational(1, 2));
    // zero whenever alpha sum is nonzero or beta sum outside [-3, 0]
    CHECK(central_cocycle(3, 1, -3, 2) == Rational(0));
    CHECK(central_cocycle(3, 1, -3, -5) == Rational(0));
}

TEST_CASE("cocycle antisymmetry on box 4") {
    for (long a1 = -4; a1 <= 4; ++a1)
        for (long b1 = -4; b1 <= 4; ++b1)
            for (long b2 = -4; b2 <= 4; ++b2)
                CHECK(central_cocycle(a1, b1, -a1, b2) == -central_cocycle(-a1, b2, a1, b1));
}

TEST_CASE("bracket is bilinear and kills the center") {
    CHECK(bracket(LieElement::generator(1, 0), LieElement::central()).is_zero());
    CHECK(bracket(LieElement::central(), LieElement::generator(1, 0)).is_zero());

    LieElement expected;
    expected.add_term(GenIndex::basis(3, 3), Rational(-2));
    CHECK(bracket(LieElement::generator(2, 1).scaled(Rational(2)), LieElement::generator(1, 1)) ==
          expected);

    std::mt19937 rng(7);
    for (int i = 0; i < 100; ++i) {
        const LieElement x = random_element(rng, 3, 4);
        CHECK(bracket(x, x).is_zero());
        const LieElement y = random_element(rng, 3, 4);
        CHECK((bracket(x, y) + bracket(y, x)).is_zero());
        check_canonical(bracket(x, y));
    }
}

TEST_CASE("antisymmetry of bracket_basis on box 3") {
    for (long a1 = -3; a1 <= 3; ++a1)
        for (long b1 = -3; b1 <= 3; ++b1)
            for (long a2 = -3; a2 <= 3; ++a2)
                for (long b2 = -3; b2 <= 3; ++b2)
                    CHECK((bracket_basis(a1, b1, a2, b2) + bracket_basis(a2, b2, a1, b1)).is_zero());
}

TEST_CASE("jacobi defect vanishes") {
    CHECK(jacobi_defect(LieElement::generator(1, 0), LieElement::generator(0, 1),
                        LieElement::generator(2, 2))
              .is_zero());
    // exercises the delta_{beta1+beta2,-1} and -3 cocycle branches
    CHECK(jacobi_defect(LieElement::generator(1, -1), LieElement::generator(-1, -2),
                        LieElement::generator(0, 5))
              .is_zero());
    CHECK(jacobi_defect(LieElement::generator(3, 0), LieElement::generator(-3, -3),
                        LieElement::generator(0, 0))
              .is_zero());
}

TEST_CASE("jacobi exhaustive on box 2") {
    for (long a1 = -2; a1 <= 2; ++a1)
        for (long b1 = -2; b1 <= 2; ++b1)
            for (long a2 = -2; a2 <= 2; ++a2)
                for (long b2 = -2; b2 <= 2; ++b2)
                    for (long a3 = -2; a3 <= 2; ++a3)
                        for (long b3 = -2; b3 <= 2; ++b3) {
                            const LieElement d =
                                jacobi_defect(LieElement::generator(a1, b1),
                                              LieElement::generator(a2, b2),
                                              LieElement::generator(a3, b3));
                            REQUIRE(d.is_zero());
                        }
}

TEST_CASE("jacobi on random elements") {
    std::mt19937 rng(11);
    for (int i = 0; i < 60; ++i) {
        const LieElement x = random_element(rng, 3, 3);
        const LieElement y = random_element(rng, 3, 3);
        const LieElement z = random_element(rng, 3, 3);
        CHECK(jacobi_defect(x, y, z).is_zero());
    }
}

TEST_CASE("element_combine") {
    const std::vector<Rational> c1{Rational(1), Rational(-1)};
    const std::vector<LieElement> e1{LieElement::generator(1, 1), LieElement::generator(1, 1)};
    CHECK(element_combine(c1, e1).is_zero());

    const std::vector<Rational> c2{Rational(1, 2)};
    const std::vector<LieElement> e2{LieElement::generator(0, 0).scaled(Rational(2))};
    CHECK(element_combine(c2, e2) == LieElement::generator(0, 0));

    const std::vector<Rational> c3{Rational(1), Rational(1)};
    const std::vector<LieElement> e3{LieElement::generator(1, 1), LieElement::central()};
    LieElement expected = LieElement::generator(1, 1);
    expected.add_term(GenIndex::c(), Rational(1));
    CHECK(element_combine(c3, e3) == expected);

    const std::vector<Rational> c4{Rational(1)};
    CHECK_THROWS_AS(element_combine(c4, e3), std::invalid_argument);
}

TEST_CASE("canonical form never stores zeros") {
    LieElement e;
    e.add_term(GenIndex::basis(1, 1), Rational(1, 2));
    e.add_term(GenIndex::basis(1, 1), Rational(-1, 2));
    CHECK(e.is_zero());
    CHECK(e.terms().empty());
    e.add_term(GenIndex::basis(0, 0), Rational(0));
    CHECK(e.terms().empty());
}

TEST_CASE("generator index ordering puts the center last") {
    LieElement e;
    e.add_term(GenIndex::c(), Rational(1));
    e.add_term(GenIndex::basis(5, 5), Rational(1));
    e.add_term(GenIndex::basis(-5, 9), Rational(1));
    auto it = e.terms().begin();
    CHECK(it->first == GenIndex::basis(-5, 9));
    ++it;
    CHECK(it->first == GenIndex::basis(5, 5));
    ++it;
    CHECK(it->first.central);
}
