#include <catch2/catch_amalgamated.hpp>

#include "tenrank/polynomial.hpp"

using namespace tenrank;

namespace {
RegistryPtr reg() { return make_registry({"s1", "c3", "c2"}); }
}  // namespace

TEST_CASE("rational parsing is canonical") {
    CHECK(parse_rational("4/6") == Rational(2, 3));
    CHECK(parse_rational("-4/6") == Rational(-2, 3));
    CHECK(parse_rational("0/7") == 0);
    CHECK(parse_rational("0/7").get_den() == 1);
    CHECK_THROWS_AS(parse_rational("1/0"), input_error);
    CHECK_THROWS_AS(parse_rational("abc"), input_error);
}

TEST_CASE("polynomial arithmetic") {
    auto r = reg();
    Polynomial c2 = Polynomial::variable(r, r->index_of("c2"));
    Polynomial one = Polynomial::constant(r, 1);

    SECTION("difference of squares") {
        Polynomial p = (c2 + one) * (c2 - one);
        Polynomial expect = c2 * c2 - one;
        CHECK(p == expect);
    }
    SECTION("additive identity") {
        Polynomial f = c2 * c2 * Rational(3) + one;
        CHECK(f + Polynomial::zero(r) == f);
    }
    SECTION("witness polynomial 3*c2^4*c3^4+1") {
        Polynomial c3 = Polynomial::variable(r, r->index_of("c3"));
        Polynomial f = Polynomial::constant(r, 3);
        for (int i = 0; i < 4; ++i) f = f * c2;
        for (int i = 0; i < 4; ++i) f = f * c3;
        Polynomial g = f + one;
        CHECK(g == parse_polynomial("3*c2^4*c3^4+1", r));
        CHECK(g.term_count() == 2);
        CHECK(g.total_degree() == 8);
    }
    SECTION("registry mismatch rejected") {
        auto other = make_registry({"x"});
        Polynomial x = Polynomial::variable(other, 0);
        CHECK_THROWS_AS(c2 + x, domain_error);
    }
}

TEST_CASE("no zero coefficients are stored") {
    auto r = reg();
    Polynomial c2 = Polynomial::variable(r, r->index_of("c2"));
    Polynomial p = c2 - c2;
    CHECK(p.is_zero());
    CHECK(p.term_count() == 0);
}

TEST_CASE("lex comparison follows the order sequence") {
    auto r = reg();  // order s1 > c3 > c2
    VarOrder order = VarOrder::natural(r);
    Monomial s1(3), c2sq(3), c2cu(3), s1c2(3), s1c3(3);
    s1.exp[0] = 1;
    c2sq.exp[2] = 2;
    c2cu.exp[2] = 3;
    s1c2.exp[0] = 1, s1c2.exp[2] = 1;
    s1c3.exp[0] = 1, s1c3.exp[1] = 1;

    CHECK(lex_compare(s1, c2sq, order) == Cmp::greater);
    CHECK(lex_compare(c2sq, c2cu, order) == Cmp::less);
    // s1*c2 vs s1*c3 with c3 ahead of c2 in the order
    CHECK(lex_compare(s1c2, s1c3, order) == Cmp::less);
    CHECK(lex_compare(s1c2, s1c2, order) == Cmp::equal);
}

TEST_CASE("text form round-trips losslessly") {
    auto r = reg();
    auto roundtrip = [&](const std::string& text) {
        Polynomial p = parse_polynomial(text, r);
        Polynomial q = parse_polynomial(to_string(p), r);
        CHECK(p == q);
    };
    roundtrip("3*c2^4*c3^4+1");
    roundtrip("-1/2*s1*c2+7*c3-2/3");
    roundtrip("0");
    roundtrip("c2^10-c2");
    roundtrip("-s1");

    CHECK(to_string(parse_polynomial("c2+1", r), VarOrder::natural(r)) == "c2+1");
    CHECK_THROWS_AS(parse_polynomial("q9+1", r), input_error);
    CHECK_THROWS_AS(parse_polynomial("c2++1", r), input_error);
}

TEST_CASE("substitution and evaluation") {
    auto r = reg();
    Polynomial p = parse_polynomial("s1*c2^2-c3", r);
    Polynomial q = p.substitute(r->index_of("c2"), Rational(2));
    CHECK(q == parse_polynomial("4*s1-c3", r));
    CHECK(p.evaluate({Rational(1), Rational(4), Rational(2)}) == 0);
}

TEST_CASE("primitive part clears denominators and content") {
    auto r = reg();
    VarOrder order = VarOrder::natural(r);
    Polynomial p = parse_polynomial("2/3*c2^2-4/3", r);
    CHECK(to_string(p.primitive_part(order)) == "c2^2-2");
    Polynomial n = parse_polynomial("-5*c2", r);
    CHECK(to_string(n.primitive_part(order)) == "c2");
}
