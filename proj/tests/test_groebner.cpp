#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "tenrank/groebner.hpp"

using namespace tenrank;

namespace {

// S-polynomial over Q, used only to check the basis from the outside.
Polynomial spoly(const Polynomial& f, const Polynomial& g, const VarOrder& order) {
    auto [mf, cf] = f.leading_term(order);
    auto [mg, cg] = g.leading_term(order);
    Monomial l = lcm(mf, mg);
    Polynomial a = Polynomial::term(f.registry(), l / mf, Rational(1) / cf);
    Polynomial b = Polynomial::term(f.registry(), l / mg, Rational(1) / cg);
    return a * f - b * g;
}

bool is_groebner_basis_of(const std::vector<Polynomial>& basis, const std::vector<Polynomial>& F,
                          const VarOrder& order) {
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j)
            if (!reduce(spoly(basis[i], basis[j], order), basis, order).is_zero()) return false;
    for (const auto& f : F)
        if (!f.is_zero() && !reduce(f, basis, order).is_zero()) return false;
    return true;
}

}  // namespace

TEST_CASE("reduce") {
    auto r = make_registry({"c3", "c2"});
    VarOrder order = VarOrder::natural(r);
    Polynomial g = parse_polynomial("c2-1", r);

    CHECK(reduce(g, {g}, order).is_zero());
    CHECK(reduce(parse_polynomial("c2^2-1", r), {g}, order).is_zero());
    // oracle: remainder mod (c2-1) is evaluation at c2=1
    CHECK(reduce(parse_polynomial("c2^2+1", r), {g}, order) == Polynomial::constant(r, 2));
    // empty divisor set returns the input
    Polynomial f = parse_polynomial("c2^3+c3", r);
    CHECK(reduce(f, {}, order) == f);
    // idempotence
    std::vector<Polynomial> G = {parse_polynomial("c2^2+c3", r), parse_polynomial("c3^2-2", r)};
    Polynomial once = reduce(f, G, order);
    CHECK(reduce(once, G, order) == once);
}

TEST_CASE("buchberger on already-reduced input") {
    auto r = make_registry({"c3", "c2"});
    VarOrder order = VarOrder::natural(r);
    std::vector<Polynomial> F = {parse_polynomial("c2-1", r), parse_polynomial("c3-2", r)};
    auto gb = buchberger(F, order);
    REQUIRE(gb.size() == 2);
    // ascending by leading monomial: c2-1 first under order c3 > c2
    CHECK(gb[0] == parse_polynomial("c2-1", r));
    CHECK(gb[1] == parse_polynomial("c3-2", r));
}

TEST_CASE("buchberger degenerate inputs") {
    auto r = make_registry({"c2"});
    VarOrder order = VarOrder::natural(r);
    CHECK(buchberger({}, order).empty());
    CHECK(buchberger({Polynomial::zero(r)}, order).empty());
    auto unit = buchberger({parse_polynomial("c2", r), parse_polynomial("c2+1", r)}, order);
    REQUIRE(unit.size() == 1);
    CHECK(unit[0] == Polynomial::constant(r, 1));
}

TEST_CASE("textbook elimination example") {
    // x^2 - y, x^3 - z under lex x > y > z: eliminant structure y^3 - z^2
    auto r = make_registry({"x", "y", "z"});
    VarOrder order = VarOrder::natural(r);
    std::vector<Polynomial> F = {parse_polynomial("x^2-y", r), parse_polynomial("x^3-z", r)};
    auto gb = buchberger(F, order);
    CHECK(is_groebner_basis_of(gb, F, order));
    CHECK(gb[0] == parse_polynomial("y^3-z^2", r));
}

TEST_CASE("buchberger correctness on random quadratic systems") {
    std::mt19937_64 rng(901);
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<int> nvars_dist(2, 4);
    const std::vector<std::string> names = {"w", "x", "y", "z"};
    for (int trial = 0; trial < 100; ++trial) {
        int nv = nvars_dist(rng);
        auto r = make_registry(std::vector<std::string>(names.begin(), names.begin() + nv));
        VarOrder order = VarOrder::natural(r);
        // random polynomials of total degree <= 2
        std::vector<Monomial> monos;
        Monomial base(static_cast<std::size_t>(nv));
        monos.push_back(base);
        for (int i = 0; i < nv; ++i) {
            Monomial m = base;
            m.exp[static_cast<std::size_t>(i)] = 1;
            monos.push_back(m);
            for (int j = i; j < nv; ++j) {
                Monomial q = m;
                q.exp[static_cast<std::size_t>(j)] += 1;
                monos.push_back(q);
            }
        }
        // square systems: as many polynomials as variables, so the ideal is
        // zero-dimensional with probability one (dense lex bases of random
        // positive-dimensional ideals are not a workload of this library)
        std::vector<Polynomial> F;
        int np = nv;
        for (int k = 0; k < np; ++k) {
            Polynomial p = Polynomial::zero(r);
            for (const auto& m : monos) p.add_term(m, Rational(coeff(rng)));
            F.push_back(p);
        }
        auto gb = buchberger(F, order);
        CHECK(is_groebner_basis_of(gb, F, order));

        // uniqueness under permutation and nonzero scaling of the input
        std::vector<Polynomial> F2 = F;
        std::shuffle(F2.begin(), F2.end(), rng);
        for (auto& f : F2) f = f * Rational(coeff(rng) * 2 + 1, 3);
        CHECK(buchberger(F2, order) == gb);
    }
}

TEST_CASE("shape_check") {
    SECTION("single univariate generator") {
        auto r = make_registry({"c2"});
        VarOrder order = VarOrder::natural(r);
        auto rep = shape_check({parse_polynomial("c2-5", r)}, order);
        CHECK(rep.shape_position);
        CHECK(rep.eliminant_degree == 1);
        CHECK(rep.eliminant_index == 0);
    }
    SECTION("non-linear second generator is rejected") {
        auto r = make_registry({"c3", "c2"});
        VarOrder order = VarOrder::natural(r);
        std::vector<Polynomial> gb = {parse_polynomial("c2^2+c3^2", r),
                                      parse_polynomial("c3^3", r)};
        auto rep = shape_check(gb, order);
        CHECK_FALSE(rep.shape_position);
    }
    SECTION("triangular shape accepted") {
        auto r = make_registry({"s1", "c3", "c2"});
        VarOrder order = VarOrder::natural(r);
        std::vector<Polynomial> gb = {parse_polynomial("c2^3-2*c2+1", r),
                                      parse_polynomial("c3+c2^2-1", r),
                                      parse_polynomial("s1-c2", r)};
        auto rep = shape_check(gb, order);
        CHECK(rep.shape_position);
        CHECK(rep.eliminant_degree == 3);
        CHECK(rep.eliminant_index == 0);
    }
}
