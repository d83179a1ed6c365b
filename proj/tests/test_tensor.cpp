#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "tenrank/systems.hpp"
#include "tenrank/tensor.hpp"
#include "tenrank/groebner.hpp"
#include "tenrank/univariate.hpp"

using namespace tenrank;

namespace {

std::string read_file(const std::string& name) {
    std::ifstream in(std::string(TENRANK_FIXTURE_DIR) + "/" + name);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Tensor3 load(const std::string& name) { return parse_tensor(read_file(name)); }

}  // namespace

TEST_CASE("shape parsing") {
    Shape s = parse_shape("7x4x3");
    CHECK(s.I == 7);
    CHECK(s.J == 4);
    CHECK(s.K == 3);
    CHECK(s.str() == "7x4x3");
    CHECK_THROWS_AS(parse_shape("7x4"), input_error);
    CHECK_THROWS_AS(parse_shape("axbxc"), input_error);
    CHECK_THROWS_AS(parse_shape("7x0x3"), input_error);
}

TEST_CASE("classification") {
    SECTION("square two-slice is compact minimal") {
        auto c = classify({3, 3, 2});
        CHECK(c.tallness == Tallness::compact);
        CHECK(c.regime == Regime::minimal);
        CHECK(c.special == Special::square_two_slice);
        CHECK(c.neq == 3);
        CHECK(c.df == 3);
        CHECK(c.nbil == 1);
    }
    SECTION("tallest compact is underdetermined by one") {
        auto c = classify({8, 4, 3});
        CHECK(c.tallness == Tallness::compact);
        CHECK(c.regime == Regime::underdetermined);
        CHECK(c.special == Special::tallest_compact);
        CHECK(c.neq == 8);
        CHECK(c.df == 9);
    }
    SECTION("minimal shapes") {
        for (Shape s : {Shape{5, 3, 3}, Shape{7, 4, 3}, Shape{9, 5, 3}, Shape{10, 4, 4}}) {
            auto c = classify(s);
            CHECK(c.regime == Regime::minimal);
            CHECK(is_minimal_shape(s));
        }
        CHECK_FALSE(is_minimal_shape({8, 4, 3}));
    }
    SECTION("tall and very tall") {
        CHECK(classify({11, 4, 3}).tallness == Tallness::tall);
        CHECK(classify({17, 8, 3}).tallness == Tallness::tall);
        CHECK(classify({12, 4, 3}).tallness == Tallness::very_tall);
        CHECK(classify({30, 4, 3}).tallness == Tallness::very_tall);
    }
    SECTION("overdetermined compact") {
        auto c = classify({4, 4, 3});
        CHECK(c.regime == Regime::overdetermined);
        CHECK(c.tallness == Tallness::compact);
        CHECK(c.special == Special::none);
    }
    SECTION("unordered shapes name the sorting permutation") {
        CHECK_THROWS_WITH(classify({3, 4, 3}), Catch::Matchers::ContainsSubstring("permute"));
        CHECK_THROWS_AS(classify({5, 3, 4}), input_error);
        CHECK_THROWS_AS(classify({5, 5, 1}), input_error);
    }
}

TEST_CASE("tensor accessors and transforms") {
    Tensor3 t({2, 2, 2}, Mode::general);
    t.at(0, 0, 0) = 1;
    t.at(1, 0, 1) = Rational(-3, 2);
    CHECK(t.slice(1)[1][0] == Rational(-3, 2));
    CHECK(t.row_slice(1)[0][1] == Rational(-3, 2));
    CHECK_THROWS_AS(t.at(2, 0, 0), input_error);

    Tensor3 s = t.scaled(Rational(2));
    CHECK(s.at(1, 0, 1) == -3);

    Tensor3 w = t.with_slices_swapped(0, 1);
    CHECK(w.at(0, 0, 1) == 1);
    CHECK(w.at(1, 0, 0) == Rational(-3, 2));

    // identity permutation round-trips
    CHECK(t.permuted({0, 1, 2}) == Tensor3(t.permuted({0, 1, 2})));
    Tensor3 p = t.permuted({2, 1, 0});
    CHECK(p.at(1, 0, 1) == Rational(-3, 2));
}

TEST_CASE("symmetry validation") {
    Tensor3 t({1, 2, 2}, Mode::indscal);
    t.at(0, 0, 1) = 1;
    CHECK_THROWS_WITH(t.validate_symmetry(), Catch::Matchers::ContainsSubstring("not symmetric"));
    t.at(0, 1, 0) = 1;
    CHECK_NOTHROW(t.validate_symmetry());
    CHECK_THROWS_AS(Tensor3(Shape{3, 4, 3}, Mode::indscal), input_error);
}

TEST_CASE("json round trips") {
    for (const char* name :
         {"s4_4x4x3.json", "ex6_7x4x3.json", "ex7_4x3x3.json", "ex8_7x4x4.json"}) {
        Tensor3 t = load(name);
        CHECK(parse_tensor(print_tensor(t)) == t);
    }
    Tensor3 ex7 = load("ex7_4x3x3.json");
    CHECK(ex7.mode() == Mode::indscal);
    CHECK(ex7.shape() == Shape{4, 3, 3});
    CHECK_NOTHROW(ex7.validate_symmetry());
    CHECK(load("s4_4x4x3.json").mode() == Mode::general);

    CHECK_THROWS_AS(parse_tensor("{"), input_error);
    CHECK_THROWS_AS(parse_tensor("{\"shape\":[2,2]}"), input_error);
    // rational entries survive the round trip
    Tensor3 t({1, 1, 2}, Mode::general);
    t.at(0, 0, 0) = Rational(22, 7);
    CHECK(parse_tensor(print_tensor(t)) == t);
}

TEST_CASE("general slice system") {
    Tensor3 X = load("s4_4x4x3.json");
    PolySystem sys = build_system(X);
    CHECK(sys.equations.size() == 8);  // (K-1)J
    CHECK(sys.normalization == "c1=1, s4=1");
    CHECK(sys.order.names() == std::vector<std::string>{"s1", "s2", "s3", "c3", "c2"});
    for (const auto& eq : sys.equations) {
        // each equation is bilinear in (s, c): total degree 2, degree 1 per block
        for (const auto& [m, c] : eq.terms()) CHECK(m.total_degree() <= 2);
    }

    // eliminant of the overdetermined 4x4x3 system, checked against an
    // independently computed reference
    auto gb = buchberger(sys.equations, sys.order);
    auto rep = shape_check(gb, sys.order);
    REQUIRE(rep.shape_position);
    CHECK(gb.size() == 5);
    CHECK(rep.eliminant_degree == 4);
    auto g1 = UnivariatePoly::from_polynomial(gb[static_cast<std::size_t>(rep.eliminant_index)],
                                              sys.order.least_variable())
                  .primitive();
    CHECK(g1 ==
          parse_univariate("3934656*c2^4-10091484*c2^3+1855673*c2^2+1131869*c2-266104"));
}

TEST_CASE("symmetric slice system") {
    Tensor3 X = load("ex7_4x3x3.json");
    PolySystem sys = build_indscal_system(X);
    CHECK(sys.equations.size() == 6);  // J(J+1)/2
    CHECK(sys.normalization == "b3=1");
    CHECK(sys.order.names() == std::vector<std::string>{"s1", "s2", "s3", "s4", "b1", "b2"});
    Tensor3 G({2, 2, 2}, Mode::general);
    CHECK_THROWS_AS(build_indscal_system(G), domain_error);
}

TEST_CASE("gamma matrix") {
    Tensor3 X = load("ex6_7x4x3.json");
    PolyMatrix g = gamma_matrix(X);
    CHECK(g.rows() == 7);
    CHECK(g.cols() == 8);
    // column block k-2 holds X_k - c_k X_1: entry degree <= 1
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j)
            for (const auto& [m, c] : g.at(i, j).terms()) CHECK(m.total_degree() <= 1);
}

TEST_CASE("embedding") {
    Tensor3 X = load("ex6_7x4x3.json");
    Tensor3 E = embed_default(X);
    CHECK(E.shape() == Shape{8, 4, 3});
    CHECK(E.at(7, 0, 0) == 1);
    CHECK(E.at(7, 1, 0) == 0);
    CHECK(E.at(7, 0, 1) == 0);
    for (long i = 0; i < 7; ++i)
        for (long j = 0; j < 4; ++j)
            for (long k = 0; k < 3; ++k) CHECK(E.at(i, j, k) == X.at(i, j, k));
    CHECK_THROWS_AS(embed(X, {{Rational(1)}}), input_error);
}

TEST_CASE("solution count formulas") {
    CHECK(expected_degree({5, 3, 3}) == 6);
    CHECK(expected_degree({7, 4, 3}) == 10);
    CHECK(expected_degree({9, 5, 3}) == 15);
    CHECK(expected_degree({10, 4, 4}) == 20);
    CHECK(expected_degree({13, 5, 4}) == 35);
    CHECK(expected_degree({16, 6, 4}) == 56);
    CHECK_THROWS_AS(expected_degree({8, 4, 3}), domain_error);

    CHECK(indscal_expected_degree(3) == 4);
    CHECK(indscal_expected_degree(4) == 8);
    CHECK(is_indscal_minimal_shape({4, 3, 3}));
    CHECK(is_indscal_minimal_shape({7, 4, 4}));
    CHECK_FALSE(is_indscal_minimal_shape({5, 3, 3}));

    // fewnomial bound: 2^binom(m,2) (n+1)^m with n equations, m monomials
    CHECK(khovanskii_bound({3, 3, 2}) == BigInt(16384));
    BigInt b533;
    mpz_ui_pow_ui(b533.get_mpz_t(), 7, 12);
    mpz_mul_2exp(b533.get_mpz_t(), b533.get_mpz_t(), 66);
    CHECK(khovanskii_bound({5, 3, 3}) == b533);
}
