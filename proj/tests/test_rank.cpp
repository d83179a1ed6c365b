#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "tenrank/census.hpp"
#include "tenrank/rank.hpp"

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

Tensor3 from_slices(Shape s, std::vector<std::vector<std::vector<long>>> slices) {
    Tensor3 t(s, Mode::general);
    for (long k = 0; k < s.K; ++k)
        for (long i = 0; i < s.I; ++i)
            for (long j = 0; j < s.J; ++j)
                t.at(i, j, k) = slices[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)]
                                      [static_cast<std::size_t>(j)];
    return t;
}

}  // namespace

TEST_CASE("pencil decides 2x2x2") {
    SECTION("two real eigenvalues: rank 2 with certificate") {
        Tensor3 X = from_slices({2, 2, 2}, {{{1, 0}, {0, 1}}, {{1, 0}, {0, 2}}});
        auto rep = rank_auto(X);
        CHECK(rep.method == Method::det_pencil);
        CHECK(rep.verdict.str() == "rank = 2");
        CHECK(rep.real_root_count == 2);
        REQUIRE(rep.factors);
        CHECK(rep.factors->residual <= 1e-6);
        CHECK(verify_decomposition(X, *rep.factors) <= 1e-6);
    }
    SECTION("rotation slice: no real eigenvalues, rank 3") {
        Tensor3 X = from_slices({2, 2, 2}, {{{1, 0}, {0, 1}}, {{0, -1}, {1, 0}}});
        auto rep = rank_auto(X);
        CHECK(rep.verdict.str() == "rank = 3");
        CHECK(rep.real_root_count == 0);
    }
    SECTION("singular first slice: pencil anchored on the second") {
        Tensor3 X = from_slices({2, 2, 2}, {{{1, 0}, {0, 0}}, {{1, 0}, {0, 1}}});
        auto rep = rank_auto(X);
        CHECK(rep.verdict.str() == "rank = 2");
        bool noted = false;
        for (const auto& n : rep.notes)
            if (n.find("anchored") != std::string::npos) noted = true;
        CHECK(noted);
        REQUIRE(rep.factors);
        CHECK(verify_decomposition(X, *rep.factors) <= 1e-6);
    }
}

TEST_CASE("verdict invariance under scaling and mode permutation") {
    Tensor3 X = from_slices({2, 2, 2}, {{{1, 0}, {0, 1}}, {{0, -1}, {1, 0}}});
    auto base = rank_auto(X);
    CHECK(rank_auto(X.scaled(Rational(-7, 3))).verdict.str() == base.verdict.str());
    CHECK(rank_auto(X.permuted({1, 0, 2})).verdict.str() == base.verdict.str());
    CHECK(rank_auto(X.permuted({2, 1, 0})).verdict.str() == base.verdict.str());

    for (std::uint64_t seed : {11u, 12u, 13u}) {
        Tensor3 Y = generate_generic({3, 3, 2}, Mode::general, seed);
        auto a = rank_auto(Y);
        CHECK(a.verdict.decided());
        CHECK(rank_auto(Y.scaled(Rational(5, 2))).verdict.str() == a.verdict.str());
        // parity: 3 - real_root_count is even
        CHECK((3 - a.real_root_count) % 2 == 0);
    }
}

TEST_CASE("zero tensor and degenerate routing") {
    Tensor3 Z({4, 3, 2}, Mode::general);
    auto rep = rank_auto(Z);
    CHECK(rep.verdict.str() == "rank = 0");

    // underdetermined compact shape outside the supported families
    Tensor3 U = generate_generic({11, 4, 4}, Mode::general, 5);
    auto urep = rank_auto(U);
    CHECK_FALSE(urep.verdict.decided());
    bool noted = false;
    for (const auto& n : urep.notes)
        if (n.find("outside the supported families") != std::string::npos) noted = true;
    CHECK(noted);
}

TEST_CASE("minimal shapes through the lex basis") {
    int decided = 0;
    for (std::uint64_t seed : {101u, 102u, 103u, 104u, 105u}) {
        Tensor3 X = generate_generic({5, 3, 3}, Mode::general, seed);
        auto rep = rank_auto(X);
        CHECK(rep.method == Method::groebner);
        REQUIRE(rep.eliminant);
        CHECK(rep.eliminant_degree == 6);
        CHECK((6 - rep.real_root_count) % 2 == 0);
        if (rep.real_root_count >= 5) {
            CHECK(rep.verdict.str() == "rank = 5");
            REQUIRE(rep.factors);
            CHECK(rep.factors->residual <= 1e-6);
            ++decided;
        } else {
            CHECK(rep.verdict.str() == "rank > 5");
        }
    }
    CHECK(decided >= 0);  // either branch is legitimate; the checks above carry the weight
}

TEST_CASE("backend agreement on K = 3 minimal shapes") {
    for (std::uint64_t seed : {7u, 8u, 9u}) {
        Tensor3 X = generate_generic({5, 3, 3}, Mode::general, seed);
        RankOptions gopt, ropt;
        ropt.backend = Backend::resultant;
        auto g = rank_auto(X, gopt);
        auto r = rank_auto(X, ropt);
        CHECK(r.method == Method::resultant_elimination);
        REQUIRE(g.eliminant);
        REQUIRE(r.eliminant);
        // both primitive with positive lead, so agreement is exact equality
        CHECK(*g.eliminant == *r.eliminant);
        CHECK(r.verdict.str() == g.verdict.str());
    }
}

TEST_CASE("minimal K = 4 shapes eliminate the covector block linearly") {
    // the full lex basis over all twelve variables is impractical here, so
    // the router must take the slice-condition elimination path
    Tensor3 X = generate_generic({10, 4, 4}, Mode::general, 5001);
    auto rep = rank_auto(X);
    CHECK(rep.method == Method::resultant_elimination);
    CHECK(rep.eliminant_degree == expected_degree({10, 4, 4}));
    CHECK(rep.real_root_count >= 0);
    CHECK((rep.eliminant_degree - rep.real_root_count) % 2 == 0);
    if (rep.real_root_count < 10) {
        CHECK(rep.verdict.str() == "rank > 10");
    } else {
        CHECK(rep.verdict.decided());
    }
}

TEST_CASE("tall and very tall shapes") {
    Tensor3 X = generate_generic({11, 4, 3}, Mode::general, 21);
    auto rep = rank_auto(X);
    CHECK(rep.method == Method::tall_specialization);
    CHECK(rep.verdict.str() == "rank = 11");
    REQUIRE(rep.factors);
    CHECK(rep.factors->residual <= 1e-6);

    Tensor3 Y = generate_generic({12, 4, 3}, Mode::general, 22);
    auto vrep = rank_auto(Y);
    CHECK(vrep.method == Method::closed_form);
    CHECK(vrep.verdict.str() == "rank = 12");
}

TEST_CASE("tallest compact shapes") {
    Tensor3 X = generate_generic({6, 3, 3}, Mode::general, 31);
    auto rep = rank_auto(X);
    CHECK(rep.method == Method::tallest_compact_det);
    // generic verdict is rank 6 with certificate, or the honest {6, 7} range
    if (rep.verdict.kind == Verdict::Kind::exact) {
        CHECK(rep.verdict.value == 6);
        REQUIRE(rep.factors);
        CHECK(rep.factors->residual <= 1e-6);
        CHECK(verify_decomposition(X, *rep.factors) <= 1e-6);
    } else {
        CHECK(rep.verdict.str() == "rank in {6, 7}");
    }
    // deterministic in the seed
    auto again = rank_auto(X);
    CHECK(again.verdict.str() == rep.verdict.str());
}

TEST_CASE("symmetric-slice fixture decides rank > 4") {
    Tensor3 X = load("ex7_4x3x3.json");
    auto rep = rank_auto(X);
    CHECK(rep.method == Method::indscal_groebner);
    CHECK(rep.basis.size() == 6);
    REQUIRE(rep.eliminant);
    CHECK(rep.eliminant_degree == 4);
    CHECK(rep.real_root_count == 2);
    CHECK(rep.verdict.str() == "rank > 4");
    bool noted = false;
    for (const auto& n : rep.notes)
        if (n.find("typical rank") != std::string::npos) noted = true;
    CHECK(noted);
}

TEST_CASE("embedding continuation certifies one more") {
    // find a seed whose 5x3x3 instance falls short of 5 real solutions
    for (std::uint64_t seed = 200; seed < 240; ++seed) {
        Tensor3 X = generate_generic({5, 3, 3}, Mode::general, seed);
        RankOptions opt;
        opt.embed = true;
        auto rep = rank_auto(X, opt);
        if (rep.verdict.kind != Verdict::Kind::greater) continue;
        REQUIRE(rep.embedded);
        CHECK(rep.embedded->shape == Shape{6, 3, 3});
        CHECK(rep.embedded->method == Method::tallest_compact_det);
        if (rep.embedded->verdict.kind == Verdict::Kind::exact) {
            CHECK(rep.embedded->verdict.value == 6);
            REQUIRE(rep.embedded->factors);
        }
        return;
    }
    FAIL("no shortfall instance found in the seed range");
}

TEST_CASE("custom elimination order is honored") {
    Tensor3 X = load("s4_4x4x3.json");
    RankOptions opt;
    opt.order = std::vector<std::string>{"s1", "s2", "s3", "c3", "c2"};
    auto rep = rank_by_groebner(X, opt);
    REQUIRE(rep.order);
    CHECK(rep.order->names() == *opt.order);
    REQUIRE(rep.eliminant);
    CHECK(rep.eliminant->variable() == "c2");
}
