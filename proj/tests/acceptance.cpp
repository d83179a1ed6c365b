// Acceptance gate: ten numbered end-to-end checks against pinned reference
// values, each printed as a single PASS/FAIL line with its measured runtime.
// The process exits nonzero when any criterion fails, so this binary can sit
// directly in the test driver.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "tenrank/census.hpp"
#include "tenrank/rank.hpp"

using namespace tenrank;

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

std::string read_file(const std::string& name) {
    std::ifstream in(std::string(TENRANK_FIXTURE_DIR) + "/" + name);
    if (!in.good()) throw input_error("missing fixture " + name);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Tensor3 load(const std::string& name) { return parse_tensor(read_file(name)); }

// Runs one criterion; `body` returns an empty string on success or the first
// failure it found. `budget` (seconds) is enforced when positive.
void criterion(int number, const std::string& label, double budget,
               const std::function<std::string()>& body) {
    auto t0 = Clock::now();
    std::string fail;
    try {
        fail = body();
    } catch (const std::exception& e) {
        fail = std::string("exception: ") + e.what();
    }
    double dt = std::chrono::duration<double>(Clock::now() - t0).count();
    if (fail.empty() && budget > 0 && dt > budget) {
        std::ostringstream ss;
        ss << "runtime " << dt << "s exceeds the " << budget << "s budget";
        fail = ss.str();
    }
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(1);
    line << "criterion " << number << " [" << label << "]: "
         << (fail.empty() ? "PASS" : "FAIL — " + fail) << " (" << dt << "s)";
    std::cout << line.str() << std::endl;
    if (!fail.empty()) ++failures;
}

// All pinned roots are distinct real roots in ascending order; the report
// lists them the same way, so compare positionally.
std::string check_roots(const std::vector<Rational>& got, std::vector<double> want, double tol) {
    if (got.size() != want.size())
        return "expected " + std::to_string(want.size()) + " real roots, got " +
               std::to_string(got.size());
    std::sort(want.begin(), want.end());
    for (std::size_t i = 0; i < got.size(); ++i) {
        double g = got[i].get_d();
        if (std::fabs(g - want[i]) > tol) {
            std::ostringstream ss;
            ss << "root " << i << " = " << g << " is not within " << tol << " of " << want[i];
            return ss.str();
        }
    }
    return "";
}

std::string check_verdict(const RankReport& rep, const std::string& want) {
    if (rep.verdict.str() != want)
        return "verdict \"" + rep.verdict.str() + "\", expected \"" + want + "\"";
    return "";
}

// --- criterion 9 helpers: an S-polynomial oracle independent of the basis
// construction itself.

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

std::string check_parity(const CensusHistogram& h) {
    for (const auto& [roots, c] : h.counts)
        if ((roots - h.generic_count) % 2 != 0)
            return "count " + std::to_string(roots) + " breaks parity with the generic count " +
                   std::to_string(h.generic_count);
    return "";
}

}  // namespace

int main() {
    std::cout.setf(std::ios::unitbuf);  // stream results as they appear

    // printed quartic eliminant of the 4x4x3 example, integer-primitive form
    const UnivariatePoly kQuartic =
        parse_univariate("3934656*c2^4-10091484*c2^3+1855673*c2^2+1131869*c2-266104");
    // printed bivariate determinant condition of its 8x4x3 extension
    const std::string kEmbeddedDet =
        "111296195967997*c2^4-163212875913821*c2^3-288078435761246*c2^3*c3"
        "+188384423078426*c2^2+139757151961919*c2^2*c3-123835533958927*c2^2*c3^2"
        "+3188520736473*c2+1745777654358*c2*c3+145702375007129*c2*c3^2"
        "+154156258186696*c2*c3^3-30068441704134*c3-78231890782721*c3^2"
        "-9292669314727*c3^3+24148992371016*c3^4";

    CensusHistogram pencil_census;   // filled by criterion 7
    CensusHistogram minimal_census;  // filled by criterion 8

    criterion(1, "4x4x3 pinned quartic and rank 4", 10.0, [&] {
        Tensor3 X = load("s4_4x4x3.json");
        PolySystem sys = build_system(X);
        auto gb = buchberger(sys.equations, sys.order);
        auto shp = shape_check(gb, sys.order);
        if (!shp.shape_position) return std::string("lex basis not in shape position");
        UnivariatePoly elim =
            UnivariatePoly::from_polynomial(gb[static_cast<std::size_t>(shp.eliminant_index)],
                                            sys.order.least_variable());
        if (elim.monic() != kQuartic.monic())
            return std::string("eliminant is not a rational multiple of the pinned quartic");
        RankReport rep = rank_auto(X);
        if (auto e = check_verdict(rep, "rank = 4"); !e.empty()) return e;
        return check_roots(rep.roots, {-0.3369565217, 0.2929292929, 0.2962962963, 2.3125}, 1e-6);
    });

    criterion(2, "7x4x3 degree 10, four real roots", 300.0, [&] {
        RankReport rep = rank_auto(load("ex6_7x4x3.json"));
        if (rep.eliminant_degree != 10)
            return "eliminant degree " + std::to_string(rep.eliminant_degree) + ", expected 10";
        if (auto e = check_verdict(rep, "rank > 7"); !e.empty()) return e;
        return check_roots(rep.roots,
                           {-1.871987136, -0.3332612900, -0.2556946431, 0.2733107997}, 1e-6);
    });

    criterion(3, "8x4x3 extension determinant and decomposition", 60.0, [&] {
        Tensor3 Xe = embed_default(load("ex6_7x4x3.json"));
        PolyMatrix G = gamma_matrix(Xe);
        Polynomial det = bareiss_det(G);
        auto reg = G.registry();
        VarOrder ord = VarOrder::natural(reg);
        Polynomial want = parse_polynomial(kEmbeddedDet, reg);
        Polynomial prim = det.primitive_part(ord);
        if (prim != want && prim != want * Rational(-1))
            return std::string(
                "determinant of the slice-condition matrix differs from the pinned quartic");
        RankOptions opt;
        opt.precision_bits = 128;
        RankReport rep = rank_auto(Xe, opt);
        if (!rep.factors) return std::string("no decomposition extracted");
        if (rep.factors->precision_bits < 128)
            return std::string("certificate precision below 128 bits");
        if (rep.factors->residual > 1e-6) {
            std::ostringstream ss;
            ss << "reconstruction residual " << rep.factors->residual << " exceeds 1e-6";
            return ss.str();
        }
        return std::string();
    });

    criterion(4, "4x3x3 symmetric slices, two real roots", 30.0, [&] {
        RankOptions opt;
        // elimination order with the s-block least, matching the pinned roots
        opt.order = std::vector<std::string>{"b1", "b2", "s1", "s2", "s3", "s4"};
        RankReport rep = rank_auto(load("ex7_4x3x3.json"), opt);
        if (rep.basis.size() != 6)
            return "basis has " + std::to_string(rep.basis.size()) + " polynomials, expected 6";
        if (rep.eliminant_degree != 4)
            return "eliminant degree " + std::to_string(rep.eliminant_degree) + ", expected 4";
        if (auto e = check_verdict(rep, "rank > 4"); !e.empty()) return e;
        return check_roots(rep.roots, {-0.001881015674, 0.07632125093}, 1e-9);
    });

    criterion(5, "7x4x4 symmetric slices, two real roots", 600.0, [&] {
        RankReport rep = rank_auto(load("ex8_7x4x4.json"));
        if (rep.eliminant_degree != 8)
            return "eliminant degree " + std::to_string(rep.eliminant_degree) + ", expected 8";
        if (auto e = check_verdict(rep, "rank > 7"); !e.empty()) return e;
        return check_roots(rep.roots, {-4.615952848, 1.035693119}, 1e-6);
    });

    criterion(6, "degree formula sweep and observed census degrees", 0.0, [&] {
        const std::vector<std::pair<Shape, long>> pins = {
            {{5, 3, 3}, 6},  {{7, 4, 3}, 10}, {{9, 5, 3}, 15},
            {{10, 4, 4}, 20}, {{13, 5, 4}, 35}, {{16, 6, 4}, 56}};
        for (const auto& [s, d] : pins)
            if (expected_degree(s) != d)
                return "expected_degree(" + s.str() + ") != " + std::to_string(d);
        // anomaly flagging rejects any trial whose eliminant degree differs
        // from the generic count, so zero anomalies certifies the degree on
        // every trial
        for (Shape s : {Shape{5, 3, 3}, Shape{7, 4, 3}}) {
            CensusSpec spec{s, Mode::general, 50, 424242, Backend::groebner, 1};
            CensusHistogram h = run_census(spec);
            if (h.anomalies != 0)
                return s.str() + " census hit " + std::to_string(h.anomalies) +
                       " anomalous trials out of 50";
        }
        return std::string();
    });

    criterion(7, "3x3x2 census, Pr(3 real roots) = 0.4824 +/- 0.05", 30.0, [&] {
        CensusSpec spec{{3, 3, 2}, Mode::general, 1000, 20090817, Backend::groebner, 1};
        pencil_census = run_census(spec);
        for (const auto& [roots, c] : pencil_census.counts)
            if (roots != 1 && roots != 3)
                return "observed " + std::to_string(roots) + " real roots; only 1 or 3 can occur";
        double pr = pencil_census.pr_rank();
        if (std::fabs(pr - 0.4824) > 0.05) {
            std::ostringstream ss;
            ss << "Pr(3 real roots) = " << pr << " is not within 0.05 of 0.4824";
            return ss.str();
        }
        return std::string();
    });

    criterion(8, "5x3x3 census, Pr(6 real roots) = 0.068 +/- 0.05", 1800.0, [&] {
        CensusSpec spec{{5, 3, 3}, Mode::general, 200, 20090817, Backend::groebner, 1};
        minimal_census = run_census(spec);
        for (const auto& [roots, c] : minimal_census.counts)
            if (roots != 0 && roots != 2 && roots != 4 && roots != 6)
                return "observed " + std::to_string(roots) +
                       " real roots; only 0, 2, 4, 6 can occur";
        auto it = minimal_census.counts.find(6);
        double pr = minimal_census.fraction(it == minimal_census.counts.end() ? 0 : it->second);
        if (std::fabs(pr - 0.068) > 0.05) {
            std::ostringstream ss;
            ss << "Pr(6 real roots) = " << pr << " is not within 0.05 of 0.068";
            return ss.str();
        }
        return std::string();
    });

    criterion(9, "property suites", 0.0, [&] {
        // basis construction vs the S-polynomial criterion on random square
        // quadratic systems (zero-dimensional with probability one)
        {
            std::mt19937_64 rng(424243);
            std::uniform_int_distribution<int> coeff(-5, 5);
            std::uniform_int_distribution<int> nvars_dist(2, 4);
            const std::vector<std::string> names = {"w", "x", "y", "z"};
            for (int trial = 0; trial < 100; ++trial) {
                int nv = nvars_dist(rng);
                auto r = make_registry(std::vector<std::string>(names.begin(), names.begin() + nv));
                VarOrder order = VarOrder::natural(r);
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
                std::vector<Polynomial> F;
                for (int k = 0; k < nv; ++k) {
                    Polynomial p = Polynomial::zero(r);
                    for (const auto& m : monos) p.add_term(m, Rational(coeff(rng)));
                    F.push_back(p);
                }
                if (!is_groebner_basis_of(buchberger(F, order), F, order))
                    return "basis check failed on random quadratic system " + std::to_string(trial);
            }
        }
        // whole-line Sturm count vs the interval isolator
        {
            std::mt19937_64 rng(424244);
            std::uniform_int_distribution<int> coeff(-9, 9);
            std::uniform_int_distribution<int> deg_dist(1, 12);
            for (int trial = 0; trial < 200; ++trial) {
                int d = deg_dist(rng);
                std::vector<Rational> c(static_cast<std::size_t>(d) + 1);
                for (auto& x : c) x = coeff(rng);
                if (c.back() == 0) c.back() = 1;
                UnivariatePoly p("x", c);
                UnivariatePoly q = squarefree_part(p);
                if (sturm_count(q) != isolate_real_roots(q).count())
                    return "Sturm/isolation mismatch on random polynomial " + std::to_string(trial);
            }
        }
        // fraction-free determinant vs cofactor expansion
        {
            std::mt19937_64 rng(424245);
            std::uniform_int_distribution<int> coeff(-4, 4);
            auto reg = make_registry({"c2", "c3"});
            for (int trial = 0; trial < 25; ++trial) {
                std::size_t n = 1 + static_cast<std::size_t>(trial % 4);
                PolyMatrix M(n, n, reg);
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j) {
                        Polynomial p = Polynomial::constant(reg, coeff(rng));
                        p = p + Polynomial::variable(reg, 0) * Rational(coeff(rng));
                        p = p + Polynomial::variable(reg, 1) * Rational(coeff(rng));
                        M.at(i, j) = p;
                    }
                if (bareiss_det(M) != cofactor_det(M))
                    return "determinant mismatch on random matrix " + std::to_string(trial);
            }
        }
        // parity invariant on every census trial recorded above, plus a
        // symmetric-slice census
        if (auto e = check_parity(pencil_census); !e.empty()) return "3x3x2 census: " + e;
        if (auto e = check_parity(minimal_census); !e.empty()) return "5x3x3 census: " + e;
        {
            CensusSpec spec{{4, 3, 3}, Mode::indscal, 25, 424246, Backend::groebner, 1};
            if (auto e = check_parity(run_census(spec)); !e.empty())
                return "4x3x3 symmetric census: " + e;
        }
        // verdict invariance under scaling on every fixture, and under the
        // recorded mode permutation on the general-mode fixtures
        for (const std::string name :
             {"s4_4x4x3.json", "ex6_7x4x3.json", "ex7_4x3x3.json", "ex8_7x4x4.json"}) {
            Tensor3 X = load(name);
            RankReport base = rank_auto(X);
            if (rank_auto(X.scaled(Rational(-7, 3))).verdict.str() != base.verdict.str())
                return name + ": verdict changed under scaling";
            if (X.mode() == Mode::general) {
                if (rank_auto(X.permuted({0, 2, 1})).verdict.str() != base.verdict.str())
                    return name + ": verdict changed under mode permutation";
            }
        }
        return std::string();
    });

    criterion(10, "single generic draws of 9x5x3 and 10x4x4", 0.0, [&] {
        const std::vector<std::pair<Shape, long>> pins = {{{9, 5, 3}, 15}, {{10, 4, 4}, 20}};
        for (const auto& [s, d] : pins) {
            Tensor3 X = generate_generic(s, Mode::general, 20090817);
            RankReport rep = rank_auto(X);
            if (rep.eliminant_degree != d)
                return s.str() + ": eliminant degree " + std::to_string(rep.eliminant_degree) +
                       ", expected " + std::to_string(d);
            if (rep.real_root_count < 0 || rep.real_root_count > d ||
                (d - rep.real_root_count) % 2 != 0)
                return s.str() + ": real-root count " + std::to_string(rep.real_root_count) +
                       " is not parity-consistent with degree " + std::to_string(d);
        }
        return std::string();
    });

    if (failures) {
        std::cout << failures << " criterion(s) failed" << std::endl;
        return 1;
    }
    std::cout << "all criteria passed" << std::endl;
    return 0;
}
