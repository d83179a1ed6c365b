// Monte-Carlo census of real solution counts: seeded integer tensors, one
// eliminant per trial, histogram of distinct real-root counts and the
// empirical probability of maximal real solvability.
#pragma once

#include <atomic>
#include <cstdio>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "tenrank/rank.hpp"

namespace tenrank {

// Entries uniform over the integers [-99, 99]; symmetric-slice tensors draw
// the upper triangle and mirror it.
inline Tensor3 generate_generic(const Shape& s, Mode mode, std::uint64_t seed) {
    SplitMix64 rng(seed);
    Tensor3 t(s, mode);
    if (mode == Mode::general) {
        for (long i = 0; i < s.I; ++i)
            for (long j = 0; j < s.J; ++j)
                for (long k = 0; k < s.K; ++k) t.at(i, j, k) = Rational(rng.uniform_int(-99, 99));
    } else {
        for (long i = 0; i < s.I; ++i)
            for (long j = 0; j < s.J; ++j)
                for (long k = j; k < s.K; ++k) {
                    Rational v(rng.uniform_int(-99, 99));
                    t.at(i, j, k) = v;
                    t.at(i, k, j) = v;
                }
    }
    return t;
}

struct CensusSpec {
    Shape shape{0, 0, 0};
    Mode mode = Mode::general;
    long trials = 0;
    std::uint64_t seed = 0;
    Backend backend = Backend::groebner;
    int jobs = 1;
};

struct TrialResult {
    int real_roots = -1;
    bool anomaly = false;  // eliminant degenerated: wrong degree or repeated roots
};

struct CensusHistogram {
    Shape shape{0, 0, 0};
    Mode mode = Mode::general;
    long trials = 0;
    std::uint64_t seed = 0;
    long generic_count = 0;   // solution count of a generic instance
    long rank_threshold = 0;  // I
    std::map<int, long> counts;
    long anomalies = 0;

    double fraction(long c) const {
        long n = trials - anomalies;
        return n > 0 ? static_cast<double>(c) / static_cast<double>(n) : 0.0;
    }
    // Pr(rank = I): fraction of non-anomalous trials with at least I real roots
    double pr_rank() const {
        long hit = 0;
        for (const auto& [roots, c] : counts)
            if (roots >= rank_threshold) hit += c;
        return fraction(hit);
    }
};

namespace census_detail {

inline long generic_count_for(const CensusSpec& spec) {
    if (spec.mode == Mode::indscal) return indscal_expected_degree(spec.shape.J);
    Classification cls = classify(spec.shape);
    if (cls.special == Special::square_two_slice) return spec.shape.I;
    return expected_degree(spec.shape);  // throws outside the supported families
}

}  // namespace census_detail

// One trial: build the instance's eliminant and count distinct real roots.
// Trials whose eliminant drops degree or repeats roots are anomalous and
// leave the histogram denominators.
inline TrialResult census_trial(const CensusSpec& spec, const Tensor3& X) {
    TrialResult out;
    const long expected = census_detail::generic_count_for(spec);
    UnivariatePoly p;
    if (spec.mode == Mode::general && classify(spec.shape).special == Special::square_two_slice) {
        Polynomial det = bareiss_det(gamma_matrix(X));
        if (det.is_zero()) {
            out.anomaly = true;
            return out;
        }
        p = UnivariatePoly::from_polynomial(det, 0).primitive();
    } else {
        PolySystem sys = spec.mode == Mode::indscal ? build_indscal_system(X) : build_system(X);
        if (spec.mode == Mode::general && spec.backend == Backend::resultant &&
            spec.shape.K == 3) {
            RankOptions o;
            o.backend = Backend::resultant;
            RankReport r = rank_by_resultant(X, o);
            if (!r.eliminant) {
                out.anomaly = true;
                return out;
            }
            p = *r.eliminant;
        } else {
            auto gb = buchberger(sys.equations, sys.order);
            auto shp = shape_check(gb, sys.order);
            if (!shp.shape_position) {
                out.anomaly = true;
                return out;
            }
            p = UnivariatePoly::from_polynomial(gb[static_cast<std::size_t>(shp.eliminant_index)],
                                                sys.order.least_variable());
        }
    }
    if (p.degree() != expected || !is_squarefree(p)) out.anomaly = true;
    out.real_roots = isolate_real_roots(p).count();
    return out;
}

// Deterministic for a fixed (shape, mode, trials, seed, backend) regardless
// of the number of jobs: each trial derives its own seed from its index and
// results merge in index order.
inline CensusHistogram run_census(const CensusSpec& spec) {
    if (spec.trials < 1) throw input_error("census needs at least one trial");
    CensusHistogram h;
    h.shape = spec.shape;
    h.mode = spec.mode;
    h.trials = spec.trials;
    h.seed = spec.seed;
    h.generic_count = census_detail::generic_count_for(spec);
    h.rank_threshold = spec.shape.I;

    std::vector<TrialResult> results(static_cast<std::size_t>(spec.trials));
    const int jobs = std::max(1, spec.jobs);
    std::atomic<long> next{0};
    auto worker = [&]() {
        for (;;) {
            long t = next.fetch_add(1);
            if (t >= spec.trials) break;
            Tensor3 X = generate_generic(spec.shape, spec.mode,
                                         mix_seed(spec.seed, static_cast<std::uint64_t>(t)));
            results[static_cast<std::size_t>(t)] = census_trial(spec, X);
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    for (const auto& r : results) {
        if (r.anomaly) ++h.anomalies;
        else ++h.counts[r.real_roots];
    }
    return h;
}

inline std::string emit_report(const CensusHistogram& h, const std::string& format) {
    char buf[64];
    if (format == "csv") {
        std::string out = "real_roots,count,fraction\n";
        for (const auto& [roots, c] : h.counts) {
            std::snprintf(buf, sizeof buf, "%d,%ld,%.6f\n", roots, c, h.fraction(c));
            out += buf;
        }
        std::snprintf(buf, sizeof buf, "%.6f", h.pr_rank());
        out += "# shape=" + h.shape.str() + " mode=" + to_string(h.mode) +
               " trials=" + std::to_string(h.trials) + " seed=" + std::to_string(h.seed) +
               " anomalies=" + std::to_string(h.anomalies) +
               " generic_count=" + std::to_string(h.generic_count) + " pr_rank_eq_" +
               std::to_string(h.rank_threshold) + "=" + buf + "\n";
        return out;
    }
    if (format == "json") {
        std::string out = "{\"shape\":\"" + h.shape.str() + "\",\"mode\":\"" + to_string(h.mode) +
                          "\",\"trials\":" + std::to_string(h.trials) +
                          ",\"seed\":" + std::to_string(h.seed) +
                          ",\"anomalies\":" + std::to_string(h.anomalies) +
                          ",\"generic_count\":" + std::to_string(h.generic_count) +
                          ",\"histogram\":[";
        bool first = true;
        for (const auto& [roots, c] : h.counts) {
            if (!first) out += ",";
            first = false;
            std::snprintf(buf, sizeof buf, "%.6f", h.fraction(c));
            out += "{\"real_roots\":" + std::to_string(roots) +
                   ",\"count\":" + std::to_string(c) + ",\"fraction\":" + buf + "}";
        }
        std::snprintf(buf, sizeof buf, "%.6f", h.pr_rank());
        out += "],\"pr_rank_eq_" + std::to_string(h.rank_threshold) + "\":" + buf + "}\n";
        return out;
    }
    throw input_error("unknown report format '" + format + "' (csv or json)");
}

}  // namespace tenrank
