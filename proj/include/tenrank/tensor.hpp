// Order-3 tensors with exact rational entries, shape classification and the
// JSON interchange format.
#pragma once

#include <algorithm>
#include <array>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "tenrank/rational.hpp"

namespace tenrank {

struct Shape {
    long I = 0, J = 0, K = 0;

    bool operator==(const Shape&) const = default;
    std::string str() const {
        return std::to_string(I) + "x" + std::to_string(J) + "x" + std::to_string(K);
    }
};

// "IxJxK"
inline Shape parse_shape(const std::string& text) {
    Shape s;
    char x1 = 0, x2 = 0;
    std::istringstream in(text);
    if (!(in >> s.I >> x1 >> s.J >> x2 >> s.K) || (x1 != 'x' && x1 != 'X') ||
        (x2 != 'x' && x2 != 'X') || !(in >> std::ws).eof() || s.I < 1 || s.J < 1 || s.K < 1)
        throw input_error("invalid shape literal '" + text + "', expected IxJxK");
    return s;
}

enum class Mode { general, indscal };

inline std::string to_string(Mode m) { return m == Mode::general ? "general" : "indscal"; }

class Tensor3 {
public:
    Tensor3(Shape shape, Mode mode)
        : shape_(shape), mode_(mode),
          e_(static_cast<std::size_t>(shape.I * shape.J * shape.K), Rational(0)) {
        if (shape.I < 1 || shape.J < 1 || shape.K < 1)
            throw input_error("tensor dimensions must be positive");
        if (mode == Mode::indscal && shape.J != shape.K)
            throw input_error("symmetric-slice tensors require J = K, got " + shape.str());
    }

    const Shape& shape() const { return shape_; }
    Mode mode() const { return mode_; }
    long I() const { return shape_.I; }
    long J() const { return shape_.J; }
    long K() const { return shape_.K; }

    const Rational& at(long i, long j, long k) const { return e_[index(i, j, k)]; }
    Rational& at(long i, long j, long k) { return e_[index(i, j, k)]; }

    // kth frontal slice, I x J
    std::vector<std::vector<Rational>> slice(long k) const {
        check_range(k, shape_.K, "slice");
        std::vector<std::vector<Rational>> m(static_cast<std::size_t>(shape_.I));
        for (long i = 0; i < shape_.I; ++i) {
            m[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(shape_.J));
            for (long j = 0; j < shape_.J; ++j)
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = at(i, j, k);
        }
        return m;
    }

    // ith horizontal slice, J x K (the symmetric slices of the indscal model)
    std::vector<std::vector<Rational>> row_slice(long i) const {
        check_range(i, shape_.I, "row slice");
        std::vector<std::vector<Rational>> m(static_cast<std::size_t>(shape_.J));
        for (long j = 0; j < shape_.J; ++j) {
            m[static_cast<std::size_t>(j)].resize(static_cast<std::size_t>(shape_.K));
            for (long k = 0; k < shape_.K; ++k)
                m[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] = at(i, j, k);
        }
        return m;
    }

    // throws naming the first offending entry
    void validate_symmetry() const {
        if (mode_ != Mode::indscal) return;
        for (long i = 0; i < shape_.I; ++i)
            for (long j = 0; j < shape_.J; ++j)
                for (long k = j + 1; k < shape_.K; ++k)
                    if (at(i, j, k) != at(i, k, j))
                        throw input_error("slice " + std::to_string(i + 1) +
                                          " is not symmetric: entry (" + std::to_string(j + 1) +
                                          "," + std::to_string(k + 1) + ") != (" +
                                          std::to_string(k + 1) + "," + std::to_string(j + 1) +
                                          ")");
    }

    Tensor3 scaled(const Rational& a) const {
        Tensor3 r = *this;
        for (auto& x : r.e_) x *= a;
        return r;
    }

    // exchanges frontal slices k1 and k2
    Tensor3 with_slices_swapped(long k1, long k2) const {
        check_range(k1, shape_.K, "slice");
        check_range(k2, shape_.K, "slice");
        Tensor3 r = *this;
        for (long i = 0; i < shape_.I; ++i)
            for (long j = 0; j < shape_.J; ++j) std::swap(r.at(i, j, k1), r.at(i, j, k2));
        return r;
    }

    // permutation of modes: perm[d] tells which original mode supplies the
    // d-th mode of the result
    Tensor3 permuted(const std::array<int, 3>& perm) const {
        long dims[3] = {shape_.I, shape_.J, shape_.K};
        Shape ns{dims[perm[0]], dims[perm[1]], dims[perm[2]]};
        Tensor3 r(ns, Mode::general);
        long idx[3];
        for (long i = 0; i < shape_.I; ++i)
            for (long j = 0; j < shape_.J; ++j)
                for (long k = 0; k < shape_.K; ++k) {
                    long src[3] = {i, j, k};
                    for (int d = 0; d < 3; ++d) idx[d] = src[perm[static_cast<std::size_t>(d)]];
                    r.at(idx[0], idx[1], idx[2]) = at(i, j, k);
                }
        return r;
    }

    bool operator==(const Tensor3& o) const {
        return shape_ == o.shape_ && mode_ == o.mode_ && e_ == o.e_;
    }

private:
    std::size_t index(long i, long j, long k) const {
        check_range(i, shape_.I, "first index");
        check_range(j, shape_.J, "second index");
        check_range(k, shape_.K, "third index");
        return static_cast<std::size_t>((i * shape_.J + j) * shape_.K + k);
    }
    static void check_range(long v, long n, const char* what) {
        if (v < 0 || v >= n)
            throw input_error(std::string(what) + " " + std::to_string(v) + " out of range [0," +
                              std::to_string(n) + ")");
    }

    Shape shape_;
    Mode mode_;
    std::vector<Rational> e_;
};

// ---------------------------------------------------------------------------
// Shape classification.

enum class Tallness { very_tall, tall, compact };
enum class Regime { minimal, underdetermined, overdetermined };
enum class Special { square_two_slice, tallest_compact, none };

inline std::string to_string(Tallness t) {
    switch (t) {
        case Tallness::very_tall: return "very_tall";
        case Tallness::tall: return "tall";
        default: return "compact";
    }
}
inline std::string to_string(Regime r) {
    switch (r) {
        case Regime::minimal: return "minimal";
        case Regime::underdetermined: return "underdetermined";
        default: return "overdetermined";
    }
}
inline std::string to_string(Special s) {
    switch (s) {
        case Special::square_two_slice: return "square_two_slice";
        case Special::tallest_compact: return "tallest_compact";
        default: return "none";
    }
}

struct Classification {
    Tallness tallness = Tallness::compact;
    Regime regime = Regime::minimal;
    Special special = Special::none;
    long neq = 0, df = 0, nbil = 0;
};

// requires 2 <= K <= J <= I; rank work on unordered shapes goes through a
// mode permutation first
inline Classification classify(const Shape& s) {
    if (s.K < 2 || s.K > s.J || s.J > s.I) {
        // name the permutation that sorts the dimensions descending
        std::array<std::pair<long, char>, 3> d{{{s.I, 'I'}, {s.J, 'J'}, {s.K, 'K'}}};
        std::stable_sort(d.begin(), d.end(),
                         [](const auto& a, const auto& b) { return a.first > b.first; });
        std::string perm{d[0].second, d[1].second, d[2].second};
        throw input_error("shape " + s.str() + " must satisfy 2 <= K <= J <= I; permute modes to (" +
                          perm + ")");
    }
    Classification c;
    c.neq = (s.K - 1) * s.J;
    c.df = (s.I - 1) + (s.K - 1);
    c.nbil = s.K - 1;
    if (s.I >= s.K * s.J) c.tallness = Tallness::very_tall;
    else if (s.I > s.K * s.J - s.J) c.tallness = Tallness::tall;
    else c.tallness = Tallness::compact;
    if (c.neq == c.df) c.regime = Regime::minimal;
    else if (c.df > c.neq) c.regime = Regime::underdetermined;
    else c.regime = Regime::overdetermined;
    if (s.I == s.J && s.K == 2) c.special = Special::square_two_slice;
    else if (s.I == s.J * (s.K - 1) && s.K >= 3) c.special = Special::tallest_compact;
    return c;
}

// ---------------------------------------------------------------------------
// JSON interchange.
// {"shape":[I,J,K],"mode":"general"|"indscal","entries":"integer"|"rational",
//  "slices":[K matrices, each I rows x J cols]}

inline Tensor3 parse_tensor(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw input_error(std::string("tensor JSON: ") + e.what());
    }
    try {
        if (!doc.contains("shape") || !doc["shape"].is_array() || doc["shape"].size() != 3)
            throw input_error("tensor JSON: \"shape\" must be [I,J,K]");
        Shape s{doc["shape"][0].get<long>(), doc["shape"][1].get<long>(),
                doc["shape"][2].get<long>()};
        Mode mode = Mode::general;
        if (doc.contains("mode")) {
            std::string m = doc["mode"].get<std::string>();
            if (m == "indscal") mode = Mode::indscal;
            else if (m != "general") throw input_error("tensor JSON: unknown mode \"" + m + "\"");
        }
        Tensor3 t(s, mode);
        if (!doc.contains("slices") || !doc["slices"].is_array() ||
            doc["slices"].size() != static_cast<std::size_t>(s.K))
            throw input_error("tensor JSON: \"slices\" must hold K matrices");
        for (long k = 0; k < s.K; ++k) {
            const auto& sl = doc["slices"][static_cast<std::size_t>(k)];
            if (!sl.is_array() || sl.size() != static_cast<std::size_t>(s.I))
                throw input_error("tensor JSON: slice " + std::to_string(k + 1) + " must have " +
                                  std::to_string(s.I) + " rows");
            for (long i = 0; i < s.I; ++i) {
                const auto& row = sl[static_cast<std::size_t>(i)];
                if (!row.is_array() || row.size() != static_cast<std::size_t>(s.J))
                    throw input_error("tensor JSON: slice " + std::to_string(k + 1) + " row " +
                                      std::to_string(i + 1) + " must have " + std::to_string(s.J) +
                                      " entries");
                for (long j = 0; j < s.J; ++j) {
                    const auto& v = row[static_cast<std::size_t>(j)];
                    if (v.is_number_integer()) {
                        t.at(i, j, k) = Rational(static_cast<long>(v.get<long long>()));
                    } else if (v.is_string()) {
                        t.at(i, j, k) = parse_rational(v.get<std::string>());
                    } else {
                        throw input_error("tensor JSON: slice " + std::to_string(k + 1) + " entry (" +
                                          std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                          ") must be an integer or a \"p/q\" string");
                    }
                }
            }
        }
        t.validate_symmetry();
        return t;
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("tensor JSON: ") + e.what());
    }
}

inline std::string print_tensor(const Tensor3& t) {
    nlohmann::json doc;
    doc["shape"] = {t.I(), t.J(), t.K()};
    doc["mode"] = to_string(t.mode());
    bool all_int = true;
    for (long k = 0; k < t.K() && all_int; ++k)
        for (long i = 0; i < t.I() && all_int; ++i)
            for (long j = 0; j < t.J() && all_int; ++j)
                if (t.at(i, j, k).get_den() != 1 || !t.at(i, j, k).get_num().fits_slong_p())
                    all_int = false;
    doc["entries"] = all_int ? "integer" : "rational";
    nlohmann::json slices = nlohmann::json::array();
    for (long k = 0; k < t.K(); ++k) {
        nlohmann::json sl = nlohmann::json::array();
        for (long i = 0; i < t.I(); ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (long j = 0; j < t.J(); ++j) {
                const Rational& v = t.at(i, j, k);
                if (all_int) row.push_back(static_cast<long>(v.get_num().get_si()));
                else row.push_back(to_string(v));
            }
            sl.push_back(std::move(row));
        }
        slices.push_back(std::move(sl));
    }
    doc["slices"] = std::move(slices);
    return doc.dump(2);
}

}  // namespace tenrank
