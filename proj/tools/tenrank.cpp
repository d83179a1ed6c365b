// Command line front end: classify | rank | groebner | roots | decompose |
// census | degree. Structured output (JSON or CSV) goes to stdout, prose to
// stderr. Exit codes: 0 decided, 1 undecided, 2 input error, 3 internal.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "tenrank/census.hpp"
#include "tenrank/rank.hpp"

using namespace tenrank;
using ordered_json = nlohmann::ordered_json;

namespace {

std::string read_input(const std::string& path) {
    std::ostringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in.good()) throw input_error("cannot open '" + path + "'");
        ss << in.rdbuf();
    }
    return ss.str();
}

std::vector<std::string> split_names(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::string mpf_string(const mpf_class& f, int digits = 30) {
    if (sgn(f) == 0) return "0";
    mp_exp_t exp;
    std::string mant = f.get_str(exp, 10, static_cast<std::size_t>(digits));
    bool neg = !mant.empty() && mant[0] == '-';
    if (neg) mant = mant.substr(1);
    std::string s = (neg ? "-0." : "0.") + mant + "e" + std::to_string(exp);
    return s;
}

ordered_json matrix_json(const MpfMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (const auto& r : m) {
        ordered_json row = ordered_json::array();
        for (const auto& v : r) row.push_back(mpf_string(v));
        rows.push_back(row);
    }
    return rows;
}

ordered_json roots_json(const std::vector<Rational>& roots) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : roots) {
        ordered_json e;
        e["value"] = to_string(r);
        e["decimal"] = decimal_string(r);
        arr.push_back(e);
    }
    return arr;
}

ordered_json classification_json(const Classification& c) {
    ordered_json j;
    j["tallness"] = to_string(c.tallness);
    j["regime"] = to_string(c.regime);
    j["special"] = to_string(c.special);
    j["equations"] = c.neq;
    j["degrees_of_freedom"] = c.df;
    j["bilinear_blocks"] = c.nbil;
    return j;
}

ordered_json report_json(const RankReport& rep) {
    ordered_json j;
    j["shape"] = rep.shape.str();
    j["mode"] = to_string(rep.mode);
    j["method"] = to_string(rep.method);
    j["verdict"] = rep.verdict.str();
    if (rep.mode == Mode::general) j["classification"] = classification_json(rep.cls);
    if (rep.order) j["order"] = rep.order->names();
    if (rep.eliminant) {
        j["eliminant"] = rep.eliminant->str();
        j["eliminant_degree"] = rep.eliminant_degree;
    }
    if (rep.real_root_count >= 0) j["real_root_count"] = rep.real_root_count;
    if (!rep.roots.empty()) j["roots"] = roots_json(rep.roots);
    j["basis_ok"] = rep.basis_ok;
    if (rep.factors) {
        j["residual"] = rank_detail::fmt(rep.factors->residual);
        j["precision_bits"] = rep.factors->precision_bits;
    }
    if (!rep.notes.empty()) j["notes"] = rep.notes;
    if (rep.embedded) j["embedded"] = report_json(*rep.embedded);
    return j;
}

struct CommonOpts {
    std::string input;
    std::string backend = "groebner";
    std::uint64_t seed = 0;
    long precision = 0;  // 0: env default
    double tolerance = 1e-6;
    bool embed = false;
    std::string order;
    std::string format = "json";
};

RankOptions to_rank_options(const CommonOpts& o) {
    RankOptions r;
    if (o.backend == "resultant") r.backend = Backend::resultant;
    else if (o.backend != "groebner") throw input_error("unknown backend '" + o.backend + "'");
    r.seed = o.seed;
    long prec = o.precision;
    if (prec == 0) {
        if (const char* env = std::getenv("TENRANK_PRECISION_BITS")) {
            char* end = nullptr;
            prec = std::strtol(env, &end, 10);
            if (!end || *end != '\0' || prec < 1)
                throw input_error("TENRANK_PRECISION_BITS must be a positive integer");
        } else {
            prec = 256;
        }
    }
    if (prec < 64) throw input_error("precision must be at least 64 bits");
    r.precision_bits = prec;
    r.tolerance = o.tolerance;
    r.embed = o.embed;
    if (!o.order.empty()) r.order = split_names(o.order);
    return r;
}

void add_rank_flags(CLI::App* cmd, CommonOpts& o, bool with_input = true) {
    if (with_input) cmd->add_option("input", o.input, "tensor JSON file, or - for stdin")->required();
    cmd->add_option("--backend", o.backend, "groebner or resultant");
    cmd->add_option("--seed", o.seed, "seed for randomized specializations");
    cmd->add_option("--precision", o.precision, "certificate precision in bits");
    cmd->add_option("--tolerance", o.tolerance, "decomposition residual tolerance");
    cmd->add_flag("--embed", o.embed, "retry once on the row-extended tensor after a rank > I verdict");
    cmd->add_option("--order", o.order, "comma separated elimination order, greatest first");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"real tensor rank decision tool"};
    app.require_subcommand(1);

    std::string shape_str, mode_str = "general";
    CommonOpts opt;
    long trials = 100;
    int jobs = 1;
    std::string poly_str;

    auto* c_classify = app.add_subcommand("classify", "classify a shape IxJxK");
    c_classify->add_option("shape", shape_str, "shape as IxJxK")->required();

    auto* c_rank = app.add_subcommand("rank", "decide the rank of a tensor");
    add_rank_flags(c_rank, opt);

    auto* c_groebner = app.add_subcommand("groebner", "print the reduced lex basis of the slice system");
    add_rank_flags(c_groebner, opt);

    auto* c_roots = app.add_subcommand("roots", "isolate the real roots of the eliminant");
    c_roots->add_option("input", opt.input, "tensor JSON file, or - for stdin");
    c_roots->add_option("--poly", poly_str, "univariate polynomial instead of a tensor");
    c_roots->add_option("--backend", opt.backend, "groebner or resultant");
    c_roots->add_option("--seed", opt.seed, "seed for randomized specializations");
    c_roots->add_option("--order", opt.order, "comma separated elimination order, greatest first");

    auto* c_decompose = app.add_subcommand("decompose", "emit the certified decomposition");
    add_rank_flags(c_decompose, opt);

    auto* c_census = app.add_subcommand("census", "Monte-Carlo census of real solution counts");
    c_census->add_option("--shape", shape_str, "shape as IxJxK")->required();
    c_census->add_option("--mode", mode_str, "general or indscal");
    c_census->add_option("--trials", trials, "number of trials");
    c_census->add_option("--seed", opt.seed, "master seed");
    c_census->add_option("--jobs", jobs, "worker threads (results are job-count independent)");
    c_census->add_option("--backend", opt.backend, "groebner or resultant");
    c_census->add_option("--format", opt.format, "csv or json");

    auto* c_degree = app.add_subcommand("degree", "generic solution count and fewnomial bound");
    c_degree->add_option("shape", shape_str, "shape as IxJxK")->required();
    c_degree->add_option("--mode", mode_str, "general or indscal");

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_classify->parsed()) {
            Shape s = parse_shape(shape_str);
            Classification c = classify(s);
            ordered_json j;
            j["shape"] = s.str();
            j["classification"] = classification_json(c);
            j["minimal"] = is_minimal_shape(s);
            if (is_minimal_shape(s)) j["generic_solution_count"] = expected_degree(s);
            j["khovanskii_bound"] = khovanskii_bound(s).get_str();
            std::cout << j.dump(2) << "\n";
            return 0;
        }
        if (c_rank->parsed() || c_decompose->parsed()) {
            Tensor3 X = parse_tensor(read_input(opt.input));
            RankReport rep = rank_auto(X, to_rank_options(opt));
            if (c_decompose->parsed()) {
                if (!rep.factors) {
                    std::cerr << "no certified decomposition: " << rep.verdict.str() << "\n";
                    for (const auto& n : rep.notes) std::cerr << "note: " << n << "\n";
                    return 1;
                }
                ordered_json j;
                j["shape"] = rep.shape.str();
                j["verdict"] = rep.verdict.str();
                j["residual"] = rank_detail::fmt(rep.factors->residual);
                j["precision_bits"] = rep.factors->precision_bits;
                j["A"] = matrix_json(rep.factors->A);
                j["B"] = matrix_json(rep.factors->B);
                j["C"] = matrix_json(rep.factors->C);
                std::cout << j.dump(2) << "\n";
                return 0;
            }
            std::cout << report_json(rep).dump(2) << "\n";
            return rep.verdict.decided() ? 0 : 1;
        }
        if (c_groebner->parsed()) {
            Tensor3 X = parse_tensor(read_input(opt.input));
            RankOptions ro = to_rank_options(opt);
            PolySystem sys = X.mode() == Mode::indscal ? build_indscal_system(X) : build_system(X);
            if (ro.order) sys.order = VarOrder::from_names(sys.order.registry(), *ro.order);
            auto gb = primitive_basis(buchberger(sys.equations, sys.order), sys.order);
            auto shp = shape_check(gb, sys.order);
            ordered_json j;
            j["shape"] = X.shape().str();
            j["mode"] = to_string(X.mode());
            j["normalization"] = sys.normalization;
            j["order"] = sys.order.names();
            ordered_json basis = ordered_json::array();
            for (const auto& g : gb) basis.push_back(to_string(g, sys.order));
            j["basis"] = basis;
            j["shape_position"] = shp.shape_position;
            if (shp.shape_position) {
                j["eliminant_index"] = shp.eliminant_index;
                j["eliminant_degree"] = shp.eliminant_degree;
            } else if (!shp.note.empty()) {
                j["note"] = shp.note;
            }
            std::cout << j.dump(2) << "\n";
            return 0;
        }
        if (c_roots->parsed()) {
            UnivariatePoly p;
            if (!poly_str.empty()) {
                p = parse_univariate(poly_str);
            } else if (!opt.input.empty()) {
                Tensor3 X = parse_tensor(read_input(opt.input));
                RankReport rep = rank_auto(X, to_rank_options(opt));
                if (!rep.eliminant) {
                    std::cerr << "no eliminant for this input\n";
                    for (const auto& n : rep.notes) std::cerr << "note: " << n << "\n";
                    return 1;
                }
                p = *rep.eliminant;
            } else {
                throw input_error("roots needs a tensor input or --poly");
            }
            ordered_json j;
            j["polynomial"] = p.str();
            j["degree"] = p.degree();
            j["squarefree"] = is_squarefree(p);
            j["real_root_count"] = isolate_real_roots(p).count();
            j["roots"] = roots_json(rank_detail::refined_roots(p, 64));
            std::cout << j.dump(2) << "\n";
            return 0;
        }
        if (c_census->parsed()) {
            CensusSpec spec;
            spec.shape = parse_shape(shape_str);
            if (mode_str == "indscal") spec.mode = Mode::indscal;
            else if (mode_str != "general") throw input_error("unknown mode '" + mode_str + "'");
            spec.trials = trials;
            spec.seed = opt.seed;
            spec.jobs = jobs;
            if (opt.backend == "resultant") spec.backend = Backend::resultant;
            else if (opt.backend != "groebner") throw input_error("unknown backend '" + opt.backend + "'");
            if (opt.format != "csv" && opt.format != "json")
                throw input_error("unknown format '" + opt.format + "' (csv or json)");
            std::cout << emit_report(run_census(spec), opt.format);
            return 0;
        }
        if (c_degree->parsed()) {
            Shape s = parse_shape(shape_str);
            ordered_json j;
            j["shape"] = s.str();
            j["mode"] = mode_str;
            if (mode_str == "indscal") {
                if (!is_indscal_minimal_shape(s))
                    throw input_error("shape " + s.str() + " is not a minimal symmetric-slice shape");
                j["generic_solution_count"] = indscal_expected_degree(s.J);
            } else if (mode_str == "general") {
                j["generic_solution_count"] = expected_degree(s);
                j["khovanskii_bound"] = khovanskii_bound(s).get_str();
            } else {
                throw input_error("unknown mode '" + mode_str + "'");
            }
            std::cout << j.dump(2) << "\n";
            return 0;
        }
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const tenrank::domain_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 3;
}
