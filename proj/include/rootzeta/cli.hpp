#pragma once

#include "rootzeta/chambers.hpp"
#include "rootzeta/lattice_sum.hpp"
#include "rootzeta/serialize.hpp"
#include "rootzeta/verify.hpp"
#include "rootzeta/witten.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

namespace rootzeta::cli {

enum Exit { ok = 0, usage = 1, failed = 2, unsupported = 3 };

namespace detail {

inline std::vector<std::string> split(const std::string& s) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, ',')) out.push_back(item);
    if (!s.empty() && s.back() == ',') throw std::invalid_argument("trailing comma in '" + s + "'");
    return out;
}

inline long parse_long(const std::string& s) {
    Rational q = parse_rational(s);
    if (!is_integer(q)) throw std::invalid_argument("not an integer: '" + s + "'");
    return q.get_num().get_si();
}

inline std::vector<long> parse_longs(const std::string& s) {
    std::vector<long> out;
    for (const auto& x : split(s)) out.push_back(parse_long(x));
    return out;
}

inline std::vector<unsigned> parse_naturals(const std::string& s) {
    std::vector<unsigned> out;
    for (long x : parse_longs(s)) {
        if (x < 0) throw std::invalid_argument("exponents must be nonnegative");
        out.push_back(static_cast<unsigned>(x));
    }
    return out;
}

inline std::vector<double> parse_doubles(const std::string& s) {
    std::vector<double> out;
    for (const auto& x : split(s)) {
        std::size_t used = 0;
        double v = std::stod(x, &used);
        if (used != x.size()) throw std::invalid_argument("not a number: '" + x + "'");
        out.push_back(v);
    }
    return out;
}

// 1-based indices on the command line
inline std::vector<std::size_t> parse_index_set(const std::string& s, std::size_t r) {
    std::vector<std::size_t> out;
    if (s.empty()) return out;
    for (long x : parse_longs(s)) {
        if (x < 1 || static_cast<std::size_t>(x) > r) throw std::invalid_argument("index out of range in I");
        out.push_back(static_cast<std::size_t>(x - 1));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline Vec parse_y(const std::string& s, const RootSystem& rs) {
    if (s.empty()) return Vec(rs.r, 0);
    Vec y = parse_rational_list(s);
    if (y.size() != rs.r) throw std::invalid_argument("y needs " + std::to_string(rs.r) + " coordinates");
    return y;
}

inline std::string latex(const PiValue& v) {
    Rational a = abs(v.coeff);
    std::string out = sgn(v.coeff) < 0 ? "-" : "";
    if (a.get_den() == 1) out += a.get_num().get_str();
    else out += "\\frac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}";
    if (v.pi_power) out += "\\pi^{" + std::to_string(v.pi_power) + "}";
    return out;
}

inline void emit_text(const Json& j, std::ostream& out) {
    if (!j.is_object()) {
        out << j.dump() << '\n';
        return;
    }
    for (const auto& [k, v] : j.items()) out << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
}

inline Json report_json(const std::vector<VerificationReport>& reps, bool timings) {
    Json suites = Json::array();
    std::set<std::string> ops{"run", "suite_registry"};
    bool all = true;
    for (const auto& r : reps) {
        Json checks = Json::array();
        for (const auto& c : r.checks) {
            Json jc = {{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"status", c.status()}};
            if (timings) jc["runtime"] = c.seconds;
            checks.push_back(jc);
        }
        suites.push_back({{"suite", r.suite}, {"passed", r.passed()}, {"checks", checks}});
        auto o = r.operations();
        ops.insert(o.begin(), o.end());
        all = all && r.passed();
    }
    return {{"passed", all}, {"suites", suites}, {"operations", ops}};
}

}  // namespace detail

// argv[0] is the program name
inline int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err, std::istream& in = std::cin) {
    CLI::App app{"Bernoulli polynomials and special values of zeta-functions of root systems", "rootzeta"};
    app.require_subcommand(1);
    app.fallthrough();
    unsigned threads = 0;
    double tol = 1e-6;
    std::string format = "json";
    bool timings = false;
    app.add_option("--threads", threads, "worker threads (0: all cores)");
    app.add_option("--tol", tol, "tolerance for floating-point checks");
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text", "latex"}));
    app.add_flag("--timings", timings, "include per-check runtimes in verify reports");

    std::string type, y, k, s, caps, I, file, suite, types;
    std::size_t chamber = 0;
    long M = 0;
    unsigned seed = VerifyOptions{}.seed;

    auto* roots = app.add_subcommand("roots", "positive roots, pairings, |W| and K");
    roots->add_option("type", type)->required();
    auto* weyl = app.add_subcommand("weyl", "Weyl group elements, optionally minimal coset representatives");
    weyl->add_option("type", type)->required();
    weyl->add_option("--I", I, "parabolic index set, 1-based");
    auto* boxes = app.add_subcommand("boxes", "the polytopes P_{m,y}");
    boxes->add_option("type", type)->required();
    boxes->add_option("--y", y, "weight coordinates");
    auto* tri = app.add_subcommand("triangulate", "full-flag triangulation of an H-polytope given as JSON");
    tri->add_option("file", file, "JSON file, standard input when omitted");
    auto* genfunc = app.add_subcommand("genfunc", "truncated generating function F(t, y)");
    genfunc->add_option("type", type)->required();
    genfunc->add_option("--y", y);
    genfunc->add_option("--caps", caps, "per-root degree caps, or one cap for all")->required();
    auto* bern = app.add_subcommand("bernoulli", "B_k at y = 0, or P(k, y) with --y");
    bern->add_option("type", type)->required();
    bern->add_option("--k", k)->required();
    bern->add_option("--y", y);
    auto* bpoly = app.add_subcommand("bpoly", "the chamber polynomial B^(nu)_k(y) of a rank-2 system");
    bpoly->add_option("type", type)->required();
    bpoly->add_option("--k", k)->required();
    bpoly->add_option("--chamber", chamber)->required();
    auto* cham = app.add_subcommand("chamber", "the chamber containing y");
    cham->add_option("type", type)->required();
    cham->add_option("--y", y)->required();
    auto* witten = app.add_subcommand("witten", "zeta_r(2k, ..., 2k) with k per root-length orbit");
    witten->add_option("type", type)->required();
    witten->add_option("--k", k)->required();
    auto* wittenw = app.add_subcommand("witten-w", "the Witten zeta value zeta_W(2k)");
    wittenw->add_option("type", type)->required();
    wittenw->add_option("--k", k)->required();
    auto* mixed = app.add_subcommand("mixed", "zeta_r(s) for even s constant on orbits");
    mixed->add_option("type", type)->required();
    mixed->add_option("--s", s)->required();
    auto* numeric = app.add_subcommand("numeric", "truncated lattice sum for zeta_r(s, y), or S(s, y; I) with --I");
    numeric->add_option("type", type)->required();
    numeric->add_option("--s", s)->required();
    numeric->add_option("--y", y);
    numeric->add_option("--M", M, "truncation")->default_val(1000);
    numeric->add_option("--I", I, "sum over the preimage of the I-dominant cone, 1-based");
    auto* ver = app.add_subcommand("verify", "run a named verification suite, or all");
    ver->add_option("suite", suite)->required();
    ver->add_option("type", type, "root system for fr");
    ver->add_option("--M", M, "truncation");
    ver->add_option("--s", s, "mordell: values of s; fr: exponents");
    ver->add_option("--I", I, "fr: index set, 1-based");
    ver->add_option("--y", y, "fr: weight coordinates");
    ver->add_option("--types", types, "volume-partition: types to check");
    ver->add_option("--seed", seed, "volume-partition: seed for the random points");

    try {
        std::vector<std::string> rev(argv.rbegin(), argv.rend());
        if (!rev.empty()) rev.pop_back();
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return usage;
    }

    auto emit = [&](const Json& j, const std::string& tex = {}) {
        if (format == "latex") {
            if (tex.empty()) throw std::invalid_argument("no LaTeX form for this command");
            out << tex << '\n';
        } else if (format == "text") {
            detail::emit_text(j, out);
        } else {
            out << j.dump() << '\n';
        }
    };

    try {
        if (*roots) {
            auto rs = build_root_system(type);
            Json j = to_json(rs);
            j["weyl_order"] = generate_weyl_group(rs).size();
            emit(j);
        } else if (*weyl) {
            auto rs = build_root_system(type);
            auto W = generate_weyl_group(rs);
            Json elems = Json::array();
            for (const auto& w : W) elems.push_back(to_json(w));
            Json j = {{"type", rs.label}, {"order", W.size()}, {"elements", elems}};
            if (weyl->count("--I")) {
                auto idx = detail::parse_index_set(I, rs.r);
                Json reps = Json::array();
                for (const auto& w : minimal_coset_reps(rs, idx)) reps.push_back(to_json(w));
                j["coset_reps"] = reps;
                j["parabolic_order"] = generate_subgroup(rs, idx).size();
            }
            emit(j);
        } else if (*boxes) {
            auto rs = build_root_system(type);
            emit(to_json(build_boxes(rs, detail::parse_y(y, rs))));
        } else if (*tri) {
            std::string text;
            if (file.empty() || file == "-") {
                text.assign(std::istreambuf_iterator<char>(in), {});
            } else {
                std::ifstream f(file);
                if (!f) throw std::invalid_argument("cannot open " + file);
                text.assign(std::istreambuf_iterator<char>(f), {});
            }
            Json input;
            try {
                input = Json::parse(text);
            } catch (const Json::exception& e) {
                throw std::invalid_argument(std::string("bad polytope JSON: ") + e.what());
            }
            HPolytope p;
            try {
                p = hpolytope_from_json(input);
            } catch (const Json::exception& e) {
                throw std::invalid_argument(std::string("bad polytope JSON: ") + e.what());
            }
            auto vs = enumerate_vertices(p);
            auto L = face_lattice(p, vs);
            auto T = triangulate_full_flags(L);
            Json vols = Json::array();
            for (std::size_t i = 0; i < T.simplices.size(); ++i) {
                auto sx = simplex_of(T, i);
                auto hull = affine_hull(T.vertices);
                vols.push_back(to_json(hull.dim == p.dim ? simplex_volume(sx) : simplex_volume(sx, hull.coords)));
            }
            Json j = to_json(T);
            j["f_vector"] = L.f_vector();
            j["simplex_volumes"] = vols;
            emit(j);
        } else if (*genfunc) {
            auto rs = build_root_system(type);
            auto c = detail::parse_naturals(caps);
            if (c.size() == 1) c.assign(rs.n(), c[0]);
            if (c.size() != rs.n()) throw std::invalid_argument("caps needs one entry per positive root");
            auto F = generating_series(rs, detail::parse_y(y, rs), c, threads);
            Json j = to_json(F.series);
            j["y"] = to_json(F.y);
            emit(j, to_latex(F.series, "t"));
        } else if (*bern) {
            auto rs = build_root_system(type);
            auto kk = detail::parse_naturals(k);
            if (kk.size() != rs.n()) throw std::invalid_argument("k needs one entry per positive root");
            Rational B = bern->count("--y") ? P_value(rs, kk, detail::parse_y(y, rs), threads)
                                             : bernoulli_number_of(rs, kk, threads);
            emit({{"B", to_json(B)}});
        } else if (*bpoly) {
            auto rs = build_root_system(type);
            auto kk = detail::parse_naturals(k);
            auto cp = bernoulli_polynomial_of(rs, kk, chamber, threads);
            emit({{"type", rs.label}, {"nu", cp.nu}, {"k", cp.k}, {"B", to_json(cp.B)}, {"coefficient", to_json(cp.coefficient)}},
                 to_latex(cp.coefficient, "y"));
        } else if (*cham) {
            auto rs = build_root_system(type);
            auto loc = chamber_of(rs, detail::parse_y(y, rs));
            emit(loc.wall ? Json{{"wall", true}} : Json{{"nu", loc.nu}});
        } else if (*witten || *wittenw || *mixed) {
            auto rs = build_root_system(type);
            PiValue v;
            if (*witten) {
                auto kk = detail::parse_naturals(k);
                v = kk.size() == 1 ? witten_special_value(rs, kk[0], threads) : witten_special_value(rs, kk, threads);
            } else if (*wittenw) {
                auto kk = detail::parse_naturals(k);
                if (kk.size() != 1) throw std::invalid_argument("witten-w takes a single k");
                v = witten_zeta_value(rs, kk[0], threads);
            } else {
                v = mixed_even_value(rs, detail::parse_naturals(s), threads);
            }
            emit(to_json(v), detail::latex(v));
        } else if (*numeric) {
            auto rs = build_root_system(type);
            std::vector<Complex> ss;
            for (double x : detail::parse_doubles(s)) ss.emplace_back(x, 0);
            auto yy = detail::parse_y(y, rs);
            NumericSum z = numeric->count("--I")
                               ? S_numeric(rs, ss, yy, detail::parse_index_set(I, rs.r), M, threads)
                               : zeta_numeric(rs, ss, yy, M, threads);
            emit({{"re", z.value.real()}, {"im", z.value.imag()}, {"tail", z.tail}, {"M", z.M}});
        } else if (*ver) {
            VerifyOptions opt;
            opt.tol = tol;
            opt.threads = threads;
            opt.seed = seed;
            if (ver->count("--M")) opt.M = M;
            if (!s.empty()) opt.s = detail::parse_longs(s);
            if (!types.empty()) opt.types = detail::split(types);
            if (!type.empty()) {
                auto rs = build_root_system(type);
                opt.type = type;
                if (ver->count("--I")) opt.I = detail::parse_index_set(I, rs.r);
                if (ver->count("--y")) opt.y = detail::parse_y(y, rs);
            }
            auto reps = run_suite(suite, opt);
            Json j = detail::report_json(reps, timings);
            if (format == "json") {
                out << j.dump() << '\n';
            } else {
                for (const auto& r : reps)
                    for (const auto& c : r.checks) {
                        out << (c.pass ? "PASS " : "FAIL ") << r.suite << ": " << c.name << " [" << c.actual << "]";
                        if (timings) out << " " << c.seconds << "s";
                        out << '\n';
                    }
                out << (j["passed"].get<bool>() ? "PASS" : "FAIL") << '\n';
            }
            return j["passed"].get<bool>() ? ok : failed;
        }
    } catch (const UnsupportedType& e) {
        err << "error: " << e.what() << '\n';
        return unsupported;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return failed;
    }
    return ok;
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    return run(std::vector<std::string>(argv, argv + argc), out, err);
}

}  // namespace rootzeta::cli
