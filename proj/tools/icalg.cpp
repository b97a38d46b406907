// icalg: classification and Dirac cohomology of L(lambda) for the deformed
// algebras attached to xi (or w, or P), plus the verification suites.
//
// Exit codes: 0 ok, 1 lambda rejected or a check failed, 2 usage/parse error.

#include "icalg/repdecomp.hpp"
#include "icalg/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using json = nlohmann::json;
using namespace icalg;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Rejection : std::runtime_error {
    Rejection(std::string code, const std::string& msg) : std::runtime_error(msg), code(std::move(code)) {}
    std::string code;
};

struct Options {
    std::size_t n = 0;
    std::string xi, w, P_h;
    std::string lambda, lambda_plus_rho;
    std::string from_json;
    bool json = false;
    bool decimal = false;

    std::string suite = "all";
    std::size_t max_n = 2;
    int max_deg = 2;
    unsigned jobs = 1;
};

// What the deformation was given as, after parsing.
struct Deformation {
    std::size_t n = 0;
    std::string kind;  // "xi", "w" or "P_h"
    std::vector<Rational> coeffs;

    std::optional<Poly> xi() const {
        if (kind == "xi") return Poly(coeffs);
        return std::nullopt;
    }
    Poly w() const {
        if (kind == "xi") return xi_to_w(Poly(coeffs), static_cast<unsigned>(n));
        return Poly(coeffs);
    }
    SymPolyInHBasis P() const {
        if (kind == "P_h") return SymPolyInHBasis(coeffs, n);
        return SymPolyInHBasis::from_w(w(), n);
    }
};

json rat(const Rational& q) { return to_string(q); }

json rats(const std::vector<Rational>& v) {
    json a = json::array();
    for (const auto& q : v) a.push_back(rat(q));
    return a;
}

std::vector<Rational> parse_list(const std::string& text, const std::string& flag) {
    try {
        return parse_rational_list(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(flag + ": " + e.what());
    }
}

std::vector<Rational> json_rats(const json& j, const std::string& key) {
    if (!j.is_array()) throw UsageError("from-json: '" + key + "' must be an array of rational strings");
    std::vector<Rational> out;
    for (const auto& e : j) {
        if (!e.is_string()) throw UsageError("from-json: '" + key + "' entries must be strings like \"p/q\"");
        out.push_back(parse_list(e.get<std::string>(), key).at(0));
    }
    return out;
}

// Resolved input: deformation plus an optional plain-coordinate lambda.
struct Input {
    Deformation def;
    std::optional<Weight> lambda;
};

Input read_input(const Options& o, bool need_lambda) {
    Input in;
    if (!o.from_json.empty()) {
        std::ifstream f(o.from_json);
        if (!f) throw UsageError("cannot open '" + o.from_json + "'");
        json doc;
        try {
            doc = json::parse(f);
        } catch (const json::parse_error& e) {
            throw UsageError(std::string("from-json: ") + e.what());
        }
        const json& src = doc.contains("input") ? doc["input"] : doc;
        if (!src.contains("n") || !src["n"].is_number_unsigned())
            throw UsageError("from-json: missing positive integer 'n'");
        in.def.n = src["n"].get<std::size_t>();
        int kinds = 0;
        for (const char* k : {"xi", "w", "P_h"})
            if (src.contains(k)) {
                ++kinds;
                in.def.kind = k;
                in.def.coeffs = json_rats(src[k], k);
            }
        if (kinds != 1) throw UsageError("from-json: exactly one of xi, w, P_h is required");
        if (src.contains("lambda")) in.lambda = Weight(json_rats(src["lambda"], "lambda"));
    } else {
        in.def.n = o.n;
        int kinds = 0;
        if (!o.xi.empty()) ++kinds, in.def.kind = "xi", in.def.coeffs = parse_list(o.xi, "--xi");
        if (!o.w.empty()) ++kinds, in.def.kind = "w", in.def.coeffs = parse_list(o.w, "--w");
        if (!o.P_h.empty()) ++kinds, in.def.kind = "P_h", in.def.coeffs = parse_list(o.P_h, "--P-h");
        if (kinds != 1) throw UsageError("exactly one of --xi, --w, --P-h is required");
        if (!o.lambda.empty() && !o.lambda_plus_rho.empty())
            throw UsageError("give --lambda or --lambda-plus-rho, not both");
        if (!o.lambda.empty()) in.lambda = Weight(parse_list(o.lambda, "--lambda"));
        if (!o.lambda_plus_rho.empty() && in.def.n >= 1)
            in.lambda = minus_rho(Weight(parse_list(o.lambda_plus_rho, "--lambda-plus-rho")));
    }
    if (in.def.n < 1) throw UsageError("--n must be a positive integer");
    if (in.lambda && in.lambda->rank() != in.def.n)
        throw UsageError("lambda has " + std::to_string(in.lambda->rank()) + " coordinates, expected n = " +
                         std::to_string(in.def.n));
    if (need_lambda && !in.lambda) throw UsageError("--lambda or --lambda-plus-rho is required");
    return in;
}

json input_json(const Input& in) {
    json j;
    j["n"] = in.def.n;
    j[in.def.kind] = rats(in.def.coeffs);
    if (in.lambda) j["lambda"] = rats(in.lambda->coords());
    return j;
}

std::string show(const Rational& q, bool decimal) { return decimal ? to_decimal(q) : to_string(q); }

std::string show(const Weight& w, bool decimal) {
    std::string out = "(";
    for (std::size_t i = 0; i < w.rank(); ++i) out += (i ? ", " : "") + show(w[i], decimal);
    return out + ")";
}

std::string coeff_list(const std::vector<Rational>& v) {
    if (v.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + to_string(v[i]);
    return out;
}

std::string h_basis_str(const SymPolyInHBasis& P) {
    std::string out;
    for (std::size_t k = 0; k < P.w_coeffs.size(); ++k) {
        const Rational& c = P.w_coeffs[k];
        if (c == 0) continue;
        out += out.empty() ? (sgn(c) < 0 ? "-" : "") : (sgn(c) < 0 ? " - " : " + ");
        out += to_string(abs(c)) + " h_" + std::to_string(k);
    }
    return out.empty() ? "0" : out;
}

json weight_json(const Weight& mu) {
    return {{"plain", rats(mu.coords())}, {"shifted", rats(plus_rho(mu).coords())}};
}

json decomp_json(const ModuleDecomp& d) {
    json a = json::array();
    for (const auto& [mu, m] : d) {
        json e = weight_json(mu);
        e["multiplicity"] = m;
        e["dim"] = rat(formal_dim(mu));
        a.push_back(e);
    }
    return a;
}

void print_decomp(std::ostream& os, const std::string& title, const ModuleDecomp& d, bool decimal) {
    os << title << " (" << d.total_multiplicity() << " summands, dim " << to_string(d.total_dimension()) << ")\n";
    for (const auto& [mu, m] : d)
        os << "  mu+rho = " << std::left << std::setw(18) << show(plus_rho(mu), decimal) << " mu = " << std::setw(18)
           << show(mu, decimal) << " x" << m << (is_dominant(mu) ? "" : "  [rho-singular, dim 0]") << "\n";
}

// ---------------------------------------------------------------- commands

int cmd_transform(const Options& o) {
    Input in = read_input(o, false);
    if (in.def.kind != "xi") throw UsageError("transform needs --xi");
    const Poly xi(in.def.coeffs);
    const unsigned n = static_cast<unsigned>(in.def.n);
    const Poly Xi = xi_to_Xi(xi, n), g = xi_to_g(xi, n), w = xi_to_w(xi, n);
    if (o.json) {
        json out;
        out["command"] = "transform";
        out["input"] = input_json(in);
        out["Xi"] = rats(Xi.coeffs());
        out["g"] = rats(g.coeffs());
        out["w"] = rats(w.coeffs());
        out["P_h"] = rats(w.coeffs());
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "xi = " << coeff_list(xi.coeffs()) << "    " << xi.str() << "\n"
                  << "Xi = " << coeff_list(Xi.coeffs()) << "    " << Xi.str() << "\n"
                  << "g  = " << coeff_list(g.coeffs()) << "    " << g.str() << "\n"
                  << "w  = " << coeff_list(w.coeffs()) << "    " << w.str() << "\n"
                  << "P  = " << h_basis_str(SymPolyInHBasis::from_w(w, n)) << "\n";
    }
    return 0;
}

DiracAnalysis run_analysis(const Input& in) {
    const auto P = in.def.P();
    if (!is_dominant(*in.lambda))
        throw Rejection("not_dominant", "lambda = " + in.lambda->str() + " is not dominant");
    try {
        return analyze(P, *in.lambda);
    } catch (const NotInLambdaTilde& e) {
        throw Rejection("not_in_lambda_tilde", "not in Lambda-tilde: no positive integer root of q(t) for lambda = " +
                                                   in.lambda->str());
    }
}

json analysis_json(const Input& in, const DiracAnalysis& a, bool full) {
    json out;
    out["input"] = input_json(in);
    if (in.def.kind != "P_h") out["w"] = rats(in.def.w().coeffs());
    out["P_h"] = rats(in.def.P().w_coeffs);
    out["lambda"] = weight_json(a.lambda);
    out["P_lambda"] = rat(a.P_lambda);
    out["member"] = true;
    out["degenerate"] = a.degenerate;
    out["nu"] = a.nu.nu;
    out["L"] = decomp_json(a.L);
    if (full) {
        out["LS"] = decomp_json(a.LS);
        out["dirac_cohomology"] = decomp_json(a.cohomology);
        json g = json::array();
        for (const auto& w : a.guaranteed) g.push_back(weight_json(w));
        out["guaranteed_classes"] = g;
    }
    return out;
}

void print_header(const Input& in, const DiracAnalysis& a, bool decimal) {
    std::cout << "n = " << in.def.n << "\n";
    if (in.def.kind != "P_h") std::cout << "w = " << in.def.w().str() << "\n";
    std::cout << "P = " << h_basis_str(in.def.P()) << "\n"
              << "lambda = " << show(a.lambda, decimal) << "    lambda+rho = " << show(plus_rho(a.lambda), decimal)
              << "\n"
              << "P(lambda) = " << show(a.P_lambda, decimal) << (a.degenerate ? "    [degenerate: q(t) = 0]" : "")
              << "\n";
    std::cout << "nu = (";
    for (std::size_t i = 0; i < a.nu.size(); ++i) std::cout << (i ? ", " : "") << a.nu[i];
    std::cout << ")\n";
}

int cmd_classify(const Options& o) {
    Input in = read_input(o, true);
    DiracAnalysis a = run_analysis(in);
    if (o.json) {
        json out = analysis_json(in, a, false);
        out["command"] = "classify";
        std::cout << out.dump(2) << "\n";
    } else {
        print_header(in, a, o.decimal);
        print_decomp(std::cout, "L(lambda)", a.L, o.decimal);
    }
    return 0;
}

int cmd_dirac(const Options& o) {
    Input in = read_input(o, true);
    DiracAnalysis a = run_analysis(in);
    if (o.json) {
        json out = analysis_json(in, a, true);
        out["command"] = "dirac";
        std::cout << out.dump(2) << "\n";
    } else {
        print_header(in, a, o.decimal);
        print_decomp(std::cout, "L(lambda)", a.L, o.decimal);
        print_decomp(std::cout, "L(lambda) (x) S", a.LS, o.decimal);
        print_decomp(std::cout, "Dirac cohomology", a.cohomology, o.decimal);
        std::cout << "guaranteed classes:";
        for (const auto& g : a.guaranteed) std::cout << "  " << show(plus_rho(g), o.decimal);
        std::cout << "  (mu+rho)\n";
    }
    return 0;
}

// Published P-grids keyed by (P in the h-basis, lambda+rho), in the same
// row/column layout as `tables` prints.
struct ReferenceGrid {
    std::vector<Rational> P_h;
    std::vector<Rational> lambda_plus_rho;
    std::vector<std::vector<Rational>> grid;
};

const std::vector<ReferenceGrid>& reference_grids() {
    static const std::vector<ReferenceGrid> refs{
        {{0, 18, Rational(-9, 2), -2, Rational(1, 2)},
         {3, 0},
         {{0, -5, -12, 0}, {10, 0, -10, 4}, {12, -4, -16, 3}, {0, -20, -30, 0}}},
    };
    return refs;
}

std::string align_grid(const std::vector<std::vector<std::string>>& cells) {
    std::size_t wdt = 0;
    for (const auto& row : cells)
        for (const auto& c : row) wdt = std::max(wdt, c.size());
    std::ostringstream os;
    for (const auto& row : cells) {
        for (std::size_t j = 0; j < row.size(); ++j) os << "  " << std::right << std::setw(static_cast<int>(wdt)) << row[j];
        os << "\n";
    }
    return os.str();
}

int cmd_tables(const Options& o) {
    Input in = read_input(o, true);
    DiracAnalysis a = run_analysis(in);
    const auto P = in.def.P();
    const std::size_t n = in.def.n;
    const Weight top = plus_rho(a.lambda);
    const Weight halves = Weight::constant(n, Rational(1, 2));

    if (n != 2) {
        // Flat list over the box lambda+rho - (0..nu+1).
        json rows = json::array();
        std::vector<std::uint64_t> bounds;
        for (auto v : a.nu.nu) bounds.push_back(v + 1);
        for_each_in_box(bounds, [&](const std::vector<std::uint64_t>& off) {
            Weight pt = top;
            for (std::size_t i = 0; i < n; ++i) pt[i] -= Rational(static_cast<unsigned long>(off[i]));
            const Weight mu = minus_rho(pt) + halves;
            rows.push_back({{"point", rats(pt.coords())},
                            {"P", rat(eval_P(P, pt.coords()))},
                            {"m", a.LS.multiplicity(mu)}});
        });
        if (o.json) {
            json out{{"command", "tables"}, {"input", input_json(in)}, {"points", rows}};
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "mu+rho  P(mu+rho)  m_mu\n";
            for (const auto& r : rows) {
                std::string pt = "(";
                for (std::size_t i = 0; i < n; ++i)
                    pt += (i ? ", " : "") + show(parse_rational(r["point"][i].get<std::string>()), o.decimal);
                std::cout << pt << ")  " << show(parse_rational(r["P"].get<std::string>()), o.decimal) << "  "
                          << r["m"].get<std::uint64_t>() << "\n";
            }
        }
        return 0;
    }

    // Rows: descending second coordinate; columns: descending first.
    const std::size_t cols = a.nu[0] + 2, nrows = a.nu[1] + 2;
    std::vector<std::vector<Weight>> pts(nrows, std::vector<Weight>(cols));
    std::vector<std::vector<Rational>> pv(nrows, std::vector<Rational>(cols));
    std::vector<std::vector<std::uint64_t>> mv(nrows, std::vector<std::uint64_t>(cols));
    for (std::size_t r = 0; r < nrows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            Weight pt{top[0] - Rational(static_cast<unsigned long>(c)), top[1] - Rational(static_cast<unsigned long>(r))};
            pts[r][c] = pt;
            pv[r][c] = eval_P(P, pt.coords());
            mv[r][c] = a.LS.multiplicity(minus_rho(pt) + halves);
        }

    std::optional<std::string> reference;
    for (const auto& ref : reference_grids()) {
        if (ref.P_h != P.w_coeffs || ref.lambda_plus_rho != top.coords()) continue;
        if (ref.grid.size() != nrows || ref.grid[0].size() != cols) break;
        bool same = true, transposed = nrows == cols;
        for (std::size_t r = 0; r < nrows; ++r)
            for (std::size_t c = 0; c < cols; ++c) {
                same = same && ref.grid[r][c] == pv[r][c];
                transposed = transposed && ref.grid[c][r] == pv[r][c];
            }
        reference = same ? "match" : transposed ? "transposed" : "differs";
    }

    if (o.json) {
        json wg = json::array(), pg = json::array(), mg = json::array();
        for (std::size_t r = 0; r < nrows; ++r) {
            json wr = json::array(), pr = json::array(), mr = json::array();
            for (std::size_t c = 0; c < cols; ++c) {
                wr.push_back(rats(pts[r][c].coords()));
                pr.push_back(rat(pv[r][c]));
                mr.push_back(mv[r][c]);
            }
            wg.push_back(wr);
            pg.push_back(pr);
            mg.push_back(mr);
        }
        json out{{"command", "tables"}, {"input", input_json(in)}, {"nu", a.nu.nu},
                 {"weight_grid", wg},   {"P_grid", pg},           {"m_grid", mg}};
        out["reference"] = reference ? json(*reference) : json(nullptr);
        std::cout << out.dump(2) << "\n";
        return 0;
    }

    std::vector<std::vector<std::string>> wc(nrows), pc(nrows), mc(nrows);
    for (std::size_t r = 0; r < nrows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            wc[r].push_back(show(pts[r][c], o.decimal));
            pc[r].push_back(show(pv[r][c], o.decimal));
            mc[r].push_back(std::to_string(mv[r][c]));
        }
    std::cout << "mu+rho\n" << align_grid(wc) << "\nP(mu+rho)" << (reference == "transposed" ? " *" : "") << "\n"
              << align_grid(pc) << "\nm_mu  (at mu+rho + (1/2, 1/2))\n" << align_grid(mc);
    if (reference == "transposed")
        std::cout << "\n* matches the published reference grid only up to transposition\n";
    else if (reference == "differs")
        std::cout << "\n* differs from the published reference grid\n";
    return 0;
}

int cmd_verify(const Options& o) {
    VerifyOptions vo;
    vo.max_n = o.max_n;
    vo.max_deg = o.max_deg;
    vo.jobs = std::max(1u, o.jobs);
    const auto results = run_suite(o.suite, vo);
    bool all = true;
    for (const auto& r : results) all = all && r.passed;
    if (o.json) {
        json checks = json::array();
        for (const auto& r : results)
            checks.push_back({{"suite", r.suite}, {"name", r.name}, {"passed", r.passed}, {"checked", r.checked},
                              {"detail", r.detail}});
        json out{{"command", "verify"}, {"suite", o.suite}, {"passed", all}, {"checks", checks}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::size_t failed = 0;
        for (const auto& r : results) {
            failed += !r.passed;
            std::cout << (r.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(10) << r.suite << r.name << " ["
                      << r.checked << "]";
            if (!r.passed) std::cout << "\n      " << r.detail;
            std::cout << "\n";
        }
        std::cout << results.size() - failed << "/" << results.size() << " checks passed\n";
    }
    return all ? 0 : 1;
}

void add_input_flags(CLI::App* sub, Options& o, bool lambda) {
    sub->add_option("--n", o.n, "rank n of gl_n");
    sub->add_option("--xi", o.xi, "coefficients of xi, lowest degree first");
    sub->add_option("--w", o.w, "coefficients of w, lowest degree first");
    sub->add_option("--P-h", o.P_h, "coefficients of P in the h-basis, h_0 first");
    sub->add_option("--from-json", o.from_json, "read the input from a JSON document (e.g. earlier --json output)");
    if (lambda) {
        sub->add_option("--lambda", o.lambda, "highest weight, plain coordinates");
        sub->add_option("--lambda-plus-rho", o.lambda_plus_rho, "highest weight, rho-shifted coordinates");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"icalg: finite-dimensional modules and Dirac cohomology for deformations of gl_n"};
    app.require_subcommand(1);
    Options o;
    app.add_flag("--json", o.json, "emit a single JSON document");
    app.add_flag("--decimal", o.decimal, "render rationals as decimals in text output");

    auto* transform = app.add_subcommand("transform", "xi -> Xi, g, w, P");
    add_input_flags(transform, o, false);
    auto* classify = app.add_subcommand("classify", "membership, nu and L(lambda)");
    add_input_flags(classify, o, true);
    auto* dirac = app.add_subcommand("dirac", "full pipeline down to the Dirac cohomology");
    add_input_flags(dirac, o, true);
    auto* tables = app.add_subcommand("tables", "weight, P and multiplicity grids");
    add_input_flags(tables, o, true);
    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("--suite", o.suite, "poly | clifford | jacobi | oracle-n1 | decomp | all")
        ->check(CLI::IsMember({"poly", "clifford", "jacobi", "oracle-n1", "decomp", "all"}));
    verify->add_option("--max-n", o.max_n, "largest rank for the jacobi suite")->check(CLI::Range(1, 3));
    verify->add_option("--max-deg", o.max_deg, "largest deg xi for the jacobi suite")->check(CLI::Range(0, 4));
    verify->add_option("--jobs", o.jobs, "parallel workers")->check(CLI::Range(1, 256));
    for (auto* sub : {transform, classify, dirac, tables, verify}) {
        sub->add_flag("--json", o.json, "emit a single JSON document");
        sub->add_flag("--decimal", o.decimal, "render rationals as decimals in text output");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*transform) return cmd_transform(o);
        if (*classify) return cmd_classify(o);
        if (*dirac) return cmd_dirac(o);
        if (*tables) return cmd_tables(o);
        if (*verify) return cmd_verify(o);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Rejection& e) {
        if (o.json)
            std::cout << json{{"error", e.code}, {"message", e.what()}}.dump(2) << "\n";
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
