// hizeta: command-line front end for the library.
//
//   hizeta eval <target> [--s ...] [--z ...] [--omega ...] [--seq ...]
//   hizeta coeffs --seq ... --n-max N [--partial-sums]
//   hizeta verify <suite> [...]
//   hizeta zeros-import --zeros FILE
//   hizeta tauberian --seq ... [--x X]
//
// Exit codes: 0 ok, 1 verification failure, 2 usage or parse error, 3 domain error.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>

#include "hizeta/hizeta.hpp"
#include "hizeta/verify.hpp"

namespace {

using hizeta::Complex;

struct Options {
    std::string target;
    std::string s_arg, z_arg, omega_arg, seq_arg, zeros_path, output, format = "csv";
    double eps = 1e-10;
    int max_terms = 32;
    std::size_t nz = 1000;
    std::int64_t prime_bound = std::int64_t(1) << 24;
    std::int64_t n_max = 0;
    double x = 1e4;
    bool partial_sums = false;
};

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

class Table {
public:
    Table(std::ostream& out, char sep) : out_(out), sep_(sep) {}

    void row(const std::vector<std::string>& cells) {
        for (std::size_t k = 0; k < cells.size(); ++k) {
            if (k) out_ << sep_;
            out_ << cells[k];
        }
        out_ << '\n';
    }

private:
    std::ostream& out_;
    char sep_;
};

/// `start:stop:step` (real, stop included when on-grid within 1e-12) or a
/// comma list of complex literals.
std::vector<Complex> parse_points(const std::string& text, const char* flag) {
    if (text.empty()) throw hizeta::ParseError(std::string("missing ") + flag);
    if (text.find(':') == std::string::npos) return hizeta::parse_complex_list(text);
    const auto parts = hizeta::detail::split(text, ':');
    if (parts.size() != 3) throw hizeta::ParseError(std::string(flag) + ": grid must be start:stop:step");
    const double start = hizeta::detail::parse_real(parts[0], "grid start");
    const double stop = hizeta::detail::parse_real(parts[1], "grid stop");
    const double step = hizeta::detail::parse_real(parts[2], "grid step");
    if (!(step > 0.0)) throw hizeta::ParseError(std::string(flag) + ": grid step must be > 0");
    if (stop < start) throw hizeta::ParseError(std::string(flag) + ": grid stop is below start");
    std::vector<Complex> pts;
    for (long k = 0;; ++k) {
        const double v = start + double(k) * step;
        if (v > stop + 1e-12) break;
        if (pts.size() > 1'000'000) throw hizeta::ParseError(std::string(flag) + ": grid too large");
        pts.emplace_back(v);
    }
    return pts;
}

Complex parse_point(const std::string& text, const char* flag) {
    const auto pts = parse_points(text, flag);
    if (pts.size() != 1) throw hizeta::ParseError(std::string(flag) + " takes a single value here");
    return pts.front();
}

hizeta::WeightVector parse_omega(const std::string& text) {
    if (text.empty()) throw hizeta::ParseError("missing --omega");
    return hizeta::WeightVector(hizeta::parse_complex_list(text));
}

hizeta::SequenceSpec parse_seq(const std::string& text) {
    if (text.empty()) throw hizeta::ParseError("missing --seq");
    return hizeta::parse_sequence_spec(text);
}

hizeta::PrecisionPolicy policy(const Options& o) {
    hizeta::PrecisionPolicy pol;
    pol.eps_abs = o.eps;
    pol.eps_rel = o.eps;
    pol.max_terms = o.max_terms;
    pol.validate();
    return pol;
}

int cmd_eval(const Options& o, Table& t) {
    const auto pol = policy(o);
    using Fn = std::function<Complex(Complex)>;
    // Each target reads its fixed parameters up front and maps the swept variable.
    const std::map<std::string, std::pair<const char*, std::function<Fn()>>> targets{
        {"riemann-zeta", {"s", [&]() -> Fn { return [&](Complex s) { return hizeta::riemann_zeta(s, pol); }; }}},
        {"hurwitz-zeta", {"s", [&]() -> Fn {
             const Complex a = parse_point(o.z_arg, "--z");
             return [&, a](Complex s) { return hizeta::hurwitz_zeta(s, a, pol); };
         }}},
        {"barnes-zeta", {"s", [&]() -> Fn {
             const Complex z = parse_point(o.z_arg, "--z");
             auto omega = std::make_shared<hizeta::WeightVector>(parse_omega(o.omega_arg));
             return [&, z, omega](Complex s) { return hizeta::barnes_zeta(s, z, *omega, pol); };
         }}},
        {"multiple-gamma", {"z", [&]() -> Fn {
             auto omega = std::make_shared<hizeta::WeightVector>(parse_omega(o.omega_arg));
             return [&, omega](Complex z) { return hizeta::multiple_gamma(z, *omega, pol); };
         }}},
        {"multiple-sine", {"z", [&]() -> Fn {
             auto omega = std::make_shared<hizeta::WeightVector>(parse_omega(o.omega_arg));
             return [&, omega](Complex z) { return hizeta::multiple_sine(z, *omega, pol); };
         }}},
        {"higher-zeta", {"s", [&]() -> Fn {
             auto ctx = std::make_shared<hizeta::HigherZetaContext>(
                 hizeta::HigherZetaContext{parse_seq(o.seq_arg), o.prime_bound, pol});
             return [ctx](Complex s) { return hizeta::higher_zeta(s, *ctx); };
         }}},
        {"z-hat", {"s", [&]() -> Fn {
             auto omega = std::make_shared<hizeta::WeightVector>(parse_omega(o.omega_arg));
             return [&, omega](Complex s) { return hizeta::completed_Z_hat(s, *omega, pol); };
         }}},
        {"lambda-hat", {"s", [&]() -> Fn {
             auto omega = std::make_shared<hizeta::WeightVector>(parse_omega(o.omega_arg));
             return [&, omega](Complex s) { return hizeta::lambda_hat(s, *omega, pol); };
         }}},
        {"completed-zeta", {"s", [&]() -> Fn {
             return [&](Complex s) { return hizeta::completed_riemann_zeta(s, pol); };
         }}},
        {"dotted-product", {"z", [&]() -> Fn {
             auto spec = std::make_shared<hizeta::SequenceSpec>(parse_seq(o.seq_arg));
             return [&, spec](Complex z) { return hizeta::dotted_product(z, *spec, pol); };
         }}},
    };
    const auto it = targets.find(o.target);
    if (it == targets.end()) throw hizeta::ParseError("unknown eval target '" + o.target + "'");
    const std::string var = it->second.first;
    const auto pts = parse_points(var == "s" ? o.s_arg : o.z_arg, var == "s" ? "--s" : "--z");
    const Fn f = it->second.second();
    std::vector<std::vector<std::string>> rows;
    for (const auto& x : pts) {
        const Complex v = f(x);
        rows.push_back({num(x.real()), num(x.imag()), num(v.real()), num(v.imag())});
    }
    t.row({var + "_re", var + "_im", "val_re", "val_im"});
    for (const auto& r : rows) t.row(r);
    return 0;
}

int cmd_coeffs(const Options& o, Table& t) {
    if (o.n_max < 1) throw hizeta::ParseError("--n-max must be >= 1");
    const hizeta::HigherZetaContext ctx{parse_seq(o.seq_arg), o.prime_bound, policy(o)};
    const auto table = hizeta::dirichlet_coeffs(ctx, o.n_max);
    if (o.partial_sums)
        t.row({"n", "g_re", "g_im", "sum_re", "sum_im"});
    else
        t.row({"n", "g_re", "g_im"});
    Complex sum = 0.0;
    for (std::int64_t n = 1; n <= o.n_max; ++n) {
        sum += table[n];
        std::vector<std::string> r{std::to_string(n), num(table[n].real()), num(table[n].imag())};
        if (o.partial_sums) {
            r.push_back(num(sum.real()));
            r.push_back(num(sum.imag()));
        }
        t.row(r);
    }
    return 0;
}

int cmd_verify(const Options& o, Table& t) {
    hizeta::VerifyOptions v;
    v.pol = policy(o);
    v.nz = o.nz;
    v.prime_bound = o.prime_bound;
    if (o.n_max > 0) v.n_max = o.n_max;
    if (!o.omega_arg.empty()) v.weights = {parse_omega(o.omega_arg)};
    if (!o.seq_arg.empty()) v.spec = parse_seq(o.seq_arg);
    if (!o.zeros_path.empty()) v.zeros = hizeta::load_zeros(o.zeros_path);
    if (o.target == "aaa") {
        if (!o.z_arg.empty()) v.z = parse_point(o.z_arg, "--z");
        if (!o.s_arg.empty()) v.s = parse_point(o.s_arg, "--s");
        if (v.zeros && v.nz > v.zeros->count())
            throw hizeta::ParseError("--nz exceeds the zero table size " + std::to_string(v.zeros->count()));
    } else if (o.target == "ladder-gamma" || o.target == "ladder-sine") {
        if (!o.z_arg.empty()) v.points = parse_points(o.z_arg, "--z");
    } else if (!o.s_arg.empty()) {
        v.points = parse_points(o.s_arg, "--s");
    }
    const auto& names = hizeta::suite_names();
    if (std::find(names.begin(), names.end(), o.target) == names.end())
        throw hizeta::ParseError("unknown verification suite '" + o.target + "'");
    const auto rep = hizeta::run_suite(o.target, v);
    t.row({"point", "lhs_re", "lhs_im", "rhs_re", "rhs_im", "residual", "tolerance", "ok"});
    for (const auto& r : rep.rows)
        t.row({r.point, num(r.lhs.real()), num(r.lhs.imag()), num(r.rhs.real()), num(r.rhs.imag()),
               num(r.residual), num(r.tolerance), r.ok() ? "1" : "0"});
    return rep.passed() ? 0 : 1;
}

int cmd_zeros_import(const Options& o, Table& t) {
    if (o.zeros_path.empty()) throw hizeta::ParseError("missing --zeros");
    const auto table = hizeta::load_zeros(o.zeros_path);
    t.row({"index", "gamma"});
    for (std::size_t k = 0; k < table.count(); ++k) t.row({std::to_string(k + 1), num(table.gammas[k])});
    return 0;
}

int cmd_tauberian(const Options& o, Table& t) {
    const hizeta::HigherZetaContext ctx{parse_seq(o.seq_arg), o.prime_bound, policy(o)};
    const auto r = hizeta::tauberian_check(ctx, o.x);
    t.row({"x", "lhs", "rhs", "ratio", "c_re", "c_im", "K", "lambda0"});
    t.row({num(o.x), num(r.lhs), num(r.rhs), num(r.lhs / r.rhs), num(r.constant.c.real()),
           num(r.constant.c.imag()), std::to_string(r.constant.K), num(r.constant.lambda0)});
    return 0;
}

int fail(const std::string& kind, const std::string& what, int code) {
    std::cerr << "error:" << kind << ":" << what << '\n';
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Higher Riemann zeta, Barnes multiple zeta/gamma/sine and regularized products"};
    app.require_subcommand(1);
    Options o;

    auto precision = [&](CLI::App* sub) {
        sub->add_option("--eps", o.eps, "absolute/relative accuracy target")->capture_default_str();
        sub->add_option("--max-terms", o.max_terms, "series order cap")->capture_default_str();
        sub->add_option("--output", o.output, "output file (default stdout)");
        sub->add_option("--format", o.format, "csv or tsv")
            ->capture_default_str()
            ->check(CLI::IsMember({"csv", "tsv"}));
    };

    auto* eval = app.add_subcommand("eval", "evaluate a function at a point or over a grid");
    eval->add_option("target", o.target,
                     "hurwitz-zeta | riemann-zeta | barnes-zeta | multiple-gamma | multiple-sine | "
                     "higher-zeta | z-hat | lambda-hat | completed-zeta | dotted-product")
        ->required();
    eval->add_option("--s", o.s_arg, "s value(s): a, a,b,c or start:stop:step");
    eval->add_option("--z", o.z_arg, "z value(s)");
    eval->add_option("--omega", o.omega_arg, "weights, e.g. 1,2");
    eval->add_option("--seq", o.seq_arg, "sequence: list:a,b | ap:l=<c>[,offset=0|1] | lattice:w1,w2");
    precision(eval);

    auto* coeffs = app.add_subcommand("coeffs", "Dirichlet coefficients g(n)");
    coeffs->add_option("--seq", o.seq_arg, "sequence")->required();
    coeffs->add_option("--n-max", o.n_max, "largest n")->required();
    coeffs->add_flag("--partial-sums", o.partial_sums, "add cumulative sums");
    precision(coeffs);

    auto* verify = app.add_subcommand("verify", "run an identity suite");
    verify->add_option("suite", o.target,
                       "ladder-gamma | ladder-sine | ccc | telescope | ddd | lambda-product | aaa | "
                       "bbb | euler-dirichlet | zhat-symmetry")
        ->required();
    verify->add_option("--s", o.s_arg, "s point(s)");
    verify->add_option("--z", o.z_arg, "z point(s)");
    verify->add_option("--omega", o.omega_arg, "weights (default: (1), (2), (1,2))");
    verify->add_option("--seq", o.seq_arg, "sequence");
    verify->add_option("--zeros", o.zeros_path, "zero table file");
    verify->add_option("--nz", o.nz, "number of zeros used")->capture_default_str();
    verify->add_option("--prime-bound", o.prime_bound, "prime power cutoff")->capture_default_str();
    verify->add_option("--n-max", o.n_max, "Dirichlet series length");
    precision(verify);

    auto* zeros = app.add_subcommand("zeros-import", "validate and normalize a zero table");
    zeros->add_option("--zeros", o.zeros_path, "zero table file")->required();
    precision(zeros);

    auto* taub = app.add_subcommand("tauberian", "partial sums of g(n) against c x^{1-l0} log^{K-1} x");
    taub->add_option("--seq", o.seq_arg, "real sequence")->required();
    taub->add_option("--x", o.x, "x >= 100")->capture_default_str();
    precision(taub);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail("usage", e.what(), 2);
    }

    try {
        // Rows are buffered per command; nothing is written before the computation succeeds.
        std::ostringstream buffer;
        Table table(buffer, o.format == "tsv" ? '\t' : ',');
        int code = 0;
        if (*eval) code = cmd_eval(o, table);
        else if (*coeffs) code = cmd_coeffs(o, table);
        else if (*verify) code = cmd_verify(o, table);
        else if (*zeros) code = cmd_zeros_import(o, table);
        else code = cmd_tauberian(o, table);
        if (o.output.empty()) {
            std::cout << buffer.str();
        } else {
            std::ofstream file(o.output);
            if (!file) throw hizeta::ParseError("cannot open output file '" + o.output + "'");
            file << buffer.str();
        }
        return code;
    } catch (const hizeta::ParseError& e) {
        return fail(e.kind(), e.what(), 2);
    } catch (const hizeta::OrderError& e) {
        return fail(e.kind(), e.what(), 2);
    } catch (const hizeta::Error& e) {
        return fail(e.kind(), e.what(), 3);
    }
}
