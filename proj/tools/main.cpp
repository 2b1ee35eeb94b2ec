#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "cyclocode/characters.hpp"
#include "cyclocode/error.hpp"
#include "cyclocode/jacobi.hpp"
#include "cyclocode/theory.hpp"
#include "report.hpp"
#include "verify.hpp"

using namespace cyclocode;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMismatch = 2;

struct SpecArgs {
    u64 p = 0;
    unsigned e = 1;
    unsigned k = 0;
    u64 e1 = 1;
    u64 e2 = 1;

    void add_to(CLI::App* cmd) {
        cmd->add_option("-p", p, "characteristic")->required();
        cmd->add_option("-e", e, "q = p^e")->default_val(1);
        cmd->add_option("-k", k, "extension degree")->required();
        cmd->add_option("--e1", e1, "exponent on the base-field part")->default_val(1);
        cmd->add_option("--e2", e2, "exponent on the trace part")->default_val(1);
    }
};

std::string format_complex(cplx z) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(6) << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag())
       << "i";
    return os.str();
}

int print_checks(const std::vector<cli::Check>& checks, int& failures) {
    for (const auto& c : checks) {
        std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
        if (!c.pass) ++failures;
    }
    return static_cast<int>(checks.size());
}

int cmd_weights(const SpecArgs& a, const std::string& method, bool dual, bool enumerator, unsigned threads,
                const std::vector<i64>& cubic, const std::vector<i64>& quartic) {
    const CodeSpec spec = validate_spec(a.p, a.e, a.k, a.e1, a.e2);
    cli::RunOptions opt{cli::parse_method(method), threads, dual, {}};
    if (!cubic.empty()) opt.theory.cubic_jacobi = EisensteinInt{cubic[0], cubic[1]};
    if (!quartic.empty()) opt.theory.quartic_jacobi = GaussianInt{quartic[0], quartic[1]};
    const cli::RunReport r = cli::run(spec, opt);
    if (enumerator) {
        std::cout << r.distribution.enumerator() << "\n";
    } else {
        std::cout << cli::to_json(r).dump(2) << "\n";
    }
    if (r.verdict && *r.verdict != "match") {
        std::cerr << "mismatch: " << r.difference << "\n";
        return kExitMismatch;
    }
    return kExitOk;
}

int cmd_verify(const std::string& sweep, bool dual, unsigned threads) {
    int failures = 0;
    int total = 0;
    if (sweep.empty()) {
        total += print_checks(cli::property_checks(), failures);
        const auto ex = cli::example_checks(threads);
        total += print_checks(ex, failures);
        int matched = 0;
        for (const auto& c : ex) matched += c.pass ? 1 : 0;
        if (dual) total += print_checks(cli::dual_checks(), failures);
        std::cout << matched << "/" << ex.size() << " registered codes match\n";
    } else {
        const auto checks = cli::sweep_checks(cli::parse_sweep(sweep), threads);
        total += print_checks(checks, failures);
    }
    std::cout << (total - failures) << "/" << total << " checks pass\n";
    return failures == 0 ? kExitOk : kExitMismatch;
}

int cmd_gauss(u64 p, unsigned e, std::vector<u64> orders) {
    const BaseField f(p, e);
    if (orders.empty()) {
        for (u64 m = 2; m <= f.order(); ++m) {
            if (f.order() % m == 0 && m <= 12) orders.push_back(m);
        }
    }
    std::cout << "q = " << f.q() << "\n";
    for (u64 m : orders) {
        const CharSpec c(f.order(), m);  // throws OrderNotDividing
        const ComplexApprox g = gauss_sum(f, c);
        const double q = static_cast<double>(f.q());
        if (std::abs(std::norm(g.value) - q) > g.tol * q) {
            throw Error(ErrorCode::InvariantViolation, "|G|^2 != q for order " + std::to_string(m));
        }
        std::cout << "order " << m << ": G = " << format_complex(g.value) << "  |G|^2 = " << std::setprecision(10)
                  << std::norm(g.value) << "\n";
        if (m == 2) {
            const QuadraticGauss exact = gauss_quadratic_exact(p, e);
            if (!g.near(exact.value())) throw Error(ErrorCode::InvariantViolation, "quadratic closed form disagrees");
            std::cout << "  exact: " << (exact.sign < 0 ? "-" : "") << (exact.imaginary ? "i*" : "") << "sqrt("
                      << f.q() << ")\n";
        }
    }
    return kExitOk;
}

int cmd_jacobi(u64 q) {
    const auto pe = prime_power(q);
    if (!pe) throw Error(ErrorCode::NonPrime, std::to_string(q) + " is not a prime power");
    const BaseField f(pe->first, pe->second);
    bool any = false;
    if (f.order() % 3 == 0) {
        any = true;
        const EisensteinInt j = jacobi_cubic(f);
        const CubicAB ab = cubic_AB(f);
        const auto all = cubic_AB_search(q);
        bool found = false;
        for (const auto& x : all) found = found || (x.A == ab.A && x.B == ab.B);
        if (!found) throw Error(ErrorCode::InvariantViolation, "(A, B) not among the solutions of 4q = A^2 + 27B^2");
        std::cout << "cubic J = " << j << "\n";
        std::cout << "A=" << ab.A << " B=" << ab.B << "  (4q = A^2 + 27B^2 = " << 4 * q << ")\n";
    }
    if (f.order() % 4 == 0) {
        any = true;
        const GaussianInt j = jacobi_quartic(f);
        const GaussianInt mn = quartic_decompose(f);
        std::cout << "quartic J = " << j << "\n";
        std::cout << "m=" << mn.m << " n=" << mn.n << "  (q = m^2 + n^2)\n";
    }
    if (!any) throw Error(ErrorCode::OrderNotDividing, "neither 3 nor 4 divides q-1 = " + std::to_string(f.order()));
    return kExitOk;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += (c == '"') ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

int cmd_table(int id, u64 p, unsigned e, std::optional<unsigned> k) {
    const TableTemplate t = evaluate_table(id, p, e, k);
    std::map<i64, std::pair<int, u64>> shared;
    for (const auto& r : t.rows) {
        ++shared[r.weight].first;
        shared[r.weight].second += r.frequency;
    }
    std::cout << "# template " << t.id << ": " << t.hypothesis << ", q=" << t.q << " k=" << t.k << "\n";
    std::cout << "weight,frequency,label,merge\n";
    for (const auto& r : t.rows) {
        const auto& [count, total] = shared[r.weight];
        std::string merge = "-";
        if (count > 1) merge = "merged x" + std::to_string(count) + " total " + std::to_string(total);
        std::cout << r.weight << "," << r.frequency << "," << csv_field(r.label) << "," << merge << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weight distributions of two-term cyclic codes over finite fields"};
    app.require_subcommand(1);

    unsigned threads = cli::default_threads();

    SpecArgs wargs;
    std::string method = "both";
    bool wdual = false, enumerator = false;
    auto* weights = app.add_subcommand("weights", "Weight distribution by brute force, closed form, or both");
    wargs.add_to(weights);
    weights->add_option("--method", method, "brute | theory | both")
        ->check(CLI::IsMember({"brute", "theory", "both"}))
        ->default_val("both");
    weights->add_flag("--dual", wdual, "probe the dual minimum distance");
    weights->add_flag("--enumerator", enumerator, "print 1+A_w z^w+... instead of JSON");
    weights->add_option("--threads", threads, "enumeration threads (0 = all cores)");
    std::vector<i64> cubic, quartic;
    weights->add_option("--cubic-jacobi", cubic, "a,b: use a + b*omega as the cubic Jacobi sum")
        ->expected(2)
        ->delimiter(',');
    weights->add_option("--quartic-jacobi", quartic, "m,n: use m + n*i as the quartic Jacobi sum")
        ->expected(2)
        ->delimiter(',');

    std::string sweep;
    bool vdual = false;
    auto* verify = app.add_subcommand("verify", "Property checks and registered-code comparison");
    verify->add_option("--sweep", sweep, "q=Q,k=K,e-max=E: compare every valid (e1, e2) with d <= 4");
    verify->add_flag("--dual", vdual, "also probe dual distance of d = 1 codes");
    verify->add_option("--threads", threads, "enumeration threads (0 = all cores)");

    u64 gp = 0;
    unsigned ge = 1;
    std::vector<u64> orders;
    auto* gauss = app.add_subcommand("gauss", "Gauss sums over GF(p^e)");
    gauss->add_option("-p", gp, "characteristic")->required();
    gauss->add_option("-e", ge, "q = p^e")->default_val(1);
    gauss->add_option("--order", orders, "character orders (default: divisors of q-1 up to 12)");

    u64 jq = 0;
    auto* jacobi = app.add_subcommand("jacobi", "Cubic and quartic Jacobi sums and their decompositions");
    jacobi->add_option("-q", jq, "field size")->required();

    int tid = 0;
    u64 tp = 0;
    unsigned te = 1;
    std::optional<unsigned> tk;
    auto* table = app.add_subcommand("table", "Evaluate a weight template at a given q as CSV");
    table->add_option("id", tid, "template id, 1-20")->required();
    table->add_option("-p", tp, "characteristic")->required();
    table->add_option("-e", te, "q = p^e")->default_val(1);
    table->add_option("-k", tk, "extension degree, for templates without a fixed k");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*weights) return cmd_weights(wargs, method, wdual, enumerator, threads, cubic, quartic);
        if (*verify) return cmd_verify(sweep, vdual, threads);
        if (*gauss) return cmd_gauss(gp, ge, orders);
        if (*jacobi) return cmd_jacobi(jq);
        if (*table) return cmd_table(tid, tp, te, tk);
    } catch (const Error& e) {
        std::cerr << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
        return e.code() == ErrorCode::Mismatch || e.code() == ErrorCode::MomentMismatch ? kExitMismatch : kExitUsage;
    }
    return kExitUsage;
}
