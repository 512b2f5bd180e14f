// latred command line: generate instances, run the one-call reductions,
// verify against brute force, and trace the digit decomposition.
//
// Exit codes: 0 solved and verified, 1 solved but too large to verify,
// 2 pipeline inconsistency (broken oracle), 3 bad input.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "latred/latred.hpp"

namespace {

using namespace latred;

constexpr int kExitVerified = 0;
constexpr int kExitUnverifiable = 1;
constexpr int kExitInconsistent = 2;
constexpr int kExitBadInput = 3;

Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ContractViolation("cannot open instance file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ContractViolation(std::string("bad instance JSON: ") + e.what());
    }
    return instance_from_json(j);
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw ContractViolation("cannot open output file: " + path);
    out << text;
}

void emit_result(const ResultRecord& rec, const std::string& out_path) {
    std::string text = result_to_json(rec).dump(2) + "\n";
    if (out_path.empty())
        std::cout << text;
    else
        write_text(out_path, text);
}

void print_trace(const ReductionParams& prm, const Int& lambda_sq) {
    std::cout << "p  = " << to_decimal(prm.modulus) << "\n";
    std::cout << "a  =";
    for (unsigned long a : prm.exponents) std::cout << ' ' << a;
    std::cout << "\nM1 = " << to_decimal(prm.coeff_bound)
              << "\nM2 = " << to_decimal(prm.length_bound) << "\n";
    std::cout << "eps_" << prm.n + 1 << " has "
              << mpz_sizeinbase(prm.eps[prm.n].get_mpz_t(), 2) << " bits\n";

    std::size_t n = prm.n;
    const auto& a = prm.exponents;
    std::vector<Int> digits =
        balanced_decode(lambda_sq, prm.modulus, 2 * a[n] + 1);
    std::cout << "digit positions (position: role = value):\n";
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = i; j <= n; ++j) {
            std::size_t pos = a[i] + a[j];
            std::cout << "  " << pos << ": ";
            if (i == n && j == n)
                std::cout << "||Bx||^2";
            else if (j == n)
                std::cout << "2*c(x)*x_" << i + 1;
            else if (i == j)
                std::cout << "x_" << i + 1 << "^2";
            else
                std::cout << "2*x_" << i + 1 << "*x_" << j + 1;
            std::cout << " = " << to_decimal(digits[pos]) << "\n";
        }
}

// true -> verified, false -> instance too large for brute force
bool verify_svp(const Mat& B, const Vec& v, const Int& min_sq) {
    try {
        BruteAnswer truth = brute_svp(B, svp_minimizer_box(B));
        return truth.min_sq == min_sq && norm_sq(v) == min_sq ? true
               : throw DecodeError("verification failed: decoded answer is not optimal");
    } catch (const BoxLimitError&) {
        return false;
    }
}

bool verify_cvp(const Mat& B, const Vec& t, const Vec& w, const Int& dist_sq) {
    try {
        BruteAnswer truth = brute_cvp(B, t, cvp_minimizer_box(B, t));
        Vec d = w;
        for (std::size_t i = 0; i < d.size(); ++i) d[i] -= t[i];
        return truth.min_sq == dist_sq && norm_sq(d) == dist_sq
                   ? true
                   : throw DecodeError("verification failed: decoded answer is not optimal");
    } catch (const BoxLimitError&) {
        return false;
    }
}

int cmd_gen(std::size_t n, long max_entry, std::uint64_t seed, const std::string& out_path) {
    Instance inst = generate_instance(n, max_entry, seed);
    std::string text = instance_to_json(inst).dump(2) + "\n";
    if (out_path.empty())
        std::cout << text;
    else
        write_text(out_path, text);
    return kExitVerified;
}

int cmd_solve_svp(const std::string& path, const std::string& oracle_kind, bool trace,
                  const std::string& out_path) {
    Instance inst = load_instance(path);
    std::unique_ptr<SvpOracle> oracle;
    if (oracle_kind == "assisted")
        oracle = std::make_unique<AssistedSvpOracle>(inst.basis);
    else
        oracle = std::make_unique<EnumSvpOracle>();

    SvpReductionResult res = search_svp_via_opt(inst.basis, *oracle);
    if (trace) print_trace(res.params, norm_sq(mat_vec(construct_b_epsilon(inst.basis, res.params), res.x)));

    ResultRecord rec;
    rec.problem = "svp";
    rec.x = res.x;
    rec.v = res.v;
    rec.min_sq = res.lambda_sq;
    rec.oracle = oracle_kind;
    rec.oracle_calls = res.oracle_calls;
    rec.params = res.params;
    rec.verified = verify_svp(inst.basis, res.v, res.lambda_sq);
    emit_result(rec, out_path);
    return rec.verified ? kExitVerified : kExitUnverifiable;
}

int cmd_solve_cvp(const std::string& path, bool trace, const std::string& out_path) {
    Instance inst = load_instance(path);
    if (!inst.target) throw ContractViolation("solve-cvp: instance has no target");
    EnumCvpOracle oracle;
    CvpReductionResult res = search_cvp_via_opt(inst.basis, *inst.target, oracle);
    if (trace) {
        Mat b_eps = construct_b_epsilon(inst.basis, res.params.base);
        Vec st(inst.n);
        for (std::size_t i = 0; i < inst.n; ++i)
            st[i] = res.params.base.eps[inst.n] * (*inst.target)[i];
        Vec d = mat_vec(b_eps, res.x);
        for (std::size_t i = 0; i < inst.n; ++i) d[i] -= st[i];
        print_trace(res.params.base, norm_sq(d));
    }

    ResultRecord rec;
    rec.problem = "cvp";
    rec.x = res.x;
    rec.v = res.w;
    rec.min_sq = res.dist_sq;
    rec.oracle = "enum";
    rec.oracle_calls = res.oracle_calls;
    rec.params = res.params.base;
    rec.verified = verify_cvp(inst.basis, *inst.target, res.w, res.dist_sq);
    emit_result(rec, out_path);
    return rec.verified ? kExitVerified : kExitUnverifiable;
}

int cmd_params(std::size_t n, long max_entry) {
    ReductionParams prm = compute_params_for(n, Int(max_entry));
    std::cout << "n  = " << n << "\nM  = " << max_entry
              << "\nM1 = " << to_decimal(prm.coeff_bound)
              << "\nM2 = " << to_decimal(prm.length_bound)
              << "\np  = " << to_decimal(prm.modulus) << "\na  =";
    for (unsigned long a : prm.exponents) std::cout << ' ' << a;
    std::cout << "\neps_" << n + 1 << " bit-length = "
              << mpz_sizeinbase(prm.eps[n].get_mpz_t(), 2) << "\n";
    return kExitVerified;
}

int cmd_verify(const std::string& path) {
    Instance inst = load_instance(path);
    try {
        if (inst.target) {
            BruteAnswer ans = brute_cvp(inst.basis, *inst.target,
                                        cvp_minimizer_box(inst.basis, *inst.target));
            std::cout << "dist_sq = " << to_decimal(ans.min_sq) << "\nsolutions = "
                      << ans.solutions.size() << "\n";
        } else {
            BruteAnswer ans = brute_svp(inst.basis, svp_minimizer_box(inst.basis));
            std::cout << "lambda_sq = " << to_decimal(ans.min_sq) << "\nsolutions = "
                      << ans.solutions.size() << "\n";
        }
    } catch (const BoxLimitError& e) {
        std::cerr << "unverifiable: " << e.what() << "\n";
        return kExitUnverifiable;
    }
    return kExitVerified;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"one-call SVP/CVP oracle reductions over exact arithmetic"};
    app.require_subcommand(1);

    std::size_t n = 2;
    long max_entry = 3;
    std::uint64_t seed = 0;
    std::string out_path, instance_path, oracle_kind = "enum";
    bool trace = false;

    auto* gen = app.add_subcommand("gen", "generate a random nonsingular instance");
    gen->add_option("--n", n, "dimension")->required();
    gen->add_option("--max-entry", max_entry, "entry bound")->required();
    gen->add_option("--seed", seed, "RNG seed")->required();
    gen->add_option("--out", out_path, "output file (default stdout)");

    auto* ssvp = app.add_subcommand("solve-svp", "one-call search-SVP reduction");
    ssvp->add_option("instance", instance_path, "instance JSON")->required();
    ssvp->add_option("--oracle", oracle_kind, "oracle kind")
        ->check(CLI::IsMember({"enum", "assisted"}));
    ssvp->add_flag("--trace", trace, "print the digit decomposition");
    ssvp->add_option("--out", out_path, "result file (default stdout)");

    auto* scvp = app.add_subcommand("solve-cvp", "one-call search-CVP reduction");
    scvp->add_option("instance", instance_path, "instance JSON with target")->required();
    scvp->add_flag("--trace", trace, "print the digit decomposition");
    scvp->add_option("--out", out_path, "result file (default stdout)");

    auto* par = app.add_subcommand("params", "print reduction parameters for (n, M)");
    par->add_option("--n", n, "dimension")->required();
    par->add_option("--max-entry", max_entry, "entry bound")->required();

    auto* ver = app.add_subcommand("verify", "brute-force solve an instance");
    ver->add_option("instance", instance_path, "instance JSON")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitBadInput;
    }

    try {
        if (gen->parsed()) return cmd_gen(n, max_entry, seed, out_path);
        if (ssvp->parsed()) return cmd_solve_svp(instance_path, oracle_kind, trace, out_path);
        if (scvp->parsed()) return cmd_solve_cvp(instance_path, trace, out_path);
        if (par->parsed()) return cmd_params(n, max_entry);
        if (ver->parsed()) return cmd_verify(instance_path);
    } catch (const latred::DecodeError& e) {
        std::cerr << "inconsistency: " << e.what() << "\n";
        return kExitInconsistent;
    } catch (const latred::BoxLimitError& e) {
        std::cerr << "unverifiable: " << e.what() << "\n";
        return kExitUnverifiable;
    } catch (const latred::ContractViolation& e) {
        std::cerr << "bad input: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitBadInput;
}
