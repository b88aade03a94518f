// Command-line front end: verification suites, functor builds, parameter
// specialization, JSON export. All algebra lives in the library; this file
// only parses flags, dispatches, and writes reports.
//
// Exit codes: 0 all checks pass, 1 at least one relation violated,
// 2 usage or input error, 3 singular specialization.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "heckeforge/functor.hpp"
#include "heckeforge/json_io.hpp"
#include "heckeforge/verify_hecke.hpp"
#include "heckeforge/verify_quantum.hpp"

namespace {

using heckeforge::json;

constexpr int kExitPass = 0;
constexpr int kExitRelationViolated = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSingular = 3;

void write_output(const json& payload, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << payload.dump(2) << "\n";
        return;
    }
    std::ofstream os(out_path);
    if (!os) throw std::runtime_error("cannot open output file: " + out_path);
    os << payload.dump(2) << "\n";
}

int finish_report(const heckeforge::VerificationReport& rep, const std::string& out_path,
                  bool quiet) {
    write_output(rep.to_json(), out_path);
    if (!quiet) {
        for (const auto& e : rep.entries)
            std::cerr << (e.pass ? "  pass  " : "  FAIL  ") << e.relation << "\n";
        std::cerr << rep.subject << ": " << (rep.all_pass() ? "all checks passed" : "FAILURES")
                  << " (" << rep.entries.size() << " checks)\n";
    }
    return rep.all_pass() ? kExitPass : kExitRelationViolated;
}

json load_json_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw heckeforge::ParseError("cannot open input file: " + path);
    json j;
    is >> j;
    return j;
}

/// Parallelism cap from the environment; the library is sequential, so any
/// cap is honored. 0 means automatic.
int thread_cap() {
    const char* v = std::getenv("HECKE_FORGE_THREADS");
    if (!v) return 0;
    try {
        const int n = std::stoi(v);
        if (n < 0) throw std::invalid_argument("negative");
        return n;
    } catch (const std::exception&) {
        throw heckeforge::ParseError("HECKE_FORGE_THREADS must be a non-negative integer");
    }
}

heckeforge::RatFunc parse_scalar(const std::string& text) {
    using heckeforge::RatFunc;
    using heckeforge::Var;
    if (text == "q") return RatFunc::variable(Var::q);
    if (text == "eta") return RatFunc::variable(Var::eta);
    if (text == "u") return RatFunc::variable(Var::u);
    if (text == "a") return RatFunc::variable(Var::a);
    return RatFunc::from_rational(heckeforge::rational_from_string(text));
}

}  // namespace

int main(int argc, char** argv) {
    using namespace heckeforge;

    CLI::App app{"hecke-forge: exact verification of the modified affine Hecke algebra, "
                 "the Drinfeldian of type A, and the duality functor between them"};
    app.require_subcommand(1);

    std::string out_path;
    bool quiet = false;
    app.add_option("--out", out_path, "output file for the JSON report (default: stdout)");
    app.add_flag("--quiet", quiet, "suppress the per-check summary on stderr");

    // verify-hecke
    auto* vh = app.add_subcommand("verify-hecke", "defining relations of H^+_{q eta}(l)");
    int vh_l = 3;
    std::string vh_mode = "modified";
    unsigned long long vh_seed = 1729;
    int vh_triples = 100;
    vh->add_option("--l", vh_l, "algebra rank l (>= 2)")->required();
    vh->add_option("--mode", vh_mode,
                   "modified | classical_z | degenerate_q1 | symmetric_q1_eta0");
    vh->add_option("--seed", vh_seed, "seed for associativity sampling");
    vh->add_option("--triples", vh_triples, "number of associativity triples (>= 100)");

    // verify-uq
    auto* vu = app.add_subcommand("verify-uq", "defining relations of U_q(sl(n+1))");
    int vu_n = 2;
    vu->add_option("--n", vu_n, "rank n (>= 1)")->required();

    // verify-drinfeldian
    auto* vd = app.add_subcommand("verify-drinfeldian",
                                  "Drinfeldian relations DY19-DY28 in a representation");
    int vd_n = 2;
    std::string vd_in;
    vd->add_option("--n", vd_n, "rank n (>= 2); uses the evaluation representation");
    vd->add_option("--in", vd_in, "JSON file with a DrinfeldianRep to verify instead");

    // verify-yangian
    auto* vy = app.add_subcommand("verify-yangian", "Yangian relations at q = 1");
    int vy_n = 2;
    std::string vy_in;
    vy->add_option("--n", vy_n, "rank n (>= 2); uses the evaluation representation");
    vy->add_option("--in", vy_in, "JSON file with a DrinfeldianRep to verify instead");

    // verify-limits
    auto* vl = app.add_subcommand("verify-limits", "the limit square of the Drinfeldian");
    int vl_n = 2;
    vl->add_option("--n", vl_n, "rank n (>= 2)")->required();

    // build-functor
    auto* bf = app.add_subcommand("build-functor",
                                  "construct W_M = M x_{H_q(l)} V^{tensor l} with its action");
    std::string bf_module = "trivial";
    int bf_l = 2, bf_n = 2;
    std::string bf_a = "a";
    bool bf_verify = true;
    bf->add_option("--module", bf_module, "trivial | sign | path to a HeckeModule JSON file")
        ->required();
    bf->add_option("--l", bf_l, "Hecke rank l (>= 2)")->required();
    bf->add_option("--n", bf_n, "target rank n (>= 2)")->required();
    bf->add_option("--a", bf_a, "module parameter (rational or 'a' for symbolic)");
    bf->add_flag("--verify,!--no-verify", bf_verify,
                 "run verify-drinfeldian on the output (default on)");

    // specialize
    auto* sp = app.add_subcommand("specialize", "substitute parameters in a RatFunc JSON file");
    std::string sp_in;
    std::string sp_q, sp_eta, sp_u, sp_a;
    sp->add_option("--in", sp_in, "input JSON file holding a RatFunc")->required();
    sp->add_option("--q", sp_q, "rational value for q (non-zero)");
    sp->add_option("--eta", sp_eta, "rational value for eta");
    sp->add_option("--u", sp_u, "rational value for u");
    sp->add_option("--a", sp_a, "rational value for a");

    // export
    auto* ex = app.add_subcommand("export", "emit built-in objects as JSON");
    std::string ex_what = "module";
    std::string ex_module = "trivial";
    int ex_l = 2, ex_n = 2, ex_maxdeg = 0;
    ex->add_option("--what", ex_what, "module | eval-rep | basis")->required();
    ex->add_option("--module", ex_module, "trivial | sign (for --what module)");
    ex->add_option("--l", ex_l, "rank l");
    ex->add_option("--n", ex_n, "rank n");
    ex->add_option("--max-udeg", ex_maxdeg, "degree bound (for --what basis)");

    CLI11_PARSE(app, argc, argv);

    try {
        (void)thread_cap();  // validate the environment early

        if (*vh) {
            if (vh_l < 2) throw ParseError("--l must be >= 2");
            return finish_report(
                verify_aha(vh_l, aha_mode_from_string(vh_mode), vh_seed, vh_triples), out_path,
                quiet);
        }
        if (*vu) {
            if (vu_n < 1) throw ParseError("--n must be >= 1");
            return finish_report(verify_uq(vu_n), out_path, quiet);
        }
        if (*vd) {
            DrinfeldianRep rep = vd_in.empty() ? eval_rep(vd_n)
                                               : drinfeldian_from_json(load_json_file(vd_in));
            return finish_report(verify_drinfeldian(rep), out_path, quiet);
        }
        if (*vy) {
            DrinfeldianRep rep = vy_in.empty() ? eval_rep(vy_n)
                                               : drinfeldian_from_json(load_json_file(vy_in));
            return finish_report(verify_yangian(rep), out_path, quiet);
        }
        if (*vl) {
            return finish_report(verify_limit_square(vl_n), out_path, quiet);
        }
        if (*bf) {
            HeckeModule mod;
            if (bf_module == "trivial")
                mod = builtin_module(BuiltinModule::trivial, bf_l, parse_scalar(bf_a));
            else if (bf_module == "sign")
                mod = builtin_module(BuiltinModule::sign, bf_l, parse_scalar(bf_a));
            else
                mod = module_from_json(load_json_file(bf_module));
            if (mod.l != bf_l) throw ParseError("module rank differs from --l");

            FunctorResult res = build_functor(mod, bf_n);
            json bundle = to_json(res);
            bundle["module"] = to_json(mod);
            bundle["level_check"] = level_check(res.rep, bf_l);
            int code = kExitPass;
            if (bf_verify) {
                VerificationReport rep = verify_drinfeldian(res.rep);
                bundle["verification"] = rep.to_json();
                if (!rep.all_pass()) code = kExitRelationViolated;
                if (!quiet)
                    std::cerr << "build-functor: quotient dim " << res.quotient.dim
                              << (rep.all_pass() ? ", relations verified" : ", RELATION FAILURES")
                              << (res.level_warning ? " (warning: l > n)" : "") << "\n";
            }
            write_output(bundle, out_path);
            return code;
        }
        if (*sp) {
            const json j = load_json_file(sp_in);
            const RatFunc f = ratfunc_from_json(j);
            Bindings b;
            if (!sp_q.empty()) b.q = rational_from_string(sp_q);
            if (!sp_eta.empty()) b.eta = rational_from_string(sp_eta);
            if (!sp_u.empty()) b.u = rational_from_string(sp_u);
            if (!sp_a.empty()) b.a = rational_from_string(sp_a);
            const RatFunc r = f.specialize(b);
            write_output(to_json(r), out_path);
            return kExitPass;
        }
        if (*ex) {
            if (ex_what == "module") {
                const BuiltinModule kind =
                    ex_module == "sign" ? BuiltinModule::sign : BuiltinModule::trivial;
                write_output(to_json(builtin_module(kind, ex_l)), out_path);
            } else if (ex_what == "eval-rep") {
                write_output(to_json(eval_rep(ex_n)), out_path);
            } else if (ex_what == "basis") {
                json arr = json::array();
                for (const auto& m : enumerate_basis(ex_l, ex_maxdeg))
                    arr.push_back(json{{"upows", m.upows}, {"word", m.word}});
                write_output(json{{"l", ex_l}, {"max_udeg", ex_maxdeg}, {"basis", arr}}, out_path);
            } else {
                throw ParseError("unknown export target: " + ex_what);
            }
            return kExitPass;
        }
        throw ParseError("no subcommand selected");
    } catch (const SingularSpecialization& e) {
        std::cerr << "singular specialization: " << e.what() << "\n";
        return kExitSingular;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
