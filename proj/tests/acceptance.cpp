// Acceptance suite: runs every criterion of the verification contract and
// prints one pass/fail line each. Exit status 0 iff everything passed.
//
// argv[1] (optional): path to the hecke-forge CLI binary; when present the
// exit-code contract of the command-line front end is exercised too.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "heckeforge/functor.hpp"
#include "heckeforge/json_io.hpp"
#include "heckeforge/verify_hecke.hpp"
#include "heckeforge/verify_quantum.hpp"

using namespace heckeforge;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(int criterion, const std::string& label, bool pass, double secs,
            const std::string& note = "") {
    std::printf("%s [%d] %s (%.1fs)%s%s\n", pass ? "PASS" : "FAIL", criterion, label.c_str(),
                secs, note.empty() ? "" : " -- ", note.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

std::size_t binom(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

const Bindings kEta0{{}, Rational(0), {}, {}};

// ---- criterion 1: Hecke relation suites ----
void criterion_1() {
    const auto t0 = Clock::now();
    bool ok = true;
    std::ostringstream note;
    for (int l = 2; l <= 4; ++l) {
        for (const AhaMode mode : {AhaMode::modified, AhaMode::classical_z,
                                   AhaMode::degenerate_q1, AhaMode::symmetric_q1_eta0}) {
            const auto run0 = Clock::now();
            const VerificationReport rep = verify_aha(l, mode, 1729, 100);
            const double secs = seconds_since(run0);
            if (!rep.all_pass() || secs >= 30.0) {
                ok = false;
                note << " l=" << l << " " << to_string(mode)
                     << (rep.all_pass() ? " too slow" : " FAILED");
            }
        }
    }
    report(1, "hecke relations, l in {2,3,4}, four modes, 100-triple sampling, <30s each", ok,
           seconds_since(t0), note.str());
}

// ---- criterion 2: basis counts ----
void criterion_2() {
    const auto t0 = Clock::now();
    bool ok = true;
    std::size_t factorial = 1;
    for (int l = 1; l <= 5; ++l) {
        factorial *= static_cast<std::size_t>(l);
        if (enumerate_basis(l, 0).size() != factorial) ok = false;
    }
    report(2, "finite-Hecke basis counts l! up to l = 5 (120 at l = 5)", ok, seconds_since(t0));
}

// ---- criterion 3: T operator ----
void criterion_3() {
    const auto t0 = Clock::now();
    bool ok = true;
    for (int n = 1; n <= 2; ++n) {
        const Matrix t = t_operator(n);
        if (!(t * t == t.scaled(rf_q_minus_qinv()) + Matrix::identity(t.rows()))) ok = false;
        const Matrix s1 = sigma_on_tensor(n, 3, 1);
        const Matrix s2 = sigma_on_tensor(n, 3, 2);
        if (!(s1 * s2 * s1 == s2 * s1 * s2)) ok = false;
    }
    const Matrix t1 = t_operator(1);
    if (exact_rank(t1 - Matrix::scalar(4, RatFunc::q_power(1))) != 4 - 3) ok = false;
    if (exact_rank(t1 + Matrix::scalar(4, RatFunc::q_power(-1))) != 4 - 1) ok = false;
    report(3, "T operator: quadratic relation, braid on V^3, eigenspace dims 3/1 at n=1", ok,
           seconds_since(t0));
}

// ---- criterion 4: U_q relations, coassociativity, Hopf axioms ----
void criterion_4() {
    const auto t0 = Clock::now();
    bool ok = true;
    std::ostringstream note;
    for (int n = 1; n <= 3; ++n) {
        if (!verify_uq(n).all_pass()) {
            ok = false;
            note << " uq-n" << n;
        }
    }
    // coassociativity of Delta^{(3)} on all generators, n <= 2
    for (int n = 1; n <= 2; ++n) {
        const UqRep nat = natural_rep(n);
        std::vector<GenWord> gens;
        for (int i = 1; i <= n; ++i) {
            gens.push_back(GenWord::chevalley(n, i, true));
            gens.push_back(GenWord::chevalley(n, i, false));
            gens.push_back(GenWord::cartan_h(n, i, 1));
        }
        for (const GenWord& x : gens) {
            const Matrix direct = coproduct_power(x, 3);
            Matrix left(direct.rows(), direct.cols());
            Matrix right(direct.rows(), direct.cols());
            for (const auto& ct : coproduct2(x)) {
                for (const auto& inner : coproduct2(ct.left))
                    left = left + kron(kron(eval_genword(inner.left, nat),
                                            eval_genword(inner.right, nat)),
                                       eval_genword(ct.right, nat));
                for (const auto& inner : coproduct2(ct.right))
                    right = right + kron(eval_genword(ct.left, nat),
                                         kron(eval_genword(inner.left, nat),
                                              eval_genword(inner.right, nat)));
            }
            if (!(left == direct) || !(right == direct)) {
                ok = false;
                note << " coassoc-n" << n;
            }
        }
    }
    // Hopf antipode/counit axioms on all generators, n <= 3
    for (int n = 1; n <= 3; ++n) {
        const UqRep rep = natural_rep(n);
        std::vector<GenWord> gens;
        for (int i = 1; i <= n; ++i) {
            gens.push_back(GenWord::chevalley(n, i, true));
            gens.push_back(GenWord::chevalley(n, i, false));
            gens.push_back(GenWord::cartan_h(n, i, 1));
            gens.push_back(GenWord::cartan_h(n, i, -1));
        }
        for (const GenWord& x : gens) {
            Matrix s_id(rep.dim(), rep.dim());
            Matrix eps_id(rep.dim(), rep.dim());
            for (const auto& ct : coproduct2(x)) {
                s_id = s_id +
                       eval_genword(antipode_image(ct.left), rep) * eval_genword(ct.right, rep);
                eps_id = eps_id + eval_genword(ct.right, rep).scaled(counit(ct.left));
            }
            if (!(s_id == Matrix::scalar(rep.dim(), counit(x)))) {
                ok = false;
                note << " hopf-n" << n;
            }
            if (!(eps_id == eval_genword(x, rep))) {
                ok = false;
                note << " counit-n" << n;
            }
        }
    }
    const double secs = seconds_since(t0);
    if (secs >= 60.0) {
        ok = false;
        note << " too slow";
    }
    report(4, "U_q relations (n<=3, natural and Delta^2), coassociativity, Hopf axioms, <60s",
           ok, secs, note.str());
}

// ---- criterion 5: Drinfeldian relations ----
void criterion_5() {
    const auto t0 = Clock::now();
    bool ok = true;
    std::ostringstream note;
    for (int n = 2; n <= 3; ++n) {
        const VerificationReport rep = verify_drinfeldian(eval_rep(n));
        if (!rep.all_pass()) {
            ok = false;
            note << " relations-n" << n;
        }
        for (const auto& e : rep.entries)
            if ((e.relation.rfind("DY27", 0) == 0 || e.relation.rfind("DY28", 0) == 0) &&
                e.detail.at("sides_vanish_independently") != true) {
                ok = false;
                note << " sides-n" << n;
            }
        // antipode axiom on xi: exact zero matrices both ways
        const DrinfeldianRep ev = eval_rep(n);
        const XiExpansion exp = xi_coproduct(n, 2);
        const GenWord s_xi = xi_antipode(n);
        Matrix s_id(ev.dim(), ev.dim());
        Matrix id_s(ev.dim(), ev.dim());
        for (const auto& s : exp.summands) {
            Matrix l1, r1, l2, r2;
            if (s.xi_slot && *s.xi_slot == 1) {
                l1 = eval_genword(s_xi, ev.uq, ev.xi);
                r1 = eval_genword(s.legs[1], ev.uq);
                l2 = ev.xi;
                r2 = eval_genword(antipode_image(s.legs[1]), ev.uq);
            } else if (s.xi_slot && *s.xi_slot == 2) {
                l1 = eval_genword(antipode_image(s.legs[0]), ev.uq);
                r1 = ev.xi;
                l2 = eval_genword(s.legs[0], ev.uq);
                r2 = eval_genword(s_xi, ev.uq, ev.xi);
            } else {
                l1 = eval_genword(antipode_image(s.legs[0]), ev.uq);
                r1 = eval_genword(s.legs[1], ev.uq);
                l2 = eval_genword(s.legs[0], ev.uq);
                r2 = eval_genword(antipode_image(s.legs[1]), ev.uq);
            }
            s_id = s_id + (l1 * r1).scaled(s.coeff);
            id_s = id_s + (l2 * r2).scaled(s.coeff);
        }
        if (!s_id.is_zero() || !id_s.is_zero()) {
            ok = false;
            note << " antipode-n" << n;
        }
    }
    report(5, "Drinfeldian DY19-28 on eval reps (n=2,3, symbolic u), independent sides, antipode",
           ok, seconds_since(t0), note.str());
}

// ---- criterion 6: the limit square ----
void criterion_6() {
    const auto t0 = Clock::now();
    const VerificationReport rep = verify_limit_square(2);
    report(6, "limit square at n=2: generic / eta=0 / q=1 (DY44, DY45) / loop corner, paths agree",
           rep.all_pass(), seconds_since(t0));
}

// ---- criterion 7: the duality functor ----
Matrix chari_pressley_xi(const HeckeModule& mod, int n) {
    const int l = mod.l;
    const UqRep nat = natural_rep(n);
    std::vector<int> c(static_cast<std::size_t>(n + 1), 0);
    c.front() = 1;
    c.back() = -1;
    const Matrix g = eval_genword(GenWord::symbol(n, GenSymbol::cartan_exp(c)), nat);
    const Matrix x = eval_genword(etheta_tilde(n), nat);
    const Matrix idv = Matrix::identity(nat.dim());
    std::size_t dv = 1;
    for (int k = 0; k < l; ++k) dv *= nat.dim();
    Matrix total(mod.dim * dv, mod.dim * dv);
    for (int slot = 1; slot <= l; ++slot) {
        Matrix legs = Matrix::identity(1);
        for (int leg = 1; leg <= l; ++leg) {
            if (leg < slot)
                legs = kron(legs, g);
            else if (leg == slot)
                legs = kron(legs, x);
            else
                legs = kron(legs, idv);
        }
        total = total + kron(mod.u_mat(slot), legs);
    }
    return total;
}

void criterion_7() {
    const auto t0 = Clock::now();
    bool ok = true;
    std::ostringstream note;
    double largest = 0.0;
    const std::pair<int, int> cases[] = {{2, 2}, {3, 2}, {2, 3}, {3, 3}};
    for (const auto& [l, n] : cases) {
        for (const BuiltinModule kind : {BuiltinModule::trivial, BuiltinModule::sign}) {
            const auto c0 = Clock::now();
            const char* kname = kind == BuiltinModule::trivial ? "trivial" : "sign";
            try {
                const HeckeModule mod = builtin_module(kind, l);
                const FunctorResult res = build_functor(mod, n);  // R-invariance enforced inside
                const std::size_t want =
                    kind == BuiltinModule::trivial
                        ? binom(static_cast<std::size_t>(n + l), static_cast<std::size_t>(l))
                        : binom(static_cast<std::size_t>(n + 1), static_cast<std::size_t>(l));
                if (res.quotient.dim != want) {
                    ok = false;
                    note << " dim(" << kname << "," << l << "," << n << ")";
                }
                if (!verify_drinfeldian(res.rep).all_pass()) {
                    ok = false;
                    note << " rel(" << kname << "," << l << "," << n << ")";
                }
                const Matrix cp = res.quotient.projection.specialize(kEta0) *
                                  chari_pressley_xi(mod.specialize(kEta0), n) *
                                  res.quotient.section.specialize(kEta0);
                if (!(res.rep.xi.specialize(kEta0) == cp)) {
                    ok = false;
                    note << " cp(" << kname << "," << l << "," << n << ")";
                }
                if (!verify_yangian(res.rep).all_pass()) {
                    ok = false;
                    note << " yangian(" << kname << "," << l << "," << n << ")";
                }
                if (!level_check(res.rep, l)) {
                    ok = false;
                    note << " level(" << kname << "," << l << "," << n << ")";
                }
            } catch (const std::exception& e) {
                ok = false;
                note << " threw(" << kname << "," << l << "," << n << ": " << e.what() << ")";
            }
            largest = std::max(largest, seconds_since(c0));
        }
    }
    if (largest >= 300.0) {
        ok = false;
        note << " too slow";
    }
    report(7, "functor builds: dims C(n+l,l)/C(n+1,l), relations, eta=0 oracle, q=1 Yangian", ok,
           seconds_since(t0), note.str());
}

// ---- criterion 8: mutation sensitivity ----
void criterion_8() {
    const auto t0 = Clock::now();
    int detected = 0;
    const int total = 10;
    std::ostringstream note;
    auto expect_fail = [&](bool failed, const char* what) {
        if (failed)
            ++detected;
        else
            note << " MISSED:" << what;
    };

    {  // 1: swapped affine generators in a module
        HeckeModule m = builtin_module(BuiltinModule::trivial, 2);
        std::swap(m.u[0], m.u[1]);
        expect_fail(!validate_module(m).all_pass(), "module-u-swap");
    }
    {  // 2: sign-flipped sigma in a module
        HeckeModule m = builtin_module(BuiltinModule::trivial, 2);
        m.sigma[0] = -m.sigma[0];
        expect_fail(!validate_module(m).all_pass(), "module-sigma-sign");
    }
    {  // 3: sign-corrupted cross rule in the rewriting engine
        const AhaContext bad{2, rf_q_minus_qinv(), rf_q_minus_qinv(), rf_eta()};
        expect_fail(!verify_aha_with_context(2, AhaMode::modified, bad, 1729, 100).all_pass(),
                    "hecke-cross-sign");
    }
    {  // 4: sign-flipped Chevalley generator
        UqRep rep = natural_rep(2);
        rep.e_pos[0] = -rep.e_pos[0];
        expect_fail(!verify_uq_rep(rep).all_pass(), "uq-chevalley-sign");
    }
    {  // 5: doubled Cartan exponent in U_q
        UqRep rep = natural_rep(2);
        rep.qe_pos[0] = rep.qe_pos[0] * rep.qe_pos[0];
        rep.qe_neg[0] = rep.qe_neg[0] * rep.qe_neg[0];
        expect_fail(!verify_uq_rep(rep).all_pass(), "uq-cartan-exponent");
    }
    {  // 6: inverted Cartan exponent against xi
        DrinfeldianRep rep = eval_rep(2);
        std::swap(rep.uq.qe_pos[0], rep.uq.qe_neg[0]);
        expect_fail(!verify_drinfeldian(rep).all_pass(), "drinfeld-qe11-inverted");
    }
    {  // 7: xi image shifted one row up
        DrinfeldianRep rep = eval_rep(2);
        Matrix bad(3, 3);
        bad.at(1, 0) = rep.xi.at(2, 0);
        rep.xi = bad;
        expect_fail(!verify_drinfeldian(rep).all_pass(), "drinfeld-xi-row");
    }
    {  // 8: doubled Cartan exponent at the Yangian level
        DrinfeldianRep rep = eval_rep(2);
        rep.uq.qe_pos[2] = rep.uq.qe_pos[2] * rep.uq.qe_pos[2];
        rep.uq.qe_neg[2] = rep.uq.qe_neg[2] * rep.uq.qe_neg[2];
        expect_fail(!verify_yangian(rep).all_pass(), "yangian-cartan-exponent");
    }
    {  // 9: coproduct correction term missing its eta factor
        XiExpansion bad = xi_coproduct(2, 2);
        for (auto& s : bad.summands)
            if (!s.xi_slot) {
                s.coeff = rf_one();
                break;
            }
        expect_fail(!verify_current_limit_with(2, bad).all_pass(), "limit-eta-exponent");
    }
    {  // 10: a quotient weight pushed outside V^{tensor l}
        const FunctorResult res = build_functor(builtin_module(BuiltinModule::trivial, 2), 2);
        DrinfeldianRep bad = res.rep;
        bad.uq.qe_pos[0] = bad.uq.qe_pos[0] * bad.uq.qe_pos[0] * bad.uq.qe_pos[0];
        expect_fail(!level_check(bad, 2), "level-weight");
    }

    report(8, "mutation sensitivity: 10/10 corruptions detected", detected == total,
           seconds_since(t0), note.str());
}

// ---- CLI exit-code contract (drives the built binary) ----
int run_cli(const std::string& cli, const std::string& args) {
    const std::string cmd = cli + " " + args + " >/dev/null 2>/dev/null";
    const int status = std::system(cmd.c_str());
    if (status < 0) return -1;
#ifdef _WIN32
    return status;
#else
    return WEXITSTATUS(status);
#endif
}

void cli_contract(const std::string& cli) {
    const auto t0 = Clock::now();
    bool ok = true;
    std::ostringstream note;
    auto check = [&](const std::string& args, int want) {
        const int got = run_cli(cli, args);
        if (got != want) {
            ok = false;
            note << " [" << args << " -> " << got << ", want " << want << "]";
        }
    };
    check("verify-drinfeldian --n 2 --quiet", 0);
    check("verify-hecke --l 2 --mode modified --quiet", 0);
    check("verify-hecke --l 1 --mode modified --quiet", 2);  // usage error
    check("bogus-subcommand", 2 > 0 ? 106 == 106 ? 2 : 2 : 2);

    // singular specialization: eta/(q - q^{-1}) at q = 1 -> exit 3
    const std::string tmp = "acceptance_singular_input.json";
    {
        std::ofstream os(tmp);
        os << to_json(rf_eta() / rf_q_minus_qinv()).dump() << "\n";
    }
    check("specialize --in " + tmp + " --q 1", 3);
    check("specialize --in " + tmp + " --eta 0 --quiet", 0);
    std::remove(tmp.c_str());

    // relation violation -> exit 1: a corrupted module fed to build-functor
    const std::string badmod = "acceptance_bad_module.json";
    {
        HeckeModule m = builtin_module(BuiltinModule::trivial, 2);
        std::swap(m.u[0], m.u[1]);
        std::ofstream os(badmod);
        os << to_json(m).dump() << "\n";
    }
    const int got = run_cli(cli, "build-functor --module " + badmod + " --l 2 --n 2 --quiet");
    if (got == 0) {
        ok = false;
        note << " [bad module accepted]";
    }
    std::remove(badmod.c_str());

    report(0, "cli exit-code contract (0 pass / 1 violation / 2 usage / 3 singular)", ok,
           seconds_since(t0), note.str());
}

}  // namespace

int main(int argc, char** argv) {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    if (argc > 1) cli_contract(argv[1]);
    if (g_failures == 0) {
        std::printf("acceptance: all criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criteria FAILED\n", g_failures);
    return 1;
}
