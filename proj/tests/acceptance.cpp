// Acceptance gate: one pass/fail line per criterion, nonzero exit if any
// fails.  argv[1] is the path to the CLI binary (used by criterion 9).

#include "bimtoep/io.hpp"
#include "bimtoep/report.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>

using namespace bimtoep;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void verdict(int num, const std::string& what, bool ok, const std::string& detail) {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << num << ": " << what << " (" << detail
              << ")\n";
    if (!ok) ++failures;
}

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", x);
    return buf;
}

// 1. axiom suite on every builtin, levels |n| <= 4, residuals < 1e-9, < 30 s
void criterion1() {
    auto t0 = Clock::now();
    double worst = 0;
    for (const auto& name : builtin_model_names()) {
        Model m = builtin_model(name);
        for (int n = -4; n <= 4; ++n) {
            ValidationReport rep = validate_bimodule(*m.ladder->level(n), 1e-9);
            for (const auto& c : rep.checks) worst = std::max(worst, c.pass ? c.residual : 1.0);
        }
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    verdict(1, "bimodule axioms on all builtins, levels |n| <= 4", worst < 1e-9 && secs < 30.0,
            "max residual " + fmt(worst) + ", " + fmt(secs) + " s");
}

// 2. scalar model N=4: is_toeplitz vs the entrywise condition on 200 matrices
void criterion2() {
    Model m = builtin_model("scalar", 4);
    const int N = 4;
    Rng rng(2);
    int disagreements = 0;
    for (int trial = 0; trial < 200; ++trial) {
        OperatorMatrix M(m.ladder, N);
        std::map<int, Complex> diag;
        for (int k = -2 * N; k <= 2 * N; ++k) diag[k] = random_coeffs(1, rng)(0);
        for (int i = -N; i <= N; ++i)
            for (int j = -N; j <= N; ++j)
                M.set_block(i, j, diag[i - j] * Matrix::Identity(1, 1));
        if (trial >= 100) {
            int i = static_cast<int>(rng() % (2 * N + 1)) - N;
            int j = static_cast<int>(rng() % (2 * N + 1)) - N;
            M.set_block(i, j, M.block(i, j) + Complex(0.05, 0.02) * Matrix::Identity(1, 1));
        }
        bool entrywise = true;
        for (int i = -N + 1; i <= N; ++i)
            for (int j = -N + 1; j <= N; ++j)
                entrywise = entrywise && (M.block(i, j) - M.block(i - 1, j - 1)).norm() <= 1e-8;
        if (is_toeplitz(M, 1e-8).is_toeplitz != entrywise) ++disagreements;
    }
    verdict(2, "classical reduction on the scalar model, 200 matrices", disagreements == 0,
            std::to_string(disagreements) + " disagreements");
}

// 3. alpha_shift(T^n_eta) = T^{n-1}_eta for |n|,|m| <= 3, 50 eta each
void criterion3() {
    Rng rng(3);
    double worst = 0;
    for (const auto& name : builtin_model_names()) {
        Model m = builtin_model(name);
        const auto& L = m.ladder;
        for (int n = -3; n <= 3; ++n)
            for (int mm = -3; mm <= 3; ++mm)
                for (int s = 0; s < 50; ++s) {
                    Vector eta = random_coeffs(L->level_dim(mm - n), rng);
                    AdjointableMap T = creation_left(L, mm - n, eta, n);
                    worst = std::max(
                        worst, (alpha_shift(T) - creation_left(L, mm - n, eta, n - 1)).norm());
                }
    }
    verdict(3, "alpha-shift axiom, |n|,|m| <= 3, 50 symbols each", worst < 1e-9,
            "max residual " + fmt(worst));
}

// 4. H/J round trips on 100 random adjointable maps per model
void criterion4() {
    Rng rng(4);
    double worst = 0;
    for (const auto& name : builtin_model_names()) {
        Model m = builtin_model(name);
        for (int s = 0; s < 100; ++s) {
            int n = static_cast<int>(rng() % 5) - 2;
            int p = static_cast<int>(rng() % 5) - 2;
            AdjointableMap T = random_adjointable(m.ladder, n, n + p, rng);
            worst = std::max(worst, (multiplier_H(multiplier_J(T), n) - T).norm());
            AdjointableMap phi = random_adjointable(m.ladder, 0, p, rng);
            worst = std::max(worst, (multiplier_J(multiplier_H(phi, n)) - phi).norm());
        }
    }
    verdict(4, "multiplier round trips H(J(T)) = T and J(H(phi)) = phi", worst < 1e-9,
            "max residual " + fmt(worst));
}

// 5. rstar + creation adjoint formulas on 100 tuples per model; isometry
void criterion5() {
    Rng rng(5);
    double worst = 0;
    for (const auto& name : builtin_model_names()) {
        Model m = builtin_model(name);
        const auto& L = m.ladder;
        for (int s = 0; s < 100; ++s) {
            int n = static_cast<int>(rng() % 5) - 2;
            Vector y0 = random_coeffs(L->level_dim(1), rng);
            Vector y = random_coeffs(L->level_dim(1), rng);
            Vector z = random_coeffs(L->level_dim(n), rng);

            // (T_{y0})*(y (x) z) = <y0,y>_R z  and  ||T_{y0}|| = ||y0||
            AdjointableMap T = creation_left(L, 1, y0, n);
            worst = std::max(worst, std::abs(T.norm() - L->level(1)->module_norm(y0)));
            Vector lhs = adjoint(T).apply(L->contract(1, n, y, z));
            Vector rhs = L->level(n)->act_left(L->level(1)->inner_R(y0, y), z);
            worst = std::max(worst, (lhs - rhs).norm());

            // (R_{z0})*(y (x) z) = y <z,z0>_L
            Vector z0 = random_coeffs(L->level_dim(1), rng);
            AdjointableMap R = creation_right(L, 1, z0, n);
            Vector l2 = adjoint_left(R).apply(L->contract(n, 1, z, y0));
            Vector r2 = L->level(n)->act_right(z, L->level(1)->inner_L(y0, z0));
            worst = std::max(worst, (l2 - r2).norm());

            // Eq. (rstar): (R_w)*(eta) (x) v = eta <w,v>_R  for w, v in level n
            Vector w = random_coeffs(L->level_dim(n), rng);
            Vector v = random_coeffs(L->level_dim(n), rng);
            Vector eta = random_coeffs(L->level_dim(n + 1), rng);
            AdjointableMap Rw = creation_right(L, n, w, 1);
            Vector l3 = L->contract(1, n, adjoint_left(Rw).apply(eta), v);
            Vector r3 = L->level(n + 1)->act_right(eta, L->level(n)->inner_R(w, v));
            worst = std::max(worst, (l3 - r3).norm());
        }
    }
    verdict(5, "rstar, creation adjoints, and isometry", worst < 1e-9,
            "max residual " + fmt(worst));
}

// 6. Toeplitz forward: lambda of 50 sections with support in [-2,2], N=4
void criterion6() {
    Rng rng(6);
    double worst = 0;
    for (const auto& name : builtin_model_names()) {
        Model m = builtin_model(name, 4);
        for (int s = 0; s < 50; ++s) {
            CrossSection f = random_section(m.ladder, 2, rng);
            ToeplitzCheck tc = is_toeplitz(lambda_rep(f, 4), 1e-8);
            worst = std::max(worst, tc.max_residual);
            if (!tc.is_toeplitz) worst = std::max(worst, 1.0);
        }
    }
    verdict(6, "lambda sections are Toeplitz, support [-2,2], N = 4", worst < 1e-9,
            "max interior residual " + fmt(worst));
}

// 7. converse at desk scale: synthesis round trip, probe seminorms at full
// radius, and rejection of perturbed matrices by the spread diagnostic
void criterion7() {
    Rng rng(7);
    double round_trip = 0, probe_worst = 0, min_spread = 1.0;
    for (const auto& name : builtin_model_names()) {
        Model m = builtin_model(name, 2);
        const int N = 2, R = m.ladder->range();
        for (int s = 0; s < 10; ++s) {
            CrossSection f = random_section(m.ladder, N, rng);
            OperatorMatrix M = lambda_rep(f, N);
            SynthesisResult syn = synthesize_section(M, R, 1e-8);
            round_trip = std::max(round_trip, (syn.section - f).norm());
            if (!syn.consistent) round_trip = std::max(round_trip, 1.0);

            // alpha-consistent diagonals across the whole window, full radius
            CrossSection g = random_section(m.ladder, R, rng);
            OperatorMatrix Mg = lambda_rep(g, N);
            SynthesisResult syng = synthesize_section(Mg, R, 1e-8);
            for (int j = -N; j <= N; ++j) {
                Vector v = random_coeffs(m.ladder->level_dim(j), rng);
                for (double p : convergence_report(Mg, syng.section, {{j, v}}))
                    probe_worst = std::max(probe_worst, p);
            }

            // a relative 1e-3 shift of one block along the creation space
            // must blow up the diagonal spread
            Vector eta = f.get(1);
            eta(0) += 1e-3 * m.ladder->level(1)->module_norm(eta);
            M.set_block(1, 0, creation_left(m.ladder, 1, eta, 0).mat);
            min_spread = std::min(min_spread, synthesize_section(M, R, 1e-8).max_spread);
        }
    }
    bool ok = round_trip < 1e-9 && probe_worst < 1e-8 && min_spread > 1e-4;
    verdict(7, "synthesis round trip, probe seminorms, spread rejection", ok,
            "round trip " + fmt(round_trip) + ", probes " + fmt(probe_worst) + ", min spread " +
                fmt(min_spread));
}

// 8. Fell-bundle *-algebra laws and lambda multiplicativity off the edge
void criterion8() {
    Rng rng(8);
    double worst = 0, mult_worst = 0;
    for (const auto& name : builtin_model_names()) {
        Model m = builtin_model(name, 2);
        CrossSection unit = CrossSection::delta_unit(m.ladder);
        const int N = 2, sup = 1;
        for (int s = 0; s < 50; ++s) {
            CrossSection f = random_section(m.ladder, sup, rng);
            CrossSection g = random_section(m.ladder, sup, rng);
            CrossSection h = random_section(m.ladder, sup, rng);
            worst = std::max(
                worst, (convolve(convolve(f, g), h) - convolve(f, convolve(g, h))).norm());
            worst = std::max(worst, (convolve(unit, f) - f).norm());
            worst = std::max(worst, (convolve(f, unit) - f).norm());
            worst = std::max(
                worst, (involute(convolve(f, g)) - convolve(involute(g), involute(f))).norm());

            OperatorMatrix P = lambda_rep(f, N).compose(lambda_rep(g, N));
            OperatorMatrix Q = lambda_rep(convolve(f, g), N);
            for (int i = -N; i <= N; ++i)
                for (int j = -N + sup; j <= N - sup; ++j)
                    mult_worst =
                        std::max(mult_worst, (P.block_map(i, j) - Q.block_map(i, j)).norm());
        }
    }
    bool ok = worst < 1e-9 && mult_worst < 1e-9;
    verdict(8, "convolution *-algebra and lambda multiplicativity", ok,
            "algebra " + fmt(worst) + ", multiplicativity " + fmt(mult_worst));
}

// 9. CLI reproducibility: report --seed 7 twice per model, byte-identical
void criterion9(const std::string& cli) {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "bimtoep-acceptance";
    fs::create_directories(dir);
    bool ok = true;
    std::string detail;
    for (const auto& name : builtin_model_names()) {
        fs::path a = dir / (name + "-a.json"), b = dir / (name + "-b.json");
        auto run = [&](const fs::path& out) {
            std::string cmd = "'" + cli + "' report --model " + name + " --seed 7 --out '" +
                              out.string() + "' > /dev/null 2>&1";
            return std::system(cmd.c_str());
        };
        auto t0 = Clock::now();
        int r1 = run(a);
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        int r2 = run(b);
        bool same = false;
        try {
            same = read_file(a.string()) == read_file(b.string());
        } catch (const std::exception&) {
        }
        bool this_ok = r1 == 0 && r2 == 0 && same && secs < 120.0;
        ok = ok && this_ok;
        detail += name + (this_ok ? " ok " : " FAIL ") + fmt(secs) + "s; ";
    }
    verdict(9, "CLI report --seed 7 is byte-identical per model", ok, detail);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-cli>\n";
        return 2;
    }
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9(argv[1]);
    std::cout << (failures == 0 ? "ALL CRITERIA PASS" : "FAILURES: " + std::to_string(failures))
              << "\n";
    return failures == 0 ? 0 : 1;
}
