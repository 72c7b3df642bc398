#include "bimtoep/report.hpp"

#include "bimtoep/operators.hpp"

namespace bimtoep {

Vector random_coeffs(int dim, Rng& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Vector v(dim);
    for (int i = 0; i < dim; ++i) v(i) = Complex(u(rng), u(rng));
    return v;
}

CrossSection random_section(const LadderPtr& ladder, int support_radius, Rng& rng) {
    CrossSection f(ladder);
    for (int k = -support_radius; k <= support_radius; ++k)
        f.set(k, random_coeffs(ladder->level_dim(k), rng));
    return f;
}

AdjointableMap random_adjointable(const LadderPtr& ladder, int from, int to, Rng& rng) {
    const int dA = ladder->algebra()->dim();
    AdjointableMap T = creation_left(ladder, to - from, random_coeffs(ladder->level_dim(to - from), rng), from);
    for (int s = 0; s < 2; ++s) {
        AdjointableMap piece =
            creation_left(ladder, to - from, random_coeffs(ladder->level_dim(to - from), rng), from);
        T = T + piece.left_action(random_coeffs(dA, rng)).right_action(random_coeffs(dA, rng));
    }
    return T;
}

ValidationReport run_property_suite(const Model& model, std::uint64_t seed) {
    Rng rng(seed);
    const auto& ladder = model.ladder;
    const int R = ladder->range();
    const double tol = model.tol("residual", 1e-9);
    const double ttol = model.tol("toeplitz", 1e-8);
    ValidationReport rep;
    auto add = [&](const std::string& name, double r, double bound) {
        rep.checks.push_back({name, r, r < bound});
    };

    // bimodule axioms on the base and every ladder level
    for (int n = -std::min(R, 4); n <= std::min(R, 4); ++n) {
        ValidationReport lv = validate_bimodule(*ladder->level(n), tol);
        double worst = 0;
        for (const auto& c : lv.checks) worst = std::max(worst, c.pass ? c.residual : 1.0);
        add("axioms level " + std::to_string(n), worst, tol);
    }

    // tensor-product inner-product formulas on random simple tensors:
    // <x1 (x) y1, x2 (x) y2>_R = <y1, <x1,x2>_R y2>_R  (and the left analogue)
    {
        double r = 0;
        const auto& X = model.bimodule;
        for (int n = 1; n < R; ++n) {
            const auto& L = ladder->level(n);
            const auto& P = ladder->level(n + 1);
            for (int s = 0; s < 20; ++s) {
                Vector x1 = random_coeffs(L->dim(), rng), x2 = random_coeffs(L->dim(), rng);
                Vector y1 = random_coeffs(X->dim(), rng), y2 = random_coeffs(X->dim(), rng);
                Vector t1 = ladder->contract(n, 1, x1, y1), t2 = ladder->contract(n, 1, x2, y2);
                Vector lhsR = P->inner_R(t1, t2);
                Vector rhsR = X->inner_R(y1, X->act_left(L->inner_R(x1, x2), y2));
                r = std::max(r, (lhsR - rhsR).norm());
                Vector lhsL = P->inner_L(t1, t2);
                Vector rhsL = L->inner_L(L->act_right(x1, X->inner_L(y1, y2)), x2);
                r = std::max(r, (lhsL - rhsL).norm());
            }
        }
        add("tensor inner-product formulas", r, tol);
    }

    // balancing xb (x) y = x (x) by in the quotient
    {
        double r = 0;
        const auto& X = model.bimodule;
        for (int n = 1; n < R; ++n) {
            const auto& L = ladder->level(n);
            for (int s = 0; s < 20; ++s) {
                Vector x = random_coeffs(L->dim(), rng);
                Vector y = random_coeffs(X->dim(), rng);
                Vector b = random_coeffs(ladder->algebra()->dim(), rng);
                Vector lhs = ladder->contract(n, 1, L->act_right(x, b), y);
                Vector rhs = ladder->contract(n, 1, x, X->act_left(b, y));
                r = std::max(r, (lhs - rhs).norm());
            }
        }
        add("tensor balancing xb(x)y = x(x)by", r, tol);
    }

    // contraction associativity across all small level triples
    {
        double r = 0;
        int lim = std::min(2, R);
        for (int m = -lim; m <= lim; ++m)
            for (int n = -lim; n <= lim; ++n)
                for (int p = -lim; p <= lim; ++p) {
                    if (std::abs(m + n) > R || std::abs(n + p) > R || std::abs(m + n + p) > R)
                        continue;
                    for (int s = 0; s < 5; ++s) {
                        Vector a = random_coeffs(ladder->level_dim(m), rng);
                        Vector b = random_coeffs(ladder->level_dim(n), rng);
                        Vector c = random_coeffs(ladder->level_dim(p), rng);
                        Vector lhs = ladder->contract(m + n, p, ladder->contract(m, n, a, b), c);
                        Vector rhs = ladder->contract(m, n + p, a, ladder->contract(n, p, b, c));
                        r = std::max(r, (lhs - rhs).norm());
                    }
                }
        add("contraction associativity", r, tol);
    }

    // creation isometry and adjoint formulas
    {
        double riso = 0, radj = 0, rstar = 0;
        int lim = std::min(2, R - 1);
        for (int n = -lim; n <= lim; ++n)
            for (int p = -1; p <= 1; ++p) {
                if (p == 0 || std::abs(n + p) > R) continue;
                for (int s = 0; s < 10; ++s) {
                    Vector y = random_coeffs(ladder->level_dim(p), rng);
                    AdjointableMap T = creation_left(ladder, p, y, n);
                    riso = std::max(riso,
                                    std::abs(T.norm() - ladder->level(p)->module_norm(y)));
                    // (T_y)*(y' (x) z) = <y,y'>_R z
                    Vector yp = random_coeffs(ladder->level_dim(p), rng);
                    Vector z = random_coeffs(ladder->level_dim(n), rng);
                    Vector lhs = adjoint(T).apply(ladder->contract(p, n, yp, z));
                    Vector rhs = ladder->level(n)->act_left(
                        ladder->level(p)->inner_R(y, yp), z);
                    radj = std::max(radj, (lhs - rhs).norm());
                    // (R_z)*(eta) (x) w = eta <z,w>_R
                    Vector zz = random_coeffs(ladder->level_dim(n), rng);
                    Vector w = random_coeffs(ladder->level_dim(n), rng);
                    Vector eta = random_coeffs(ladder->level_dim(n + p), rng);
                    AdjointableMap Rz = creation_right(ladder, n, zz, p);
                    Vector l2 = ladder->contract(p, n, adjoint_left(Rz).apply(eta), w);
                    Vector r2 = ladder->level(n + p)->act_right(
                        eta, ladder->level(n)->inner_R(zz, w));
                    rstar = std::max(rstar, (l2 - r2).norm());
                }
            }
        add("creation isometry", riso, tol);
        add("left-creation adjoint formula", radj, tol);
        add("rstar identity", rstar, tol);
    }

    // multiplier round trips H o J = id, J o H = id; alpha-shift axiom
    {
        double rhj = 0, rjh = 0, ralpha = 0;
        int lim = std::min(2, R - 1);
        for (int n = -lim; n <= lim; ++n)
            for (int m = -lim; m <= lim; ++m) {
                if (std::abs(m - n) > R) continue;
                for (int s = 0; s < 5; ++s) {
                    AdjointableMap T = random_adjointable(ladder, n, m, rng);
                    rhj = std::max(rhj, (multiplier_H(multiplier_J(T), n) - T).norm());
                    AdjointableMap phi = random_adjointable(ladder, 0, m - n, rng);
                    rjh = std::max(rjh, (multiplier_J(multiplier_H(phi, n)) - phi).norm());
                    Vector eta = random_coeffs(ladder->level_dim(m - n), rng);
                    if (std::abs(n - 1) <= R && std::abs(m - 1) <= R) {
                        AdjointableMap Te = creation_left(ladder, m - n, eta, n);
                        AdjointableMap shifted = alpha_shift(Te);
                        ralpha = std::max(
                            ralpha, (shifted - creation_left(ladder, m - n, eta, n - 1)).norm());
                    }
                }
            }
        add("H(J(T)) = T", rhj, tol);
        add("J(H(phi)) = phi", rjh, tol);
        add("alpha-shift of creation operators", ralpha, tol);
    }

    // Toeplitz forward direction and synthesis round trip
    {
        const int N = std::min(model.window, R / 2);
        double rt = 0, rs = 0;
        for (int s = 0; s < 5; ++s) {
            CrossSection f = random_section(ladder, std::min(2, R - N), rng);
            OperatorMatrix M = lambda_rep(f, N);
            rt = std::max(rt, is_toeplitz(M, ttol).max_residual);
            SynthesisResult syn = synthesize_section(M, R, ttol);
            rs = std::max(rs, (syn.section - f).norm());
        }
        add("lambda sections are Toeplitz", rt, tol);
        add("synthesis round trip", rs, tol);
    }

    // convolution *-algebra
    {
        double rassoc = 0, runit = 0, rinv = 0;
        CrossSection unit = CrossSection::delta_unit(ladder);
        for (int s = 0; s < 5; ++s) {
            int sup = std::max(1, R / 3);
            CrossSection f = random_section(ladder, sup, rng);
            CrossSection g = random_section(ladder, sup, rng);
            CrossSection h = random_section(ladder, sup, rng);
            rassoc = std::max(rassoc,
                              (convolve(convolve(f, g), h) - convolve(f, convolve(g, h))).norm());
            runit = std::max(runit, (convolve(unit, f) - f).norm());
            runit = std::max(runit, (convolve(f, unit) - f).norm());
            rinv = std::max(
                rinv, (involute(convolve(f, g)) - convolve(involute(g), involute(f))).norm());
        }
        add("convolution associativity", rassoc, tol);
        add("identity section", runit, tol);
        add("(f*g)^* = g^* * f^*", rinv, tol);
    }

    return rep;
}

}  // namespace bimtoep
