#include "bimtoep/report.hpp"

#include <doctest.h>

using namespace bimtoep;

namespace {

// scalar pairing sum_k tau(<xi(k), zeta(k)>_R)
Complex pairing(const WindowedL2Element& a, const WindowedL2Element& b) {
    Complex acc = 0;
    for (int k = -a.N; k <= a.N; ++k)
        acc += a.ladder->level(k)->right_algebra()->trace(
            a.ladder->level(k)->inner_R(a.at(k), b.at(k)));
    return acc;
}

WindowedL2Element random_l2(const LadderPtr& L, int N, Rng& rng) {
    WindowedL2Element xi(L, N);
    for (int k = -N; k <= N; ++k) xi.at(k) = random_coeffs(L->level_dim(k), rng);
    return xi;
}

}  // namespace

TEST_CASE("embed and project round trip") {
    Rng rng(61);
    for (const auto& name : builtin_model_names()) {
        Model m = builtin_model(name, 2);
        const int N = m.window;
        for (int k = -N; k <= N; ++k) {
            Vector v = random_coeffs(m.ladder->level_dim(k), rng);
            WindowedL2Element xi = embed(m.ladder, v, k, N);
            CHECK((project(xi, k) - v).norm() < 1e-15);
            for (int j = -N; j <= N; ++j)
                if (j != k) CHECK(project(xi, j).norm() < 1e-15);
        }
    }
}

TEST_CASE("embedding is isometric and the window norm is scalarwise classical") {
    Rng rng(62);
    Model sc = builtin_model("scalar", 2);
    WindowedL2Element xi = random_l2(sc.ladder, 2, rng);
    double euclid = 0;
    for (int k = -2; k <= 2; ++k) euclid += std::norm(xi.at(k)(0));
    CHECK(xi.norm() == doctest::Approx(std::sqrt(euclid)));

    for (const auto& name : builtin_model_names()) {
        Model m = builtin_model(name, 2);
        for (int k = -2; k <= 2; ++k) {
            Vector v = random_coeffs(m.ladder->level_dim(k), rng);
            CHECK(std::abs(embed(m.ladder, v, k, 2).norm() -
                           m.ladder->level(k)->module_norm(v)) < 1e-12);
        }
    }
}

TEST_CASE("triangle inequality for the window norm") {
    Rng rng(63);
    Model m = builtin_model("m2-inner", 2);
    for (int s = 0; s < 100; ++s) {
        WindowedL2Element a = random_l2(m.ladder, 2, rng);
        WindowedL2Element b = random_l2(m.ladder, 2, rng);
        CHECK((a + b).norm() <= a.norm() + b.norm() + 1e-10);
    }
}

TEST_CASE("identity operator matrix fixes every window vector") {
    Rng rng(64);
    for (const auto& name : builtin_model_names()) {
        Model m = builtin_model(name, 2);
        OperatorMatrix I = OperatorMatrix::identity(m.ladder, 2);
        WindowedL2Element xi = random_l2(m.ladder, 2, rng);
        CHECK((I.apply(xi) - xi).norm() < 1e-14);
    }
}

TEST_CASE("scalar block action is the ordinary matrix-vector product") {
    Rng rng(65);
    Model m = builtin_model("scalar", 1);
    const int N = 1, D = 2 * N + 1;
    OperatorMatrix M(m.ladder, N);
    Eigen::MatrixXcd dense(D, D);
    for (int i = -N; i <= N; ++i)
        for (int j = -N; j <= N; ++j) {
            Matrix b = random_coeffs(1, rng) * Matrix::Identity(1, 1);
            dense(i + N, j + N) = b(0, 0);
            M.set_block(i, j, b);
        }
    WindowedL2Element xi = random_l2(m.ladder, N, rng);
    Eigen::VectorXcd v(D);
    for (int k = -N; k <= N; ++k) v(k + N) = xi.at(k)(0);
    Eigen::VectorXcd w = dense * v;
    WindowedL2Element out = M.apply(xi);
    for (int k = -N; k <= N; ++k) CHECK(std::abs(out.at(k)(0) - w(k + N)) < 1e-12);
}

TEST_CASE("blockwise adjoint matches the scalar pairing") {
    Rng rng(66);
    for (const auto& name : builtin_model_names()) {
        Model m = builtin_model(name, 2);
        OperatorMatrix M = lambda_rep(random_section(m.ladder, 2, rng), 2);
        OperatorMatrix Ms = M.blockwise_adjoint();
        for (int s = 0; s < 10; ++s) {
            WindowedL2Element xi = random_l2(m.ladder, 2, rng);
            WindowedL2Element ze = random_l2(m.ladder, 2, rng);
            CHECK(std::abs(pairing(M.apply(xi), ze) - pairing(xi, Ms.apply(ze))) < 1e-9);
        }
    }
}

TEST_CASE("scalar Toeplitz predicate agrees with the entrywise condition") {
    Rng rng(67);
    Model m = builtin_model("scalar", 2);
    const int N = 2;
    // constant-diagonal matrix passes
    OperatorMatrix T(m.ladder, N);
    std::map<int, Complex> diag;
    for (int k = -2 * N; k <= 2 * N; ++k) diag[k] = random_coeffs(1, rng)(0);
    for (int i = -N; i <= N; ++i)
        for (int j = -N; j <= N; ++j)
            T.set_block(i, j, diag[i - j] * Matrix::Identity(1, 1));
    ToeplitzCheck ok = is_toeplitz(T);
    CHECK(ok.is_toeplitz);
    CHECK(ok.max_residual < 1e-12);

    // breaking one diagonal pair is caught at the right index
    OperatorMatrix B = T;
    B.set_block(0, 0, (diag[0] + 1.0) * Matrix::Identity(1, 1));
    ToeplitzCheck bad = is_toeplitz(B);
    CHECK(!bad.is_toeplitz);
    CHECK(bad.offending_i == 0);
    CHECK(bad.offending_j == 0);
}

TEST_CASE("Toeplitz matrices form a subspace stable under the right action") {
    Rng rng(68);
    for (const auto& name : builtin_model_names()) {
        Model m = builtin_model(name, 2);
        OperatorMatrix M1 = lambda_rep(random_section(m.ladder, 2, rng), 2);
        OperatorMatrix M2 = lambda_rep(random_section(m.ladder, 2, rng), 2);
        Complex a(0.3, 1.2), b(-0.7, 0.4);
        CHECK(is_toeplitz(M1.scaled(a) + M2.scaled(b)).is_toeplitz);

        // right action (M.a)_{ij}(z) = [M]_{ij}(az): precompose with the
        // diagonal left-multiplication matrix
        Vector el = random_coeffs(m.algebra->dim(), rng);
        OperatorMatrix D(m.ladder, 2);
        for (int k = -2; k <= 2; ++k) {
            const auto& lv = m.ladder->level(k);
            Matrix act = Matrix::Zero(lv->dim(), lv->dim());
            for (int q = 0; q < m.algebra->dim(); ++q)
                if (el(q) != 0.0) act += el(q) * lv->act_left_tensors()[q];
            D.set_block(k, k, act);
        }
        CHECK(is_toeplitz(M1.compose(D)).is_toeplitz);
    }
}

TEST_CASE("sigma seminorm basics") {
    Rng rng(69);
    Model m = builtin_model("flip", 2);
    OperatorMatrix I = OperatorMatrix::identity(m.ladder, 2);
    for (int j = -2; j <= 2; ++j) {
        Vector v = random_coeffs(m.ladder->level_dim(j), rng);
        CHECK(std::abs(sigma_seminorm(I, v, j) - m.ladder->level(j)->module_norm(v)) < 1e-12);
        OperatorMatrix M = lambda_rep(random_section(m.ladder, 2, rng), 2);
        CHECK(sigma_seminorm(M - M, v, j) < 1e-14);
        Complex c(0.0, 2.0);
        CHECK(std::abs(sigma_seminorm(M.scaled(c), v, j) -
                       std::abs(c) * sigma_seminorm(M, v, j)) < 1e-10);
    }
}
