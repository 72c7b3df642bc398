#include "bimtoep/ladder.hpp"

namespace bimtoep {

void TensorLadder::check_range(int n, const char* what) const {
    if (n < -range() || n > range())
        throw StructuralError(std::string(what) + ": level " + std::to_string(n) +
                              " outside ladder range [-" + std::to_string(range()) + "," +
                              std::to_string(range()) + "]");
}

const BimodulePtr& TensorLadder::level(int n) const {
    check_range(n, "level");
    return levels_.at(n);
}

const Matrix& TensorLadder::lift(int n) const {
    auto it = lifts_.find(n);
    if (it == lifts_.end()) throw StructuralError("no lift stored for level " + std::to_string(n));
    return it->second;
}

const Matrix& TensorLadder::contraction(int m, int n) const {
    check_range(m, "contraction");
    check_range(n, "contraction");
    check_range(m + n, "contraction");
    return contractions_.at({m, n});
}

Vector TensorLadder::contract(int m, int n, const Vector& s, const Vector& t) const {
    const Matrix& C = contraction(m, n);
    const int dn = level_dim(n);
    if (s.size() != level_dim(m) || t.size() != dn)
        throw StructuralError("contract: operand dimension mismatch");
    Vector out = Vector::Zero(level_dim(m + n));
    for (int i = 0; i < s.size(); ++i) {
        if (s(i) == 0.0) continue;
        out += s(i) * (C.middleCols(i * dn, dn) * t);
    }
    return out;
}

TensorLadder::TensorLadder(AlgebraPtr algebra, BimodulePtr base, int radius)
    : algebra_(std::move(algebra)), base_(std::move(base)), radius_(radius) {
    if (radius_ < 1) throw StructuralError("ladder radius must be >= 1");
    if (!base_->left_algebra()->same_shape(*base_->right_algebra()))
        throw StructuralError("ladder base must be a bimodule over a single algebra");
    const int R = range();

    levels_[0] = algebra_as_bimodule(algebra_);
    levels_[1] = base_;
    for (int n = 2; n <= R; ++n) {
        TensorProduct tp = tensor_product(levels_[n - 1], base_);
        levels_[n] = tp.module;
        lifts_[n] = tp.lift;
        contractions_[{n - 1, 1}] = tp.quotient_map;
    }
    for (int n = 1; n <= R; ++n) levels_[-n] = dual_bimodule(levels_[n]);

    auto dim = [&](int n) { return levels_.at(n)->dim(); };

    // contractions with level 0: module actions
    for (int m = -R; m <= R; ++m) {
        const auto& L = levels_.at(m);
        const int d = dim(m), dA = algebra_->dim();
        if (m != 0) {
            Matrix CR(d, d * dA);  // (m, 0)
            for (int i = 0; i < d; ++i)
                for (int q = 0; q < dA; ++q) CR.col(i * dA + q) = L->act_right_tensors()[q].col(i);
            contractions_[{m, 0}] = std::move(CR);
            Matrix CL(d, dA * d);  // (0, m)
            for (int p = 0; p < dA; ++p)
                for (int j = 0; j < d; ++j) CL.col(p * d + j) = L->act_left_tensors()[p].col(j);
            contractions_[{0, m}] = std::move(CL);
        } else {
            Matrix C(dA, dA * dA);
            for (int p = 0; p < dA; ++p) {
                Vector ep = Vector::Zero(dA);
                ep(p) = 1.0;
                for (int q = 0; q < dA; ++q) {
                    Vector eq = Vector::Zero(dA);
                    eq(q) = 1.0;
                    C.col(p * dA + q) = algebra_->multiply(ep, eq);
                }
            }
            contractions_[{0, 0}] = std::move(C);
        }
    }

    auto kron_left = [](const Matrix& A, int idRows) {
        // kron(A, I_idRows)
        Matrix K = Matrix::Zero(A.rows() * idRows, A.cols() * idRows);
        for (int i = 0; i < A.rows(); ++i)
            for (int j = 0; j < A.cols(); ++j)
                if (A(i, j) != 0.0)
                    for (int b = 0; b < idRows; ++b) K(i * idRows + b, j * idRows + b) = A(i, j);
        return K;
    };

    // positive-positive, built up the second argument one tensor factor at a time
    for (int n = 2; n <= R; ++n)
        for (int m = 1; m + n <= R; ++m) {
            const Matrix& step = contractions_.at({m + n - 1, 1});
            const Matrix& prev = contractions_.at({m, n - 1});
            const Matrix& lf = lifts_.at(n);
            const int dX = base_->dim(), dm = dim(m);
            // (s, t) -> step( prev(s, a) (x) x ) summed over the lift of t
            Matrix mid = kron_left(prev, dX);  // (dm * d_{n-1} * dX) -> (d_{m+n-1} * dX)
            Matrix pre = Matrix::Zero(dm * dim(n - 1) * dX, dm * dim(n));
            for (int i = 0; i < dm; ++i)
                pre.block(i * dim(n - 1) * dX, i * dim(n), dim(n - 1) * dX, dim(n)) = lf;
            contractions_[{m, n}] = step * mid * pre;
        }

    // dual on the left: (-p, n), 1 <= p <= n, via the adjoint of left creation
    for (int p = 1; p <= R; ++p)
        for (int n = p; n <= R; ++n) {
            if (-p < -R) break;
            const int dp = dim(p), dn = dim(n), dr = dim(n - p);
            const Matrix& C = contractions_.at({p, n - p});
            const Matrix& Gn = levels_.at(n)->gram();
            const Matrix& Gri = levels_.at(n - p)->gram_inv();
            Matrix out(dr, dp * dn);
            for (int i = 0; i < dp; ++i) {
                Matrix Ti = C.middleCols(i * dr, dr);     // level n-p -> level n, z -> e_i (x) z
                Matrix Ai = Gri * Ti.adjoint() * Gn;      // its tau-adjoint
                out.middleCols(i * dn, dn) = Ai;
            }
            contractions_[{-p, n}] = std::move(out);
        }

    // dual on the right: (m, -q), 1 <= q <= m, via the left adjoint of right
    // creation (right creation operators are left-linear)
    for (int q = 1; q <= R; ++q)
        for (int m = q; m <= R; ++m) {
            const int dq = dim(q), dm = dim(m), dr = dim(m - q);
            const Matrix& C = contractions_.at({m - q, q});
            const Matrix& Gm = levels_.at(m)->gram_left();
            const Matrix& Gri = levels_.at(m - q)->gram_left_inv();
            Matrix out(dr, dm * dq);
            for (int j = 0; j < dq; ++j) {
                Matrix Rj(dm, dr);  // level m-q -> level m, z -> z (x) f_j
                for (int a = 0; a < dr; ++a) Rj.col(a) = C.col(a * dq + j);
                Matrix Aj = Gri * Rj.adjoint() * Gm;
                for (int i = 0; i < dm; ++i) out.col(i * dq + j) = Aj.col(i);
            }
            contractions_[{m, -q}] = std::move(out);
        }

    // remaining sign patterns via the antilinear flip  s~ (x) t = (t~ (x) s)~
    auto conj_swap = [&](int a, int b, int outm, int outn) {
        const Matrix& C = contractions_.at({a, b});
        const int d1 = dim(outm), d2 = dim(outn);
        Matrix out(C.rows(), d1 * d2);
        for (int i = 0; i < d1; ++i)
            for (int j = 0; j < d2; ++j) out.col(i * d2 + j) = C.col(j * d1 + i).conjugate();
        contractions_[{outm, outn}] = std::move(out);
    };
    for (int p = 1; p <= R; ++p)
        for (int n = 1; n < p; ++n)
            if (std::abs(n - p) <= R) conj_swap(-n, p, -p, n);
    for (int q = 1; q <= R; ++q)
        for (int m = 1; m < q; ++m)
            if (std::abs(m - q) <= R) conj_swap(q, -m, m, -q);
    for (int p = 1; p <= R; ++p)
        for (int q = 1; p + q <= R; ++q) conj_swap(q, p, -p, -q);
}

LadderPtr build_ladder(const BimodulePtr& X, int radius) {
    if (!X->left_algebra()->same_shape(*X->right_algebra()))
        throw StructuralError("ladder base must be an A-A bimodule");
    return std::make_shared<TensorLadder>(X->left_algebra(), X, radius);
}

}  // namespace bimtoep
