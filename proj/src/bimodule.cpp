#include "bimtoep/bimodule.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <sstream>

namespace bimtoep {

Bimodule::Bimodule(AlgebraPtr left, AlgebraPtr right, int dim,
                   std::vector<Matrix> act_left, std::vector<Matrix> act_right,
                   Matrix inner_L, Matrix inner_R)
    : left_(std::move(left)),
      right_(std::move(right)),
      dim_(dim),
      act_left_(std::move(act_left)),
      act_right_(std::move(act_right)),
      inner_L_(std::move(inner_L)),
      inner_R_(std::move(inner_R)) {
    if (dim_ <= 0) throw StructuralError("module dimension must be positive");
    if (static_cast<int>(act_left_.size()) != left_->dim() ||
        static_cast<int>(act_right_.size()) != right_->dim())
        throw StructuralError("action tensor count does not match algebra dimension");
    for (const auto& m : act_left_)
        if (m.rows() != dim_ || m.cols() != dim_) throw StructuralError("left action shape mismatch");
    for (const auto& m : act_right_)
        if (m.rows() != dim_ || m.cols() != dim_) throw StructuralError("right action shape mismatch");
    if (inner_L_.rows() != left_->dim() || inner_L_.cols() != dim_ * dim_)
        throw StructuralError("inner_L tensor shape mismatch");
    if (inner_R_.rows() != right_->dim() || inner_R_.cols() != dim_ * dim_)
        throw StructuralError("inner_R tensor shape mismatch");

    auto localize = [&](Matrix G, const char* side, Matrix& sq, Matrix& isq, Matrix& inv) {
        G = 0.5 * (G + G.adjoint().eval());
        Eigen::SelfAdjointEigenSolver<Matrix> es(G);
        const auto& ev = es.eigenvalues();
        if (ev.minCoeff() <= 0)
            throw ValidationError(std::string("tau-Gram matrix of the ") + side +
                                  " inner product is not positive definite");
        Matrix U = es.eigenvectors();
        sq = U * ev.cwiseSqrt().asDiagonal() * U.adjoint();
        isq = U * ev.cwiseSqrt().cwiseInverse().asDiagonal() * U.adjoint();
        inv = U * ev.cwiseInverse().asDiagonal() * U.adjoint();
        return G;
    };
    Matrix GR(dim_, dim_), GL(dim_, dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) {
            GR(i, j) = right_->trace(inner_R_.col(i * dim_ + j));
            GL(i, j) = left_->trace(inner_L_.col(j * dim_ + i));
        }
    gram_ = localize(std::move(GR), "right", gram_sqrt_, gram_inv_sqrt_, gram_inv_);
    gram_left_ =
        localize(std::move(GL), "left", gram_left_sqrt_, gram_left_inv_sqrt_, gram_left_inv_);
}

Vector Bimodule::act_left(const Vector& a, const Vector& x) const {
    Vector out = Vector::Zero(dim_);
    for (int p = 0; p < left_->dim(); ++p)
        if (a(p) != 0.0) out += a(p) * (act_left_[p] * x);
    return out;
}

Vector Bimodule::act_right(const Vector& x, const Vector& b) const {
    Vector out = Vector::Zero(dim_);
    for (int q = 0; q < right_->dim(); ++q)
        if (b(q) != 0.0) out += b(q) * (act_right_[q] * x);
    return out;
}

Vector Bimodule::inner_L(const Vector& x, const Vector& y) const {
    Vector out = Vector::Zero(left_->dim());
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) {
            Complex c = x(i) * std::conj(y(j));
            if (c != 0.0) out += c * inner_L_.col(i * dim_ + j);
        }
    return out;
}

Vector Bimodule::inner_R(const Vector& x, const Vector& y) const {
    Vector out = Vector::Zero(right_->dim());
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) {
            Complex c = std::conj(x(i)) * y(j);
            if (c != 0.0) out += c * inner_R_.col(i * dim_ + j);
        }
    return out;
}

double Bimodule::module_norm(const Vector& x) const {
    return std::sqrt(right_->norm(inner_R(x, x)));
}

ModuleElement::ModuleElement(BimodulePtr m, Vector c) : owner(std::move(m)), coeffs(std::move(c)) {
    if (coeffs.size() != owner->dim()) throw StructuralError("module coefficient length mismatch");
}

static void check_same(const ModuleElement& a, const ModuleElement& b) {
    if (a.owner != b.owner) throw StructuralError("elements of different modules");
}

ModuleElement ModuleElement::operator+(const ModuleElement& o) const {
    check_same(*this, o);
    return {owner, coeffs + o.coeffs};
}
ModuleElement ModuleElement::operator-(const ModuleElement& o) const {
    check_same(*this, o);
    return {owner, coeffs - o.coeffs};
}
ModuleElement ModuleElement::scaled(Complex s) const { return {owner, s * coeffs}; }

AlgebraElement evaluate_inner(char side, const ModuleElement& x, const ModuleElement& y) {
    check_same(x, y);
    if (side == 'L' || side == 'l')
        return {x.owner->left_algebra(), x.owner->inner_L(x.coeffs, y.coeffs)};
    if (side == 'R' || side == 'r')
        return {x.owner->right_algebra(), x.owner->inner_R(x.coeffs, y.coeffs)};
    throw StructuralError("inner product side must be 'L' or 'R'");
}

bool ValidationReport::passed() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

std::string ValidationReport::summary() const {
    std::ostringstream os;
    for (const auto& c : checks)
        os << (c.pass ? "pass " : "FAIL ") << c.name << "  residual=" << c.residual << "\n";
    return os.str();
}

ValidationReport validate_bimodule(const Bimodule& X, double tol) {
    ValidationReport rep;
    const auto& A = *X.left_algebra();
    const auto& B = *X.right_algebra();
    const int d = X.dim();
    auto basis = [&](int i) {
        Vector e = Vector::Zero(d);
        e(i) = 1.0;
        return e;
    };
    auto abasis = [&](const CStarAlgebra& alg, int p) {
        Vector e = Vector::Zero(alg.dim());
        e(p) = 1.0;
        return e;
    };
    auto add = [&](const std::string& name, double r, bool ok) {
        rep.checks.push_back({name, r, ok});
    };
    auto add_res = [&](const std::string& name, double r) { add(name, r, r < tol); };

    // module axioms: associativity of the actions and the unit law
    double r_assoc = 0;
    for (int p = 0; p < A.dim(); ++p)
        for (int q = 0; q < A.dim(); ++q) {
            Vector pq = A.multiply(abasis(A, p), abasis(A, q));
            for (int i = 0; i < d; ++i) {
                Vector lhs = X.act_left(pq, basis(i));
                Vector rhs = X.act_left(abasis(A, p), X.act_left(abasis(A, q), basis(i)));
                r_assoc = std::max(r_assoc, (lhs - rhs).norm());
            }
        }
    add_res("left-action associativity", r_assoc);

    r_assoc = 0;
    for (int p = 0; p < B.dim(); ++p)
        for (int q = 0; q < B.dim(); ++q) {
            Vector pq = B.multiply(abasis(B, p), abasis(B, q));
            for (int i = 0; i < d; ++i) {
                Vector lhs = X.act_right(basis(i), pq);
                Vector rhs = X.act_right(X.act_right(basis(i), abasis(B, p)), abasis(B, q));
                r_assoc = std::max(r_assoc, (lhs - rhs).norm());
            }
        }
    add_res("right-action associativity", r_assoc);

    double r_comm = 0;
    for (int p = 0; p < A.dim(); ++p)
        for (int q = 0; q < B.dim(); ++q)
            for (int i = 0; i < d; ++i) {
                Vector lhs = X.act_right(X.act_left(abasis(A, p), basis(i)), abasis(B, q));
                Vector rhs = X.act_left(abasis(A, p), X.act_right(basis(i), abasis(B, q)));
                r_comm = std::max(r_comm, (lhs - rhs).norm());
            }
    add_res("action commutation (ax)b = a(xb)", r_comm);

    double r_unit = 0;
    for (int i = 0; i < d; ++i) {
        r_unit = std::max(r_unit, (X.act_left(A.unit(), basis(i)) - basis(i)).norm());
        r_unit = std::max(r_unit, (X.act_right(basis(i), B.unit()) - basis(i)).norm());
    }
    add_res("unit acts as identity", r_unit);

    // axiom (2): <x, y b>_R = <x, y>_R b ; (2'): <a x, y>_L = a <x, y>_L
    double r2 = 0, r2p = 0;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            for (int q = 0; q < B.dim(); ++q) {
                Vector lhs = X.inner_R(basis(i), X.act_right(basis(j), abasis(B, q)));
                Vector rhs = B.multiply(X.inner_R(basis(i), basis(j)), abasis(B, q));
                r2 = std::max(r2, (lhs - rhs).norm());
            }
            for (int p = 0; p < A.dim(); ++p) {
                Vector lhs = X.inner_L(X.act_left(abasis(A, p), basis(i)), basis(j));
                Vector rhs = A.multiply(abasis(A, p), X.inner_L(basis(i), basis(j)));
                r2p = std::max(r2p, (lhs - rhs).norm());
            }
        }
    add_res("axiom (2): <x,yb>_R = <x,y>_R b", r2);
    add_res("axiom (2'): <ax,y>_L = a<x,y>_L", r2p);

    // axiom (3): <y,x>_R = <x,y>_R*  and the left analogue
    double r3 = 0, r3l = 0;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            r3 = std::max(r3, (X.inner_R(basis(j), basis(i)) -
                               B.involution(X.inner_R(basis(i), basis(j)))).norm());
            r3l = std::max(r3l, (X.inner_L(basis(j), basis(i)) -
                                 A.involution(X.inner_L(basis(i), basis(j)))).norm());
        }
    add_res("axiom (3): <y,x>_R = <x,y>_R*", r3);
    add_res("axiom (3) left: <y,x>_L = <x,y>_L*", r3l);

    // axiom (4)/(5): positivity and definiteness, spot-checked on a fixed
    // deterministic family plus every basis vector
    bool pos_ok = true;
    for (int i = 0; i < d && pos_ok; ++i)
        pos_ok = B.is_positive(X.inner_R(basis(i), basis(i)), tol) &&
                 A.is_positive(X.inner_L(basis(i), basis(i)), tol);
    for (int s = 0; s < 8 && pos_ok; ++s) {
        Vector x(d);
        for (int i = 0; i < d; ++i)
            x(i) = Complex(std::cos(0.7 * s + 1.3 * i), std::sin(0.4 * s + 2.1 * i));
        pos_ok = B.is_positive(X.inner_R(x, x), tol) && A.is_positive(X.inner_L(x, x), tol);
    }
    add("axiom (4): positivity of <x,x>", pos_ok ? 0.0 : 1.0, pos_ok);

    Eigen::SelfAdjointEigenSolver<Matrix> es(X.gram(), Eigen::EigenvaluesOnly);
    double gmin = es.eigenvalues().minCoeff();
    add("axiom (5): definiteness (tau-Gram min eigenvalue)", gmin > tol ? 0.0 : 1.0, gmin > tol);

    // imprimitivity: <x,y>_L z = x <y,z>_R on all basis triples
    double rimp = 0;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                Vector lhs = X.act_left(X.inner_L(basis(i), basis(j)), basis(k));
                Vector rhs = X.act_right(basis(i), X.inner_R(basis(j), basis(k)));
                rimp = std::max(rimp, (lhs - rhs).norm());
            }
    add_res("imprimitivity: <x,y>_L z = x<y,z>_R", rimp);

    // <xb,y>_L = <x,yb*>_L and <ax,y>_R = <x,a*y>_R
    double radjL = 0, radjR = 0;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            for (int q = 0; q < B.dim(); ++q) {
                Vector b = abasis(B, q);
                Vector lhs = X.inner_L(X.act_right(basis(i), b), basis(j));
                Vector rhs = X.inner_L(basis(i), X.act_right(basis(j), B.involution(b)));
                radjL = std::max(radjL, (lhs - rhs).norm());
            }
            for (int p = 0; p < A.dim(); ++p) {
                Vector a = abasis(A, p);
                Vector lhs = X.inner_R(X.act_left(a, basis(i)), basis(j));
                Vector rhs = X.inner_R(basis(i), X.act_left(A.involution(a), basis(j)));
                radjR = std::max(radjR, (lhs - rhs).norm());
            }
        }
    add_res("<xb,y>_L = <x,yb*>_L", radjL);
    add_res("<ax,y>_R = <x,a*y>_R", radjR);

    // fullness: span{<e_i,e_j>} = the whole algebra, both sides
    {
        Matrix MR(B.dim(), d * d), ML(A.dim(), d * d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                MR.col(i * d + j) = X.inner_R(basis(i), basis(j));
                ML.col(i * d + j) = X.inner_L(basis(i), basis(j));
            }
        auto rank = [](const Matrix& M) {
            Eigen::JacobiSVD<Matrix> svd(M);
            double mx = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
            int r = 0;
            for (int k = 0; k < svd.singularValues().size(); ++k)
                if (svd.singularValues()(k) > 1e-10 * std::max(mx, 1.0)) ++r;
            return r;
        };
        int rR = rank(MR), rL = rank(ML);
        add("fullness of <.,.>_R", static_cast<double>(B.dim() - rR), rR == B.dim());
        add("fullness of <.,.>_L", static_cast<double>(A.dim() - rL), rL == A.dim());
    }

    // norm consistency ||<x,x>_L|| = ||<x,x>_R|| on a deterministic family
    double rnorm = 0;
    for (int s = 0; s < 16; ++s) {
        Vector x(d);
        for (int i = 0; i < d; ++i)
            x(i) = Complex(std::sin(1.1 * s + 0.9 * i), std::cos(0.5 * s + 1.7 * i));
        rnorm = std::max(rnorm, std::abs(A.norm(X.inner_L(x, x)) - B.norm(X.inner_R(x, x))));
    }
    add_res("norm consistency ||<x,x>_L|| = ||<x,x>_R||", rnorm);

    return rep;
}

BimodulePtr algebra_as_bimodule(const AlgebraPtr& A) {
    int d = A->dim();
    std::vector<Matrix> al(d), ar(d);
    for (int p = 0; p < d; ++p) {
        al[p] = A->left_mult(p);
        ar[p] = A->right_mult(p);
    }
    Matrix IL(d, d * d), IR(d, d * d);
    for (int i = 0; i < d; ++i) {
        Vector ei = Vector::Zero(d);
        ei(i) = 1.0;
        for (int j = 0; j < d; ++j) {
            Vector ej = Vector::Zero(d);
            ej(j) = 1.0;
            IL.col(i * d + j) = A->multiply(ei, A->involution(ej));
            IR.col(i * d + j) = A->multiply(A->involution(ei), ej);
        }
    }
    return std::make_shared<Bimodule>(A, A, d, std::move(al), std::move(ar), std::move(IL),
                                      std::move(IR));
}

BimodulePtr dual_bimodule(const BimodulePtr& X) {
    const auto& A = X->left_algebra();
    const auto& B = X->right_algebra();
    int d = X->dim();
    // involution permutation on algebra coefficients: e_p* = e_{sigma(p)}
    auto inv_perm = [](const CStarAlgebra& alg) {
        std::vector<int> perm(alg.dim());
        for (int p = 0; p < alg.dim(); ++p) {
            Vector e = Vector::Zero(alg.dim());
            e(p) = 1.0;
            Vector s = alg.involution(e);
            for (int q = 0; q < alg.dim(); ++q)
                if (std::abs(s(q) - 1.0) < 0.5) perm[p] = q;
        }
        return perm;
    };
    auto sB = inv_perm(*B);
    auto sA = inv_perm(*A);
    std::vector<Matrix> al(B->dim()), ar(A->dim());
    for (int q = 0; q < B->dim(); ++q) al[q] = X->act_right_tensors()[sB[q]].conjugate();
    for (int p = 0; p < A->dim(); ++p) ar[p] = X->act_left_tensors()[sA[p]].conjugate();
    return std::make_shared<Bimodule>(B, A, d, std::move(al), std::move(ar),
                                      X->inner_R_tensor(), X->inner_L_tensor());
}

TensorProduct tensor_product(const BimodulePtr& X, const BimodulePtr& Y) {
    if (!X->right_algebra()->same_shape(*Y->left_algebra()))
        throw StructuralError("tensor product: middle algebras differ");
    const auto& C = Y->right_algebra();
    const auto& A = X->left_algebra();
    const int dX = X->dim(), dY = Y->dim(), D = dX * dY;

    auto xb = [&](int i) {
        Vector e = Vector::Zero(dX);
        e(i) = 1.0;
        return e;
    };
    auto yb = [&](int j) {
        Vector e = Vector::Zero(dY);
        e(j) = 1.0;
        return e;
    };

    // algebra-valued inner products on the algebraic tensor basis
    Matrix IRalg(C->dim(), D * D), ILalg(A->dim(), D * D);
    for (int i = 0; i < dX; ++i)
        for (int k = 0; k < dX; ++k) {
            Vector cR = X->inner_R(xb(i), xb(k));  // in B
            for (int j = 0; j < dY; ++j)
                for (int l = 0; l < dY; ++l) {
                    int u = i * dY + j, v = k * dY + l;
                    IRalg.col(u * D + v) = Y->inner_R(yb(j), Y->act_left(cR, yb(l)));
                    Vector bL = Y->inner_L(yb(j), yb(l));  // in B
                    ILalg.col(u * D + v) = X->inner_L(X->act_right(xb(i), bL), xb(k));
                }
        }

    Matrix G(D, D);
    for (int u = 0; u < D; ++u)
        for (int v = 0; v < D; ++v) G(u, v) = C->trace(IRalg.col(u * D + v));
    G = 0.5 * (G + G.adjoint().eval());
    Eigen::SelfAdjointEigenSolver<Matrix> es(G, Eigen::EigenvaluesOnly);
    double lmax = es.eigenvalues().maxCoeff();
    if (es.eigenvalues().minCoeff() < -1e-9 * std::max(lmax, 1.0))
        throw ValidationError("tensor product: semi-inner product is not positive");
    double null_tol = 1e-10 * lmax;

    // Gram-Schmidt over the lexicographic algebraic basis; squared residual
    // below null_tol means the vector lies in the null space.
    std::vector<Vector> kept;
    for (int u = 0; u < D; ++u) {
        Vector w = Vector::Zero(D);
        w(u) = 1.0;
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& b : kept) w -= (b.adjoint() * (G * w))(0) * b;
        double nrm2 = std::real((w.adjoint() * (G * w))(0));
        if (nrm2 > null_tol) kept.push_back(w / std::sqrt(nrm2));
    }
    const int dQ = static_cast<int>(kept.size());
    Matrix B(D, dQ);
    for (int m = 0; m < dQ; ++m) B.col(m) = kept[m];
    Matrix Q = B.adjoint() * G;

    // induced structure tensors
    std::vector<Matrix> al(A->dim()), ar(C->dim());
    for (int p = 0; p < A->dim(); ++p) {
        Matrix act = Matrix::Zero(D, D);
        const Matrix& ax = X->act_left_tensors()[p];
        for (int i = 0; i < dX; ++i)
            for (int k = 0; k < dX; ++k)
                if (ax(i, k) != 0.0)
                    for (int j = 0; j < dY; ++j) act(i * dY + j, k * dY + j) = ax(i, k);
        al[p] = Q * act * B;
    }
    for (int q = 0; q < C->dim(); ++q) {
        Matrix act = Matrix::Zero(D, D);
        const Matrix& ay = Y->act_right_tensors()[q];
        for (int j = 0; j < dY; ++j)
            for (int l = 0; l < dY; ++l)
                if (ay(j, l) != 0.0)
                    for (int i = 0; i < dX; ++i) act(i * dY + j, i * dY + l) = ay(j, l);
        ar[q] = Q * act * B;
    }
    Matrix IRq(C->dim(), dQ * dQ), ILq(A->dim(), dQ * dQ);
    for (int m = 0; m < dQ; ++m)
        for (int n = 0; n < dQ; ++n) {
            Vector accR = Vector::Zero(C->dim());
            Vector accL = Vector::Zero(A->dim());
            for (int u = 0; u < D; ++u)
                for (int v = 0; v < D; ++v) {
                    Complex cR = std::conj(B(u, m)) * B(v, n);
                    if (cR != 0.0) accR += cR * IRalg.col(u * D + v);
                    Complex cL = B(u, m) * std::conj(B(v, n));
                    if (cL != 0.0) accL += cL * ILalg.col(u * D + v);
                }
            IRq.col(m * dQ + n) = accR;
            ILq.col(m * dQ + n) = accL;
        }

    auto mod = std::make_shared<Bimodule>(A, C, dQ, std::move(al), std::move(ar), std::move(ILq),
                                          std::move(IRq));
    return {mod, std::move(Q), std::move(B)};
}

}  // namespace bimtoep
