#include "bimtoep/algebra.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace bimtoep {

CStarAlgebra::CStarAlgebra(std::vector<int> block_dims) : block_dims_(std::move(block_dims)) {
    if (block_dims_.empty()) throw StructuralError("algebra needs at least one block");
    for (int n : block_dims_) {
        if (n <= 0) throw StructuralError("block dimensions must be positive");
        offsets_.push_back(dim_);
        dim_ += n * n;
    }
    // regular representation matrices of the matrix-unit basis
    left_mult_.resize(dim_);
    right_mult_.resize(dim_);
    for (int p = 0; p < dim_; ++p) {
        Vector ep = Vector::Zero(dim_);
        ep(p) = 1.0;
        auto pb = to_blocks(ep);
        Matrix L = Matrix::Zero(dim_, dim_), R = Matrix::Zero(dim_, dim_);
        for (int q = 0; q < dim_; ++q) {
            Vector eq = Vector::Zero(dim_);
            eq(q) = 1.0;
            auto qb = to_blocks(eq);
            std::vector<Matrix> lq(pb.size()), rq(pb.size());
            for (size_t b = 0; b < pb.size(); ++b) {
                lq[b] = pb[b] * qb[b];
                rq[b] = qb[b] * pb[b];
            }
            L.col(q) = from_blocks(lq);
            R.col(q) = from_blocks(rq);
        }
        left_mult_[p] = std::move(L);
        right_mult_[p] = std::move(R);
    }
}

int CStarAlgebra::unit_index(int block, int row, int col) const {
    return offsets_[block] + row * block_dims_[block] + col;
}

std::vector<Matrix> CStarAlgebra::to_blocks(const Vector& coeffs) const {
    if (coeffs.size() != dim_) throw StructuralError("coefficient vector has wrong length");
    std::vector<Matrix> out;
    for (size_t b = 0; b < block_dims_.size(); ++b) {
        int n = block_dims_[b];
        Matrix m(n, n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) m(r, c) = coeffs(offsets_[b] + r * n + c);
        out.push_back(std::move(m));
    }
    return out;
}

Vector CStarAlgebra::from_blocks(const std::vector<Matrix>& blocks) const {
    if (static_cast<int>(blocks.size()) != static_cast<int>(block_dims_.size()))
        throw StructuralError("block count mismatch");
    Vector out(dim_);
    for (size_t b = 0; b < block_dims_.size(); ++b) {
        int n = block_dims_[b];
        if (blocks[b].rows() != n || blocks[b].cols() != n)
            throw StructuralError("block shape mismatch");
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) out(offsets_[b] + r * n + c) = blocks[b](r, c);
    }
    return out;
}

Vector CStarAlgebra::unit() const {
    Vector u = Vector::Zero(dim_);
    for (size_t b = 0; b < block_dims_.size(); ++b)
        for (int r = 0; r < block_dims_[b]; ++r) u(unit_index(b, r, r)) = 1.0;
    return u;
}

Vector CStarAlgebra::multiply(const Vector& a, const Vector& b) const {
    auto ab = to_blocks(a);
    auto bb = to_blocks(b);
    for (size_t i = 0; i < ab.size(); ++i) ab[i] = ab[i] * bb[i];
    return from_blocks(ab);
}

Vector CStarAlgebra::involution(const Vector& a) const {
    auto ab = to_blocks(a);
    for (auto& m : ab) m = m.adjoint().eval();
    return from_blocks(ab);
}

Complex CStarAlgebra::trace(const Vector& a) const {
    Complex t = 0.0;
    for (size_t b = 0; b < block_dims_.size(); ++b)
        for (int r = 0; r < block_dims_[b]; ++r) t += a(unit_index(b, r, r));
    return t;
}

double CStarAlgebra::norm(const Vector& a) const {
    double n = 0.0;
    for (const auto& m : to_blocks(a)) {
        if (m.rows() == 1) {
            n = std::max(n, std::abs(m(0, 0)));
        } else {
            Eigen::JacobiSVD<Matrix> svd(m);
            n = std::max(n, svd.singularValues()(0));
        }
    }
    return n;
}

bool CStarAlgebra::is_positive(const Vector& a, double tol) const {
    for (const auto& m : to_blocks(a)) {
        if ((m - m.adjoint()).cwiseAbs().maxCoeff() > tol) return false;
        Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (m + m.adjoint()), Eigen::EigenvaluesOnly);
        if (es.eigenvalues().minCoeff() < -tol) return false;
    }
    return true;
}

AlgebraElement::AlgebraElement(AlgebraPtr alg, Vector c) : owner(std::move(alg)), coeffs(std::move(c)) {
    if (coeffs.size() != owner->dim()) throw StructuralError("coefficient length mismatch");
}

static void check_same(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.owner != b.owner) throw StructuralError("elements of different algebras");
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    check_same(*this, o);
    return {owner, coeffs + o.coeffs};
}
AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
    check_same(*this, o);
    return {owner, coeffs - o.coeffs};
}
AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
    check_same(*this, o);
    return {owner, owner->multiply(coeffs, o.coeffs)};
}
AlgebraElement AlgebraElement::scaled(Complex s) const { return {owner, s * coeffs}; }
AlgebraElement AlgebraElement::star() const { return {owner, owner->involution(coeffs)}; }

}  // namespace bimtoep
