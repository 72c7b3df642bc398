#include "bimtoep/operators.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>

namespace bimtoep {

AdjointableMap::AdjointableMap(LadderPtr l, int from_level, int to_level, Matrix m)
    : ladder(std::move(l)), from(from_level), to(to_level), mat(std::move(m)) {
    if (mat.rows() != ladder->level_dim(to) || mat.cols() != ladder->level_dim(from))
        throw StructuralError("operator matrix shape does not match its levels");
}

static void check_same_levels(const AdjointableMap& a, const AdjointableMap& b) {
    if (a.ladder != b.ladder || a.from != b.from || a.to != b.to)
        throw StructuralError("operators act between different levels");
}

AdjointableMap AdjointableMap::operator+(const AdjointableMap& o) const {
    check_same_levels(*this, o);
    return {ladder, from, to, mat + o.mat};
}
AdjointableMap AdjointableMap::operator-(const AdjointableMap& o) const {
    check_same_levels(*this, o);
    return {ladder, from, to, mat - o.mat};
}
AdjointableMap AdjointableMap::compose(const AdjointableMap& inner) const {
    if (ladder != inner.ladder || from != inner.to)
        throw StructuralError("composition level mismatch");
    return {ladder, inner.from, to, mat * inner.mat};
}

AdjointableMap AdjointableMap::left_action(const Vector& a) const {
    const auto& cod = ladder->level(to);
    Matrix act = Matrix::Zero(mat.rows(), mat.rows());
    for (int p = 0; p < a.size(); ++p)
        if (a(p) != 0.0) act += a(p) * cod->act_left_tensors()[p];
    return {ladder, from, to, act * mat};
}

AdjointableMap AdjointableMap::right_action(const Vector& b) const {
    const auto& dom = ladder->level(from);
    Matrix act = Matrix::Zero(mat.cols(), mat.cols());
    for (int p = 0; p < b.size(); ++p)
        if (b(p) != 0.0) act += b(p) * dom->act_left_tensors()[p];
    return {ladder, from, to, mat * act};
}

double AdjointableMap::norm() const {
    Matrix loc = ladder->level(to)->gram_sqrt() * mat * ladder->level(from)->gram_inv_sqrt();
    if (loc.size() == 0) return 0.0;
    Eigen::JacobiSVD<Matrix> svd(loc);
    return svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
}

double AdjointableMap::right_linearity_residual() const {
    const auto& dom = ladder->level(from);
    const auto& cod = ladder->level(to);
    const int dA = ladder->algebra()->dim();
    double r = 0;
    for (int q = 0; q < dA; ++q) {
        Matrix lhs = mat * dom->act_right_tensors()[q];
        Matrix rhs = cod->act_right_tensors()[q] * mat;
        r = std::max(r, (lhs - rhs).cwiseAbs().maxCoeff());
    }
    return r;
}

AdjointableMap adjoint(const AdjointableMap& T, double tol) {
    const auto& dom = T.ladder->level(T.from);
    const auto& cod = T.ladder->level(T.to);
    AdjointableMap S{T.ladder, T.to, T.from, dom->gram_inv() * T.mat.adjoint() * cod->gram()};
    if (S.right_linearity_residual() > tol * std::max(1.0, T.norm()))
        throw ValidationError("adjoint failed right-linearity: input is not a module map");
    return S;
}

AdjointableMap adjoint_left(const AdjointableMap& T) {
    const auto& dom = T.ladder->level(T.from);
    const auto& cod = T.ladder->level(T.to);
    return {T.ladder, T.to, T.from, dom->gram_left_inv() * T.mat.adjoint() * cod->gram_left()};
}

AdjointableMap creation_left(const LadderPtr& ladder, int p, const Vector& y, int n) {
    const Matrix& C = ladder->contraction(p, n);
    const int dn = ladder->level_dim(n);
    if (y.size() != ladder->level_dim(p)) throw StructuralError("creation_left: bad symbol size");
    Matrix M = Matrix::Zero(ladder->level_dim(n + p), dn);
    for (int i = 0; i < y.size(); ++i)
        if (y(i) != 0.0) M += y(i) * C.middleCols(i * dn, dn);
    return {ladder, n, n + p, std::move(M)};
}

AdjointableMap creation_right(const LadderPtr& ladder, int q, const Vector& z, int n) {
    const Matrix& C = ladder->contraction(n, q);
    const int dq = ladder->level_dim(q), dn = ladder->level_dim(n);
    if (z.size() != dq) throw StructuralError("creation_right: bad symbol size");
    Matrix M(ladder->level_dim(n + q), dn);
    for (int a = 0; a < dn; ++a) {
        Vector col = Vector::Zero(M.rows());
        for (int j = 0; j < dq; ++j)
            if (z(j) != 0.0) col += z(j) * C.col(a * dq + j);
        M.col(a) = col;
    }
    return {ladder, n, n + q, std::move(M)};
}

std::vector<std::pair<Vector, Vector>> unit_decomposition(const LadderPtr& ladder, int n,
                                                          double tol) {
    const auto& Z = ladder->level(n);
    const auto& A = *ladder->algebra();
    const int d = Z->dim();
    // solve sum_{ij} c_ij <e_i, e_j>_L = 1 by least squares
    const Matrix& IL = Z->inner_L_tensor();
    Vector unit = A.unit();
    Vector c = IL.completeOrthogonalDecomposition().solve(unit);
    Vector achieved = IL * c;
    if ((achieved - unit).norm() > tol)
        throw ValidationError("unit_decomposition: module is not full at level " +
                              std::to_string(n));
    std::vector<std::pair<Vector, Vector>> pairs;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Complex cij = c(i * d + j);
            if (std::abs(cij) < 1e-14) continue;
            Vector u = Vector::Zero(d), v = Vector::Zero(d);
            u(i) = 1.0;
            v(j) = std::conj(cij);  // <u, conj(c) e_j>_L = c <e_i, e_j>_L
            pairs.emplace_back(std::move(u), std::move(v));
        }
    return pairs;
}

SymbolExtraction extract_symbol_checked(const AdjointableMap& T) {
    const auto& ladder = T.ladder;
    const int n = T.from, m = T.to, p = m - n;
    Vector eta = Vector::Zero(ladder->level_dim(p));
    for (const auto& [u, v] : unit_decomposition(ladder, n)) {
        AdjointableMap Rv = creation_right(ladder, n, v, p);  // level p -> level m
        eta += adjoint_left(Rv).apply(T.apply(u));
    }
    AdjointableMap rec = creation_left(ladder, p, eta, n);
    return {std::move(eta), (T - rec).norm()};
}

Vector extract_symbol(const AdjointableMap& T, double tol) {
    SymbolExtraction se = extract_symbol_checked(T);
    if (se.residual > tol * std::max(1.0, T.norm()))
        throw ValidationError("extract_symbol: map is not a creation operator (residual " +
                              std::to_string(se.residual) + ")");
    return std::move(se.symbol);
}

AdjointableMap multiplier_H(const AdjointableMap& phi, int n) {
    if (phi.from != 0) throw StructuralError("multiplier_H expects a map out of level 0");
    Vector eta = phi.apply(phi.ladder->algebra()->unit());
    return creation_left(phi.ladder, phi.to, eta, n);
}

AdjointableMap multiplier_J(const AdjointableMap& T, double tol) {
    return creation_left(T.ladder, T.to - T.from, extract_symbol(T, tol), 0);
}

AdjointableMap alpha_shift(const AdjointableMap& T, double tol) {
    return creation_left(T.ladder, T.to - T.from, extract_symbol(T, tol), T.from - 1);
}

}  // namespace bimtoep
