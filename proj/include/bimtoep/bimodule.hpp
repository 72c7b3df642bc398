#ifndef BIMTOEP_BIMODULE_HPP
#define BIMTOEP_BIMODULE_HPP

#include "bimtoep/algebra.hpp"

#include <optional>
#include <utility>

namespace bimtoep {

/// Finite-dimensional imprimitivity bimodule over a pair of C*-algebras,
/// given by explicit structure tensors over a fixed basis e_0..e_{d-1}:
///   a . x        = sum_p a_p act_left[p] x
///   x . b        = sum_q b_q act_right[q] x
///   <x,y>_L      = sum_{i,j} x_i conj(y_j) inner_L(:, i*d+j)
///   <x,y>_R      = sum_{i,j} conj(x_i) y_j inner_R(:, i*d+j)
/// so <.,.>_L is conjugate-linear in its second slot and <.,.>_R in its first.
class Bimodule {
public:
    Bimodule(AlgebraPtr left, AlgebraPtr right, int dim,
             std::vector<Matrix> act_left, std::vector<Matrix> act_right,
             Matrix inner_L, Matrix inner_R);

    const AlgebraPtr& left_algebra() const { return left_; }
    const AlgebraPtr& right_algebra() const { return right_; }
    int dim() const { return dim_; }

    Vector act_left(const Vector& a, const Vector& x) const;
    Vector act_right(const Vector& x, const Vector& b) const;
    Vector inner_L(const Vector& x, const Vector& y) const;  // element of left algebra
    Vector inner_R(const Vector& x, const Vector& y) const;  // element of right algebra

    const std::vector<Matrix>& act_left_tensors() const { return act_left_; }
    const std::vector<Matrix>& act_right_tensors() const { return act_right_; }
    const Matrix& inner_L_tensor() const { return inner_L_; }
    const Matrix& inner_R_tensor() const { return inner_R_; }

    double module_norm(const Vector& x) const;  // ||<x,x>_R||^{1/2}

    // tau-localization of the right inner product: G_ij = tau(<e_i,e_j>_R),
    // Hermitian positive definite for a valid module.  Right-linear maps are
    // adjointed and normed through these.
    const Matrix& gram() const { return gram_; }
    const Matrix& gram_sqrt() const { return gram_sqrt_; }
    const Matrix& gram_inv_sqrt() const { return gram_inv_sqrt_; }
    const Matrix& gram_inv() const { return gram_inv_; }

    // tau-localization of the left inner product, GL_ij = tau(<e_j,e_i>_L);
    // the analogue for left-linear maps (right creation operators).
    const Matrix& gram_left() const { return gram_left_; }
    const Matrix& gram_left_sqrt() const { return gram_left_sqrt_; }
    const Matrix& gram_left_inv_sqrt() const { return gram_left_inv_sqrt_; }
    const Matrix& gram_left_inv() const { return gram_left_inv_; }

private:
    AlgebraPtr left_, right_;
    int dim_;
    std::vector<Matrix> act_left_, act_right_;
    Matrix inner_L_, inner_R_;
    Matrix gram_, gram_sqrt_, gram_inv_sqrt_, gram_inv_;
    Matrix gram_left_, gram_left_sqrt_, gram_left_inv_sqrt_, gram_left_inv_;
};

using BimodulePtr = std::shared_ptr<const Bimodule>;

struct ModuleElement {
    BimodulePtr owner;
    Vector coeffs;

    ModuleElement() = default;
    ModuleElement(BimodulePtr m, Vector c);
    ModuleElement operator+(const ModuleElement& o) const;
    ModuleElement operator-(const ModuleElement& o) const;
    ModuleElement scaled(Complex s) const;
    double norm() const { return owner->module_norm(coeffs); }
};

AlgebraElement evaluate_inner(char side, const ModuleElement& x, const ModuleElement& y);

struct CheckResult {
    std::string name;
    double residual = 0.0;
    bool pass = false;
};

struct ValidationReport {
    std::vector<CheckResult> checks;
    bool passed() const;
    std::string summary() const;
};

ValidationReport validate_bimodule(const Bimodule& X, double tol = 1e-9);

/// A as an A-A bimodule: actions by multiplication, <a,b>_L = a b*,
/// <a,b>_R = a* b.
BimodulePtr algebra_as_bimodule(const AlgebraPtr& A);

/// Conjugate-space dual: a B-A bimodule on the same coefficient space, with
/// x~ carrying the conjugated coefficients of x.
BimodulePtr dual_bimodule(const BimodulePtr& X);

struct TensorProduct {
    BimodulePtr module;   // the quotient bimodule
    Matrix quotient_map;  // algebraic basis (i*dimY + j) -> quotient coefficients
    Matrix lift;          // canonical section: quotient_map * lift = identity
};

/// Interior tensor product X (A-B) x Y (B-C) -> A-C, realized as the quotient
/// of the algebraic tensor product by the null space of the tau-scalarized
/// right inner product.  Quotient basis: Gram-Schmidt over the lexicographic
/// algebraic basis, dropping vectors whose squared residual is below
/// 1e-10 * (largest Gram eigenvalue).
TensorProduct tensor_product(const BimodulePtr& X, const BimodulePtr& Y);

}  // namespace bimtoep

#endif
