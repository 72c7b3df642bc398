#ifndef BIMTOEP_OPERATORS_HPP
#define BIMTOEP_OPERATORS_HPP

#include "bimtoep/ladder.hpp"

namespace bimtoep {

/// A linear map between two ladder levels, stored as a dense matrix over the
/// deterministic level bases.  The maps handled here are right A-linear and
/// adjointable; both properties can be re-validated numerically.
struct AdjointableMap {
    LadderPtr ladder;
    int from = 0, to = 0;
    Matrix mat;

    AdjointableMap() = default;
    AdjointableMap(LadderPtr l, int from_level, int to_level, Matrix m);

    Vector apply(const Vector& x) const { return mat * x; }

    AdjointableMap operator+(const AdjointableMap& o) const;
    AdjointableMap operator-(const AdjointableMap& o) const;
    AdjointableMap scaled(Complex s) const { return {ladder, from, to, s * mat}; }
    AdjointableMap compose(const AdjointableMap& inner) const;  // this o inner

    // bimodule actions of Notation: (a.T)(z) = a T(z), (T.b)(z) = T(bz)
    AdjointableMap left_action(const Vector& a) const;
    AdjointableMap right_action(const Vector& b) const;

    /// C*-norm, via the tau-localized singular values
    double norm() const;

    /// max over basis pairs of ||T(x e_q) - T(x) e_q||
    double right_linearity_residual() const;
};

/// the unique right-module adjoint; throws if the result fails right-linearity
/// (which signals the input was not a module map)
AdjointableMap adjoint(const AdjointableMap& T, double tol = 1e-7);

/// T^n_y : level n -> level n+p, z -> y (x) z, for y in level p
AdjointableMap creation_left(const LadderPtr& ladder, int p, const Vector& y, int n);

/// R^n_z : level n -> level n+q, y -> y (x) z, for z in level q.
/// Left-linear; pair with adjoint_left.
AdjointableMap creation_right(const LadderPtr& ladder, int q, const Vector& z, int n);

/// the left-module adjoint, for left-linear maps such as creation_right
AdjointableMap adjoint_left(const AdjointableMap& T);

/// pairs (u_i, v_i) in level n with sum_i <u_i,v_i>_L = 1_A, found by least
/// squares over all basis pairs; throws on rank deficiency (non-full module)
std::vector<std::pair<Vector, Vector>> unit_decomposition(const LadderPtr& ladder, int n,
                                                          double tol = 1e-10);

struct SymbolExtraction {
    Vector symbol;    // element of level to-from
    double residual;  // ||T - creation_left(symbol, from)||
};

/// Recovers eta with T = T^n_eta.  Every right-adjointable map between ladder
/// levels has this form (unital coefficients), so a large residual flags a
/// numerically invalid input.
SymbolExtraction extract_symbol_checked(const AdjointableMap& T);
Vector extract_symbol(const AdjointableMap& T, double tol = 1e-7);

/// H: phi (level 0 -> level p) -> (level n -> level n+p), bz -> phi(b) (x) z
AdjointableMap multiplier_H(const AdjointableMap& phi, int n);

/// J: T (level n -> level n+p) -> (level 0 -> level p), b -> eta b
AdjointableMap multiplier_J(const AdjointableMap& T, double tol = 1e-7);

/// the shift isomorphism: T^n_eta -> T^{n-1}_eta
AdjointableMap alpha_shift(const AdjointableMap& T, double tol = 1e-7);

}  // namespace bimtoep

#endif
