#ifndef BIMTOEP_L2WINDOW_HPP
#define BIMTOEP_L2WINDOW_HPP

#include "bimtoep/operators.hpp"

#include <optional>

namespace bimtoep {

/// An element of the truncated l2(X): one component per level k, |k| <= N.
struct WindowedL2Element {
    LadderPtr ladder;
    int N = 0;
    std::vector<Vector> components;  // index k + N

    WindowedL2Element() = default;
    WindowedL2Element(LadderPtr l, int window);

    Vector& at(int k);
    const Vector& at(int k) const;

    WindowedL2Element operator+(const WindowedL2Element& o) const;
    WindowedL2Element operator-(const WindowedL2Element& o) const;
    WindowedL2Element scaled(Complex s) const;

    /// || sum_k <xi(k), xi(k)>_R ||^{1/2}
    double norm() const;
};

WindowedL2Element embed(const LadderPtr& ladder, const Vector& v, int k, int N);
Vector project(const WindowedL2Element& xi, int k);

/// Block matrix [T]_{ij} over the window; absent blocks are zero.
struct OperatorMatrix {
    LadderPtr ladder;
    int N = 0;
    std::vector<std::optional<Matrix>> blocks;  // index (i+N)*(2N+1) + (j+N)

    OperatorMatrix() = default;
    OperatorMatrix(LadderPtr l, int window);

    bool has_block(int i, int j) const;
    const Matrix& block(int i, int j) const;
    void set_block(int i, int j, Matrix m);
    AdjointableMap block_map(int i, int j) const;  // zero matrix if absent

    static OperatorMatrix identity(const LadderPtr& ladder, int N);

    OperatorMatrix operator+(const OperatorMatrix& o) const;
    OperatorMatrix operator-(const OperatorMatrix& o) const;
    OperatorMatrix scaled(Complex s) const;
    OperatorMatrix compose(const OperatorMatrix& o) const;  // truncated block product
    OperatorMatrix blockwise_adjoint() const;               // (M*)_{ij} = (M_{ji})*

    WindowedL2Element apply(const WindowedL2Element& xi) const;
};

struct ToeplitzCheck {
    bool is_toeplitz = false;
    double max_residual = 0.0;
    int offending_i = 0, offending_j = 0;
    std::vector<std::tuple<int, int, double>> residuals;  // (i, j, residual)
};

/// alpha^{j,i}([M]_{ij}) = [M]_{i-1,j-1} at every interior index pair
ToeplitzCheck is_toeplitz(const OperatorMatrix& M, double tol = 1e-8);

/// p_v(M) = || M (v delta_j) ||
double sigma_seminorm(const OperatorMatrix& M, const Vector& v, int j);

}  // namespace bimtoep

#endif
