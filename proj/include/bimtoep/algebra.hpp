#ifndef BIMTOEP_ALGEBRA_HPP
#define BIMTOEP_ALGEBRA_HPP

#include <Eigen/Dense>
#include <complex>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace bimtoep {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Shape/ownership mismatches between structures that can never interoperate.
struct StructuralError : Error {
    using Error::Error;
};

// A structure failed an axiom check (positivity, fullness, ...).
struct ValidationError : Error {
    using Error::Error;
};

/// Finite-dimensional C*-algebra: a direct sum of full complex matrix
/// blocks M_{n_1} ⊕ ... ⊕ M_{n_r}.  Elements are stored as flat coefficient
/// vectors over the matrix-unit basis, ordered block by block, row-major
/// within each block.
class CStarAlgebra {
public:
    explicit CStarAlgebra(std::vector<int> block_dims);

    const std::vector<int>& block_dims() const { return block_dims_; }
    int dim() const { return dim_; }  // total vector-space dimension

    // flat index of the matrix unit E^{(b)}_{rs}
    int unit_index(int block, int row, int col) const;

    std::vector<Matrix> to_blocks(const Vector& coeffs) const;
    Vector from_blocks(const std::vector<Matrix>& blocks) const;

    Vector unit() const;
    Vector multiply(const Vector& a, const Vector& b) const;
    Vector involution(const Vector& a) const;

    Complex trace(const Vector& a) const;      // tau(a) = sum of block traces
    double norm(const Vector& a) const;        // max singular value over blocks
    bool is_positive(const Vector& a, double tol = 1e-9) const;

    // left/right regular multiplication matrix of the basis element p
    const Matrix& left_mult(int p) const { return left_mult_[p]; }
    const Matrix& right_mult(int p) const { return right_mult_[p]; }

    bool same_shape(const CStarAlgebra& other) const { return block_dims_ == other.block_dims_; }

private:
    std::vector<int> block_dims_;
    std::vector<int> offsets_;
    int dim_ = 0;
    std::vector<Matrix> left_mult_, right_mult_;
};

using AlgebraPtr = std::shared_ptr<const CStarAlgebra>;

/// Coefficient vector bound to its algebra.  Thin wrapper used at the API
/// surface; the numeric kernels work on raw vectors.
struct AlgebraElement {
    AlgebraPtr owner;
    Vector coeffs;

    AlgebraElement() = default;
    AlgebraElement(AlgebraPtr alg, Vector c);

    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator-(const AlgebraElement& o) const;
    AlgebraElement operator*(const AlgebraElement& o) const;
    AlgebraElement scaled(Complex s) const;
    AlgebraElement star() const;
    double norm() const { return owner->norm(coeffs); }
    Complex trace() const { return owner->trace(coeffs); }
};

}  // namespace bimtoep

#endif
