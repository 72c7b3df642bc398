#ifndef BIMTOEP_LADDER_HPP
#define BIMTOEP_LADDER_HPP

#include "bimtoep/bimodule.hpp"

#include <map>

namespace bimtoep {

/// The family X^{tensor n} for |n| <= 2*radius, X an A-A imprimitivity
/// bimodule.  Level 0 is A as a bimodule over itself, positive levels are
/// built as level(n) = level(n-1) (x) X through the Gram quotient, negative
/// levels are the duals of the positive ones.  All pairwise contraction maps
/// realizing the identifications  a(x)x = ax,  x(x)a = xa,
/// x~(x)y = <x,y>_R,  x(x)y~ = <x,y>_L  are cached as dense bilinear maps.
class TensorLadder {
public:
    TensorLadder(AlgebraPtr algebra, BimodulePtr base, int radius);

    const AlgebraPtr& algebra() const { return algebra_; }
    const BimodulePtr& base() const { return base_; }
    int radius() const { return radius_; }
    int range() const { return 2 * radius_; }  // levels -range..range exist

    const BimodulePtr& level(int n) const;
    int level_dim(int n) const { return level(n)->dim(); }

    /// bilinear contraction map level m x level n -> level m+n, as a matrix
    /// of shape dim(m+n) x (dim(m)*dim(n)); column index i*dim(n)+j.
    const Matrix& contraction(int m, int n) const;

    Vector contract(int m, int n, const Vector& s, const Vector& t) const;

    /// antilinear identification level n -> level -n (x -> x~): coefficient
    /// conjugation under the dual-basis convention; at level 0 it is the
    /// algebra involution a -> a*.
    Vector dualize(int n, const Vector& v) const {
        return n == 0 ? algebra_->involution(v) : v.conjugate();
    }

    /// canonical section of the quotient map level(n-1) (x) X -> level(n), n >= 1
    const Matrix& lift(int n) const;

private:
    void check_range(int n, const char* what) const;

    AlgebraPtr algebra_;
    BimodulePtr base_;
    int radius_;
    std::map<int, BimodulePtr> levels_;
    std::map<int, Matrix> lifts_;  // n >= 1
    std::map<std::pair<int, int>, Matrix> contractions_;
};

using LadderPtr = std::shared_ptr<const TensorLadder>;

LadderPtr build_ladder(const BimodulePtr& X, int radius);

}  // namespace bimtoep

#endif
