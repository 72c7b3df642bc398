#ifndef BIMTOEP_MODELS_HPP
#define BIMTOEP_MODELS_HPP

#include "bimtoep/ladder.hpp"

#include <map>

namespace bimtoep {

struct Model {
    std::string name;
    AlgebraPtr algebra;
    BimodulePtr bimodule;
    LadderPtr ladder;
    int window = 0;  // l2 window radius N; ladder range is 2N
    std::map<std::string, double> tolerances;

    double tol(const std::string& key, double fallback) const;
};

/// X = A with the right action twisted by an automorphism sigma (given on
/// coefficient vectors): x.a = x sigma(a), <x,y>_L = x y*, <x,y>_R = sigma(x* y).
BimodulePtr twisted_bimodule(const AlgebraPtr& A, const Matrix& sigma);

/// automorphism permuting equal-sized blocks
Matrix block_permutation_automorphism(const CStarAlgebra& A, const std::vector<int>& perm);

/// inner automorphism a -> u a u* from one unitary per block
Matrix inner_automorphism(const CStarAlgebra& A, const std::vector<Matrix>& unitaries);

/// builtin models: "scalar", "flip", "perm3", "m2-inner"
Model builtin_model(const std::string& name, int window = 3);
std::vector<std::string> builtin_model_names();

}  // namespace bimtoep

#endif
