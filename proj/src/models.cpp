#include "bimtoep/models.hpp"

namespace bimtoep {

double Model::tol(const std::string& key, double fallback) const {
    auto it = tolerances.find(key);
    return it == tolerances.end() ? fallback : it->second;
}

BimodulePtr twisted_bimodule(const AlgebraPtr& A, const Matrix& sigma) {
    const int d = A->dim();
    if (sigma.rows() != d || sigma.cols() != d)
        throw StructuralError("automorphism matrix has wrong shape");
    // sanity: sigma must be multiplicative, *-preserving, and unital
    {
        Vector u = A->unit();
        if ((sigma * u - u).norm() > 1e-9)
            throw ValidationError("automorphism does not fix the unit");
        for (int p = 0; p < d; ++p)
            for (int q = 0; q < d; ++q) {
                Vector ep = Vector::Zero(d), eq = Vector::Zero(d);
                ep(p) = 1.0;
                eq(q) = 1.0;
                Vector lhs = sigma * A->multiply(ep, eq);
                Vector rhs = A->multiply(sigma * ep, sigma * eq);
                if ((lhs - rhs).norm() > 1e-9)
                    throw ValidationError("automorphism is not multiplicative");
            }
    }
    std::vector<Matrix> al(d), ar(d);
    for (int p = 0; p < d; ++p) {
        al[p] = A->left_mult(p);
        Matrix acc = Matrix::Zero(d, d);
        Vector ep = Vector::Zero(d);
        ep(p) = 1.0;
        Vector sp = sigma * ep;
        for (int q = 0; q < d; ++q)
            if (sp(q) != 0.0) acc += sp(q) * A->right_mult(q);
        ar[p] = acc;
    }
    // <x, y.a>_R = <x, y sigma(a)>_R must equal <x,y>_R a, so the right
    // inner product untwists: <x,y>_R = sigma^{-1}(x* y)
    Matrix sigma_inv = sigma.inverse();
    Matrix IL(d, d * d), IR(d, d * d);
    for (int i = 0; i < d; ++i) {
        Vector ei = Vector::Zero(d);
        ei(i) = 1.0;
        for (int j = 0; j < d; ++j) {
            Vector ej = Vector::Zero(d);
            ej(j) = 1.0;
            IL.col(i * d + j) = A->multiply(ei, A->involution(ej));
            IR.col(i * d + j) = sigma_inv * A->multiply(A->involution(ei), ej);
        }
    }
    return std::make_shared<Bimodule>(A, A, d, std::move(al), std::move(ar), std::move(IL),
                                      std::move(IR));
}

Matrix block_permutation_automorphism(const CStarAlgebra& A, const std::vector<int>& perm) {
    const auto& dims = A.block_dims();
    if (perm.size() != dims.size()) throw StructuralError("permutation length mismatch");
    std::vector<bool> seen(dims.size(), false);
    for (size_t b = 0; b < dims.size(); ++b) {
        int t = perm[b];
        if (t < 0 || t >= static_cast<int>(dims.size()) || seen[t])
            throw StructuralError("not a permutation");
        if (dims[t] != dims[b]) throw StructuralError("permutation mixes blocks of unequal size");
        seen[t] = true;
    }
    // sigma sends block b to block perm[b]
    Matrix S = Matrix::Zero(A.dim(), A.dim());
    for (size_t b = 0; b < dims.size(); ++b)
        for (int r = 0; r < dims[b]; ++r)
            for (int c = 0; c < dims[b]; ++c)
                S(A.unit_index(perm[b], r, c), A.unit_index(b, r, c)) = 1.0;
    return S;
}

Matrix inner_automorphism(const CStarAlgebra& A, const std::vector<Matrix>& unitaries) {
    const auto& dims = A.block_dims();
    if (unitaries.size() != dims.size()) throw StructuralError("need one unitary per block");
    for (size_t b = 0; b < dims.size(); ++b) {
        const Matrix& u = unitaries[b];
        if (u.rows() != dims[b] || u.cols() != dims[b]) throw StructuralError("unitary shape mismatch");
        if ((u * u.adjoint() - Matrix::Identity(dims[b], dims[b])).cwiseAbs().maxCoeff() > 1e-9)
            throw ValidationError("matrix is not unitary");
    }
    Matrix S = Matrix::Zero(A.dim(), A.dim());
    for (int q = 0; q < A.dim(); ++q) {
        Vector e = Vector::Zero(A.dim());
        e(q) = 1.0;
        auto blocks = A.to_blocks(e);
        for (size_t b = 0; b < dims.size(); ++b)
            blocks[b] = unitaries[b] * blocks[b] * unitaries[b].adjoint();
        S.col(q) = A.from_blocks(blocks);
    }
    return S;
}

Model builtin_model(const std::string& name, int window) {
    Model m;
    m.name = name;
    m.window = window;
    if (name == "scalar") {
        m.algebra = std::make_shared<CStarAlgebra>(std::vector<int>{1});
        m.bimodule = twisted_bimodule(m.algebra, Matrix::Identity(1, 1));
    } else if (name == "flip") {
        m.algebra = std::make_shared<CStarAlgebra>(std::vector<int>{1, 1});
        m.bimodule =
            twisted_bimodule(m.algebra, block_permutation_automorphism(*m.algebra, {1, 0}));
    } else if (name == "perm3") {
        m.algebra = std::make_shared<CStarAlgebra>(std::vector<int>{1, 1, 1});
        m.bimodule =
            twisted_bimodule(m.algebra, block_permutation_automorphism(*m.algebra, {1, 2, 0}));
    } else if (name == "m2-inner") {
        m.algebra = std::make_shared<CStarAlgebra>(std::vector<int>{2});
        Matrix u(2, 2);
        u << 0, 1, 1, 0;
        m.bimodule = twisted_bimodule(m.algebra, inner_automorphism(*m.algebra, {u}));
    } else {
        throw StructuralError("unknown builtin model: " + name);
    }
    m.ladder = build_ladder(m.bimodule, window);
    return m;
}

std::vector<std::string> builtin_model_names() { return {"scalar", "flip", "perm3", "m2-inner"}; }

}  // namespace bimtoep
