#include "bimtoep/algebra.hpp"

#include <doctest.h>

#include <random>

using namespace bimtoep;

namespace {

Vector random_element(const CStarAlgebra& A, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Vector v(A.dim());
    for (int i = 0; i < A.dim(); ++i) v(i) = Complex(u(rng), u(rng));
    return v;
}

}  // namespace

TEST_CASE("diagonal multiplication in C+C") {
    CStarAlgebra A({1, 1});
    Vector a(2), b(2);
    a << 1.0, 2.0;
    b << 3.0, 4.0;
    Vector p = A.multiply(a, b);
    CHECK(p(0) == Complex(3.0));
    CHECK(p(1) == Complex(8.0));
}

TEST_CASE("involution is the blockwise conjugate transpose") {
    CStarAlgebra A({2});
    Vector a = Vector::Zero(4);
    a(A.unit_index(0, 0, 1)) = 1.0;  // E_01
    Vector s = A.involution(a);
    CHECK(std::abs(s(A.unit_index(0, 1, 0)) - 1.0) < 1e-15);
    CHECK(std::abs(s(A.unit_index(0, 0, 1))) < 1e-15);
}

TEST_CASE("unit is a two-sided identity") {
    CStarAlgebra A({1, 2});
    std::mt19937_64 rng(11);
    for (int s = 0; s < 50; ++s) {
        Vector a = random_element(A, rng);
        CHECK((A.multiply(a, A.unit()) - a).norm() < 1e-14);
        CHECK((A.multiply(A.unit(), a) - a).norm() < 1e-14);
    }
    CHECK(A.norm(A.unit()) == doctest::Approx(1.0));
}

TEST_CASE("norm is the max block singular value") {
    CStarAlgebra A({1, 1});
    Vector a(2);
    a << Complex(3.0, 0.0), Complex(0.0, 4.0);
    CHECK(A.norm(a) == doctest::Approx(4.0));
}

TEST_CASE("C*-identity and submultiplicativity") {
    std::mt19937_64 rng(12);
    for (auto blocks : {std::vector<int>{1}, {1, 1}, {2}, {1, 2}}) {
        CStarAlgebra A(blocks);
        for (int s = 0; s < 100; ++s) {
            Vector a = random_element(A, rng), b = random_element(A, rng);
            Vector aa = A.multiply(A.involution(a), a);
            CHECK(std::abs(A.norm(aa) - A.norm(a) * A.norm(a)) < 1e-10);
            CHECK(A.norm(A.multiply(a, b)) <= A.norm(a) * A.norm(b) + 1e-10);
            CHECK(A.is_positive(aa));
        }
    }
}

TEST_CASE("positivity check on diagonal matrices") {
    CStarAlgebra A({2});
    Vector pos = Vector::Zero(4), neg = Vector::Zero(4);
    pos(A.unit_index(0, 0, 0)) = 1.0;
    neg(A.unit_index(0, 0, 0)) = 1.0;
    neg(A.unit_index(0, 1, 1)) = -1.0;
    CHECK(A.is_positive(pos));
    CHECK(!A.is_positive(neg));
}

TEST_CASE("trace: unit dimension count, symmetry, faithfulness") {
    CStarAlgebra A({1, 2});
    CHECK(std::abs(A.trace(A.unit()) - Complex(3.0)) < 1e-15);
    std::mt19937_64 rng(13);
    for (int s = 0; s < 50; ++s) {
        Vector a = random_element(A, rng), b = random_element(A, rng);
        CHECK(std::abs(A.trace(A.involution(a)) - std::conj(A.trace(a))) < 1e-12);
        CHECK(std::abs(A.trace(A.multiply(a, b)) - A.trace(A.multiply(b, a))) < 1e-12);
        double t = std::real(A.trace(A.multiply(A.involution(a), a)));
        CHECK(t >= 1e-12 * a.squaredNorm());
    }
}

TEST_CASE("element wrapper rejects mismatched algebras") {
    auto A = std::make_shared<CStarAlgebra>(std::vector<int>{1});
    auto B = std::make_shared<CStarAlgebra>(std::vector<int>{1, 1});
    AlgebraElement a(A, Vector::Ones(1));
    AlgebraElement b(B, Vector::Ones(2));
    CHECK_THROWS_AS((void)(a * b), StructuralError);
    CHECK_THROWS_AS(AlgebraElement(B, Vector::Ones(1)), StructuralError);
}
