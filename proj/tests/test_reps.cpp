#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "twistlab/reps.hpp"

using namespace twistlab;
using namespace twistlab::gens;

namespace {
Matrix random_matrix(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = Scalar(coeff(rng));
    return m;
}
}  // namespace

TEST_CASE("fundamental representation") {
    const Representation& f = rep_fund();
    CHECK(f.dim() == 3);
    CHECK((f.image(E(1, 3)) * f.image(E(1, 3))).is_zero());
    CHECK(f.image(bracket(E(1, 2), E(2, 3))) == f.image(E(1, 3)));

    Matrix h = f.image(H());
    Matrix expect(3, 3);
    expect(0, 0) = Scalar::rational(1, 3);
    expect(1, 1) = Scalar::rational(1, 3);
    expect(2, 2) = Scalar::rational(-2, 3);
    CHECK(h == expect);
}

TEST_CASE("dual representation") {
    const Representation& d = rep_dual();
    Matrix e31(3, 3);
    e31(2, 0) = Scalar(-1);
    CHECK(d.image(E(1, 3)) == e31);

    Representation dd = Representation::dual_of(d);
    for (int idx = 0; idx < kGlDim; ++idx)
        CHECK(dd.basis_image(idx) == rep_fund().basis_image(idx));

    Matrix h12 = d.image(H12());
    Matrix expect(3, 3);
    expect(0, 0) = Scalar(-1);
    expect(1, 1) = Scalar(1);
    CHECK(h12 == expect);
}

TEST_CASE("tensor product representation") {
    const Representation& m = rep_mixed();
    CHECK(m.dim() == 9);

    Representation ff = Representation::tensor_of(rep_fund(), rep_fund());
    CHECK(ff.dim() == 9);
    Matrix x = ff.image(E(1, 3));
    // oracle: (e13 (x) 1 + 1 (x) e13)^2 = 2 e13 (x) e13, cube vanishes
    Matrix e13 = rep_fund().image(E(1, 3));
    CHECK(x * x == kron(e13, e13) * Scalar(2));
    CHECK((x * x * x).is_zero());
}

TEST_CASE("representation constructor rejects wrong images") {
    std::array<Matrix, kGlDim> bad;
    for (int idx = 0; idx < kGlDim; ++idx) bad[static_cast<std::size_t>(idx)] = Matrix(3, 3);
    bad[0] = rep_fund().basis_image(1);  // E11 image replaced by e12
    CHECK_THROWS_AS(Representation("broken", 3, std::move(bad)), error);
}

TEST_CASE("nilpotent exponential and unipotent logarithm") {
    const Representation& f = rep_fund();
    Matrix e13 = f.image(E(1, 3));
    CHECK(mat_log_unipotent(Matrix::identity(3) + e13) == e13);
    CHECK(mat_exp_nilpotent(Matrix::zero(3)) == Matrix::identity(3));

    // image of the primitive coproduct of sigma: log(1 (x) 1 + Delta e13)
    Matrix de = kron(e13, Matrix::identity(3)) + kron(Matrix::identity(3), e13);
    Matrix logm = mat_log_unipotent(Matrix::identity(9) + de);
    CHECK(logm == de - (de * de) * Scalar::rational(1, 2));
    CHECK((de * de * de).is_zero());

    // exp/log are exact inverses on unipotents
    CHECK(mat_exp_nilpotent(logm) == Matrix::identity(9) + de);

    Matrix h = f.image(H12());
    CHECK_THROWS_AS(mat_exp_nilpotent(h), nilpotency_error);
    CHECK_THROWS_AS(mat_log_unipotent(Matrix::identity(3) + h), nilpotency_error);
}

TEST_CASE("kronecker embeddings and leg swaps") {
    std::mt19937 rng(5);
    Matrix a = random_matrix(rng, 9), b = random_matrix(rng, 9);
    Matrix a3 = random_matrix(rng, 3), b3 = random_matrix(rng, 3);

    CHECK(swap_legs(swap_legs(a, 3), 3) == a);
    CHECK(swap_legs(kron(a3, b3), 3) == kron(b3, a3));

    CHECK(embed_pair(a, LegPair::L12, 3) == kron(a, Matrix::identity(3)));
    CHECK(embed_pair(a, LegPair::L23, 3) == kron(Matrix::identity(3), a));

    // embed respects multiplication on every leg pair
    for (LegPair legs : {LegPair::L12, LegPair::L13, LegPair::L23})
        CHECK(embed_pair(a * b, legs, 3) == embed_pair(a, legs, 3) * embed_pair(b, legs, 3));

    // kron is associative up to the reindexing embed uses
    Matrix c3 = random_matrix(rng, 3);
    CHECK(kron(kron(a3, b3), c3) == kron(a3, kron(b3, c3)));
    CHECK(embed_pair(kron(a3, c3), LegPair::L13, 3) ==
          kron(kron(a3, Matrix::identity(3)), c3));
}

TEST_CASE("exact inverse") {
    std::mt19937 rng(17);
    Matrix m = random_matrix(rng, 4) + Matrix::identity(4) * Scalar(7);
    CHECK(inverse(m) * m == Matrix::identity(4));

    // unipotent with a symbolic parameter
    Scalar lam(Param::Lambda);
    Matrix u = Matrix::identity(3);
    u(0, 2) = lam;
    u(1, 2) = lam * lam - Scalar(1);
    CHECK(inverse(u) * u == Matrix::identity(3));

    CHECK_THROWS_AS(inverse(Matrix::zero(2)), arith_error);
}
