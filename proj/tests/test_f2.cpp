#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "foldgate/f2.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace foldgate::f2;

TEST_CASE("rank basics") {
    CHECK(rank(BitMatrix::identity(3)) == 3);
    CHECK(rank(BitMatrix(4, 7)) == 0);
    CHECK(rank(BitMatrix(0, 5)) == 0);
    CHECK(rank(BitMatrix(5, 0)) == 0);
}

TEST_CASE("rank of Bring's H_X is 11") {
    auto loaded = testutil::load_code("bring_reference.json");
    CHECK(loaded.code.hx.rows() == 12);
    CHECK(loaded.code.hx.cols() == 30);
    CHECK(oracles::naive_rank(oracles::to_ints(loaded.code.hx)) == 11);
    CHECK(rank(loaded.code.hx) == 11);
    CHECK(rank(loaded.code.hz) == 11);
}

TEST_CASE("kernel basis") {
    CHECK(kernel_basis(BitMatrix::identity(3)).rows() == 0);
    BitMatrix single(1, 2);
    single.set(0, 0, true);
    single.set(0, 1, true);
    BitMatrix k = kernel_basis(single);
    REQUIRE(k.rows() == 1);
    CHECK(k.get(0, 0));
    CHECK(k.get(0, 1));

    auto bring = testutil::load_code("bring_reference.json");
    CHECK(kernel_basis(bring.code.hx).rows() == 19);  // 30 - 11
}

TEST_CASE("solve") {
    BitVector b(2);
    b.set(0, true);
    auto x = solve(BitMatrix::identity(2), b);
    REQUIRE(x.has_value());
    CHECK(x->get(0));
    CHECK_FALSE(x->get(1));

    CHECK_FALSE(solve(BitMatrix(3, 4), BitVector::unit(3, 1)).has_value());

    // a face boundary is in the image of H_Z^T
    auto bring = testutil::load_code("bring_reference.json");
    BitMatrix hzt = bring.code.hz.transposed();
    auto sol = solve(hzt, bring.code.hz.row(3));
    REQUIRE(sol.has_value());
    CHECK(hzt.apply_row(*sol).none() == false);
}

TEST_CASE("quotient basis") {
    BitMatrix b(1, 2);
    b.set(0, 0, true);
    b.set(0, 1, true);
    BitMatrix q = quotient_basis(BitMatrix::identity(2), b);
    REQUIRE(q.rows() == 1);
    CHECK(rank(q.vstack(b)) == 2);

    CHECK(quotient_basis(b, b).rows() == 0);

    auto bring = testutil::load_code("bring_reference.json");
    BitMatrix cycles = kernel_basis(bring.code.hx);
    BitMatrix reps = quotient_basis(cycles, bring.code.hz);
    CHECK(reps.rows() == 8);

    BitMatrix bigger = BitMatrix::identity(3);
    BitMatrix outside(1, 3);
    outside.set(0, 0, true);
    CHECK_THROWS(quotient_basis(outside, bigger));
}

TEST_CASE("randomized properties") {
    testutil::Rng rng;
    for (int t = 0; t < 60; ++t) {
        std::size_t rows = 1 + rng.below(7), cols = 1 + rng.below(9);
        BitMatrix m = testutil::random_matrix(rng, rows, cols);
        std::size_t r = rank(m);
        CHECK(r == rank(m.transposed()));
        CHECK(r == oracles::naive_rank(oracles::to_ints(m)));
        CHECK(r + kernel_basis(m).rows() == cols);

        BitVector b(rows);
        for (std::size_t i = 0; i < rows; ++i) b.set(i, rng.coin());
        auto x = solve(m, b);
        if (x) {
            BitVector recon(rows);
            for (std::size_t i = 0; i < rows; ++i) recon.set(i, m.row(i).overlap_parity(*x));
            CHECK(recon == b);
        }
    }
}

TEST_CASE("quotient rows are independent mod the subspace") {
    testutil::Rng rng;
    for (int t = 0; t < 30; ++t) {
        std::size_t cols = 2 + rng.below(8);
        BitMatrix z = testutil::random_matrix(rng, 1 + rng.below(6), cols);
        // build b inside row(z)
        BitMatrix b(0, cols);
        for (std::size_t i = 0; i < 2; ++i) {
            BitVector v(cols);
            for (std::size_t j = 0; j < z.rows(); ++j)
                if (rng.coin()) v ^= z.row(j);
            b.append_row(v);
        }
        BitMatrix q = quotient_basis(z, b);
        CHECK(q.rows() == rank(z) - rank(b));
        CHECK(rank(q.vstack(b)) == q.rows() + rank(b));
    }
}

TEST_CASE("matrix inverse round trip") {
    testutil::Rng rng;
    int found = 0;
    for (int t = 0; t < 40 && found < 10; ++t) {
        BitMatrix m = testutil::random_matrix(rng, 6, 6);
        auto inv = inverse(m);
        if (!inv) continue;
        ++found;
        CHECK(m * *inv == BitMatrix::identity(6));
        CHECK(*inv * m == BitMatrix::identity(6));
    }
    CHECK(found > 0);
    CHECK_FALSE(inverse(BitMatrix(3, 3)).has_value());
}
