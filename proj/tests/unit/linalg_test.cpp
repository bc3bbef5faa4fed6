#include <random>

#include "doctest.h"
#include "obs/linalg.hpp"

using namespace obs;

namespace {

IntMatrix randomInt(std::mt19937& rng, std::size_t r, std::size_t c, int span) {
    std::uniform_int_distribution<int> d(-span, span);
    IntMatrix m(r, c);
    for (auto& x : m.a) x = d(rng);
    return m;
}

RatMatrix toRat(const IntMatrix& m) {
    RatMatrix r(m.rows, m.cols);
    for (std::size_t i = 0; i < m.a.size(); ++i) r.a[i] = Rat(m.a[i]);
    return r;
}

// cofactor expansion, independent of the elimination code
Rat cofactorDet(const RatMatrix& m) {
    if (m.rows == 1) return m(0, 0);
    Rat s = 0;
    for (std::size_t c = 0; c < m.cols; ++c) {
        RatMatrix minor(m.rows - 1, m.cols - 1);
        for (std::size_t r = 1; r < m.rows; ++r)
            for (std::size_t k = 0, kk = 0; k < m.cols; ++k)
                if (k != c) minor(r - 1, kk++) = m(r, k);
        s += (c % 2 ? -1 : 1) * m(0, c) * cofactorDet(minor);
    }
    return s;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
    CHECK(toString(parseRational("6/4")) == "3/2");
    CHECK(toString(parseRational("-3")) == "-3");
    CHECK(toString(frac(2, 8)) == "1/4");
    CHECK_THROWS(parseRational("x"));
}

TEST_CASE("rref and kernel") {
    RatMatrix m = RatMatrix::fromRows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}, 3);
    auto r = rref(m);
    CHECK(r.pivots == std::vector<std::size_t>{0, 1});
    CHECK(rank(m) == 2);
    auto k = kernelBasis(m);
    REQUIRE(k.size() == 1);
    CHECK(k[0] == RatVec{-1, -1, 1});
}

TEST_CASE("affine solve kinds") {
    RatMatrix a = RatMatrix::fromRows({{1, 1}, {1, -1}}, 2);
    auto s = solveAffine(a, {3, 1});
    CHECK(s.kind == SolutionSet::UniquePoint);
    CHECK(s.point == RatVec{2, 1});
    RatMatrix b = RatMatrix::fromRows({{1, 1}, {2, 2}}, 2);
    CHECK(solveAffine(b, {1, 3}).kind == SolutionSet::Empty);
    auto fam = solveAffine(b, {1, 2});
    CHECK(fam.kind == SolutionSet::AffineFamily);
    CHECK(fam.directions.size() == 1);
}

TEST_CASE("determinant agrees with cofactor expansion") {
    std::mt19937 rng(7);
    for (int t = 0; t < 40; ++t) {
        std::size_t k = 1 + t % 5;
        RatMatrix m = toRat(randomInt(rng, k, k, 4));
        CHECK(determinant(m) == cofactorDet(m));
    }
}

TEST_CASE("smith normal form reconstruction") {
    std::mt19937 rng(11);
    for (int t = 0; t < 60; ++t) {
        std::size_t r = 1 + t % 5, c = 1 + (t / 5) % 5;
        IntMatrix a = randomInt(rng, r, c, 6);
        auto snf = smithNormalForm(a);
        IntMatrix d = snf.U * a * snf.V;
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) CHECK(d(i, j) == (i == j ? snf.d[i] : Int(0)));
        for (std::size_t i = 0; i + 1 < snf.d.size(); ++i)
            if (snf.d[i] != 0) CHECK(snf.d[i + 1] % snf.d[i] == 0);
        CHECK(abs(determinant(toRat(snf.U))) == 1);
        CHECK(abs(determinant(toRat(snf.V))) == 1);
    }
}

TEST_CASE("abelian quotient") {
    // relations are rows; Z^2 / <(2,0),(0,3)> = Z6
    IntMatrix rel = IntMatrix::fromRows({{2, 0}, {0, 3}}, 2);
    auto q = abelianQuotient(2, rel);
    CHECK(q.freeRank == 0);
    CHECK(q.torsion == std::vector<Int>{6});
    CHECK(q.isZero({2, 0}));
    CHECK(q.isZero({0, 3}));
    CHECK_FALSE(q.isZero({1, 0}));

    auto z = abelianQuotient(3, IntMatrix::fromRows({{1, -1, 0}}, 3));
    CHECK(z.freeRank == 2);
    CHECK(z.torsion.empty());
    CHECK(z.isZero({2, -2, 0}));
    CHECK_FALSE(z.isZero({1, 1, 0}));

    std::mt19937 rng(3);
    for (int t = 0; t < 30; ++t) {
        IntMatrix r = randomInt(rng, 1 + t % 4, 4, 3);
        auto p = abelianQuotient(4, r);
        for (std::size_t i = 0; i < r.rows; ++i) CHECK(p.isZero(r.row(i)));
    }
}

TEST_CASE("integer kernel") {
    IntMatrix m = IntMatrix::fromRows({{2, 4, -2}}, 3);
    auto k = integerKernel(m);
    CHECK(k.size() == 2);
    for (const auto& v : k) CHECK(2 * v[0] + 4 * v[1] - 2 * v[2] == 0);
}
