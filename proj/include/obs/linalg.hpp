#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace obs {

using Rat = mpq_class;
using Int = mpz_class;
using RatVec = std::vector<Rat>;
using IntVec = std::vector<Int>;

template <class T>
struct Matrix {
    std::size_t rows = 0, cols = 0;
    std::vector<T> a;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

    T& operator()(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

    std::vector<T> row(std::size_t r) const {
        return std::vector<T>(a.begin() + r * cols, a.begin() + (r + 1) * cols);
    }
    void appendRow(const std::vector<T>& v);
    static Matrix fromRows(const std::vector<std::vector<T>>& rs, std::size_t cols);
    static Matrix identity(std::size_t n);
    Matrix transpose() const;
    bool operator==(const Matrix& o) const = default;
};

using RatMatrix = Matrix<Rat>;
using IntMatrix = Matrix<Int>;

RatMatrix operator*(const RatMatrix& x, const RatMatrix& y);
IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);

std::string toString(const Rat& q);
Rat parseRational(const std::string& s);
inline Rat frac(long p, long q) {
    Rat r(p, q);
    r.canonicalize();
    return r;
}

struct RrefResult {
    RatMatrix reduced;  // nonzero rows only
    std::vector<std::size_t> pivots;
};
RrefResult rref(const RatMatrix& m);
std::size_t rank(const RatMatrix& m);

// Basis of {x : m x = 0}; one vector per free column in increasing order.
std::vector<RatVec> kernelBasis(const RatMatrix& m);

struct SolutionSet {
    enum Kind { Empty, UniquePoint, AffineFamily } kind = Empty;
    RatVec point;
    std::vector<RatVec> directions;
};
SolutionSet solveAffine(const RatMatrix& a, const RatVec& b);

Rat determinant(RatMatrix m);

struct SmithForm {
    std::vector<Int> d;  // min(rows, cols) entries
    IntMatrix U, V;      // U * A * V = diag(d)
};
SmithForm smithNormalForm(const IntMatrix& a);

struct AbelianGroupPresentation {
    std::size_t freeRank = 0;
    std::vector<Int> torsion;
    // rows: torsion coordinates (reduce mod torsion[i]) then free coordinates
    IntMatrix projector;

    IntVec classOf(const IntVec& v) const;
    bool isZero(const IntVec& v) const;
};
AbelianGroupPresentation abelianQuotient(std::size_t generatorCount, const IntMatrix& relations);

// Z-basis of the integer kernel {x in Z^cols : m x = 0}.
std::vector<IntVec> integerKernel(const IntMatrix& m);

IntMatrix toInt(const RatMatrix& m);

}  // namespace obs
