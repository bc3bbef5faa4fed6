#include "obs/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace obs {

template <class T>
void Matrix<T>::appendRow(const std::vector<T>& v) {
    if (rows == 0 && cols == 0) cols = v.size();
    if (v.size() != cols) throw std::invalid_argument("row length mismatch");
    a.insert(a.end(), v.begin(), v.end());
    ++rows;
}

template <class T>
Matrix<T> Matrix<T>::fromRows(const std::vector<std::vector<T>>& rs, std::size_t c) {
    Matrix m(0, c);
    for (const auto& r : rs) m.appendRow(r);
    return m;
}

template <class T>
Matrix<T> Matrix<T>::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

template <class T>
Matrix<T> Matrix<T>::transpose() const {
    Matrix t(cols, rows);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) t(c, r) = (*this)(r, c);
    return t;
}

template struct Matrix<Rat>;
template struct Matrix<Int>;

template <class T>
static Matrix<T> mul(const Matrix<T>& x, const Matrix<T>& y) {
    if (x.cols != y.rows) throw std::invalid_argument("dimension mismatch in product");
    Matrix<T> z(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) {
            if (sgn(x(i, k)) == 0) continue;
            for (std::size_t j = 0; j < y.cols; ++j) z(i, j) += x(i, k) * y(k, j);
        }
    return z;
}

RatMatrix operator*(const RatMatrix& x, const RatMatrix& y) { return mul(x, y); }
IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) { return mul(x, y); }

std::string toString(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat parseRational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash)), den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        Rat q(num, den);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("not a rational: " + s);
    }
}

RrefResult rref(const RatMatrix& m) {
    RatMatrix a = m;
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols && r < a.rows; ++c) {
        std::size_t p = r;
        while (p < a.rows && sgn(a(p, c)) == 0) ++p;
        if (p == a.rows) continue;
        if (p != r)
            for (std::size_t k = 0; k < a.cols; ++k) std::swap(a(p, k), a(r, k));
        Rat inv = 1 / a(r, c);
        for (std::size_t k = c; k < a.cols; ++k) a(r, k) *= inv;
        for (std::size_t i = 0; i < a.rows; ++i) {
            if (i == r || sgn(a(i, c)) == 0) continue;
            Rat f = a(i, c);
            for (std::size_t k = c; k < a.cols; ++k) a(i, k) -= f * a(r, k);
        }
        piv.push_back(c);
        ++r;
    }
    RatMatrix out(r, a.cols);
    std::copy(a.a.begin(), a.a.begin() + r * a.cols, out.a.begin());
    return {out, piv};
}

std::size_t rank(const RatMatrix& m) { return rref(m).pivots.size(); }

std::vector<RatVec> kernelBasis(const RatMatrix& m) {
    auto [R, piv] = rref(m);
    std::vector<RatVec> out;
    std::size_t pi = 0;
    for (std::size_t f = 0; f < m.cols; ++f) {
        if (pi < piv.size() && piv[pi] == f) {
            ++pi;
            continue;
        }
        RatVec v(m.cols);
        v[f] = 1;
        for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -R(r, f);
        out.push_back(std::move(v));
    }
    return out;
}

SolutionSet solveAffine(const RatMatrix& a, const RatVec& b) {
    if (a.rows != b.size()) throw std::invalid_argument("solveAffine: size mismatch");
    RatMatrix aug(a.rows, a.cols + 1);
    for (std::size_t r = 0; r < a.rows; ++r) {
        for (std::size_t c = 0; c < a.cols; ++c) aug(r, c) = a(r, c);
        aug(r, a.cols) = b[r];
    }
    auto [R, piv] = rref(aug);
    SolutionSet s;
    if (!piv.empty() && piv.back() == a.cols) return s;
    s.point.assign(a.cols, Rat(0));
    for (std::size_t r = 0; r < piv.size(); ++r) s.point[piv[r]] = R(r, a.cols);
    if (piv.size() == a.cols) {
        s.kind = SolutionSet::UniquePoint;
    } else {
        s.kind = SolutionSet::AffineFamily;
        s.directions = kernelBasis(a);
    }
    return s;
}

Rat determinant(RatMatrix m) {
    if (m.rows != m.cols) throw std::invalid_argument("determinant of non-square matrix");
    std::size_t n = m.rows;
    Rat d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && sgn(m(p, c)) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            for (std::size_t k = 0; k < n; ++k) std::swap(m(p, k), m(c, k));
            d = -d;
        }
        d *= m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (sgn(m(i, c)) == 0) continue;
            Rat f = m(i, c) / m(c, c);
            for (std::size_t k = c; k < n; ++k) m(i, k) -= f * m(c, k);
        }
    }
    return d;
}

namespace {

struct Snf {
    IntMatrix A, U, V;

    void swapRows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < A.cols; ++k) std::swap(A(i, k), A(j, k));
        for (std::size_t k = 0; k < U.cols; ++k) std::swap(U(i, k), U(j, k));
    }
    void swapCols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < A.rows; ++k) std::swap(A(k, i), A(k, j));
        for (std::size_t k = 0; k < V.rows; ++k) std::swap(V(k, i), V(k, j));
    }
    // row i -= q * row j
    void addRow(std::size_t i, std::size_t j, const Int& q) {
        for (std::size_t k = 0; k < A.cols; ++k) A(i, k) -= q * A(j, k);
        for (std::size_t k = 0; k < U.cols; ++k) U(i, k) -= q * U(j, k);
    }
    // col i -= q * col j
    void addCol(std::size_t i, std::size_t j, const Int& q) {
        for (std::size_t k = 0; k < A.rows; ++k) A(k, i) -= q * A(k, j);
        for (std::size_t k = 0; k < V.rows; ++k) V(k, i) -= q * V(k, j);
    }
    void negRow(std::size_t i) {
        for (std::size_t k = 0; k < A.cols; ++k) A(i, k) = -A(i, k);
        for (std::size_t k = 0; k < U.cols; ++k) U(i, k) = -U(i, k);
    }
};

}  // namespace

SmithForm smithNormalForm(const IntMatrix& a) {
    Snf s{a, IntMatrix::identity(a.rows), IntMatrix::identity(a.cols)};
    std::size_t m = a.rows, n = a.cols, lim = std::min(m, n);
    for (std::size_t t = 0; t < lim; ++t) {
        // smallest |entry| in the trailing block, ties by (row, col)
        auto pickPivot = [&](bool lineOnly) {
            std::size_t bi = m, bj = n;
            Int best;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j) {
                    if (lineOnly && i != t && j != t) continue;
                    if (sgn(s.A(i, j)) == 0) continue;
                    Int v = abs(s.A(i, j));
                    if (bi == m || v < best) best = v, bi = i, bj = j;
                }
            if (bi == m) return false;
            s.swapRows(t, bi);
            s.swapCols(t, bj);
            return true;
        };
        if (!pickPivot(false)) break;
        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (sgn(s.A(i, t)) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), s.A(i, t).get_mpz_t(), s.A(t, t).get_mpz_t());
                s.addRow(i, t, q);
                if (sgn(s.A(i, t)) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (sgn(s.A(t, j)) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), s.A(t, j).get_mpz_t(), s.A(t, t).get_mpz_t());
                s.addCol(j, t, q);
                if (sgn(s.A(t, j)) != 0) clean = false;
            }
            if (!clean) {
                pickPivot(true);
                continue;
            }
            std::size_t bad = m;
            for (std::size_t i = t + 1; i < m && bad == m; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (!mpz_divisible_p(s.A(i, j).get_mpz_t(), s.A(t, t).get_mpz_t())) {
                        bad = i;
                        break;
                    }
            if (bad == m) break;
            s.addRow(t, bad, Int(-1));
        }
        if (sgn(s.A(t, t)) < 0) s.negRow(t);
    }
    SmithForm out;
    out.d.resize(lim);
    for (std::size_t i = 0; i < lim; ++i) out.d[i] = s.A(i, i);
    out.U = std::move(s.U);
    out.V = std::move(s.V);
    return out;
}

IntVec AbelianGroupPresentation::classOf(const IntVec& v) const {
    if (v.size() != projector.cols) throw std::invalid_argument("classOf: length mismatch");
    IntVec c(projector.rows);
    for (std::size_t r = 0; r < projector.rows; ++r) {
        for (std::size_t k = 0; k < projector.cols; ++k) c[r] += projector(r, k) * v[k];
        if (r < torsion.size()) mpz_fdiv_r(c[r].get_mpz_t(), c[r].get_mpz_t(), torsion[r].get_mpz_t());
    }
    return c;
}

bool AbelianGroupPresentation::isZero(const IntVec& v) const {
    for (const auto& x : classOf(v))
        if (sgn(x) != 0) return false;
    return true;
}

AbelianGroupPresentation abelianQuotient(std::size_t k, const IntMatrix& relations) {
    if (relations.rows > 0 && relations.cols != k)
        throw std::invalid_argument("abelianQuotient: relation width mismatch");
    IntMatrix R = relations.rows > 0 ? relations : IntMatrix(0, k);
    SmithForm snf = smithNormalForm(R);
    IntMatrix Vt = snf.V.transpose();
    AbelianGroupPresentation g;
    std::vector<std::size_t> torsionRows, freeRows;
    for (std::size_t i = 0; i < k; ++i) {
        Int d = i < snf.d.size() ? snf.d[i] : Int(0);
        if (d == 1) continue;
        if (d == 0) {
            freeRows.push_back(i);
        } else {
            torsionRows.push_back(i);
            g.torsion.push_back(d);
        }
    }
    g.freeRank = freeRows.size();
    g.projector = IntMatrix(0, k);
    for (auto i : torsionRows) g.projector.appendRow(Vt.row(i));
    for (auto i : freeRows) g.projector.appendRow(Vt.row(i));
    g.projector.cols = k;
    return g;
}

std::vector<IntVec> integerKernel(const IntMatrix& m) {
    SmithForm snf = smithNormalForm(m);
    std::size_t r = 0;
    while (r < snf.d.size() && sgn(snf.d[r]) != 0) ++r;
    std::vector<IntVec> out;
    for (std::size_t c = r; c < m.cols; ++c) {
        IntVec v(m.cols);
        for (std::size_t k = 0; k < m.cols; ++k) v[k] = snf.V(k, c);
        out.push_back(std::move(v));
    }
    return out;
}

IntMatrix toInt(const RatMatrix& m) {
    IntMatrix z(m.rows, m.cols);
    for (std::size_t i = 0; i < m.a.size(); ++i) {
        if (m.a[i].get_den() != 1) throw std::invalid_argument("toInt: non-integral entry");
        z.a[i] = m.a[i].get_num();
    }
    return z;
}

}  // namespace obs
