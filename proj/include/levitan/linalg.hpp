#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "levitan/rational.hpp"

namespace levitan {

using Vec = std::vector<GaussianRational>;

inline bool is_zero_vec(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const GaussianRational& x) { return x.is_zero(); });
}

inline Vec unit_vec(std::size_t dim, std::size_t i) {
    Vec v(dim);
    v[i] = GaussianRational(1);
    return v;
}

inline Vec& add_scaled(Vec& dst, const GaussianRational& c, const Vec& src) {
    for (std::size_t j = 0; j < dst.size(); ++j) dst[j] += c * src[j];
    return dst;
}

inline Vec scaled(Vec v, const GaussianRational& c) {
    for (auto& x : v) x *= c;
    return v;
}

inline Vec conj_vec(Vec v) {
    for (auto& x : v) x = x.conj();
    return v;
}

// Dense matrix over the Gaussian rationals, row-major.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = GaussianRational(1);
        return m;
    }

    static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols) {
        Matrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw std::invalid_argument("Matrix: ragged rows");
            for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    GaussianRational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const GaussianRational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Vec row(std::size_t i) const {
        return Vec(a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    }

    void set_row(std::size_t i, const Vec& v) {
        for (std::size_t j = 0; j < cols_; ++j) at(i, j) = v[j];
    }

    void append_row(const Vec& v) {
        if (v.size() != cols_) throw std::invalid_argument("Matrix: row size mismatch");
        a_.insert(a_.end(), v.begin(), v.end());
        ++rows_;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    Matrix conjugate() const {
        Matrix c = *this;
        for (auto& x : c.a_) x = x.conj();
        return c;
    }

    Vec apply(const Vec& v) const {
        if (v.size() != cols_) throw std::invalid_argument("Matrix::apply: size mismatch");
        Vec out(rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            GaussianRational s;
            for (std::size_t j = 0; j < cols_; ++j)
                if (!at(i, j).is_zero()) s += at(i, j) * v[j];
            out[i] = s;
        }
        return out;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix product: shape mismatch");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const GaussianRational& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (!b.at(k, j).is_zero()) c.at(i, j) += aik * b.at(k, j);
            }
        return c;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("Matrix sum: shape mismatch");
        Matrix c = a;
        for (std::size_t k = 0; k < c.a_.size(); ++k) c.a_[k] += b.a_[k];
        return c;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("Matrix difference: shape mismatch");
        Matrix c = a;
        for (std::size_t k = 0; k < c.a_.size(); ++k) c.a_[k] -= b.a_[k];
        return c;
    }

    friend Matrix operator*(const GaussianRational& c, Matrix m) {
        for (auto& x : m.a_) x *= c;
        return m;
    }

    bool is_zero() const {
        return std::all_of(a_.begin(), a_.end(),
                           [](const GaussianRational& x) { return x.is_zero(); });
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    std::string str() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < rows_; ++i) {
            os << (i == 0 ? "[" : " ");
            for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "[") << at(i, j);
            os << "]" << (i + 1 == rows_ ? "]" : "\n");
        }
        if (rows_ == 0) os << "[]";
        return os.str();
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<GaussianRational> a_;
};

struct RrefResult {
    Matrix m;
    std::vector<std::size_t> pivots;  // pivot column of row r, strictly increasing
};

namespace detail {

// Multiply each row by the lcm of its entries' denominators. Row scaling
// keeps the row space, null space and rank; it makes the forward pass
// fraction-free.
inline void clear_row_denominators(Matrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const GaussianRational& x = m.at(i, j);
            l = lcm(l, x.re.denominator());
            l = lcm(l, x.im.denominator());
        }
        if (l == 1) continue;
        GaussianRational c{Rational(l)};
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) *= c;
    }
}

}  // namespace detail

// Reduced row echelon form, computed by fraction-free (Bareiss-style)
// forward elimination with rational normalization at the end. Pivoting is
// canonical: leftmost column, first nonzero row. The RREF of a matrix is the
// unique canonical basis of its row space, so equal inputs (and equal row
// spaces fed through subspace reduction) give byte-identical output.
inline RrefResult rref(Matrix m) {
    detail::clear_row_denominators(m);
    std::vector<std::size_t> pivots;
    GaussianRational prev{Rational(1)};
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m.at(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(r, j), m.at(p, j));
        const GaussianRational piv = m.at(r, c);
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            const GaussianRational mic = m.at(i, c);
            for (std::size_t j = c + 1; j < m.cols(); ++j)
                m.at(i, j) = (piv * m.at(i, j) - mic * m.at(r, j)) / prev;
            m.at(i, c) = GaussianRational();
        }
        prev = piv;
        pivots.push_back(c);
        ++r;
    }
    // Normalize: unit pivots, zeros above.
    for (std::size_t k = pivots.size(); k-- > 0;) {
        const std::size_t pr = k;
        const std::size_t pc = pivots[k];
        const GaussianRational piv = m.at(pr, pc);
        for (std::size_t j = pc; j < m.cols(); ++j) m.at(pr, j) /= piv;
        for (std::size_t i = 0; i < pr; ++i) {
            const GaussianRational f = m.at(i, pc);
            if (f.is_zero()) continue;
            for (std::size_t j = pc; j < m.cols(); ++j) m.at(i, j) -= f * m.at(pr, j);
        }
    }
    return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

// A linear subspace held as the canonical RREF basis of its span.
class Subspace {
public:
    Subspace() = default;

    static Subspace zero(std::size_t ambient) {
        Subspace s;
        s.ambient_ = ambient;
        s.basis_ = Matrix(0, ambient);
        return s;
    }

    static Subspace full(std::size_t ambient) { return from_matrix(Matrix::identity(ambient)); }

    static Subspace from_matrix(const Matrix& rows) {
        Subspace s;
        s.ambient_ = rows.cols();
        RrefResult r = rref(rows);
        Matrix b(r.pivots.size(), rows.cols());
        for (std::size_t i = 0; i < r.pivots.size(); ++i) b.set_row(i, r.m.row(i));
        s.basis_ = std::move(b);
        s.pivots_ = std::move(r.pivots);
        return s;
    }

    static Subspace span(const std::vector<Vec>& vectors, std::size_t ambient) {
        return from_matrix(Matrix::from_rows(vectors, ambient));
    }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    // Residual of v after elimination against the basis; zero iff v is a member.
    Vec reduce(Vec v) const {
        if (v.size() != ambient_) throw std::invalid_argument("Subspace::reduce: size mismatch");
        for (std::size_t r = 0; r < basis_.rows(); ++r) {
            const GaussianRational c = v[pivots_[r]];
            if (c.is_zero()) continue;
            add_scaled(v, -c, basis_.row(r));
        }
        return v;
    }

    bool contains(const Vec& v) const { return is_zero_vec(reduce(v)); }

    bool contains(const Subspace& other) const {
        for (std::size_t r = 0; r < other.basis_.rows(); ++r)
            if (!contains(other.basis_.row(r))) return false;
        return true;
    }

    // Coordinates of v w.r.t. the RREF basis; nullopt if v is not a member.
    std::optional<Vec> coordinates(const Vec& v) const {
        if (!contains(v)) return std::nullopt;
        Vec c(dim());
        for (std::size_t r = 0; r < dim(); ++r) c[r] = v[pivots_[r]];
        return c;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    std::size_t ambient_ = 0;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

// Basis of {v : m v = 0}, canonical (RREF).
inline Subspace null_space(const Matrix& m) {
    const std::size_t n = m.cols();
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : r.pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Vec v(n);
        v[f] = GaussianRational(1);
        for (std::size_t row = 0; row < r.pivots.size(); ++row)
            v[r.pivots[row]] = -r.m.at(row, f);
        basis.push_back(std::move(v));
    }
    return Subspace::span(basis, n);
}

// One solution of m x = b (free variables 0), or nullopt if inconsistent.
inline std::optional<Vec> solve(const Matrix& m, const Vec& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve: dimension mismatch");
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    RrefResult r = rref(aug);
    for (std::size_t c : r.pivots)
        if (c == m.cols()) return std::nullopt;
    Vec x(m.cols());
    for (std::size_t row = 0; row < r.pivots.size(); ++row)
        x[r.pivots[row]] = r.m.at(row, m.cols());
    return x;
}

// Row-at-a-time reduced row echelon accumulator for large streamed
// constraint systems. Keeps the running system fully reduced; the final
// state is the canonical RREF of the row span.
class IncrementalRref {
public:
    explicit IncrementalRref(std::size_t cols) : cols_(cols) {}

    std::size_t cols() const { return cols_; }
    std::size_t rank() const { return rows_.size(); }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    void add_row(Vec row) {
        if (row.size() != cols_) throw std::invalid_argument("IncrementalRref: row size mismatch");
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const GaussianRational& c = row[pivots_[r]];
            if (!c.is_zero()) add_scaled(row, -c, rows_[r]);
        }
        std::size_t lead = cols_;
        for (std::size_t j = 0; j < cols_; ++j)
            if (!row[j].is_zero()) {
                lead = j;
                break;
            }
        if (lead == cols_) return;
        const GaussianRational inv = GaussianRational(1) / row[lead];
        for (auto& x : row) x *= inv;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const GaussianRational& c = rows_[r][lead];
            if (!c.is_zero()) add_scaled(rows_[r], -c, row);
        }
        // insert keeping pivot columns strictly increasing
        std::size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < lead) ++pos;
        pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), lead);
        rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(row));
    }

    Subspace null_space() const {
        std::vector<bool> is_pivot(cols_, false);
        for (std::size_t c : pivots_) is_pivot[c] = true;
        std::vector<Vec> basis;
        for (std::size_t f = 0; f < cols_; ++f) {
            if (is_pivot[f]) continue;
            Vec v(cols_);
            v[f] = GaussianRational(1);
            for (std::size_t r = 0; r < pivots_.size(); ++r) v[pivots_[r]] = -rows_[r][f];
            basis.push_back(std::move(v));
        }
        return Subspace::span(basis, cols_);
    }

private:
    std::size_t cols_;
    std::vector<Vec> rows_;
    std::vector<std::size_t> pivots_;
};

inline Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw std::invalid_argument("sum: ambient dimension mismatch");
    Matrix stacked(a.dim() + b.dim(), a.ambient_dim());
    for (std::size_t i = 0; i < a.dim(); ++i) stacked.set_row(i, a.basis().row(i));
    for (std::size_t i = 0; i < b.dim(); ++i) stacked.set_row(a.dim() + i, b.basis().row(i));
    return Subspace::from_matrix(stacked);
}

inline Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw std::invalid_argument("intersect: ambient dimension mismatch");
    const std::size_t n = a.ambient_dim();
    const std::size_t p = a.dim();
    const std::size_t q = b.dim();
    // Solve A^T x = B^T y; members are A^T x.
    Matrix c(n, p + q);
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < n; ++j) c.at(j, i) = a.basis().at(i, j);
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < n; ++j) c.at(j, p + i) = -b.basis().at(i, j);
    Subspace ns = null_space(c);
    std::vector<Vec> members;
    for (std::size_t r = 0; r < ns.dim(); ++r) {
        Vec coeff = ns.basis().row(r);
        Vec w(n);
        for (std::size_t i = 0; i < p; ++i) add_scaled(w, coeff[i], a.basis().row(i));
        members.push_back(std::move(w));
    }
    return Subspace::span(members, n);
}

}  // namespace levitan
