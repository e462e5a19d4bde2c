#include "qdouble/matrix.hpp"

#include <algorithm>

namespace qd {

ScalarMatrix ScalarMatrix::identity(int n, const FieldMode& mode) {
    ScalarMatrix m(n, n, mode);
    for (int i = 0; i < n; ++i) m.set(i, i, Scalar::one(mode));
    return m;
}

ScalarMatrix ScalarMatrix::diagonal(const std::vector<Scalar>& d, const FieldMode& mode) {
    ScalarMatrix m(int(d.size()), int(d.size()), mode);
    for (int i = 0; i < int(d.size()); ++i) m.set(i, i, d[size_t(i)]);
    return m;
}

const Scalar* ScalarMatrix::find(int r, int c) const {
    auto& row = rowdata_[size_t(r)];
    auto it = row.find(c);
    return it == row.end() ? nullptr : &it->second;
}

Scalar ScalarMatrix::at(int r, int c) const {
    const Scalar* p = find(r, c);
    return p ? *p : Scalar::zero(mode_);
}

void ScalarMatrix::set(int r, int c, const Scalar& v) {
    if (v.is_zero())
        rowdata_[size_t(r)].erase(c);
    else
        rowdata_[size_t(r)][c] = v;
}

void ScalarMatrix::add_at(int r, int c, const Scalar& v) {
    if (v.is_zero()) return;
    auto& row = rowdata_[size_t(r)];
    auto it = row.find(c);
    if (it == row.end()) {
        row.emplace(c, v);
    } else {
        it->second += v;
        if (it->second.is_zero()) row.erase(it);
    }
}

bool ScalarMatrix::is_zero() const {
    for (auto& row : rowdata_)
        if (!row.empty()) return false;
    return true;
}

bool ScalarMatrix::is_diagonal() const {
    for (int r = 0; r < rows_; ++r)
        for (auto& [c, v] : rowdata_[size_t(r)])
            if (c != r) return false;
    return true;
}

bool ScalarMatrix::is_invertible_diagonal() const {
    if (rows_ != cols_ || !is_diagonal()) return false;
    for (int r = 0; r < rows_; ++r)
        if (!find(r, r)) return false;
    return true;
}

ScalarMatrix ScalarMatrix::operator+(const ScalarMatrix& o) const {
    ScalarMatrix m = *this;
    for (int r = 0; r < rows_; ++r)
        for (auto& [c, v] : o.rowdata_[size_t(r)]) m.add_at(r, c, v);
    return m;
}

ScalarMatrix ScalarMatrix::operator-(const ScalarMatrix& o) const {
    ScalarMatrix m = *this;
    for (int r = 0; r < rows_; ++r)
        for (auto& [c, v] : o.rowdata_[size_t(r)]) m.add_at(r, c, -v);
    return m;
}

ScalarMatrix ScalarMatrix::operator*(const ScalarMatrix& o) const {
    if (cols_ != o.rows_) throw DomainError("matrix product: dimension mismatch");
    ScalarMatrix m(rows_, o.cols_, mode_);
    for (int r = 0; r < rows_; ++r)
        for (auto& [k, v] : rowdata_[size_t(r)])
            for (auto& [c, w] : o.rowdata_[size_t(k)]) m.add_at(r, c, v * w);
    return m;
}

ScalarMatrix ScalarMatrix::operator*(const Scalar& s) const {
    ScalarMatrix m(rows_, cols_, mode_);
    if (s.is_zero()) return m;
    for (int r = 0; r < rows_; ++r)
        for (auto& [c, v] : rowdata_[size_t(r)]) m.set(r, c, v * s);
    return m;
}

ScalarMatrix ScalarMatrix::pow(unsigned n) const {
    ScalarMatrix r = identity(rows_, mode_);
    ScalarMatrix base = *this;
    while (n) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

ScalarMatrix ScalarMatrix::diagonal_inverse() const {
    if (!is_invertible_diagonal()) throw DomainError("diagonal_inverse: not invertible diagonal");
    ScalarMatrix m(rows_, cols_, mode_);
    for (int r = 0; r < rows_; ++r) m.set(r, r, at(r, r).inverse());
    return m;
}

bool ScalarMatrix::operator==(const ScalarMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && rowdata_ == o.rowdata_;
}

bool ScalarMatrix::is_zero_except_column(int col) const {
    for (int r = 0; r < rows_; ++r)
        for (auto& [c, v] : rowdata_[size_t(r)])
            if (c != col) return false;
    return true;
}

namespace {

// dense fraction-free echelon; returns (echelon rows, pivot columns, pivot
// product sign-corrected determinant numerator when square)
struct Echelon {
    std::vector<std::vector<Scalar>> rows;
    std::vector<int> pivot_cols;
    Scalar det;  // meaningful for square input only
    bool det_valid = false;
};

Echelon eliminate(const ScalarMatrix& M) {
    const FieldMode& mode = M.mode();
    const int nr = M.rows(), nc = M.cols();
    std::vector<std::vector<Scalar>> a(size_t(nr), std::vector<Scalar>(size_t(nc), Scalar::zero(mode)));
    for (int r = 0; r < nr; ++r)
        for (auto& [c, v] : M.row(r)) a[size_t(r)][size_t(c)] = v;

    Echelon e;
    e.det = Scalar::one(mode);
    int sign = 1;
    int rank = 0;
    // Bareiss-style fraction-free elimination with exact division by the
    // previous pivot
    Scalar prev = Scalar::one(mode);
    for (int col = 0; col < nc && rank < nr; ++col) {
        int piv = -1;
        for (int r = rank; r < nr; ++r) {
            if (!a[size_t(r)][size_t(col)].is_zero()) {
                piv = r;
                break;
            }
        }
        if (piv < 0) continue;
        if (piv != rank) {
            std::swap(a[size_t(piv)], a[size_t(rank)]);
            sign = -sign;
        }
        const Scalar p = a[size_t(rank)][size_t(col)];
        for (int r = rank + 1; r < nr; ++r) {
            Scalar f = a[size_t(r)][size_t(col)];
            for (int c = 0; c < nc; ++c) {
                Scalar t = a[size_t(r)][size_t(c)] * p - f * a[size_t(rank)][size_t(c)];
                a[size_t(r)][size_t(c)] = t / prev;
            }
        }
        prev = p;
        e.pivot_cols.push_back(col);
        ++rank;
    }
    e.rows.assign(a.begin(), a.begin() + rank);
    if (nr == nc) {
        if (rank < nr) {
            e.det = Scalar::zero(mode);
        } else {
            // after Bareiss the last pivot is det up to the row-swap sign
            e.det = e.rows.back()[size_t(e.pivot_cols.back())];
            if (sign < 0) e.det = -e.det;
        }
        e.det_valid = true;
    }
    return e;
}

}  // namespace

Scalar ScalarMatrix::determinant() const {
    if (rows_ != cols_) throw DomainError("determinant: matrix not square");
    if (rows_ == 0) return Scalar::one(mode_);
    Echelon e = eliminate(*this);
    return e.det;
}

int ScalarMatrix::rank() const { return int(eliminate(*this).pivot_cols.size()); }

std::vector<std::vector<Scalar>> ScalarMatrix::kernel_basis() const {
    Echelon e = eliminate(*this);
    const int nc = cols_;
    std::vector<bool> is_pivot(size_t(nc), false);
    for (int c : e.pivot_cols) is_pivot[size_t(c)] = true;

    std::vector<std::vector<Scalar>> basis;
    for (int freec = 0; freec < nc; ++freec) {
        if (is_pivot[size_t(freec)]) continue;
        std::vector<Scalar> v(size_t(nc), Scalar::zero(mode_));
        v[size_t(freec)] = Scalar::one(mode_);
        // back-substitute through the echelon rows
        for (int i = int(e.pivot_cols.size()) - 1; i >= 0; --i) {
            const auto& row = e.rows[size_t(i)];
            const int pc = e.pivot_cols[size_t(i)];
            Scalar s = Scalar::zero(mode_);
            for (int c = pc + 1; c < nc; ++c)
                if (!row[size_t(c)].is_zero() && !v[size_t(c)].is_zero())
                    s += row[size_t(c)] * v[size_t(c)];
            v[size_t(pc)] = -s / row[size_t(pc)];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Scalar> mat_apply(const ScalarMatrix& m, const std::vector<Scalar>& v) {
    std::vector<Scalar> r(size_t(m.rows()), Scalar::zero(m.mode()));
    for (int i = 0; i < m.rows(); ++i)
        for (auto& [c, w] : m.row(i))
            if (!v[size_t(c)].is_zero()) r[size_t(i)] += w * v[size_t(c)];
    return r;
}

bool vec_is_zero(const std::vector<Scalar>& v) {
    for (auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

int vectors_rank(const std::vector<std::vector<Scalar>>& vs, const FieldMode& mode) {
    if (vs.empty()) return 0;
    ScalarMatrix m(int(vs.size()), int(vs[0].size()), mode);
    for (int r = 0; r < int(vs.size()); ++r)
        for (int c = 0; c < int(vs[0].size()); ++c) m.set(r, c, vs[size_t(r)][size_t(c)]);
    return m.rank();
}

}  // namespace qd
