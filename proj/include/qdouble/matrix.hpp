// Exact sparse matrices over Scalar, with fraction-free (Bareiss-style)
// elimination for determinants and exact kernel computation.

#pragma once

#include <optional>
#include <vector>

#include "qdouble/scalar.hpp"

namespace qd {

class ScalarMatrix {
public:
    ScalarMatrix() = default;
    ScalarMatrix(int rows, int cols, const FieldMode& mode)
        : rows_(rows), cols_(cols), mode_(mode), rowdata_(size_t(rows)) {}

    static ScalarMatrix identity(int n, const FieldMode& mode);
    static ScalarMatrix diagonal(const std::vector<Scalar>& d, const FieldMode& mode);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FieldMode& mode() const { return mode_; }

    const Scalar* find(int r, int c) const;
    Scalar at(int r, int c) const;
    void set(int r, int c, const Scalar& v);
    void add_at(int r, int c, const Scalar& v);
    const std::map<int, Scalar>& row(int r) const { return rowdata_[size_t(r)]; }

    bool is_zero() const;
    bool is_diagonal() const;
    bool is_invertible_diagonal() const;

    ScalarMatrix operator+(const ScalarMatrix& o) const;
    ScalarMatrix operator-(const ScalarMatrix& o) const;
    ScalarMatrix operator*(const ScalarMatrix& o) const;
    ScalarMatrix operator*(const Scalar& s) const;
    ScalarMatrix pow(unsigned n) const;
    // inverse of an invertible diagonal matrix
    ScalarMatrix diagonal_inverse() const;
    bool operator==(const ScalarMatrix& o) const;
    bool operator!=(const ScalarMatrix& o) const { return !(*this == o); }

    // zero test ignoring one column (truncation exemptions)
    bool is_zero_except_column(int col) const;

    Scalar determinant() const;  // square only
    // basis of the right kernel {v : Mv = 0}, each vector of length cols()
    std::vector<std::vector<Scalar>> kernel_basis() const;
    // rank by exact elimination
    int rank() const;

private:
    int rows_ = 0, cols_ = 0;
    FieldMode mode_;
    std::vector<std::map<int, Scalar>> rowdata_;
};

// apply a matrix to a vector
std::vector<Scalar> mat_apply(const ScalarMatrix& m, const std::vector<Scalar>& v);
bool vec_is_zero(const std::vector<Scalar>& v);
// rank of a list of row vectors
int vectors_rank(const std::vector<std::vector<Scalar>>& vs, const FieldMode& mode);

}  // namespace qd
