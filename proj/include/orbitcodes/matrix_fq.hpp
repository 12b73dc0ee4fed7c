#pragma once

// Dense exact linear algebra over F_q: rank, reduced row echelon form,
// inverse, null space.  Entries are base-field labels; all arithmetic is
// delegated to BaseField.

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "orbitcodes/finite_field.hpp"

namespace orbitcodes {

class MatrixFq {
public:
    MatrixFq(BaseFieldPtr field, int rows, int cols);  // zero matrix
    static MatrixFq identity(BaseFieldPtr field, int n);
    static MatrixFq from_rows(BaseFieldPtr field, const std::vector<std::vector<int>>& rows);
    // Literal syntax: rows separated by ';', entries by ',': "1,0,0;0,1,0"
    static MatrixFq parse(BaseFieldPtr field, std::string_view text);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const BaseField& field() const { return *field_; }
    const BaseFieldPtr& field_ptr() const { return field_; }

    int at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }
    void set(int r, int c, int v);

    MatrixFq operator+(const MatrixFq& o) const;
    MatrixFq operator-(const MatrixFq& o) const;
    MatrixFq operator-() const;
    MatrixFq operator*(const MatrixFq& o) const;
    MatrixFq scaled(int factor) const;

    MatrixFq transpose() const;
    MatrixFq rref() const;
    int rank() const;
    MatrixFq inverse() const;  // square nonsingular only
    // Columns span {x : Mx = 0}; returns a cols x nullity matrix.
    MatrixFq null_space() const;

    bool is_zero() const;
    bool is_identity() const;

    static MatrixFq vstack(const MatrixFq& top, const MatrixFq& bottom);
    static MatrixFq hstack(const MatrixFq& left, const MatrixFq& right);
    MatrixFq submatrix(int r0, int c0, int nrows, int ncols) const;
    std::vector<int> row(int r) const;

    std::string to_string() const;

    friend bool operator==(const MatrixFq& x, const MatrixFq& y);
    friend bool operator!=(const MatrixFq& x, const MatrixFq& y) { return !(x == y); }
    // Lexicographic on (rows, cols, entries); used for canonical ordering.
    friend std::strong_ordering operator<=>(const MatrixFq& x, const MatrixFq& y);

private:
    BaseFieldPtr field_;
    int rows_, cols_;
    std::vector<int> a_;  // row-major labels
};

}  // namespace orbitcodes
