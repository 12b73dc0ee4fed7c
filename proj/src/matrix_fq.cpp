#include "orbitcodes/matrix_fq.hpp"

#include <sstream>
#include <stdexcept>

namespace orbitcodes {

namespace {
void check_compatible(const MatrixFq& x, const MatrixFq& y) {
    if (!same_field(x.field(), y.field()))
        throw std::invalid_argument("matrices over different fields");
}
}  // namespace

MatrixFq::MatrixFq(BaseFieldPtr field, int rows, int cols)
    : field_(std::move(field)), rows_(rows), cols_(cols),
      a_(static_cast<size_t>(rows) * cols, 0) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

MatrixFq MatrixFq::identity(BaseFieldPtr field, int n) {
    MatrixFq m(std::move(field), n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

MatrixFq MatrixFq::from_rows(BaseFieldPtr field, const std::vector<std::vector<int>>& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = rows.empty() ? 0 : static_cast<int>(rows[0].size());
    MatrixFq m(field, r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != c)
            throw std::invalid_argument("ragged row lengths");
        for (int j = 0; j < c; ++j) m.set(i, j, rows[static_cast<size_t>(i)][static_cast<size_t>(j)]);
    }
    return m;
}

MatrixFq MatrixFq::parse(BaseFieldPtr field, std::string_view text) {
    std::vector<std::vector<int>> rows;
    std::string s(text);
    std::stringstream rs(s);
    std::string row;
    while (std::getline(rs, row, ';')) {
        std::vector<int> entries;
        std::stringstream es(row);
        std::string tok;
        while (std::getline(es, tok, ',')) entries.push_back(std::stoi(tok));
        rows.push_back(std::move(entries));
    }
    return from_rows(std::move(field), rows);
}

void MatrixFq::set(int r, int c, int v) {
    if (!field_->contains_label(v)) throw std::invalid_argument("entry outside F_q");
    a_[static_cast<size_t>(r) * cols_ + c] = v;
}

MatrixFq MatrixFq::operator+(const MatrixFq& o) const {
    check_compatible(*this, o);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
    MatrixFq m(field_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = field_->add(a_[i], o.a_[i]);
    return m;
}

MatrixFq MatrixFq::operator-(const MatrixFq& o) const { return *this + (-o); }

MatrixFq MatrixFq::operator-() const {
    MatrixFq m(field_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = field_->neg(a_[i]);
    return m;
}

MatrixFq MatrixFq::operator*(const MatrixFq& o) const {
    check_compatible(*this, o);
    if (cols_ != o.rows_) throw std::invalid_argument("shape mismatch in product");
    MatrixFq m(field_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const int aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const int prod = field_->mul(aik, o.at(k, j));
                m.set(i, j, field_->add(m.at(i, j), prod));
            }
        }
    return m;
}

MatrixFq MatrixFq::scaled(int factor) const {
    MatrixFq m(field_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = field_->mul(a_[i], factor);
    return m;
}

MatrixFq MatrixFq::transpose() const {
    MatrixFq m(field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.set(j, i, at(i, j));
    return m;
}

MatrixFq MatrixFq::rref() const {
    MatrixFq m = *this;
    int pivot_row = 0;
    for (int c = 0; c < cols_ && pivot_row < rows_; ++c) {
        int sel = -1;
        for (int r = pivot_row; r < rows_; ++r)
            if (m.at(r, c) != 0) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        for (int j = 0; j < cols_; ++j) {
            const int tmp = m.at(sel, j);
            m.set(sel, j, m.at(pivot_row, j));
            m.set(pivot_row, j, tmp);
        }
        const int scale = field_->inv(m.at(pivot_row, c));
        for (int j = 0; j < cols_; ++j) m.set(pivot_row, j, field_->mul(m.at(pivot_row, j), scale));
        for (int r = 0; r < rows_; ++r) {
            if (r == pivot_row) continue;
            const int f = m.at(r, c);
            if (f == 0) continue;
            for (int j = 0; j < cols_; ++j)
                m.set(r, j, field_->sub(m.at(r, j), field_->mul(f, m.at(pivot_row, j))));
        }
        ++pivot_row;
    }
    return m;
}

int MatrixFq::rank() const {
    const MatrixFq r = rref();
    int rank = 0;
    for (int i = 0; i < rows_; ++i) {
        bool nonzero = false;
        for (int j = 0; j < cols_; ++j)
            if (r.at(i, j) != 0) {
                nonzero = true;
                break;
            }
        if (nonzero) ++rank;
    }
    return rank;
}

MatrixFq MatrixFq::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
    MatrixFq aug = hstack(*this, identity(field_, rows_));
    aug = aug.rref();
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < rows_; ++j)
            if (aug.at(i, j) != (i == j ? 1 : 0)) throw std::invalid_argument("singular matrix");
    return aug.submatrix(0, cols_, rows_, cols_);
}

MatrixFq MatrixFq::null_space() const {
    const MatrixFq r = rref();
    std::vector<int> pivot_col_of_row;
    std::vector<bool> is_pivot_col(static_cast<size_t>(cols_), false);
    for (int i = 0; i < rows_; ++i) {
        int c = -1;
        for (int j = 0; j < cols_; ++j)
            if (r.at(i, j) != 0) {
                c = j;
                break;
            }
        if (c < 0) break;
        pivot_col_of_row.push_back(c);
        is_pivot_col[static_cast<size_t>(c)] = true;
    }
    std::vector<int> free_cols;
    for (int j = 0; j < cols_; ++j)
        if (!is_pivot_col[static_cast<size_t>(j)]) free_cols.push_back(j);

    MatrixFq basis(field_, cols_, static_cast<int>(free_cols.size()));
    for (size_t k = 0; k < free_cols.size(); ++k) {
        const int f = free_cols[k];
        basis.set(f, static_cast<int>(k), 1);
        for (size_t i = 0; i < pivot_col_of_row.size(); ++i)
            basis.set(pivot_col_of_row[i], static_cast<int>(k),
                      field_->neg(r.at(static_cast<int>(i), f)));
    }
    return basis;
}

bool MatrixFq::is_zero() const {
    for (int v : a_)
        if (v != 0) return false;
    return true;
}

bool MatrixFq::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

MatrixFq MatrixFq::vstack(const MatrixFq& top, const MatrixFq& bottom) {
    check_compatible(top, bottom);
    if (top.cols_ != bottom.cols_) throw std::invalid_argument("vstack column mismatch");
    MatrixFq m(top.field_, top.rows_ + bottom.rows_, top.cols_);
    for (int i = 0; i < top.rows_; ++i)
        for (int j = 0; j < top.cols_; ++j) m.set(i, j, top.at(i, j));
    for (int i = 0; i < bottom.rows_; ++i)
        for (int j = 0; j < top.cols_; ++j) m.set(top.rows_ + i, j, bottom.at(i, j));
    return m;
}

MatrixFq MatrixFq::hstack(const MatrixFq& left, const MatrixFq& right) {
    check_compatible(left, right);
    if (left.rows_ != right.rows_) throw std::invalid_argument("hstack row mismatch");
    MatrixFq m(left.field_, left.rows_, left.cols_ + right.cols_);
    for (int i = 0; i < left.rows_; ++i) {
        for (int j = 0; j < left.cols_; ++j) m.set(i, j, left.at(i, j));
        for (int j = 0; j < right.cols_; ++j) m.set(i, left.cols_ + j, right.at(i, j));
    }
    return m;
}

MatrixFq MatrixFq::submatrix(int r0, int c0, int nrows, int ncols) const {
    if (r0 < 0 || c0 < 0 || r0 + nrows > rows_ || c0 + ncols > cols_)
        throw std::invalid_argument("submatrix out of range");
    MatrixFq m(field_, nrows, ncols);
    for (int i = 0; i < nrows; ++i)
        for (int j = 0; j < ncols; ++j) m.set(i, j, at(r0 + i, c0 + j));
    return m;
}

std::vector<int> MatrixFq::row(int r) const {
    std::vector<int> out(static_cast<size_t>(cols_));
    for (int j = 0; j < cols_; ++j) out[static_cast<size_t>(j)] = at(r, j);
    return out;
}

std::string MatrixFq::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        if (i) os << ";";
        for (int j = 0; j < cols_; ++j) {
            if (j) os << ",";
            os << at(i, j);
        }
    }
    return os.str();
}

bool operator==(const MatrixFq& x, const MatrixFq& y) {
    return same_field(x.field(), y.field()) && x.rows_ == y.rows_ && x.cols_ == y.cols_ &&
           x.a_ == y.a_;
}

std::strong_ordering operator<=>(const MatrixFq& x, const MatrixFq& y) {
    if (auto c = x.rows_ <=> y.rows_; c != 0) return c;
    if (auto c = x.cols_ <=> y.cols_; c != 0) return c;
    return x.a_ <=> y.a_;
}

}  // namespace orbitcodes
