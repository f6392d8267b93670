#include "drf/matrix.hpp"

#include <stdexcept>

namespace drf {

Mat::Mat(int rows, int cols)
    : rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows) * cols)
{
    if (rows < 0 || cols < 0)
        throw std::invalid_argument("negative matrix dimension");
}

Mat::Mat(int rows, int cols, std::vector<Rat> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries))
{
    if (rows < 0 || cols < 0)
        throw std::invalid_argument("negative matrix dimension");
    if (entries_.size() != static_cast<std::size_t>(rows) * cols)
        throw std::invalid_argument("entry count does not match matrix shape");
}

Mat::Mat(std::initializer_list<std::initializer_list<Rat>> rows)
{
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
    entries_.reserve(static_cast<std::size_t>(rows_) * cols_);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != cols_)
            throw std::invalid_argument("ragged initializer for matrix");
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

Mat Mat::identity(int n)
{
    Mat m(n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

Mat Mat::from_columns(int rows, const std::vector<ColVec>& cols)
{
    Mat m(rows, static_cast<int>(cols.size()));
    for (int j = 0; j < m.cols(); ++j) {
        if (static_cast<int>(cols[j].size()) != rows)
            throw std::invalid_argument("column length mismatch");
        for (int i = 0; i < rows; ++i)
            m.at(i, j) = cols[j][i];
    }
    return m;
}

bool Mat::is_zero() const
{
    for (const auto& e : entries_)
        if (e != 0)
            return false;
    return true;
}

Mat Mat::transpose() const
{
    Mat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            t.at(j, i) = at(i, j);
    return t;
}

ColVec Mat::column(int j) const
{
    ColVec v(rows_);
    for (int i = 0; i < rows_; ++i)
        v[i] = at(i, j);
    return v;
}

Mat operator*(const Mat& a, const Mat& b)
{
    if (a.cols() != b.rows())
        throw std::invalid_argument("matrix product shape mismatch");
    Mat c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const Rat& aik = a.at(i, k);
            if (aik == 0)
                continue;
            for (int j = 0; j < b.cols(); ++j) {
                const Rat& bkj = b.at(k, j);
                if (bkj != 0)
                    c.at(i, j) += aik * bkj;
            }
        }
    return c;
}

Mat operator+(const Mat& a, const Mat& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix sum shape mismatch");
    Mat c(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            c.at(i, j) = a.at(i, j) + b.at(i, j);
    return c;
}

Mat operator-(const Mat& a, const Mat& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix difference shape mismatch");
    Mat c(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            c.at(i, j) = a.at(i, j) - b.at(i, j);
    return c;
}

Mat operator*(const Rat& c, const Mat& a)
{
    Mat r(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            r.at(i, j) = c * a.at(i, j);
    return r;
}

ColVec operator*(const Mat& a, const ColVec& v)
{
    if (a.cols() != static_cast<int>(v.size()))
        throw std::invalid_argument("matrix-vector shape mismatch");
    ColVec r(a.rows());
    for (int i = 0; i < a.rows(); ++i) {
        Rat acc = 0;
        for (int j = 0; j < a.cols(); ++j)
            if (a.at(i, j) != 0 && v[j] != 0)
                acc += a.at(i, j) * v[j];
        r[i] = acc;
    }
    return r;
}

Mat hstack(const Mat& a, const Mat& b)
{
    if (a.rows() != b.rows())
        throw std::invalid_argument("hstack row mismatch");
    Mat c(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j)
            c.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols(); ++j)
            c.at(i, a.cols() + j) = b.at(i, j);
    }
    return c;
}

Mat vstack(const Mat& a, const Mat& b)
{
    if (a.cols() != b.cols())
        throw std::invalid_argument("vstack column mismatch");
    Mat c(a.rows() + b.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            c.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j)
            c.at(a.rows() + i, j) = b.at(i, j);
    return c;
}

std::vector<int> rref(Mat& a)
{
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
        int pivot_row = -1;
        for (int i = row; i < a.rows(); ++i)
            if (a.at(i, col) != 0) {
                pivot_row = i;
                break;
            }
        if (pivot_row < 0)
            continue;
        if (pivot_row != row)
            for (int j = 0; j < a.cols(); ++j)
                std::swap(a.at(row, j), a.at(pivot_row, j));
        Rat inv = Rat(1) / a.at(row, col);
        for (int j = col; j < a.cols(); ++j)
            a.at(row, j) *= inv;
        for (int i = 0; i < a.rows(); ++i) {
            if (i == row)
                continue;
            Rat f = a.at(i, col);
            if (f == 0)
                continue;
            for (int j = col; j < a.cols(); ++j)
                a.at(i, j) -= f * a.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

KernelResult rank_kernel(const Mat& a)
{
    Mat r = a;
    std::vector<int> pivots = rref(r);

    KernelResult res;
    res.rank = static_cast<int>(pivots.size());

    std::vector<bool> is_pivot(a.cols(), false);
    for (int p : pivots)
        is_pivot[p] = true;

    for (int f = 0; f < a.cols(); ++f) {
        if (is_pivot[f])
            continue;
        ColVec v(a.cols());
        v[f] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k)
            v[pivots[k]] = -r.at(static_cast<int>(k), f);
        res.kernel.push_back(std::move(v));
        res.free_cols.push_back(f);
    }
    return res;
}

int rank(const Mat& a)
{
    Mat r = a;
    return static_cast<int>(rref(r).size());
}

std::optional<ColVec> solve(const Mat& a, const ColVec& b)
{
    if (static_cast<int>(b.size()) != a.rows())
        throw std::invalid_argument("solve: right-hand side length mismatch");

    Mat aug(a.rows(), a.cols() + 1);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j)
            aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    std::vector<int> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == a.cols())
        return std::nullopt;

    ColVec x(a.cols());
    for (std::size_t k = 0; k < pivots.size(); ++k)
        x[pivots[k]] = aug.at(static_cast<int>(k), a.cols());
    return x;
}

} // namespace drf
