#pragma once

#include "drf/rational.hpp"

#include <initializer_list>
#include <optional>
#include <vector>

namespace drf {

using ColVec = std::vector<Rat>;

// Dense rational matrix, row-major. Zero-size matrices are legal and show up
// constantly (fibers of dimension 0), so every operation must tolerate them.
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols);
    Mat(int rows, int cols, std::vector<Rat> entries);
    Mat(std::initializer_list<std::initializer_list<Rat>> rows);

    static Mat identity(int n);
    static Mat from_columns(int rows, const std::vector<ColVec>& cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& at(int i, int j) { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Rat& at(int i, int j) const { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }

    const std::vector<Rat>& entries() const { return entries_; }

    bool is_zero() const;
    Mat transpose() const;
    ColVec column(int j) const;

    bool operator==(const Mat& other) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rat> entries_;
};

Mat operator*(const Mat& a, const Mat& b);
Mat operator+(const Mat& a, const Mat& b);
Mat operator-(const Mat& a, const Mat& b);
Mat operator*(const Rat& c, const Mat& a);
ColVec operator*(const Mat& a, const ColVec& v);

// Columns of a glued side by side, then columns of b.
Mat hstack(const Mat& a, const Mat& b);
// Rows of a on top of rows of b.
Mat vstack(const Mat& a, const Mat& b);

struct KernelResult {
    int rank = 0;
    // Kernel basis in reduced-echelon normal form: vector r has entry 1 at
    // free_cols[r] and entry 0 at every other free column, listed in
    // ascending free-column order. Coordinates of any kernel element in this
    // basis can therefore be read off at the free columns.
    std::vector<ColVec> kernel;
    std::vector<int> free_cols;
};

KernelResult rank_kernel(const Mat& a);
int rank(const Mat& a);

// Some x with a*x = b, free variables pinned to 0; nullopt when inconsistent.
// Throws std::invalid_argument when b has the wrong length.
std::optional<ColVec> solve(const Mat& a, const ColVec& b);

// In-place Gauss-Jordan. Returns pivot columns (ascending).
std::vector<int> rref(Mat& a);

} // namespace drf
