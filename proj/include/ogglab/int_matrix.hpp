#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <vector>

#include "ogglab/bigint.hpp"

namespace ogglab {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix fromRows(const std::vector<IntVector>& rows, std::size_t cols);
    static IntMatrix diagonal(const IntVector& diag);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool isSquare() const { return rows_ == cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntVector row(std::size_t i) const;
    void setRow(std::size_t i, const IntVector& values);
    void appendRow(const IntVector& values);
    void swapRows(std::size_t a, std::size_t b);
    void swapCols(std::size_t a, std::size_t b);

    IntMatrix transpose() const;
    Integer trace() const;
    bool isZero() const;
    /// Row-major flattening, used to treat matrices as vectors in Z^(r*c).
    IntVector flatten() const;
    static IntMatrix unflatten(const IntVector& v, std::size_t rows, std::size_t cols);
    /// Rows [begin, end) as a new matrix.
    IntMatrix rowRange(std::size_t begin, std::size_t end) const;
    static IntMatrix vstack(const IntMatrix& top, const IntMatrix& bottom);

    const std::vector<Integer>& data() const { return data_; }

    IntMatrix operator*(const IntMatrix& rhs) const;
    IntMatrix operator+(const IntMatrix& rhs) const;
    IntMatrix operator-(const IntMatrix& rhs) const;
    IntMatrix operator-() const;
    IntMatrix operator*(const Integer& s) const;
    bool operator==(const IntMatrix& rhs) const;
    bool operator!=(const IntMatrix& rhs) const { return !(*this == rhs); }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

/// Row vector times matrix.
IntVector operator*(const IntVector& v, const IntMatrix& m);
std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

}  // namespace ogglab
