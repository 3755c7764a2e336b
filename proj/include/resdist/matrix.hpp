#pragma once

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "resdist/rational.hpp"

namespace resdist {

// Dense row-major matrix of exact rationals. Indices are 0-based; when a
// matrix is indexed by graph vertices, row v-1 corresponds to vertex v.
// Zero-dimensional shapes (0xN, Nx0, 0x0) are legal so that rank-0 edge
// cases fall out of the general formulas.
class RatMatrix {
  public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
        if (rows < 0 || cols < 0)
            throw std::invalid_argument("RatMatrix: negative dimension");
        e_.resize(static_cast<size_t>(rows) * static_cast<size_t>(cols));
    }

    static RatMatrix identity(int n) {
        RatMatrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static RatMatrix ones(int rows, int cols) {
        RatMatrix m(rows, cols);
        for (auto& e : m.e_) e = 1;
        return m;
    }

    static RatMatrix from_rows(std::initializer_list<std::initializer_list<Rat>> rows) {
        const int r = static_cast<int>(rows.size());
        const int c = r == 0 ? 0 : static_cast<int>(rows.begin()->size());
        RatMatrix m(r, c);
        int i = 0;
        for (const auto& row : rows) {
            if (static_cast<int>(row.size()) != c)
                throw std::invalid_argument("RatMatrix: ragged rows");
            int j = 0;
            for (const auto& e : row) m(i, j++) = e;
            ++i;
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& operator()(int i, int j) { return e_[idx(i, j)]; }
    const Rat& operator()(int i, int j) const { return e_[idx(i, j)]; }

    friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const RatMatrix& a, const RatMatrix& b) { return !(a == b); }

    RatMatrix& operator+=(const RatMatrix& o) {
        require_same_shape(o, "+");
        for (size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
        return *this;
    }
    RatMatrix& operator-=(const RatMatrix& o) {
        require_same_shape(o, "-");
        for (size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
        return *this;
    }
    RatMatrix& operator*=(const Rat& s) {
        for (auto& e : e_) e *= s;
        return *this;
    }

    friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) { return a += b; }
    friend RatMatrix operator-(RatMatrix a, const RatMatrix& b) { return a -= b; }
    friend RatMatrix operator*(RatMatrix a, const Rat& s) { return a *= s; }
    friend RatMatrix operator*(const Rat& s, RatMatrix a) { return a *= s; }

    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
        if (a.cols_ != b.rows_)
            throw std::invalid_argument("RatMatrix: inner dimensions differ (" +
                                        a.shape_string() + " * " + b.shape_string() + ")");
        RatMatrix c(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const Rat& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (int j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    Rat row_sum(int i) const {
        Rat s;
        for (int j = 0; j < cols_; ++j) s += (*this)(i, j);
        return s;
    }
    Rat col_sum(int j) const {
        Rat s;
        for (int i = 0; i < rows_; ++i) s += (*this)(i, j);
        return s;
    }
    Rat sum() const {
        Rat s;
        for (const auto& e : e_) s += e;
        return s;
    }

    bool is_zero() const {
        for (const auto& e : e_)
            if (!e.is_zero()) return false;
        return true;
    }

    std::string shape_string() const {
        return std::to_string(rows_) + "x" + std::to_string(cols_);
    }

    std::string to_string() const {
        std::string out;
        for (int i = 0; i < rows_; ++i) {
            out += i == 0 ? "[" : " ";
            for (int j = 0; j < cols_; ++j) {
                out += (*this)(i, j).to_string();
                if (j + 1 < cols_) out += " ";
            }
            out += i + 1 < rows_ ? "\n" : "]";
        }
        return out;
    }

  private:
    size_t idx(int i, int j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
            throw std::out_of_range("RatMatrix: index (" + std::to_string(i) + "," +
                                    std::to_string(j) + ") outside " + shape_string());
        return static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j);
    }
    void require_same_shape(const RatMatrix& o, const char* op) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument(std::string("RatMatrix: shape mismatch for ") + op +
                                        " (" + shape_string() + " vs " + o.shape_string() + ")");
    }

    int rows_, cols_;
    std::vector<Rat> e_;
};

inline RatMatrix transpose(const RatMatrix& a) {
    RatMatrix t(a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    return t;
}

}  // namespace resdist
