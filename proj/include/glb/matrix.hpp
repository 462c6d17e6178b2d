#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "glb/rational.hpp"

namespace glb {

/// Dense row-major matrix over ℚ. Also serves as the representation of a
/// linear map, with column j holding the image of basis vector j.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<std::vector<Rational>>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Rational> row(std::size_t r) const;
  std::vector<Rational> column(std::size_t c) const;

  Matrix transpose() const;
  bool is_zero() const;
  bool is_symmetric() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& s, const Matrix& a);
  std::vector<Rational> apply(const std::vector<Rational>& v) const;
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RowEchelon {
  Matrix reduced;                    // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;   // pivot column of each row
};

RowEchelon row_reduce(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Basis of {x : m x = 0}; one vector per free column, with that free
/// variable set to 1 and the others to 0.
std::vector<std::vector<Rational>> nullspace(const Matrix& m);

struct LinearSolution {
  std::vector<Rational> particular;               // free variables set to zero
  std::vector<std::vector<Rational>> homogeneous; // nullspace basis
};

/// Full affine solution set of m x = b, or nullopt if inconsistent.
std::optional<LinearSolution> solve(const Matrix& m, const std::vector<Rational>& b);

std::optional<Matrix> inverse(const Matrix& m);

struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
  std::vector<Rational> pivots;  // diagonal of D in a congruence P·S·Pᵀ = D
};

/// Sylvester inertia of a symmetric matrix via rational LDLᵀ with diagonal
/// pivoting (largest |d_ii| first). A zero diagonal with a nonzero
/// off-diagonal entry is resolved by the congruence e_i ← e_i + e_j.
Inertia inertia(const Matrix& symmetric);

}  // namespace glb
