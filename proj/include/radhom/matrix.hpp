#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "radhom/field.hpp"

namespace radhom {

/// Dense row-major matrix over a Field. A 0 x n or n x 0 matrix is legal.
class Mat {
 public:
  Mat() = default;
  Mat(Field f, std::size_t rows, std::size_t cols);

  static Mat identity(Field f, std::size_t n);
  static Mat from_ints(Field f, const std::vector<std::vector<long>>& rows);
  /// Column vector with the given entries.
  static Mat column(Field f, const std::vector<Scalar>& entries);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Scalar& v);
  void set(std::size_t r, std::size_t c, long v);
  bool entry_is_zero(std::size_t r, std::size_t c) const;
  bool is_zero() const;

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat scaled(const Scalar& s) const;
  Mat transpose() const;

  /// Adds s * o into this matrix in place.
  void add_scaled(const Scalar& s, const Mat& o);
  /// Adds s * o into the block with top-left corner (r0, c0).
  void add_scaled_block(std::size_t r0, std::size_t c0, const Scalar& s, const Mat& o);

  Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Mat& b);
  Mat select_rows(const std::vector<std::size_t>& idx) const;
  Mat select_cols(const std::vector<std::size_t>& idx) const;
  static Mat hstack(Field f, std::size_t rows, const std::vector<const Mat*>& parts);
  static Mat vstack(Field f, std::size_t cols, const std::vector<const Mat*>& parts);

  bool operator==(const Mat& o) const;
  bool operator!=(const Mat& o) const { return !(*this == o); }

  /// "[[1,0],[0,1]]" with canonical scalar text.
  std::string str() const;

  /// Stable 64-bit digest of shape and entries.
  std::uint64_t digest() const;

  // Raw storage for the kernels; exactly one of these is populated.
  std::vector<std::uint32_t>& fp_data() { return fp_; }
  const std::vector<std::uint32_t>& fp_data() const { return fp_; }
  std::vector<mpq_class>& q_data() { return q_; }
  const std::vector<mpq_class>& q_data() const { return q_; }

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint32_t> fp_;
  std::vector<mpq_class> q_;
};

struct RrefResult {
  Mat matrix;
  std::vector<std::size_t> pivots;  // strictly increasing pivot columns
};

RrefResult rref(const Mat& m);
std::size_t rank(const Mat& m);

/// Columns form a basis of the right null space of m.
Mat kernel_basis(const Mat& m);

/// Kernel basis plus the free columns: rows `free` of the basis form an identity,
/// so coordinates of a kernel vector are read off at those rows.
struct KernelBasis {
  Mat basis;
  std::vector<std::size_t> free;
};
KernelBasis kernel_with_coordinates(const Mat& m);

/// Columns of m forming a basis of its column space.
Mat image_basis(const Mat& m);

/// Some x with m * x = b, or nothing when the system is inconsistent.
std::optional<Mat> solve(const Mat& m, const Mat& b);

/// Basis (as columns) of a complement of span(cols of s) inside k^n, chosen
/// among standard unit vectors.
Mat complement_basis(const Mat& s);

}  // namespace radhom
