#include "radhom/matrix.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <sstream>

namespace radhom {

namespace {

using detail::FpArith;
using detail::QArith;

template <class Fn>
decltype(auto) dispatch(const Field& f, Fn&& fn) {
  if (f.is_prime()) return fn(FpArith{f.characteristic()});
  return fn(QArith{});
}

template <class Ar>
auto& storage(Mat& m) {
  if constexpr (std::is_same_v<Ar, FpArith>)
    return m.fp_data();
  else
    return m.q_data();
}

template <class Ar>
const auto& storage(const Mat& m) {
  if constexpr (std::is_same_v<Ar, FpArith>)
    return m.fp_data();
  else
    return m.q_data();
}

// x mod p for x < 2^63 without a hardware division.
struct Barrett {
  std::uint64_t p, m;
  explicit Barrett(std::uint64_t prime) : p(prime), m(prime ? ~std::uint64_t(0) / prime : 0) {}
  std::uint32_t operator()(std::uint64_t x) const {
    std::uint64_t q = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * m) >> 64);
    std::uint64_t r = x - q * p;
    while (r >= p) r -= p;
    return static_cast<std::uint32_t>(r);
  }
};

inline std::uint64_t prime_of(const FpArith& ar) { return ar.p; }
inline std::uint64_t prime_of(const QArith&) { return 0; }

// Gauss-Jordan in place. With `reduce_above` false only a row echelon form is
// produced (enough for rank). Returns pivot columns.
template <class Ar>
std::vector<std::size_t> eliminate(const Ar& ar, std::vector<typename Ar::T>& a, std::size_t rows,
                                   std::size_t cols, bool reduce_above) {
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> support;
  [[maybe_unused]] const Barrett red(prime_of(ar));
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (!ar.is_zero(a[i * cols + c])) {
        sel = i;
        break;
      }
    if (sel == rows) continue;
    if (sel != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(a[sel * cols + j], a[r * cols + j]);
    auto inv = ar.inv(a[r * cols + c]);
    support.clear();
    for (std::size_t j = c; j < cols; ++j) {
      if (ar.is_zero(a[r * cols + j])) continue;
      a[r * cols + j] = ar.mul(a[r * cols + j], inv);
      support.push_back(j);
    }
    for (std::size_t i = reduce_above ? 0 : r + 1; i < rows; ++i) {
      if (i == r || ar.is_zero(a[i * cols + c])) continue;
      auto f = a[i * cols + c];
      if constexpr (std::is_same_v<Ar, FpArith>) {
        const std::uint64_t nf = ar.p - f;
        for (std::size_t j : support) a[i * cols + j] = red(a[i * cols + j] + nf * a[r * cols + j]);
      } else {
        for (std::size_t j : support) a[i * cols + j] = ar.sub(a[i * cols + j], ar.mul(f, a[r * cols + j]));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

void check_same_field(const Mat& a, const Mat& b) {
  if (a.field() != b.field()) throw ContractViolation("matrix fields differ");
}

}  // namespace

Mat::Mat(Field f, std::size_t rows, std::size_t cols) : field_(f), rows_(rows), cols_(cols) {
  if (f.is_prime())
    fp_.assign(rows * cols, 0);
  else
    q_.assign(rows * cols, mpq_class(0));
}

Mat Mat::identity(Field f, std::size_t n) {
  Mat m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Mat Mat::from_ints(Field f, const std::vector<std::vector<long>>& rows) {
  std::size_t nc = rows.empty() ? 0 : rows.front().size();
  Mat m(f, rows.size(), nc);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != nc) throw ContractViolation("ragged matrix literal");
    for (std::size_t j = 0; j < nc; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

Mat Mat::column(Field f, const std::vector<Scalar>& entries) {
  Mat m(f, entries.size(), 1);
  for (std::size_t i = 0; i < entries.size(); ++i) m.set(i, 0, entries[i]);
  return m;
}

Scalar Mat::at(std::size_t r, std::size_t c) const {
  if (field_.is_prime()) return Scalar::from_residue(field_, fp_[r * cols_ + c]);
  return Scalar(field_, q_[r * cols_ + c]);
}

void Mat::set(std::size_t r, std::size_t c, const Scalar& v) {
  if (v.field() != field_) throw ContractViolation("scalar field differs from matrix field");
  if (field_.is_prime())
    fp_[r * cols_ + c] = v.residue();
  else
    q_[r * cols_ + c] = v.rational();
}

void Mat::set(std::size_t r, std::size_t c, long v) {
  if (field_.is_prime())
    fp_[r * cols_ + c] = detail::reduce_mod(v, field_.characteristic());
  else
    q_[r * cols_ + c] = v;
}

bool Mat::entry_is_zero(std::size_t r, std::size_t c) const {
  return field_.is_prime() ? fp_[r * cols_ + c] == 0 : sgn(q_[r * cols_ + c]) == 0;
}

bool Mat::is_zero() const {
  if (field_.is_prime()) return std::all_of(fp_.begin(), fp_.end(), [](auto x) { return x == 0; });
  return std::all_of(q_.begin(), q_.end(), [](const auto& x) { return sgn(x) == 0; });
}

Mat Mat::operator*(const Mat& o) const {
  check_same_field(*this, o);
  if (cols_ != o.rows_) throw ContractViolation("matrix product shape mismatch");
  Mat out(field_, rows_, o.cols_);
  if (field_.is_prime()) {
    const std::uint64_t p = field_.characteristic();
    const std::uint64_t maxprod = (p - 1) * (p - 1);
    const std::uint64_t budget =
        maxprod == 0 ? std::numeric_limits<std::uint64_t>::max() : (std::numeric_limits<std::uint64_t>::max() - p) / maxprod;
    std::vector<std::uint64_t> acc(o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      std::fill(acc.begin(), acc.end(), 0);
      std::uint64_t used = 0;
      for (std::size_t k = 0; k < cols_; ++k) {
        std::uint64_t a = fp_[i * cols_ + k];
        if (a == 0) continue;
        if (used == budget) {
          for (auto& x : acc) x %= p;
          used = 0;
        }
        const std::uint32_t* brow = o.fp_.data() + k * o.cols_;
        for (std::size_t j = 0; j < o.cols_; ++j) acc[j] += a * brow[j];
        ++used;
      }
      for (std::size_t j = 0; j < o.cols_; ++j) out.fp_[i * o.cols_ + j] = static_cast<std::uint32_t>(acc[j] % p);
    }
  } else {
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const auto& a = q_[i * cols_ + k];
        if (sgn(a) == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) out.q_[i * o.cols_ + j] += a * o.q_[k * o.cols_ + j];
      }
  }
  return out;
}

Mat Mat::operator+(const Mat& o) const {
  Mat r = *this;
  r.add_scaled(Scalar(field_, 1), o);
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  Mat r = *this;
  r.add_scaled(Scalar(field_, -1), o);
  return r;
}

void Mat::add_scaled(const Scalar& s, const Mat& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ContractViolation("matrix sum shape mismatch");
  add_scaled_block(0, 0, s, o);
}

void Mat::add_scaled_block(std::size_t r0, std::size_t c0, const Scalar& s, const Mat& o) {
  check_same_field(*this, o);
  if (r0 + o.rows_ > rows_ || c0 + o.cols_ > cols_) throw ContractViolation("block out of range");
  if (field_.is_prime()) {
    FpArith ar{field_.characteristic()};
    const auto k = s.residue();
    if (k == 0) return;
    for (std::size_t i = 0; i < o.rows_; ++i) {
      std::uint32_t* dst = fp_.data() + (r0 + i) * cols_ + c0;
      const std::uint32_t* src = o.fp_.data() + i * o.cols_;
      for (std::size_t j = 0; j < o.cols_; ++j)
        if (src[j]) dst[j] = ar.add(dst[j], ar.mul(k, src[j]));
    }
  } else {
    for (std::size_t i = 0; i < o.rows_; ++i)
      for (std::size_t j = 0; j < o.cols_; ++j) q_[(r0 + i) * cols_ + c0 + j] += s.rational() * o.q_[i * o.cols_ + j];
  }
}

Mat Mat::scaled(const Scalar& s) const {
  Mat r(field_, rows_, cols_);
  r.add_scaled(s, *this);
  return r;
}

Mat Mat::transpose() const {
  Mat t(field_, cols_, rows_);
  constexpr std::size_t tile = 64;
  for (std::size_t i0 = 0; i0 < rows_; i0 += tile)
    for (std::size_t j0 = 0; j0 < cols_; j0 += tile) {
      const std::size_t i1 = std::min(rows_, i0 + tile), j1 = std::min(cols_, j0 + tile);
      if (field_.is_prime()) {
        for (std::size_t i = i0; i < i1; ++i)
          for (std::size_t j = j0; j < j1; ++j) t.fp_[j * rows_ + i] = fp_[i * cols_ + j];
      } else {
        for (std::size_t i = i0; i < i1; ++i)
          for (std::size_t j = j0; j < j1; ++j) t.q_[j * rows_ + i] = q_[i * cols_ + j];
      }
    }
  return t;
}

Mat Mat::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw ContractViolation("block out of range");
  Mat b(field_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) {
      if (field_.is_prime())
        b.fp_[i * nc + j] = fp_[(r0 + i) * cols_ + c0 + j];
      else
        b.q_[i * nc + j] = q_[(r0 + i) * cols_ + c0 + j];
    }
  return b;
}

void Mat::set_block(std::size_t r0, std::size_t c0, const Mat& b) {
  check_same_field(*this, b);
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw ContractViolation("block out of range");
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) {
      if (field_.is_prime())
        fp_[(r0 + i) * cols_ + c0 + j] = b.fp_[i * b.cols_ + j];
      else
        q_[(r0 + i) * cols_ + c0 + j] = b.q_[i * b.cols_ + j];
    }
}

Mat Mat::select_rows(const std::vector<std::size_t>& idx) const {
  Mat out(field_, idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      if (field_.is_prime())
        out.fp_[i * cols_ + j] = fp_[idx[i] * cols_ + j];
      else
        out.q_[i * cols_ + j] = q_[idx[i] * cols_ + j];
    }
  return out;
}

Mat Mat::select_cols(const std::vector<std::size_t>& idx) const {
  Mat out(field_, rows_, idx.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) {
      if (field_.is_prime())
        out.fp_[i * idx.size() + j] = fp_[i * cols_ + idx[j]];
      else
        out.q_[i * idx.size() + j] = q_[i * cols_ + idx[j]];
    }
  return out;
}

Mat Mat::hstack(Field f, std::size_t rows, const std::vector<const Mat*>& parts) {
  std::size_t total = 0;
  for (const Mat* p : parts) {
    if (p->rows() != rows) throw ContractViolation("hstack row mismatch");
    total += p->cols();
  }
  Mat out(f, rows, total);
  std::size_t c = 0;
  for (const Mat* p : parts) {
    out.set_block(0, c, *p);
    c += p->cols();
  }
  return out;
}

Mat Mat::vstack(Field f, std::size_t cols, const std::vector<const Mat*>& parts) {
  std::size_t total = 0;
  for (const Mat* p : parts) {
    if (p->cols() != cols) throw ContractViolation("vstack column mismatch");
    total += p->rows();
  }
  Mat out(f, total, cols);
  std::size_t r = 0;
  for (const Mat* p : parts) {
    out.set_block(r, 0, *p);
    r += p->rows();
  }
  return out;
}

bool Mat::operator==(const Mat& o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && fp_ == o.fp_ && q_ == o.q_;
}

std::string Mat::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ',';
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ',';
      os << at(i, j).str();
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

std::uint64_t Mat::digest() const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 1099511628211ull;
  };
  mix(rows_);
  mix(cols_);
  if (field_.is_prime()) {
    for (auto x : fp_) mix(x);
  } else {
    for (const auto& x : q_) mix(std::hash<std::string>()(x.get_str()));
  }
  return h;
}

RrefResult rref(const Mat& m) {
  Mat a = m;
  auto pivots = dispatch(m.field(), [&](auto ar) {
    using Ar = decltype(ar);
    return eliminate(ar, storage<Ar>(a), a.rows(), a.cols(), true);
  });
  return {std::move(a), std::move(pivots)};
}

std::size_t rank(const Mat& m) {
  if (m.empty()) return 0;
  Mat a = m.rows() > m.cols() ? m.transpose() : m;
  return dispatch(a.field(), [&](auto ar) {
    using Ar = decltype(ar);
    return eliminate(ar, storage<Ar>(a), a.rows(), a.cols(), false).size();
  });
}

KernelBasis kernel_with_coordinates(const Mat& m) {
  auto [r, pivots] = rref(m);
  std::vector<char> is_pivot(m.cols(), 0);
  for (auto p : pivots) is_pivot[p] = 1;
  KernelBasis out;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) out.free.push_back(c);
  out.basis = Mat(m.field(), m.cols(), out.free.size());
  Scalar minus_one(m.field(), -1);
  for (std::size_t k = 0; k < out.free.size(); ++k) {
    std::size_t f = out.free[k];
    out.basis.set(f, k, 1);
    for (std::size_t i = 0; i < pivots.size(); ++i)
      if (!r.entry_is_zero(i, f)) out.basis.set(pivots[i], k, -r.at(i, f));
  }
  return out;
}

Mat kernel_basis(const Mat& m) { return kernel_with_coordinates(m).basis; }

Mat image_basis(const Mat& m) { return m.select_cols(rref(m).pivots); }

std::optional<Mat> solve(const Mat& m, const Mat& b) {
  if (b.rows() != m.rows()) throw ContractViolation("solve: right-hand side row count differs");
  Mat aug = Mat::hstack(m.field(), m.rows(), {&m, &b});
  auto [r, pivots] = rref(aug);
  Mat x(m.field(), m.cols(), b.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] >= m.cols()) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x.set(pivots[i], j, r.at(i, m.cols() + j));
  }
  return x;
}

Mat complement_basis(const Mat& s) {
  const std::size_t n = s.rows();
  std::vector<std::size_t> pivots = rref(s.transpose()).pivots;
  std::vector<char> used(n, 0);
  for (auto p : pivots) used[p] = 1;
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < n; ++i)
    if (!used[i]) rest.push_back(i);
  Mat out(s.field(), n, rest.size());
  for (std::size_t k = 0; k < rest.size(); ++k) out.set(rest[k], k, 1);
  return out;
}

}  // namespace radhom
