#include "radhom/rep.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace radhom {

const char* side_name(Side s) { return s == Side::Left ? "left" : "right"; }

namespace {

std::size_t expected_rows(const Algebra& a, Side side, const std::vector<int>& dims, int arrow) {
  const Arrow& ar = a.quiver().arrows[arrow];
  return dims[side == Side::Left ? ar.target : ar.source];
}

std::size_t expected_cols(const Algebra& a, Side side, const std::vector<int>& dims, int arrow) {
  const Arrow& ar = a.quiver().arrows[arrow];
  return dims[side == Side::Left ? ar.source : ar.target];
}

void check_shapes(const Algebra& a, Side side, const std::vector<int>& dims, const std::vector<Mat>& arrows) {
  if (static_cast<int>(dims.size()) != a.vertex_count())
    throw ContractViolation("dimension vector has " + std::to_string(dims.size()) + " entries, algebra has " +
                            std::to_string(a.vertex_count()) + " vertices");
  for (int d : dims)
    if (d < 0) throw ContractViolation("negative dimension in dimension vector");
  if (static_cast<int>(arrows.size()) != a.arrow_count())
    throw ContractViolation("one matrix per arrow is required");
  for (int i = 0; i < a.arrow_count(); ++i) {
    const Mat& m = arrows[i];
    if (m.rows() != expected_rows(a, side, dims, i) || m.cols() != expected_cols(a, side, dims, i))
      throw ContractViolation("arrow '" + a.quiver().arrows[i].name + "' has a matrix of the wrong shape");
    if (m.field() != a.field()) throw ContractViolation("arrow matrix over the wrong field");
  }
}

void require_compatible(const Rep& m, const Rep& n) {
  if (m.side() != n.side()) throw ContractViolation("modules live on different sides");
  if (!same_algebra(*m.algebra(), *n.algebra())) throw ContractViolation("modules over different algebras");
}

Mat inverse(const Mat& t) {
  auto x = solve(t, Mat::identity(t.field(), t.rows()));
  if (!x) throw ContractViolation("matrix is not invertible");
  return *x;
}

}  // namespace

Rep::Rep(AlgebraPtr a, Side side, std::vector<int> dims, std::vector<Mat> arrows) {
  if (!a) throw ContractViolation("module needs an algebra");
  check_shapes(*a, side, dims, arrows);
  *this = trusted(std::move(a), side, std::move(dims), std::move(arrows));
  if (!satisfies_relations()) throw ContractViolation("representation does not satisfy the relations");
}

Rep Rep::trusted(AlgebraPtr a, Side side, std::vector<int> dims, std::vector<Mat> arrows) {
#ifndef NDEBUG
  check_shapes(*a, side, dims, arrows);
#endif
  Rep r;
  r.d_ = std::make_shared<const Data>(Data{std::move(a), side, std::move(dims), std::move(arrows)});
#ifndef NDEBUG
  if (!r.satisfies_relations()) throw ContractViolation("engine produced a representation violating the relations");
#endif
  return r;
}

int Rep::total_dim() const {
  if (!d_) return 0;
  int s = 0;
  for (int d : d_->dims) s += d;
  return s;
}

int Rep::acts_from(int a) const {
  const Arrow& ar = algebra()->quiver().arrows[a];
  return side() == Side::Left ? ar.source : ar.target;
}

int Rep::acts_to(int a) const {
  const Arrow& ar = algebra()->quiver().arrows[a];
  return side() == Side::Left ? ar.target : ar.source;
}

std::vector<Mat> Rep::all_path_actions() const {
  const Algebra& a = *algebra();
  std::vector<Mat> out(a.dim());
  for (int i = 0; i < a.dim(); ++i) {
    const BasisPath& b = a.basis_path(i);
    if (b.arrows.empty()) {
      out[i] = Mat::identity(field(), dim_at(b.source));
    } else if (side() == Side::Left) {
      out[i] = arrow(a.last_arrow(i)) * out[a.tail(i)];
    } else {
      out[i] = out[a.tail(i)] * arrow(a.last_arrow(i));
    }
  }
  return out;
}

Mat Rep::path_action(int i) const {
  const Algebra& a = *algebra();
  const BasisPath& b = a.basis_path(i);
  if (b.arrows.empty()) return Mat::identity(field(), dim_at(b.source));
  if (side() == Side::Left) return arrow(a.last_arrow(i)) * path_action(a.tail(i));
  return path_action(a.tail(i)) * arrow(a.last_arrow(i));
}

bool Rep::satisfies_relations() const {
  const Algebra& a = *algebra();
  auto act = [&](const Path& p) {
    Mat x = Mat::identity(field(), dim_at(a.quiver().arrows[p.front()].source));
    for (int ar : p) x = side() == Side::Left ? arrow(ar) * x : x * arrow(ar);
    return x;
  };
  for (const auto& rel : a.relations()) {
    Mat sum;
    for (const auto& t : rel.terms) {
      Mat x = act(t.path);
      if (sum.rows() == 0 && sum.cols() == 0 && x.rows() + x.cols() > 0)
        sum = x.scaled(t.coeff);
      else if (x.rows() + x.cols() > 0)
        sum.add_scaled(t.coeff, x);
    }
    if (!sum.is_zero()) return false;
  }
  // J^N M = 0: images of all paths of length L, tracked per vertex.
  std::vector<Mat> w(a.vertex_count());
  for (int v = 0; v < a.vertex_count(); ++v) w[v] = Mat::identity(field(), dim_at(v));
  for (int len = 0; len < a.nilbound(); ++len) {
    std::vector<Mat> next(a.vertex_count());
    for (int v = 0; v < a.vertex_count(); ++v) {
      std::vector<Mat> parts;
      for (int ar = 0; ar < a.arrow_count(); ++ar)
        if (acts_to(ar) == v) parts.push_back(arrow(ar) * w[acts_from(ar)]);
      std::vector<const Mat*> ptrs;
      for (const auto& p : parts) ptrs.push_back(&p);
      next[v] = image_basis(Mat::hstack(field(), dim_at(v), ptrs));
    }
    w = std::move(next);
  }
  for (const auto& m : w)
    if (m.cols() != 0) return false;
  return true;
}

bool Rep::operator==(const Rep& o) const {
  if (d_ == o.d_) return true;
  if (!d_ || !o.d_) return is_zero() && o.is_zero();
  return side() == o.side() && same_algebra(*algebra(), *o.algebra()) && dims() == o.dims() && arrows() == o.arrows();
}

std::uint64_t Rep::digest() const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](std::uint64_t x) {
    h ^= x;
    h *= 1099511628211ull;
  };
  mix(static_cast<std::uint64_t>(side()));
  for (int d : dims()) mix(static_cast<std::uint64_t>(d));
  for (const auto& m : arrows()) mix(m.digest());
  return h;
}

bool ModMap::is_homomorphism() const {
  for (int a = 0; a < source.algebra()->arrow_count(); ++a)
    if (target.arrow(a) * at[source.acts_from(a)] != at[source.acts_to(a)] * source.arrow(a)) return false;
  return true;
}

bool ModMap::is_zero() const {
  for (const auto& m : at)
    if (!m.is_zero()) return false;
  return true;
}

bool ModMap::is_injective() const {
  for (std::size_t v = 0; v < at.size(); ++v)
    if (rank(at[v]) != static_cast<std::size_t>(source.dim_at(v))) return false;
  return true;
}

bool ModMap::is_surjective() const {
  for (std::size_t v = 0; v < at.size(); ++v)
    if (rank(at[v]) != static_cast<std::size_t>(target.dim_at(v))) return false;
  return true;
}

ModMap compose(const ModMap& g, const ModMap& f) {
  ModMap h{f.source, g.target, {}};
  for (std::size_t v = 0; v < f.at.size(); ++v) h.at.push_back(g.at[v] * f.at[v]);
  return h;
}

ModMap identity_map(const Rep& m) {
  ModMap f{m, m, {}};
  for (int d : m.dims()) f.at.push_back(Mat::identity(m.field(), d));
  return f;
}

ModMap zero_map(const Rep& from, const Rep& to) {
  ModMap f{from, to, {}};
  for (std::size_t v = 0; v < from.dims().size(); ++v) f.at.emplace_back(from.field(), to.dim_at(v), from.dim_at(v));
  return f;
}

Rep zero_module(const AlgebraPtr& a, Side side) {
  std::vector<int> dims(a->vertex_count(), 0);
  std::vector<Mat> arrows;
  for (int i = 0; i < a->arrow_count(); ++i) arrows.emplace_back(a->field(), 0, 0);
  return Rep::trusted(a, side, dims, arrows);
}

Rep simple(const AlgebraPtr& a, int vertex, Side side) {
  if (vertex < 0 || vertex >= a->vertex_count()) throw ContractViolation("vertex out of range");
  std::vector<int> dims(a->vertex_count(), 0);
  dims[vertex] = 1;
  std::vector<Mat> arrows;
  for (int i = 0; i < a->arrow_count(); ++i)
    arrows.emplace_back(a->field(), expected_rows(*a, side, dims, i), expected_cols(*a, side, dims, i));
  return Rep::trusted(a, side, dims, arrows);
}

Rep projective(const AlgebraPtr& a, int vertex, Side side) {
  if (vertex < 0 || vertex >= a->vertex_count()) throw ContractViolation("vertex out of range");
  if (side == Side::Right) return from_left_op(projective(a->opposite(), vertex, Side::Left), a);
  std::vector<int> dims(a->vertex_count());
  for (int j = 0; j < a->vertex_count(); ++j) dims[j] = static_cast<int>(a->paths(vertex, j).size());
  std::vector<Mat> arrows;
  for (int i = 0; i < a->arrow_count(); ++i) arrows.push_back(a->left_mult(i, vertex));
  return Rep::trusted(a, side, dims, arrows);
}

Rep injective(const AlgebraPtr& a, int vertex, Side side) { return duality_D(projective(a, vertex, other(side))); }

Rep regular_module(const AlgebraPtr& a, Side side) {
  std::vector<Rep> parts;
  for (int v = 0; v < a->vertex_count(); ++v) parts.push_back(projective(a, v, side));
  return direct_sum(a, side, parts);
}

Rep top_of_algebra(const AlgebraPtr& a, Side side) {
  std::vector<Rep> parts;
  for (int v = 0; v < a->vertex_count(); ++v) parts.push_back(simple(a, v, side));
  return direct_sum(a, side, parts);
}

Rep dual_regular_module(const AlgebraPtr& a, Side side) { return duality_D(regular_module(a, other(side))); }

Rep radical_module(const AlgebraPtr& a, Side side) { return radical_top_socle(regular_module(a, side)).rad.module; }

Rep duality_D(const Rep& m) {
  std::vector<Mat> arrows;
  for (const auto& x : m.arrows()) arrows.push_back(x.transpose());
  return Rep::trusted(m.algebra(), other(m.side()), m.dims(), std::move(arrows));
}

ModMap duality_D(const ModMap& f) {
  ModMap g{duality_D(f.target), duality_D(f.source), {}};
  for (const auto& x : f.at) g.at.push_back(x.transpose());
  return g;
}

Rep to_left_op(const Rep& m) {
  if (m.side() != Side::Right) throw ContractViolation("to_left_op expects a right module");
  return Rep::trusted(m.algebra()->opposite(), Side::Left, m.dims(), m.arrows());
}

Rep from_left_op(const Rep& m, const AlgebraPtr& original) {
  if (m.side() != Side::Left) throw ContractViolation("from_left_op expects a left module");
  if (!same_algebra(*m.algebra(), *original->opposite()))
    throw ContractViolation("module is not over the opposite algebra");
  return Rep::trusted(original, Side::Right, m.dims(), m.arrows());
}

SubRep subrep(const Rep& m, const std::vector<Mat>& spans) {
  const int nv = m.algebra()->vertex_count();
  std::vector<Mat> basis(nv);
  std::vector<int> dims(nv);
  for (int v = 0; v < nv; ++v) {
    basis[v] = image_basis(spans[v]);
    dims[v] = static_cast<int>(basis[v].cols());
  }
  std::vector<Mat> arrows;
  for (int a = 0; a < m.algebra()->arrow_count(); ++a) {
    auto x = solve(basis[m.acts_to(a)], m.arrow(a) * basis[m.acts_from(a)]);
    if (!x) throw ContractViolation("subspaces are not closed under the arrows");
    arrows.push_back(std::move(*x));
  }
  return {Rep::trusted(m.algebra(), m.side(), dims, std::move(arrows)), std::move(basis)};
}

QuotientRep quotient(const Rep& m, const std::vector<Mat>& spans) {
  const int nv = m.algebra()->vertex_count();
  std::vector<Mat> comp(nv), proj(nv);
  std::vector<int> dims(nv);
  for (int v = 0; v < nv; ++v) {
    Mat b = image_basis(spans[v]);
    comp[v] = complement_basis(b);
    dims[v] = static_cast<int>(comp[v].cols());
    Mat t = Mat::hstack(m.field(), m.dim_at(v), {&b, &comp[v]});
    proj[v] = inverse(t).block(b.cols(), 0, comp[v].cols(), m.dim_at(v));
  }
  std::vector<Mat> arrows;
  for (int a = 0; a < m.algebra()->arrow_count(); ++a)
    arrows.push_back(proj[m.acts_to(a)] * m.arrow(a) * comp[m.acts_from(a)]);
  return {Rep::trusted(m.algebra(), m.side(), dims, std::move(arrows)), std::move(proj)};
}

std::vector<Mat> radical_spans(const Rep& m) {
  const int nv = m.algebra()->vertex_count();
  std::vector<Mat> out(nv);
  for (int v = 0; v < nv; ++v) {
    std::vector<const Mat*> parts;
    for (int a = 0; a < m.algebra()->arrow_count(); ++a)
      if (m.acts_to(a) == v) parts.push_back(&m.arrow(a));
    out[v] = image_basis(Mat::hstack(m.field(), m.dim_at(v), parts));
  }
  return out;
}

std::vector<Mat> socle_spans(const Rep& m) {
  const int nv = m.algebra()->vertex_count();
  std::vector<Mat> out(nv);
  for (int v = 0; v < nv; ++v) {
    std::vector<const Mat*> parts;
    for (int a = 0; a < m.algebra()->arrow_count(); ++a)
      if (m.acts_from(a) == v) parts.push_back(&m.arrow(a));
    out[v] = kernel_basis(Mat::vstack(m.field(), m.dim_at(v), parts));
  }
  return out;
}

std::vector<int> top_dims(const Rep& m) {
  auto r = radical_spans(m);
  std::vector<int> out;
  for (std::size_t v = 0; v < r.size(); ++v) out.push_back(m.dim_at(v) - static_cast<int>(r[v].cols()));
  return out;
}

std::vector<int> socle_dims(const Rep& m) {
  std::vector<int> out;
  for (const auto& s : socle_spans(m)) out.push_back(static_cast<int>(s.cols()));
  return out;
}

RadTopSoc radical_top_socle(const Rep& m) {
  auto r = radical_spans(m);
  return {subrep(m, r), quotient(m, r), subrep(m, socle_spans(m))};
}

Rep radical_power(const Rep& m, int i) {
  Rep x = m;
  for (int k = 0; k < i && !x.is_zero(); ++k) x = subrep(x, radical_spans(x)).module;
  return x;
}

Rep direct_sum(const AlgebraPtr& a, Side side, const std::vector<Rep>& ms) {
  const int nv = a->vertex_count();
  std::vector<int> dims(nv, 0);
  for (const auto& m : ms) {
    if (m.side() != side || !same_algebra(*m.algebra(), *a))
      throw ContractViolation("direct sum of modules over different algebras or sides");
    for (int v = 0; v < nv; ++v) dims[v] += m.dim_at(v);
  }
  std::vector<Mat> arrows;
  for (int ar = 0; ar < a->arrow_count(); ++ar) {
    Mat x(a->field(), expected_rows(*a, side, dims, ar), expected_cols(*a, side, dims, ar));
    std::size_t r = 0, c = 0;
    for (const auto& m : ms) {
      x.set_block(r, c, m.arrow(ar));
      r += m.arrow(ar).rows();
      c += m.arrow(ar).cols();
    }
    arrows.push_back(std::move(x));
  }
  return Rep::trusted(a, side, dims, std::move(arrows));
}

Rep direct_sum(const std::vector<Rep>& ms) {
  if (ms.empty()) throw ContractViolation("direct_sum of an empty list needs an explicit algebra and side");
  return direct_sum(ms.front().algebra(), ms.front().side(), ms);
}

namespace {

// Equations N(a) f_from = f_to M(a) in the unknowns f_v (row-major, stacked).
Mat hom_equations(const Rep& m, const Rep& n, std::vector<std::size_t>& offset) {
  const int nv = m.algebra()->vertex_count();
  offset.assign(nv + 1, 0);
  for (int v = 0; v < nv; ++v) offset[v + 1] = offset[v] + std::size_t(n.dim_at(v)) * m.dim_at(v);
  std::size_t eqs = 0;
  for (int a = 0; a < m.algebra()->arrow_count(); ++a) eqs += std::size_t(n.dim_at(m.acts_to(a))) * m.dim_at(m.acts_from(a));
  Mat sys(m.field(), eqs, offset[nv]);
  std::size_t row = 0;
  for (int a = 0; a < m.algebra()->arrow_count(); ++a) {
    const int i = m.acts_from(a), j = m.acts_to(a);
    const Mat& na = n.arrow(a);
    const Mat& ma = m.arrow(a);
    const int mi = m.dim_at(i), mj = m.dim_at(j), ni = n.dim_at(i), nj = n.dim_at(j);
    for (int r = 0; r < nj; ++r)
      for (int c = 0; c < mi; ++c, ++row) {
        for (int k = 0; k < ni; ++k)
          if (!na.entry_is_zero(r, k)) {
            std::size_t col = offset[i] + std::size_t(k) * mi + c;
            sys.set(row, col, sys.at(row, col) + na.at(r, k));
          }
        for (int k = 0; k < mj; ++k)
          if (!ma.entry_is_zero(k, c)) {
            std::size_t col = offset[j] + std::size_t(r) * mj + k;
            sys.set(row, col, sys.at(row, col) - ma.at(k, c));
          }
      }
  }
  return sys;
}

}  // namespace

std::vector<ModMap> hom_space(const Rep& m, const Rep& n) {
  require_compatible(m, n);
  std::vector<std::size_t> offset;
  Mat k = kernel_basis(hom_equations(m, n, offset));
  const int nv = m.algebra()->vertex_count();
  std::vector<ModMap> out;
  for (std::size_t c = 0; c < k.cols(); ++c) {
    ModMap f{m, n, {}};
    for (int v = 0; v < nv; ++v) {
      Mat x(m.field(), n.dim_at(v), m.dim_at(v));
      for (int r = 0; r < n.dim_at(v); ++r)
        for (int s = 0; s < m.dim_at(v); ++s) x.set(r, s, k.at(offset[v] + std::size_t(r) * m.dim_at(v) + s, c));
      f.at.push_back(std::move(x));
    }
    out.push_back(std::move(f));
  }
  return out;
}

int hom_dim(const Rep& m, const Rep& n) {
  require_compatible(m, n);
  std::vector<std::size_t> offset;
  Mat sys = hom_equations(m, n, offset);
  return static_cast<int>(sys.cols() - rank(sys));
}

bool has_simple_summand(const Rep& m, int w) {
  if (m.dim_at(w) == 0) return false;
  std::vector<const Mat*> into, out;
  for (int a = 0; a < m.algebra()->arrow_count(); ++a) {
    if (m.acts_to(a) == w) into.push_back(&m.arrow(a));
    if (m.acts_from(a) == w) out.push_back(&m.arrow(a));
  }
  Mat rad = Mat::hstack(m.field(), m.dim_at(w), into);
  Mat soc = kernel_basis(Mat::vstack(m.field(), m.dim_at(w), out));
  if (soc.cols() == 0) return false;
  return rank(Mat::hstack(m.field(), m.dim_at(w), {&rad, &soc})) > rank(rad);
}

std::string module_literal(const Rep& m) {
  std::ostringstream os;
  os << "MODULE " << side_name(m.side());
  for (int d : m.dims()) os << ' ' << d;
  for (int a = 0; a < m.algebra()->arrow_count(); ++a) {
    const Mat& x = m.arrow(a);
    if (x.is_zero()) continue;
    os << " ; ARROWMAT " << m.algebra()->quiver().arrows[a].name << " = " << x.str();
  }
  return os.str();
}

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::vector<std::vector<std::string>> parse_matrix_text(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') throw PresentationError("matrix must be written [[..],[..]]");
  s = s.substr(1, s.size() - 2);
  std::vector<std::vector<std::string>> rows;
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] == ',') {
      ++i;
      continue;
    }
    if (s[i] != '[') throw PresentationError("expected '[' in matrix row");
    std::size_t close = s.find(']', i);
    if (close == std::string::npos) throw PresentationError("unterminated matrix row");
    std::vector<std::string> row;
    std::string body = s.substr(i + 1, close - i - 1);
    std::size_t start = 0;
    while (!body.empty() && start <= body.size()) {
      std::size_t comma = body.find(',', start);
      row.push_back(body.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    rows.push_back(std::move(row));
    i = close + 1;
  }
  return rows;
}

}  // namespace

Rep parse_module_literal(const AlgebraPtr& a, const std::string& text) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t semi = text.find(';', start);
    parts.push_back(trim(text.substr(start, semi == std::string::npos ? std::string::npos : semi - start)));
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  std::istringstream head(parts[0]);
  std::string kw, side_text;
  head >> kw >> side_text;
  if (kw != "MODULE") throw PresentationError("module literal must start with MODULE");
  Side side;
  if (side_text == "left")
    side = Side::Left;
  else if (side_text == "right")
    side = Side::Right;
  else
    throw PresentationError("module side must be 'left' or 'right'");
  std::vector<int> dims;
  int d;
  while (head >> d) dims.push_back(d);
  if (!head.eof()) throw PresentationError("malformed dimension vector");
  if (static_cast<int>(dims.size()) != a->vertex_count())
    throw PresentationError("dimension vector length does not match the vertex count");
  std::vector<Mat> arrows;
  for (int i = 0; i < a->arrow_count(); ++i)
    arrows.emplace_back(a->field(), expected_rows(*a, side, dims, i), expected_cols(*a, side, dims, i));
  for (std::size_t k = 1; k < parts.size(); ++k) {
    if (parts[k].empty()) continue;
    std::istringstream is(parts[k]);
    std::string amk, name, eq;
    is >> amk >> name >> eq;
    if (amk != "ARROWMAT" || eq != "=") throw PresentationError("expected 'ARROWMAT name = [[..]]'");
    std::string rest;
    std::getline(is, rest);
    const auto& qa = a->quiver().arrows;
    auto it = std::find_if(qa.begin(), qa.end(), [&](const Arrow& x) { return x.name == name; });
    if (it == qa.end()) throw PresentationError("unknown arrow '" + name + "'");
    int idx = static_cast<int>(it - qa.begin());
    auto rows = parse_matrix_text(rest);
    Mat& x = arrows[idx];
    if (rows.size() != x.rows()) throw PresentationError("matrix for '" + name + "' has the wrong number of rows");
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != x.cols()) throw PresentationError("matrix for '" + name + "' has the wrong number of columns");
      for (std::size_t c = 0; c < rows[r].size(); ++c) {
        try {
          x.set(r, c, Scalar::parse(a->field(), rows[r][c]));
        } catch (const ContractViolation& e) {
          throw PresentationError(e.what());
        }
      }
    }
  }
  try {
    return Rep(a, side, dims, arrows);
  } catch (const ContractViolation& e) {
    throw PresentationError(e.what());
  }
}

}  // namespace radhom
