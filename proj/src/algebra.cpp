#include "radhom/algebra.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace radhom {

PresentationError::PresentationError(const std::string& what, int line, int column)
    : std::runtime_error(line > 0 ? what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"
                                  : what),
      line_(line),
      column_(column) {}

namespace {

using detail::FpArith;
using detail::QArith;

// Upper bound on the number of paths of length < N; beyond this the dense
// ideal closure is not attempted.
constexpr std::size_t kMaxPathSpace = 6000;

struct PathRec {
  Path arrows;
  int source;
  int target;
};

bool ascending(const PathRec& a, const PathRec& b) {
  if (a.arrows.size() != b.arrows.size()) return a.arrows.size() < b.arrows.size();
  if (a.arrows.empty()) return a.source < b.source;
  return a.arrows < b.arrows;
}

template <class Ar>
typename Ar::T to_raw(const Ar&, const Scalar& s) {
  if constexpr (std::is_same_v<Ar, FpArith>)
    return s.residue();
  else
    return s.rational();
}

template <class Ar>
Scalar from_raw(const Ar&, const Field& f, const typename Ar::T& v) {
  if constexpr (std::is_same_v<Ar, FpArith>)
    return Scalar::from_residue(f, v);
  else
    return Scalar(f, v);
}

// Incremental echelon basis of the two-sided ideal generated by the relations
// inside span{paths of length < N}; columns are paths sorted largest first so
// that pivots are leading terms.
template <class Ar>
struct IdealClosure {
  using T = typename Ar::T;
  Ar ar;
  std::size_t ncols;
  std::vector<std::vector<T>> rows;
  std::vector<int> row_of_pivot;  // column -> row, -1 if none

  IdealClosure(Ar a, std::size_t n) : ar(a), ncols(n), row_of_pivot(n, -1) {}

  // Reduces v against the basis; returns the index of the new row or -1.
  int insert(std::vector<T> v) {
    std::size_t c = 0;
    while (true) {
      while (c < ncols && ar.is_zero(v[c])) ++c;
      if (c == ncols) return -1;
      int r = row_of_pivot[c];
      if (r < 0) break;
      T f = v[c];
      const auto& row = rows[r];
      for (std::size_t j = c; j < ncols; ++j)
        if (!ar.is_zero(row[j])) v[j] = ar.sub(v[j], ar.mul(f, row[j]));
    }
    T inv = ar.inv(v[c]);
    for (std::size_t j = c; j < ncols; ++j) v[j] = ar.mul(v[j], inv);
    rows.push_back(std::move(v));
    row_of_pivot[c] = static_cast<int>(rows.size()) - 1;
    return row_of_pivot[c];
  }

  void back_substitute() {
    for (std::size_t c = ncols; c-- > 0;) {
      int r = row_of_pivot[c];
      if (r < 0) continue;
      for (std::size_t c2 = 0; c2 < c; ++c2) {
        int r2 = row_of_pivot[c2];
        if (r2 < 0 || ar.is_zero(rows[r2][c])) continue;
        T f = rows[r2][c];
        for (std::size_t j = c; j < ncols; ++j)
          if (!ar.is_zero(rows[r][j])) rows[r2][j] = ar.sub(rows[r2][j], ar.mul(f, rows[r][j]));
      }
    }
  }
};

void add_into(SparseVec& acc, const SparseVec& v, const Scalar& c) {
  for (const auto& [idx, s] : v) {
    auto it = std::lower_bound(acc.begin(), acc.end(), idx, [](const auto& e, int k) { return e.first < k; });
    if (it != acc.end() && it->first == idx) {
      it->second = it->second + c * s;
      if (it->second.is_zero()) acc.erase(it);
    } else {
      Scalar t = c * s;
      if (!t.is_zero()) acc.insert(it, {idx, t});
    }
  }
}

}  // namespace

Algebra::Algebra(Token, Quiver q, std::vector<Relation> rels, int nilbound, Field f)
    : quiver_(std::move(q)), relations_(std::move(rels)), nilbound_(nilbound), field_(f) {}

void Algebra::construct() {
  const int nv = quiver_.vertices;
  const int na = arrow_count();
  if (nv < 1) throw PresentationError("quiver needs at least one vertex");
  if (nilbound_ < 2) throw PresentationError("nilpotency bound must be at least 2, got " + std::to_string(nilbound_));
  std::set<std::string> names;
  for (const auto& a : quiver_.arrows) {
    if (a.source < 0 || a.source >= nv || a.target < 0 || a.target >= nv)
      throw PresentationError("arrow '" + a.name + "' has an endpoint outside [0, " + std::to_string(nv) + ")");
    if (a.name.empty() || !names.insert(a.name).second)
      throw PresentationError("arrow names must be nonempty and distinct ('" + a.name + "')");
  }

  // Normalize relations: merge repeated paths, check parallelism and lengths.
  for (auto& rel : relations_) {
    std::map<Path, Scalar> merged;
    int src = -1, tgt = -1;
    for (const auto& term : rel.terms) {
      const Path& p = term.path;
      if (term.coeff.field() != field_) throw PresentationError("relation coefficient lives in another field");
      if (term.coeff.is_zero()) throw PresentationError("relation coefficients must be nonzero");
      if (p.size() < 2 || static_cast<int>(p.size()) >= nilbound_)
        throw PresentationError("relation path '" + path_text(quiver_, p) + "' must have length in [2, " +
                                std::to_string(nilbound_) + ")");
      for (int a : p)
        if (a < 0 || a >= na) throw PresentationError("relation uses an unknown arrow");
      for (std::size_t k = 1; k < p.size(); ++k)
        if (quiver_.arrows[p[k - 1]].target != quiver_.arrows[p[k]].source)
          throw PresentationError("'" + path_text(quiver_, p) + "' is not a path");
      int s = quiver_.arrows[p.front()].source, t = quiver_.arrows[p.back()].target;
      if (src < 0) {
        src = s;
        tgt = t;
      } else if (s != src || t != tgt) {
        throw PresentationError("relation mixes non-parallel paths");
      }
      auto [it, fresh] = merged.emplace(p, term.coeff);
      if (!fresh) it->second = it->second + term.coeff;
    }
    rel.terms.clear();
    for (auto& [p, c] : merged)
      if (!c.is_zero()) rel.terms.push_back({c, p});
    if (rel.terms.empty()) throw PresentationError("relation is empty or cancels to zero");
  }

  // All paths of length < N.
  std::vector<PathRec> all;
  for (int v = 0; v < nv; ++v) all.push_back({{}, v, v});
  std::size_t begin = 0;
  for (int len = 1; len < nilbound_; ++len) {
    std::size_t end = all.size();
    for (std::size_t i = begin; i < end; ++i)
      for (int a = 0; a < na; ++a) {
        if (quiver_.arrows[a].source != all[i].target) continue;
        PathRec ext = all[i];
        if (ext.arrows.empty()) ext.source = quiver_.arrows[a].source;
        ext.arrows.push_back(a);
        ext.target = quiver_.arrows[a].target;
        all.push_back(std::move(ext));
        if (all.size() > kMaxPathSpace)
          throw PresentationError("path space exceeds " + std::to_string(kMaxPathSpace) + " paths; lower the nilbound");
      }
    begin = end;
  }
  std::sort(all.begin(), all.end(), ascending);
  std::reverse(all.begin(), all.end());  // column c: largest path first
  const std::size_t ncols = all.size();
  std::map<Path, std::size_t> col_of;
  for (std::size_t c = 0; c < ncols; ++c)
    if (!all[c].arrows.empty()) col_of[all[c].arrows] = c;

  std::vector<char> is_pivot(ncols, 0);
  // Reduced rows keyed by pivot column, as (column, scalar) lists.
  std::map<std::size_t, std::vector<std::pair<std::size_t, Scalar>>> pivot_rows;

  auto run = [&](auto ar) {
    using Ar = decltype(ar);
    using T = typename Ar::T;
    IdealClosure<Ar> closure(ar, ncols);
    std::deque<std::vector<T>> queue;
    for (const auto& rel : relations_) {
      std::vector<T> v(ncols, ar.zero());
      for (const auto& term : rel.terms) v[col_of.at(term.path)] = to_raw(ar, term.coeff);
      queue.push_back(std::move(v));
    }
    while (!queue.empty()) {
      int r = closure.insert(std::move(queue.front()));
      queue.pop_front();
      if (r < 0) continue;
      const auto row = closure.rows[r];
      for (int a = 0; a < na; ++a) {
        const Arrow& arr = quiver_.arrows[a];
        std::vector<T> left(ncols, ar.zero()), right(ncols, ar.zero());
        bool any_left = false, any_right = false;
        for (std::size_t c = 0; c < ncols; ++c) {
          if (ar.is_zero(row[c])) continue;
          const PathRec& p = all[c];
          if (static_cast<int>(p.arrows.size()) + 1 >= nilbound_) continue;
          if (p.target == arr.source) {
            Path q = p.arrows;
            q.push_back(a);
            left[col_of.at(q)] = row[c];
            any_left = true;
          }
          if (p.source == arr.target) {
            Path q{a};
            q.insert(q.end(), p.arrows.begin(), p.arrows.end());
            right[col_of.at(q)] = row[c];
            any_right = true;
          }
        }
        if (any_left) queue.push_back(std::move(left));
        if (any_right) queue.push_back(std::move(right));
      }
    }
    closure.back_substitute();
    for (std::size_t c = 0; c < ncols; ++c) {
      int r = closure.row_of_pivot[c];
      if (r < 0) continue;
      is_pivot[c] = 1;
      auto& out = pivot_rows[c];
      for (std::size_t j = c + 1; j < ncols; ++j)
        if (!ar.is_zero(closure.rows[r][j])) out.emplace_back(j, from_raw(ar, field_, closure.rows[r][j]));
    }
  };
  if (field_.is_prime())
    run(FpArith{field_.characteristic()});
  else
    run(QArith{});

  // Basis: non-pivot paths in ascending order.
  std::vector<int> basis_of_col(ncols, -1);
  for (std::size_t c = ncols; c-- > 0;) {
    if (is_pivot[c]) continue;
    basis_of_col[c] = static_cast<int>(basis_.size());
    basis_.push_back({all[c].arrows, all[c].source, all[c].target});
  }
  const int n = dim();
  vertex_element_.assign(nv, -1);
  arrow_element_.assign(na, -1);
  for (int i = 0; i < n; ++i) {
    const auto& b = basis_[i];
    if (b.arrows.empty())
      vertex_element_[b.source] = i;
    else
      index_[b.arrows] = i;
    if (b.arrows.size() == 1) arrow_element_[b.arrows[0]] = i;
  }
  for (const auto& [c, entries] : pivot_rows) {
    SparseVec nf;
    for (const auto& [j, s] : entries) nf.emplace_back(basis_of_col[j], -s);
    std::sort(nf.begin(), nf.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    reductions_[all[c].arrows] = std::move(nf);
  }
  for (int v = 0; v < nv; ++v)
    if (vertex_element_[v] < 0) throw PresentationError("internal: vertex idempotent reduced away");
  for (int a = 0; a < na; ++a)
    if (arrow_element_[a] < 0) throw PresentationError("relations are not contained in the square of the arrow ideal");

  tail_.assign(n, -1);
  last_arrow_.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    const auto& b = basis_[i];
    if (b.arrows.empty()) continue;
    last_arrow_[i] = b.arrows.back();
    if (b.arrows.size() == 1) {
      tail_[i] = vertex_element_[b.source];
    } else {
      Path t(b.arrows.begin(), b.arrows.end() - 1);
      auto it = index_.find(t);
      if (it == index_.end()) throw PresentationError("internal: normal-form basis is not closed under subpaths");
      tail_[i] = it->second;
    }
  }

  paths_.assign(nv, std::vector<std::vector<int>>(nv));
  position_.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    auto& list = paths_[basis_[i].source][basis_[i].target];
    position_[i] = static_cast<int>(list.size());
    list.push_back(i);
  }

  products_.assign(std::size_t(n) * n, {});
  const Scalar one(field_, 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto& bi = basis_[i];
      const auto& bj = basis_[j];
      if (bj.target != bi.source) continue;
      auto& out = products_[std::size_t(i) * n + j];
      if (bi.arrows.empty()) {
        out = {{j, one}};
      } else if (bj.arrows.empty()) {
        out = {{i, one}};
      } else {
        Path q = bj.arrows;
        q.insert(q.end(), bi.arrows.begin(), bi.arrows.end());
        out = normal_form(q);
      }
    }

  left_mult_.assign(na, std::vector<Mat>(nv));
  for (int a = 0; a < na; ++a) {
    const Arrow& arr = quiver_.arrows[a];
    for (int f = 0; f < nv; ++f) {
      const auto& cols = paths_[f][arr.source];
      const auto& rows = paths_[f][arr.target];
      Mat m(field_, rows.size(), cols.size());
      for (std::size_t c = 0; c < cols.size(); ++c)
        for (const auto& [k, s] : product(arrow_element_[a], cols[c])) m.set(position_[k], c, s);
      left_mult_[a][f] = std::move(m);
    }
  }

  if (!check_associativity()) throw PresentationError("internal: structure constants are not associative");
}

std::optional<int> Algebra::find_basis(const Path& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SparseVec Algebra::normal_form(const Path& p) const {
  if (p.empty()) throw ContractViolation("normal_form: use vertex_element for trivial paths");
  for (std::size_t k = 1; k < p.size(); ++k)
    if (quiver_.arrows[p[k - 1]].target != quiver_.arrows[p[k]].source)
      throw ContractViolation("normal_form: not a path");
  if (static_cast<int>(p.size()) >= nilbound_) return {};
  if (auto it = index_.find(p); it != index_.end()) return {{it->second, Scalar(field_, 1)}};
  return reductions_.at(p);
}

int Algebra::paths_from(int v) const {
  int s = 0;
  for (int t = 0; t < vertex_count(); ++t) s += static_cast<int>(paths_[v][t].size());
  return s;
}

int Algebra::paths_to(int v) const {
  int s = 0;
  for (int f = 0; f < vertex_count(); ++f) s += static_cast<int>(paths_[f][v].size());
  return s;
}

bool Algebra::check_associativity() const {
  const int n = dim();
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      if (basis_[j].target != basis_[i].source) continue;
      const auto& ij = product(i, j);
      for (int k = 0; k < n; ++k) {
        if (basis_[k].target != basis_[j].source) continue;
        SparseVec lhs, rhs;
        for (const auto& [m, c] : ij) add_into(lhs, product(m, k), c);
        for (const auto& [m, c] : product(j, k)) add_into(rhs, product(i, m), c);
        if (lhs.size() != rhs.size()) return false;
        for (std::size_t t = 0; t < lhs.size(); ++t)
          if (lhs[t].first != rhs[t].first || lhs[t].second != rhs[t].second) return false;
      }
    }
  return true;
}

bool Algebra::is_commutative() const {
  const int n = dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const auto& a = product(i, j);
      const auto& b = product(j, i);
      if (a.size() != b.size()) return false;
      for (std::size_t t = 0; t < a.size(); ++t)
        if (a[t].first != b[t].first || a[t].second != b[t].second) return false;
    }
  return true;
}

bool Algebra::is_connected() const {
  std::vector<int> parent(vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& a : quiver_.arrows) parent[find(a.source)] = find(a.target);
  int root = find(0);
  for (int v = 1; v < vertex_count(); ++v)
    if (find(v) != root) return false;
  return true;
}

AlgebraPtr Algebra::opposite() const {
  std::lock_guard lock(op_mutex_);
  if (op_strong_) return op_strong_;
  if (auto p = op_weak_.lock()) return p;
  Quiver q{quiver_.vertices, {}};
  for (const auto& a : quiver_.arrows) q.arrows.push_back({a.name, a.target, a.source});
  std::vector<Relation> rels;
  for (const auto& r : relations_) {
    Relation rr;
    for (const auto& t : r.terms) rr.terms.push_back({t.coeff, Path(t.path.rbegin(), t.path.rend())});
    rels.push_back(std::move(rr));
  }
  auto built = build_algebra(std::move(q), std::move(rels), nilbound_, field_);
  built->op_weak_ = shared_from_this();
  op_strong_ = built;
  return built;
}

AlgebraPtr build_algebra(Quiver q, std::vector<Relation> rels, int nilbound, Field f) {
  auto a = std::make_shared<Algebra>(Algebra::Token{}, std::move(q), std::move(rels), nilbound, f);
  a->construct();
  return a;
}

AlgebraPtr opposite(const AlgebraPtr& a) { return a->opposite(); }

bool same_algebra(const Algebra& a, const Algebra& b) {
  if (&a == &b) return true;
  if (a.field() != b.field() || a.nilbound() != b.nilbound() || a.vertex_count() != b.vertex_count() ||
      a.arrow_count() != b.arrow_count() || a.relations().size() != b.relations().size())
    return false;
  for (int i = 0; i < a.arrow_count(); ++i) {
    const auto& x = a.quiver().arrows[i];
    const auto& y = b.quiver().arrows[i];
    if (x.name != y.name || x.source != y.source || x.target != y.target) return false;
  }
  for (std::size_t r = 0; r < a.relations().size(); ++r) {
    const auto& x = a.relations()[r].terms;
    const auto& y = b.relations()[r].terms;
    if (x.size() != y.size()) return false;
    for (std::size_t t = 0; t < x.size(); ++t)
      if (x[t].path != y[t].path || x[t].coeff != y[t].coeff) return false;
  }
  return true;
}

Path parse_path(const Quiver& q, const std::string& text) {
  Path out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t star = text.find('*', start);
    std::string name = text.substr(start, star == std::string::npos ? std::string::npos : star - start);
    auto it = std::find_if(q.arrows.begin(), q.arrows.end(), [&](const Arrow& a) { return a.name == name; });
    if (it == q.arrows.end()) throw PresentationError("unknown arrow '" + name + "'");
    out.push_back(static_cast<int>(it - q.arrows.begin()));
    if (star == std::string::npos) break;
    start = star + 1;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::string path_text(const Quiver& q, const Path& p) {
  std::string s;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    if (!s.empty()) s += '*';
    s += (*it >= 0 && *it < static_cast<int>(q.arrows.size())) ? q.arrows[*it].name : "?";
  }
  return s;
}

}  // namespace radhom
