#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "radhom/field.hpp"
#include "radhom/matrix.hpp"

namespace radhom {

/// A quiver/relations/nilbound triple that does not define an admissible
/// bound quiver algebra, or a malformed algebra file.
class PresentationError : public std::runtime_error {
 public:
  explicit PresentationError(const std::string& what, int line = 0, int column = 0);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

struct Arrow {
  std::string name;
  int source = 0;
  int target = 0;
};

struct Quiver {
  int vertices = 0;
  std::vector<Arrow> arrows;
};

/// Arrow indices in the order they are applied: {a, b} is the path "b*a".
using Path = std::vector<int>;

struct RelationTerm {
  Scalar coeff;
  Path path;
};

/// A k-linear combination of parallel paths of length >= 2.
struct Relation {
  std::vector<RelationTerm> terms;
};

struct BasisPath {
  Path arrows;
  int source = 0;
  int target = 0;
  int length() const { return static_cast<int>(arrows.size()); }
};

/// Coefficients over the normal-form basis, sorted by basis index.
using SparseVec = std::vector<std::pair<int, Scalar>>;

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// A split basic algebra kQ / (<relations> + R^N) with its normal-form basis
/// and structure constants. Immutable once built.
class Algebra : public std::enable_shared_from_this<Algebra> {
 public:
  /// Use build_algebra.
  struct Token {};
  Algebra(Token, Quiver q, std::vector<Relation> rels, int nilbound, Field f);

  const Quiver& quiver() const { return quiver_; }
  const std::vector<Relation>& relations() const { return relations_; }
  int nilbound() const { return nilbound_; }
  const Field& field() const { return field_; }
  int vertex_count() const { return quiver_.vertices; }
  int arrow_count() const { return static_cast<int>(quiver_.arrows.size()); }

  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<BasisPath>& basis() const { return basis_; }
  const BasisPath& basis_path(int i) const { return basis_[i]; }
  int vertex_element(int v) const { return vertex_element_[v]; }
  int arrow_element(int a) const { return arrow_element_[a]; }
  std::optional<int> find_basis(const Path& p) const;

  /// Basis index of the path with its last-applied arrow removed (-1 for
  /// vertices) and that last arrow.
  int tail(int i) const { return tail_[i]; }
  int last_arrow(int i) const { return last_arrow_[i]; }

  /// b_i * b_j, with b_j applied first. Zero unless target(b_j) = source(b_i).
  const SparseVec& product(int i, int j) const { return products_[std::size_t(i) * dim() + j]; }
  /// Normal form of an arbitrary path (zero when its length reaches N).
  SparseVec normal_form(const Path& p) const;

  /// Basis indices of the paths from `from` to `to`, ascending.
  const std::vector<int>& paths(int from, int to) const { return paths_[from][to]; }
  /// Position of basis element i inside paths(source, target).
  int position_in_paths(int i) const { return position_[i]; }
  /// Number of basis paths starting (resp. ending) at v: dim A e_v (resp. e_v A).
  int paths_from(int v) const;
  int paths_to(int v) const;

  /// Left multiplication by arrow a on e_? A e_from: a matrix from
  /// paths(from, source(a)) to paths(from, target(a)).
  const Mat& left_mult(int arrow, int from) const { return left_mult_[arrow][from]; }

  bool is_commutative() const;
  /// Connectedness of the underlying undirected graph.
  bool is_connected() const;
  bool is_semisimple() const { return dim() == vertex_count(); }

  /// Structure constants are associative on all basis triples.
  bool check_associativity() const;

  /// The opposite algebra; built once and cached. opposite() of the result
  /// returns this algebra again.
  AlgebraPtr opposite() const;

 private:
  friend AlgebraPtr build_algebra(Quiver, std::vector<Relation>, int, Field);
  void construct();

  Quiver quiver_;
  std::vector<Relation> relations_;
  int nilbound_;
  Field field_;

  std::vector<BasisPath> basis_;
  std::map<Path, int> index_;
  std::map<Path, SparseVec> reductions_;
  std::vector<int> vertex_element_;
  std::vector<int> arrow_element_;
  std::vector<int> tail_;
  std::vector<int> last_arrow_;
  std::vector<SparseVec> products_;
  std::vector<std::vector<std::vector<int>>> paths_;
  std::vector<int> position_;
  std::vector<std::vector<Mat>> left_mult_;

  mutable std::mutex op_mutex_;
  mutable AlgebraPtr op_strong_;
  mutable std::weak_ptr<const Algebra> op_weak_;
};

/// Validates the presentation and computes basis, structure constants and
/// derived tables. Throws PresentationError for inadmissible input.
AlgebraPtr build_algebra(Quiver q, std::vector<Relation> rels, int nilbound, Field f);

/// Quiver with arrows reversed, relations with paths reversed.
AlgebraPtr opposite(const AlgebraPtr& a);

/// Pointer identity, or identical presentations.
bool same_algebra(const Algebra& a, const Algebra& b);

/// Parses "b*a" (applied right to left) against the quiver's arrow names.
Path parse_path(const Quiver& q, const std::string& text);
std::string path_text(const Quiver& q, const Path& p);

}  // namespace radhom
