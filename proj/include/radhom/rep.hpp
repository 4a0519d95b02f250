#pragma once

#include <memory>
#include <string>
#include <vector>

#include "radhom/algebra.hpp"
#include "radhom/matrix.hpp"

namespace radhom {

enum class Side { Left, Right };

inline Side other(Side s) { return s == Side::Left ? Side::Right : Side::Left; }
const char* side_name(Side s);

/// A finite-dimensional module given as a quiver representation.
///
/// Left modules: arrow a: i -> j carries a d_j x d_i matrix (a map M_i -> M_j).
/// Right modules: arrow a: i -> j carries a d_i x d_j matrix (a map M_j -> M_i),
/// which is the same data as a left module over the opposite algebra.
class Rep {
 public:
  Rep() = default;
  /// Checks shapes, relations and the nilpotency bound.
  Rep(AlgebraPtr a, Side side, std::vector<int> dims, std::vector<Mat> arrows);
  /// Skips the relation check; used for modules derived inside the engine.
  static Rep trusted(AlgebraPtr a, Side side, std::vector<int> dims, std::vector<Mat> arrows);

  const AlgebraPtr& algebra() const { return d_->algebra; }
  Side side() const { return d_->side; }
  const std::vector<int>& dims() const { return d_->dims; }
  int dim_at(int v) const { return d_->dims[v]; }
  int total_dim() const;
  bool is_zero() const { return total_dim() == 0; }
  const Mat& arrow(int a) const { return d_->arrows[a]; }
  const std::vector<Mat>& arrows() const { return d_->arrows; }
  const Field& field() const { return d_->algebra->field(); }

  /// Vertex whose space an arrow reads from / writes to under this side.
  int acts_from(int a) const;
  int acts_to(int a) const;

  /// The linear map of the basis path b_i (left: M_source -> M_target).
  Mat path_action(int i) const;
  /// Maps for every basis path, indexed like the algebra basis.
  std::vector<Mat> all_path_actions() const;

  /// Relations vanish and all paths of length N act as zero.
  bool satisfies_relations() const;

  /// Same algebra, side, dims and matrices.
  bool operator==(const Rep& o) const;
  bool operator!=(const Rep& o) const { return !(*this == o); }
  std::uint64_t digest() const;

 private:
  struct Data {
    AlgebraPtr algebra;
    Side side = Side::Left;
    std::vector<int> dims;
    std::vector<Mat> arrows;
  };
  std::shared_ptr<const Data> d_;
};

/// A module homomorphism, one d'_v x d_v matrix per vertex.
struct ModMap {
  Rep source;
  Rep target;
  std::vector<Mat> at;

  bool is_homomorphism() const;
  bool is_zero() const;
  bool is_injective() const;
  bool is_surjective() const;
};

ModMap compose(const ModMap& g, const ModMap& f);
ModMap identity_map(const Rep& m);
ModMap zero_map(const Rep& from, const Rep& to);

/// A submodule with its inclusion (columns of `inclusion[v]` span the subspace).
struct SubRep {
  Rep module;
  std::vector<Mat> inclusion;
};

/// A quotient with its projection.
struct QuotientRep {
  Rep module;
  std::vector<Mat> projection;
};

Rep simple(const AlgebraPtr& a, int vertex, Side side = Side::Left);
Rep projective(const AlgebraPtr& a, int vertex, Side side = Side::Left);
Rep injective(const AlgebraPtr& a, int vertex, Side side = Side::Left);
Rep zero_module(const AlgebraPtr& a, Side side = Side::Left);

/// A as a module over itself (sum of the indecomposable projectives).
Rep regular_module(const AlgebraPtr& a, Side side = Side::Left);
/// A_0 = A/J, the sum of the simples.
Rep top_of_algebra(const AlgebraPtr& a, Side side = Side::Left);
/// D(A), the sum of the indecomposable injectives.
Rep dual_regular_module(const AlgebraPtr& a, Side side = Side::Left);
/// The Jacobson radical J as a one-sided module.
Rep radical_module(const AlgebraPtr& a, Side side = Side::Left);

/// Vector-space dual: flips side, transposes arrow matrices.
Rep duality_D(const Rep& m);
ModMap duality_D(const ModMap& f);

/// Right A-module <-> left A^op-module on identical data.
Rep to_left_op(const Rep& m);
Rep from_left_op(const Rep& m, const AlgebraPtr& original);

/// The subrepresentation spanned at each vertex by the given columns, which
/// must be closed under the arrows. Columns need not be independent.
SubRep subrep(const Rep& m, const std::vector<Mat>& spans);
QuotientRep quotient(const Rep& m, const std::vector<Mat>& spans);

struct RadTopSoc {
  SubRep rad;
  QuotientRep top;
  SubRep soc;
};
RadTopSoc radical_top_socle(const Rep& m);

/// Per-vertex column spans of rad m = sum of arrow images.
std::vector<Mat> radical_spans(const Rep& m);
/// Per-vertex kernels shared by all arrows leaving the vertex.
std::vector<Mat> socle_spans(const Rep& m);
std::vector<int> top_dims(const Rep& m);
std::vector<int> socle_dims(const Rep& m);

/// J^i M.
Rep radical_power(const Rep& m, int i);

Rep direct_sum(const AlgebraPtr& a, Side side, const std::vector<Rep>& ms);
Rep direct_sum(const std::vector<Rep>& ms);

/// Basis of Hom(m, n) from the intertwiner equations.
std::vector<ModMap> hom_space(const Rep& m, const Rep& n);
int hom_dim(const Rep& m, const Rep& n);

/// S_w is a direct summand of m: some socle vector at w lies outside rad.
bool has_simple_summand(const Rep& m, int w);

/// "MODULE left 1 1 ; ARROWMAT a = [[1]]" style literal.
std::string module_literal(const Rep& m);
Rep parse_module_literal(const AlgebraPtr& a, const std::string& text);

}  // namespace radhom
