#pragma once

#include <map>
#include <utility>
#include <vector>

#include "topo/simplex.hpp"

namespace topo {

/// Finite abstract simplicial complex. Immutable after construction; the face
/// lattice is stored per dimension in lexicographic order, so every derived
/// matrix and report is reproducible run to run.
class SimplicialComplex {
 public:
  /// The empty complex (dimension -1, no faces).
  SimplicialComplex() = default;

  /// Builds the complex generated by the given vertex-id lists. Lists are
  /// sorted; lists redundant under inclusion are absorbed. Throws
  /// DomainError("empty complex") on an empty input and
  /// DomainError("degenerate simplex") on a repeated vertex.
  static SimplicialComplex from_facets(const std::vector<std::vector<int>>& facet_lists);

  /// Internal generator from already-validated simplices; an empty list gives
  /// the empty complex.
  static SimplicialComplex generated_by(std::vector<Simplex> faces);

  int dimension() const { return dimension_; }
  bool empty() const { return dimension_ < 0; }

  const std::vector<Simplex>& facets() const { return facets_; }
  /// k-faces in lexicographic order; an empty list outside 0..dimension().
  const std::vector<Simplex>& faces(int k) const;
  std::vector<int> f_vector() const;
  long face_count() const;

  const std::vector<int>& vertex_ids() const { return vertex_ids_; }
  bool has_vertex(int v) const;

  bool has_face(const Simplex& s) const;
  /// Position of s within faces(s.dimension()), or -1.
  long face_index(const Simplex& s) const;

  bool operator==(const SimplicialComplex& other) const { return by_dim_ == other.by_dim_; }

 private:
  std::vector<Simplex> facets_;
  std::vector<std::vector<Simplex>> by_dim_;
  std::vector<std::map<Simplex, long>> index_;
  std::vector<int> vertex_ids_;
  int dimension_ = -1;
};

/// Subset of a complex's faces closed under taking faces. Holds a pointer to
/// the parent, which must outlive the subcomplex.
class Subcomplex {
 public:
  Subcomplex() = default;

  /// Closure of the given generators inside parent; throws DomainError
  /// ("not a face") if a generator is not a face of parent.
  static Subcomplex closure(const SimplicialComplex& parent, const std::vector<Simplex>& generators);

  /// All parent faces of dimension <= k.
  static Subcomplex skeleton(const SimplicialComplex& parent, int k);

  const SimplicialComplex* parent() const { return parent_; }
  int dimension() const;
  bool empty() const { return dimension() < 0; }
  const std::vector<Simplex>& faces(int k) const;
  std::vector<int> f_vector() const;
  bool contains(const Simplex& s) const;
  /// Largest dimension of a face of sigma inside this subcomplex; -1 when the
  /// intersection is empty (callers treat -1 as "dimension -infinity").
  int max_face_dim_within(const Simplex& sigma) const;

  bool is_subset_of(const Subcomplex& other) const;

 private:
  const SimplicialComplex* parent_ = nullptr;
  std::vector<std::vector<Simplex>> by_dim_;
};

/// Combinatorial link Lk(sigma) = { tau : tau disjoint from sigma, tau union
/// sigma a face }, returned as a standalone complex (possibly empty).
SimplicialComplex link(const SimplicialComplex& complex, const Simplex& sigma);

/// Closed star: all faces of all facets containing sigma.
Subcomplex star(const SimplicialComplex& complex, const Simplex& sigma);

/// Vertex partition under edge adjacency; components sorted by least vertex.
std::vector<std::vector<int>> connected_components(const SimplicialComplex& complex);

/// Barycentric subdivision. Vertices of the output are the faces of the
/// input, numbered by subdivision_vertex_ids(); facets are the maximal chains
/// of the face poset.
SimplicialComplex barycentric_subdivision(const SimplicialComplex& complex);

/// face -> vertex id of that face's barycenter in the subdivision
/// (deterministic: faces ordered by dimension, then lexicographically).
std::map<Simplex, int> subdivision_vertex_ids(const SimplicialComplex& complex);

struct PseudomanifoldReport {
  bool pseudomanifold = false;
  bool pure = false;
  std::vector<Simplex> impure_facets;                 // facets of dimension < l
  std::vector<std::pair<Simplex, int>> bad_ridges;    // (l-1)-faces with cofacet count != 2
  bool strongly_connected = false;                    // informational only
  int facet_class_count = 0;                          // ridge-adjacency classes of facets
  explicit operator bool() const { return pseudomanifold; }
};

struct NormalityReport {
  bool normal = false;
  std::vector<int> bad_vertices;  // vertices whose link is disconnected
  explicit operator bool() const { return normal; }
};

PseudomanifoldReport is_pseudomanifold(const SimplicialComplex& complex);

/// Precondition: is_pseudomanifold (throws DomainError("pseudomanifold
/// required") otherwise). For dimension >= 2, true iff every vertex link is
/// connected; dimensions 0 and 1 have no codimension-2 points and are
/// reported normal.
NormalityReport is_normal(const SimplicialComplex& complex);

/// Facet classes under "share an (l-1)-face", each a sorted list of facet
/// indices. Their count is the component count of the regular part.
std::vector<std::vector<int>> regular_part_components(const SimplicialComplex& complex);

}  // namespace topo
