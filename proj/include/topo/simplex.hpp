#pragma once

#include <compare>
#include <string>
#include <vector>

namespace topo {

/// Face of an abstract simplicial complex: a strictly increasing sequence of
/// non-negative vertex ids. The default-constructed value is the empty
/// simplex (dimension -1); complexes never store it as a face.
class Simplex {
 public:
  Simplex() = default;

  /// Takes ownership of an already strictly ascending vertex list.
  explicit Simplex(std::vector<int> vertices);

  /// Sorts the list first; throws DomainError("degenerate simplex") on a
  /// repeated vertex and DomainError on negative ids.
  static Simplex from_unsorted(std::vector<int> vertices);

  int dimension() const { return static_cast<int>(verts_.size()) - 1; }
  bool empty() const { return verts_.empty(); }
  const std::vector<int>& vertices() const { return verts_; }

  bool has_vertex(int v) const;
  bool contains(const Simplex& other) const;  // other is a face of this
  Simplex intersect(const Simplex& other) const;

  Simplex without_vertex_at(int i) const;  // drop the i-th vertex
  Simplex with_vertex(int v) const;        // insert a vertex not yet present
  Simplex set_minus(const Simplex& other) const;

  /// All non-empty subsets, the simplex itself included.
  std::vector<Simplex> subfaces() const;

  /// Codimension-1 faces; the i-th entry drops the i-th vertex (the boundary
  /// sign convention pairs entry i with (-1)^i).
  std::vector<Simplex> boundary_faces() const;

  /// "0-1-2" encoding used by the JSON formats.
  std::string key() const;

  auto operator<=>(const Simplex&) const = default;

 private:
  std::vector<int> verts_;
};

}  // namespace topo
