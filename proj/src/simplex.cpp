#include "topo/simplex.hpp"

#include <algorithm>
#include <cassert>

#include "topo/error.hpp"

namespace topo {

Simplex::Simplex(std::vector<int> vertices) : verts_(std::move(vertices)) {
  assert(std::adjacent_find(verts_.begin(), verts_.end(), std::greater_equal<int>()) == verts_.end());
}

Simplex Simplex::from_unsorted(std::vector<int> vertices) {
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
    throw DomainError("degenerate simplex");
  if (!vertices.empty() && vertices.front() < 0) throw DomainError("negative vertex id");
  return Simplex(std::move(vertices));
}

bool Simplex::has_vertex(int v) const {
  return std::binary_search(verts_.begin(), verts_.end(), v);
}

bool Simplex::contains(const Simplex& other) const {
  return std::includes(verts_.begin(), verts_.end(), other.verts_.begin(), other.verts_.end());
}

Simplex Simplex::intersect(const Simplex& other) const {
  std::vector<int> out;
  std::set_intersection(verts_.begin(), verts_.end(), other.verts_.begin(), other.verts_.end(),
                        std::back_inserter(out));
  return Simplex(std::move(out));
}

Simplex Simplex::without_vertex_at(int i) const {
  std::vector<int> out = verts_;
  out.erase(out.begin() + i);
  return Simplex(std::move(out));
}

Simplex Simplex::with_vertex(int v) const {
  std::vector<int> out = verts_;
  auto pos = std::lower_bound(out.begin(), out.end(), v);
  assert(pos == out.end() || *pos != v);
  out.insert(pos, v);
  return Simplex(std::move(out));
}

Simplex Simplex::set_minus(const Simplex& other) const {
  std::vector<int> out;
  std::set_difference(verts_.begin(), verts_.end(), other.verts_.begin(), other.verts_.end(),
                      std::back_inserter(out));
  return Simplex(std::move(out));
}

std::vector<Simplex> Simplex::subfaces() const {
  std::vector<Simplex> out;
  const auto n = verts_.size();
  out.reserve((1u << n) - 1);
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> sub;
    for (unsigned i = 0; i < n; ++i)
      if (mask & (1u << i)) sub.push_back(verts_[i]);
    out.emplace_back(std::move(sub));
  }
  return out;
}

std::vector<Simplex> Simplex::boundary_faces() const {
  std::vector<Simplex> out;
  out.reserve(verts_.size());
  for (int i = 0; i < static_cast<int>(verts_.size()); ++i) out.push_back(without_vertex_at(i));
  return out;
}

std::string Simplex::key() const {
  std::string s;
  for (std::size_t i = 0; i < verts_.size(); ++i) {
    if (i) s += '-';
    s += std::to_string(verts_[i]);
  }
  return s;
}

}  // namespace topo
