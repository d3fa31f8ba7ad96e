#include "tork/simplicial_complex.hpp"

#include "tork/random.hpp"
#include "tork/sparse_matrix.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace tork {

namespace {

void check_vertex_count(int m) {
  if (m < 0 || m > kMaxVertices) {
    throw std::invalid_argument("vertex count " + std::to_string(m) + " outside 0.." +
                                std::to_string(kMaxVertices));
  }
}

FaceMask ground_set(int m) { return (FaceMask{1} << m) - 1; }

void sort_graded(std::vector<FaceMask>& faces) {
  std::sort(faces.begin(), faces.end(), graded_mask_less);
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
}

}  // namespace

VertexList to_vertices(FaceMask face) {
  VertexList out;
  while (face != 0) {
    out.push_back(std::countr_zero(face) + 1);
    face &= face - 1;
  }
  return out;
}

FaceMask to_mask(const VertexList& vertices, int num_vertices) {
  FaceMask mask = 0;
  for (int v : vertices) {
    if (v < 1 || v > num_vertices) {
      throw std::invalid_argument("vertex " + std::to_string(v) + " outside 1.." +
                                  std::to_string(num_vertices));
    }
    mask |= FaceMask{1} << (v - 1);
  }
  return mask;
}

bool graded_mask_less(FaceMask a, FaceMask b) {
  const int pa = std::popcount(a);
  const int pb = std::popcount(b);
  return pa != pb ? pa < pb : a < b;
}

SimplicialComplex::SimplicialComplex(int num_vertices)
    : SimplicialComplex(num_vertices, std::vector<FaceMask>{0}) {
  check_vertex_count(num_vertices);
}

SimplicialComplex::SimplicialComplex(int num_vertices, std::vector<FaceMask> sorted_faces)
    : m_(num_vertices), faces_(std::move(sorted_faces)), lookup_(faces_) {
  std::sort(lookup_.begin(), lookup_.end());
}

SimplicialComplex SimplicialComplex::from_facets(int num_vertices,
                                                 const std::vector<VertexList>& facets) {
  check_vertex_count(num_vertices);
  std::vector<FaceMask> masks;
  masks.reserve(facets.size());
  for (const auto& f : facets) masks.push_back(to_mask(f, num_vertices));
  return from_facet_masks(num_vertices, masks);
}

SimplicialComplex SimplicialComplex::from_facet_masks(int num_vertices,
                                                      const std::vector<FaceMask>& facets) {
  check_vertex_count(num_vertices);
  const FaceMask ground = ground_set(num_vertices);
  std::vector<FaceMask> faces{0};
  for (FaceMask f : facets) {
    if ((f & ~ground) != 0) {
      throw std::invalid_argument("facet uses a vertex outside 1.." + std::to_string(num_vertices));
    }
    // Every submask of f, including f and ∅.
    for (FaceMask s = f;; s = (s - 1) & f) {
      faces.push_back(s);
      if (s == 0) break;
    }
  }
  sort_graded(faces);
  return SimplicialComplex(num_vertices, std::move(faces));
}

SimplicialComplex SimplicialComplex::from_faces(int num_vertices, std::vector<FaceMask> faces) {
  check_vertex_count(num_vertices);
  const FaceMask ground = ground_set(num_vertices);
  sort_graded(faces);
  if (faces.empty() || faces.front() != 0) {
    throw std::invalid_argument("face set must contain the empty face");
  }
  std::vector<FaceMask> lookup(faces);
  std::sort(lookup.begin(), lookup.end());
  for (FaceMask f : faces) {
    if ((f & ~ground) != 0) throw std::invalid_argument("face outside the vertex set");
    for (FaceMask rest = f; rest != 0; rest &= rest - 1) {
      const FaceMask sub = f & ~(rest & -rest);
      if (!std::binary_search(lookup.begin(), lookup.end(), sub)) {
        throw std::invalid_argument("face set is not downward closed");
      }
    }
  }
  return SimplicialComplex(num_vertices, std::move(faces));
}

int SimplicialComplex::dimension() const { return std::popcount(faces_.back()) - 1; }

bool SimplicialComplex::contains(FaceMask face) const {
  return std::binary_search(lookup_.begin(), lookup_.end(), face);
}

std::vector<FaceMask> SimplicialComplex::facets() const {
  std::vector<FaceMask> out;
  const FaceMask ground = ground_set(m_);
  for (FaceMask f : faces_) {
    bool maximal = true;
    for (FaceMask free = ground & ~f; free != 0 && maximal; free &= free - 1) {
      if (contains(f | (free & -free))) maximal = false;
    }
    if (maximal) out.push_back(f);
  }
  return out;
}

std::vector<std::size_t> SimplicialComplex::face_numbers() const {
  std::vector<std::size_t> f(static_cast<std::size_t>(dimension() + 2), 0);
  for (FaceMask face : faces_) ++f[static_cast<std::size_t>(std::popcount(face))];
  return f;
}

std::vector<FaceMask> minimal_non_faces(const SimplicialComplex& k) {
  const FaceMask ground = ground_set(k.num_vertices());
  std::vector<FaceMask> out;
  // A minimal non-face is σ ∪ {v} for some face σ, all of whose facets are faces.
  for (FaceMask face : k.faces()) {
    for (FaceMask free = ground & ~face; free != 0; free &= free - 1) {
      const FaceMask cand = face | (free & -free);
      if (k.contains(cand)) continue;
      bool minimal = true;
      for (FaceMask rest = cand; rest != 0 && minimal; rest &= rest - 1) {
        if (!k.contains(cand & ~(rest & -rest))) minimal = false;
      }
      if (minimal) out.push_back(cand);
    }
  }
  sort_graded(out);
  return out;
}

namespace {

// Packs the bits of x selected by w into the low |w| bits.
FaceMask compress_bits(FaceMask x, FaceMask w) {
  FaceMask out = 0;
  int k = 0;
  for (; w != 0; w &= w - 1, ++k) {
    if ((x & w & -w) != 0) out |= FaceMask{1} << k;
  }
  return out;
}

}  // namespace

SimplicialComplex full_subcomplex(const SimplicialComplex& k, FaceMask w) {
  const int size = std::popcount(w);
  std::vector<FaceMask> faces;
  for (FaceMask f : k.faces()) {
    if ((f & ~w) == 0) faces.push_back(compress_bits(f, w));
  }
  return SimplicialComplex::from_faces(size, std::move(faces));
}

std::vector<std::size_t> reduced_cohomology_dims(const SimplicialComplex& k) {
  const int dim = k.dimension();
  // Faces by size; faces() is graded so each bucket is already sorted.
  std::vector<std::vector<FaceMask>> by_size(static_cast<std::size_t>(dim + 2));
  for (FaceMask f : k.faces()) by_size[static_cast<std::size_t>(std::popcount(f))].push_back(f);

  // coboundary_rank[s] = rank of δ from size-s cochains to size-(s+1) cochains.
  std::vector<std::size_t> coboundary_rank(by_size.size(), 0);
  for (std::size_t s = 0; s + 1 < by_size.size(); ++s) {
    const auto& lower = by_size[s];
    const auto& upper = by_size[s + 1];
    std::unordered_map<FaceMask, std::size_t> index;
    index.reserve(lower.size());
    for (std::size_t c = 0; c < lower.size(); ++c) index.emplace(lower[c], c);
    std::vector<MatrixEntry> entries;
    for (std::size_t r = 0; r < upper.size(); ++r) {
      int position = 0;
      for (FaceMask rest = upper[r]; rest != 0; rest &= rest - 1, ++position) {
        const FaceMask sub = upper[r] & ~(rest & -rest);
        entries.push_back({r, index.at(sub), Rational(position % 2 == 0 ? 1 : -1)});
      }
    }
    coboundary_rank[s] = rank(SparseMatrix(upper.size(), lower.size(), std::move(entries)));
  }

  std::vector<std::size_t> dims(by_size.size(), 0);
  for (std::size_t s = 0; s < by_size.size(); ++s) {
    const std::size_t incoming = s == 0 ? 0 : coboundary_rank[s - 1];
    dims[s] = by_size[s].size() - coboundary_rank[s] - incoming;
  }
  return dims;
}

long long reduced_euler_characteristic(const SimplicialComplex& k) {
  long long chi = 0;
  for (FaceMask f : k.faces()) chi += (std::popcount(f) % 2 == 1) ? 1 : -1;
  return chi;
}

ComplexEnumerator::ComplexEnumerator(int num_vertices, int cap) : m_(num_vertices) {
  check_vertex_count(num_vertices);
  if (num_vertices > cap) {
    throw std::invalid_argument("exhaustive enumeration is capped at m = " + std::to_string(cap) +
                                " (got m = " + std::to_string(num_vertices) +
                                "); use sampled mode for larger m");
  }
  const FaceMask ground = ground_set(num_vertices);
  for (FaceMask s = 1; s <= ground && s != 0; ++s) order_.push_back(s);
  std::sort(order_.begin(), order_.end(), graded_mask_less);
  std::unordered_map<FaceMask, std::size_t> position;
  for (std::size_t p = 0; p < order_.size(); ++p) position.emplace(order_[p], p);
  facets_.resize(order_.size());
  for (std::size_t p = 0; p < order_.size(); ++p) {
    if (std::popcount(order_[p]) < 2) continue;
    for (FaceMask rest = order_[p]; rest != 0; rest &= rest - 1) {
      facets_[p].push_back(position.at(order_[p] & ~(rest & -rest)));
    }
  }
  included_.assign(order_.size(), false);
}

bool ComplexEnumerator::can_include(std::size_t pos) const {
  return std::all_of(facets_[pos].begin(), facets_[pos].end(),
                     [&](std::size_t q) { return included_[q]; });
}

SimplicialComplex ComplexEnumerator::current() const {
  std::vector<FaceMask> faces{0};
  for (std::size_t p = 0; p < order_.size(); ++p) {
    if (included_[p]) faces.push_back(order_[p]);
  }
  return SimplicialComplex::from_faces(m_, std::move(faces));
}

std::optional<SimplicialComplex> ComplexEnumerator::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    return current();
  }
  // Lexicographic successor: the last absent face that may be switched on,
  // with everything after it switched off. Inclusion only depends on earlier
  // faces, so the all-absent suffix is always valid.
  for (std::size_t p = order_.size(); p-- > 0;) {
    if (included_[p] || !can_include(p)) continue;
    included_[p] = true;
    std::fill(included_.begin() + static_cast<std::ptrdiff_t>(p) + 1, included_.end(), false);
    return current();
  }
  done_ = true;
  return std::nullopt;
}

std::vector<SimplicialComplex> enumerate_complexes(int num_vertices, int cap) {
  ComplexEnumerator en(num_vertices, cap);
  std::vector<SimplicialComplex> out;
  while (auto k = en.next()) out.push_back(std::move(*k));
  return out;
}

ComplexSampler::ComplexSampler(int num_vertices, std::uint64_t seed)
    : m_(num_vertices), rng_(seed) {
  check_vertex_count(num_vertices);
}

SimplicialComplex ComplexSampler::next() {
  if (m_ == 0) return SimplicialComplex(0);
  const auto m = static_cast<std::uint64_t>(m_);
  const std::uint64_t num_facets = 1 + uniform_below(rng_, 2 * m);
  std::vector<int> vertices(static_cast<std::size_t>(m_));
  std::iota(vertices.begin(), vertices.end(), 0);
  std::vector<FaceMask> facets;
  for (std::uint64_t f = 0; f < num_facets; ++f) {
    std::uint64_t size = m == 1 ? 1 : 1 + uniform_below(rng_, m - 1);
    if (coin(rng_, 1, 20)) size = m;
    // Partial Fisher-Yates for `size` distinct vertices.
    FaceMask facet = 0;
    for (std::uint64_t k = 0; k < size; ++k) {
      const auto pick = k + uniform_below(rng_, m - k);
      std::swap(vertices[k], vertices[pick]);
      facet |= FaceMask{1} << vertices[k];
    }
    facets.push_back(facet);
  }
  return SimplicialComplex::from_facet_masks(m_, facets);
}

std::vector<SimplicialComplex> sample_complexes(int num_vertices, std::size_t count,
                                                std::uint64_t seed) {
  ComplexSampler sampler(num_vertices, seed);
  std::vector<SimplicialComplex> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back(sampler.next());
  return out;
}

}  // namespace tork
