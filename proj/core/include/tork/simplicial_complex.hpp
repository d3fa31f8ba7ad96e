#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace tork {

// A face is a subset of [m] stored as a bit mask; bit k stands for vertex k + 1.
using FaceMask = std::uint64_t;

// 1-based vertex labels, as used by the JSON interchange format.
using VertexList = std::vector<int>;

inline constexpr int kMaxVertices = 63;

VertexList to_vertices(FaceMask face);
FaceMask to_mask(const VertexList& vertices, int num_vertices);

// Orders faces by size, then by numeric mask.
bool graded_mask_less(FaceMask a, FaceMask b);

// Downward-closed family of subsets of [m] that always contains the empty
// face. Vertices i with {i} not a face ("ghost" vertices) are allowed.
class SimplicialComplex {
 public:
  // {∅} on m vertices.
  explicit SimplicialComplex(int num_vertices = 0);

  // Downward closure of the facets. Throws std::invalid_argument if a vertex
  // lies outside 1..m or m is outside 0..63.
  static SimplicialComplex from_facets(int num_vertices, const std::vector<VertexList>& facets);
  static SimplicialComplex from_facet_masks(int num_vertices, const std::vector<FaceMask>& facets);

  // Takes the face set as given; throws std::invalid_argument unless it is
  // downward closed, contains ∅ and lives in [m].
  static SimplicialComplex from_faces(int num_vertices, std::vector<FaceMask> faces);

  int num_vertices() const { return m_; }

  // Largest face size minus one; -1 for {∅}.
  int dimension() const;

  bool contains(FaceMask face) const;

  // All faces in graded order (size, then mask); faces()[0] is ∅.
  const std::vector<FaceMask>& faces() const { return faces_; }
  std::size_t face_count() const { return faces_.size(); }

  // Inclusion-maximal faces in graded order.
  std::vector<FaceMask> facets() const;

  // f[k] = number of faces with k vertices, k = 0..dimension()+1.
  std::vector<std::size_t> face_numbers() const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.m_ == b.m_ && a.faces_ == b.faces_;
  }

 private:
  SimplicialComplex(int num_vertices, std::vector<FaceMask> sorted_faces);

  int m_ = 0;
  std::vector<FaceMask> faces_;   // graded order
  std::vector<FaceMask> lookup_;  // numeric order
};

// Inclusion-minimal non-faces in graded order; they index the monomial
// generators of the Stanley-Reisner ideal.
std::vector<FaceMask> minimal_non_faces(const SimplicialComplex& k);

// K_W = {σ ∈ K : σ ⊆ W}, re-indexed onto 1..|W| preserving vertex order.
SimplicialComplex full_subcomplex(const SimplicialComplex& k, FaceMask w);

// dims[q + 1] = dim H̃^q(K; Q) for q = -1..dim K, computed from the augmented
// cochain complex. {∅} gives [1]; any complex with a vertex has dims[0] = 0.
std::vector<std::size_t> reduced_cohomology_dims(const SimplicialComplex& k);

// Σ_{σ ∈ K} (-1)^{dim σ}, with dim ∅ = -1.
long long reduced_euler_characteristic(const SimplicialComplex& k);

inline constexpr int kDefaultEnumerationCap = 5;

// Every labeled complex on [m], exactly once. Faces are decided in graded
// order (∅ is always in); the stream is the lexicographic order of the
// resulting inclusion vectors, with "absent" before "present", so the first
// complex is {∅} and the last is the full simplex.
class ComplexEnumerator {
 public:
  // Throws std::invalid_argument if m > cap (use sampling instead).
  explicit ComplexEnumerator(int num_vertices, int cap = kDefaultEnumerationCap);

  std::optional<SimplicialComplex> next();

 private:
  bool can_include(std::size_t pos) const;
  SimplicialComplex current() const;

  int m_;
  std::vector<FaceMask> order_;                   // nonempty subsets, graded order
  std::vector<std::vector<std::size_t>> facets_;  // positions of codimension-one subfaces
  std::vector<bool> included_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<SimplicialComplex> enumerate_complexes(int num_vertices,
                                                   int cap = kDefaultEnumerationCap);

// Reproducible random complexes: a random facet list closed downwards.
class ComplexSampler {
 public:
  ComplexSampler(int num_vertices, std::uint64_t seed);

  SimplicialComplex next();

 private:
  int m_;
  std::mt19937_64 rng_;
};

std::vector<SimplicialComplex> sample_complexes(int num_vertices, std::size_t count,
                                                std::uint64_t seed);

}  // namespace tork
