#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mucalc/rational.hpp"

namespace mucalc {

// Vertex labels live in a global nonnegative integer space.  Labels are
// stable under every operation; fresh labels introduced by vertex-adding
// moves never collide with labels already in use.
using VertexLabel = std::uint32_t;

// A face is a sorted, duplicate-free label sequence.  The empty face {} has
// dimension -1 and belongs to every complex.
using Face = std::vector<VertexLabel>;

Face normalized_face(Face f);
Face face_union(const Face& a, const Face& b);
bool faces_disjoint(const Face& a, const Face& b);
std::string face_to_string(const Face& f);

// A finite abstract simplicial complex: a face set closed under subsets.
// Faces are stored as bitmasks over an index-compressed vertex table (at
// most 64 vertices), with the table preserving the original labels.  The
// minimal representable complex is {∅}; the void complex does not exist.
// Instances are immutable after construction, so concurrent reads are safe.
class SimplicialComplex {
 public:
  SimplicialComplex();  // the complex {∅}

  // Downward closure of the given facets.  Non-maximal and duplicate entries
  // are absorbed silently.  An empty list is an error ("no facets").
  static SimplicialComplex from_facets(const std::vector<Face>& facets);

  // Builds from an explicit face list; throws if the list is not closed
  // under subsets.
  static SimplicialComplex from_faces(const std::vector<Face>& faces);

  static SimplicialComplex simplex_closure(const Face& alpha);   // all subsets
  static SimplicialComplex simplex_boundary(const Face& alpha);  // proper subsets
  static SimplicialComplex standard_sphere(int d);  // labels 0..d+1
  static SimplicialComplex standard_sphere(int d, const std::vector<VertexLabel>& labels);

  int dimension() const { return dim_; }
  std::size_t vertex_count() const { return verts_.size(); }
  const std::vector<VertexLabel>& vertices() const { return verts_; }
  bool has_vertex(VertexLabel v) const;

  long long face_count(int k) const;  // f_k; k in [-1, dim], else 0
  std::size_t total_face_count() const { return faces_.size(); }
  bool contains(const Face& f) const;

  std::vector<Face> all_faces() const;
  std::vector<Face> faces_of_dim(int k) const;
  std::vector<Face> facet_list() const;

  // The induced subcomplex X[A] = {α ∈ X : α ⊆ A}.  A may contain labels
  // outside V(X); they are ignored.
  SimplicialComplex induced(const Face& label_set) const;

  // Link of a vertex / of a face: {α : α ∩ γ = ∅, α ∪ γ ∈ X}.
  SimplicialComplex link(VertexLabel x) const;
  SimplicialComplex link(const Face& gamma) const;

  // k-skeleton; returns the whole complex when k >= dim.
  SimplicialComplex skeleton(int k) const;

  bool operator==(const SimplicialComplex& o) const {
    return verts_ == o.verts_ && faces_ == o.faces_;
  }
  bool operator!=(const SimplicialComplex& o) const { return !(*this == o); }

  // Mask-level access for enumeration-heavy callers.  Bit i of a mask refers
  // to vertices()[i]; masks are sorted ascending and always include 0 (∅).
  const std::vector<std::uint64_t>& face_masks() const { return faces_; }
  const std::vector<std::uint64_t>& facet_masks() const { return facets_; }
  bool contains_mask(std::uint64_t m) const;
  Face face_from_mask(std::uint64_t m) const;
  // Returns the mask of the label set; *all_present reports whether every
  // label is a vertex of this complex (absent labels are dropped).
  std::uint64_t mask_of(const Face& f, bool* all_present = nullptr) const;
  int index_of(VertexLabel v) const;  // -1 when absent

 private:
  static SimplicialComplex build(std::vector<VertexLabel> verts,
                                 std::vector<std::uint64_t> masks);

  std::vector<VertexLabel> verts_;      // ascending
  std::vector<std::uint64_t> faces_;    // ascending, faces_[0] == 0
  std::vector<std::uint64_t> facets_;   // ascending, inclusion-maximal
  std::vector<long long> fcounts_;      // fcounts_[c] = #faces of cardinality c
  int dim_ = -1;
};

// Join X1 * X2; the vertex sets must be disjoint.
SimplicialComplex join(const SimplicialComplex& x1, const SimplicialComplex& x2);

// Face vector (f_{-1}, f_0, ..., f_d) with f_{-1} = 1.
struct FVector {
  int dim = -1;
  std::vector<Integer> counts;  // counts[i + 1] = f_i
  Integer f(int i) const;       // 0 outside [-1, dim]
  bool operator==(const FVector&) const = default;
};

// g-vector (g_0, ..., g_{d+1}) of a complex regarded as d-dimensional.
struct GVector {
  int dim = -1;
  std::vector<Integer> entries;  // entries[j] = g_j, 0 <= j <= dim + 1
  Integer g(int j) const;        // 0 outside [0, dim + 1]
  bool operator==(const GVector&) const = default;
};

FVector f_vector(const SimplicialComplex& x);
GVector g_vector(const SimplicialComplex& x);
// g-vector of the face counts viewed as a d-dimensional complex (used for
// vertex links inside identities that fix the ambient dimension).
GVector g_vector_as_dim(const FVector& f, int d);
FVector f_from_g(const GVector& g, int d);

bool is_pure(const SimplicialComplex& x);
// Pure, and every ridge lies in exactly 2 facets (at most 2 when
// allow_boundary is set).
bool is_pseudomanifold(const SimplicialComplex& x, bool allow_boundary);
bool is_two_neighbourly(const SimplicialComplex& x);
bool is_connected(const SimplicialComplex& x);

// Facet-list text format: one facet per line, whitespace-separated vertex
// tokens, '#' starts a comment.  Tokens map to labels 0,1,2,... in order of
// first appearance.
struct NamedComplex {
  SimplicialComplex complex;
  std::vector<std::string> token_names;  // indexed by label
};
NamedComplex read_facet_list(std::istream& in);
NamedComplex parse_facet_list(const std::string& text);
// Canonical form: facets sorted lexicographically by compressed index.
std::string write_facet_list(const SimplicialComplex& x,
                             const std::vector<std::string>* names = nullptr);

}  // namespace mucalc
