#include "mucalc/complex.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace mucalc {

namespace {

constexpr std::size_t kMaxVertices = 64;

std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

int popcount(std::uint64_t m) { return std::popcount(m); }

bool sorted_contains(const std::vector<std::uint64_t>& v, std::uint64_t m) {
  return std::binary_search(v.begin(), v.end(), m);
}

}  // namespace

Face normalized_face(Face f) {
  std::sort(f.begin(), f.end());
  f.erase(std::unique(f.begin(), f.end()), f.end());
  return f;
}

Face face_union(const Face& a, const Face& b) {
  Face out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool faces_disjoint(const Face& a, const Face& b) {
  Face inter;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(inter));
  return inter.empty();
}

std::string face_to_string(const Face& f) {
  std::string s = "{";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(f[i]);
  }
  return s + "}";
}

SimplicialComplex::SimplicialComplex()
    : faces_{0}, facets_{0}, fcounts_{1}, dim_(-1) {}

SimplicialComplex SimplicialComplex::build(std::vector<VertexLabel> verts,
                                           std::vector<std::uint64_t> masks) {
  SimplicialComplex x;
  x.verts_ = std::move(verts);
  x.faces_ = std::move(masks);
  if (x.faces_.empty() || x.faces_.front() != 0) {
    x.faces_.insert(x.faces_.begin(), 0);
  }
  const int m = static_cast<int>(x.verts_.size());

  x.dim_ = -1;
  x.fcounts_.assign(m + 2, 0);
  for (auto f : x.faces_) {
    const int c = popcount(f);
    x.fcounts_[c] += 1;
    x.dim_ = std::max(x.dim_, c - 1);
  }
  x.fcounts_.resize(x.dim_ + 2);

  // A face is a facet iff no single-vertex extension is present.
  x.facets_.clear();
  for (auto f : x.faces_) {
    bool maximal = true;
    for (int v = 0; v < m && maximal; ++v) {
      if (!(f & bit(v)) && sorted_contains(x.faces_, f | bit(v))) maximal = false;
    }
    if (maximal) x.facets_.push_back(f);
  }
  return x;
}

SimplicialComplex SimplicialComplex::from_facets(const std::vector<Face>& facets) {
  if (facets.empty()) throw std::invalid_argument("no facets");

  std::vector<VertexLabel> verts;
  for (const auto& f : facets) verts.insert(verts.end(), f.begin(), f.end());
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  if (verts.size() > kMaxVertices) {
    throw std::invalid_argument("more than 64 vertices");
  }

  std::vector<std::uint64_t> masks;
  for (const auto& f : facets) {
    const Face nf = normalized_face(f);
    std::uint64_t m = 0;
    for (auto v : nf) {
      const auto it = std::lower_bound(verts.begin(), verts.end(), v);
      m |= bit(static_cast<int>(it - verts.begin()));
    }
    // downward closure via submask enumeration
    for (std::uint64_t sub = m;; sub = (sub - 1) & m) {
      masks.push_back(sub);
      if (sub == 0) break;
    }
  }
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  return build(std::move(verts), std::move(masks));
}

SimplicialComplex SimplicialComplex::from_faces(const std::vector<Face>& faces) {
  std::vector<VertexLabel> verts;
  for (const auto& f : faces) verts.insert(verts.end(), f.begin(), f.end());
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  if (verts.size() > kMaxVertices) {
    throw std::invalid_argument("more than 64 vertices");
  }

  std::vector<std::uint64_t> masks;
  masks.push_back(0);
  for (const auto& f : faces) {
    const Face nf = normalized_face(f);
    std::uint64_t m = 0;
    for (auto v : nf) {
      const auto it = std::lower_bound(verts.begin(), verts.end(), v);
      m |= bit(static_cast<int>(it - verts.begin()));
    }
    masks.push_back(m);
  }
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());

  for (auto f : masks) {
    for (std::uint64_t rest = f; rest;) {
      const std::uint64_t b = rest & (~rest + 1);
      rest ^= b;
      if (!sorted_contains(masks, f ^ b)) {
        throw std::invalid_argument("face set not closed under subsets");
      }
    }
  }
  return build(std::move(verts), std::move(masks));
}

SimplicialComplex SimplicialComplex::simplex_closure(const Face& alpha) {
  if (alpha.empty()) throw std::invalid_argument("empty simplex");
  return from_facets({alpha});
}

SimplicialComplex SimplicialComplex::simplex_boundary(const Face& alpha) {
  if (alpha.empty()) throw std::invalid_argument("empty simplex");
  const Face a = normalized_face(alpha);
  if (a.size() == 1) return SimplicialComplex();  // ∂{x} = {∅}
  std::vector<Face> facets;
  for (std::size_t i = 0; i < a.size(); ++i) {
    Face f = a;
    f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
    facets.push_back(std::move(f));
  }
  return from_facets(facets);
}

SimplicialComplex SimplicialComplex::standard_sphere(int d) {
  std::vector<VertexLabel> labels(static_cast<std::size_t>(d) + 2);
  for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = static_cast<VertexLabel>(i);
  return standard_sphere(d, labels);
}

SimplicialComplex SimplicialComplex::standard_sphere(
    int d, const std::vector<VertexLabel>& labels) {
  if (d < 0) throw std::invalid_argument("negative sphere dimension");
  Face a = normalized_face(labels);
  if (static_cast<int>(a.size()) != d + 2) {
    throw std::invalid_argument("standard d-sphere needs exactly d+2 labels");
  }
  return simplex_boundary(a);
}

bool SimplicialComplex::has_vertex(VertexLabel v) const { return index_of(v) >= 0; }

int SimplicialComplex::index_of(VertexLabel v) const {
  const auto it = std::lower_bound(verts_.begin(), verts_.end(), v);
  if (it == verts_.end() || *it != v) return -1;
  return static_cast<int>(it - verts_.begin());
}

long long SimplicialComplex::face_count(int k) const {
  if (k < -1 || k > dim_) return 0;
  return fcounts_[k + 1];
}

std::uint64_t SimplicialComplex::mask_of(const Face& f, bool* all_present) const {
  std::uint64_t m = 0;
  bool all = true;
  for (auto v : f) {
    const int i = index_of(v);
    if (i < 0) {
      all = false;
      continue;
    }
    m |= bit(i);
  }
  if (all_present) *all_present = all;
  return m;
}

bool SimplicialComplex::contains_mask(std::uint64_t m) const {
  return sorted_contains(faces_, m);
}

bool SimplicialComplex::contains(const Face& f) const {
  bool all = true;
  const std::uint64_t m = mask_of(normalized_face(f), &all);
  return all && contains_mask(m);
}

Face SimplicialComplex::face_from_mask(std::uint64_t m) const {
  Face f;
  f.reserve(static_cast<std::size_t>(popcount(m)));
  for (std::uint64_t rest = m; rest;) {
    const int i = std::countr_zero(rest);
    rest &= rest - 1;
    f.push_back(verts_[static_cast<std::size_t>(i)]);
  }
  return f;
}

std::vector<Face> SimplicialComplex::all_faces() const {
  std::vector<Face> out;
  out.reserve(faces_.size());
  for (auto m : faces_) out.push_back(face_from_mask(m));
  return out;
}

std::vector<Face> SimplicialComplex::faces_of_dim(int k) const {
  std::vector<Face> out;
  for (auto m : faces_) {
    if (popcount(m) == k + 1) out.push_back(face_from_mask(m));
  }
  return out;
}

std::vector<Face> SimplicialComplex::facet_list() const {
  std::vector<Face> out;
  out.reserve(facets_.size());
  for (auto m : facets_) out.push_back(face_from_mask(m));
  return out;
}

SimplicialComplex SimplicialComplex::induced(const Face& label_set) const {
  const std::uint64_t maskA = mask_of(normalized_face(label_set));
  std::vector<std::uint64_t> kept;
  for (auto f : faces_) {
    if ((f & ~maskA) == 0) kept.push_back(f);
  }
  // Re-compress onto the surviving vertices (exactly V(X) ∩ A).
  std::vector<VertexLabel> verts;
  std::vector<int> remap(verts_.size(), -1);
  for (std::size_t i = 0; i < verts_.size(); ++i) {
    if (maskA & bit(static_cast<int>(i))) {
      remap[i] = static_cast<int>(verts.size());
      verts.push_back(verts_[i]);
    }
  }
  for (auto& f : kept) {
    std::uint64_t nf = 0;
    for (std::uint64_t rest = f; rest;) {
      const int i = std::countr_zero(rest);
      rest &= rest - 1;
      nf |= bit(remap[static_cast<std::size_t>(i)]);
    }
    f = nf;
  }
  std::sort(kept.begin(), kept.end());
  return build(std::move(verts), std::move(kept));
}

SimplicialComplex SimplicialComplex::link(VertexLabel x) const {
  if (!has_vertex(x)) throw std::invalid_argument("link: not a vertex");
  return link(Face{x});
}

SimplicialComplex SimplicialComplex::link(const Face& gamma) const {
  const Face g = normalized_face(gamma);
  bool all = true;
  const std::uint64_t gm = mask_of(g, &all);
  if (!all || !contains_mask(gm)) throw std::invalid_argument("link: not a face");

  std::vector<std::uint64_t> kept;
  std::uint64_t vunion = 0;
  for (auto f : faces_) {
    if ((f & gm) == gm) {
      kept.push_back(f ^ gm);
      vunion |= f ^ gm;
    }
  }
  std::vector<VertexLabel> verts;
  std::vector<int> remap(verts_.size(), -1);
  for (std::size_t i = 0; i < verts_.size(); ++i) {
    if (vunion & bit(static_cast<int>(i))) {
      remap[i] = static_cast<int>(verts.size());
      verts.push_back(verts_[i]);
    }
  }
  for (auto& f : kept) {
    std::uint64_t nf = 0;
    for (std::uint64_t rest = f; rest;) {
      const int i = std::countr_zero(rest);
      rest &= rest - 1;
      nf |= bit(remap[static_cast<std::size_t>(i)]);
    }
    f = nf;
  }
  std::sort(kept.begin(), kept.end());
  return build(std::move(verts), std::move(kept));
}

SimplicialComplex SimplicialComplex::skeleton(int k) const {
  if (k < 0) throw std::invalid_argument("skeleton: negative dimension");
  if (k >= dim_) return *this;
  std::vector<std::uint64_t> kept;
  for (auto f : faces_) {
    if (popcount(f) <= k + 1) kept.push_back(f);
  }
  return build(verts_, std::move(kept));
}

SimplicialComplex join(const SimplicialComplex& x1, const SimplicialComplex& x2) {
  {
    Face inter;
    std::set_intersection(x1.vertices().begin(), x1.vertices().end(),
                          x2.vertices().begin(), x2.vertices().end(),
                          std::back_inserter(inter));
    if (!inter.empty()) throw std::invalid_argument("join: overlapping vertex sets");
  }
  std::vector<Face> faces;
  faces.reserve(x1.total_face_count() * x2.total_face_count());
  const auto f1 = x1.all_faces();
  const auto f2 = x2.all_faces();
  for (const auto& a : f1) {
    for (const auto& b : f2) faces.push_back(face_union(a, b));
  }
  return SimplicialComplex::from_faces(faces);
}

Integer FVector::f(int i) const {
  if (i < -1 || i > dim) return Integer(0);
  return counts[static_cast<std::size_t>(i + 1)];
}

Integer GVector::g(int j) const {
  if (j < 0 || j > dim + 1) return Integer(0);
  return entries[static_cast<std::size_t>(j)];
}

FVector f_vector(const SimplicialComplex& x) {
  FVector out;
  out.dim = x.dimension();
  out.counts.resize(static_cast<std::size_t>(out.dim) + 2);
  for (int i = -1; i <= out.dim; ++i) {
    out.counts[static_cast<std::size_t>(i + 1)] = Integer(x.face_count(i));
  }
  return out;
}

GVector g_vector_as_dim(const FVector& f, int d) {
  if (f.dim > d) throw std::invalid_argument("g_vector_as_dim: dimension too small");
  GVector out;
  out.dim = d;
  out.entries.assign(static_cast<std::size_t>(d) + 2, Integer(0));
  for (int j = 0; j <= d + 1; ++j) {
    Integer g = 0;
    for (int i = -1; i <= j - 1; ++i) {
      g += parity_sign(j - i - 1) * binomial(d - i + 1, j - i - 1) * f.f(i);
    }
    out.entries[static_cast<std::size_t>(j)] = g;
  }
  return out;
}

GVector g_vector(const SimplicialComplex& x) {
  return g_vector_as_dim(f_vector(x), x.dimension());
}

FVector f_from_g(const GVector& g, int d) {
  FVector out;
  out.dim = d;
  out.counts.assign(static_cast<std::size_t>(d) + 2, Integer(0));
  for (int i = -1; i <= d; ++i) {
    Integer f = 0;
    for (int j = 0; j <= i + 1; ++j) {
      f += binomial(d - j + 2, i - j + 1) * g.g(j);
    }
    out.counts[static_cast<std::size_t>(i + 1)] = f;
  }
  return out;
}

bool is_pure(const SimplicialComplex& x) {
  const int top = x.dimension() + 1;
  for (auto f : x.facet_masks()) {
    if (std::popcount(f) != top) return false;
  }
  return true;
}

bool is_pseudomanifold(const SimplicialComplex& x, bool allow_boundary) {
  if (!is_pure(x)) return false;
  const int d = x.dimension();
  if (d < 0) return true;
  for (auto r : x.face_masks()) {
    if (std::popcount(r) != d) continue;  // ridges have d vertices
    int cnt = 0;
    for (auto f : x.facet_masks()) {
      if ((f & r) == r) ++cnt;
    }
    if (cnt > 2) return false;
    if (cnt != 2 && !allow_boundary) return false;
  }
  return true;
}

bool is_two_neighbourly(const SimplicialComplex& x) {
  const int m = static_cast<int>(x.vertex_count());
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (!x.contains_mask(bit(i) | bit(j))) return false;
    }
  }
  return true;
}

bool is_connected(const SimplicialComplex& x) {
  const int m = static_cast<int>(x.vertex_count());
  if (m == 0) return true;
  std::vector<int> comp(static_cast<std::size_t>(m), -1);
  std::vector<int> stack{0};
  comp[0] = 0;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int u = 0; u < m; ++u) {
      if (comp[static_cast<std::size_t>(u)] < 0 && u != v &&
          x.contains_mask(bit(u) | bit(v))) {
        comp[static_cast<std::size_t>(u)] = 0;
        stack.push_back(u);
      }
    }
  }
  for (int v = 0; v < m; ++v) {
    if (comp[static_cast<std::size_t>(v)] < 0) return false;
  }
  return true;
}

NamedComplex read_facet_list(std::istream& in) {
  std::map<std::string, VertexLabel> label_of;
  std::vector<std::string> names;
  std::vector<Face> facets;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    Face f;
    std::string tok;
    while (ls >> tok) {
      auto it = label_of.find(tok);
      if (it == label_of.end()) {
        const VertexLabel l = static_cast<VertexLabel>(names.size());
        it = label_of.emplace(tok, l).first;
        names.push_back(tok);
      }
      f.push_back(it->second);
    }
    if (!f.empty()) facets.push_back(normalized_face(std::move(f)));
  }
  if (facets.empty()) throw std::invalid_argument("no facets");
  return NamedComplex{SimplicialComplex::from_facets(facets), std::move(names)};
}

NamedComplex parse_facet_list(const std::string& text) {
  std::istringstream in(text);
  return read_facet_list(in);
}

std::string write_facet_list(const SimplicialComplex& x,
                             const std::vector<std::string>* names) {
  std::vector<std::vector<int>> seqs;
  for (auto fm : x.facet_masks()) {
    std::vector<int> seq;
    for (std::uint64_t rest = fm; rest;) {
      const int i = std::countr_zero(rest);
      rest &= rest - 1;
      seq.push_back(i);
    }
    seqs.push_back(std::move(seq));
  }
  std::sort(seqs.begin(), seqs.end());
  std::string out;
  for (const auto& seq : seqs) {
    for (std::size_t i = 0; i < seq.size(); ++i) {
      if (i) out += ' ';
      const VertexLabel v = x.vertices()[static_cast<std::size_t>(seq[i])];
      if (names && v < names->size()) {
        out += (*names)[v];
      } else {
        out += std::to_string(v);
      }
    }
    out += '\n';
  }
  return out;
}

}  // namespace mucalc
