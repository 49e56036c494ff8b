#include "mucalc/stacked.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_set>

#include <json.hpp>

namespace mucalc {

std::string StackedCertificate::failed_check() const {
  if (!is_ball_or_manifold) return "is_ball_or_manifold";
  if (!boundary_matches) return "boundary_matches";
  if (!skeleton_matches) return "skeleton_matches";
  return "";
}

SimplicialComplex max_complex_with_skeleton(const SimplicialComplex& x, int k) {
  if (k < 0 || k > x.dimension()) {
    throw std::invalid_argument("skeleton dimension out of range");
  }
  const int m = static_cast<int>(x.vertex_count());
  if (m > 20) throw std::invalid_argument("max_complex_with_skeleton capped at 20 vertices");

  // level sets by cardinality; below k+2 they are the faces of x itself
  std::vector<std::vector<std::uint64_t>> levels(static_cast<std::size_t>(m) + 1);
  for (auto f : x.face_masks()) {
    const int c = std::popcount(f);
    if (c <= k + 1) levels[static_cast<std::size_t>(c)].push_back(f);
  }

  // α of cardinality c+1 belongs iff every c-subset does; extend upward
  for (int c = k + 1; c < m; ++c) {
    const auto& cur = levels[static_cast<std::size_t>(c)];
    if (cur.empty()) break;
    std::unordered_set<std::uint64_t> in_cur(cur.begin(), cur.end());
    for (auto f : cur) {
      const int top = 63 - std::countl_zero(f);
      for (int v = top + 1; v < m; ++v) {
        const std::uint64_t cand = f | (std::uint64_t{1} << v);
        bool ok = true;
        for (std::uint64_t rest = cand; rest && ok;) {
          const std::uint64_t b = rest & (~rest + 1);
          rest ^= b;
          ok = in_cur.count(cand ^ b) > 0;
        }
        if (ok) levels[static_cast<std::size_t>(c) + 1].push_back(cand);
      }
    }
  }

  std::vector<Face> faces;
  for (const auto& lvl : levels) {
    for (auto f : lvl) faces.push_back(x.face_from_mask(f));
  }
  return SimplicialComplex::from_faces(faces);
}

namespace {

StackedCertificate certify(const SimplicialComplex& s, int ell, const FieldSpec& f,
                           bool manifold_variant) {
  const int d = s.dimension();
  if (ell < 0 || ell > d) throw std::invalid_argument("ell out of range");

  StackedCertificate cert;
  cert.ell = ell;
  cert.delta = max_complex_with_skeleton(s, d - ell);

  const SimplicialComplex& delta = cert.delta;
  if (delta.dimension() == d + 1) {
    cert.is_ball_or_manifold = manifold_variant
                                   ? is_homology_manifold_with_boundary(delta, f)
                                   : is_homology_ball(delta, f);
    cert.boundary_matches = is_pure(delta) && boundary_complex(delta, f) == s;
  }
  cert.skeleton_matches = delta.skeleton(d - ell) == s.skeleton(d - ell);
  return cert;
}

}  // namespace

StackedCertificate certify_stacked_sphere(const SimplicialComplex& s, int ell,
                                          const FieldSpec& f) {
  if (!is_pure(s) || !is_homology_sphere(s, f)) {
    throw std::invalid_argument("not a homology sphere over the chosen field");
  }
  return certify(s, ell, f, /*manifold_variant=*/false);
}

StackedCertificate certify_stacked_manifold(const SimplicialComplex& m, int ell,
                                            const FieldSpec& f) {
  if (!is_pure(m) || !is_closed_homology_manifold(m, f)) {
    throw std::invalid_argument("not a closed homology manifold over the chosen field");
  }
  return certify(m, ell, f, /*manifold_variant=*/true);
}

SimplicialComplex transport_ball(const SimplicialComplex& a, const BistellarMove& mv,
                                 int ell) {
  const int d = a.dimension() - 1;  // a is a (d+1)-ball over a d-sphere boundary
  if (ell < 0 || d < 2 * ell + 1) {
    throw std::invalid_argument("transport needs d >= 2*ell + 1");
  }
  if (static_cast<int>(mv.alpha.size() + mv.beta.size()) != d + 2) {
    throw std::invalid_argument("move not well-formed for the boundary dimension");
  }
  const int t = mv.index();
  if (t == ell) {
    throw std::invalid_argument("stackedness not preserved: move index equals ell");
  }

  if (t <= ell - 1) {
    // the new facet α ∪ β is glued along closure(α) * boundary(β)
    if (a.contains(mv.beta)) {
      throw std::logic_error("transport: beta is already a face of the ball");
    }
    std::vector<Face> faces = a.all_faces();
    const Face ab = face_union(mv.alpha, mv.beta);
    const auto closure = SimplicialComplex::simplex_closure(ab);
    for (auto& f : closure.all_faces()) faces.push_back(f);
    return SimplicialComplex::from_faces(faces);
  }

  if (t >= d - ell + 1) {
    const Face ab = face_union(mv.alpha, mv.beta);
    if (!a.contains(ab)) {
      throw std::invalid_argument("transport: expected facet alpha ∪ beta missing");
    }
    std::vector<Face> facets;
    for (auto& f : a.facet_list()) {
      if (f != ab) facets.push_back(f);
    }
    if (facets.empty()) throw std::logic_error("transport would empty the ball");
    return SimplicialComplex::from_facets(facets);
  }

  throw std::invalid_argument("move index incompatible with an ell-stacked source");
}

bool is_locally_stacked(const SimplicialComplex& m, int ell, const FieldSpec& f) {
  if (!is_pure(m) || !is_closed_homology_manifold(m, f)) {
    throw std::invalid_argument("not a closed homology manifold over the chosen field");
  }
  for (const VertexLabel v : m.vertices()) {
    if (!certify_stacked_sphere(m.link(v), ell, f).valid()) return false;
  }
  return true;
}

std::string certificate_to_json(const StackedCertificate& cert) {
  nlohmann::json j;
  j["ell"] = cert.ell;
  j["valid"] = cert.valid();
  j["failed_check"] = cert.failed_check();
  j["delta_facets"] = nlohmann::json::array();
  for (const auto& f : cert.delta.facet_list()) j["delta_facets"].push_back(f);
  return j.dump(2);
}

}  // namespace mucalc
