#pragma once

#include <string>

#include "mucalc/bistellar.hpp"
#include "mucalc/complex.hpp"
#include "mucalc/homology.hpp"

namespace mucalc {

// Witness that a d-sphere (or closed d-manifold) S is ℓ-stacked: a complex
// delta one dimension up with ∂delta = S and Skel_{d-ℓ}(delta) =
// Skel_{d-ℓ}(S).  The canonical candidate — the largest complex whose
// (d-ℓ)-skeleton agrees with S's — is the only witness attempted, so a
// valid certificate is sound while a failed one reads "not ℓ-stacked by
// canonical witness".
struct StackedCertificate {
  int ell = 0;
  SimplicialComplex delta;
  bool is_ball_or_manifold = false;
  bool boundary_matches = false;
  bool skeleton_matches = false;
  bool valid() const { return is_ball_or_manifold && boundary_matches && skeleton_matches; }
  std::string failed_check() const;  // empty when valid
};

// {α ⊆ V(X) : every subset of α of cardinality <= k+1 is a face of X},
// built by clique-style extension over the k-skeleton.  Capped at 20
// vertices.
SimplicialComplex max_complex_with_skeleton(const SimplicialComplex& x, int k);

// delta = max_complex_with_skeleton(S, d-ℓ); checks that delta is a homology
// (d+1)-ball, that its boundary complex is S, and the skeleton equality.
StackedCertificate certify_stacked_sphere(const SimplicialComplex& s, int ell,
                                          const FieldSpec& f);

// Same candidate, but delta is only required to be a homology
// (d+1)-manifold with boundary M.
StackedCertificate certify_stacked_manifold(const SimplicialComplex& m, int ell,
                                            const FieldSpec& f);

// Carries an ℓ-stacked ball witness across a bistellar move on its boundary:
// given ∂A = R, Skel_{d-ℓ}(A) = Skel_{d-ℓ}(R) and an admitted move of index
// t on R with d >= 2ℓ+1, returns B with ∂B the moved sphere and the same
// skeleton property.  For t <= ℓ-1, B = A ∪ closure(α ∪ β); for
// t >= d-ℓ+1, B drops the facet α ∪ β.  A move of index exactly ℓ destroys
// ℓ-stackedness and is refused.
SimplicialComplex transport_ball(const SimplicialComplex& a, const BistellarMove& mv,
                                 int ell);

// Every vertex link is an ℓ-stacked homology sphere (by certificate).
bool is_locally_stacked(const SimplicialComplex& m, int ell, const FieldSpec& f);

// JSON form: {"ell": ..., "valid": ..., "failed_check": ...,
//             "delta_facets": [[...], ...]}
std::string certificate_to_json(const StackedCertificate& cert);

}  // namespace mucalc
