#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mucalc/bistellar.hpp"
#include "mucalc/complex.hpp"
#include "mucalc/homology.hpp"
#include "mucalc/rng.hpp"
#include "mucalc/sigma_mu.hpp"
#include "mucalc/stacked.hpp"

namespace mucalc {

enum class Verdict { pass, fail, equality_case, not_applicable };
std::string verdict_name(Verdict v);

// One exact check: lhs relation rhs, with enough context to reproduce it.
// All values are exact rationals rendered as "num/den"; there is no
// tolerance anywhere.
struct VerificationReport {
  std::string theorem_id;
  std::string instance;   // library name or walk descriptor with seed
  long long field_char = 0;
  std::string lhs;
  std::string rhs;
  std::string relation;   // "<=", ">=", "="
  Verdict verdict = Verdict::pass;
  std::string note;       // witness summary / scan limitation / failure detail
};

bool any_failure(const std::vector<VerificationReport>& reports);
std::string reports_to_json(const std::vector<VerificationReport>& reports);

// Built-in instances, each validated against its expected f-vector at load:
// standard spheres s1..s6, stacked5, octahedron, rp2_6 (6-vertex real
// projective plane), torus7 (7-vertex torus).
const std::vector<std::pair<std::string, SimplicialComplex>>& named_library();
const SimplicialComplex& library_complex(const std::string& name);

// Seeded small random complex for property suites (at most max_vertices).
SimplicialComplex random_complex(Rng& rng, int max_vertices, int max_facet_size = 5);

// Lower bound g_{ℓ+1} >= 0 for tame spheres, with g_{ℓ+1} = 0 iff the
// canonical ℓ-stacked certificate is valid, plus the move-count identity
// λ(S) = Σ_{ℓ < d/2} g_{ℓ+1}(S).
std::vector<VerificationReport> verify_glbt_tame_sphere(const MoveLog& log,
                                                        const FieldSpec& f);

// Sigma upper bound: for 0 <= ℓ <= d/2 - 1,
//   a_ℓ(S) <= (m+1)/(d+3) Σ_{i=0}^{ℓ+1} (-1)^{ℓ+1-i} g_i(S)/binom(d+2, i),
// with equality iff S is (ℓ+1)-stacked.  The equality direction is asserted
// as an iff when ground truth is available (tame-certified spheres, or any
// 2-sphere); otherwise a failed canonical witness is reported, not treated
// as disproof.
std::vector<VerificationReport> verify_sigma_bound(const MoveLog& log, const FieldSpec& f);
std::vector<VerificationReport> verify_sigma_bound_sphere(const SimplicialComplex& s,
                                                          const FieldSpec& f,
                                                          const std::string& instance,
                                                          bool iff_ground_truth);

// Morse-type inequalities: alternating sums of μ dominate those of the
// (unreduced) Betti numbers with equality at j = d, μ_j >= β_j pointwise,
// and the equality cases match the full induced-subcomplex injectivity scan
// in both directions.
std::vector<VerificationReport> verify_morse(const SimplicialComplex& x, const FieldSpec& f,
                                             const std::string& instance);

// Tightness criterion: connected and μ = β iff every induced subcomplex
// includes injectively in every degree; tight complexes must come out
// 2-neighbourly.
VerificationReport verify_tightness(const SimplicialComplex& x, const FieldSpec& f,
                                    const std::string& instance);

// μ_{d-i} = μ_i on closed homology manifolds; on homology spheres of
// dimension >= 2 also the sigma duality σ_d = 1, σ_{d-1} = 1 + σ_0,
// σ_{d-1-i} = σ_i.
std::vector<VerificationReport> verify_duality(const SimplicialComplex& m, const FieldSpec& f,
                                               const std::string& instance);

// Lower bound theorems for connected closed homology manifolds:
//  - link-sum bound Σ(-1)^{ℓ-i} μ_i <= (-1)^ℓ + g_{ℓ+1}/binom(d+2, ℓ+1)
//    (requires certified locally tame input; skipped otherwise), together
//    with the exact consistency of summing the per-link sigma bounds;
//  - dimension-3 bounds μ_1 - μ_0 <= -1 + g_2/10 and g_2 >= 10 β_1 with
//    their stackedness equality cases;
//  - g_{ℓ+1} >= binom(d+2, ℓ+1) Σ_{i=1}^{ℓ} (-1)^{ℓ-i} β_i with equality iff
//    ℓ-stacked, cross-checked against the manifold certificate.
std::vector<VerificationReport> verify_manifold_glbt(const SimplicialComplex& m,
                                                     const FieldSpec& f, int ell_lo,
                                                     int ell_hi,
                                                     const std::string& instance);

// Falsification scans.  Instances are drawn from the named library and from
// seeded walks with arbitrary move indices; every report notes that the
// sample covers only bistellar-reachable spheres plus library instances.
//  which = 1: sigma upper bound on homology d-spheres;
//  which = 2: link-sum bound on closed homology d-manifolds;
//  which = 3: GLB inequality on connected closed homology d-manifolds.
std::vector<VerificationReport> scan_conjecture(int which, int d, int trials,
                                                std::uint64_t seed, const FieldSpec& f);

// Canned suites for the CLI: morse | duality | glbt | tame | tight | all.
std::vector<VerificationReport> run_suite(const std::string& suite, const FieldSpec& f);

}  // namespace mucalc
