#pragma once

#include <utility>
#include <vector>

#include "mucalc/bistellar.hpp"
#include "mucalc/complex.hpp"
#include "mucalc/homology.hpp"
#include "mucalc/rational.hpp"

namespace mucalc {

// σ_i(X) = Σ_{A ⊆ V(X)} reducedBetti_i(X[A]) / binom(f_0, #A), with the
// convention that the A = ∅ term contributes -1 to σ_0 and nothing above.
// σ_i = 0 outside [0, dim].
struct SigmaVector {
  int dim = -1;
  std::vector<Rational> values;  // σ_0..σ_d
  Rational sigma(int i) const;
  bool operator==(const SigmaVector&) const = default;
};

// μ_0 = Σ_x 1/(1 + f_0(link x)); for i >= 1,
// μ_i = Σ_x (δ_{i1} + σ_{i-1}(link x)) / (1 + f_0(link x)).
struct MuVector {
  int dim = -1;
  std::vector<Rational> values;  // μ_0..μ_d
  Rational mu(int i) const;
  bool operator==(const MuVector&) const = default;
};

// Brute force over all 2^m induced subcomplexes.  Exact; exponential in the
// vertex count (callers cap m; the CLI refuses m > 16 without --force).
SigmaVector sigma_vector(const SimplicialComplex& x, const FieldSpec& f);

MuVector mu_vector(const SimplicialComplex& x, const FieldSpec& f);

// Independent evaluation of μ through relative homology of covering pairs:
// μ_i = (1/m) Σ_j binom(m-1, j-1)^{-1} Σ_{A ⋖ B, #B = j} rank H_i(X[B], X[A]).
// Must agree with mu_vector on every input; intended for m <= 10.
MuVector mu_via_pairs(const SimplicialComplex& x, const FieldSpec& f);

// Alternating partial sum a_ℓ = Σ_{i=0}^{ℓ} (-1)^{ℓ-i} σ_i.
Rational a_ell(const SigmaVector& sv, int ell);

// What a single bistellar move of index t does to the sigma vector of a
// homology sphere, phrased as checkable claims against brute force:
//  - exact: σ_i(S) = c σ_i(R) for i outside {t-1, t, d-t-1, d-t};
//  - diffs: exact new values of σ_t - σ_{t-1} and σ_{d-t} - σ_{d-t-1};
//  - stricts: the four strict comparisons against c·σ_i(R), with the stated
//    t = 0 / t = d exceptions;
// where c = (m+1)/m for t = 0, (m+1)/(m+2) for t = d, 1 otherwise, and
// m = f_0(S) after the move.  When t = d/2 the report carries no claims of
// the second kind ("no control"); only the identity
// σ_{d/2}(S) - σ_{d/2}(R) = σ_{d/2-1}(S) - σ_{d/2-1}(R) remains assertable.
struct SigmaStepReport {
  int t = 0;
  int d = 0;
  Rational c;
  bool no_control = false;
  std::vector<std::pair<int, Rational>> exact;  // (i, σ_i(S))
  std::vector<std::pair<int, Rational>> diffs;  // (i, σ_i(S) - σ_{i-1}(S))
  struct Strict {
    int index;
    bool greater;    // σ_index(S) > bound when true, < bound otherwise
    Rational bound;  // c · σ_index(R)
  };
  std::vector<Strict> stricts;
};
SigmaStepReport sigma_step(const SigmaVector& sigma_r, const BistellarMove& mv,
                           long long m_after, int d);

// Folds the per-move update rule for a_ℓ over a tame log:
//  t = 0:        a_ℓ(S) = (m+1)/m · a_ℓ(R) + (-1)^ℓ (m+1)/((d+2)(d+3))
//  1 <= t <= ℓ:  a_ℓ(S) = a_ℓ(R) + (-1)^{ℓ-t} (m+1)/(d+3) · binom(d+2, t+1)^{-1}
//  t >= ℓ+2:     unchanged
//  t = ℓ+1:      only a_ℓ(S) < a_ℓ(R); the tracked value degrades to a
//                permanent upper bound.
// Valid for 2(ℓ+1) <= d; a log with a move of index >= d/2 is rejected.
struct AlternatingTracker {
  enum class Status { exact, upper_bound };
  struct Entry {
    int ell = 0;
    Rational value;
    Status status = Status::exact;
  };
  std::vector<Entry> entries;  // one per valid ℓ
};
AlternatingTracker track_a(const MoveLog& log);
AlternatingTracker::Entry track_a(const MoveLog& log, int ell);

}  // namespace mucalc
