#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "mucalc/complex.hpp"

namespace mucalc {

// Coefficient field: the rationals (characteristic 0) or F_p for a prime p.
// Every Betti number computed here depends only on the characteristic.
struct FieldSpec {
  long long characteristic = 0;
  FieldSpec() = default;
  explicit FieldSpec(long long c);  // validates 0 or prime
  bool is_rational() const { return characteristic == 0; }
  static FieldSpec rationals() { return FieldSpec(0); }
  static FieldSpec prime(long long p) { return FieldSpec(p); }
};

// Reduced Betti numbers of the augmented chain complex, degrees -1..dim.
// The complex {∅} has reduced(-1) == 1; anything with a vertex has 0 there.
struct BettiData {
  int dim = -1;
  std::vector<long long> values;  // values[i + 1] = reduced Betti in degree i
  long long reduced(int i) const;
  bool all_zero() const;
};

// Degree-wise equality, treating out-of-range degrees as 0.
bool same_betti(const BettiData& a, const BettiData& b);
BettiData sphere_betti(int d);  // expected pattern for S^d, d >= -1

BettiData betti_reduced(const SimplicialComplex& x, const FieldSpec& f);
// Reduced Betti numbers of X[A] where A is given as a vertex mask of x;
// avoids rebuilding the induced complex (hot path of the sigma sums).
BettiData betti_reduced_induced(const SimplicialComplex& x, std::uint64_t mask_a,
                                const FieldSpec& f);
// Unreduced Betti numbers in degrees 0..dim.
std::vector<long long> betti_unreduced(const SimplicialComplex& x, const FieldSpec& f);

// Relative homology ranks of the pair (X[B], X[A]), A ⊆ B, computed from the
// quotient chain complex.  Degrees 0..dim(X).
struct PairBetti {
  std::vector<long long> values;
  long long betti(int i) const;
};
PairBetti betti_pair(const SimplicialComplex& x, const Face& b, const Face& a,
                     const FieldSpec& f);
PairBetti betti_pair_masks(const SimplicialComplex& x, std::uint64_t mask_b,
                           std::uint64_t mask_a, const FieldSpec& f);

// Inclusion-induced map H_j(X[A]) -> H_j(X).  Computed from cycle spaces:
// the kernel dimension is dim(Z_j(Y) ∩ B_j(X)) - dim B_j(Y).
struct InducedMapInfo {
  long long domain_betti = 0;  // β_j(X[A])
  long long rank = 0;          // rank of the induced map
  bool injective = true;
};
InducedMapInfo induced_map_info(const SimplicialComplex& x, const Face& a, int j,
                                const FieldSpec& f);
bool induced_injective(const SimplicialComplex& x, const Face& a, int j,
                       const FieldSpec& f);
long long induced_rank(const SimplicialComplex& x, const Face& a, int j,
                       const FieldSpec& f);

// Precomputes the ambient boundary data of X once so that induced-map
// queries over many subsets A are cheap.  Queries are independent and
// deterministic, so different A may be examined concurrently by copies.
class InjectivityScanner {
 public:
  InjectivityScanner(const SimplicialComplex& x, const FieldSpec& f);
  ~InjectivityScanner();
  InjectivityScanner(InjectivityScanner&&) noexcept;

  InducedMapInfo map_info(std::uint64_t mask_a, int j) const;
  // True iff H_j(X[A]) -> H_j(X) is injective for every A ⊆ V(X).
  bool all_injective(int j) const;

  struct Impl;

 private:
  std::unique_ptr<Impl> impl_;
};

// Homology-manifold recognition by recursion on links.  All require a pure
// input.  A closed homology d-manifold is a complex in which the link of
// every nonempty face γ has the reduced homology of S^{d-#γ}; a homology
// ball is an acyclic homology manifold with boundary whose boundary complex
// is a homology sphere; the boundary complex is the closure of the faces
// with acyclic links.
bool is_closed_homology_manifold(const SimplicialComplex& x, const FieldSpec& f);
bool is_homology_manifold_with_boundary(const SimplicialComplex& x, const FieldSpec& f);
bool is_homology_sphere(const SimplicialComplex& x, const FieldSpec& f);
bool is_homology_ball(const SimplicialComplex& x, const FieldSpec& f);
SimplicialComplex boundary_complex(const SimplicialComplex& x, const FieldSpec& f);

}  // namespace mucalc
