#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mucalc/complex.hpp"

namespace mucalc {

// A bistellar move α ↦ β on a d-complex: α, β disjoint and nonempty with
// #α + #β = d + 2.  The move replaces the induced copy of ᾱ * ∂β by β̄ * ∂α.
// Its index is t = #β - 1; the reverse move β ↦ α has index d - t.  Index-0
// moves introduce a vertex, index-d moves delete one.
struct BistellarMove {
  Face alpha;
  Face beta;
  int index() const { return static_cast<int>(beta.size()) - 1; }
  BistellarMove reversed() const { return BistellarMove{beta, alpha}; }
  bool operator==(const BistellarMove&) const = default;
};

// A replayable move sequence from the standard sphere on initial_labels.
struct MoveLog {
  int dim = 0;
  std::uint64_t seed = 0;
  std::vector<VertexLabel> initial_labels;
  std::vector<BistellarMove> moves;

  // Every index < d/2.
  bool tame() const;
  std::size_t length() const { return moves.size(); }
  std::string describe() const;  // short reproduction descriptor
};

// True iff join(closure α, boundary β) equals induced(X, α ∪ β).
bool admits(const SimplicialComplex& x, const BistellarMove& mv);

// Y = (X \ (ᾱ * ∂β)) ∪ (β̄ * ∂α).  Throws when the move is not admitted or
// the face-set arithmetic would break downward closure.
SimplicialComplex apply_move(const SimplicialComplex& x, const BistellarMove& mv);

// All admitted moves of index < max_index_exclusive.  Index-0 moves are
// listed once per facet with the canonical fresh label (max label + 1 unless
// supplied); index-t moves come from faces α of dimension d-t whose link is
// ∂β for a non-face β.
std::vector<BistellarMove> applicable_moves(
    const SimplicialComplex& x, int max_index_exclusive,
    std::optional<VertexLabel> fresh_label = std::nullopt);

// Verifies the g-vector update rule: under a move of index t,
// g_{j+1} changes by +1 at j = t, by -1 at j = d - t, and not at all when
// j = d/2 or elsewhere.
bool g_update_check(const SimplicialComplex& x, const BistellarMove& mv);

struct WalkResult {
  SimplicialComplex complex;
  MoveLog log;
};

// Random walk from the standard d-sphere, choosing uniformly among the moves
// of index < max_index_exclusive at each step (default: index < d/2, so the
// result is a certified tame sphere).  Deterministic in (d, steps, seed).
WalkResult tame_walk(int d, int steps, std::uint64_t seed,
                     int max_index_exclusive = -1);

// Replays a log from standard_sphere(dim, initial_labels), validating each
// move along the way.
SimplicialComplex replay(const MoveLog& log);

// JSON form: {"dim": d, "seed": s, "initial_labels": [...],
//             "moves": [{"alpha": [...], "beta": [...]}, ...]}
std::string move_log_to_json(const MoveLog& log);
MoveLog move_log_from_json(const std::string& text);

}  // namespace mucalc
