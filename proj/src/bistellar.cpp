#include "mucalc/bistellar.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "mucalc/rng.hpp"

namespace mucalc {

namespace {

void check_well_formed(const SimplicialComplex& x, const BistellarMove& mv) {
  if (mv.alpha.empty() || mv.beta.empty()) {
    throw std::invalid_argument("bistellar move needs nonempty alpha and beta");
  }
  if (!faces_disjoint(mv.alpha, mv.beta)) {
    throw std::invalid_argument("bistellar move needs disjoint alpha and beta");
  }
  const int d = x.dimension();
  if (static_cast<int>(mv.alpha.size() + mv.beta.size()) != d + 2) {
    throw std::invalid_argument("bistellar move needs #alpha + #beta = d + 2");
  }
}

}  // namespace

bool MoveLog::tame() const {
  for (const auto& mv : moves) {
    if (2 * mv.index() >= dim) return false;
  }
  return true;
}

std::string MoveLog::describe() const {
  std::ostringstream os;
  os << "walk(d=" << dim << ",steps=" << moves.size() << ",seed=" << seed << ")";
  return os.str();
}

bool admits(const SimplicialComplex& x, const BistellarMove& mv) {
  check_well_formed(x, mv);
  const SimplicialComplex pattern =
      join(SimplicialComplex::simplex_closure(mv.alpha),
           SimplicialComplex::simplex_boundary(mv.beta));
  return x.induced(face_union(mv.alpha, mv.beta)) == pattern;
}

SimplicialComplex apply_move(const SimplicialComplex& x, const BistellarMove& mv) {
  if (!admits(x, mv)) {
    throw std::invalid_argument(
        "move not admitted: closure(alpha) * boundary(beta) is not induced on "
        "alpha " + face_to_string(mv.alpha) + ", beta " + face_to_string(mv.beta));
  }
  std::set<Face> faces;
  for (auto& f : x.all_faces()) faces.insert(f);
  const SimplicialComplex removed =
      join(SimplicialComplex::simplex_closure(mv.alpha),
           SimplicialComplex::simplex_boundary(mv.beta));
  const SimplicialComplex added =
      join(SimplicialComplex::simplex_closure(mv.beta),
           SimplicialComplex::simplex_boundary(mv.alpha));
  for (auto& f : removed.all_faces()) faces.erase(f);
  for (auto& f : added.all_faces()) faces.insert(f);
  // from_faces validates downward closure, which an admitted move preserves
  return SimplicialComplex::from_faces({faces.begin(), faces.end()});
}

std::vector<BistellarMove> applicable_moves(const SimplicialComplex& x,
                                            int max_index_exclusive,
                                            std::optional<VertexLabel> fresh_label) {
  const int d = x.dimension();
  if (max_index_exclusive < 1 || max_index_exclusive > d + 1) {
    throw std::invalid_argument("move index bound out of range");
  }
  const VertexLabel fresh = fresh_label.value_or(
      x.vertex_count() == 0 ? 0 : x.vertices().back() + 1);
  if (x.has_vertex(fresh)) {
    throw std::invalid_argument("fresh label already in use");
  }

  std::vector<BistellarMove> out;
  for (auto fm : x.facet_masks()) {
    if (std::popcount(fm) == d + 1) {
      out.push_back(BistellarMove{x.face_from_mask(fm), Face{fresh}});
    }
  }
  for (int t = 1; t < max_index_exclusive && t <= d; ++t) {
    // α of dimension d-t whose link is the boundary of a non-face β
    for (auto am : x.face_masks()) {
      if (std::popcount(am) != d - t + 1) continue;
      const SimplicialComplex lk = x.link(x.face_from_mask(am));
      if (static_cast<int>(lk.vertex_count()) != t + 1) continue;
      const Face beta(lk.vertices().begin(), lk.vertices().end());
      if (x.contains(beta)) continue;
      if (lk != SimplicialComplex::simplex_boundary(beta)) continue;
      out.push_back(BistellarMove{x.face_from_mask(am), beta});
    }
  }
  return out;
}

bool g_update_check(const SimplicialComplex& x, const BistellarMove& mv) {
  const int d = x.dimension();
  const int t = mv.index();
  const GVector before = g_vector(x);
  const GVector after = g_vector(apply_move(x, mv));
  for (int j = 0; j <= d; ++j) {
    Integer expect = 0;
    if (j == t && 2 * j != d) expect = 1;
    if (j == d - t && 2 * j != d) expect = -1;
    if (after.g(j + 1) - before.g(j + 1) != expect) return false;
  }
  return true;
}

WalkResult tame_walk(int d, int steps, std::uint64_t seed, int max_index_exclusive) {
  if (d < 1) throw std::invalid_argument("walk dimension must be at least 1");
  if (steps < 0) throw std::invalid_argument("negative step count");
  if (max_index_exclusive < 0) max_index_exclusive = (d + 1) / 2;  // index < d/2

  WalkResult res;
  res.log.dim = d;
  res.log.seed = seed;
  res.log.initial_labels.resize(static_cast<std::size_t>(d) + 2);
  for (std::size_t i = 0; i < res.log.initial_labels.size(); ++i) {
    res.log.initial_labels[i] = static_cast<VertexLabel>(i);
  }
  res.complex = SimplicialComplex::standard_sphere(d, res.log.initial_labels);

  Rng rng(seed);
  VertexLabel fresh = static_cast<VertexLabel>(d + 2);  // above all labels ever used
  for (int s = 0; s < steps; ++s) {
    const auto cands = applicable_moves(res.complex, max_index_exclusive, fresh);
    if (cands.empty()) throw std::logic_error("no applicable move");
    const BistellarMove mv = cands[rng.uniform_index(cands.size())];
    res.complex = apply_move(res.complex, mv);
    res.log.moves.push_back(mv);
    if (mv.index() == 0) ++fresh;
  }
  return res;
}

SimplicialComplex replay(const MoveLog& log) {
  SimplicialComplex x = SimplicialComplex::standard_sphere(log.dim, log.initial_labels);
  for (const auto& mv : log.moves) x = apply_move(x, mv);
  return x;
}

std::string move_log_to_json(const MoveLog& log) {
  nlohmann::json j;
  j["dim"] = log.dim;
  j["seed"] = log.seed;
  j["initial_labels"] = log.initial_labels;
  j["moves"] = nlohmann::json::array();
  for (const auto& mv : log.moves) {
    j["moves"].push_back({{"alpha", mv.alpha}, {"beta", mv.beta}});
  }
  return j.dump(2);
}

MoveLog move_log_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  MoveLog log;
  log.dim = j.at("dim").get<int>();
  log.seed = j.at("seed").get<std::uint64_t>();
  log.initial_labels = j.at("initial_labels").get<std::vector<VertexLabel>>();
  for (const auto& m : j.at("moves")) {
    BistellarMove mv;
    mv.alpha = normalized_face(m.at("alpha").get<Face>());
    mv.beta = normalized_face(m.at("beta").get<Face>());
    log.moves.push_back(std::move(mv));
  }
  return log;
}

}  // namespace mucalc
