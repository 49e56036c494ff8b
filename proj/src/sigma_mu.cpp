#include "mucalc/sigma_mu.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace mucalc {

Rational SigmaVector::sigma(int i) const {
  if (i < 0 || i > dim) return Rational(0);
  return values[static_cast<std::size_t>(i)];
}

Rational MuVector::mu(int i) const {
  if (i < 0 || i > dim) return Rational(0);
  return values[static_cast<std::size_t>(i)];
}

SigmaVector sigma_vector(const SimplicialComplex& x, const FieldSpec& f) {
  const int d = x.dimension();
  const std::size_t m = x.vertex_count();
  SigmaVector out;
  out.dim = d;
  if (d < 0) return out;
  out.values.assign(static_cast<std::size_t>(d) + 1, Rational(0));

  // A = ∅ contributes -1 to σ_0 and nothing in higher degrees.
  out.values[0] = Rational(-1);

  // weight 1/binom(m, j) per subset cardinality
  std::vector<Rational> weight(m + 1);
  for (std::size_t j = 0; j <= m; ++j) {
    weight[j] = Rational(Integer(1), binomial(static_cast<long long>(m),
                                              static_cast<long long>(j)));
  }

  const std::uint64_t full =
      m == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << m) - 1);
  for (std::uint64_t a = 1;; ++a) {
    const BettiData b = betti_reduced_induced(x, a, f);
    const auto& w = weight[static_cast<std::size_t>(std::popcount(a))];
    for (int i = 0; i <= b.dim; ++i) {
      const long long bi = b.reduced(i);
      if (bi != 0) out.values[static_cast<std::size_t>(i)] += bi * w;
    }
    if (a == full) break;
  }
  return out;
}

MuVector mu_vector(const SimplicialComplex& x, const FieldSpec& f) {
  const int d = x.dimension();
  MuVector out;
  out.dim = d;
  if (d < 0) return out;
  out.values.assign(static_cast<std::size_t>(d) + 1, Rational(0));
  for (const VertexLabel v : x.vertices()) {
    const SimplicialComplex lk = x.link(v);
    const Rational denom(1 + static_cast<long long>(lk.vertex_count()));
    const SigmaVector sl = sigma_vector(lk, f);
    out.values[0] += 1 / denom;
    for (int i = 1; i <= d; ++i) {
      const Rational num = (i == 1 ? Rational(1) : Rational(0)) + sl.sigma(i - 1);
      if (num != 0) out.values[static_cast<std::size_t>(i)] += num / denom;
    }
  }
  return out;
}

MuVector mu_via_pairs(const SimplicialComplex& x, const FieldSpec& f) {
  const int d = x.dimension();
  const std::size_t m = x.vertex_count();
  MuVector out;
  out.dim = d;
  if (d < 0) return out;
  out.values.assign(static_cast<std::size_t>(d) + 1, Rational(0));

  std::vector<Rational> weight(m + 1);  // 1/(m * binom(m-1, j-1)) for #B = j
  for (std::size_t j = 1; j <= m; ++j) {
    weight[j] = Rational(Integer(1),
                         Integer(m) * binomial(static_cast<long long>(m) - 1,
                                               static_cast<long long>(j) - 1));
  }

  const std::uint64_t full =
      m == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << m) - 1);
  for (std::uint64_t bmask = 1;; ++bmask) {
    const int j = std::popcount(bmask);
    const auto& w = weight[static_cast<std::size_t>(j)];
    // all covering pairs A ⋖ B
    for (std::uint64_t rest = bmask; rest;) {
      const std::uint64_t b = rest & (~rest + 1);
      rest ^= b;
      const PairBetti pb = betti_pair_masks(x, bmask, bmask ^ b, f);
      for (int i = 0; i <= d; ++i) {
        const long long bi = pb.betti(i);
        if (bi != 0) out.values[static_cast<std::size_t>(i)] += bi * w;
      }
    }
    if (bmask == full) break;
  }
  return out;
}

Rational a_ell(const SigmaVector& sv, int ell) {
  if (ell < 0 || ell > sv.dim) throw std::invalid_argument("a_ell: index out of range");
  Rational a(0);
  for (int i = 0; i <= ell; ++i) {
    a += parity_sign(ell - i) * sv.sigma(i);
  }
  return a;
}

SigmaStepReport sigma_step(const SigmaVector& sigma_r, const BistellarMove& mv,
                           long long m_after, int d) {
  const int t = mv.index();
  if (t < 0 || t > d) throw std::invalid_argument("move index out of range");
  if (static_cast<int>(mv.alpha.size() + mv.beta.size()) != d + 2) {
    throw std::invalid_argument("move not well-formed for this dimension");
  }

  SigmaStepReport rep;
  rep.t = t;
  rep.d = d;
  rep.c = (t == 0)   ? Rational(m_after + 1, m_after)
          : (t == d) ? Rational(m_after + 1, m_after + 2)
                     : Rational(1);

  for (int i = 0; i <= d; ++i) {
    if (i == t - 1 || i == t || i == d - t - 1 || i == d - t) continue;
    rep.exact.emplace_back(i, rep.c * sigma_r.sigma(i));
  }

  if (2 * t == d) {
    rep.no_control = true;  // only σ_{d/2}(S)-σ_{d/2}(R) = σ_{d/2-1}(S)-σ_{d/2-1}(R) survives
    return rep;
  }

  const Rational bump =
      Rational(m_after + 1, d + 3) / Rational(binomial(d + 2, t + 1));
  rep.diffs.emplace_back(t, rep.c * (sigma_r.sigma(t) - sigma_r.sigma(t - 1)) + bump);
  rep.diffs.emplace_back(
      d - t, rep.c * (sigma_r.sigma(d - t) - sigma_r.sigma(d - t - 1)) - bump);

  auto push_strict = [&](int index, bool greater) {
    for (const auto& s : rep.stricts) {
      if (s.index == index) return;  // collisions repeat the same claim
    }
    rep.stricts.push_back({index, greater, rep.c * sigma_r.sigma(index)});
  };
  if (t != 0) push_strict(t - 1, false);
  if (t != d) push_strict(d - t - 1, true);
  push_strict(t, true);
  push_strict(d - t, false);
  return rep;
}

AlternatingTracker::Entry track_a(const MoveLog& log, int ell) {
  const int d = log.dim;
  if (ell < 0 || 2 * (ell + 1) > d) {
    throw std::invalid_argument("alternating sum index outside the controlled range");
  }
  AlternatingTracker::Entry e;
  e.ell = ell;
  e.value = Rational(parity_sign(ell + 1));  // a_ℓ of the standard sphere
  e.status = AlternatingTracker::Status::exact;

  long long m = d + 2;
  for (const auto& mv : log.moves) {
    const int t = mv.index();
    if (2 * t >= d) throw std::invalid_argument("move log is not tame");
    if (t == 0) {
      ++m;
      e.value = Rational(m + 1, m) * e.value +
                Rational(parity_sign(ell) * (m + 1),
                         static_cast<long long>(d + 2) * (d + 3));
    } else if (t <= ell) {
      e.value += Rational(parity_sign(ell - t) * (m + 1), d + 3) /
                 Rational(binomial(d + 2, t + 1));
    } else if (t == ell + 1) {
      e.status = AlternatingTracker::Status::upper_bound;
    }
    // t >= ell + 2 leaves the sum unchanged
  }
  return e;
}

AlternatingTracker track_a(const MoveLog& log) {
  AlternatingTracker tr;
  for (int ell = 0; 2 * (ell + 1) <= log.dim; ++ell) {
    tr.entries.push_back(track_a(log, ell));
  }
  return tr;
}

}  // namespace mucalc
