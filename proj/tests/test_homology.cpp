#include <doctest.h>

#include <map>

#include "mucalc/harness.hpp"
#include "mucalc/homology.hpp"
#include "mucalc/rng.hpp"

using namespace mucalc;

namespace {

const FieldSpec kQ = FieldSpec::rationals();
const FieldSpec kF2 = FieldSpec::prime(2);

SimplicialComplex relabeled(const SimplicialComplex& x, Rng& rng) {
  // random order-scrambling relabel; homology must not notice
  std::vector<VertexLabel> perm(x.vertex_count());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<VertexLabel>(i);
  for (std::size_t i = perm.size(); i > 1; --i) {
    std::swap(perm[i - 1], perm[rng.uniform_index(i)]);
  }
  std::map<VertexLabel, VertexLabel> to;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    to[x.vertices()[i]] = static_cast<VertexLabel>(perm[i] * 7 + 3);
  }
  std::vector<Face> facets;
  for (const auto& f : x.facet_list()) {
    Face g;
    for (auto v : f) g.push_back(to[v]);
    facets.push_back(normalized_face(g));
  }
  return SimplicialComplex::from_facets(facets);
}

}  // namespace

TEST_CASE("field specs accept 0 and primes only") {
  CHECK_NOTHROW(FieldSpec(0));
  CHECK_NOTHROW(FieldSpec(2));
  CHECK_NOTHROW(FieldSpec(7919));
  CHECK_THROWS_AS(FieldSpec(4), std::invalid_argument);
  CHECK_THROWS_AS(FieldSpec(1), std::invalid_argument);
}

TEST_CASE("reduced Betti numbers of basic complexes") {
  const auto s2 = library_complex("s2");
  for (const auto& f : {kQ, kF2, FieldSpec::prime(5)}) {
    const BettiData b = betti_reduced(s2, f);
    CHECK(b.reduced(-1) == 0);
    CHECK(b.reduced(0) == 0);
    CHECK(b.reduced(1) == 0);
    CHECK(b.reduced(2) == 1);
  }

  const auto empty_triangle = library_complex("stacked5").induced({2, 3, 4});
  const BettiData bt = betti_reduced(empty_triangle, kQ);
  CHECK(bt.reduced(0) == 0);
  CHECK(bt.reduced(1) == 1);

  // the one-point complex and {∅}
  const BettiData bp = betti_reduced(SimplicialComplex::from_facets({{3}}), kQ);
  CHECK(bp.all_zero());
  const BettiData be = betti_reduced(SimplicialComplex(), kQ);
  CHECK(be.reduced(-1) == 1);
}

TEST_CASE("projective plane separates characteristics") {
  const auto rp2 = library_complex("rp2_6");
  const BettiData b2 = betti_reduced(rp2, kF2);
  CHECK(b2.reduced(0) == 0);
  CHECK(b2.reduced(1) == 1);
  CHECK(b2.reduced(2) == 1);
  const BettiData b0 = betti_reduced(rp2, kQ);
  CHECK(b0.all_zero());
  const BettiData b3 = betti_reduced(rp2, FieldSpec::prime(3));
  CHECK(b3.all_zero());
}

TEST_CASE("relative homology of pairs") {
  const auto s2 = library_complex("s2");  // vertex labels 0..3
  const Face v{0, 1, 2, 3};

  const PairBetti top = betti_pair(s2, v, {0, 1, 2}, kQ);
  CHECK(top.betti(0) == 0);
  CHECK(top.betti(1) == 0);
  CHECK(top.betti(2) == 1);

  const PairBetti same = betti_pair(s2, {1, 2}, {1, 2}, kF2);
  CHECK(same.betti(0) == 0);
  CHECK(same.betti(1) == 0);

  const PairBetti edge = betti_pair(s2, {1, 2}, {1}, kQ);
  CHECK(edge.betti(0) == 0);
  CHECK(edge.betti(1) == 0);
  CHECK(edge.betti(2) == 0);

  CHECK_THROWS_AS(betti_pair(s2, {1, 2}, {3}, kQ), std::invalid_argument);
}

TEST_CASE("pair ranks satisfy the Euler difference identity") {
  Rng rng(5150);
  for (int trial = 0; trial < 15; ++trial) {
    const SimplicialComplex x = random_complex(rng, 6);
    const std::size_t m = x.vertex_count();
    const std::uint64_t full = (std::uint64_t{1} << m) - 1;
    const std::uint64_t bmask = rng.next() & full;
    const std::uint64_t amask = rng.next() & bmask;
    for (const auto& f : {kQ, kF2}) {
      const PairBetti pb = betti_pair_masks(x, bmask, amask, f);
      Rational alt(0);
      for (int i = 0; i <= x.dimension(); ++i) alt += parity_sign(i) * pb.betti(i);
      // χ(X[B]) - χ(X[A]) over faces of dimension >= 0
      long long chi = 0;
      for (auto fm : x.face_masks()) {
        if (fm == 0) continue;
        const int sgn = parity_sign(std::popcount(fm) - 1);
        if ((fm & ~bmask) == 0) chi += sgn;
        if ((fm & ~amask) == 0) chi -= sgn;
      }
      CHECK(alt == Rational(chi));
    }
  }
}

TEST_CASE("Euler relation from the augmented chain complex") {
  Rng rng(8181);
  for (int trial = 0; trial < 20; ++trial) {
    const SimplicialComplex x = random_complex(rng, 7);
    for (const auto& f : {kQ, kF2}) {
      const BettiData b = betti_reduced(x, f);
      Rational lhs(0), rhs(0);
      for (int i = -1; i <= x.dimension(); ++i) {
        lhs += parity_sign(i) * Rational(x.face_count(i));
        rhs += parity_sign(i) * Rational(b.reduced(i));
      }
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("Betti numbers are invariant under relabeling") {
  Rng rng(2024);
  for (int trial = 0; trial < 10; ++trial) {
    const SimplicialComplex x = random_complex(rng, 7);
    const SimplicialComplex y = relabeled(x, rng);
    for (const auto& f : {kQ, kF2}) {
      CHECK(same_betti(betti_reduced(x, f), betti_reduced(y, f)));
    }
  }
}

TEST_CASE("inclusion-induced maps") {
  const auto s2 = library_complex("s2");
  // contractible image: zero domain in positive degrees
  CHECK(induced_injective(s2, {0, 1, 2}, 1, kQ));
  CHECK(induced_injective(s2, {0, 1, 2}, 2, kQ));

  const auto st = library_complex("stacked5");
  const InducedMapInfo info = induced_map_info(st, {2, 3, 4}, 1, kQ);
  CHECK(info.domain_betti == 1);
  CHECK(info.rank == 0);
  CHECK_FALSE(info.injective);

  // identity inclusion
  const InducedMapInfo full = induced_map_info(st, {1, 2, 3, 4, 5}, 2, kQ);
  CHECK(full.domain_betti == 1);
  CHECK(full.rank == 1);
  CHECK(full.injective);
}

TEST_CASE("projective plane is injectivity-clean over F2") {
  const auto rp2 = library_complex("rp2_6");
  const InjectivityScanner sc(rp2, kF2);
  for (int j = 0; j <= 2; ++j) {
    CHECK(sc.all_injective(j));
  }
  // over the rationals degree-1 injectivity fails for some induced subcomplex
  const InjectivityScanner sq(rp2, kQ);
  CHECK_FALSE(sq.all_injective(1));
}

TEST_CASE("homology ball and sphere recognition") {
  for (int d = 1; d <= 4; ++d) {
    Face a;
    for (int i = 0; i <= d + 1; ++i) a.push_back(static_cast<VertexLabel>(i));
    const auto ball = SimplicialComplex::simplex_closure(a);
    CHECK(is_homology_ball(ball, kF2));
    CHECK(boundary_complex(ball, kF2) == SimplicialComplex::simplex_boundary(a));
    CHECK(is_homology_sphere(SimplicialComplex::simplex_boundary(a), kF2));
  }

  const auto two_tets = SimplicialComplex::from_facets({{1, 2, 3, 4}, {2, 3, 4, 5}});
  CHECK(is_homology_ball(two_tets, kQ));
  CHECK(boundary_complex(two_tets, kQ) == library_complex("stacked5"));

  const auto octa = library_complex("octahedron");
  CHECK(is_closed_homology_manifold(octa, kQ));
  CHECK(is_homology_sphere(octa, kQ));
  CHECK_FALSE(is_homology_ball(octa, kQ));

  const auto rp2 = library_complex("rp2_6");
  CHECK(is_closed_homology_manifold(rp2, kF2));
  CHECK_FALSE(is_homology_sphere(rp2, kF2));
  // acyclic over Q but closed: the boundary criterion rejects it as a ball
  CHECK(betti_reduced(rp2, kQ).all_zero());
  CHECK_FALSE(is_homology_ball(rp2, kQ));

  CHECK_THROWS_AS(is_closed_homology_manifold(
                      SimplicialComplex::from_facets({{1, 2, 3}, {3, 4}}), kQ),
                  std::invalid_argument);
}

TEST_CASE("links of closed manifold vertices are spheres") {
  for (const std::string name : {"s3", "octahedron", "torus7", "rp2_6"}) {
    const auto& m = library_complex(name);
    const FieldSpec f = name == "rp2_6" ? kF2 : kQ;
    REQUIRE(is_closed_homology_manifold(m, f));
    for (const VertexLabel v : m.vertices()) {
      CHECK(is_homology_sphere(m.link(v), f));
    }
  }
}

TEST_CASE("torus homology") {
  const auto t = library_complex("torus7");
  for (const auto& f : {kQ, kF2}) {
    const BettiData b = betti_reduced(t, f);
    CHECK(b.reduced(0) == 0);
    CHECK(b.reduced(1) == 2);
    CHECK(b.reduced(2) == 1);
  }
  CHECK(is_closed_homology_manifold(t, kQ));
  CHECK_FALSE(is_homology_sphere(t, kQ));
}
