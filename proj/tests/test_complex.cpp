#include <doctest.h>

#include <sstream>

#include "mucalc/complex.hpp"
#include "mucalc/harness.hpp"
#include "mucalc/rng.hpp"

using namespace mucalc;

namespace {

SimplicialComplex s2_4() {
  return SimplicialComplex::from_facets({{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
}

SimplicialComplex stacked5() {
  return SimplicialComplex::from_facets(
      {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 5}, {2, 4, 5}, {3, 4, 5}});
}

bool downward_closed(const SimplicialComplex& x) {
  for (const auto& f : x.all_faces()) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      Face sub = f;
      sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(i));
      if (!x.contains(sub)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("from_facets builds downward closures") {
  const auto s = s2_4();
  CHECK(s.dimension() == 2);
  CHECK(s.face_count(-1) == 1);
  CHECK(s.face_count(0) == 4);
  CHECK(s.face_count(1) == 6);
  CHECK(s.face_count(2) == 4);
  CHECK(downward_closed(s));

  const auto single = SimplicialComplex::from_facets({{1}});
  CHECK(single.dimension() == 0);
  CHECK(single.total_face_count() == 2);  // ∅ and {1}

  const auto st = stacked5();
  CHECK(st.dimension() == 2);
  CHECK(st.face_count(0) == 5);
  CHECK(st.face_count(1) == 9);
  CHECK(st.face_count(2) == 6);
  CHECK(downward_closed(st));

  CHECK_THROWS_AS(SimplicialComplex::from_facets({}), std::invalid_argument);

  // non-maximal and duplicate entries are absorbed
  const auto dup = SimplicialComplex::from_facets({{1, 2, 3}, {1, 2}, {1, 2, 3}});
  CHECK(dup == SimplicialComplex::simplex_closure({1, 2, 3}));
}

TEST_CASE("induced subcomplexes") {
  const auto s = s2_4();
  CHECK(s.induced({1, 2, 3}) == SimplicialComplex::simplex_closure({1, 2, 3}));

  // {2,3,4} spans an empty triangle in stacked5
  const auto st = stacked5();
  const auto tri = st.induced({2, 3, 4});
  CHECK(tri.dimension() == 1);
  CHECK(tri.face_count(1) == 3);
  CHECK_FALSE(tri.contains({2, 3, 4}));

  // labels outside the vertex set are ignored
  const auto e = s.induced({1, 2, 9});
  CHECK(e == SimplicialComplex::simplex_closure({1, 2}));

  CHECK(s.induced(Face(s.vertices().begin(), s.vertices().end())) == s);
}

TEST_CASE("links") {
  const auto s = s2_4();
  CHECK(s.link(1) == SimplicialComplex::simplex_boundary({2, 3, 4}));

  const auto st = stacked5();
  CHECK(st.link(5) == SimplicialComplex::simplex_boundary({2, 3, 4}));

  const auto l2 = st.link(2);  // 4-cycle 1-3-5-4-1
  CHECK(l2.dimension() == 1);
  CHECK(l2.face_count(0) == 4);
  CHECK(l2.face_count(1) == 4);
  CHECK(l2.contains({1, 3}));
  CHECK(l2.contains({3, 5}));
  CHECK(l2.contains({4, 5}));
  CHECK(l2.contains({1, 4}));
  CHECK_FALSE(l2.contains({1, 5}));
  CHECK_FALSE(l2.contains({3, 4}));

  CHECK_THROWS_AS(st.link(VertexLabel{77}), std::invalid_argument);
}

TEST_CASE("joins") {
  const auto s = s2_4();
  CHECK(join(s, SimplicialComplex()) == s);  // join with {∅}

  const auto cone =
      join(SimplicialComplex::simplex_closure({9}), SimplicialComplex::simplex_boundary({1, 2, 3}));
  CHECK(cone.dimension() == 2);
  CHECK(cone.face_count(0) == 4);
  CHECK(cone.contains({1, 2, 9}));
  CHECK_FALSE(cone.contains({1, 2, 3}));

  const auto c4 = join(SimplicialComplex::simplex_boundary({1, 2}),
                       SimplicialComplex::simplex_boundary({3, 4}));
  CHECK(c4.face_count(0) == 4);
  CHECK(c4.face_count(1) == 4);
  CHECK(c4.contains({1, 3}));
  CHECK_FALSE(c4.contains({1, 2}));

  CHECK_THROWS_AS(join(s, s), std::invalid_argument);
}

TEST_CASE("simplex closure, boundary, standard spheres") {
  CHECK(SimplicialComplex::simplex_boundary({7}) == SimplicialComplex());
  CHECK(SimplicialComplex::standard_sphere(2, {1, 2, 3, 4}) == s2_4());
  const auto c = SimplicialComplex::simplex_closure({1, 2});
  CHECK(c.total_face_count() == 4);
  CHECK_THROWS_AS(SimplicialComplex::simplex_closure({}), std::invalid_argument);
  CHECK_THROWS_AS(SimplicialComplex::simplex_boundary({}), std::invalid_argument);
  CHECK_THROWS_AS(SimplicialComplex::standard_sphere(2, {1, 2, 3}), std::invalid_argument);
}

TEST_CASE("skeleta") {
  const auto s = s2_4();
  const auto k4 = s.skeleton(1);
  CHECK(k4.face_count(1) == 6);
  CHECK(k4.dimension() == 1);

  const auto st = stacked5();
  const auto g = st.skeleton(1);
  CHECK(g.face_count(1) == 9);  // K5 minus the non-edge {1,5}
  CHECK_FALSE(g.contains({1, 5}));

  CHECK(st.skeleton(st.dimension()) == st);
  CHECK(st.skeleton(10) == st);
}

TEST_CASE("f and g vectors") {
  for (int d = 2; d <= 5; ++d) {
    const auto s = SimplicialComplex::standard_sphere(d);
    const GVector g = g_vector(s);
    for (int j = 0; j <= d + 1; ++j) {
      CHECK(g.g(j) == (j == 0 ? 1 : 0));
    }
  }

  const auto st = stacked5();
  const FVector f = f_vector(st);
  CHECK(f.f(-1) == 1);
  CHECK(f.f(0) == 5);
  CHECK(f.f(1) == 9);
  CHECK(f.f(2) == 6);
  const GVector g = g_vector(st);
  CHECK(g.g(0) == 1);
  CHECK(g.g(1) == 1);
  CHECK(g.g(2) == 0);
  // the inversion identity pins the trailing entry
  CHECK(f_from_g(g, 2) == f);
}

TEST_CASE("f_from_g round-trips on random complexes") {
  Rng rng(4242);
  for (int i = 0; i < 100; ++i) {
    const SimplicialComplex x = random_complex(rng, 8);
    CHECK(f_from_g(g_vector(x), x.dimension()) == f_vector(x));
  }
}

TEST_CASE("purity, pseudomanifolds, neighbourliness") {
  const auto s = s2_4();
  CHECK(is_pure(s));
  CHECK(is_pseudomanifold(s, false));
  CHECK(is_two_neighbourly(s));

  const auto st = stacked5();
  CHECK(is_pseudomanifold(st, false));
  CHECK_FALSE(is_two_neighbourly(st));

  const auto tri = SimplicialComplex::simplex_closure({1, 2, 3});
  CHECK(is_pseudomanifold(tri, true));
  CHECK_FALSE(is_pseudomanifold(tri, false));

  const auto wedge = SimplicialComplex::from_facets({{1, 2, 3}, {3, 4}});
  CHECK_FALSE(is_pure(wedge));
}

TEST_CASE("link of the apex of a join recovers the base") {
  Rng rng(99);
  for (int i = 0; i < 20; ++i) {
    const SimplicialComplex y = random_complex(rng, 5);
    const VertexLabel apex = y.vertices().empty() ? 0 : y.vertices().back() + 1;
    const auto cone = join(SimplicialComplex::simplex_closure({apex}), y);
    CHECK(cone.link(apex) == y);
  }
}

TEST_CASE("induced composes by intersection") {
  Rng rng(123);
  for (int i = 0; i < 20; ++i) {
    const SimplicialComplex x = random_complex(rng, 7);
    const int m = static_cast<int>(x.vertex_count());
    Face a, b;
    for (int v = 0; v < m; ++v) {
      if (rng.uniform_index(2)) a.push_back(x.vertices()[static_cast<std::size_t>(v)]);
      if (rng.uniform_index(2)) b.push_back(x.vertices()[static_cast<std::size_t>(v)]);
    }
    Face ab;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(ab));
    CHECK(x.induced(a).induced(b) == x.induced(ab));
  }
}

TEST_CASE("vertex counts in links leave room for the ambient complex") {
  Rng rng(321);
  for (int i = 0; i < 20; ++i) {
    const SimplicialComplex x = random_complex(rng, 7);
    bool all_equal = true;
    for (const VertexLabel v : x.vertices()) {
      const long long gap = static_cast<long long>(x.vertex_count()) -
                            static_cast<long long>(x.link(v).vertex_count());
      CHECK(gap >= 1);
      if (gap != 1) all_equal = false;
    }
    if (!x.vertices().empty()) CHECK(all_equal == is_two_neighbourly(x));
  }
}

TEST_CASE("facet list text format") {
  const std::string text =
      "# a stacked sphere\n"
      "a b c\n"
      "a b d\n"
      "a c d\n"
      "b c e   # comment\n"
      "b d e\n"
      "c d e\n";
  const NamedComplex nc = parse_facet_list(text);
  CHECK(nc.complex.dimension() == 2);
  CHECK(nc.complex.face_count(0) == 5);
  CHECK(nc.token_names[0] == "a");
  CHECK(nc.token_names[4] == "e");

  const std::string canon = write_facet_list(nc.complex, &nc.token_names);
  const NamedComplex again = parse_facet_list(canon);
  CHECK(again.complex == nc.complex);
  // canonical output is sorted and stable
  CHECK(write_facet_list(again.complex, &again.token_names) == canon);

  std::istringstream empty("# nothing\n\n");
  CHECK_THROWS_AS(read_facet_list(empty), std::invalid_argument);
}

TEST_CASE("downward closure holds after constructors") {
  Rng rng(777);
  for (int i = 0; i < 30; ++i) {
    const SimplicialComplex x = random_complex(rng, 6);
    CHECK(downward_closed(x));
    for (const VertexLabel v : x.vertices()) {
      CHECK(downward_closed(x.link(v)));
    }
  }
}
