#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"

#include <knotmat/knotmat.hpp>

#include <set>

using namespace knotmat;

TEST_CASE("parse accepts plain, slash and bracket forms") {
  const Diagram a = Diagram::parse("X 1 4 2 5 / X 3 6 4 1 / X 5 2 6 3");
  CHECK(a.crossing_count() == 3);
  CHECK(a.edge_count() == 6);

  const Diagram b = Diagram::parse("X[1,4,2,5]\nX[3,6,4,1]\nX[5,2,6,3]");
  CHECK(b.crossings() == a.crossings());

  const Diagram c = Diagram::parse("# trefoil\nX 1 4 2 5\nX 3 6 4 1  # middle\nX 5 2 6 3\n");
  CHECK(c.crossings() == a.crossings());
}

TEST_CASE("parse unknot token") {
  const Diagram u = Diagram::parse("unknot");
  CHECK(u.is_unknot());
  CHECK(u.crossing_count() == 0);
  CHECK(u.edge_count() == 0);
}

TEST_CASE("parse rejects malformed records") {
  CHECK_THROWS_AS_MESSAGE(Diagram::parse("X 1 2 3"), Error, doctest::Contains("MalformedRecord"));
  CHECK_THROWS_AS(Diagram::parse("X 1 2 3 foo"), Error);
  CHECK_THROWS_AS(Diagram::parse("Y 1 2 3 4"), Error);
  CHECK_THROWS_AS(Diagram::parse("X 1 2 3 0"), Error);
  CHECK_THROWS_AS(Diagram::parse(""), Error);
  try {
    Diagram::parse("X 1 2 3");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::malformed_record);
  }
}

TEST_CASE("parse rejects bad incidence") {
  try {
    Diagram::parse("X 1 2 3 4");
    FAIL("expected BadIncidence");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::bad_incidence);
  }
}

TEST_CASE("parse rejects non-knot maps") {
  // split union of two trefoils: too many faces
  try {
    Diagram::parse(
        "X 1 4 2 5 / X 3 6 4 1 / X 5 2 6 3 / "
        "X 7 10 8 11 / X 9 12 10 7 / X 11 8 12 9");
    FAIL("expected NotPlanarKnot");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_planar_knot);
  }
  // connected two-component link (Hopf)
  try {
    Diagram::parse("X 1 4 2 3 / X 3 2 4 1");
    FAIL("expected NotPlanarKnot");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_planar_knot);
  }
}

TEST_CASE("face counts match Euler characteristic") {
  CHECK(faces(fixtures::diagram("trefoil")).region_count() == 5);
  CHECK(faces(fixtures::diagram("8_19")).region_count() == 10);
  CHECK(faces(Diagram::unknot()).region_count() == 2);

  for (const auto& f : fixtures::corpus()) {
    const Diagram d = Diagram::parse(f.pd, f.name);
    CAPTURE(f.name);
    CHECK(d.crossing_count() == f.crossings);
    const RegionSet rs = faces(d);
    CHECK(rs.region_count() == d.crossing_count() + 2);
    int corners = 0;
    for (const auto& r : rs.regions()) corners += static_cast<int>(r.size());
    CHECK(corners == 4 * d.crossing_count());
  }
}

TEST_CASE("every corner belongs to exactly one region") {
  const Diagram d = fixtures::diagram("6_2");
  const RegionSet rs = faces(d);
  std::set<std::pair<int, int>> seen;
  for (int id = 0; id < rs.region_count(); ++id)
    for (const Corner& c : rs.regions()[static_cast<size_t>(id)]) {
      CHECK(rs.region_of(c) == id);
      CHECK(seen.insert({c.crossing, c.corner}).second);
    }
  CHECK(static_cast<int>(seen.size()) == 4 * d.crossing_count());
}

TEST_CASE("checkerboard classes for the trefoil") {
  const Diagram d = fixtures::diagram("trefoil");
  const RegionSet rs = faces(d);
  const auto shadings = oracles::brute_force_shadings(d, rs);
  CHECK(shadings.size() == 2);  // unique up to swap

  const Checkerboard cb = Checkerboard::compute(d, rs);
  std::vector<bool> got(static_cast<size_t>(rs.region_count()));
  for (int r = 0; r < rs.region_count(); ++r) got[static_cast<size_t>(r)] = cb.is_shaded(r);
  CHECK((got == shadings[0] || got == shadings[1]));

  const int b = cb.shaded_count();
  CHECK((b == 2 || b == 3));
  // swapping the selector exchanges the classes
  int other = -1;
  for (int r = 0; r < rs.region_count(); ++r)
    if (!cb.is_shaded(r)) other = r;
  const Checkerboard swapped = Checkerboard::compute(d, rs, other);
  CHECK(swapped.shaded_count() == rs.region_count() - b);
  for (int r = 0; r < rs.region_count(); ++r)
    CHECK(swapped.is_shaded(r) == !cb.is_shaded(r));
}

TEST_CASE("checkerboard ordering puts the shaded class first") {
  for (const auto& name : {"5_2", "8_19", "granny"}) {
    const Diagram d = fixtures::diagram(name);
    const RegionSet rs = faces(d);
    const Checkerboard cb = Checkerboard::compute(d, rs);
    for (int j = 0; j < rs.region_count(); ++j) {
      CHECK(cb.is_shaded(cb.ordering()[static_cast<size_t>(j)]) == (j < cb.shaded_count()));
      CHECK(cb.column_of(cb.ordering()[static_cast<size_t>(j)]) == j);
    }
  }
}

TEST_CASE("explicit region ordering is validated") {
  const Diagram d = fixtures::diagram("8_19");
  const RegionSet rs = faces(d);
  const Checkerboard cb =
      Checkerboard::with_ordering(d, rs, fixtures::k819_region_order);
  CHECK(cb.shaded_count() == 5);
  CHECK(cb.ordering() == fixtures::k819_region_order);

  std::vector<int> bad = fixtures::k819_region_order;
  std::swap(bad[0], bad[5]);  // mixes the classes
  CHECK_THROWS_AS(Checkerboard::with_ordering(d, rs, bad), Error);
  bad = fixtures::k819_region_order;
  bad[0] = bad[1];
  CHECK_THROWS_AS(Checkerboard::with_ordering(d, rs, bad), Error);
}

TEST_CASE("8_19 shading with the reference selector has five shaded regions") {
  const Diagram d = fixtures::diagram("8_19");
  const RegionSet rs = faces(d);
  const Checkerboard cb = Checkerboard::compute(d, rs, fixtures::k819_selector);
  CHECK(cb.shaded_count() == 5);
}

TEST_CASE("goeritz index flips with the shaded class") {
  const Diagram d = fixtures::diagram("7_3");
  const RegionSet rs = faces(d);
  const Checkerboard cb = Checkerboard::compute(d, rs);
  int other = -1;
  for (int r = 0; r < rs.region_count(); ++r)
    if (!cb.is_shaded(r)) other = r;
  const Checkerboard swapped = Checkerboard::compute(d, rs, other);
  for (int c = 0; c < d.crossing_count(); ++c)
    CHECK(goeritz_index(d, rs, cb, c) == -goeritz_index(d, rs, swapped, c));
}

TEST_CASE("goeritz index is invariant under edge relabeling") {
  const Diagram a = fixtures::diagram("trefoil");
  // same diagram, edge labels shifted by 10
  const Diagram b = Diagram::parse("X 11 14 12 15 / X 13 16 14 11 / X 15 12 16 13");
  const RegionSet ra = faces(a), rb = faces(b);
  const Checkerboard ca = Checkerboard::compute(a, ra), cbd = Checkerboard::compute(b, rb);
  CHECK(goeritz_indices(a, ra, ca) == goeritz_indices(b, rb, cbd));
}

TEST_CASE("primality proxy") {
  CHECK(is_prime_diagram(fixtures::diagram("trefoil"), faces(fixtures::diagram("trefoil"))));
  for (const auto& f : fixtures::corpus()) {
    const Diagram d = Diagram::parse(f.pd, f.name);
    CAPTURE(f.name);
    CHECK(is_prime_diagram(d, faces(d)) == f.prime);
  }
}

TEST_CASE("granny fixture has a face pair sharing two edges") {
  const Diagram d = fixtures::diagram("granny");
  const RegionSet rs = faces(d);
  std::map<std::pair<int, int>, int> count;
  for (auto [f, g] : rs.edge_flanks()) ++count[{std::min(f, g), std::max(f, g)}];
  int max_shared = 0;
  for (const auto& [pair, n] : count) max_shared = std::max(max_shared, n);
  CHECK(max_shared >= 2);
}
