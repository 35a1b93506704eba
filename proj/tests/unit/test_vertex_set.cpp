#include "helly/vertex_set.hpp"

#include <set>

#include "doctest.h"
#include "helly/rng.hpp"

using namespace helly;

TEST_CASE("vertex set basics") {
  VertexSet s(130);
  CHECK(s.count() == 0);
  CHECK(s.empty());
  s.insert(0);
  s.insert(64);
  s.insert(129);
  s.insert(64);
  CHECK(s.count() == 3);
  CHECK(s.contains(64));
  CHECK_FALSE(s.contains(63));
  CHECK(s.first() == 0);
  s.erase(0);
  CHECK(s.first() == 64);
  CHECK(s.to_vector() == std::vector<Vertex>{64, 129});
}

TEST_CASE("full set and intersection") {
  VertexSet a = VertexSet::full_set(100);
  CHECK(a.count() == 100);
  VertexSet b(100);
  for (Vertex v = 0; v < 100; v += 3) b.insert(v);
  a.intersect_with(b);
  CHECK(a == b);
  CHECK(a.count() == 34);
}

TEST_CASE("vertex set mirrors std::set under random operations") {
  Rng rng(99);
  VertexSet s(200);
  std::set<Vertex> ref;
  for (int i = 0; i < 2000; ++i) {
    Vertex v = rng.vertex(200);
    switch (rng.bounded(3)) {
      case 0:
        s.insert(v);
        ref.insert(v);
        break;
      case 1:
        s.erase(v);
        ref.erase(v);
        break;
      default:
        CHECK(s.contains(v) == (ref.count(v) > 0));
    }
    CHECK(s.count() == static_cast<std::int64_t>(ref.size()));
  }
  std::vector<Vertex> got = s.to_vector();
  CHECK(got == std::vector<Vertex>(ref.begin(), ref.end()));
}

TEST_CASE("from_row_threshold keeps only reachable vertices within r") {
  std::vector<std::int32_t> row{0, 1, 2, 3, -1};
  VertexSet s = VertexSet::from_row_threshold(row, 2);
  CHECK(s.to_vector() == std::vector<Vertex>{0, 1, 2});
}
