#include <set>

#include "adlv/root_data.hpp"
#include "doctest.h"

using namespace adlv;

namespace {

// orbit of a regular vector under the simple reflections, computed by hand
size_t orbit_size(const RootDatum& R) {
  std::vector<Q> start(R.dim());
  QVec v{};
  for (int i = 0; i < R.dim(); ++i) v[i] = Q(7 * i + 3, 5 + i);
  std::set<std::vector<Q>> seen;
  std::vector<QVec> todo{v};
  auto key = [&](const QVec& p) { return std::vector<Q>(p.begin(), p.begin() + R.dim()); };
  seen.insert(key(v));
  while (!todo.empty()) {
    QVec p = todo.back();
    todo.pop_back();
    for (int i = 0; i < R.rank(); ++i) {
      Q a = R.pair(i, p);
      QVec q = p;
      for (int k = 0; k < R.dim(); ++k) q[k] -= a * Q(R.coroot(i)[k]);
      if (seen.insert(key(q)).second) todo.push_back(q);
    }
  }
  return seen.size();
}

}  // namespace

TEST_CASE("root and Weyl group counts") {
  struct Row {
    const char* t;
    int r;
    int roots;
    int w;
    int h;
  };
  for (auto row : {Row{"A", 1, 2, 2, 2}, Row{"A", 2, 6, 6, 3}, Row{"A", 3, 12, 24, 4}, Row{"A", 4, 20, 120, 5},
                   Row{"B", 2, 8, 8, 4}, Row{"C", 2, 8, 8, 4}, Row{"G", 2, 12, 12, 6}, Row{"B", 3, 18, 48, 6},
                   Row{"C", 3, 18, 48, 6}, Row{"D", 4, 24, 192, 6}}) {
    auto R = RootDatum::build(row.t, row.r, Variant::SimplyConnected);
    CAPTURE(R->label());
    CHECK(R->num_roots() == row.roots);
    CHECK(R->wsize() == row.w);
    CHECK(R->coxeter_number() == row.h);
    CHECK(orbit_size(*R) == static_cast<size_t>(row.w));
  }
}

TEST_CASE("simple roots come first and negatives are offset by num_pos") {
  auto R = RootDatum::build("G", 2, Variant::Adjoint);
  for (int b = 0; b < R->num_roots(); ++b) {
    IVec n = R->root(b);
    for (auto& c : n) c = -c;
    CHECK(R->root(R->neg(b)) == n);
    CHECK(R->pair(b, R->coroot(b)) == 2);
  }
  for (int i = 0; i < R->rank(); ++i) CHECK(R->height(i) == 1);
}

TEST_CASE("Weyl group tables") {
  for (auto t : {"A", "C", "G"}) {
    auto R = RootDatum::build(t, 2, Variant::SimplyConnected);
    for (int a = 0; a < R->wsize(); ++a) {
      CHECK(R->wmul(a, R->winv(a)) == 0);
      int inversions = 0;
      for (int b = 0; b < R->num_pos(); ++b) inversions += !R->positive(R->wroot(a, b));
      CHECK(R->wlen(a) == inversions);
      CHECK(static_cast<int>(R->wword(a).size()) == R->wlen(a));
      for (int b = 0; b < R->wsize(); ++b)
        for (int c = 0; c < R->wsize(); c += 3)
          CHECK(R->wmul(R->wmul(a, b), c) == R->wmul(a, R->wmul(b, c)));
    }
    CHECK(R->wlen(R->w0()) == R->num_pos());
  }
}

TEST_CASE("fundamental groups") {
  struct Row {
    const char* t;
    int r;
    Variant v;
    long long order;
  };
  for (auto row : {Row{"A", 2, Variant::SimplyConnected, 1}, Row{"A", 2, Variant::Adjoint, 3},
                   Row{"A", 3, Variant::Adjoint, 4}, Row{"C", 2, Variant::Adjoint, 2}, Row{"G", 2, Variant::Adjoint, 1},
                   Row{"D", 4, Variant::Adjoint, 4}, Row{"GL", 3, Variant::GL, -1}}) {
    auto R = RootDatum::build(row.t, row.r, row.v);
    CAPTURE(R->label());
    CHECK(R->fundamental_group().order() == row.order);
  }
  // Smith form of the SL3 adjoint lattice: a single Z/3
  auto R = RootDatum::build("A", 2, Variant::Adjoint);
  CHECK(R->fundamental_group().moduli() == std::vector<int>{3});
  // D4 adjoint: Z/2 x Z/2, not cyclic
  auto D = RootDatum::build("D", 4, Variant::Adjoint);
  CHECK(D->fundamental_group().moduli() == std::vector<int>{2, 2});
  auto G = RootDatum::build("GL", 3, Variant::GL);
  CHECK(G->fundamental_group().moduli() == std::vector<int>{0});
}

TEST_CASE("display coordinates round-trip") {
  for (auto v : {Variant::SimplyConnected, Variant::Adjoint}) {
    auto R = RootDatum::build("A", 2, v);
    for (int a = -3; a <= 3; ++a)
      for (int b = -3; b <= 3; ++b) {
        IVec l{a, b};
        CHECK(R->from_display(R->display(l)) == l);
      }
  }
  auto R = RootDatum::build("A", 2, Variant::SimplyConnected);
  CHECK_THROWS(R->from_display({Q(1, 3), Q(1, 3), Q(-2, 3)}));
  CHECK_THROWS(parse_variant("weird"));
}
