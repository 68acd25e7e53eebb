#include <map>
#include <set>

#include "adlv/sigma_classes.hpp"
#include "doctest.h"

using namespace adlv;

TEST_CASE("SL2 classes, lattice of the adjoint group") {
  auto R = RootDatum::build("A", 1, Variant::Adjoint);
  auto cs = enumerate_classes(*R, 2);
  CHECK(cs.size() == 4);
  int basic = 0;
  for (const auto& c : cs) basic += c.basic(*R);
  CHECK(basic == 2);
}

TEST_CASE("bound 0 gives one basic class per element of a finite Lambda") {
  for (auto [t, r] : {std::pair{"A", 2}, {"A", 3}, {"C", 2}, {"G", 2}}) {
    for (auto v : {Variant::SimplyConnected, Variant::Adjoint}) {
      auto R = RootDatum::build(t, r, v);
      CHECK(static_cast<long long>(enumerate_classes(*R, 0).size()) == R->fundamental_group().order());
    }
  }
}

TEST_CASE("GL3 classes against Newton polygons") {
  // independent count: decreasing slope sequences d_i/n_i with sum n_i = 3;
  // <2rho,nu> = sum over pairs of slots of the slope gap, kappa = sum d_i
  auto R = RootDatum::build("GL", 3, Variant::GL);
  const int bound = 4, window = 2;
  std::set<std::pair<std::vector<Q>, int>> expect;
  std::function<void(int, std::vector<Q>&, int, Q)> rec = [&](int left, std::vector<Q>& slopes, int kappa, Q last) {
    if (left == 0) {
      Q tr(0);
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) tr += slopes[i] - slopes[j];
      if (tr <= Q(bound) && std::abs(kappa) <= window) expect.insert({slopes, kappa});
      return;
    }
    for (int n = 1; n <= left; ++n)
      for (int d = -12; d <= 12; ++d) {
        Q s(d, n);
        if (!slopes.empty() && !(s < last)) continue;
        for (int k = 0; k < n; ++k) slopes.push_back(s);
        rec(left - n, slopes, kappa + d, s);
        slopes.resize(slopes.size() - n);
      }
  };
  std::vector<Q> sl;
  rec(3, sl, 0, Q(0));
  auto cs = enumerate_classes(*R, bound);
  std::set<std::pair<std::vector<Q>, int>> got;
  std::set<std::string> keys;
  for (const auto& c : cs) {
    std::vector<Q> d = R->display(c.nu);
    Q sum(0);
    for (auto q : d) sum += q;
    got.insert({d, static_cast<int>(sum.numerator())});
    keys.insert(class_key(*R, c));
  }
  CHECK(keys.size() == cs.size());
  CHECK(cs.size() == 20);
  CHECK(got == expect);
}

TEST_CASE("standard representatives classify back") {
  for (auto [t, r, v] : {std::tuple{"A", 2, Variant::Adjoint}, {"GL", 3, Variant::GL}, {"C", 2, Variant::Adjoint},
                         {"G", 2, Variant::SimplyConnected}}) {
    auto R = RootDatum::build(t, r, v);
    for (const auto& c : enumerate_classes(*R, 6)) {
      SigmaClass d = classify(*R, c.std_rep);
      CHECK(class_key(*R, d) == class_key(*R, c));
      CHECK(class_key(*R, parse_class(*R, class_key(*R, c))) == class_key(*R, c));
      FundamentalRep f = fundamental_representative(*R, c);
      CHECK(is_fundamental_P_alcove(*R, f.x, f.P));
      CHECK(class_key(*R, classify(*R, f.x)) == class_key(*R, c));
    }
  }
}

TEST_CASE("Newton point and kappa are conjugation invariant") {
  auto R = RootDatum::build("C", 2, Variant::Adjoint);
  auto xs = extended_ball(*R, 5);
  for (size_t i = 0; i < xs.size(); i += 5)
    for (size_t j = 0; j < xs.size(); j += 7) {
      Elt c = conj(*R, xs[j], xs[i]);
      CHECK(newton_point(*R, c) == newton_point(*R, xs[i]));
      CHECK(eta(*R, c) == eta(*R, xs[i]));
    }
}

TEST_CASE("GL2 class of t^(1,0)s1") {
  auto R = RootDatum::build("GL", 2, Variant::GL);
  SigmaClass c = classify(*R, parse_elt(*R, "t[1,0]*s1"));
  CHECK(c.basic(*R));
  CHECK(R->display(c.nu) == std::vector<Q>{Q(1, 2), Q(1, 2)});
  CHECK(defect(*R, c) == 1);
  CHECK(class_key(*R, c) == "nu=[1/2,1/2];kappa=" + kappa_text(c.kappa));
}

TEST_CASE("defects") {
  // superbasic GL_n: n - 1; split classes: 0
  for (int n : {2, 3, 4}) {
    auto R = RootDatum::build("GL", n, Variant::GL);
    SigmaClass c = classify(*R, omega_element(*R, {1}));
    CHECK(defect(*R, c) == n - 1);
    CHECK(defect(*R, classify(*R, Elt{})) == 0);
  }
  auto R = RootDatum::build("C", 2, Variant::SimplyConnected);
  for (const auto& c : enumerate_classes(*R, 6))
    if (!c.basic(*R)) CHECK(defect(*R, c) <= R->rank());
  CHECK(fixed_space_dim(*R, R->w0()) == 0);
  CHECK(fixed_space_dim(*R, 0) == 2);
}

TEST_CASE("affine Grassmannian varieties") {
  auto G = RootDatum::build("GL", 2, Variant::GL);
  SigmaClass sb = classify(*G, parse_elt(*G, "t[1,0]*s1"));
  IVec mu = G->from_display({Q(1), Q(0)});
  CHECK(grassmannian_nonempty(*G, mu, sb));
  CHECK(grassmannian_dim_basic(*G, mu, sb) == Q(0));
  CHECK(!grassmannian_nonempty(*G, mu, classify(*G, Elt{})));
  auto S = RootDatum::build("A", 1, Variant::SimplyConnected);
  IVec a = S->coroot(0);
  CHECK(grassmannian_nonempty(*S, a, classify(*S, Elt{})));
  CHECK(grassmannian_dim_basic(*S, a, classify(*S, Elt{})) == Q(1));
  // the Newton point must lie below mu
  CHECK(!grassmannian_nonempty(*S, a, classify(*S, translation(IVec{2}))));
}

TEST_CASE("bad class text") {
  auto R = RootDatum::build("A", 2, Variant::SimplyConnected);
  CHECK_THROWS(parse_class(*R, "nu=[1,0];kappa=0"));
  CHECK_THROWS(parse_class(*R, "nonsense"));
  CHECK(class_key(*R, parse_class(*R, "elt:t[1,0,-1]")) == "nu=[1,0,-1];kappa=0");
}
