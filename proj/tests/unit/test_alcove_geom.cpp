#include "adlv/alcove_geom.hpp"
#include "doctest.h"

using namespace adlv;

TEST_CASE("semistandard parabolic counts") {
  // sum over J of |W / W_J|
  auto A = RootDatum::build("A", 2, Variant::SimplyConnected);
  CHECK(semistandard_parabolics(*A).size() == 13);
  auto C = RootDatum::build("C", 2, Variant::SimplyConnected);
  CHECK(semistandard_parabolics(*C).size() == 17);
  auto G = RootDatum::build("G", 2, Variant::SimplyConnected);
  CHECK(semistandard_parabolics(*G).size() == 25);
  CHECK(parabolic_label(*A, make_parabolic(*A, A->simple_refl(0), 0b10)) == "^{s1}P_{2}");
}

TEST_CASE("Levi and unipotent roots partition the roots") {
  auto R = RootDatum::build("C", 2, Variant::Adjoint);
  for (const auto& P : semistandard_parabolics(*R)) {
    for (int b = 0; b < R->num_roots(); ++b) {
      int n = R->neg(b);
      CHECK(!(P.in_m[b] && P.in_n[b]));
      // b is in M, in N, or its negative is in N
      CHECK((P.in_m[b] + P.in_n[b] + P.in_n[n]) == 1);
    }
    CHECK(P.levi->num_roots() == std::count(P.in_m.begin(), P.in_m.end(), 1));
  }
}

TEST_CASE("P-alcove verdicts and witnesses") {
  auto R = RootDatum::build("A", 2, Variant::SimplyConnected);
  const Parabolic B = standard_parabolic(*R, 0);
  const Parabolic G = standard_parabolic(*R, 0b11);
  // dominant translations are B-alcoves, antidominant regular ones are not
  CHECK(is_P_alcove(*R, parse_elt(*R, "t[2,0,-2]"), B).verdict);
  CHECK(!is_P_alcove(*R, parse_elt(*R, "t[-2,0,2]"), B).verdict);
  for (const auto& x : extended_ball(*R, 6)) {
    CHECK(is_P_alcove(*R, x, G).verdict);
    for (const auto& P : semistandard_parabolics(*R)) {
      AlcoveReport rep = is_P_alcove(*R, x, P);
      if (rep.verdict) continue;
      bool violated = !rep.in_levi;
      for (const auto& w : rep.witnesses) violated |= w.k_x < w.k_a;
      CHECK(violated);
    }
  }
}

TEST_CASE("shrunken alcoves and eta2") {
  auto R = RootDatum::build("C", 2, Variant::SimplyConnected);
  CHECK(!is_shrunken(*R, Elt{}));
  CHECK(is_shrunken(*R, parse_elt(*R, "t[2,1]")));
  for (const auto& x : extended_ball(*R, 8)) {
    auto e = eta2_all(*R, x);
    REQUIRE(e.size() == 1);
    CHECK(e[0] == eta2(*R, x));
  }
}

TEST_CASE("GL2 length-zero element t^(1,0)s1") {
  auto R = RootDatum::build("GL", 2, Variant::GL);
  Elt t = parse_elt(*R, "t[1,0]*s1");
  CHECK(length(*R, t) == 0);
  const Parabolic G = standard_parabolic(*R, 1);
  CHECK(is_fundamental_P_alcove(*R, t, G));
  QVec nu = nu_x(*R, t, G);
  CHECK(R->display(nu) == std::vector<Q>{Q(1, 2), Q(1, 2)});
  CHECK(eta(*R, compose(*R, t, t)) == R->fundamental_group().add(eta(*R, t), eta(*R, t)));
}

TEST_CASE("fundamental P-alcoves have length <2 rho_N, nu>") {
  auto R = RootDatum::build("GL", 3, Variant::GL);
  Elt x = parse_elt(*R, "t[1,0,0]*s1");
  const Parabolic P = standard_parabolic(*R, 0b01);
  CHECK(length(*R, x) == 1);
  REQUIRE(is_fundamental_P_alcove(*R, x, P));
  QVec nu = nu_x(*R, x, P);
  CHECK(R->display(nu) == std::vector<Q>{Q(1, 2), Q(1, 2), Q(0)});
}

TEST_CASE("acute cones") {
  auto R = RootDatum::build("G", 2, Variant::SimplyConnected);
  // the base alcove lies in every acute cone; every alcove lies in some
  for (int w = 0; w < R->wsize(); ++w) CHECK(acute_cone_contains(*R, Elt{}, w));
  for (const auto& x : affine_ball(*R, 6)) {
    bool any = false;
    for (int w = 0; w < R->wsize(); ++w) any |= acute_cone_contains(*R, x, w);
    CHECK(any);
    // the region of G is everything
    CHECK(in_region_P(*R, x, standard_parabolic(*R, 0b11)));
  }
}

TEST_CASE("minimal Levi subgroups") {
  auto R = RootDatum::build("A", 2, Variant::SimplyConnected);
  for (const auto& x : extended_ball(*R, 6)) {
    MinimalLevis m = minimal_levis(*R, x);
    for (int b = 0; b < R->num_roots(); ++b)
      if (m.m_minus[b]) CHECK(m.m_plus[b]);
    for (const auto& P : m.p_plus) {
      CHECK(is_P_alcove(*R, x, P).verdict);
      CHECK(std::vector<char>(P.in_m) == m.m_plus);
    }
    CHECK(!m.p_plus.empty());
  }
  // a regular dominant translation is a B-alcove: M+ is the torus
  MinimalLevis t = minimal_levis(*R, parse_elt(*R, "t[1,0,-1]"));
  CHECK(std::count(t.m_plus.begin(), t.m_plus.end(), 1) == 0);
}
