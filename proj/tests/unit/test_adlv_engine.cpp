#include "adlv/adlv_engine.hpp"
#include "doctest.h"

using namespace adlv;

TEST_CASE("finite Weyl group elements, b = 1: dimension is the length") {
  for (auto t : {"A", "C", "G"}) {
    auto R = RootDatum::build(t, 2, Variant::SimplyConnected);
    SigmaClass one = classify(*R, Elt{});
    for (int w = 0; w < R->wsize(); ++w) {
      AdlvResult r = solve(*R, finite(w), one);
      CHECK(r.status == Status::NonEmpty);
      CHECK(r.dim == R->wlen(w));
    }
  }
}

TEST_CASE("identity coset") {
  auto R = RootDatum::build("A", 2, Variant::SimplyConnected);
  AdlvResult r = solve(*R, Elt{}, classify(*R, Elt{}));
  CHECK(r.status == Status::NonEmpty);
  CHECK(r.dim == 0);
  CHECK(r.witness_w == Elt{});
}

TEST_CASE("kappa mismatch is certified") {
  auto R = RootDatum::build("A", 2, Variant::Adjoint);
  SigmaClass c = parse_class(*R, "nu=[0,0,0];kappa=1");
  AdlvResult r = solve(*R, Elt{}, c);
  CHECK(r.status == Status::EmptyCertified);
  REQUIRE(!r.certificates.empty());
  CHECK(r.certificates[0].kind == "kappa");
}

TEST_CASE("periodic table for P = G and w = e records lengths") {
  auto R = RootDatum::build("C", 2, Variant::SimplyConnected);
  for (const auto& x : affine_ball(*R, 5)) {
    OrbitDimTable t = orbit_dim_table(*R, x, 0b11, Elt{}, Orientation::Periodic);
    REQUIRE(t.entries.count(x));
    CHECK(t.entries.at(x) == length(*R, x));
    for (const auto& [y, d] : t.entries) CHECK(d <= length(*R, x));
  }
}

TEST_CASE("solve is independent of the number of workers") {
  auto R = RootDatum::build("C", 2, Variant::Adjoint);
  SigmaClass c = classify(*R, Elt{});
  for (const auto& x : affine_ball(*R, 6)) {
    AdlvResult a = solve(*R, x, c, {-1, 1, true});
    AdlvResult b = solve(*R, x, c, {-1, 3, true});
    CHECK(a.status == b.status);
    CHECK(a.dim == b.dim);
    CHECK(a.witness_w == b.witness_w);
  }
}

TEST_CASE("nonempty strata report their dimension") {
  auto R = RootDatum::build("A", 2, Variant::SimplyConnected);
  SigmaClass c = classify(*R, Elt{});
  for (const auto& x : affine_ball(*R, 6)) {
    AdlvResult r = solve(*R, x, c);
    if (r.status != Status::NonEmpty) continue;
    auto d = dim_stratum(*R, x, c, r.witness_w);
    REQUIRE(d.has_value());
    CHECK(*d == r.dim);
  }
}

TEST_CASE("superset agrees with solve on a small ball") {
  auto R = RootDatum::build("A", 2, Variant::Adjoint);
  for (const auto& c : enumerate_classes(*R, 0)) {
    auto sup = superset(*R, c, 8);
    for (const auto& x : extended_ball(*R, 6)) {
      AdlvResult r = solve(*R, x, c);
      REQUIRE(r.status != Status::EmptyUpToCutoff);
      CHECK((r.status == Status::NonEmpty) == (sup.count(x) > 0));
    }
  }
}

TEST_CASE("reduction to the Levi agrees with the direct sweep") {
  auto R = RootDatum::build("A", 2, Variant::SimplyConnected);
  for (const auto& c : enumerate_classes(*R, 4)) {
    if (c.basic(*R)) continue;
    for (const auto& x : affine_ball(*R, 7)) {
      AdlvResult a = solve(*R, x, c);
      AdlvResult b = reduce_to_basic(*R, x, c, 10);
      CAPTURE(to_text(*R, x));
      CAPTURE(class_key(*R, c));
      if (a.status == Status::NonEmpty) {
        CHECK(b.status == Status::NonEmpty);
        CHECK(b.dim == a.dim);
      } else {
        CHECK(b.status != Status::NonEmpty);
      }
    }
  }
}

TEST_CASE("necessary condition certificates name a parabolic") {
  auto R = RootDatum::build("A", 2, Variant::SimplyConnected);
  SigmaClass c = parse_class(*R, "nu=[1,-1/2,-1/2];kappa=0");
  Parabolic P = make_parabolic(*R, R->simple_refl(0), 0b10);
  auto pts = levi_newton_points(*R, P, c);
  REQUIRE(pts.size() == 1);
  CHECK(R->display(pts[0]) == std::vector<Q>{Q(-1, 2), Q(1), Q(-1, 2)});
  int failing = 0;
  for (int a = -4; a <= 4; ++a)
    for (int b = -4; b <= 4; ++b) {
      Elt x = parse_elt(*R, "t[" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(-a - b) + "]*s1s2s1");
      NecessaryReport rep = necessary_condition(*R, x, c);
      if (rep.passed) continue;
      ++failing;
      REQUIRE(!rep.violations.empty());
      CHECK((rep.violations[0].kind == "p-alcove" || rep.violations[0].kind == "kappa"));
      CHECK(!rep.violations[0].parabolic.empty());
    }
  CHECK(failing > 0);
  CHECK(necessary_condition(*R, parse_elt(*R, "t[0,1,-1]*s1s2s1"), c).passed);
}

TEST_CASE("predictions for b = 1") {
  auto R = RootDatum::build("A", 2, Variant::SimplyConnected);
  SigmaClass one = classify(*R, Elt{});
  // shrunken x with full-support finite part, dimension (l(x) + l(eta2^-1 eta1 eta2)) / 2
  for (const auto& x : affine_ball(*R, 8)) {
    if (!is_shrunken(*R, x)) continue;
    Prediction p = predict_shrunken(*R, x, one);
    if (p.nonempty) CHECK(p.dim.denominator() == 1);
  }
  CHECK_THROWS(predict_shrunken(*R, Elt{}, one));
  CHECK_THROWS(predict_palcove(*R, Elt{}, classify(*R, parse_elt(*R, "t[1,0,-1]"))));
}

TEST_CASE("json form") {
  auto R = RootDatum::build("A", 2, Variant::SimplyConnected);
  Elt x = parse_elt(*R, "s1");
  SigmaClass one = classify(*R, Elt{});
  auto j = to_json(*R, x, one, solve(*R, x, one));
  CHECK(j["status"] == "nonempty");
  CHECK(j["dim"] == 1);
  CHECK(j["engine_version"] == kEngineVersion);
  CHECK(status_name(Status::EmptyUpToCutoff) == "empty-up-to-cutoff");
}
