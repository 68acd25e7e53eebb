#include <deque>
#include <map>
#include <set>

#include "adlv/affine_weyl.hpp"
#include "doctest.h"

using namespace adlv;

namespace {

// breadth-first distance from the length-zero elements along right multiplication
std::map<Elt, int> bfs_lengths(const RootDatum& R, int n) {
  std::map<Elt, int> d;
  std::deque<Elt> q;
  for (const auto& t : omega_reps(R)) d[t] = 0, q.push_back(t);
  while (!q.empty()) {
    Elt x = q.front();
    q.pop_front();
    if (d[x] == n) continue;
    for (int g = 0; g < R.ngen(); ++g) {
      Elt y = mul_gen_right(R, x, g);
      if (!d.count(y)) d[y] = d[x] + 1, q.push_back(y);
    }
  }
  return d;
}

// subword property of the Bruhat order
bool subword_leq(const RootDatum& R, const Elt& y, const Elt& x) {
  ReducedExpr e = reduced_word(R, x);
  const size_t n = e.word.size();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> sub;
    for (size_t i = 0; i < n; ++i)
      if (mask >> i & 1) sub.push_back(e.word[i]);
    if (eval_word(R, sub, e.tau) == y) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("length agrees with hyperplane count and BFS distance") {
  for (auto [t, v] : {std::pair{"A", Variant::SimplyConnected}, {"C", Variant::Adjoint}, {"G", Variant::SimplyConnected}}) {
    auto R = RootDatum::build(t, 2, v);
    auto d = bfs_lengths(*R, 6);
    for (const auto& [x, l] : d) {
      CHECK(length(*R, x) == l);
      CHECK(length_hyperplanes(*R, x) == l);
    }
    // every element of extended_ball(6) is reached
    for (const auto& x : extended_ball(*R, 6)) CHECK(d.count(x));
  }
}

TEST_CASE("ball sizes of the affine Weyl group of type A2") {
  // 3n elements of length n >= 1
  auto R = RootDatum::build("A", 2, Variant::SimplyConnected);
  for (int n = 0; n <= 8; ++n) CHECK(affine_ball(*R, n).size() == static_cast<size_t>(1 + 3 * n * (n + 1) / 2));
}

TEST_CASE("reduced words evaluate back") {
  auto R = RootDatum::build("C", 2, Variant::Adjoint);
  for (const auto& x : extended_ball(*R, 7)) {
    ReducedExpr e = reduced_word(*R, x);
    CHECK(static_cast<int>(e.word.size()) == length(*R, x));
    CHECK(length(*R, e.tau) == 0);
    CHECK(eval_word(*R, e.word, e.tau) == x);
    CHECK(parse_elt(*R, to_text(*R, x)) == x);
    CHECK(parse_elt(*R, word_text(*R, e)) == x);
    for (int b = 0; b < R->num_roots(); ++b) CHECK(k_alpha(*R, b, x) == k_alpha_exact(*R, b, x));
  }
}

TEST_CASE("affine generator is t^{theta coroot} s_theta") {
  for (auto t : {"A", "C", "G"}) {
    auto R = RootDatum::build(t, 2, Variant::SimplyConnected);
    int th = R->theta(0);
    Elt s0 = compose(*R, translation(R->coroot(th)), finite(R->refl(th)));
    CHECK(generator(*R, 0) == s0);
    CHECK(length(*R, s0) == 1);
    CHECK(compose(*R, s0, s0) == Elt{});
  }
}

TEST_CASE("text forms") {
  auto R = RootDatum::build("A", 2, Variant::SimplyConnected);
  CHECK(parse_elt(*R, "s01210120120") == parse_elt(*R, "t[3,1,-4]*s1s2s1"));
  CHECK(parse_elt(*R, "s0 s1") == parse_elt(*R, "s01"));
  CHECK(parse_elt(*R, "e") == Elt{});
  CHECK(to_text(*R, parse_elt(*R, "t[2,0,-2]")) == "t[2,0,-2]");
  CHECK_THROWS(parse_elt(*R, "t[1,1]"));
  CHECK_THROWS(parse_elt(*R, "s7"));
}

TEST_CASE("Bruhat order matches the subword property") {
  for (auto t : {"A", "C"}) {
    auto R = RootDatum::build(t, 2, Variant::SimplyConnected);
    auto ball = affine_ball(*R, 5);
    for (const auto& x : ball)
      for (const auto& y : ball) CHECK(bruhat_leq(*R, y, x) == subword_leq(*R, y, x));
  }
}

TEST_CASE("length-zero elements and eta_G") {
  auto R = RootDatum::build("A", 3, Variant::Adjoint);
  auto reps = omega_reps(*R);
  CHECK(reps.size() == 4);
  std::set<LamElt> ks;
  for (const auto& t : reps) {
    CHECK(length(*R, t) == 0);
    ks.insert(eta(*R, t));
  }
  CHECK(ks.size() == 4);
  // eta is a homomorphism
  for (const auto& x : extended_ball(*R, 3))
    for (const auto& y : reps)
      CHECK(eta(*R, compose(*R, x, y)) == R->fundamental_group().add(eta(*R, x), eta(*R, y)));
}
