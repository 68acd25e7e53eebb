#pragma once

#include <string>
#include <vector>

#include "adlv/root_data.hpp"

namespace adlv {

// x = eps^lam * w in the extended affine Weyl group X_*(A) x| W.  Acts on the
// apartment by p -> lam + w(p).
struct Elt {
  IVec lam{};
  int w = 0;
  bool operator==(const Elt& o) const { return w == o.w && lam == o.lam; }
  bool operator!=(const Elt& o) const { return !(*this == o); }
  bool operator<(const Elt& o) const { return w != o.w ? w < o.w : lam < o.lam; }
};

struct EltHash {
  size_t operator()(const Elt& x) const noexcept { return IVecHash{}(x.lam) * 31 + static_cast<size_t>(x.w); }
};

// x = s_{word[0]} ... s_{word[r-1]} * tau with tau of length zero
struct ReducedExpr {
  std::vector<int> word;
  Elt tau;
};

inline Elt translation(const IVec& lam) { return Elt{lam, 0}; }
inline Elt finite(int w) { return Elt{IVec{}, w}; }

Elt compose(const RootDatum& R, const Elt& x, const Elt& y);
Elt invert(const RootDatum& R, const Elt& x);
Elt conj(const RootDatum& R, const Elt& y, const Elt& x);  // y x y^{-1}
Elt generator(const RootDatum& R, int g);
Elt mul_gen_right(const RootDatum& R, const Elt& x, int g);
Elt mul_gen_left(const RootDatum& R, int g, const Elt& x);

// k(beta, x a) via the Iwahori-Matsumoto shortcut <beta,lam> + [w^{-1} beta > 0]
inline int k_alpha(const RootDatum& R, int b, const Elt& x) {
  return R.pair(b, x.lam) + (R.positive(R.wroot(R.winv(x.w), b)) ? 1 : 0);
}
// k(beta, x a) as the ceiling of beta at the image of the barycenter of a
int k_alpha_exact(const RootDatum& R, int b, const Elt& x);

int length(const RootDatum& R, const Elt& x);
int length_hyperplanes(const RootDatum& R, const Elt& x);
bool is_left_descent(const RootDatum& R, int g, const Elt& x);
ReducedExpr reduced_word(const RootDatum& R, const Elt& x);
Elt eval_word(const RootDatum& R, const std::vector<int>& word, const Elt& tau = Elt{});

bool bruhat_leq(const RootDatum& R, const Elt& x, const Elt& y);

// the map eta_G: W~ -> Lambda_G
inline LamElt eta(const RootDatum& R, const Elt& x) { return R.kappa_of(x.lam); }

// length-zero element with eta_G = kappa
Elt omega_element(const RootDatum& R, const LamElt& kappa);
// length-zero elements, one per class of Lambda_G modulo central cocharacters
std::vector<Elt> omega_reps(const RootDatum& R);

// all x in the affine Weyl group (eta_G = 0) with length <= n,
// ordered by length and then by lexicographically least reduced word
std::vector<Elt> affine_ball(const RootDatum& R, int n);
// affine_ball(n) * omega_reps
std::vector<Elt> extended_ball(const RootDatum& R, int n);

std::string to_text(const RootDatum& R, const Elt& x);
std::string word_text(const RootDatum& R, const ReducedExpr& e);
std::string finite_word_text(const RootDatum& R, int w);
Elt parse_elt(const RootDatum& R, const std::string& text);
std::vector<Q> parse_qvec(const std::string& text);

}  // namespace adlv

namespace adlv {

// The wall between u a and u s_g a, written as H_{beta,m} with beta > 0;
// `below` says that u a lies on the side beta < m.
struct Wall {
  int beta;
  int m;
  bool below;
};

inline Wall wall_right(const RootDatum& R, const Elt& u, int g) {
  if (R.gen_affine(g)) {
    int gam = R.wroot(u.w, R.theta(R.gen_comp(g)));
    if (R.positive(gam)) return Wall{gam, R.pair(gam, u.lam) + 1, true};
    int b = R.neg(gam);
    return Wall{b, R.pair(b, u.lam) - 1, false};
  }
  int gam = R.wroot(u.w, R.gen_simple(g));
  if (R.positive(gam)) return Wall{gam, R.pair(gam, u.lam), false};
  int b = R.neg(gam);
  return Wall{b, R.pair(b, u.lam), true};
}

}  // namespace adlv
