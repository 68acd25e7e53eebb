#pragma once

#include <optional>
#include <string>
#include <vector>

#include "adlv/affine_weyl.hpp"

namespace adlv {

// Semistandard parabolic P = ^u P_J with Levi M = ^u M_J, u minimal in u W_J.
struct Parabolic {
  int u = 0;
  unsigned J = 0;
  std::vector<char> in_m;        // per root of G
  std::vector<char> in_n;        // per root of G
  std::vector<int> to_levi_w;    // W index -> W_M index in `levi`, or -1
  DatumPtr levi;                 // positive system R_M cap R^+
  bool is_standard() const { return u == 0; }
  int size_J() const { return __builtin_popcount(J); }
};

bool root_in_span(const RootDatum& R, int b, unsigned J);
Parabolic make_parabolic(const RootDatum& R, int u, unsigned J);
Parabolic standard_parabolic(const RootDatum& R, unsigned J);
// all semistandard parabolics, by decreasing |J|, then J, then u
const std::vector<Parabolic>& semistandard_parabolics(const RootDatum& R);
std::string parabolic_label(const RootDatum& R, const Parabolic& P);
// 2 rho_N as a covector
IVec two_rho_N(const RootDatum& R, const Parabolic& P);

bool in_levi(const Parabolic& P, const Elt& x);
Elt to_levi(const Parabolic& P, const Elt& x);    // requires in_levi
Elt from_levi(const Parabolic& P, const Elt& x);  // x indexed in P.levi
int length_M(const Parabolic& P, const Elt& x);
LamElt eta_M(const Parabolic& P, const Elt& x);   // throws unless in_levi
LamElt eta_M_lattice(const Parabolic& P, const IVec& lam);

struct WitnessRow {
  int root;
  int k_x;
  int k_a;
};

struct AlcoveReport {
  bool verdict = true;
  bool in_levi = true;
  std::vector<WitnessRow> witnesses;
};

AlcoveReport is_P_alcove(const RootDatum& R, const Elt& x, const Parabolic& P, bool strict = false);
bool acute_cone_contains(const RootDatum& R, const Elt& x, int w);
bool in_region_P(const RootDatum& R, const Elt& x, const Parabolic& P);
// union of C(a, w) over w with R_N contained in w(R^+)
bool in_acute_union(const RootDatum& R, const Elt& x, const Parabolic& P);

bool is_shrunken(const RootDatum& R, const Elt& x);
inline int eta1(const Elt& x) { return x.w; }
// all u in W with u^{-1} x a in the dominant chamber
std::vector<int> eta2_all(const RootDatum& R, const Elt& x);
int eta2(const RootDatum& R, const Elt& x);  // throws if not single-valued

struct MinimalLevis {
  std::vector<char> m_minus;  // root membership
  std::vector<char> m_plus;
  std::vector<Parabolic> p_plus;
};
MinimalLevis minimal_levis(const RootDatum& R, const Elt& x);

bool is_fundamental_P_alcove(const RootDatum& R, const Elt& x, const Parabolic& P);
// nu_x = (1/N) sum_i w^i lam for x in Omega_M; throws otherwise
QVec nu_x(const RootDatum& R, const Elt& x, const Parabolic& P);
// averaging of the translation part over the finite part's cyclic group
QVec average_translation(const RootDatum& R, const Elt& x);

}  // namespace adlv
