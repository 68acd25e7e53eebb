#pragma once

#include <string>
#include <vector>

#include "adlv/alcove_geom.hpp"

namespace adlv {

// A sigma-conjugacy class [b], stored as its Newton point nu and its image kappa in Lambda_G.
struct SigmaClass {
  QVec nu{};          // dominant, internal coordinates
  LamElt kappa;       // in Lambda_G
  unsigned J = 0;     // home parabolic P_J: the simple roots vanishing on nu
  LamElt lambda_M;    // Lambda_M element of the home Levi averaging to nu
  Elt std_rep;        // standard representative, in Omega_M
  bool basic(const RootDatum& R) const { return J == (1u << R.rank()) - 1; }
};

QVec dominant_conjugate(const RootDatum& R, const QVec& v);
// distinct W-conjugates
std::vector<QVec> weyl_orbit(const RootDatum& R, const QVec& v);
// average of lam over the Weyl group of L (a datum on the same lattice)
QVec levi_average(const RootDatum& L, const IVec& lam);
// covectors vanishing on all coroots, as an integer basis
std::vector<IVec> central_characters(const RootDatum& R);

QVec newton_point(const RootDatum& R, const Elt& x);

// lattice points lam, one per class modulo Q^vee_L, whose L-average is nu;
// nu must be orthogonal to the roots of L
std::vector<IVec> basic_lifts(const RootDatum& L, const QVec& nu);

// the class with data (nu, kappa); throws std::invalid_argument if there is none
SigmaClass make_class(const RootDatum& R, const QVec& nu, const LamElt& kappa);
SigmaClass classify(const RootDatum& R, const Elt& x);

// all classes with <2rho, nu> <= bound; for groups with a central torus the
// kappa is restricted to |<chi, kappa>| <= max(1, dim - 1) for each
// central character chi
std::vector<SigmaClass> enumerate_classes(const RootDatum& R, int bound);

inline Elt standard_representative(const SigmaClass& c) { return c.std_rep; }

struct FundamentalRep {
  Elt x;
  Parabolic P;
};
// a W-conjugate of the standard representative that is a fundamental P-alcove
FundamentalRep fundamental_representative(const RootDatum& R, const SigmaClass& c);

int defect(const RootDatum& R, const SigmaClass& c);
int fixed_space_dim(const RootDatum& R, int w);

bool grassmannian_nonempty(const RootDatum& R, const IVec& mu, const SigmaClass& c);
Q grassmannian_dim_basic(const RootDatum& R, const IVec& mu, const SigmaClass& c);

// "nu=[...];kappa=k" with nu in display coordinates
std::string class_key(const RootDatum& R, const SigmaClass& c);
std::string kappa_text(const LamElt& k);
// accepts a class key, or "elt:<element>" for the class of an element
SigmaClass parse_class(const RootDatum& R, const std::string& text);

}  // namespace adlv
