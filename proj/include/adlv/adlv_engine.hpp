#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "adlv/hecke.hpp"
#include "adlv/sigma_classes.hpp"
#include "json.hpp"

namespace adlv {

constexpr const char* kEngineVersion = "adlv-engine-1";

enum class Orientation { Periodic, AtInfinity };

// dim(I a_x cap J a_y) for J = ^{w^{-1}} I_P (periodic) or ^{w^{-1}} N (at infinity),
// P the standard parabolic P_J
struct OrbitDimTable {
  Elt x;
  unsigned J = 0;
  Elt w;
  Orientation orientation = Orientation::Periodic;
  std::map<Elt, int> entries;
};

// Folds the gallery of type `word` starting at u = start; each position keeps
// the largest dimension reaching it.  With a target only positions that can
// still reach it are kept.
std::unordered_map<Elt, int, EltHash> fold_gallery(const RootDatum& R, const std::vector<int>& word, const Elt& start,
                                                  unsigned J, const Elt* target = nullptr);

OrbitDimTable orbit_dim_table(const RootDatum& R, const Elt& x, unsigned J, const Elt& w, Orientation o);

// number of walls H_{beta,m}, beta a root of ^{w^{-1}} M_J, between a and y a
int levi_wall_count(const RootDatum& R, const Elt& y, unsigned J, int w_finite);

// dim(X_x(b) cap I_P w a) for b the standard representative; nothing if empty
std::optional<int> dim_stratum(const RootDatum& R, const Elt& x, const SigmaClass& c, const Elt& w);

struct Certificate {
  std::string kind;       // "kappa" or "p-alcove"
  std::string parabolic;  // label of P
  std::string found;      // eta_M(x)
  std::string allowed;    // admissible values
};

// lattice points of X_*(A) whose class in B(M) has Newton point v and maps to kappa
std::vector<IVec> levi_lifts(const RootDatum& R, const Parabolic& P, const QVec& v, const LamElt& kappa);
// W nu cap N_M restricted to Newton points of classes mapping to kappa
std::vector<QVec> levi_newton_points(const RootDatum& R, const Parabolic& P, const SigmaClass& c);
// values eta_M may take on x in the necessary condition for P
std::set<LamElt> admissible_eta_M(const RootDatum& R, const Parabolic& P, const SigmaClass& c);

struct NecessaryReport {
  bool passed = true;
  std::vector<Certificate> violations;
};
NecessaryReport necessary_condition(const RootDatum& R, const Elt& x, const SigmaClass& c);

enum class Status { NonEmpty, EmptyCertified, EmptyUpToCutoff };
std::string status_name(Status s);

struct AdlvResult {
  Status status = Status::EmptyUpToCutoff;
  int dim = -1;
  Elt witness_w;
  int cutoff = 0;
  std::string method;
  std::vector<Certificate> certificates;
};

int default_cutoff(const RootDatum& R, const Elt& x, const SigmaClass& c);

struct SolveOptions {
  int cutoff = -1;  // -1: default_cutoff
  int jobs = 1;
  bool certificates = true;
};
AdlvResult solve(const RootDatum& R, const Elt& x, const SigmaClass& c, const SolveOptions& opt = {});

// the x with I x I inside I y^{-1} I b0 I y I for some y with length <= cutoff,
// b0 the fundamental representative
std::set<Elt> superset(const RootDatum& R, const SigmaClass& c, int cutoff);

// dimension through the Levi subgroup of the home parabolic
AdlvResult reduce_to_basic(const RootDatum& R, const Elt& x, const SigmaClass& c, int cutoff, int levi_cutoff = -1);

struct Prediction {
  bool nonempty = false;
  Q dim = Q(-1);
  std::string witness;  // parabolic witnessing emptiness
};
// requires x shrunken and c basic
Prediction predict_shrunken(const RootDatum& R, const Elt& x, const SigmaClass& c);
// requires c basic
Prediction predict_palcove(const RootDatum& R, const Elt& x, const SigmaClass& c);
bool full_support(const RootDatum& R, int w);

nlohmann::json to_json(const RootDatum& R, const Elt& x, const SigmaClass& c, const AdlvResult& r);

}  // namespace adlv
