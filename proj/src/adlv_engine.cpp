#include "adlv/adlv_engine.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace adlv {

namespace {

// side of the wall on which the retraction center of I_P lies
bool center_below(const RootDatum& R, const Wall& h, unsigned J) {
  if (root_in_span(R, h.beta, J)) return h.m >= 1;
  return true;
}

int correction(const RootDatum& R, const SigmaClass& c) {
  Q v = R.pair_two_rho(c.nu);
  if (v.denominator() != 1) throw std::logic_error("non-integral correction term <2rho, nu>");
  return static_cast<int>(v.numerator());
}

std::string lam_set_text(const std::set<LamElt>& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& e : s) out += (first ? "" : ";") + kappa_text(e), first = false;
  return out + "}";
}

std::set<Elt> support_mul_left(const RootDatum& R, int g, const std::set<Elt>& s) {
  std::set<Elt> out;
  for (const auto& y : s) {
    out.insert(mul_gen_left(R, g, y));
    if (is_left_descent(R, g, y)) out.insert(y);
  }
  return out;
}

std::set<Elt> support_mul_right_gen(const RootDatum& R, const std::set<Elt>& s, int g) {
  std::set<Elt> out;
  for (const auto& y : s) {
    out.insert(mul_gen_right(R, y, g));
    if (is_left_descent(R, g, invert(R, y))) out.insert(y);
  }
  return out;
}

}  // namespace

// eta_M values of classes of M with Newton point in W nu and kappa
std::vector<QVec> levi_newton_points(const RootDatum& R, const Parabolic& P, const SigmaClass& c) {
  std::vector<QVec> out;
  for (const QVec& v : weyl_orbit(R, c.nu))
    if (!levi_lifts(R, P, v, c.kappa).empty()) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IVec> levi_lifts(const RootDatum& R, const Parabolic& P, const QVec& v, const LamElt& kappa) {
  std::vector<IVec> out;
  const RootDatum& M = *P.levi;
  for (int b = 0; b < M.num_pos(); ++b)
    if (M.pair(b, v) < Q(0)) return out;
  std::vector<int> cent;
  for (int b = 0; b < R.num_roots(); ++b)
    if (P.in_m[b] && R.pair(b, v) == Q(0)) cent.push_back(b);
  DatumPtr L = R.levi(cent);
  for (const IVec& lam : basic_lifts(*L, v))
    if (R.kappa_of(lam) == kappa) out.push_back(lam);
  return out;
}

std::set<LamElt> admissible_eta_M(const RootDatum& R, const Parabolic& P, const SigmaClass& c) {
  std::set<LamElt> out;
  for (const QVec& v : weyl_orbit(R, c.nu))
    for (const IVec& lam : levi_lifts(R, P, v, c.kappa)) out.insert(P.levi->kappa_of(lam));
  return out;
}

std::unordered_map<Elt, int, EltHash> fold_gallery(const RootDatum& R, const std::vector<int>& word, const Elt& start,
                                                  unsigned J, const Elt* target) {
  std::unordered_map<Elt, int, EltHash> cur{{start, 0}}, next;
  const int n = static_cast<int>(word.size());
  auto keep = [&](const Elt& u, int remaining) {
    return !target || length(R, compose(R, invert(R, u), *target)) <= remaining;
  };
  auto push = [&](const Elt& u, int d, int remaining) {
    if (!keep(u, remaining)) return;
    auto it = next.find(u);
    if (it == next.end())
      next.emplace(u, d);
    else if (it->second < d)
      it->second = d;
  };
  for (int i = 0; i < n; ++i) {
    const int g = word[i];
    const int remaining = n - i - 1;
    next.clear();
    for (const auto& [u, d] : cur) {
      Wall h = wall_right(R, u, g);
      Elt v = mul_gen_right(R, u, g);
      if (h.below == center_below(R, h, J)) {
        push(v, d + 1, remaining);
      } else {
        push(v, d, remaining);
        push(u, d + 1, remaining);
      }
    }
    cur.swap(next);
  }
  return cur;
}

int levi_wall_count(const RootDatum& R, const Elt& y, unsigned J, int w_finite) {
  int cnt = 0;
  for (int b = 0; b < R.num_pos(); ++b)
    if (root_in_span(R, R.wroot(w_finite, b), J)) cnt += std::abs(k_alpha(R, b, y) - 1);
  return cnt;
}

OrbitDimTable orbit_dim_table(const RootDatum& R, const Elt& x, unsigned J, const Elt& w, Orientation o) {
  OrbitDimTable t;
  t.x = x;
  t.J = J;
  t.w = w;
  t.orientation = o;
  ReducedExpr ex = reduced_word(R, x);
  const Elt wi = invert(R, w);
  for (const auto& [u, d] : fold_gallery(R, ex.word, w, J)) {
    Elt y = compose(R, wi, compose(R, u, ex.tau));
    int v = d;
    if (o == Orientation::AtInfinity) v -= levi_wall_count(R, y, J, w.w);
    t.entries[y] = v;
  }
  return t;
}

std::optional<int> dim_stratum(const RootDatum& R, const Elt& x, const SigmaClass& c, const Elt& w) {
  if (eta(R, x) != c.kappa) return std::nullopt;
  ReducedExpr ex = reduced_word(R, x);
  const Elt target = compose(R, compose(R, c.std_rep, w), invert(R, ex.tau));
  auto states = fold_gallery(R, ex.word, w, c.J, &target);
  auto it = states.find(target);
  if (it == states.end()) return std::nullopt;
  int d = it->second - correction(R, c);
  if (d < 0) throw std::logic_error("negative stratum dimension");
  return d;
}

NecessaryReport necessary_condition(const RootDatum& R, const Elt& x, const SigmaClass& c) {
  NecessaryReport rep;
  if (eta(R, x) != c.kappa) {
    rep.passed = false;
    rep.violations.push_back({"kappa", "G", kappa_text(eta(R, x)), "{" + kappa_text(c.kappa) + "}"});
  }
  for (const auto& P : semistandard_parabolics(R)) {
    if (P.J == (1u << R.rank()) - 1) continue;
    if (!is_P_alcove(R, x, P).verdict) continue;
    auto allowed = admissible_eta_M(R, P, c);
    LamElt e = eta_M(P, x);
    if (!allowed.count(e)) {
      rep.passed = false;
      rep.violations.push_back({"p-alcove", parabolic_label(R, P), kappa_text(e), lam_set_text(allowed)});
    }
  }
  return rep;
}

std::string status_name(Status s) {
  switch (s) {
    case Status::NonEmpty:
      return "nonempty";
    case Status::EmptyCertified:
      return "empty-certified";
    case Status::EmptyUpToCutoff:
      return "empty-up-to-cutoff";
  }
  return "?";
}

int default_cutoff(const RootDatum& R, const Elt& x, const SigmaClass& c) {
  return length(R, x) + static_cast<int>(ceil_q(R.pair_two_rho(c.nu))) + 2 * R.coxeter_number();
}

AdlvResult solve(const RootDatum& R, const Elt& x, const SigmaClass& c, const SolveOptions& opt) {
  AdlvResult res;
  res.cutoff = opt.cutoff >= 0 ? opt.cutoff : default_cutoff(R, x, c);
  res.method = "sweep";
  if (opt.certificates) {
    NecessaryReport nec = necessary_condition(R, x, c);
    if (!nec.passed) {
      res.status = Status::EmptyCertified;
      res.method = "certificate";
      res.certificates = nec.violations;
      return res;
    }
  } else if (eta(R, x) != c.kappa) {
    res.status = Status::EmptyCertified;
    res.method = "certificate";
    res.certificates.push_back({"kappa", "G", kappa_text(eta(R, x)), "{" + kappa_text(c.kappa) + "}"});
    return res;
  }
  const std::vector<Elt> ws = extended_ball(R, res.cutoff);
  std::vector<int> dims(ws.size(), -1);
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (size_t i = next++; i < ws.size(); i = next++) {
      auto d = dim_stratum(R, x, c, ws[i]);
      if (d) dims[i] = *d;
    }
  };
  const int jobs = std::max(1, opt.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  size_t best = ws.size();
  for (size_t i = 0; i < ws.size(); ++i)
    if (dims[i] >= 0 && (best == ws.size() || dims[i] > dims[best])) best = i;
  if (best == ws.size()) {
    res.status = Status::EmptyUpToCutoff;
    return res;
  }
  res.status = Status::NonEmpty;
  res.dim = dims[best];
  res.witness_w = ws[best];
  return res;
}

std::set<Elt> superset(const RootDatum& R, const SigmaClass& c, int cutoff) {
  const Elt b0 = fundamental_representative(R, c).x;
  // S(y) = support of T_{y^-1} T_{b0} T_y along the affine ball
  std::unordered_map<Elt, std::set<Elt>, EltHash> memo;
  std::set<Elt> out;
  const auto ball = affine_ball(R, cutoff);
  const auto taus = omega_reps(R);
  for (const auto& y : ball) {
    std::set<Elt> s;
    ReducedExpr e = reduced_word(R, y);
    if (e.word.empty()) {
      s = {b0};
    } else {
      const int g = e.word.back();
      const auto& prev = memo.at(mul_gen_right(R, y, g));
      s = support_mul_left(R, g, support_mul_right_gen(R, prev, g));
    }
    for (const auto& t : taus) {
      const Elt ti = invert(R, t);
      for (const auto& z : s) out.insert(compose(R, compose(R, ti, z), t));
    }
    memo.emplace(y, std::move(s));
  }
  return out;
}

AdlvResult reduce_to_basic(const RootDatum& R, const Elt& x, const SigmaClass& c, int cutoff, int levi_cutoff) {
  if (c.basic(R)) {
    AdlvResult r = solve(R, x, c, {cutoff, 1, true});
    r.method = "reduce_to_basic:basic";
    return r;
  }
  AdlvResult res;
  res.cutoff = cutoff;
  res.method = "reduce_to_basic";
  if (eta(R, x) != c.kappa) {
    res.status = Status::EmptyCertified;
    res.certificates.push_back({"kappa", "G", kappa_text(eta(R, x)), "{" + kappa_text(c.kappa) + "}"});
    return res;
  }
  const Parabolic P = standard_parabolic(R, c.J);
  const RootDatum& M = *P.levi;
  const SigmaClass cM = classify(M, to_levi(P, c.std_rep));
  const int corr = correction(R, c);
  bool indefinite = false;
  for (int wf = 0; wf < R.wsize(); ++wf) {
    bool minimal = true;
    for (int j = 0; j < R.rank(); ++j)
      if ((c.J >> j & 1u) && !R.positive(R.wroot(R.winv(wf), j))) minimal = false;
    if (!minimal) continue;
    const Elt w = finite(wf);
    OrbitDimTable t = orbit_dim_table(R, x, c.J, w, Orientation::AtInfinity);
    for (const auto& [y, a] : t.entries) {
      const Elt yM = conj(R, w, y);
      if (!in_levi(P, yM)) continue;
      SolveOptions o;
      o.cutoff = levi_cutoff;
      AdlvResult r = solve(M, to_levi(P, yM), cM, o);
      if (r.status == Status::EmptyUpToCutoff) indefinite = true;
      if (r.status != Status::NonEmpty) continue;
      int d = a + r.dim - corr;
      if (res.status != Status::NonEmpty || d > res.dim) {
        res.status = Status::NonEmpty;
        res.dim = d;
        res.witness_w = w;
      }
    }
  }
  if (res.status != Status::NonEmpty) {
    res.status = indefinite ? Status::EmptyUpToCutoff : Status::EmptyCertified;
    if (!indefinite) res.certificates.push_back({"levi-reduction", parabolic_label(R, P), "", ""});
  }
  return res;
}

bool full_support(const RootDatum& R, int w) {
  unsigned s = 0;
  for (int i : R.wword(w)) s |= 1u << i;
  return s == (1u << R.rank()) - 1;
}

Prediction predict_shrunken(const RootDatum& R, const Elt& x, const SigmaClass& c) {
  if (!c.basic(R)) throw std::invalid_argument("predict_shrunken needs a basic class");
  if (!is_shrunken(R, x)) throw std::invalid_argument("predict_shrunken needs a shrunken element");
  Prediction p;
  if (eta(R, x) != c.kappa) {
    p.witness = "G";
    return p;
  }
  const int e2 = eta2(R, x);
  const int v = R.wmul(R.winv(e2), R.wmul(x.w, e2));
  if (!full_support(R, v)) {
    p.witness = "support";
    return p;
  }
  p.nonempty = true;
  p.dim = Q(length(R, x) + R.wlen(v) - defect(R, c), 2);
  return p;
}

Prediction predict_palcove(const RootDatum& R, const Elt& x, const SigmaClass& c) {
  if (!c.basic(R)) throw std::invalid_argument("predict_palcove needs a basic class");
  Prediction p;
  NecessaryReport rep = necessary_condition(R, x, c);
  p.nonempty = rep.passed;
  if (!rep.passed) p.witness = rep.violations.front().parabolic;
  return p;
}

nlohmann::json to_json(const RootDatum& R, const Elt& x, const SigmaClass& c, const AdlvResult& r) {
  nlohmann::json j;
  j["x"] = to_text(R, x);
  j["class_key"] = class_key(R, c);
  j["status"] = status_name(r.status);
  j["dim"] = r.status == Status::NonEmpty ? nlohmann::json(r.dim) : nlohmann::json(nullptr);
  j["witness_w"] = r.status == Status::NonEmpty ? nlohmann::json(to_text(R, r.witness_w)) : nlohmann::json(nullptr);
  j["cutoff"] = r.cutoff;
  j["method"] = r.method;
  nlohmann::json certs = nlohmann::json::array();
  for (const auto& ce : r.certificates)
    certs.push_back({{"kind", ce.kind}, {"parabolic", ce.parabolic}, {"found", ce.found}, {"allowed", ce.allowed}});
  j["certificates"] = certs;
  j["engine_version"] = kEngineVersion;
  return j;
}

}  // namespace adlv
