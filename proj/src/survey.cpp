#include "adlv/survey.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace adlv {

namespace fs = std::filesystem;
using nlohmann::json;

std::optional<bool> agrees_shrunken(const SurveyRecord& r) {
  if (!r.shrunken_rule || r.computed.status == Status::EmptyUpToCutoff) return std::nullopt;
  bool ne = r.computed.status == Status::NonEmpty;
  if (ne != r.shrunken_rule->nonempty) return false;
  return !ne || Q(r.computed.dim) == r.shrunken_rule->dim;
}

std::optional<bool> agrees_palcove(const SurveyRecord& r) {
  if (!r.palcove || r.computed.status == Status::EmptyUpToCutoff) return std::nullopt;
  return (r.computed.status == Status::NonEmpty) == r.palcove->nonempty;
}

SurveyRecord make_record(const RootDatum& R, const Elt& x, const SigmaClass& c, const SolveOptions& opt) {
  SurveyRecord r;
  r.x = x;
  r.length = length(R, x);
  r.shrunken = is_shrunken(R, x);
  r.eta1 = eta1(x);
  auto e2 = eta2_all(R, x);
  if (e2.size() == 1) r.eta2 = e2[0];
  r.cls = c;
  r.class_key = class_key(R, c);
  r.computed = solve(R, x, c, opt);
  r.bruhat_geq_b = bruhat_leq(R, c.std_rep, x);
  r.no_p_alcove = true;
  const unsigned all = (1u << R.rank()) - 1;
  for (const auto& P : semistandard_parabolics(R))
    if (P.J != all && is_P_alcove(R, x, P).verdict) {
      r.no_p_alcove = false;
      break;
    }
  if (c.basic(R)) {
    if (r.shrunken) r.shrunken_rule = predict_shrunken(R, x, c);
    r.palcove = predict_palcove(R, x, c);
  }
  return r;
}

namespace {

json prediction_json(const std::optional<Prediction>& p) {
  if (!p) return nullptr;
  return {{"nonempty", p->nonempty},
          {"dim", p->nonempty ? json(q_str(p->dim)) : json(nullptr)},
          {"witness", p->witness.empty() ? json(nullptr) : json(p->witness)}};
}

json opt_bool(const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); }

}  // namespace

json record_json(const RootDatum& R, const SurveyRecord& r) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["x"] = to_text(R, r.x);
  j["length"] = r.length;
  j["shrunken"] = r.shrunken;
  j["eta1"] = finite_word_text(R, r.eta1);
  j["eta2"] = r.eta2 ? json(finite_word_text(R, *r.eta2)) : json(nullptr);
  j["class_key"] = r.class_key;
  j["computed"] = to_json(R, r.x, r.cls, r.computed);
  j["computed"].erase("class_key");
  j["bruhat_geq_b"] = r.bruhat_geq_b;
  j["no_p_alcove"] = r.no_p_alcove;
  j["predicted_shrunken"] = prediction_json(r.shrunken_rule);
  j["predicted_palcove"] = prediction_json(r.palcove);
  j["agrees_shrunken"] = opt_bool(agrees_shrunken(r));
  j["agrees_palcove"] = opt_bool(agrees_palcove(r));
  return j;
}

// ---- cache

ResultCache::ResultCache(fs::path dir) {
  fs::create_directories(dir);
  file_ = dir / "adlv-cache.jsonl";
  load();
}

void ResultCache::load() {
  std::ifstream in(file_);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      json e = json::parse(line);
      if (e.at("engine_version").get<std::string>() != kEngineVersion) continue;
      entries_[e.at("key").get<std::string>()] = e.at("value");
    } catch (const std::exception&) {
      ++skipped_;
    }
  }
  if (skipped_) std::cerr << "warning: skipped " << skipped_ << " corrupt cache entries in " << file_ << "\n";
}

std::optional<json> ResultCache::get(const std::string& key) const {
  std::lock_guard lk(mu_);
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void ResultCache::put(const std::string& key, const json& value) {
  std::lock_guard lk(mu_);
  if (!entries_.emplace(key, value).second) return;
  std::ofstream out(file_, std::ios::app);
  out << json{{"key", key}, {"engine_version", kEngineVersion}, {"value", value}}.dump() << "\n";
}

size_t ResultCache::size() const {
  std::lock_guard lk(mu_);
  return entries_.size();
}

void ResultCache::compact() {
  std::lock_guard lk(mu_);
  fs::path tmp = file_;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    for (const auto& [k, v] : entries_)
      out << json{{"key", k}, {"engine_version", kEngineVersion}, {"value", v}}.dump() << "\n";
  }
  fs::rename(tmp, file_);
}

void ResultCache::clear() {
  std::lock_guard lk(mu_);
  entries_.clear();
  fs::remove(file_);
}

std::string datum_key(const RootDatum& R) { return R.label(); }

std::string cache_key(const RootDatum& R, const std::string& op, const std::string& args) {
  const std::string canon = std::string(kEngineVersion) + "|" + datum_key(R) + "|" + op + "|" + args;
  unsigned long long h = 1469598103934665603ull;
  for (unsigned char ch : canon) h = (h ^ ch) * 1099511628211ull;
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", h);
  return buf;
}

// ---- survey

std::vector<Elt> component_ball(const RootDatum& R, const LamElt& kappa, int max_len) {
  const Elt tau = omega_element(R, kappa);
  std::vector<Elt> out;
  for (const auto& y : affine_ball(R, max_len)) out.push_back(compose(R, y, tau));
  return out;
}

SurveySummary run_survey(const RootDatum& R, const SigmaClass& c, int max_len, const SolveOptions& opt,
                         ResultCache* cache, const std::function<void(const json&)>& emit) {
  const std::vector<Elt> xs = component_ball(R, c.kappa, max_len);
  const std::string ck = class_key(R, c);
  const std::string cut = opt.cutoff < 0 ? "default" : std::to_string(opt.cutoff);
  std::vector<std::string> keys(xs.size());
  std::vector<std::optional<json>> out(xs.size());
  SurveySummary s;
  for (size_t i = 0; i < xs.size(); ++i) {
    keys[i] = cache_key(R, "survey-record", to_text(R, xs[i]) + "|" + ck + "|cutoff=" + cut);
    if (cache) {
      out[i] = cache->get(keys[i]);
      if (out[i]) ++s.cache_hits;
    }
  }
  // workers fill missing slots; the caller's thread owns emission and cache appends
  SolveOptions inner = opt;
  inner.jobs = 1;
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (size_t i; (i = next++) < xs.size();)
      if (!out[i]) out[i] = record_json(R, make_record(R, xs[i], c, inner));
  };
  const int jobs = std::max(1, opt.jobs);
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  for (size_t i = 0; i < xs.size(); ++i) {
    const json& j = *out[i];
    if (cache) cache->put(keys[i], j);
    ++s.records;
    const std::string st = j["computed"]["status"];
    if (st == "nonempty") ++s.nonempty;
    else if (st == "empty-certified") ++s.certified_empty;
    else ++s.undetermined;
    if (!j["agrees_shrunken"].is_null()) {
      ++s.shrunken_checked;
      if (!j["agrees_shrunken"].get<bool>()) ++s.shrunken_disagree;
    }
    if (!j["agrees_palcove"].is_null()) {
      ++s.palcove_checked;
      if (!j["agrees_palcove"].get<bool>()) ++s.palcove_disagree;
    }
    if (emit) emit(j);
  }
  return s;
}

json summary_json(const SurveySummary& s) {
  return {{"summary",
           {{"schema_version", kSchemaVersion},
            {"records", s.records},
            {"nonempty", s.nonempty},
            {"empty_certified", s.certified_empty},
            {"empty_up_to_cutoff", s.undetermined},
            {"shrunken_checked", s.shrunken_checked},
            {"shrunken_disagreements", s.shrunken_disagree},
            {"palcove_checked", s.palcove_checked},
            {"palcove_disagreements", s.palcove_disagree}}}};
}

// ---- rank-2 figures

std::vector<FigureCell> figure_cells(const RootDatum& R, const SigmaClass& c, int max_len, const SolveOptions& opt) {
  if (R.rank() != 2 || R.dim() != 2) throw std::invalid_argument("figures need a semisimple datum of rank 2");
  std::vector<FigureCell> cells;
  for (const auto& x : component_ball(R, c.kappa, max_len)) {
    AdlvResult r = solve(R, x, c, opt);
    cells.push_back({x, word_text(R, reduced_word(R, x)), r.status, r.dim, is_shrunken(R, x)});
  }
  return cells;
}

std::string figure_tsv(const RootDatum& R, const std::vector<FigureCell>& cells) {
  std::ostringstream os;
  os << "alcove\tx\tstatus\tdim\tshrunken\n";
  for (const auto& c : cells)
    os << c.word << "\t" << to_text(R, c.x) << "\t" << status_name(c.status) << "\t"
       << (c.status == Status::NonEmpty ? std::to_string(c.dim) : "") << "\t" << (c.shrunken ? 1 : 0) << "\n";
  return os.str();
}

namespace {

// vertices of the base alcove: 0 and the points with alpha_j = delta_ij / c_i
std::vector<QVec> base_vertices(const RootDatum& R) {
  std::vector<QVec> v(1, QVec{});
  const auto& c = R.coeffs(R.theta(0));
  for (int i = 0; i < R.rank(); ++i) {
    QMat A(R.rank(), std::vector<Q>(R.dim()));
    std::vector<Q> rhs(R.rank(), Q(0));
    for (int j = 0; j < R.rank(); ++j)
      for (int k = 0; k < R.dim(); ++k) A[j][k] = Q(R.root(j)[k]);
    rhs[i] = Q(1, c[i]);
    std::vector<Q> sol;
    solve_q(A, rhs, sol);
    QVec p{};
    for (int k = 0; k < R.dim(); ++k) p[k] = sol[k];
    v.push_back(p);
  }
  return v;
}

QVec act(const RootDatum& R, const Elt& y, const QVec& p) {
  QVec q = R.wact(y.w, p);
  for (int k = 0; k < R.dim(); ++k) q[k] += Q(y.lam[k]);
  return q;
}

struct Plane {
  double a, b, d;  // (X, Y) = (a u0 + b u1, d u1)
  std::pair<double, double> operator()(const QVec& p) const {
    double u0 = boost::rational_cast<double>(p[0]), u1 = boost::rational_cast<double>(p[1]);
    return {a * u0 + b * u1, d * u1};
  }
};

// Cholesky factor of the W-invariant form sum over positive roots of <beta,u><beta,v>
Plane plane(const RootDatum& R) {
  double g00 = 0, g01 = 0, g11 = 0;
  for (int b = 0; b < R.num_pos(); ++b) {
    const IVec& r = R.root(b);
    g00 += r[0] * r[0], g01 += r[0] * r[1], g11 += r[1] * r[1];
  }
  double a = std::sqrt(g00);
  return {a, g01 / a, std::sqrt(g11 - g01 * g01 / g00)};
}

}  // namespace

std::string figure_svg(const RootDatum& R, const std::vector<FigureCell>& cells) {
  if (cells.empty()) throw std::invalid_argument("nothing to draw");
  const auto base = base_vertices(R);
  const Plane pl = plane(R);
  const Elt tau = omega_element(R, eta(R, cells.front().x));
  const Elt tau_inv = invert(R, tau);
  struct Poly2 {
    std::vector<std::pair<double, double>> pts;
  };
  std::vector<Poly2> polys;
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  for (const auto& c : cells) {
    Elt y = compose(R, c.x, tau_inv);
    Poly2 p;
    for (const auto& v : base) {
      auto pt = pl(act(R, y, v));
      pt.second = -pt.second;
      xmin = std::min(xmin, pt.first), xmax = std::max(xmax, pt.first);
      ymin = std::min(ymin, pt.second), ymax = std::max(ymax, pt.second);
      p.pts.push_back(pt);
    }
    polys.push_back(p);
  }
  const double span = std::max({xmax - xmin, ymax - ymin, 1e-9});
  const double scale = 760.0 / span, pad = 20;
  auto X = [&](double v) { return pad + (v - xmin) * scale; };
  auto Y = [&](double v) { return pad + (v - ymin) * scale; };
  const double W = X(xmax) + pad, H = Y(ymax) + pad;
  const double font = std::max(4.0, std::min(14.0, 0.18 * scale));

  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\" viewBox=\"0 0 " << W
     << " " << H << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (size_t i = 0; i < cells.size(); ++i) {
    const auto& c = cells[i];
    const bool is_base = length(R, c.x) == 0;
    const char* fill = is_base ? "black" : c.status == Status::NonEmpty ? "#c8c8c8" : "white";
    os << "<polygon points=\"";
    for (const auto& [a, b] : polys[i].pts) os << X(a) << "," << Y(b) << " ";
    os << "\" fill=\"" << fill << "\" stroke=\"#808080\" stroke-width=\"0.5\"/>\n";
  }
  // shrunken chamber boundaries: edges between shrunken and non-shrunken alcoves
  for (size_t i = 0; i < cells.size(); ++i) {
    Elt y = compose(R, cells[i].x, tau_inv);
    for (int g = 0; g <= R.rank(); ++g) {
      Elt n = mul_gen_right(R, y, g);
      if (is_shrunken(R, y) == is_shrunken(R, n)) continue;
      const auto& pts = polys[i].pts;
      std::vector<std::pair<double, double>> e;
      for (int k = 0; k <= R.rank(); ++k)
        if (k != g) e.push_back(pts[k]);
      os << "<line x1=\"" << X(e[0].first) << "\" y1=\"" << Y(e[0].second) << "\" x2=\"" << X(e[1].first)
         << "\" y2=\"" << Y(e[1].second) << "\" stroke=\"black\" stroke-width=\"2.5\"/>\n";
    }
  }
  for (size_t i = 0; i < cells.size(); ++i) {
    const auto& c = cells[i];
    if (c.status != Status::NonEmpty || length(R, c.x) == 0) continue;
    double cx = 0, cy = 0;
    for (const auto& [a, b] : polys[i].pts) cx += a, cy += b;
    cx /= 3, cy /= 3;
    os << "<text x=\"" << X(cx) << "\" y=\"" << Y(cy) + font / 3 << "\" font-size=\"" << font
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\">" << c.dim << "</text>\n";
  }
  os << "<circle cx=\"" << X(0) << "\" cy=\"" << Y(0) << "\" r=\"" << std::max(3.0, font / 2)
     << "\" fill=\"none\" stroke=\"black\" stroke-dasharray=\"2,2\"/>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace adlv
