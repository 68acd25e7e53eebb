#include "adlv/affine_weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace adlv {

Elt compose(const RootDatum& R, const Elt& x, const Elt& y) {
  IVec wl = R.wact(x.w, y.lam);
  Elt r;
  for (int i = 0; i < R.dim(); ++i) r.lam[i] = x.lam[i] + wl[i];
  r.w = R.wmul(x.w, y.w);
  return r;
}

Elt invert(const RootDatum& R, const Elt& x) {
  Elt r;
  r.w = R.winv(x.w);
  IVec l = R.wact(r.w, x.lam);
  for (int i = 0; i < R.dim(); ++i) r.lam[i] = -l[i];
  return r;
}

Elt conj(const RootDatum& R, const Elt& y, const Elt& x) { return compose(R, compose(R, y, x), invert(R, y)); }

Elt generator(const RootDatum& R, int g) {
  if (g < 0 || g >= R.ngen()) throw std::out_of_range("affine generator index out of range");
  if (R.gen_affine(g)) {
    int t = R.theta(R.gen_comp(g));
    return Elt{R.coroot(t), R.refl(t)};
  }
  return finite(R.simple_refl(R.gen_simple(g)));
}

Elt mul_gen_right(const RootDatum& R, const Elt& x, int g) {
  if (R.gen_affine(g)) {
    int t = R.theta(R.gen_comp(g));
    IVec c = R.wact(x.w, R.coroot(t));
    Elt r{x.lam, R.wmul(x.w, R.refl(t))};
    for (int i = 0; i < R.dim(); ++i) r.lam[i] += c[i];
    return r;
  }
  return Elt{x.lam, R.wmul(x.w, R.simple_refl(R.gen_simple(g)))};
}

Elt mul_gen_left(const RootDatum& R, int g, const Elt& x) {
  if (R.gen_affine(g)) {
    int t = R.theta(R.gen_comp(g));
    int s = R.refl(t);
    Elt r{R.wact(s, x.lam), R.wmul(s, x.w)};
    for (int i = 0; i < R.dim(); ++i) r.lam[i] += R.coroot(t)[i];
    return r;
  }
  int s = R.simple_refl(R.gen_simple(g));
  return Elt{R.wact(s, x.lam), R.wmul(s, x.w)};
}

int k_alpha_exact(const RootDatum& R, int b, const Elt& x) {
  Q v = Q(R.pair(b, x.lam)) + R.bary(R.wroot(R.winv(x.w), b));
  return static_cast<int>(ceil_q(v));
}

int length(const RootDatum& R, const Elt& x) {
  const int wi = R.winv(x.w);
  int l = 0;
  for (int b = 0; b < R.num_pos(); ++b) {
    int k = R.pair(b, x.lam) + (R.positive(R.wroot(wi, b)) ? 0 : -1);
    l += std::abs(k);
  }
  return l;
}

int length_hyperplanes(const RootDatum& R, const Elt& x) {
  int l = 0;
  for (int b = 0; b < R.num_pos(); ++b) l += std::abs(k_alpha_exact(R, b, x) - 1);
  return l;
}

bool is_left_descent(const RootDatum& R, int g, const Elt& x) {
  // the wall of a of type g separates a from x a
  if (R.gen_affine(g)) return k_alpha(R, R.theta(R.gen_comp(g)), x) >= 2;
  return k_alpha(R, R.gen_simple(g), x) <= 0;
}

ReducedExpr reduced_word(const RootDatum& R, const Elt& x) {
  ReducedExpr e;
  Elt cur = x;
  int l = length(R, cur);
  while (l > 0) {
    int g = 0;
    while (!is_left_descent(R, g, cur)) ++g;
    e.word.push_back(g);
    cur = mul_gen_left(R, g, cur);
    --l;
  }
  e.tau = cur;
  return e;
}

Elt eval_word(const RootDatum& R, const std::vector<int>& word, const Elt& tau) {
  Elt x;
  for (int g : word) x = mul_gen_right(R, x, g);
  return compose(R, x, tau);
}

bool bruhat_leq(const RootDatum& R, const Elt& x0, const Elt& y0) {
  if (eta(R, x0) != eta(R, y0)) return false;
  Elt x = x0, y = y0;
  int lx = length(R, x), ly = length(R, y);
  while (true) {
    if (lx > ly) return false;
    if (ly == 0) return x == y;
    int g = 0;
    while (!is_left_descent(R, g, y)) ++g;
    y = mul_gen_left(R, g, y);
    --ly;
    if (is_left_descent(R, g, x)) {
      x = mul_gen_left(R, g, x);
      --lx;
    }
  }
}

Elt omega_element(const RootDatum& R, const LamElt& kappa) {
  Elt x = translation(R.fundamental_group().lift(kappa));
  return reduced_word(R, x).tau;
}

std::vector<Elt> omega_reps(const RootDatum& R) {
  std::vector<Elt> out;
  const auto& cq = R.center_quotient();
  for (const auto& e : cq.elements()) out.push_back(omega_element(R, R.kappa_of(cq.lift(e))));
  return out;
}

namespace {

struct BallCache {
  std::mutex mu;
  std::map<const RootDatum*, std::pair<DatumPtr, std::vector<std::vector<Elt>>>> shells;
};

BallCache& ball_cache() {
  static BallCache c;
  return c;
}

}  // namespace

std::vector<Elt> affine_ball(const RootDatum& R, int n) {
  auto& c = ball_cache();
  std::lock_guard<std::mutex> lock(c.mu);
  auto& entry = c.shells[&R];
  if (!entry.first) entry = {R.shared_from_this(), {{Elt{}}}};
  auto& shells = entry.second;
  while (static_cast<int>(shells.size()) <= n && !shells.back().empty()) {
    const int l = static_cast<int>(shells.size()) - 1;
    std::unordered_set<Elt, EltHash> next;
    for (const auto& x : shells.back())
      for (int g = 0; g < R.ngen(); ++g) {
        Elt y = mul_gen_right(R, x, g);
        if (length(R, y) == l + 1) next.insert(y);
      }
    std::vector<std::pair<std::vector<int>, Elt>> keyed;
    for (const auto& y : next) keyed.emplace_back(reduced_word(R, y).word, y);
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Elt> shell;
    for (auto& k : keyed) shell.push_back(k.second);
    shells.push_back(std::move(shell));
  }
  std::vector<Elt> out;
  for (int l = 0; l <= n && l < static_cast<int>(shells.size()); ++l)
    out.insert(out.end(), shells[l].begin(), shells[l].end());
  return out;
}

std::vector<Elt> extended_ball(const RootDatum& R, int n) {
  std::vector<Elt> base = affine_ball(R, n);
  std::vector<Elt> taus = omega_reps(R);
  std::vector<Elt> out;
  out.reserve(base.size() * taus.size());
  for (const auto& x : base)
    for (const auto& t : taus) out.push_back(compose(R, x, t));
  return out;
}

std::string finite_word_text(const RootDatum& R, int w) {
  if (w == 0) return "e";
  std::string s;
  for (int i : R.wword(w)) s += "s" + std::to_string(i + 1);
  return s;
}

std::string to_text(const RootDatum& R, const Elt& x) {
  std::string s = "t[";
  auto d = R.display(x.lam);
  for (size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + q_str(d[i]);
  s += "]";
  if (x.w != 0) s += "·" + finite_word_text(R, x.w);
  return s;
}

std::string word_text(const RootDatum& R, const ReducedExpr& e) {
  std::string s;
  for (size_t i = 0; i < e.word.size(); ++i) s += (i ? " s" : "s") + std::to_string(e.word[i]);
  if (e.tau != Elt{}) {
    auto k = eta(R, e.tau);
    std::string t = "tau[";
    for (size_t i = 0; i < k.size(); ++i) t += (i ? "," : "") + std::to_string(k[i]);
    t += "]";
    s += s.empty() ? t : " " + t;
  }
  return s.empty() ? "e" : s;
}

std::vector<Q> parse_qvec(const std::string& text) {
  std::vector<Q> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
    if (tok.empty()) throw std::invalid_argument("empty coordinate");
    size_t slash = tok.find('/');
    size_t used = 0;
    long long num = std::stoll(tok.substr(0, slash), &used);
    if (used != (slash == std::string::npos ? tok.size() : slash)) throw std::invalid_argument("bad number '" + tok + "'");
    long long den = 1;
    if (slash != std::string::npos) den = std::stoll(tok.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    out.emplace_back(num, den);
  }
  return out;
}

namespace {

std::string normalize(std::string s) {
  auto repl = [&](const std::string& a, const std::string& b) {
    size_t p;
    while ((p = s.find(a)) != std::string::npos) s.replace(p, a.size(), b);
  };
  repl("·", "*");
  repl("τ", "tau");
  repl("ε", "t");
  return s;
}

}  // namespace

Elt parse_elt(const RootDatum& R, const std::string& input) {
  const std::string s = normalize(input);
  size_t i = 0;
  auto skip = [&]() {
    while (i < s.size() && (isspace(static_cast<unsigned char>(s[i])) || s[i] == '*' || s[i] == '.')) ++i;
  };
  auto digits = [&]() {
    std::string d;
    while (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) d += s[i++];
    return d;
  };
  Elt x;
  skip();
  if (s.compare(i, 2, "t[") == 0) {
    size_t close = s.find(']', i);
    if (close == std::string::npos) throw std::invalid_argument("missing ']' in '" + input + "'");
    x = translation(R.from_display(parse_qvec(s.substr(i + 2, close - i - 2))));
    i = close + 1;
    while (true) {
      skip();
      if (i >= s.size()) break;
      if (s[i] == 'e' || s[i] == '1') {
        ++i;
        continue;
      }
      if (s[i] != 's') throw std::invalid_argument("unexpected '" + s.substr(i) + "' in finite word");
      ++i;
      std::string d = digits();
      if (d.empty()) throw std::invalid_argument("expected reflection index in '" + input + "'");
      for (char c : d) {
        int k = c - '0';
        if (k < 1 || k > R.rank()) throw std::invalid_argument("finite reflection index out of range");
        x = compose(R, x, finite(R.simple_refl(k - 1)));
      }
    }
    return x;
  }
  bool any = false;
  while (true) {
    skip();
    if (i >= s.size()) break;
    any = true;
    if (s.compare(i, 3, "tau") == 0) {
      i += 3;
      LamElt k;
      if (i < s.size() && s[i] == '[') {
        size_t close = s.find(']', i);
        if (close == std::string::npos) throw std::invalid_argument("missing ']'");
        for (const auto& q : parse_qvec(s.substr(i + 1, close - i - 1))) k.push_back(static_cast<int>(q.numerator()));
        i = close + 1;
      } else {
        int p = 1;
        if (i < s.size() && s[i] == '^') {
          ++i;
          bool neg = i < s.size() && s[i] == '-';
          if (neg) ++i;
          std::string d = digits();
          if (d.empty()) throw std::invalid_argument("bad exponent");
          p = std::stoi(d) * (neg ? -1 : 1);
        }
        if (R.fundamental_group().size() != 1)
          throw std::invalid_argument("tau^k needs a cyclic fundamental group; use tau[...]");
        k = {p};
      }
      if (static_cast<int>(k.size()) != R.fundamental_group().size())
        throw std::invalid_argument("tau[...] has the wrong number of coordinates");
      x = compose(R, x, omega_element(R, R.fundamental_group().reduce(k)));
    } else if (s[i] == 's') {
      ++i;
      std::string d = digits();
      if (d.empty()) throw std::invalid_argument("expected generator index in '" + input + "'");
      for (char c : d) {
        int g = c - '0';
        if (g >= R.ngen()) throw std::invalid_argument("affine generator index out of range");
        x = mul_gen_right(R, x, g);
      }
    } else if (s[i] == 'e' || s[i] == '1') {
      ++i;
    } else {
      throw std::invalid_argument("cannot parse '" + input + "'");
    }
  }
  if (!any) throw std::invalid_argument("empty element");
  return x;
}

}  // namespace adlv
