#include "adlv/hecke.hpp"

#include <algorithm>
#include <sstream>

namespace adlv {

namespace {

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// ys longer than y
bool ascent(const RootDatum& R, const Elt& y, int g) { return !is_left_descent(R, g, invert(R, y)); }

}  // namespace

Poly poly_add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

int poly_deg(const Poly& p) { return static_cast<int>(p.size()) - 1; }

std::string poly_str(const Poly& p) {
  if (p.empty()) return "0";
  std::string s;
  for (int i = poly_deg(p); i >= 0; --i) {
    long long c = p[i];
    if (c == 0) continue;
    std::string mag = std::to_string(c < 0 ? -c : c);
    s += s.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    if (i == 0)
      s += mag;
    else
      s += (mag == "1" ? "" : mag + "*") + (i == 1 ? std::string("q") : "q^" + std::to_string(i));
  }
  return s;
}

HeckeElt HeckeElt::basis(const Elt& x) {
  HeckeElt h;
  h.terms[x] = Poly{1};
  return h;
}

void HeckeElt::add(const Elt& x, const Poly& p) {
  if (p.empty()) return;
  auto it = terms.find(x);
  if (it == terms.end()) {
    terms.emplace(x, p);
    return;
  }
  it->second = poly_add(it->second, p);
  if (it->second.empty()) terms.erase(it);
}

Poly HeckeElt::coeff(const Elt& x) const {
  auto it = terms.find(x);
  return it == terms.end() ? Poly{} : it->second;
}

std::vector<std::pair<Elt, Poly>> HeckeElt::sorted() const {
  std::vector<std::pair<Elt, Poly>> v(terms.begin(), terms.end());
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

bool HeckeElt::operator==(const HeckeElt& o) const { return sorted() == o.sorted(); }

HeckeElt mul_right_gen(const RootDatum& R, const HeckeElt& h, int g) {
  HeckeElt r;
  for (const auto& [y, p] : h.terms) {
    Elt ys = mul_gen_right(R, y, g);
    if (ascent(R, y, g)) {
      r.add(ys, p);
    } else {
      // T_y T_s = (q-1) T_y + q T_{ys}
      r.add(y, poly_mul(p, Poly{-1, 1}));
      r.add(ys, poly_mul(p, Poly{0, 1}));
    }
  }
  return r;
}

HeckeElt mul_right_basis(const RootDatum& R, const HeckeElt& h, const Elt& z) {
  ReducedExpr e = reduced_word(R, z);
  HeckeElt cur = h;
  for (int g : e.word) cur = mul_right_gen(R, cur, g);
  if (e.tau == Elt{}) return cur;
  HeckeElt r;
  for (const auto& [y, p] : cur.terms) r.add(compose(R, y, e.tau), p);
  return r;
}

HeckeElt hecke_mul(const RootDatum& R, const HeckeElt& a, const HeckeElt& b) {
  HeckeElt r;
  for (const auto& [z, p] : b.sorted()) {
    HeckeElt t = mul_right_basis(R, a, z);
    for (const auto& [y, c] : t.terms) r.add(y, poly_mul(c, p));
  }
  return r;
}

std::string hecke_str(const RootDatum& R, const HeckeElt& h) {
  auto v = h.sorted();
  if (v.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < v.size(); ++i)
    s += (i ? " + " : "") + std::string("(") + poly_str(v[i].second) + ")*T[" + to_text(R, v[i].first) + "]";
  return s;
}

const HeckeElt& PrefixProducts::times(const Elt& z) {
  auto it = memo_.find(z);
  if (it != memo_.end()) return it->second;
  ReducedExpr e = reduced_word(R_, z);
  HeckeElt val;
  if (e.word.empty()) {
    val = HeckeElt::basis(compose(R_, x_, e.tau));
  } else if (e.tau != Elt{}) {
    // T_x T_{w tau} = (T_x T_w) T_tau
    Elt w = eval_word(R_, e.word);
    const HeckeElt& base = times(w);
    for (const auto& [y, p] : base.terms) val.add(compose(R_, y, e.tau), p);
  } else {
    int last = e.word.back();
    Elt prefix = mul_gen_right(R_, z, last);
    val = mul_right_gen(R_, times(prefix), last);
  }
  return memo_.emplace(z, std::move(val)).first->second;
}

Poly structure_constant(const RootDatum& R, const Elt& x, const Elt& y, const Elt& z) {
  return mul_right_basis(R, HeckeElt::basis(x), y).coeff(z);
}

std::optional<int> structure_deg(const RootDatum& R, const Elt& x, const Elt& y, const Elt& z) {
  Poly c = structure_constant(R, x, y, z);
  if (c.empty()) return std::nullopt;
  return poly_deg(c);
}

std::set<Elt> support_mul_right(const RootDatum& R, const std::set<Elt>& s, const Elt& z) {
  ReducedExpr e = reduced_word(R, z);
  std::set<Elt> cur = s;
  for (int g : e.word) {
    std::set<Elt> next;
    for (const auto& y : cur) {
      next.insert(mul_gen_right(R, y, g));
      if (!ascent(R, y, g)) next.insert(y);
    }
    cur.swap(next);
  }
  if (e.tau == Elt{}) return cur;
  std::set<Elt> out;
  for (const auto& y : cur) out.insert(compose(R, y, e.tau));
  return out;
}

std::set<Elt> double_coset_product_support(const RootDatum& R, const std::vector<Elt>& xs) {
  std::set<Elt> cur{Elt{}};
  for (const auto& x : xs) cur = support_mul_right(R, cur, x);
  return cur;
}

}  // namespace adlv
