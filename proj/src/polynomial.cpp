#include "akh/polynomial.hpp"

#include <sstream>

namespace akh {

Laurent Laurent::monomial(int t, int q, int x, long long c) {
  Laurent p;
  p.add({t, q, x}, c);
  return p;
}

void Laurent::add(const Exponent& e, long long c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

long long Laurent::coefficient(int t, int q, int x) const {
  auto it = terms_.find({t, q, x});
  return it == terms_.end() ? 0 : it->second;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  for (const auto& [e, c] : o.terms_) add(e, -c);
  return *this;
}

Laurent Laurent::operator*(const Laurent& o) const {
  Laurent p;
  for (const auto& [a, c] : terms_)
    for (const auto& [b, d] : o.terms_) p.add({a[0] + b[0], a[1] + b[1], a[2] + b[2]}, c * d);
  return p;
}

Laurent Laurent::shifted(int t, int q, int x) const {
  Laurent p;
  for (const auto& [e, c] : terms_) p.add({e[0] + t, e[1] + q, e[2] + x}, c);
  return p;
}

Laurent Laurent::at_t_minus_one() const {
  Laurent p;
  for (const auto& [e, c] : terms_) p.add({0, e[1], e[2]}, (e[0] % 2 == 0) ? c : -c);
  return p;
}

std::optional<Laurent> Laurent::divided_by(const Laurent& divisor) const {
  if (divisor.is_zero()) return std::nullopt;
  if (is_zero()) return Laurent{};
  const auto [dlead, dcoef] = *divisor.terms_.rbegin();
  // Per variable, exponents of an exact quotient lie between the differences
  // of the extreme exponents; this also bounds the loop below.
  auto extremes = [](const Laurent& p) {
    std::array<std::pair<int, int>, 3> r;
    bool first = true;
    for (const auto& [e, c] : p.terms_)
      for (int v = 0; v < 3; ++v) {
        if (first || e[v] < r[v].first) r[v].first = e[v];
        if (first || e[v] > r[v].second) r[v].second = e[v];
        if (v == 2) first = false;
      }
    return r;
  };
  const auto a = extremes(*this);
  const auto b = extremes(divisor);
  Laurent rem = *this;
  Laurent quot;
  while (!rem.is_zero()) {
    const auto [lead, coef] = *rem.terms_.rbegin();
    if (coef % dcoef != 0) return std::nullopt;
    Exponent e{lead[0] - dlead[0], lead[1] - dlead[1], lead[2] - dlead[2]};
    for (int v = 0; v < 3; ++v)
      if (e[v] < a[v].first - b[v].first || e[v] > a[v].second - b[v].second) return std::nullopt;
    Laurent step = monomial(e[0], e[1], e[2], coef / dcoef);
    quot += step;
    rem -= step * divisor;
  }
  return quot;
}

std::string Laurent::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  auto power = [&](const char* v, int e) {
    if (e == 0) return std::string();
    std::string s = v;
    if (e != 1) s += "^" + std::to_string(e);
    return s;
  };
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (auto [v, k] : {std::pair{"t", e[0]}, std::pair{"q", e[1]}, std::pair{"x", e[2]}}) {
      std::string p = power(v, k);
      if (p.empty()) continue;
      if (!mono.empty()) mono += " ";
      mono += p;
    }
    long long mag = c < 0 ? -c : c;
    if (first)
      out << (c < 0 ? "-" : "");
    else
      out << (c < 0 ? " - " : " + ");
    first = false;
    if (mono.empty())
      out << mag;
    else if (mag == 1)
      out << mono;
    else
      out << mag << " " << mono;
  }
  return out.str();
}

Laurent circle_class() { return Laurent::monomial(0, 1, 1) + Laurent::monomial(0, -1, -1); }

Laurent poincare(const f2::RankTable& ranks) {
  Laurent p;
  for (const auto& [k, r] : ranks) p += Laurent::monomial(k[0], k[1], k[2], r);
  return p;
}

std::optional<f2::RankTable> ranks_of(const Laurent& p) {
  f2::RankTable t;
  for (const auto& [e, c] : p.terms()) {
    if (c < 0) return std::nullopt;
    t[{e[0], e[1], e[2]}] = static_cast<int>(c);
  }
  return t;
}

}  // namespace akh
