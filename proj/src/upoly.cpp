#include "trophyp/upoly.hpp"

#include <stdexcept>

namespace trophyp {

UPoly::UPoly(RationalVector coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational UPoly::eval(const Rational& t) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

UPoly UPoly::derivative() const {
  RationalVector d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
  return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  RationalVector d = c_;
  const Rational l = lead();
  for (auto& x : d) x /= l;
  return UPoly(std::move(d));
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  RationalVector c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  RationalVector c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return UPoly(std::move(c));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  RationalVector c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(c));
}

std::string UPoly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rational& x = c_[static_cast<std::size_t>(i)];
    if (sgn(x) == 0) continue;
    if (!out.empty()) out += sgn(x) > 0 ? " + " : " - ";
    else if (sgn(x) < 0) out += "-";
    const Rational ax = abs(x);
    if (i == 0 || ax != 1) out += format_rational(ax);
    if (i >= 1) out += "t";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  RationalVector rem = a.coeffs();
  RationalVector quo(a.degree() >= b.degree() ? static_cast<std::size_t>(a.degree() - b.degree() + 1) : 0);
  const int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    const Rational f = rem[static_cast<std::size_t>(i)] / b.lead();
    if (sgn(f) == 0) continue;
    quo[static_cast<std::size_t>(i - db)] = f;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= f * b.coeffs()[static_cast<std::size_t>(j)];
  }
  q = UPoly(std::move(quo));
  r = UPoly(std::move(rem));
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly q, r;
    divmod(x, y, q, r);
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UPoly pow(const UPoly& a, int e) {
  UPoly out = UPoly::constant(1);
  for (int i = 0; i < e; ++i) out = out * a;
  return out;
}

namespace {

int sign_at_infinity(const UPoly& p, bool positive) {
  const int s = sgn(p.lead());
  return (positive || p.degree() % 2 == 0) ? s : -s;
}

int variations(const std::vector<int>& signs) {
  int changes = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

int count_distinct_real_roots(const UPoly& p) {
  if (p.is_zero()) throw std::domain_error("root count of the zero polynomial");
  if (p.degree() == 0) return 0;
  std::vector<UPoly> seq{p, p.derivative()};
  while (!seq.back().is_zero()) {
    UPoly q, r;
    divmod(seq[seq.size() - 2], seq.back(), q, r);
    seq.push_back(UPoly() - r);
  }
  seq.pop_back();
  std::vector<int> lo, hi;
  for (const auto& s : seq) {
    lo.push_back(sign_at_infinity(s, false));
    hi.push_back(sign_at_infinity(s, true));
  }
  return variations(lo) - variations(hi);
}

UPoly square_free_part(const UPoly& p) {
  if (p.degree() <= 0) return p;
  UPoly q, r;
  divmod(p, gcd(p, p.derivative()), q, r);
  return q;
}

bool is_real_rooted(const UPoly& p) {
  if (p.degree() <= 0) return true;
  const UPoly s = square_free_part(p);
  return count_distinct_real_roots(s) == s.degree();
}

}  // namespace trophyp
