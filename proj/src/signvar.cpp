#include "trophyp/signvar.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace trophyp {

bool SignPattern::is_zero() const {
  return std::all_of(signs.begin(), signs.end(), [](Sign s) { return s == 0; });
}

std::string SignPattern::str() const {
  std::string out;
  out.reserve(signs.size());
  for (Sign s : signs) out.push_back(s > 0 ? '+' : (s < 0 ? '-' : '0'));
  return out;
}

SignPattern SignPattern::parse(std::string_view text) {
  SignPattern p;
  for (char ch : text) {
    switch (ch) {
      case '+': p.signs.push_back(1); break;
      case '-': p.signs.push_back(-1); break;
      case '0': p.signs.push_back(0); break;
      case ',':
      case ' ': break;
      default: throw std::invalid_argument(std::string("bad sign character '") + ch + "'");
    }
  }
  return p;
}

SignPattern sign(std::span<const Rational> v) {
  SignPattern p;
  p.signs.reserve(v.size());
  for (const auto& x : v) p.signs.push_back(static_cast<Sign>(sgn(x)));
  return p;
}

int var(std::span<const Sign> s) {
  int changes = 0;
  Sign last = 0;
  for (Sign x : s) {
    if (x == 0) continue;
    if (last != 0 && x != last) ++changes;
    last = x;
  }
  return changes;
}

int var(const SignPattern& s) { return var(std::span<const Sign>(s.signs)); }
int var(std::span<const Rational> v) { return var(sign(v)); }

int varbar(std::span<const Sign> s) {
  if (s.empty()) return 0;
  constexpr int kUnreachable = -1;
  // best[0]: last assigned sign is -, best[1]: last assigned sign is +.
  std::array<int, 2> best{kUnreachable, kUnreachable};
  auto allowed = [](Sign x, int slot) { return x == 0 || (x > 0) == (slot == 1); };
  for (int slot = 0; slot < 2; ++slot) {
    if (allowed(s[0], slot)) best[slot] = 0;
  }
  for (std::size_t i = 1; i < s.size(); ++i) {
    std::array<int, 2> next{kUnreachable, kUnreachable};
    for (int slot = 0; slot < 2; ++slot) {
      if (!allowed(s[i], slot)) continue;
      int v = best[slot];
      if (best[1 - slot] != kUnreachable) v = std::max(v, best[1 - slot] + 1);
      next[slot] = v;
    }
    best = next;
  }
  return std::max(best[0], best[1]);
}

int varbar(const SignPattern& s) { return varbar(std::span<const Sign>(s.signs)); }
int varbar(std::span<const Rational> v) { return varbar(sign(v)); }

namespace {

void check_membership_args(std::span<const Rational> v, int c) {
  if (v.empty()) throw std::invalid_argument("empty vector");
  if (std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; })) {
    throw std::invalid_argument("the zero vector is excluded");
  }
  if (c < 1 || c > static_cast<int>(v.size())) {
    throw std::invalid_argument("subspace dimension c must lie in [1, n]");
  }
}

}  // namespace

bool exists_nonnegative_subspace_containing(std::span<const Rational> v, int c) {
  check_membership_args(v, c);
  return var(v) < c;
}

bool exists_positive_subspace_containing(std::span<const Rational> v, int c) {
  check_membership_args(v, c);
  return varbar(v) < c;
}

std::vector<Sign> sign_chooser(std::span<const int> support, int n) {
  if (support.empty()) throw std::invalid_argument("sign_chooser: empty support");
  if (static_cast<int>(support.size()) > n) throw std::invalid_argument("sign_chooser: support larger than n");
  for (std::size_t j = 0; j < support.size(); ++j) {
    if (support[j] < 1 || support[j] > n) throw std::invalid_argument("sign_chooser: index out of range");
    if (j > 0 && support[j] <= support[j - 1]) {
      throw std::invalid_argument("sign_chooser: support must be strictly increasing");
    }
  }
  std::vector<Sign> sigma(support.size());
  sigma[0] = 1;
  for (std::size_t j = 1; j < support.size(); ++j) {
    const bool even_gap = (support[j] - support[j - 1]) % 2 == 0;
    sigma[j] = even_gap ? static_cast<Sign>(-sigma[j - 1]) : sigma[j - 1];
  }
  return sigma;
}

SignPattern sign_chooser_pattern(std::span<const int> support, int n) {
  const auto sigma = sign_chooser(support, n);
  SignPattern p(std::vector<Sign>(static_cast<std::size_t>(n), 0));
  for (std::size_t j = 0; j < support.size(); ++j) p.signs[support[j] - 1] = sigma[j];
  return p;
}

std::vector<SignPattern> all_nonzero_sign_patterns(int n) {
  std::vector<SignPattern> out;
  std::size_t total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  out.reserve(total - 1);
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<Sign> s(static_cast<std::size_t>(n));
    std::size_t c = code;
    for (int i = n - 1; i >= 0; --i) {
      s[i] = static_cast<Sign>(static_cast<int>(c % 3) - 1);
      c /= 3;
    }
    if (std::all_of(s.begin(), s.end(), [](Sign x) { return x == 0; })) continue;
    out.emplace_back(std::move(s));
  }
  return out;
}

}  // namespace trophyp
