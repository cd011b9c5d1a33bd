#include "trophyp/symmetry.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

#include "trophyp/rng.hpp"

namespace trophyp {

SignedPermutation SignedPermutation::identity(int n) {
  SignedPermutation p;
  p.n = n;
  p.perm.resize(static_cast<std::size_t>(n));
  std::iota(p.perm.begin(), p.perm.end(), 1);
  p.signs.assign(static_cast<std::size_t>(n), 1);
  return p;
}

SignedPermutation SignedPermutation::make(std::vector<int> perm, std::vector<int> signs) {
  const int n = static_cast<int>(perm.size());
  if (static_cast<int>(signs.size()) != n) throw std::invalid_argument("perm and signs differ in length");
  std::vector<bool> hit(static_cast<std::size_t>(n) + 1, false);
  for (int x : perm) {
    if (x < 1 || x > n || hit[x]) throw std::invalid_argument("perm is not a bijection of [n]");
    hit[x] = true;
  }
  for (int s : signs) {
    if (s != 1 && s != -1) throw std::invalid_argument("signs must be +1 or -1");
  }
  return SignedPermutation{n, std::move(perm), std::move(signs)};
}

SignPattern SignedPermutation::apply(const SignPattern& s) const {
  if (static_cast<int>(s.size()) != n) throw std::invalid_argument("pattern length must equal n");
  std::vector<Sign> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[i] = static_cast<Sign>(signs[i] * s[perm[i] - 1]);
  return SignPattern(std::move(out));
}

RationalVector SignedPermutation::apply(const RationalVector& x) const {
  if (static_cast<int>(x.size()) != n) throw std::invalid_argument("vector length must equal n");
  RationalVector out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[i] = signs[i] * x[perm[i] - 1];
  return out;
}

SignedPermutation SignedPermutation::inverse() const {
  SignedPermutation q;
  q.n = n;
  q.perm.resize(static_cast<std::size_t>(n));
  q.signs.resize(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    q.perm[perm[i - 1] - 1] = i;
    q.signs[perm[i - 1] - 1] = signs[i - 1];
  }
  return q;
}

int SignedPermutation::order() const {
  const auto id = identity(n);
  SignedPermutation p = *this;
  int k = 1;
  while (p != id) {
    p = compose(p, *this);
    ++k;
  }
  return k;
}

std::string SignedPermutation::str() const {
  std::string out = "(";
  for (int i = 0; i < n; ++i) {
    if (i > 0) out += ", ";
    out += (signs[i] < 0 ? "-x" : "x") + std::to_string(perm[i]);
  }
  return out + ")";
}

SignedPermutation compose(const SignedPermutation& a, const SignedPermutation& b) {
  if (a.n != b.n) throw std::invalid_argument("composition of different sizes");
  SignedPermutation c;
  c.n = a.n;
  c.perm.resize(static_cast<std::size_t>(a.n));
  c.signs.resize(static_cast<std::size_t>(a.n));
  for (int i = 0; i < a.n; ++i) {
    const int j = a.perm[i];
    c.perm[i] = b.perm[j - 1];
    c.signs[i] = a.signs[i] * b.signs[j - 1];
  }
  return c;
}

SignedPermutation cyc(int c, int n) {
  auto p = SignedPermutation::identity(n);
  p.perm[0] = n;
  for (int i = 1; i < n; ++i) p.perm[i] = i;
  p.signs[0] = (c - 1) % 2 == 0 ? 1 : -1;
  return p;
}

SignedPermutation rev(int n) {
  auto p = SignedPermutation::identity(n);
  for (int i = 0; i < n; ++i) p.perm[i] = n - i;
  return p;
}

SignedPermutation neg(int n) {
  auto p = SignedPermutation::identity(n);
  std::fill(p.signs.begin(), p.signs.end(), -1);
  return p;
}

namespace {

// Patterns indexed by base-3 code, digit i = sign of x_{i+1} + 1.
class PatternTable {
 public:
  explicit PatternTable(int n) : n_(n) {
    pow3_.assign(static_cast<std::size_t>(n) + 1, 1);
    for (int i = 1; i <= n; ++i) pow3_[i] = pow3_[i - 1] * 3;
    varbar_.resize(static_cast<std::size_t>(pow3_[n]));
    std::vector<Sign> s(static_cast<std::size_t>(n));
    for (int code = 0; code < pow3_[n]; ++code) {
      int c = code;
      for (int i = 0; i < n; ++i) {
        s[i] = static_cast<Sign>(c % 3 - 1);
        c /= 3;
      }
      varbar_[code] = varbar(std::span<const Sign>(s));
    }
    zero_code_ = (pow3_[n] - 1) / 2;
  }

  int size() const { return pow3_[n_]; }
  int zero_code() const { return zero_code_; }
  int varbar_of(int code) const { return varbar_[code]; }
  int digit(int code, int i) const { return code / pow3_[i] % 3 - 1; }

  int image(const SignedPermutation& phi, int code) const {
    int out = 0;
    for (int i = 0; i < n_; ++i) out += (phi.signs[i] * digit(code, phi.perm[i] - 1) + 1) * pow3_[i];
    return out;
  }

 private:
  int n_;
  int zero_code_ = 0;
  std::vector<int> pow3_;
  std::vector<int> varbar_;
};

bool preserves_with(const PatternTable& t, const SignedPermutation& phi, int c) {
  for (int code = 0; code < t.size(); ++code) {
    if (code == t.zero_code() || t.varbar_of(code) >= c) continue;
    if (t.varbar_of(t.image(phi, code)) >= c) return false;
  }
  return true;
}

SignedPermutation adjacent_transposition(int n, int i, bool twisted) {
  auto p = SignedPermutation::identity(n);
  std::swap(p.perm[i - 1], p.perm[i]);
  if (twisted) {
    p.signs[i - 1] = -1;
    p.signs[i] = -1;
  }
  return p;
}

}  // namespace

bool preserves_threshold(const SignedPermutation& phi, int c) {
  if (c < 1 || c > phi.n - 1) throw std::invalid_argument("threshold must satisfy 1 <= c <= n - 1");
  return preserves_with(PatternTable(phi.n), phi, c);
}

std::vector<SignedPermutation> generated_group(const std::vector<SignedPermutation>& gens) {
  if (gens.empty()) return {};
  std::set<SignedPermutation> seen{SignedPermutation::identity(gens.front().n)};
  std::vector<SignedPermutation> work(seen.begin(), seen.end());
  while (!work.empty()) {
    const auto g = work.back();
    work.pop_back();
    for (const auto& h : gens) {
      auto gh = compose(g, h);
      if (seen.insert(gh).second) work.push_back(std::move(gh));
    }
  }
  return {seen.begin(), seen.end()};
}

GroupReport preserver_subgroup(int n, int c, int jobs) {
  if (n < 2 || n > 7) throw std::invalid_argument("preserver_subgroup supports 2 <= n <= 7");
  if (c < 1 || c > n - 1) throw std::invalid_argument("threshold must satisfy 1 <= c <= n - 1");
  const PatternTable table(n);
  GroupReport rep;
  rep.n = n;
  rep.c = c;
  // one task per leading entry of the permutation
  std::vector<std::vector<SignedPermutation>> parts(static_cast<std::size_t>(n));
  auto sweep = [&](int lead) {
    std::vector<int> perm{lead};
    for (int i = 1; i <= n; ++i) {
      if (i != lead) perm.push_back(i);
    }
    do {
      for (unsigned mask = 0; mask < (1U << n); ++mask) {
        std::vector<int> signs(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) signs[i] = (mask >> i & 1U) ? -1 : 1;
        SignedPermutation phi{n, perm, std::move(signs)};
        if (preserves_with(table, phi, c)) parts[lead - 1].push_back(std::move(phi));
      }
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
  };
  std::atomic<int> next{1};
  auto worker = [&] {
    for (int lead = next++; lead <= n; lead = next++) sweep(lead);
  };
  std::vector<std::thread> pool;
  for (int j = 1; j < std::min(jobs, n); ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::vector<SignedPermutation> found;
  for (auto& part : parts) found.insert(found.end(), part.begin(), part.end());
  std::sort(found.begin(), found.end());
  rep.order = found.size();
  for (const auto& g : found) ++rep.element_orders[g.order()];

  if (c == 1 || c == n - 1) {
    const bool twisted = c != 1;
    for (int i = 1; i < n; ++i) rep.generators.push_back(adjacent_transposition(n, i, twisted));
  } else {
    rep.generators = {cyc(c, n), rev(n)};
  }
  rep.generators.push_back(neg(n));
  const auto gen = generated_group(rep.generators);
  rep.generated_order = gen.size();
  rep.generator_match = gen == found;
  return rep;
}

MinorSignReport linear_map_preserves(const ExactMatrix& m, int c) {
  if (rank(m) != m.rows()) throw std::invalid_argument("linear map must be surjective (full row rank)");
  if (c < 1 || c > static_cast<int>(m.rows())) throw std::invalid_argument("c must satisfy 1 <= c <= rows");
  MinorSignReport rep;
  const auto rows = k_subsets(static_cast<int>(m.rows()), c);
  const auto cols = k_subsets(static_cast<int>(m.cols()), c);
  for (Subset r : rows) {
    std::vector<std::size_t> ri;
    for (int i : members(r)) ri.push_back(static_cast<std::size_t>(i) - 1);
    const ExactMatrix sub = m.select_rows(ri);
    for (Subset s : cols) {
      std::vector<std::size_t> ci;
      for (int j : members(s)) ci.push_back(static_cast<std::size_t>(j) - 1);
      const int sg = sgn(determinant(sub.select_columns(ci)));
      if (sg > 0 && !rep.positive) rep.positive = std::make_pair(r, s);
      if (sg < 0 && !rep.negative) rep.negative = std::make_pair(r, s);
      if (rep.positive && rep.negative) return rep;
    }
  }
  rep.preserves = true;
  return rep;
}

namespace {

// Row index of each column of a reduced matrix (-1 for zero columns) and its +-1 entry.
struct ColumnShape {
  std::vector<int> row;
  std::vector<int> entry;
};

std::optional<ColumnShape> column_shape(const ExactMatrix& r, std::string* why) {
  ColumnShape cs;
  for (std::size_t j = 0; j < r.cols(); ++j) {
    int row = -1, entry = 0;
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (sgn(r(i, j)) == 0) continue;
      if (row != -1 || (r(i, j) != 1 && r(i, j) != -1)) {
        if (why) *why = "column " + std::to_string(j + 1) + " is not 0 or +-e_i after row reduction";
        return std::nullopt;
      }
      row = static_cast<int>(i);
      entry = sgn(r(i, j));
    }
    cs.row.push_back(row);
    cs.entry.push_back(entry);
  }
  return cs;
}

// With nu_j = (-1)^j mu_j, zero columns drop out and the defects of Im x are the
// sign changes of nu_j sigma_{row(j)}. Between consecutive members of a block,
// nu steps by (-1)^r times the end-to-end product of each of the r top-level
// blocks nested in the gap; this keeps every gap within its budget.
class LambdaRule {
 public:
  LambdaRule(const ColumnShape& cs, std::size_t d) : cs_(cs), nu_(cs.row.size(), 1), done_(d, false), pi_(d, 1) {
    members_.resize(d);
    for (std::size_t j = 0; j < cs.row.size(); ++j) {
      if (cs.row[j] >= 0) members_[static_cast<std::size_t>(cs.row[j])].push_back(static_cast<int>(j));
    }
  }

  std::vector<int> lambda() {
    const int n = static_cast<int>(cs_.row.size());
    std::vector<int> out(static_cast<std::size_t>(n), 1);
    for (std::size_t r = 0; r < members_.size(); ++r) solve(r);
    for (const auto& mem : members_) {
      if (mem.empty()) continue;
      const int first_mu = (mem.front() % 2 == 0 ? 1 : -1) * nu_[mem.front()];
      for (int j : mem) out[j] = first_mu * (j % 2 == 0 ? 1 : -1) * nu_[j] * cs_.entry[j];
    }
    return out;
  }

 private:
  int solve(std::size_t r) {
    if (done_[r]) return pi_[r];
    done_[r] = true;
    const auto& mem = members_[r];
    if (mem.empty()) return 1;
    nu_[mem.front()] = 1;
    for (std::size_t t = 1; t < mem.size(); ++t) {
      int step = 1;
      for (int x = mem[t - 1] + 1; x < mem[t];) {
        const int b = cs_.row[x];
        if (b < 0) {
          ++x;
          continue;
        }
        step *= -solve(static_cast<std::size_t>(b));
        x = members_[static_cast<std::size_t>(b)].back() + 1;
      }
      nu_[mem[t]] = nu_[mem[t - 1]] * step;
    }
    pi_[r] = nu_[mem.front()] * nu_[mem.back()];
    return pi_[r];
  }

  const ColumnShape& cs_;
  std::vector<std::vector<int>> members_;
  std::vector<int> nu_;
  std::vector<bool> done_;
  std::vector<int> pi_;
};

bool sign_check(const ColumnShape& cs, std::size_t d, const std::vector<int>& lambda) {
  const int n = static_cast<int>(cs.row.size());
  const int bound = n - static_cast<int>(d);
  std::vector<int> sigma(d, -1);
  std::vector<Sign> y(static_cast<std::size_t>(n));
  for (;;) {
    for (int j = 0; j < n; ++j) y[j] = cs.row[j] < 0 ? 0 : static_cast<Sign>(lambda[j] * cs.entry[j] * sigma[cs.row[j]]);
    if (varbar(std::span<const Sign>(y)) < bound) return false;
    std::size_t i = 0;
    while (i < d && sigma[i] == 1) sigma[i++] = -1;
    if (i == d) return true;
    ++sigma[i];
  }
}

void require_integer(const ExactMatrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).get_den() != 1) throw std::invalid_argument("toric exponent matrix must be integral");
    }
  }
}

}  // namespace

bool toric_sign_check(const ExactMatrix& reduced, const std::vector<int>& lambda) {
  if (lambda.size() != reduced.cols()) throw std::invalid_argument("one lambda entry per column");
  const auto cs = column_shape(reduced, nullptr);
  if (!cs) throw std::invalid_argument("reduced matrix must have columns in {0, +-e_i}");
  return sign_check(*cs, reduced.rows(), lambda);
}

ToricVerdict toric_positively_hyperbolic(const ExactMatrix& a) {
  require_integer(a);
  if (rank(a) != a.rows()) throw std::invalid_argument("toric exponent matrix must have full row rank");
  ToricVerdict v;
  v.reduced = rref(a);
  const std::size_t d = a.rows();
  const int n = static_cast<int>(a.cols());
  for (std::size_t i = 0; i < d; ++i) {
    Subset s = 0;
    for (int j = 0; j < n; ++j) {
      if (sgn(v.reduced(i, static_cast<std::size_t>(j))) != 0) s |= Subset{1} << j;
    }
    v.row_supports.push_back(s);
  }
  const auto cs = column_shape(v.reduced, &v.reason);
  if (!cs) return v;
  CyclicPartition part{n, v.row_supports};
  std::sort(part.blocks.begin(), part.blocks.end(),
            [](Subset x, Subset y) { return (x & -x) < (y & -y); });
  if (!is_noncrossing_partition(part)) {
    v.reason = "row supports cross";
    return v;
  }
  auto lambda = LambdaRule(*cs, d).lambda();
  if (sign_check(*cs, d, lambda)) {
    v.positively_hyperbolic = true;
    v.lambda = std::move(lambda);
    v.lambda_from_rule = true;
    v.reason = "columns in {0, +-e_i} with non-crossing row supports";
    return v;
  }
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    std::vector<int> l(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) l[j] = (mask >> j & 1U) ? -1 : 1;
    if (sign_check(*cs, d, l)) {
      v.positively_hyperbolic = true;
      v.lambda = std::move(l);
      v.reason = "columns in {0, +-e_i} with non-crossing row supports; lambda found by search";
      return v;
    }
  }
  v.reason = "no lambda in {+-1}^n passes the sign check";
  return v;
}

ToricSampleReport toric_sample_check(const ExactMatrix& a, const std::vector<int>& lambda, int trials, std::uint64_t seed) {
  require_integer(a);
  if (lambda.size() != a.cols()) throw std::invalid_argument("one lambda entry per column");
  const std::size_t d = a.rows();
  const int n = static_cast<int>(a.cols());
  Rng rng(seed);
  ToricSampleReport rep;
  rep.bound = n - static_cast<int>(d);
  rep.min_varbar = n;
  std::vector<Complex> t(d);
  for (int trial = 0; trial < trials; ++trial) {
    for (auto& z : t) {
      do {
        z = Complex(rng.rational(-10, 10, 5), rng.rational(-10, 10, 5));
      } while (z.is_zero());
    }
    RationalVector im;
    for (int j = 0; j < n; ++j) {
      Complex x(lambda[j]);
      for (std::size_t i = 0; i < d; ++i) {
        const long e = a(i, static_cast<std::size_t>(j)).get_num().get_si();
        const Complex base = e >= 0 ? t[i] : Complex(1) / t[i];
        for (long k = 0; k < (e >= 0 ? e : -e); ++k) x = x * base;
      }
      im.push_back(x.im);
    }
    const int vb = varbar(std::span<const Rational>(im));
    rep.min_varbar = std::min(rep.min_varbar, vb);
    if (vb < rep.bound) ++rep.violations;
    ++rep.trials;
  }
  if (trials == 0) rep.min_varbar = 0;
  return rep;
}

ToricMatroid toric_algebraic_matroid(const ExactMatrix& a) {
  ToricMatroid tm{matroid_of_columns(a), std::nullopt};
  if (toric_positively_hyperbolic(a).positively_hyperbolic) tm.positroid = is_positroid(tm.matroid).positroid;
  return tm;
}

}  // namespace trophyp
