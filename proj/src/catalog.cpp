#include "trophyp/catalog.hpp"

#include <stdexcept>

namespace trophyp {

namespace {

class FamilySearch {
 public:
  FamilySearch(int n, int d) : n_(n), d_(d), cand_(k_subsets(n, d)) {
    index_.assign(static_cast<std::size_t>(full_set(n)) + 1, -1);
    for (std::size_t i = 0; i < cand_.size(); ++i) index_[cand_[i]] = static_cast<int>(i);
    state_.assign(cand_.size(), 0);
  }

  std::vector<Matroid> run() {
    recurse(0);
    return std::move(out_);
  }

 private:
  // state_: 0 undecided, 1 included, -1 excluded
  bool alive(std::size_t decided) const {
    for (std::size_t i = 0; i < decided; ++i) {
      if (state_[i] != 1) continue;
      for (std::size_t j = 0; j < decided; ++j) {
        if (i == j || state_[j] != 1) continue;
        const Subset b1 = cand_[i];
        const Subset b2 = cand_[j];
        for (Subset xs = b1 & ~b2; xs != 0; xs &= xs - 1) {
          const Subset x = xs & -xs;
          bool ok = false;
          for (Subset ys = b2 & ~b1; ys != 0 && !ok; ys &= ys - 1) {
            const int k = index_[(b1 & ~x) | (ys & -ys)];
            ok = static_cast<std::size_t>(k) >= decided || state_[k] == 1;
          }
          if (!ok) return false;
        }
      }
    }
    return true;
  }

  void recurse(std::size_t pos) {
    if (pos == cand_.size()) {
      std::vector<Subset> bases;
      for (std::size_t i = 0; i < cand_.size(); ++i) {
        if (state_[i] == 1) bases.push_back(cand_[i]);
      }
      if (!bases.empty()) out_.push_back(Matroid::from_bases_unchecked(n_, d_, std::move(bases)));
      return;
    }
    for (int choice : {1, -1}) {
      state_[pos] = static_cast<signed char>(choice);
      if (alive(pos + 1)) recurse(pos + 1);
    }
    state_[pos] = 0;
  }

  int n_;
  int d_;
  std::vector<Subset> cand_;
  std::vector<int> index_;
  std::vector<signed char> state_;
  std::vector<Matroid> out_;
};

}  // namespace

std::vector<Matroid> all_matroids_of_rank(int n, int d) {
  if (n < 0 || n > kMaxGround || d < 0 || d > n) throw std::invalid_argument("catalog: bad (n, d)");
  return FamilySearch(n, d).run();
}

std::vector<Matroid> all_matroids(int n) {
  std::vector<Matroid> out;
  for (int d = 0; d <= n; ++d) {
    auto part = all_matroids_of_rank(n, d);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

}  // namespace trophyp
