#include "specvar/matching.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <string>

#include "specvar/error.hpp"
#include "specvar/hypgeo.hpp"

namespace specvar {

namespace {

constexpr std::size_t kFree = std::numeric_limits<std::size_t>::max();

// Hopcroft-Karp on the bipartite graph {(i, j) : c(i, j) <= threshold}.
class HopcroftKarp {
 public:
  HopcroftKarp(const CostMatrix& c, double threshold)
      : n_(c.dim()), adj_(n_), match_row_(n_, kFree), match_col_(n_, kFree), dist_(n_) {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (c(i, j) <= threshold) adj_[i].push_back(j);
  }

  std::size_t run() {
    std::size_t size = 0;
    while (bfs()) {
      for (std::size_t i = 0; i < n_; ++i)
        if (match_row_[i] == kFree && dfs(i)) ++size;
    }
    return size;
  }

  const std::vector<std::size_t>& row_matches() const { return match_row_; }

 private:
  bool bfs() {
    std::queue<std::size_t> q;
    bool found = false;
    for (std::size_t i = 0; i < n_; ++i) {
      if (match_row_[i] == kFree) {
        dist_[i] = 0;
        q.push(i);
      } else {
        dist_[i] = kFree;
      }
    }
    while (!q.empty()) {
      const std::size_t i = q.front();
      q.pop();
      for (const std::size_t j : adj_[i]) {
        const std::size_t next = match_col_[j];
        if (next == kFree) {
          found = true;
        } else if (dist_[next] == kFree) {
          dist_[next] = dist_[i] + 1;
          q.push(next);
        }
      }
    }
    return found;
  }

  bool dfs(std::size_t i) {
    for (const std::size_t j : adj_[i]) {
      const std::size_t next = match_col_[j];
      if (next == kFree || (dist_[next] == dist_[i] + 1 && dfs(next))) {
        match_row_[i] = j;
        match_col_[j] = i;
        return true;
      }
    }
    dist_[i] = kFree;
    return false;
  }

  std::size_t n_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::size_t> match_row_;
  std::vector<std::size_t> match_col_;
  std::vector<std::size_t> dist_;
};

void require_same_size(const Spectrum& a, const Spectrum& b) {
  if (a.size() != b.size()) {
    throw SizeMismatch("spectra have sizes " + std::to_string(a.size()) + " and " +
                       std::to_string(b.size()));
  }
}

}  // namespace

CostMatrix::CostMatrix(std::size_t n, std::vector<double> costs) : n_(n), c_(std::move(costs)) {
  if (c_.size() != n * n) throw InvalidInputs("cost matrix must have n*n entries");
  for (const double x : c_) {
    if (!(std::isfinite(x) && x >= 0.0)) throw InvalidInputs("costs must be finite and non-negative");
  }
}

CostMatrix CostMatrix::euclidean(const Spectrum& a, const Spectrum& b) {
  require_same_size(a, b);
  const std::size_t n = a.size();
  std::vector<double> c(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c[i * n + j] = std::abs(a[i] - b[j]);
  return CostMatrix(n, std::move(c));
}

CostMatrix CostMatrix::hyperbolic(const Spectrum& a, const Spectrum& b) {
  require_same_size(a, b);
  const std::size_t n = a.size();
  std::vector<double> c(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c[i * n + j] = pseudo_distance(a[i], b[j]);
  return CostMatrix(n, std::move(c));
}

Assignment bottleneck_assignment(const CostMatrix& c) {
  const std::size_t n = c.dim();
  if (n == 0) return {};
  std::vector<double> levels = c.values();
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  // The largest level always admits a perfect matching (complete graph).
  std::size_t lo = 0;
  std::size_t hi = levels.size() - 1;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (HopcroftKarp(c, levels[mid]).run() == n) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  HopcroftKarp final_match(c, levels[lo]);
  final_match.run();
  Assignment out;
  out.permutation = final_match.row_matches();
  out.value = 0.0;
  for (std::size_t i = 0; i < n; ++i) out.value = std::max(out.value, c(i, out.permutation[i]));
  return out;
}

double d_euclid(const Spectrum& a, const Spectrum& b) {
  return bottleneck_assignment(CostMatrix::euclidean(a, b)).value;
}

double d_hyper(const Spectrum& a, const Spectrum& b) {
  return bottleneck_assignment(CostMatrix::hyperbolic(a, b)).value;
}

}  // namespace specvar
