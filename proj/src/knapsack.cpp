#include "pbrp/knapsack.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "pbrp/errors.hpp"

namespace pbrp {

namespace {

constexpr std::int64_t kInfWeight = std::numeric_limits<std::int64_t>::max();
constexpr std::int64_t kMaxProfitSum = 20'000'000;    // exact DP table bound
constexpr std::int64_t kMaxKcgProfitSum = 2'000'000;  // tree DP table bound

void check_knapsack(const KnapsackInstance& k) {
  if (k.weights.size() != k.profits.size()) {
    throw Error(ErrorCode::ArityMismatch, "weights and profits lengths differ");
  }
  if (k.capacity < 0) {
    throw Error(ErrorCode::CapacityNegative, "knapsack capacity is negative");
  }
  for (auto w : k.weights) {
    if (w < 0) throw Error(ErrorCode::NegativeQuantity, "negative item weight");
  }
  for (auto p : k.profits) {
    if (p < 0) throw Error(ErrorCode::NegativeQuantity, "negative item profit");
  }
}

bool disjoint_sorted(const std::vector<int>& a, const std::vector<int>& b) {
  auto it_a = a.begin();
  auto it_b = b.begin();
  while (it_a != a.end() && it_b != b.end()) {
    if (*it_a == *it_b) return false;
    if (*it_a < *it_b) ++it_a; else ++it_b;
  }
  return true;
}

}  // namespace

KnapsackSolution knapsack_exact(const KnapsackInstance& k) {
  check_knapsack(k);
  const int n = static_cast<int>(k.profits.size());

  BigInt profit_sum_big = 0;
  for (auto p : k.profits) profit_sum_big += p;
  BigInt weight_sum_big = 0;
  for (auto w : k.weights) weight_sum_big += w;
  if (profit_sum_big > kMaxProfitSum) {
    throw Error(ErrorCode::TableTooLarge,
                "profit-indexed table would need " + profit_sum_big.str() + " entries");
  }
  if (weight_sum_big > std::numeric_limits<std::int64_t>::max() / 2) {
    throw Error(ErrorCode::ScaleOverflow, "total weight too large");
  }
  const auto psum = profit_sum_big.convert_to<std::int64_t>();

  // min_weight[p] = lightest subset with profit exactly p
  std::vector<std::int64_t> min_weight(psum + 1, kInfWeight);
  min_weight[0] = 0;
  std::vector<bool> take(static_cast<std::size_t>(n) * (psum + 1), false);
  for (int i = 0; i < n; ++i) {
    const auto pi = k.profits[i];
    const auto wi = k.weights[i];
    for (std::int64_t p = psum; p >= pi; --p) {
      if (min_weight[p - pi] == kInfWeight) continue;
      const std::int64_t candidate = min_weight[p - pi] + wi;
      if (candidate < min_weight[p]) {
        min_weight[p] = candidate;
        take[static_cast<std::size_t>(i) * (psum + 1) + p] = true;
      }
    }
  }

  std::int64_t best = 0;
  for (std::int64_t p = psum; p >= 0; --p) {
    if (min_weight[p] <= k.capacity) {
      best = p;
      break;
    }
  }

  KnapsackSolution sol;
  sol.profit = best;
  std::int64_t p = best;
  for (int i = n - 1; i >= 0; --i) {
    if (take[static_cast<std::size_t>(i) * (psum + 1) + p]) {
      sol.chosen.push_back(i);
      sol.weight += k.weights[i];
      p -= k.profits[i];
    }
  }
  std::reverse(sol.chosen.begin(), sol.chosen.end());
  return sol;
}

KnapsackSolution knapsack_fptas(const KnapsackInstance& k, const Rational& eps) {
  check_knapsack(k);
  if (eps <= 0 || eps >= 1) {
    throw Error(ErrorCode::BadEpsilon, "epsilon must lie in (0, 1)");
  }
  const int n = static_cast<int>(k.profits.size());

  std::vector<int> eligible;
  std::int64_t p_max = 0;
  for (int i = 0; i < n; ++i) {
    if (k.weights[i] <= k.capacity) {
      eligible.push_back(i);
      p_max = std::max(p_max, k.profits[i]);
    }
  }
  KnapsackSolution sol;
  if (eligible.empty() || p_max == 0) return sol;

  // scale = eps * p_max / n; flooring loses at most scale per item, so at
  // most eps * p_max <= eps * OPT in total
  const Rational scale = eps * Rational(p_max, n);
  KnapsackInstance scaled;
  scaled.capacity = k.capacity;
  for (int i : eligible) {
    scaled.weights.push_back(k.weights[i]);
    scaled.profits.push_back(
        to_int64_checked(rational_floor(Rational(k.profits[i]) / scale), "scaled profit"));
  }
  const KnapsackSolution inner = knapsack_exact(scaled);

  for (int idx : inner.chosen) {
    const int item = eligible[idx];
    sol.chosen.push_back(item);
    sol.profit += k.profits[item];
    sol.weight += k.weights[item];
  }
  return sol;
}

ConflictGraph ConflictGraph::from_edges(int node_count, std::vector<std::pair<int, int>> edges) {
  for (auto& e : edges) {
    if (e.first == e.second) {
      throw Error(ErrorCode::SchemaError, "conflict graph has a self-loop");
    }
    if (e.first < 0 || e.second < 0 || e.first >= node_count || e.second >= node_count) {
      throw Error(ErrorCode::IndexOutOfRange, "conflict graph edge endpoint out of range");
    }
    if (e.first > e.second) std::swap(e.first, e.second);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return ConflictGraph{node_count, std::move(edges)};
}

bool ConflictGraph::has_edge(int a, int b) const {
  if (a > b) std::swap(a, b);
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(a, b));
}

std::vector<int> LaminarForest::roots() const {
  std::vector<int> out;
  for (int i = 0; i < node_count(); ++i) {
    if (parent[i] < 0) out.push_back(i);
  }
  return out;
}

LaminarForest LaminarForest::from_family(const std::vector<std::vector<int>>& sets) {
  const int n = static_cast<int>(sets.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const auto& a = sets[i];
      const auto& b = sets[j];
      if (disjoint_sorted(a, b)) continue;
      if (!std::includes(b.begin(), b.end(), a.begin(), a.end()) &&
          !std::includes(a.begin(), a.end(), b.begin(), b.end())) {
        throw Error(ErrorCode::NotLaminar, "sets " + std::to_string(i) + " and " +
                                               std::to_string(j) + " properly cross");
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return sets[a].size() > sets[b].size(); });

  LaminarForest forest;
  forest.parent.assign(n, -1);
  forest.children.assign(n, {});
  for (int pos = 0; pos < n; ++pos) {
    const int i = order[pos];
    if (sets[i].empty()) continue;  // isolated root
    for (int q = pos - 1; q >= 0; --q) {
      const int j = order[q];
      if (std::includes(sets[j].begin(), sets[j].end(), sets[i].begin(), sets[i].end())) {
        forest.parent[i] = j;  // nearest superset; equal sets chain by position
        break;
      }
    }
    if (forest.parent[i] >= 0) forest.children[forest.parent[i]].push_back(i);
  }
  for (auto& c : forest.children) std::sort(c.begin(), c.end());
  return forest;
}

std::vector<std::pair<int, int>> LaminarForest::comparable_pairs() const {
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> stack;
  auto visit = [&](auto&& self, int v) -> void {
    for (int anc : stack) {
      pairs.emplace_back(std::min(anc, v), std::max(anc, v));
    }
    stack.push_back(v);
    for (int c : children[v]) self(self, c);
    stack.pop_back();
  };
  for (int r : roots()) visit(visit, r);
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

namespace {

using WeightTable = std::vector<std::optional<Rational>>;

WeightTable convolve(const WeightTable& a, const WeightTable& b) {
  WeightTable out(a.size() + b.size() - 1);
  for (std::size_t qa = 0; qa < a.size(); ++qa) {
    if (!a[qa]) continue;
    for (std::size_t qb = 0; qb < b.size(); ++qb) {
      if (!b[qb]) continue;
      const Rational w = *a[qa] + *b[qb];
      auto& slot = out[qa + qb];
      if (!slot || w < *slot) slot = w;
    }
  }
  return out;
}

struct NodeDp {
  WeightTable best;
  std::vector<WeightTable> folds;  // folds[k]: children[0..k) combined
  std::vector<char> took_self;
};

}  // namespace

KcgSolution laminar_conflict_knapsack(const KcgInstance& k, const LaminarForest& forest,
                                      const Rational& eps) {
  const int n = k.graph.node_count;
  if (static_cast<int>(k.profits.size()) != n || static_cast<int>(k.weights.size()) != n ||
      forest.node_count() != n) {
    throw Error(ErrorCode::ArityMismatch, "conflict-knapsack vector lengths disagree");
  }
  if (k.capacity < 0) {
    throw Error(ErrorCode::CapacityNegative, "conflict-knapsack capacity is negative");
  }
  for (const auto& w : k.weights) {
    if (w < 0) throw Error(ErrorCode::NegativeQuantity, "negative node weight");
  }
  if (eps < 0 || eps >= 1) {
    throw Error(ErrorCode::BadEpsilon, "epsilon must lie in [0, 1)");
  }
  if (forest.comparable_pairs() != k.graph.edges) {
    throw Error(ErrorCode::GraphForestMismatch,
                "conflict edges are not the comparable pairs of the forest");
  }

  // negative-profit nodes never help: excluding one keeps the antichain an
  // antichain and only lowers weight
  std::vector<bool> eligible(n, false);
  Rational p_max = 0;
  for (int i = 0; i < n; ++i) {
    if (k.profits[i] >= 0 && k.weights[i] <= k.capacity) {
      eligible[i] = true;
      p_max = std::max(p_max, k.profits[i]);
    }
  }

  KcgSolution sol;
  sol.profit = 0;
  sol.weight = 0;
  if (p_max == 0) return sol;  // nothing improves on the empty antichain

  std::vector<std::int64_t> scaled(n, 0);
  if (eps == 0) {
    for (int i = 0; i < n; ++i) {
      if (!eligible[i]) continue;
      if (denominator(k.profits[i]) != 1) {
        throw Error(ErrorCode::BadEpsilon, "exact mode (eps = 0) requires integer profits");
      }
      scaled[i] = to_int64_checked(numerator(k.profits[i]), "profit");
    }
  } else {
    const Rational scale = eps * p_max / n;
    for (int i = 0; i < n; ++i) {
      if (eligible[i]) {
        scaled[i] = to_int64_checked(rational_floor(k.profits[i] / scale), "scaled profit");
      }
    }
  }
  BigInt total = 0;
  for (int i = 0; i < n; ++i) total += scaled[i];
  if (total > kMaxKcgProfitSum) {
    throw Error(ErrorCode::TableTooLarge,
                "profit-indexed tree table would need " + total.str() + " entries");
  }

  std::vector<NodeDp> dp(n);
  auto solve_node = [&](auto&& self, int v) -> void {
    WeightTable fold(1);
    fold[0] = Rational(0);
    dp[v].folds.push_back(fold);
    for (int c : forest.children[v]) {
      self(self, c);
      fold = convolve(fold, dp[c].best);
      dp[v].folds.push_back(fold);
    }
    // taking v rules out its whole subtree, so it competes with the fold
    WeightTable best = std::move(fold);
    dp[v].took_self.assign(best.size(), 0);
    if (eligible[v]) {
      const auto q = static_cast<std::size_t>(scaled[v]);
      if (best.size() <= q) {
        best.resize(q + 1);
        dp[v].took_self.resize(q + 1, 0);
      }
      if (!best[q] || k.weights[v] < *best[q]) {
        best[q] = k.weights[v];
        dp[v].took_self[q] = 1;
      }
    }
    dp[v].best = std::move(best);
  };

  const auto roots = forest.roots();
  std::vector<WeightTable> root_folds;
  WeightTable fold(1);
  fold[0] = Rational(0);
  root_folds.push_back(fold);
  for (int r : roots) {
    solve_node(solve_node, r);
    fold = convolve(fold, dp[r].best);
    root_folds.push_back(fold);
  }

  std::size_t best_q = 0;
  for (std::size_t q = fold.size(); q-- > 0;) {
    if (fold[q] && *fold[q] <= k.capacity) {
      best_q = q;
      break;
    }
  }

  // walk the stored folds back to a selection achieving (best_q, min weight)
  auto reconstruct = [&](auto&& self, int v, std::size_t q) -> void {
    if (q == 0) return;  // the empty selection achieves weight 0
    if (q < dp[v].took_self.size() && dp[v].took_self[q]) {
      sol.chosen.push_back(v);
      return;
    }
    const auto& kids = forest.children[v];
    for (std::size_t idx = kids.size(); idx-- > 0;) {
      const WeightTable& prev = dp[v].folds[idx];
      const WeightTable& child_best = dp[kids[idx]].best;
      const Rational target = *dp[v].folds[idx + 1][q];
      for (std::size_t qc = 0; qc <= q && qc < child_best.size(); ++qc) {
        if (!child_best[qc] || q - qc >= prev.size() || !prev[q - qc]) continue;
        if (*prev[q - qc] + *child_best[qc] == target) {
          self(self, kids[idx], qc);
          q -= qc;
          break;
        }
      }
      if (q == 0) break;
    }
  };

  std::size_t q = best_q;
  for (std::size_t idx = roots.size(); idx-- > 0 && q > 0;) {
    const WeightTable& prev = root_folds[idx];
    const WeightTable& root_best = dp[roots[idx]].best;
    const Rational target = *root_folds[idx + 1][q];
    for (std::size_t qc = 0; qc <= q && qc < root_best.size(); ++qc) {
      if (!root_best[qc] || q - qc >= prev.size() || !prev[q - qc]) continue;
      if (*prev[q - qc] + *root_best[qc] == target) {
        reconstruct(reconstruct, roots[idx], qc);
        q -= qc;
        break;
      }
    }
  }

  std::sort(sol.chosen.begin(), sol.chosen.end());
  for (int v : sol.chosen) {
    sol.profit += k.profits[v];
    sol.weight += k.weights[v];
  }
  return sol;
}

ChordalityResult is_chordal(const ConflictGraph& g) {
  const int n = g.node_count;
  std::vector<std::vector<int>> adj(n);
  for (const auto& [a, b] : g.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& v : adj) std::sort(v.begin(), v.end());

  // lexicographic BFS; labels hold n - position of numbered neighbours so
  // that earlier neighbours dominate under plain lexicographic comparison
  std::vector<std::vector<int>> label(n);
  std::vector<int> sigma;
  std::vector<bool> numbered(n, false);
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v) {
      if (numbered[v]) continue;
      if (pick < 0 || label[v] > label[pick]) pick = v;
    }
    numbered[pick] = true;
    sigma.push_back(pick);
    for (int u : adj[pick]) {
      if (!numbered[u]) label[u].push_back(n - step);
    }
  }

  std::vector<int> peo(sigma.rbegin(), sigma.rend());
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[peo[i]] = i;

  // perfect elimination check: the earliest later neighbour of v must be
  // adjacent to every other later neighbour of v
  for (int v = 0; v < n; ++v) {
    int first = -1;
    for (int u : adj[v]) {
      if (pos[u] > pos[v] && (first < 0 || pos[u] < pos[first])) first = u;
    }
    if (first < 0) continue;
    for (int u : adj[v]) {
      if (u == first || pos[u] <= pos[v]) continue;
      if (!std::binary_search(adj[first].begin(), adj[first].end(), u)) {
        return {false, {}};
      }
    }
  }
  return {true, peo};
}

}  // namespace pbrp
