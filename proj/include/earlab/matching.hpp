#pragma once

#include <limits>
#include <queue>
#include <vector>

namespace earlab {

/// Maximum bipartite matching (Hopcroft–Karp). adj[u] lists right vertices
/// adjacent to left vertex u.
class BipartiteMatching {
 public:
  BipartiteMatching(int left, int right, std::vector<std::vector<int>> adj)
      : left_(left), right_(right), adj_(std::move(adj)), match_l_(left, -1), match_r_(right, -1), dist_(left) {
    while (bfs())
      for (int u = 0; u < left_; ++u)
        if (match_l_[u] < 0 && dfs(u)) ++size_;
  }

  int size() const { return size_; }
  bool saturates_left() const { return size_ == left_; }
  int mate_of_left(int u) const { return match_l_[u]; }
  int mate_of_right(int v) const { return match_r_[v]; }

 private:
  static constexpr int kInf = std::numeric_limits<int>::max();

  bool bfs() {
    std::queue<int> q;
    bool found = false;
    for (int u = 0; u < left_; ++u) {
      dist_[u] = match_l_[u] < 0 ? 0 : kInf;
      if (dist_[u] == 0) q.push(u);
    }
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : adj_[u]) {
        int w = match_r_[v];
        if (w < 0) {
          found = true;
        } else if (dist_[w] == kInf) {
          dist_[w] = dist_[u] + 1;
          q.push(w);
        }
      }
    }
    return found;
  }

  bool dfs(int u) {
    for (int v : adj_[u]) {
      int w = match_r_[v];
      if (w < 0 || (dist_[w] == dist_[u] + 1 && dfs(w))) {
        match_l_[u] = v;
        match_r_[v] = u;
        return true;
      }
    }
    dist_[u] = kInf;
    return false;
  }

  int left_, right_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> match_l_, match_r_, dist_;
  int size_ = 0;
};

}  // namespace earlab
