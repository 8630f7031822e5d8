#pragma once

// Min-cost perfect matching on a square matrix with missing edges.
// Shortest augmenting paths with row/column potentials (Hungarian method,
// Jonker-Volgenant style), O(k^3).

#include <limits>
#include <optional>
#include <vector>

namespace vml {

template <class T>
struct Assignment {
  T cost{};
  std::vector<int> row_to_col;
};

/// cost[i * k + j] is used only where present[i * k + j] is true. Returns
/// nullopt when no perfect matching uses present edges only.
template <class T>
std::optional<Assignment<T>> solve_assignment(int k, const std::vector<T>& cost, const std::vector<char>& present) {
  Assignment<T> out;
  if (k == 0) return out;
  constexpr T kInf = std::numeric_limits<T>::has_infinity ? std::numeric_limits<T>::infinity()
                                                          : std::numeric_limits<T>::max();
  // 1-based rows/columns; column 0 is the virtual start of each search.
  std::vector<T> u(k + 1, T{}), v(k + 1, T{});
  std::vector<int> match(k + 1, 0), way(k + 1, 0);
  for (int i = 1; i <= k; ++i) {
    match[0] = i;
    int j0 = 0;
    std::vector<T> minv(k + 1, kInf);
    std::vector<char> used(k + 1, 0);
    do {
      used[j0] = 1;
      const int i0 = match[j0];
      T delta = kInf;
      int j1 = -1;
      for (int j = 1; j <= k; ++j) {
        if (used[j]) continue;
        const std::size_t idx = static_cast<std::size_t>(i0 - 1) * k + (j - 1);
        if (present[idx]) {
          const T cur = cost[idx] - u[i0] - v[j];
          if (cur < minv[j]) {
            minv[j] = cur;
            way[j] = j0;
          }
        }
        if (minv[j] != kInf && (j1 < 0 || minv[j] < delta)) {
          delta = minv[j];
          j1 = j;
        }
      }
      if (j1 < 0) return std::nullopt;  // no reachable column: Hall's condition fails
      for (int j = 0; j <= k; ++j) {
        if (used[j]) {
          u[match[j]] += delta;
          v[j] -= delta;
        } else if (minv[j] != kInf) {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      const int j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  out.row_to_col.assign(k, -1);
  for (int j = 1; j <= k; ++j) out.row_to_col[match[j] - 1] = j - 1;
  for (int i = 0; i < k; ++i) out.cost += cost[static_cast<std::size_t>(i) * k + out.row_to_col[i]];
  return out;
}

}  // namespace vml
