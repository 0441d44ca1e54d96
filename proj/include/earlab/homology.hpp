#pragma once

#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace earlab {

using Rational = boost::multiprecision::cpp_rational;

/// Sparse row: column index -> nonzero coefficient.
using SparseRow = std::map<int, Rational>;

/// Rank over the rationals by incremental row echelon reduction.
/// Pivot rows are kept normalized so that their leading coefficient is 1.
inline long long rational_rank(const std::vector<SparseRow>& rows) {
  std::map<int, SparseRow> pivots;
  for (SparseRow row : rows) {
    while (!row.empty()) {
      auto lead = row.begin();
      int col = lead->first;
      auto pit = pivots.find(col);
      if (pit == pivots.end()) {
        Rational inv = 1 / lead->second;
        for (auto& [c, v] : row) v *= inv;
        pivots.emplace(col, std::move(row));
        break;
      }
      Rational factor = lead->second;
      for (const auto& [c, v] : pit->second) {
        auto it = row.find(c);
        if (it == row.end()) {
          row.emplace(c, -factor * v);
        } else {
          it->second -= factor * v;
          if (it->second == 0) row.erase(it);
        }
      }
    }
  }
  return static_cast<long long>(pivots.size());
}

}  // namespace earlab
