#include "tautchi/partitions.hpp"

namespace tautchi {

static void rec(int n, int max_part, std::vector<int>& cur,
                std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    rec(n - p, p, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> partitions_of(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  if (n >= 0) rec(n, n == 0 ? 1 : n, cur, out);
  return out;
}

} // namespace tautchi
