#include "semiconj/canonical.hpp"

#include <algorithm>
#include <numeric>

namespace semiconj {

namespace {

// Relabeled flat table under perm applied to the given flat table, compared
// lazily against best; replaces best when strictly smaller.
// Candidate entry at (i, j) is perm[t[inv[i]][inv[j]]].
void min_against(std::vector<int> const& flat, int n,
                 std::vector<int> const& perm, std::vector<int> const& inv,
                 std::vector<int>& best) {
  bool smaller = false;
  for (int i = 0; i < n; ++i) {
    int const* row = flat.data() + static_cast<size_t>(inv[i]) * n;
    for (int j = 0; j < n; ++j) {
      int v = perm[row[inv[j]]];
      int b = best[static_cast<size_t>(i) * n + j];
      if (!smaller) {
        if (v > b) return;
        if (v < b) smaller = true;
      }
      if (smaller) best[static_cast<size_t>(i) * n + j] = v;
    }
  }
}

void minimize_over_perms(std::vector<int> const& flat, int n,
                         std::vector<int>& best) {
  std::vector<int> perm(n), inv(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (int i = 0; i < n; ++i) inv[perm[i]] = i;
    min_against(flat, n, perm, inv, best);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

std::vector<int> transpose_flat(std::vector<int> const& flat, int n) {
  std::vector<int> t(flat.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      t[static_cast<size_t>(i) * n + j] = flat[static_cast<size_t>(j) * n + i];
    }
  }
  return t;
}

}  // namespace

std::vector<int> canonical_form_iso(Semigroup const& s) {
  int n = s.size();
  std::vector<int> best = s.flat_table();
  minimize_over_perms(s.flat_table(), n, best);
  return best;
}

std::vector<int> canonical_form(Semigroup const& s) {
  int n = s.size();
  std::vector<int> best = s.flat_table();
  minimize_over_perms(s.flat_table(), n, best);
  minimize_over_perms(transpose_flat(s.flat_table(), n), n, best);
  return best;
}

Semigroup relabel(Semigroup const& s, std::vector<int> const& perm) {
  int n = s.size();
  if (perm.size() != static_cast<size_t>(n)) {
    throw RangeError("permutation size mismatch");
  }
  std::vector<int> t(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      t[static_cast<size_t>(perm[i]) * n + perm[j]] = perm[s.at(i, j)];
    }
  }
  return Semigroup::build(n, std::move(t));
}

Semigroup transpose(Semigroup const& s) {
  return Semigroup::build(s.size(), transpose_flat(s.flat_table(), s.size()));
}

}  // namespace semiconj
