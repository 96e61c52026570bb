#include "semiconj/epigroup.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "semiconj/error.hpp"

namespace semiconj {

namespace {

// First repeat in the power sequence a, a^2, ...: returns (index, period).
std::pair<int, int> index_period(Semigroup const& s, int a) {
  std::vector<int> first_seen(s.size(), -1);
  int x = a;
  int k = 1;
  while (first_seen[x] < 0) {
    first_seen[x] = k;
    x = s.at(x, a);
    ++k;
  }
  int index = first_seen[x];
  return {index, k - index};
}

}  // namespace

MonogenicData monogenic(Semigroup const& s, int a) {
  auto [index, period] = index_period(s, a);
  MonogenicData d;
  d.index = index;
  d.period = period;
  d.omega_exp = ((index + period - 1) / period) * period;
  d.omega = s.power(a, d.omega_exp);

  // a' = a^x for the least x >= max(index, 1) with x ≡ -1 (mod period);
  // verified below against the defining equations.
  int x = std::max(index, 1);
  while ((x + 1) % period != 0) ++x;
  d.pinv = s.power(a, x);
  d.double_pinv = s.at(s.at(a, d.pinv), a);

  int ap = d.pinv;
  bool ok = s.at(s.at(ap, a), ap) == ap && s.at(a, ap) == s.at(ap, a)
            && s.at(s.power(a, index + 1), ap) == s.power(a, index)
            && s.at(d.omega, d.omega) == d.omega
            && s.at(d.omega, a) == s.at(a, d.omega)
            && s.at(a, ap) == d.omega;
  if (ok) {
    auto pinv_of = [&s](int b) {
      auto [bi, bp] = index_period(s, b);
      int y = std::max(bi, 1);
      while ((y + 1) % bp != 0) ++y;
      return s.power(b, y);
    };
    // (a')' = a'', a''' = (a'')' = a', and (a')^omega = a^omega.
    ok = pinv_of(ap) == d.double_pinv && pinv_of(d.double_pinv) == ap;
    auto [pi, pp] = index_period(s, ap);
    int pomega_exp = ((pi + pp - 1) / pp) * pp;
    ok = ok && s.power(ap, pomega_exp) == d.omega;
  }
  if (!ok) {
    throw InternalError("pseudo-inverse verification failed for element "
                        + std::to_string(a));
  }
  return d;
}

EpiClassification epi_classification(Semigroup const& s) {
  EpiClassification c;
  c.index_of.reserve(s.size());
  int max_index = 0;
  for (int a = 0; a < s.size(); ++a) {
    int idx = monogenic(s, a).index;
    c.index_of.push_back(idx);
    max_index = std::max(max_index, idx);
  }
  c.is_epigroup = true;
  c.is_completely_regular = max_index <= 1;
  c.min_n_with_S_eq_Epi_n = max_index;
  return c;
}

VarietyMembership variety_membership(Semigroup const& s) {
  int n = s.size();
  std::vector<int> pinv(n), dpinv(n);
  int max_index = 0;
  for (int a = 0; a < n; ++a) {
    MonogenicData d = monogenic(s, a);
    pinv[a] = d.pinv;
    dpinv[a] = d.double_pinv;
    max_index = std::max(max_index, d.index);
  }
  VarietyMembership v;
  v.max_index = max_index;

  v.in_W = max_index <= 2;
  for (int x = 0; x < n && v.in_W; ++x) {
    for (int y = 0; y < n; ++y) {
      int xy = s.at(x, y);
      if (dpinv[xy] != xy) {
        v.in_W = false;
        break;
      }
    }
  }

  v.in_V = true;
  for (int x = 0; x < n && v.in_V; ++x) {
    for (int y = 0; y < n; ++y) {
      if (s.at(dpinv[x], y) != s.at(x, y) || s.at(x, dpinv[y]) != s.at(x, y)) {
        v.in_V = false;
        break;
      }
    }
  }
  return v;
}

IdentityReport pinv_identity_suite(Semigroup const& s) {
  int n = s.size();
  std::vector<int> pinv(n), dpinv(n);
  for (int a = 0; a < n; ++a) {
    MonogenicData d = monogenic(s, a);
    pinv[a] = d.pinv;
    dpinv[a] = d.double_pinv;
  }
  IdentityReport rep;
  auto fail = [&rep](std::string id, int x, int y) {
    rep.violations.push_back({std::move(id), x, y});
  };
  for (int x = 0; x < n; ++x) {
    int xp = pinv[x];
    if (s.at(s.at(xp, x), xp) != xp) fail("x'xx' = x'", x, -1);
    if (s.at(x, xp) != s.at(xp, x)) fail("xx' = x'x", x, -1);
    if (s.at(s.at(x, xp), x) != dpinv[x]) fail("xx'x = x''", x, -1);
    if (pinv[dpinv[x]] != xp) fail("x''' = x'", x, -1);
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (s.at(pinv[s.at(x, y)], x) != s.at(x, pinv[s.at(y, x)])) {
        fail("(xy)'x = x(yx)'", x, y);
      }
    }
  }
  return rep;
}

}  // namespace semiconj
