#include "semiconj/pinj.hpp"

#include <algorithm>
#include <sstream>

#include "semiconj/error.hpp"

namespace semiconj {

PartialInjection::PartialInjection(int n, std::vector<int> map)
    : n_(n), map_(std::move(map)) {
  if (n < 0 || map_.size() != static_cast<size_t>(n)) {
    throw RangeError("map length must equal n");
  }
  std::vector<char> used(n, 0);
  for (int v : map_) {
    if (v == kAbsent) continue;
    if (v < 0 || v >= n) throw RangeError("image point out of range");
    if (used[v]) throw RangeError("map is not injective");
    used[v] = 1;
  }
}

PartialInjection PartialInjection::empty(int n) {
  return PartialInjection(n, std::vector<int>(n, kAbsent));
}

PartialInjection PartialInjection::identity(int n) {
  std::vector<int> m(n);
  for (int i = 0; i < n; ++i) m[i] = i;
  return PartialInjection(n, std::move(m));
}

bool PartialInjection::in_image(int x) const {
  for (int v : map_) {
    if (v == x) return true;
  }
  return false;
}

std::vector<int> PartialInjection::domain() const {
  std::vector<int> d;
  for (int x = 0; x < n_; ++x) {
    if (map_[x] != kAbsent) d.push_back(x);
  }
  return d;
}

std::vector<int> PartialInjection::image() const {
  std::vector<int> im;
  for (int x = 0; x < n_; ++x) {
    if (map_[x] != kAbsent) im.push_back(map_[x]);
  }
  std::sort(im.begin(), im.end());
  return im;
}

std::vector<int> PartialInjection::span() const {
  std::vector<char> in(n_, 0);
  for (int x = 0; x < n_; ++x) {
    if (map_[x] != kAbsent) {
      in[x] = 1;
      in[map_[x]] = 1;
    }
  }
  std::vector<int> sp;
  for (int x = 0; x < n_; ++x) {
    if (in[x]) sp.push_back(x);
  }
  return sp;
}

PartialInjection PartialInjection::compose(PartialInjection const& g) const {
  if (n_ != g.n_) throw DimensionMismatch("ground sets differ");
  std::vector<int> m(n_, kAbsent);
  for (int x = 0; x < n_; ++x) {
    if (map_[x] != kAbsent && g.map_[map_[x]] != kAbsent) {
      m[x] = g.map_[map_[x]];
    }
  }
  return PartialInjection(n_, std::move(m));
}

PartialInjection PartialInjection::inverse() const {
  std::vector<int> m(n_, kAbsent);
  for (int x = 0; x < n_; ++x) {
    if (map_[x] != kAbsent) m[map_[x]] = x;
  }
  return PartialInjection(n_, std::move(m));
}

PartialInjection PartialInjection::parse(std::string const& text) {
  auto semi = text.find(';');
  if (semi == std::string::npos) throw ParseError("missing ';'", 1, 1);
  int n;
  try {
    n = std::stoi(text.substr(0, semi));
  } catch (...) {
    throw ParseError("bad ground-set size", 1, 1);
  }
  if (n < 0) throw ParseError("bad ground-set size", 1, 1);
  std::istringstream in(text.substr(semi + 1));
  std::vector<int> m;
  std::string tok;
  while (in >> tok) {
    if (tok == "-") {
      m.push_back(kAbsent);
    } else {
      try {
        m.push_back(std::stoi(tok));
      } catch (...) {
        throw ParseError("bad image token '" + tok + "'", 1, 1);
      }
    }
  }
  if (m.size() != static_cast<size_t>(n)) {
    throw ParseError("expected " + std::to_string(n) + " image tokens", 1, 1);
  }
  return PartialInjection(n, std::move(m));
}

std::string PartialInjection::to_string() const {
  std::ostringstream os;
  os << n_ << ';';
  for (int x = 0; x < n_; ++x) {
    os << ' ';
    if (map_[x] == kAbsent) {
      os << '-';
    } else {
      os << map_[x];
    }
  }
  return os.str();
}

std::vector<Piece> decompose(PartialInjection const& f) {
  int n = f.n();
  std::vector<char> in_image(n, 0);
  for (int x = 0; x < n; ++x) {
    if (f.in_domain(x)) in_image[f.apply(x)] = 1;
  }
  std::vector<char> visited(n, 0);
  std::vector<Piece> pieces;
  // Chains start at domain points with no incoming arc.
  for (int x = 0; x < n; ++x) {
    if (!f.in_domain(x) || in_image[x]) continue;
    Piece p{false, {x}};
    visited[x] = 1;
    int y = x;
    while (f.in_domain(y)) {
      y = f.apply(y);
      visited[y] = 1;
      p.points.push_back(y);
    }
    pieces.push_back(std::move(p));
  }
  // The remaining domain points lie on cycles.
  for (int x = 0; x < n; ++x) {
    if (!f.in_domain(x) || visited[x]) continue;
    Piece p{true, {}};
    int y = x;
    do {
      visited[y] = 1;
      p.points.push_back(y);
      y = f.apply(y);
    } while (y != x);
    pieces.push_back(std::move(p));
  }
  return pieces;
}

CycleChainType cc_type(PartialInjection const& f) {
  CycleChainType t;
  for (auto const& p : decompose(f)) {
    if (p.is_cycle) {
      ++t.cycles[p.length()];
    } else {
      ++t.chains[p.length()];
    }
  }
  return t;
}

std::map<int, int> cycle_type(PartialInjection const& f) {
  return cc_type(f).cycles;
}

std::string CycleChainType::to_string() const {
  std::ostringstream os;
  os << "cycles{";
  bool first = true;
  for (auto const& [k, c] : cycles) {
    if (!first) os << ',';
    first = false;
    os << k << ':' << c;
  }
  os << "} chains{";
  first = true;
  for (auto const& [k, c] : chains) {
    if (!first) os << ',';
    first = false;
    os << k << ':' << c;
  }
  os << '}';
  return os.str();
}

namespace {

std::string key_of(PartialInjection const& f) {
  std::string k;
  k.reserve(f.n());
  for (int v : f.raw()) k.push_back(static_cast<char>(v + 1));
  return k;
}

void arrangements(int n, std::vector<int> const& dom, size_t pos,
                  std::vector<char>& used, std::vector<int>& map,
                  std::vector<PartialInjection>& out) {
  if (pos == dom.size()) {
    out.emplace_back(n, map);
    return;
  }
  for (int v = 0; v < n; ++v) {
    if (used[v]) continue;
    used[v] = 1;
    map[dom[pos]] = v;
    arrangements(n, dom, pos + 1, used, map, out);
    map[dom[pos]] = PartialInjection::kAbsent;
    used[v] = 0;
  }
}

}  // namespace

int SymmetricInverseMonoid::index_of(PartialInjection const& f) const {
  auto it = index_map.find(key_of(f));
  if (it == index_map.end()) throw RangeError("element not in this monoid");
  return it->second;
}

SymmetricInverseMonoid symmetric_inverse_monoid(int n) {
  if (n < 1 || n > 5) throw SizeLimit("symmetric_inverse_monoid supports 1 <= n <= 5");
  SymmetricInverseMonoid m{Semigroup::build(1, {0}), {}, {}};
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> dom;
    for (int x = 0; x < n; ++x) {
      if (mask & (1 << x)) dom.push_back(x);
    }
    std::vector<char> used(n, 0);
    std::vector<int> map(n, PartialInjection::kAbsent);
    arrangements(n, dom, 0, used, map, m.elements);
  }
  int count = static_cast<int>(m.elements.size());
  m.index_map.reserve(count * 2);
  for (int i = 0; i < count; ++i) m.index_map.emplace(key_of(m.elements[i]), i);
  std::vector<int> table(static_cast<size_t>(count) * count);
  for (int i = 0; i < count; ++i) {
    for (int j = 0; j < count; ++j) {
      table[static_cast<size_t>(i) * count + j] =
          m.index_map.at(key_of(m.elements[i].compose(m.elements[j])));
    }
  }
  m.table = Semigroup::build(count, std::move(table));
  return m;
}

bool is_r_homomorphism(PartialInjection const& phi, PartialInjection const& alpha,
                       PartialInjection const& beta) {
  if (phi.n() != alpha.n() || alpha.n() != beta.n()) {
    throw DimensionMismatch("ground sets differ");
  }
  int n = alpha.n();
  std::vector<char> beta_span(n, 0);
  for (int x = 0; x < n; ++x) {
    if (beta.in_domain(x)) {
      beta_span[x] = 1;
      beta_span[beta.apply(x)] = 1;
    }
  }
  for (int x : alpha.span()) {
    if (!phi.in_domain(x)) return false;
  }
  for (int x : alpha.span()) {
    int fx = phi.apply(x);
    if (alpha.in_domain(x)) {
      // Arc (x, x alpha) must map to an arc of Gamma(beta).
      if (!beta.in_domain(fx)) return false;
      if (beta.apply(fx) != phi.apply(alpha.apply(x))) return false;
    } else {
      // Terminal vertex: no outgoing arc; image must be a terminal vertex.
      if (!beta_span[fx] || beta.in_domain(fx)) return false;
    }
  }
  return true;
}

namespace {

// Backtracking search for an r-homomorphism from Gamma(alpha) to
// Gamma(beta): choosing the image of one anchor point per piece determines
// the rest of the piece, so branching happens only per piece.
bool r_hom_exists(PartialInjection const& alpha, PartialInjection const& beta) {
  int n = alpha.n();
  std::vector<Piece> pieces = decompose(alpha);
  std::vector<char> beta_span(n, 0);
  for (int x = 0; x < n; ++x) {
    if (beta.in_domain(x)) {
      beta_span[x] = 1;
      beta_span[beta.apply(x)] = 1;
    }
  }
  std::vector<char> used(n, 0);

  std::function<bool(size_t)> place = [&](size_t pi) -> bool {
    if (pi == pieces.size()) return true;
    Piece const& p = pieces[pi];
    int len = static_cast<int>(p.points.size());
    // Try anchoring the first point at every ground-set point and walk the
    // arcs forward; failures prune immediately.
    for (int z = 0; z < n; ++z) {
      if (!beta_span[z]) continue;
      std::vector<int> img(len, -1);
      int cur = z;
      bool ok = true;
      for (int i = 0; i < len; ++i) {
        if (cur < 0 || !beta_span[cur] || used[cur]) {
          ok = false;
          break;
        }
        for (int j = 0; j < i; ++j) {
          if (img[j] == cur) {
            ok = false;
            break;
          }
        }
        if (!ok) break;
        img[i] = cur;
        bool last = i + 1 == len;
        if (p.is_cycle) {
          if (!beta.in_domain(cur)) {
            ok = false;
            break;
          }
          int next = beta.apply(cur);
          if (last) {
            if (next != z) ok = false;
          } else {
            cur = next;
          }
        } else {
          if (!last) {
            if (!beta.in_domain(cur)) {
              ok = false;
              break;
            }
            cur = beta.apply(cur);
          } else {
            // chain end is terminal: image must be terminal in beta
            if (beta.in_domain(cur)) ok = false;
          }
        }
      }
      if (!ok) continue;
      for (int v : img) used[v] = 1;
      if (place(pi + 1)) return true;
      for (int v : img) used[v] = 0;
    }
    return false;
  };
  return place(0);
}

}  // namespace

bool c_oracle(PartialInjection const& alpha, PartialInjection const& beta) {
  if (alpha.n() != beta.n()) throw DimensionMismatch("ground sets differ");
  return r_hom_exists(alpha, beta) && r_hom_exists(beta, alpha);
}

std::optional<PartialInjection> permutation_witness(PartialInjection const& alpha,
                                                    PartialInjection const& beta) {
  if (alpha.n() != beta.n()) throw DimensionMismatch("ground sets differ");
  if (!(cc_type(alpha) == cc_type(beta))) return std::nullopt;
  int n = alpha.n();

  auto group = [](std::vector<Piece> pieces) {
    std::map<std::pair<bool, int>, std::vector<std::vector<int>>> by_shape;
    for (auto& p : pieces) {
      by_shape[{p.is_cycle, p.length()}].push_back(std::move(p.points));
    }
    return by_shape;
  };
  auto ga = group(decompose(alpha));
  auto gb = group(decompose(beta));

  // sigma with alpha = sigma^-1 beta sigma; beta-points map to alpha-points
  // along matched pieces, the rest by ascending order.
  std::vector<int> sig(n, PartialInjection::kAbsent);
  for (auto const& [shape, bpieces] : gb) {
    auto const& apieces = ga.at(shape);
    for (size_t i = 0; i < bpieces.size(); ++i) {
      for (size_t j = 0; j < bpieces[i].size(); ++j) {
        sig[bpieces[i][j]] = apieces[i][j];
      }
    }
  }
  std::vector<char> taken(n, 0);
  for (int v : sig) {
    if (v != PartialInjection::kAbsent) taken[v] = 1;
  }
  int next = 0;
  for (int x = 0; x < n; ++x) {
    if (sig[x] != PartialInjection::kAbsent) continue;
    while (taken[next]) ++next;
    sig[x] = next;
    taken[next] = 1;
  }
  PartialInjection sigma(n, std::move(sig));
  PartialInjection conj = sigma.inverse().compose(beta).compose(sigma);
  if (!(conj == alpha)) throw InternalError("permutation witness failed to conjugate");
  return sigma;
}

}  // namespace semiconj
