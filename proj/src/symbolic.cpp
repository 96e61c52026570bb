#include "semiconj/symbolic.hpp"

#include <random>
#include <sstream>

#include "semiconj/error.hpp"

namespace semiconj {

void Spectrum::normalize() {
  for (auto it = exceptions.begin(); it != exceptions.end();) {
    bool matches_default = default_aleph0 ? !it->second.finite : it->second.is_zero();
    if (it->first < 1 || matches_default) {
      it = exceptions.erase(it);
    } else {
      ++it;
    }
  }
}

bool Spectrum::all_zero() const {
  if (default_aleph0) return false;
  for (auto const& [k, c] : exceptions) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool Spectrum::operator==(Spectrum const& o) const {
  if (default_aleph0 != o.default_aleph0) return false;
  for (auto const& [k, c] : exceptions) {
    if (!(o.at(k) == c)) return false;
  }
  for (auto const& [k, c] : o.exceptions) {
    if (!(at(k) == c)) return false;
  }
  return true;
}

Cardinal kappa(CCRType const& t) {
  if (t.chains.default_aleph0) return Cardinal::aleph0();
  int top = 0;
  for (auto const& [k, c] : t.chains.exceptions) {
    if (!c.is_zero()) top = std::max(top, k);
  }
  return Cardinal::fin(top);
}

uint64_t mu(CCRType const& t) {
  Cardinal k = kappa(t);
  if (!k.finite || k.value == 0) return 0;
  uint64_t best = 0;
  for (auto const& [len, c] : t.chains.exceptions) {
    if (!c.finite && static_cast<uint64_t>(len) <= k.value) {
      best = std::max(best, static_cast<uint64_t>(len));
    }
  }
  return best;
}

bool c_conjugate(CCRType const& t1, CCRType const& t2) {
  // (1) cycle spectra, |Omega| and |Lambda| match
  if (!(t1.cycles == t2.cycles) || !(t1.omega == t2.omega)
      || !(t1.lambda == t2.lambda)) {
    return false;
  }
  // (2) finitely many double rays force |Upsilon| to match
  if (t1.omega.finite && !(t1.upsilon == t2.upsilon)) return false;
  // (3) finitely many left rays force the chain structure to match
  if (t1.lambda.finite) {
    Cardinal k1 = kappa(t1), k2 = kappa(t2);
    if (!(k1 == k2)) return false;
    if (k1.finite && k1.value >= 1) {
      uint64_t m = mu(t1);
      if (m != mu(t2)) return false;
      for (uint64_t k = m + 1; k <= k1.value; ++k) {
        if (!(t1.chains.at(static_cast<int>(k)) == t2.chains.at(static_cast<int>(k)))) {
          return false;
        }
      }
    }
  }
  return true;
}

GammaRelations gamma_relations(CCRType const& t1, CCRType const& t2) {
  for (auto const* t : {&t1, &t2}) {
    if (!t->chains.all_zero() || !t->lambda.is_zero()) throw NotFullInjection();
  }
  GammaRelations r{};
  r.j = t1.upsilon == t2.upsilon;
  bool cyc_omega = t1.cycles == t2.cycles && t1.omega == t2.omega;
  r.p = cyc_omega && t1.upsilon == t2.upsilon;
  r.c = cyc_omega && (t1.upsilon + t1.omega) == (t2.upsilon + t2.omega);
  return r;
}

bool is_epi_element(CCRType const& t) {
  return t.omega.is_zero() && t.upsilon.is_zero() && t.lambda.is_zero()
         && !t.chains.default_aleph0;
}

bool tr_conjugate(CCRType const& t1, CCRType const& t2) {
  if (!is_epi_element(t1) || !is_epi_element(t2)) throw NotEpiElement();
  return t1.cycles == t2.cycles;
}

Cardinal dom_cardinality(CCRType const& t) {
  if (!t.omega.is_zero() || !t.upsilon.is_zero() || !t.lambda.is_zero()) {
    return Cardinal::aleph0();
  }
  if (t.cycles.default_aleph0 || t.chains.default_aleph0) return Cardinal::aleph0();
  Cardinal total = Cardinal::zero();
  for (auto const& [k, c] : t.cycles.exceptions) {
    if (!c.finite) return Cardinal::aleph0();
    total = total + Cardinal::fin(static_cast<uint64_t>(k) * c.value);
  }
  // a chain of length k has k domain points
  for (auto const& [k, c] : t.chains.exceptions) {
    if (!c.finite) return Cardinal::aleph0();
    total = total + Cardinal::fin(static_cast<uint64_t>(k) * c.value);
  }
  return total;
}

bool i_j_related(CCRType const& t1, CCRType const& t2) {
  return dom_cardinality(t1) == dom_cardinality(t2);
}

CCRType random_type(uint64_t seed, TypeBounds const& bounds) {
  std::mt19937_64 rng(seed);
  auto card = [&rng, &bounds]() {
    if (rng() % 4 == 0) return Cardinal::aleph0();
    return Cardinal::fin(rng() % (bounds.max_finite + 1));
  };
  auto spectrum = [&]() {
    Spectrum sp;
    sp.default_aleph0 = !bounds.full_injection && rng() % 5 == 0;
    int k = static_cast<int>(rng() % (bounds.max_exceptions + 1));
    for (int i = 0; i < k; ++i) {
      int len = 1 + static_cast<int>(rng() % bounds.max_length);
      sp.exceptions[len] = card();
    }
    sp.normalize();
    return sp;
  };
  CCRType t;
  t.cycles = spectrum();
  if (bounds.full_injection) {
    t.omega = card();
    t.upsilon = card();
  } else {
    t.chains = spectrum();
    t.omega = card();
    t.upsilon = card();
    t.lambda = card();
  }
  return t;
}

namespace {

Cardinal parse_cardinal(std::string const& tok) {
  if (tok == "w") return Cardinal::aleph0();
  try {
    return Cardinal::fin(std::stoull(tok));
  } catch (...) {
    throw ParseError("bad cardinal '" + tok + "'", 1, 1);
  }
}

Spectrum parse_spectrum(std::string const& body) {
  // "k:c,k:c;default"
  auto semi = body.find(';');
  if (semi == std::string::npos) throw ParseError("spectrum needs ';default'", 1, 1);
  Spectrum sp;
  std::string dflt = body.substr(semi + 1);
  if (dflt == "w") {
    sp.default_aleph0 = true;
  } else if (dflt == "0") {
    sp.default_aleph0 = false;
  } else {
    throw ParseError("spectrum default must be 0 or w", 1, 1);
  }
  std::string items = body.substr(0, semi);
  std::istringstream in(items);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    auto colon = item.find(':');
    if (colon == std::string::npos) throw ParseError("spectrum entry needs ':'", 1, 1);
    int len;
    try {
      len = std::stoi(item.substr(0, colon));
    } catch (...) {
      throw ParseError("bad length", 1, 1);
    }
    if (len < 1) throw ParseError("lengths start at 1", 1, 1);
    sp.exceptions[len] = parse_cardinal(item.substr(colon + 1));
  }
  sp.normalize();
  return sp;
}

}  // namespace

CCRType parse_type(std::string const& text) {
  CCRType t;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    auto brace = tok.find('{');
    if (brace != std::string::npos) {
      if (tok.back() != '}') throw ParseError("unterminated spectrum", 1, 1);
      std::string name = tok.substr(0, brace);
      std::string body = tok.substr(brace + 1, tok.size() - brace - 2);
      if (name == "cycles") {
        t.cycles = parse_spectrum(body);
      } else if (name == "chains") {
        t.chains = parse_spectrum(body);
      } else {
        throw ParseError("unknown spectrum '" + name + "'", 1, 1);
      }
      continue;
    }
    auto eq = tok.find('=');
    if (eq == std::string::npos) throw ParseError("bad token '" + tok + "'", 1, 1);
    std::string name = tok.substr(0, eq);
    Cardinal v = parse_cardinal(tok.substr(eq + 1));
    if (name == "omega") {
      t.omega = v;
    } else if (name == "upsilon") {
      t.upsilon = v;
    } else if (name == "lambda") {
      t.lambda = v;
    } else {
      throw ParseError("unknown field '" + name + "'", 1, 1);
    }
  }
  return t;
}

std::string format_type(CCRType const& t) {
  auto spectrum = [](Spectrum const& sp) {
    std::ostringstream os;
    bool first = true;
    for (auto const& [k, c] : sp.exceptions) {
      if (!first) os << ',';
      first = false;
      os << k << ':' << c.to_string();
    }
    os << ';' << (sp.default_aleph0 ? "w" : "0");
    return os.str();
  };
  std::ostringstream os;
  os << "cycles{" << spectrum(t.cycles) << "} chains{" << spectrum(t.chains)
     << "} omega=" << t.omega.to_string() << " upsilon=" << t.upsilon.to_string()
     << " lambda=" << t.lambda.to_string();
  return os.str();
}

std::optional<PartialInjection> realize(CCRType const& t, int n) {
  if (!t.omega.is_zero() || !t.upsilon.is_zero() || !t.lambda.is_zero()) {
    return std::nullopt;
  }
  if (t.cycles.default_aleph0 || t.chains.default_aleph0) return std::nullopt;
  std::vector<int> map(n, PartialInjection::kAbsent);
  int next = 0;
  auto take = [&next, n](int count) {
    if (next + count > n) return -1;
    int start = next;
    next += count;
    return start;
  };
  for (auto const& [k, c] : t.cycles.exceptions) {
    if (!c.finite) return std::nullopt;
    for (uint64_t r = 0; r < c.value; ++r) {
      int start = take(k);
      if (start < 0) return std::nullopt;
      for (int i = 0; i < k; ++i) map[start + i] = start + (i + 1) % k;
    }
  }
  for (auto const& [k, c] : t.chains.exceptions) {
    if (!c.finite) return std::nullopt;
    for (uint64_t r = 0; r < c.value; ++r) {
      int start = take(k + 1);
      if (start < 0) return std::nullopt;
      for (int i = 0; i < k; ++i) map[start + i] = start + i + 1;
    }
  }
  return PartialInjection(n, std::move(map));
}

}  // namespace semiconj
