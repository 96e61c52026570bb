#include "semiconj/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "semiconj/canonical.hpp"
#include "semiconj/conjugacy.hpp"
#include "semiconj/constructors.hpp"
#include "semiconj/enumerate.hpp"
#include "semiconj/epigroup.hpp"
#include "semiconj/green.hpp"
#include "semiconj/io.hpp"
#include "semiconj/pinj.hpp"
#include "semiconj/suite.hpp"
#include "semiconj/symbolic.hpp"

namespace semiconj {

namespace {

using nlohmann::json;

struct InputOpts {
  std::string file;
  std::string fixture_id;
  std::string make;
};

void add_input_options(CLI::App* cmd, InputOpts& in) {
  auto* f = cmd->add_option("--file", in.file, "Cayley table file (text or JSON)");
  auto* x = cmd->add_option("--fixture", in.fixture_id, "built-in fixture ID");
  auto* m = cmd->add_option("--make", in.make,
                            "constructor spec, e.g. 'cyclic 4', 'rect 2 3', "
                            "'null 3', 'chain 3', 'antichain 2', 'symgroup 3', "
                            "'inverse 3'");
  f->excludes(x)->excludes(m);
  x->excludes(m);
}

Semigroup make_from_spec(std::string const& spec) {
  std::istringstream in(spec);
  std::string family;
  in >> family;
  std::vector<int> args;
  int v;
  while (in >> v) args.push_back(v);
  auto need = [&](size_t k) {
    if (args.size() != k) {
      throw RangeError("constructor '" + family + "' expects "
                       + std::to_string(k) + " integer argument(s)");
    }
  };
  if (family == "null") {
    need(1);
    return null_semigroup(args[0]);
  }
  if (family == "rect") {
    need(2);
    return rectangular_band(args[0], args[1]);
  }
  if (family == "cyclic") {
    need(1);
    return cyclic_group(args[0]);
  }
  if (family == "chain") {
    need(1);
    return chain_semilattice(args[0]);
  }
  if (family == "antichain") {
    need(1);
    return antichain_with_0_1(args[0]);
  }
  if (family == "symgroup") {
    need(1);
    return symmetric_group(args[0]);
  }
  if (family == "inverse") {
    need(1);
    return symmetric_inverse_monoid(args[0]).table;
  }
  throw RangeError("unknown constructor family '" + family + "'");
}

Semigroup load_input(InputOpts const& in) {
  if (!in.fixture_id.empty()) return fixture(in.fixture_id);
  if (!in.make.empty()) return make_from_spec(in.make);
  if (!in.file.empty()) {
    std::ifstream f(in.file);
    if (!f) throw RangeError("cannot open " + in.file);
    std::stringstream buf;
    buf << f.rdbuf();
    return parse_table(buf.str());
  }
  throw RangeError("no input: use --file, --fixture or --make");
}

json predicates_json(BasicPredicates const& p) {
  return json{{"commutative", p.commutative},
              {"cancellative", p.cancellative},
              {"is_band", p.is_band},
              {"is_semilattice", p.is_semilattice},
              {"is_null", p.is_null},
              {"is_rectangular_band", p.is_rectangular_band},
              {"has_zero", p.has_zero},
              {"is_monoid", p.is_monoid}};
}

std::string opt_str(std::optional<int> const& v) {
  return v ? std::to_string(*v) : "-";
}

int run_validate(Semigroup const& s, bool as_json, std::ostream& out) {
  BasicPredicates p = basic_predicates(s);
  if (as_json) {
    json doc{{"n", s.size()},
             {"zero", s.zero() ? json(*s.zero()) : json(nullptr)},
             {"identity", s.identity() ? json(*s.identity()) : json(nullptr)},
             {"predicates", predicates_json(p)}};
    out << doc.dump() << "\n";
    return 0;
  }
  out << "n=" << s.size() << " zero=" << opt_str(s.zero())
      << " identity=" << opt_str(s.identity()) << "\n";
  out << "commutative=" << p.commutative << " cancellative=" << p.cancellative
      << " band=" << p.is_band << " semilattice=" << p.is_semilattice
      << " null=" << p.is_null << " rectangular_band=" << p.is_rectangular_band
      << "\n";
  out << "ok\n";
  return 0;
}

int run_green(Semigroup const& s, bool as_json, std::ostream& out) {
  GreenData g = green(s);
  Regularity r = regularity(s);
  IdealStructure is = ideal_structure(s);
  if (as_json) {
    json doc{{"L", g.L.to_string()},     {"R", g.R.to_string()},
             {"H", g.H.to_string()},     {"D", g.D.to_string()},
             {"J", g.J.to_string()},     {"idempotents", idempotents(s)},
             {"is_regular", r.is_regular}, {"is_inverse", r.is_inverse},
             {"is_simple", is.is_simple},
             {"is_zero_simple", is.is_zero_simple},
             {"is_completely_simple", is.is_completely_simple},
             {"is_completely_zero_simple", is.is_completely_zero_simple}};
    out << doc.dump() << "\n";
    return 0;
  }
  out << "L: " << g.L.to_string() << "\n";
  out << "R: " << g.R.to_string() << "\n";
  out << "H: " << g.H.to_string() << "\n";
  out << "D: " << g.D.to_string() << "\n";
  out << "J: " << g.J.to_string() << "\n";
  out << "idempotents:";
  for (int e : idempotents(s)) out << ' ' << e;
  out << "\n";
  out << "natural_order:";
  for (auto const& [e, f] : natural_order(s)) out << " (" << e << "<" << f << ")";
  out << "\n";
  out << "regular=" << r.is_regular << " inverse=" << r.is_inverse << "\n";
  out << "simple=" << is.is_simple << " zero_simple=" << is.is_zero_simple
      << " completely_simple=" << is.is_completely_simple
      << " completely_zero_simple=" << is.is_completely_zero_simple << "\n";
  auto zd = s.zero() ? zero_direct_union(s) : std::nullopt;
  if (s.zero()) {
    if (zd) {
      out << "zero_direct_union:";
      for (auto const& block : *zd) {
        out << " {";
        for (size_t i = 0; i < block.size(); ++i) {
          if (i) out << ',';
          out << block[i];
        }
        out << "}";
      }
      out << "\n";
    } else {
      out << "zero_direct_union: absent\n";
    }
  }
  return 0;
}

int run_conjugacy(Semigroup const& s, std::string const& relation, bool psets,
                  bool as_json, std::ostream& out) {
  if (!relation.empty() && relation != "all") {
    std::string text;
    if (relation == "p") {
      text = p_relation(s).to_string();
    } else if (relation == "p_star") {
      text = p_star(s).to_string();
    } else if (relation == "o") {
      text = o_conjugacy(s).to_string();
    } else if (relation == "c") {
      text = c_conjugacy(s).to_string();
    } else if (relation == "tr") {
      text = tr_conjugacy(s, TrMethod::via_pp).to_string();
    } else if (relation == "so") {
      text = strong_relations(s).so.to_string();
    } else if (relation == "sc") {
      text = strong_relations(s).sc.to_string();
    } else {
      throw RangeError("unknown relation '" + relation + "'");
    }
    if (as_json) {
      out << json{{"relation", relation}, {"value", text}}.dump() << "\n";
    } else {
      out << text << "\n";
    }
    return 0;
  }

  ConjugacyReport r = conjugacy_report(s);
  auto character = [](RelationCharacter const& rc) {
    return json{{"is_identity", rc.is_identity},
                {"is_universal", rc.is_universal},
                {"universal_on_nonzero", rc.universal_on_nonzero}};
  };
  if (as_json) {
    json doc{{"p", r.p.to_string()},
             {"p_star", r.p_star.to_string()},
             {"o", r.o.to_string()},
             {"c", r.c.to_string()},
             {"tr", r.tr.to_string()},
             {"so", r.so.to_string()},
             {"sc", r.sc.to_string()},
             {"c_and_p", r.c_and_p.to_string()},
             {"c_and_p_star", r.c_and_p_star.to_string()},
             {"c_and_tr", r.c_and_tr.to_string()},
             {"p_transitive", r.p_transitive},
             {"inclusion_diagram_ok", r.inclusion_diagram_ok},
             {"characters",
              json{{"p", character(r.char_p)},
                   {"p_star", character(r.char_p_star)},
                   {"o", character(r.char_o)},
                   {"c", character(r.char_c)},
                   {"tr", character(r.char_tr)}}}};
    if (psets) {
      json ps = json::array();
      for (int a = 0; a < s.size(); ++a) ps.push_back(conjugator_set(s, a).base);
      doc["psets"] = ps;
    }
    out << doc.dump() << "\n";
    return 0;
  }
  out << "p: " << r.p.to_string() << "\n";
  out << "p_star: " << r.p_star.to_string() << "\n";
  out << "o: " << r.o.to_string() << "\n";
  out << "c: " << r.c.to_string() << "\n";
  out << "tr: " << r.tr.to_string() << "\n";
  out << "so: " << r.so.to_string() << "\n";
  out << "sc: " << r.sc.to_string() << "\n";
  out << "c_and_p: " << r.c_and_p.to_string() << "\n";
  out << "c_and_p_star: " << r.c_and_p_star.to_string() << "\n";
  out << "c_and_tr: " << r.c_and_tr.to_string() << "\n";
  out << "p_transitive=" << r.p_transitive
      << " inclusions_ok=" << r.inclusion_diagram_ok << "\n";
  if (psets) {
    for (int a = 0; a < s.size(); ++a) {
      ConjugatorSet cs = conjugator_set(s, a);
      out << "P(" << a << ") = {";
      for (size_t i = 0; i < cs.base.size(); ++i) {
        if (i) out << ',';
        out << cs.base[i];
      }
      out << "}\n";
    }
  }
  return 0;
}

int run_epigroup(Semigroup const& s, bool as_json, std::ostream& out) {
  EpiClassification e = epi_classification(s);
  VarietyMembership v = variety_membership(s);
  IdentityReport ids = pinv_identity_suite(s);
  if (as_json) {
    json elems = json::array();
    for (int a = 0; a < s.size(); ++a) {
      MonogenicData d = monogenic(s, a);
      elems.push_back(json{{"index", d.index},
                           {"period", d.period},
                           {"omega", d.omega},
                           {"pinv", d.pinv},
                           {"double_pinv", d.double_pinv}});
    }
    out << json{{"elements", elems},
                {"is_epigroup", e.is_epigroup},
                {"is_completely_regular", e.is_completely_regular},
                {"min_n", e.min_n_with_S_eq_Epi_n},
                {"in_E1", v.in_E(1)},
                {"in_E2", v.in_E(2)},
                {"in_W", v.in_W},
                {"in_V", v.in_V},
                {"identities_ok", ids.ok()}}.dump()
        << "\n";
    return 0;
  }
  for (int a = 0; a < s.size(); ++a) {
    MonogenicData d = monogenic(s, a);
    out << a << ": index=" << d.index << " period=" << d.period
        << " omega=" << d.omega << " pinv=" << d.pinv
        << " dpinv=" << d.double_pinv << "\n";
  }
  out << "epigroup=" << e.is_epigroup
      << " completely_regular=" << e.is_completely_regular
      << " min_n=" << e.min_n_with_S_eq_Epi_n << "\n";
  out << "E1=" << v.in_E(1) << " E2=" << v.in_E(2) << " W=" << v.in_W
      << " V=" << v.in_V << "\n";
  out << "identities " << (ids.ok() ? "ok" : "VIOLATED") << "\n";
  return ids.ok() ? 0 : 1;
}

std::vector<std::vector<int>> parse_sandwich(std::string const& text) {
  std::vector<std::vector<int>> p;
  std::istringstream rows(text);
  std::string row;
  while (std::getline(rows, row, ';')) {
    std::vector<int> r;
    std::istringstream cells(row);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      if (cell == "z") {
        r.push_back(-1);
      } else {
        try {
          r.push_back(std::stoi(cell));
        } catch (...) {
          throw RangeError("bad sandwich entry '" + cell + "'");
        }
      }
    }
    p.push_back(std::move(r));
  }
  return p;
}

int run_suite(Semigroup const& s, bool as_json, std::ostream& out) {
  SuiteReport rep = theorem_suite(s);
  if (as_json) {
    json checks = json::array();
    for (auto const& c : rep.checks) {
      checks.push_back(json{{"name", c.name},
                            {"applicable", c.applicable},
                            {"pass", c.pass},
                            {"detail", c.detail}});
    }
    out << json{{"checks", checks}, {"all_pass", rep.all_pass()}}.dump() << "\n";
    return 0;
  }
  for (auto const& c : rep.checks) {
    if (!c.applicable) {
      out << "SKIP " << c.name << " (" << c.detail << ")\n";
    } else if (c.pass) {
      out << "PASS " << c.name
          << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
    } else {
      out << "FAIL " << c.name << ": " << c.detail << "\n";
    }
  }
  out << (rep.all_pass() ? "all checks passed" : "some checks FAILED") << "\n";
  return 0;
}

int run_table1(int max_n, bool order6, bool listing, bool as_json,
               std::ostream& out) {
  auto rows = table1(max_n, order6);
  if (as_json) {
    json jrows = json::array();
    for (auto const& r : rows) {
      jrows.push_back(json{{"n", r.n},
                           {"monoids_0div", r.monoids_0div},
                           {"c_identity", r.c_identity},
                           {"c_universal", r.c_universal},
                           {"iso_monoids_0div", r.iso_monoids_0div},
                           {"iso_c_identity", r.iso_c_identity},
                           {"iso_c_universal", r.iso_c_universal}});
    }
    out << json{{"rows", jrows}}.dump() << "\n";
  } else {
    for (auto const& r : rows) {
      out << "n=" << r.n << " monoids_0div=" << r.monoids_0div
          << " c_identity=" << r.c_identity << " c_universal=" << r.c_universal
          << " | iso: " << r.iso_monoids_0div << " " << r.iso_c_identity << " "
          << r.iso_c_universal << "\n";
    }
  }
  if (listing) {
    for (int n = 3; n <= max_n; ++n) {
      if (n == 6 && !order6) break;
      EnumConstraints c;
      c.order = n;
      c.require_monoid = c.require_zero = c.require_zero_divisors = true;
      c.allow_order6 = true;
      enumerate(c, [&out](Semigroup const& s) {
        out << serialize(s) << "c = " << c_conjugacy(s).to_string() << "\n\n";
      });
    }
  }
  return 0;
}

int dispatch(std::vector<std::string> const& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"semigroup conjugacy workbench"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "structured output");

  InputOpts in;

  auto* validate = app.add_subcommand("validate", "parse and validate a table");
  add_input_options(validate, in);

  auto* green_cmd = app.add_subcommand("green", "Green's relations and ideals");
  add_input_options(green_cmd, in);

  auto* conj = app.add_subcommand("conjugacy", "conjugacy relations");
  add_input_options(conj, in);
  std::string relation = "all";
  conj->add_option("--relation", relation, "p|p_star|o|c|tr|so|sc|all");
  bool psets = false;
  conj->add_flag("--psets", psets, "print the conjugator sets P(a)");

  auto* epi = app.add_subcommand("epigroup", "monogenic data and varieties");
  add_input_options(epi, in);

  auto* constr = app.add_subcommand("construct", "emit a constructed table");
  std::vector<std::string> make_words;
  constr->add_option("spec", make_words, "family and integer arguments");
  std::string rees_group, rees_p;
  int rees_i = 1, rees_lambda = 1;
  constr->add_option("--rees-group", rees_group, "group spec, e.g. 'cyclic 2'");
  constr->add_option("--i", rees_i, "number of rows I");
  constr->add_option("--lambda", rees_lambda, "number of columns Lambda");
  constr->add_option("--p", rees_p,
                     "sandwich matrix rows ';'-separated, entries ','-separated, "
                     "'z' for zero (makes the 0-variant)");

  auto* var = app.add_subcommand("variant", "variant of S at a");
  add_input_options(var, in);
  int var_at = 0;
  var->add_option("--at", var_at, "variant point")->required();
  bool var_check = false;
  var->add_flag("--check", var_check, "run the unary variant check");

  auto* enum_cmd = app.add_subcommand("enumerate", "enumerate small semigroups");
  int order = 0;
  enum_cmd->add_option("--order", order, "semigroup order")->required();
  bool want_monoid = false, want_zero = false, want_zdiv = false, emit = false,
       allow6 = false;
  std::string dedupe = "equivalence";
  enum_cmd->add_flag("--monoid", want_monoid, "monoids only");
  enum_cmd->add_flag("--zero", want_zero, "require a zero");
  enum_cmd->add_flag("--zero-divisors", want_zdiv, "require zero divisors");
  enum_cmd->add_option("--dedupe", dedupe, "labeled|iso|equivalence");
  enum_cmd->add_flag("--emit", emit, "print each table");
  enum_cmd->add_flag("--allow-order6", allow6, "permit the long order-6 run");
  int split = 0;
  enum_cmd->add_option("--split", split, "partition the search at this depth");

  auto* t1 = app.add_subcommand("table1", "monoids with zero divisors vs ~c");
  int max_n = 5;
  t1->add_option("--max", max_n, "largest order");
  bool t1_order6 = false, t1_listing = false;
  t1->add_flag("--order6", t1_order6, "include the order-6 row");
  t1->add_flag("--listing", t1_listing, "print each monoid with its ~c classes");

  auto* suite_cmd = app.add_subcommand("suite", "run the theorem checks");
  add_input_options(suite_cmd, in);

  auto* pinj_cmd = app.add_subcommand("pinj", "partial injection tools");
  int pinj_n = 0;
  pinj_cmd->add_option("--n", pinj_n, "build I_n and summarize");
  std::string alpha_text, beta_text;
  pinj_cmd->add_option("--alpha", alpha_text, "partial injection 'n; x0 x1 ...'");
  pinj_cmd->add_option("--beta", beta_text, "second partial injection");

  auto* sym = app.add_subcommand("symbolic", "cycle-chain-ray type relations");
  std::string t1_text, t2_text;
  sym->add_option("--t1", t1_text, "first type literal")->required();
  sym->add_option("--t2", t2_text, "second type literal");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (CLI::ParseError const& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (*validate) return run_validate(load_input(in), as_json, out);
    if (*green_cmd) return run_green(load_input(in), as_json, out);
    if (*conj) return run_conjugacy(load_input(in), relation, psets, as_json, out);
    if (*epi) return run_epigroup(load_input(in), as_json, out);
    if (*constr) {
      Semigroup s = Semigroup::build(1, {0});
      if (!rees_group.empty()) {
        ReesSpec spec{make_from_spec(rees_group), rees_i, rees_lambda,
                      parse_sandwich(rees_p)};
        bool has_zero_entry = false;
        for (auto const& row : spec.P) {
          for (int v : row) has_zero_entry = has_zero_entry || v == -1;
        }
        s = has_zero_entry ? rees_zero(spec) : rees(spec);
      } else {
        std::string joined;
        for (auto const& w : make_words) {
          if (!joined.empty()) joined += ' ';
          joined += w;
        }
        s = make_from_spec(joined);
      }
      out << (as_json ? serialize_json(s) + "\n" : serialize(s));
      return 0;
    }
    if (*var) {
      Semigroup s = load_input(in);
      if (var_check) {
        UnaryVariantReport rep = unary_variant_check(s, var_at);
        if (as_json) {
          out << json{{"applicable", rep.applicable},
                      {"star_matches", rep.star_matches},
                      {"variant_in_W", rep.variant_in_W},
                      {"star", rep.star}}.dump()
              << "\n";
        } else if (!rep.applicable) {
          out << "not completely regular; unary variant check skipped\n";
        } else {
          out << "star_matches=" << rep.star_matches
              << " variant_in_W=" << rep.variant_in_W << "\n";
        }
        return 0;
      }
      Semigroup v = variant(s, var_at);
      out << (as_json ? serialize_json(v) + "\n" : serialize(v));
      return 0;
    }
    if (*enum_cmd) {
      EnumConstraints c;
      c.order = order;
      c.require_monoid = want_monoid;
      c.require_zero = want_zero || want_zdiv;
      c.require_zero_divisors = want_zdiv;
      c.allow_order6 = allow6;
      c.split_depth = split;
      if (dedupe == "labeled") {
        c.dedupe = EnumConstraints::Dedupe::labeled;
      } else if (dedupe == "iso") {
        c.dedupe = EnumConstraints::Dedupe::iso;
      } else if (dedupe == "equivalence") {
        c.dedupe = EnumConstraints::Dedupe::equivalence;
      } else {
        throw RangeError("unknown dedupe mode '" + dedupe + "'");
      }
      std::function<void(Semigroup const&)> vis;
      if (emit) {
        vis = [&out](Semigroup const& s) { out << serialize(s) << "\n"; };
      }
      long count = enumerate(c, vis);
      if (as_json) {
        out << json{{"count", count}}.dump() << "\n";
      } else {
        out << "count=" << count << "\n";
      }
      return 0;
    }
    if (*t1) return run_table1(max_n, t1_order6, t1_listing, as_json, out);
    if (*suite_cmd) return run_suite(load_input(in), as_json, out);
    if (*pinj_cmd) {
      if (pinj_n > 0) {
        SymmetricInverseMonoid m = symmetric_inverse_monoid(pinj_n);
        EqPartition c = c_conjugacy(m.table);
        EqPartition star = p_star(m.table);
        if (as_json) {
          out << json{{"n", pinj_n},
                      {"elements", m.table.size()},
                      {"c_classes", c.num_classes()},
                      {"p_star_classes", star.num_classes()}}.dump()
              << "\n";
        } else {
          out << "I_" << pinj_n << ": elements=" << m.table.size()
              << " c_classes=" << c.num_classes()
              << " p_star_classes=" << star.num_classes() << "\n";
        }
        return 0;
      }
      if (alpha_text.empty()) throw RangeError("pinj needs --n or --alpha");
      PartialInjection alpha = PartialInjection::parse(alpha_text);
      if (beta_text.empty()) {
        if (as_json) {
          out << json{{"alpha", alpha.to_string()},
                      {"type", cc_type(alpha).to_string()}}.dump()
              << "\n";
        } else {
          out << "type: " << cc_type(alpha).to_string() << "\n";
        }
        return 0;
      }
      PartialInjection beta = PartialInjection::parse(beta_text);
      bool oracle = c_oracle(alpha, beta);
      auto witness = permutation_witness(alpha, beta);
      if (as_json) {
        out << json{{"alpha_type", cc_type(alpha).to_string()},
                    {"beta_type", cc_type(beta).to_string()},
                    {"c_oracle", oracle},
                    {"witness", witness ? json(witness->to_string()) : json(nullptr)},
                    {"compose", alpha.compose(beta).to_string()}}.dump()
            << "\n";
      } else {
        out << "alpha type: " << cc_type(alpha).to_string() << "\n";
        out << "beta type: " << cc_type(beta).to_string() << "\n";
        out << "c_oracle: " << (oracle ? "yes" : "no") << "\n";
        out << "witness: " << (witness ? witness->to_string() : "none") << "\n";
        out << "compose: " << alpha.compose(beta).to_string() << "\n";
      }
      return 0;
    }
    if (*sym) {
      CCRType a = parse_type(t1_text);
      if (t2_text.empty()) {
        if (as_json) {
          out << json{{"type", format_type(a)},
                      {"kappa", kappa(a).to_string()},
                      {"mu", mu(a)},
                      {"epi", is_epi_element(a)},
                      {"dom", dom_cardinality(a).to_string()}}.dump()
              << "\n";
        } else {
          out << "type: " << format_type(a) << "\n";
          out << "kappa=" << kappa(a).to_string() << " mu=" << mu(a)
              << " epi=" << is_epi_element(a)
              << " dom=" << dom_cardinality(a).to_string() << "\n";
        }
        return 0;
      }
      CCRType b = parse_type(t2_text);
      json doc{{"c_conjugate", c_conjugate(a, b)},
               {"j_related", i_j_related(a, b)}};
      std::string tr_text = "n/a", gamma_text = "n/a";
      if (is_epi_element(a) && is_epi_element(b)) {
        bool t = tr_conjugate(a, b);
        doc["tr_conjugate"] = t;
        tr_text = t ? "yes" : "no";
      }
      bool full = a.chains.all_zero() && a.lambda.is_zero()
                  && b.chains.all_zero() && b.lambda.is_zero();
      if (full) {
        GammaRelations g = gamma_relations(a, b);
        doc["gamma"] = json{{"p", g.p}, {"c", g.c}, {"j", g.j}};
        gamma_text = "p=" + std::to_string(g.p) + " c=" + std::to_string(g.c)
                     + " j=" + std::to_string(g.j);
      }
      if (as_json) {
        out << doc.dump() << "\n";
      } else {
        out << "c_conjugate: " << (c_conjugate(a, b) ? "yes" : "no") << "\n";
        out << "j_related: " << (i_j_related(a, b) ? "yes" : "no") << "\n";
        out << "tr_conjugate: " << tr_text << "\n";
        out << "gamma: " << gamma_text << "\n";
      }
      return 0;
    }
  } catch (Error const& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "no command\n";
  return 2;
}

}  // namespace

int cli_run(std::vector<std::string> const& args, std::ostream& out,
            std::ostream& err) {
  return dispatch(args, out, err);
}

}  // namespace semiconj
