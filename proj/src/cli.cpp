#include "qh/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <numeric>
#include <sstream>

#include <CLI11.hpp>

#include "qh/catalog.hpp"
#include "qh/combinatorics.hpp"
#include "qh/witnesses.hpp"

namespace qh {

namespace {

class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(trim(item));
  return out;
}

}  // namespace

Cyc ScalarToken::at(int conductor) const {
  if (!is_root) return Cyc::rational(conductor, rational);
  if (conductor % root_order != 0) throw UsageError("conductor does not contain the requested root of unity");
  return Cyc::root_of_unity(conductor, exponent * (conductor / root_order));
}

ScalarToken parse_scalar(const std::string& raw) {
  const std::string text = trim(raw);
  ScalarToken t;
  if (text.empty()) throw UsageError("empty scalar");
  if (text[0] == 'z') {
    const auto caret = text.find('^');
    try {
      std::size_t used = 0;
      const std::string n = text.substr(1, caret == std::string::npos ? std::string::npos : caret - 1);
      t.root_order = std::stoi(n, &used);
      if (used != n.size() || t.root_order < 1) throw UsageError("");
      t.exponent = 1;
      if (caret != std::string::npos) {
        const std::string k = text.substr(caret + 1);
        t.exponent = std::stol(k, &used);
        if (used != k.size()) throw UsageError("");
      }
    } catch (const std::exception&) {
      throw UsageError("bad root of unity '" + text + "', expected zN or zN^k");
    }
    t.exponent = ((t.exponent % t.root_order) + t.root_order) % t.root_order;
    t.is_root = true;
    return t;
  }
  try {
    t.rational = mpq_class(text);
    t.rational.canonicalize();
  } catch (const std::exception&) {
    throw UsageError("bad scalar '" + text + "', expected p/q or zN^k");
  }
  if (t.rational.get_den() == 0) throw UsageError("zero denominator in '" + text + "'");
  return t;
}

namespace {

struct Options {
  std::string group = "Z2";
  std::string weights;
  std::string chars;
  std::string family = "I2";
  int m = 1;
  int n = 2;
  std::string a;
  int degree_bound = -1;
  std::string format = "json";
  std::string out_path;
  int conductor = 0;
  int m_max = 12;
  bool inject_fault = false;
  int negative_samples = 24;
  std::string witness_name;
  std::string mutate;
};

// Everything parsed from the flags that describes one instance.
struct Setup {
  FinAbGroup group;
  std::optional<CoveringQuiver> quiver;
  std::vector<ScalarToken> char_tokens;
  std::optional<ScalarToken> a_token;
  int conductor = 2;
};

Setup make_setup(const Options& o, bool need_weights) {
  Setup s;
  s.group = FinAbGroup::parse(o.group);
  long L = lcm(s.group.exponent(), 2);
  if (!o.chars.empty())
    for (const auto& tok : split(o.chars, ',')) {
      s.char_tokens.push_back(parse_scalar(tok));
      L = lcm(L, s.char_tokens.back().root_order);
    }
  if (!o.a.empty()) {
    s.a_token = parse_scalar(o.a);
    L = lcm(L, s.a_token->root_order);
  }
  if (o.conductor > 0) {
    if (o.conductor % L != 0) throw UsageError("--conductor must be a multiple of " + std::to_string(L));
    L = o.conductor;
  }
  s.conductor = static_cast<int>(L);
  if (need_weights) {
    if (o.weights.empty()) throw UsageError("--weights is required");
    s.quiver.emplace(s.group, s.group.parse_weights(o.weights));
  }
  return s;
}

TameFamily make_family(const Options& o, const Setup& s) {
  auto need_a = [&] {
    if (!s.a_token) throw UsageError("--a is required for " + o.family);
    const Cyc a = s.a_token->at(s.conductor);
    if (a.is_zero()) throw UsageError("--a must be nonzero");
    return a;
  };
  if (o.family == "I1") return TameFamily::i1(need_a());
  if (o.family == "I2") return TameFamily::i2(o.m, need_a());
  if (o.family == "I3") return TameFamily::i3(o.n);
  if (o.family == "I4") return TameFamily::i4(o.m);
  throw UsageError("--family must be one of I1, I2, I3, I4");
}

std::shared_ptr<HopfStructure> make_hopf(const Setup& s) {
  const auto& Q = *s.quiver;
  std::vector<Cyc> params;
  for (const auto& t : s.char_tokens) params.push_back(t.at(s.conductor));
  if (params.empty()) params.assign(Q.num_families() == 2 && Q.weights()[0] == Q.weights()[1] ? 2 : 4, Cyc::one(s.conductor));
  if (Q.num_families() != 2) throw UsageError("exactly two weights are needed");
  auto act = action_from_parameters(Q, params, s.conductor);
  if (!act) throw UsageError("no characters of " + s.group.to_string() + " realize --chars");
  return std::make_shared<HopfStructure>(Q, *act, s.conductor);
}

void emit(std::ostream& out, const nlohmann::json& j) { out << j.dump() << "\n"; }

int cmd_combinatorics(const Options& o, std::ostream& out) {
  if (o.m_max < 2) throw UsageError("--m-max must be at least 2");
  bool ok = true;
  if (o.format == "table") out << std::left << std::setw(4) << "m" << std::setw(4) << "l" << std::setw(10) << "t"
                                << "value\n";
  for (int m = 2; m <= o.m_max; ++m) {
    const auto mismatch = h_identity_mismatch(m, o.inject_fault);
    bool equivalence = true;
    nlohmann::json bad = nlohmann::json::array();
    for (int k = 0; k < m; ++k) {
      const Cyc t = Cyc::root_of_unity(m, k);
      const bool vanishes = vanishing_criterion(m, t);
      if (vanishes != (std::gcd(k, m) == 1)) {
        equivalence = false;
        bad.push_back({{"k", k}, {"vanishes", vanishes}});
      }
      if (o.format == "table")
        for (int l = 1; l < m; ++l)
          out << std::setw(4) << m << std::setw(4) << l << std::setw(10) << t.to_string() << h1(m, l, t).to_string()
              << "\n";
    }
    const bool gf = generating_function_check(m);
    const bool pass = !mismatch && equivalence && gf;
    ok = ok && pass;
    if (o.format != "table") {
      nlohmann::json j{{"m", m}, {"identity", !mismatch}, {"vanishing_iff_primitive", equivalence},
                       {"generating_function", gf}};
      if (mismatch) j["counterexample"] = mismatch->to_json();
      if (!equivalence) j["counterexample_roots"] = bad;
      emit(out, j);
    }
  }
  return ok ? 0 : 1;
}

int cmd_quiver(const Options& o, std::ostream& out) {
  const auto s = make_setup(o, true);
  if (o.format == "dot") {
    out << s.quiver->to_dot();
  } else if (o.format == "table") {
    for (const auto& a : s.quiver->arrows())
      out << s.quiver->arrow_label(a) << ": " << s.quiver->vertex_label(s.quiver->source(a)) << " -> "
          << s.quiver->vertex_label(s.quiver->target(a)) << "\n";
  } else {
    emit(out, s.quiver->to_json());
  }
  return 0;
}

int cmd_hopf_check(const Options& o, std::ostream& out) {
  const auto s = make_setup(o, true);
  const auto H = make_hopf(s);
  const auto fam = make_family(o, s);
  const auto crit = criterion_verdict(*H, fam);
  const GradedIdeal I = build_lifted_ideal(*H, fam);
  const auto oracle = o.degree_bound > 0 ? H->is_hopf_ideal(I, o.degree_bound) : H->is_hopf_ideal(I);
  const bool agree = crit.hopf == oracle.hopf;
  nlohmann::json j{{"group", s.group.to_string()},
                   {"chars", case_parameters(*H).to_json()},
                   {"family", fam.to_json()},
                   {"criterion", crit.hopf ? "hopf" : "not_hopf"},
                   {"criterion_ref", crit.criterion_ref},
                   {"oracle", oracle.hopf ? "hopf" : "not_hopf"},
                   {"admissible", oracle.admissible},
                   {"agree", agree}};
  if (oracle.quotient) j["dim"] = oracle.quotient->dimension;
  if (!oracle.diagnostics.empty()) j["diagnostic"] = oracle.diagnostics.front().to_json();
  if (o.format == "table")
    out << "criterion: " << j["criterion"].get<std::string>() << "\noracle:    " << j["oracle"].get<std::string>()
        << "\nagree:     " << (agree ? "yes" : "no") << "\n";
  else
    emit(out, j);
  return agree ? 0 : 1;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  const auto G = FinAbGroup::parse(o.group);
  EnumerationOptions eo;
  if (o.conductor > 0) eo.conductor = o.conductor;
  eo.negative_samples = o.negative_samples;
  const auto res = enumerate_tame(G, eo);
  for (const auto& inst : res.instances) {
    if (o.format == "table")
      out << inst.family.to_string() << "  W=" << inst.to_json()["weights"].dump() << "  chars=" << inst.params.to_json().dump()
          << "  dim=" << (inst.dim() ? std::to_string(*inst.dim()) : "?") << "\n";
    else
      emit(out, inst.to_json());
  }
  for (const auto& d : res.disagreements) emit(out, {{"disagreement", d.to_json()}});
  emit(out, {{"summary",
              {{"group", G.to_string()},
               {"grid_points", res.grid_points},
               {"instances", res.instances.size()},
               {"negatives_checked", res.negatives_checked},
               {"disagreements", res.disagreements.size()}}}});
  return res.disagreements.empty() ? 0 : 1;
}

int cmd_blocks(const Options& o, std::ostream& out) {
  const auto s = make_setup(o, true);
  const auto fam = make_family(o, s);
  const PathAlgebra A(*s.quiver, s.conductor);
  const GradedIdeal I = build_lifted_ideal(A, fam);
  const auto rep = o.degree_bound > 0 ? blocks(I, o.degree_bound) : blocks(I);
  auto j = rep.to_json(s.group);
  bool ok = rep.equal_blocks && rep.dim_total == rep.block_count * rep.dim_principal;
  if (!s.char_tokens.empty()) {
    const auto H = make_hopf(s);
    const bool hopf = H->is_hopf_ideal(I).hopf;
    j["hopf"] = hopf;
    ok = ok && hopf;
  }
  emit(out, j);
  return ok ? 0 : 1;
}

int cmd_witness(const Options& o, std::ostream& out) {
  HopfMorphism phi;
  if (o.witness_name == "book")
    phi = phi_book();
  else if (o.witness_name == "taft")
    phi = phi_taft();
  else
    throw UsageError("witness must be 'book' or 'taft'");
  if (!o.mutate.empty()) {
    const auto parts = split(o.mutate, ',');
    if (parts.size() != 2) throw UsageError("--mutate takes column,entry");
    const int col = std::stoi(parts[0]), entry = std::stoi(parts[1]);
    if (col < 0 || col >= static_cast<int>(phi.columns.size())) throw UsageError("--mutate column out of range");
    auto it = phi.columns[col].find(entry);
    if (it == phi.columns[col].end()) throw UsageError("--mutate entry is zero");
    it->second = -it->second;
  }
  const auto rep = verify_hopf_iso(phi);
  auto j = rep.to_json();
  j["name"] = o.witness_name;
  if (o.format == "json" && !o.out_path.empty()) j["morphism"] = phi.to_json();
  emit(out, j);
  return rep.ok ? 0 : 1;
}

int cmd_axioms(const Options& o, std::ostream& out) {
  const auto s = make_setup(o, true);
  const auto H = make_hopf(s);
  const int bound = o.degree_bound > 0 ? o.degree_bound : 4;
  const auto ax = H->verify_hopf_axioms(bound);
  const auto comm = H->commutation_check();
  nlohmann::json j{{"degree_bound", bound}, {"paths_checked", ax.paths_checked}, {"axioms", ax.ok},
                   {"commutation", comm.ok}};
  if (ax.counterexample) j["counterexample"] = ax.counterexample->to_json();
  emit(out, j);
  return ax.ok && comm.ok ? 0 : 1;
}

int cmd_case5(std::ostream& out) {
  const auto rep = case5_refutation();
  emit(out, rep.to_json());
  return rep.local_frobenius_possible ? 1 : 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graded basic Hopf algebras on covering quivers"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* c, bool instance) {
    c->add_option("--group", o.group, "finite abelian group, e.g. Z2xZ4");
    c->add_option("--format", o.format, "json | table | dot")->check(CLI::IsMember({"json", "table", "dot"}));
    c->add_option("--out", o.out_path, "write the report to this file");
    c->add_option("--conductor", o.conductor, "work over Q(zeta_L)");
    if (!instance) return;
    c->add_option("--weights", o.weights, "weight sequence, e.g. \"(1),(1)\"");
    c->add_option("--chars", o.chars, "q,p (W=(g,g)) or q1,p1,q2,p2 (W=(g,h))");
    c->add_option("--family", o.family, "I1 | I2 | I3 | I4");
    c->add_option("--m", o.m, "m for I2 and I4");
    c->add_option("--n", o.n, "n for I3");
    c->add_option("--a", o.a, "scalar a for I1 and I2 (p/q or zN^k)");
    c->add_option("--degree-bound", o.degree_bound, "degree bound for the checks");
  };

  auto* comb = app.add_subcommand("combinatorics", "tuple-sum identities and the vanishing criterion");
  add_common(comb, false);
  comb->add_option("--m-max", o.m_max, "largest m");
  comb->add_flag("--inject-fault", o.inject_fault, "perturb one sum (test hook)");

  auto* quiv = app.add_subcommand("quiver", "covering quiver as JSON, table or DOT");
  add_common(quiv, true);
  auto* hc = app.add_subcommand("hopf-check", "closed-form verdict next to the brute-force verdict");
  add_common(hc, true);
  auto* en = app.add_subcommand("enumerate", "all tame graded basic Hopf algebras over a group");
  add_common(en, false);
  en->add_option("--negative-samples", o.negative_samples, "criterion-negative points re-checked by brute force");
  auto* bl = app.add_subcommand("blocks", "block decomposition of a lifted quotient");
  add_common(bl, true);
  auto* wi = app.add_subcommand("witness", "verify an explicit isomorphism (book | taft)");
  add_common(wi, false);
  wi->add_option("name", o.witness_name, "book | taft")->required();
  wi->add_option("--mutate", o.mutate, "negate one matrix entry: column,entry (test hook)");
  auto* ax = app.add_subcommand("axioms", "Hopf axioms of the path coalgebra up to a degree");
  add_common(ax, true);
  auto* c5 = app.add_subcommand("case5", "structure of k<x,y>/(yx-x^2, y^2)");
  add_common(c5, false);

  std::vector<const char*> argv{"qhopf"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!o.out_path.empty()) {
    file.open(o.out_path);
    if (!file) {
      err << "error: cannot open " << o.out_path << "\n";
      return 2;
    }
    sink = &file;
  }

  try {
    if (*comb) return cmd_combinatorics(o, *sink);
    if (*quiv) return cmd_quiver(o, *sink);
    if (*hc) return cmd_hopf_check(o, *sink);
    if (*en) return cmd_enumerate(o, *sink);
    if (*bl) return cmd_blocks(o, *sink);
    if (*wi) return cmd_witness(o, *sink);
    if (*ax) return cmd_axioms(o, *sink);
    if (*c5) return cmd_case5(*sink);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const GroupError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const QuiverError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const CatalogError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const AllowabilityError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const CombinatoricsError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace qh
