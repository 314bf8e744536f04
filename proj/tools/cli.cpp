#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <iterator>
#include <sstream>

#include "qsc/bases.hpp"
#include "qsc/divsym.hpp"
#include "qsc/error.hpp"
#include "qsc/gz.hpp"
#include "qsc/perm.hpp"
#include "qsc/rtword.hpp"
#include "qsc/verify.hpp"

namespace qsc {

namespace {

using json = nlohmann::ordered_json;

// Raised when a computed cross-check disagrees.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

struct Inputs {
  std::string poly, word, forest, lambda, point, basis = "schubert", mode = "factorized", suite;
  std::string u, v, w;
  int n = 0;
  int max_n = 0;
  std::uint64_t seed = 7;
  bool q = false;
  bool json = false;
};

std::string payload(const std::string& value, std::istream& in) {
  if (value != "-") return value;
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void require_n(const Poly& f, int n) {
  if (n < 1) throw PreconditionError("-n must be positive");
  if (f.max_variable() > n) throw PreconditionError("polynomial uses a variable beyond x" + std::to_string(n));
}

std::string composition_str(const Composition& a) {
  std::string s = "(";
  for (std::size_t k = 0; k < a.size(); ++k) s += (k ? "," : "") + std::to_string(a[k]);
  return s + ")";
}

std::string code_str(const Code& c) { return composition_str(c).insert(0, "c="); }

// (index, coefficient) pairs in the order of the expansion.
using Terms = std::vector<std::pair<std::string, Integer>>;

void emit_terms(const std::string& basis, const Terms& terms, bool as_json, std::ostream& out) {
  if (as_json) {
    json j{{"basis", basis}, {"terms", json::array()}};
    for (const auto& [index, c] : terms) j["terms"].push_back({{"index", index}, {"coeff", c.get_str()}});
    out << j.dump() << "\n";
    return;
  }
  if (terms.empty()) out << "0\n";
  for (const auto& [index, c] : terms) out << index << " " << c.get_str() << "\n";
}

int cmd_expand(const Inputs& o, std::istream& in, std::ostream& out) {
  Poly f = parse_poly(payload(o.poly, in));
  require_n(f, o.n);
  Terms terms;
  if (o.basis == "schubert") {
    for (const auto& [w, c] : schubert_expand(f)) terms.emplace_back(w.to_string(), c);
  } else if (o.basis == "forest") {
    for (const auto& [code, c] : forest_expand(f)) terms.emplace_back(code_str(code), c);
  } else {
    if (!is_quasisymmetric(f, o.n)) throw PreconditionError("polynomial is not quasisymmetric in x1..x" + std::to_string(o.n));
    for (const auto& [a, c] : gessel_coeffs(f, o.n)) terms.emplace_back(composition_str(a), c);
  }
  emit_terms(o.basis, terms, o.json, out);
  return kExitOk;
}

int cmd_gessel(const Inputs& o, std::istream& in, std::ostream& out) {
  Poly f = parse_poly(payload(o.poly, in));
  require_n(f, o.n);
  if (!is_quasisymmetric(f, o.n)) throw PreconditionError("polynomial is not quasisymmetric in x1..x" + std::to_string(o.n));
  auto coeffs = gessel_coeffs(f, o.n);
  if (o.json) {
    json j{{"basis", "fundamental"}, {"terms", json::array()}};
    for (const auto& [a, c] : coeffs) {
      json t{{"index", composition_str(a)}, {"coeff", c.get_str()}};
      if (!a.empty()) {
        auto r = ribbon_of(a);
        t["ribbon"] = {{"lambda", r.lambda}, {"mu", r.mu}};
      }
      j["terms"].push_back(t);
    }
    out << j.dump() << "\n";
    return kExitOk;
  }
  if (coeffs.empty()) out << "0\n";
  for (const auto& [a, c] : coeffs) {
    out << composition_str(a) << " " << c.get_str();
    if (!a.empty()) {
      auto r = ribbon_of(a);
      out << " ribbon " << composition_str(r.lambda) << "/" << composition_str(r.mu);
    }
    out << "\n";
  }
  return kExitOk;
}

int cmd_ds(const Inputs& o, std::istream& in, std::ostream& out) {
  Poly f = parse_poly(payload(o.poly, in));
  require_n(f, o.n);
  bool direct = o.mode != "factorized", factorized = o.mode != "direct";
  std::string d, fac;
  if (o.q) {
    if (direct) d = format_poly(qds_direct(f, o.n));
    if (factorized) fac = format_poly(qds_factorized(f, o.n));
  } else {
    if (direct) d = format_poly(ds_direct(f, o.n));
    if (factorized) fac = format_poly(ds_factorized(f, o.n));
  }
  if (o.json) {
    json j{{"n", o.n}, {"q", o.q}};
    if (direct) j["direct"] = d;
    if (factorized) j["factorized"] = fac;
    out << j.dump() << "\n";
  } else {
    if (direct) out << d << "\n";
    if (factorized) out << fac << "\n";
  }
  if (direct && factorized && d != fac) throw VerificationFailure("direct " + d + " differs from factorized " + fac);
  return kExitOk;
}

int cmd_lr(const Inputs& o, std::ostream& out) {
  Permutation w = parse_permutation(o.w);
  Integer value;
  if (!o.word.empty()) {
    if (!o.u.empty() || !o.v.empty()) throw PreconditionError("give either --word or -u and -v");
    Word omega = parse_word(o.word);
    require_rtseq(omega, static_cast<int>(omega.size()));
    value = lr_via_word(omega, w);
  } else {
    if (o.u.empty() || o.v.empty()) throw PreconditionError("lr needs -u and -v, or --word");
    value = lr_coeff(parse_permutation(o.u), w, parse_permutation(o.v));
  }
  if (o.json)
    out << json{{"value", value.get_str()}}.dump() << "\n";
  else
    out << value.get_str() << "\n";
  return kExitOk;
}

int cmd_trim(const Inputs& o, std::istream& in, std::ostream& out) {
  NestedForest f = parse_nested_forest(payload(o.forest, in));
  if (o.n < 1) throw PreconditionError("-n must be positive");
  auto words = trim_set(f, o.n);
  if (o.json) {
    json j{{"forest", f.to_string()}, {"n", o.n}, {"words", json::array()}};
    for (const auto& w : words) j["words"].push_back(format_word(w));
    out << j.dump() << "\n";
    return kExitOk;
  }
  for (const auto& w : words) out << format_word(w) << "\n";
  return kExitOk;
}

Word read_rtseq(const Inputs& o, std::istream& in) {
  Word w = parse_word(payload(o.word, in));
  require_rtseq(w, static_cast<int>(w.size()));
  return w;
}

int cmd_uv(const Inputs& o, std::istream& in, std::ostream& out) {
  Word w = read_rtseq(o, in);
  int n = static_cast<int>(w.size());
  auto [u, v] = uv_of(w);
  if (o.json)
    out << json{{"u", u.to_string(n)}, {"v", v.to_string(n)}}.dump() << "\n";
  else
    out << "u=" << u.to_string(n) << " v=" << v.to_string(n) << "\n";
  return kExitOk;
}

int cmd_matrix(const Inputs& o, std::istream& in, std::ostream& out) {
  Word w = read_rtseq(o, in);
  auto m = star_matrix(w);
  if (o.json) {
    out << json{{"word", format_word(w)}, {"rows", m.rows()}, {"forest", nested_forest_of(w).to_string()},
                {"box", format_box(box_of(w))}}
               .dump()
        << "\n";
    return kExitOk;
  }
  for (const auto& r : m.rows()) out << r << "\n";
  return kExitOk;
}

int cmd_locate(const Inputs& o, std::ostream& out) {
  RVector lambda = parse_rational_vector(o.lambda);
  RVector z = parse_rational_vector(o.point);
  for (const auto& l : lambda)
    if (l.get_den() != 1) throw PreconditionError("lambda entries must be integers");
  if (!in_permutahedron(z, lambda)) throw PreconditionError("point is outside the permutahedron");
  Word w = hhmp_locate(z, lambda);
  if (o.json) {
    out << json{{"word", format_word(w)}, {"box", format_box(box_of(w))}, {"dimension", t_count(w)}}.dump() << "\n";
    return kExitOk;
  }
  out << format_word(w) << "\n";
  return kExitOk;
}

int cmd_verify(const Inputs& o, std::ostream& out) {
  VerifyOptions opts{o.max_n, o.seed};
  std::vector<SuiteReport> reports;
  if (o.suite == "all")
    reports = run_all_suites(opts);
  else
    reports.push_back(run_suite(o.suite, opts));
  bool ok = true;
  json j{{"suites", json::array()}};
  for (const auto& r : reports) {
    ok = ok && r.passed;
    j["suites"].push_back({{"suite", r.suite}, {"passed", r.passed}, {"checks", r.checks}, {"counterexample", r.counterexample}});
    if (!o.json) out << format_report(r) << "\n";
  }
  if (o.json) out << j.dump() << "\n";
  return ok ? kExitOk : kExitVerification;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quasisymmetric Schubert calculus toolkit", "qsc"};
  app.require_subcommand(1);
  Inputs o;
  app.add_flag("--json", o.json, "Print JSON instead of text");

  auto* expand = app.add_subcommand("expand", "Expand a polynomial in a basis");
  expand->add_option("--basis", o.basis)->check(CLI::IsMember({"schubert", "forest", "fundamental"}));
  expand->add_option("-f", o.poly, "Polynomial, or - for standard input")->required();
  expand->add_option("-n", o.n, "Number of variables")->required();

  auto* ds = app.add_subcommand("ds", "Divided symmetrization");
  ds->add_flag("-q", o.q, "q-analogue");
  ds->add_option("-f", o.poly, "Polynomial, or - for standard input")->required();
  ds->add_option("-n", o.n, "Number of variables")->required();
  ds->add_option("--mode", o.mode)->check(CLI::IsMember({"direct", "factorized", "both"}));

  auto* lr = app.add_subcommand("lr", "Structure constant ct d_v(S_u S_w), or the functional of a word on S_w");
  lr->add_option("-u", o.u);
  lr->add_option("-v", o.v);
  lr->add_option("-w", o.w)->required();
  lr->add_option("--word", o.word);

  auto* trim = app.add_subcommand("trim", "Words of RTSeq_n with a given nested forest");
  trim->add_option("--forest", o.forest, "Nested forest, or - for standard input")->required();
  trim->add_option("-n", o.n)->required();

  auto* uv = app.add_subcommand("uv", "The permutations u and v of a word");
  uv->add_option("--word", o.word)->required();

  auto* matrix = app.add_subcommand("matrix", "The star matrix of a word");
  matrix->add_option("--word", o.word)->required();

  auto* locate = app.add_subcommand("locate", "Cell of the permutahedron subdivision containing a point");
  locate->add_option("--lambda", o.lambda)->required();
  locate->add_option("--point", o.point)->required();

  auto* gessel = app.add_subcommand("gessel", "Fundamental expansion of a quasisymmetric polynomial");
  gessel->add_option("-f", o.poly, "Polynomial, or - for standard input")->required();
  gessel->add_option("-n", o.n)->required();

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  verify->add_option("suite", o.suite)->required()->check(CLI::IsMember(suites));
  verify->add_option("--max-n", o.max_n);
  verify->add_option("--seed", o.seed);

  for (auto* sub : app.get_subcommands({})) sub->add_flag("--json", o.json, "Print JSON instead of text");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }

  try {
    if (expand->parsed()) return cmd_expand(o, in, out);
    if (ds->parsed()) return cmd_ds(o, in, out);
    if (lr->parsed()) return cmd_lr(o, out);
    if (trim->parsed()) return cmd_trim(o, in, out);
    if (uv->parsed()) return cmd_uv(o, in, out);
    if (matrix->parsed()) return cmd_matrix(o, in, out);
    if (locate->parsed()) return cmd_locate(o, out);
    if (gessel->parsed()) return cmd_gessel(o, in, out);
    if (verify->parsed()) return cmd_verify(o, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const VerificationFailure& e) {
    err << "verification failure: " << e.what() << "\n";
    return kExitVerification;
  } catch (const PreconditionError& e) {
    err << "precondition: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const Error& e) {
    err << "verification failure: " << e.what() << "\n";
    return kExitVerification;
  }
  return kExitParse;
}

}  // namespace qsc
