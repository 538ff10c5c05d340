// apolar: command-line front end for the inverse-system library.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "apolar/apolarity.hpp"
#include "apolar/lefschetz.hpp"
#include "apolar/nagata.hpp"
#include "apolar/parse.hpp"
#include "apolar/report.hpp"
#include "apolar/simplicial.hpp"

using namespace apolar;

namespace {

struct Options {
  std::string input;
  int xvars = 1;
  int uvars = 0;
  int order = -1;
  std::optional<std::uint64_t> seed;
  std::size_t trials = 20;
  std::size_t symbolic_threshold = 8;
  bool canonical = false;
  bool json = false;
};

// Input is a file path when such a file exists, else inline text.
std::string read_input(const std::string& arg) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(arg, ec)) return arg;
  std::ifstream in(arg);
  if (!in) throw std::runtime_error("cannot read " + arg);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::uint64_t resolve_seed(const Options& o) {
  if (o.seed) return *o.seed;
  if (const char* env = std::getenv("APOLAR_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw ContractError("APOLAR_SEED is not a non-negative integer");
    }
  }
  return 0;
}

Polynomial input_polynomial(const Options& o) {
  return parse_polynomial(read_input(o.input), VariableSplit(o.xvars, o.uvars));
}

int require_order(const Options& o) {
  if (o.order < 0) throw ContractError("--order is required");
  return o.order;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

void emit(const Options& o, const Json& j, const std::string& text) {
  if (o.json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

void run_hilbert(const Options& o) {
  const auto h = hilbert(input_polynomial(o));
  std::ostringstream t;
  t << "socle degree " << h.socle_degree << "\nh = " << join(h.h) << "\n";
  if (h.bigraded)
    for (const auto& e : *h.bigraded) t << "dim A_(" << e.i << "," << e.j << ") = " << e.dim << "\n";
  emit(o, to_json(h), t.str());
}

void run_ann(const Options& o) {
  const auto ideal = annihilator(input_polynomial(o));
  std::ostringstream t;
  for (const auto& g : ideal.minimal_generators()) t << to_string(g) << "\n";
  emit(o, to_json(ideal), t.str());
}

void run_hessian(const Options& o) {
  const auto h = hessian_matrix(input_polynomial(o), require_order(o));
  const auto z = hessian_vanishes(h, {o.symbolic_threshold, 12, resolve_seed(o)});
  std::ostringstream t;
  t << "order " << h.order << ", sigma " << h.size() << "\nbasis:";
  for (const auto& m : h.basis) t << " " << to_string(DiffOperator::monomial(h.entries.front().split(), m));
  t << "\nhess^" << h.order << (z.vanishes ? " vanishes" : " does not vanish") << " ("
    << (z.certainty == Certainty::certain ? "certain" : "probabilistic")
    << (z.symbolic ? ", symbolic" : ", by evaluation") << ")\n";
  if (z.value) t << "value " << to_string(*z.value) << " at a point found in round " << z.rounds << "\n";
  emit(o, to_json(h, z), t.str());
}

void run_lefschetz(const Options& o, Property p) {
  const LefschetzOptions opts{o.canonical ? Strategy::canonical() : Strategy::search(o.trials),
                              resolve_seed(o), o.symbolic_threshold, 12};
  const auto f = input_polynomial(o);
  const auto r = p == Property::wlp ? check_wlp(f, opts) : check_slp(f, opts);
  std::ostringstream t;
  t << to_string(r.property) << ": " << to_string(r.verdict);
  if (r.witness) t << " (witness " << to_string(*r.witness) << ")";
  if (!r.note.empty()) t << " - " << r.note;
  t << "\n";
  for (const auto& e : r.ranks)
    t << "  A_" << e.source_degree << " -> A_" << e.source_degree + e.power << ": rank " << e.rank
      << " of " << e.expected << (e.middle ? " (middle)" : "") << "\n";
  for (const auto& e : r.hessians) {
    t << "  hess^" << e.order << " (sigma " << e.sigma << "): ";
    if (e.value)
      t << to_string(*e.value) << "\n";
    else if (e.zero_test)
      t << (e.zero_test->vanishes ? "vanishes" : "nonzero") << " ("
        << (e.zero_test->certainty == Certainty::certain ? "certain" : "probabilistic") << ")\n";
  }
  emit(o, to_json(r), t.str());
}

void run_nagata_build(const Options& o) {
  // g_0; g_1; ... separated by ';' or newlines.
  std::string text = read_input(o.input);
  for (auto& c : text)
    if (c == '\n') c = ';';
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ';');)
    if (part.find_first_not_of(" \t\r") != std::string::npos) parts.push_back(part);
  const VariableSplit split(static_cast<int>(std::max<std::size_t>(parts.size(), 1)), o.uvars);
  std::vector<Polynomial> g;
  for (const auto& part : parts) g.push_back(parse_polynomial(part, split));
  const auto form = build_nagata(require_order(o), std::move(g));
  std::ostringstream t;
  t << "f = " << to_string(form.f) << "\n";
  for (const auto& w : form.warnings) t << "warning: " << w << "\n";
  emit(o, to_json(form), t.str());
}

SimplicialComplex input_complex(const Options& o) {
  return complex_from_json(Json::parse(read_input(o.input)));
}

void run_simplicial_predict(const Options& o) {
  const auto c = input_complex(o);
  const auto p = predict_generators(c, require_order(o));
  Json j = to_json(p);
  j["complex"] = to_json(c);
  std::ostringstream t;
  t << "f-vector " << join(c.f_vector()) << "\npredicted h = " << join(p.h) << "\n";
  for (const auto& w : c.warnings()) t << "warning: " << w << "\n";
  t << "(a) " << p.powers.size() << " powers\n(b) " << p.nonfaces.size() << " minimal non-faces"
    << (p.complement_empty ? " (complement is empty)" : "") << "\n(c) " << p.mixed.size()
    << " mixed monomials\n(d) " << p.binomials.size() << " binomials\ncompletion " << p.completion.size()
    << "\n";
  emit(o, j, t.str());
}

void run_simplicial_verify(const Options& o) {
  const auto c = input_complex(o);
  const auto r = verify_prediction(c, require_order(o));
  std::ostringstream t;
  t << "f = " << to_string(r.form.f) << "\npredicted h = " << join(r.prediction.h)
    << "\ncomputed  h = " << join(r.computed.h) << "\n";
  t << "(i) dimensions: " << (r.dimensions_pass() ? "pass" : "FAIL") << " (" << r.dimension_checks << " pieces)\n";
  for (const auto& d : r.dimension_mismatches)
    t << "    (" << d.i << "," << d.j << ") predicted " << d.predicted << ", computed " << d.computed << "\n";
  t << "(ii) annihilation: " << (r.generators_pass() ? "pass" : "FAIL") << " (" << r.generator_checks
    << " operators)\n";
  for (const auto& g : r.non_annihilating) t << "    " << g << "\n";
  t << "(iii) ideal: " << (r.ideal_pass() ? "pass" : "FAIL") << " (" << r.ideal_checks << " pieces)\n";
  for (const auto& m : r.ideal_mismatches)
    t << "    (" << m.i << "," << m.j << ") generated quotient " << m.generated_quotient << ", computed "
      << m.computed << "\n";
  t << "    families (a)-(d) alone: " << (r.stated_ideal_pass() ? "pass" : "differ") << " in "
    << r.stated_ideal_mismatches.size() << " pieces\n";
  emit(o, to_json(r), t.str());
}

void run_geometry(const Options& o) {
  const auto f = input_polynomial(o);
  const auto form = recognize_nagata(f);
  if (!form) throw ContractError("input is not of the form sum x_i^{d1} g_i(u)");
  const auto s = sample_line_family(*form, o.trials, resolve_seed(o));
  std::ostringstream t;
  t << s.on_hypersurface << " of " << s.trials << " sampled lines lie on V(f)"
    << (s.inconclusive ? " (sampling budget exhausted: inconclusive)" : "") << "\n"
    << "P^{m-1} in Sing(V(f)): " << (s.singular_locus_check ? "yes" : "no") << "\n"
    << "parameters: " << s.alpha_parameters << " + " << s.base_parameters << " = " << s.family_parameters << "\n";
  emit(o, to_json(s), t.str());
}

void report_error(const Options& o, const std::string& kind, const std::string& message) {
  if (o.json)
    std::cerr << Json{{"error", kind}, {"message", message}}.dump() << "\n";
  else
    std::cerr << "error (" << kind << "): " << message << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Macaulay inverse systems, Hessians and Lefschetz checks"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub, bool poly) {
    sub->add_option("input", o.input, poly ? "Polynomial text or a file holding it" : "Complex JSON file or text")
        ->required();
    sub->add_flag("--json", o.json, "JSON output");
    if (poly) {
      sub->add_option("--xvars", o.xvars, "Number of x-variables x0..")->check(CLI::PositiveNumber);
      sub->add_option("--uvars", o.uvars, "Number of u-variables u1..")->check(CLI::NonNegativeNumber);
    }
  };
  auto add_seed = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "PRNG seed (default APOLAR_SEED or 0)");
  };

  auto* hil = app.add_subcommand("hilbert", "Hilbert vector and bigraded table");
  add_common(hil, true);
  auto* ann = app.add_subcommand("ann", "Minimal generators of Ann(f)");
  add_common(ann, true);
  auto* hes = app.add_subcommand("hessian", "Hessian of order k and its zero test");
  add_common(hes, true);
  hes->add_option("--order", o.order, "Hessian order k")->required();
  hes->add_option("--symbolic-threshold", o.symbolic_threshold, "Largest sigma expanded symbolically");
  add_seed(hes);
  CLI::App* lef[2] = {app.add_subcommand("wlp", "Weak Lefschetz check"),
                      app.add_subcommand("slp", "Strong Lefschetz check")};
  for (auto* sub : lef) {
    add_common(sub, true);
    add_seed(sub);
    sub->add_option("--trials", o.trials, "Random witness forms to try");
    sub->add_option("--symbolic-threshold", o.symbolic_threshold, "Largest sigma expanded symbolically");
    sub->add_flag("--canonical", o.canonical, "Only try the sum of the x-variables");
  }
  auto* nag = app.add_subcommand("nagata-build", "Assemble sum x_i^{d1} g_i from g_0; g_1; ...");
  nag->add_option("input", o.input, "g_i separated by ';' or a file with one per line")->required();
  nag->add_option("--uvars", o.uvars, "Number of u-variables")->required();
  nag->add_option("--order", o.order, "Order d1")->required();
  nag->add_flag("--json", o.json, "JSON output");
  auto* pre = app.add_subcommand("simplicial-predict", "Closed-form prediction for a pure complex");
  add_common(pre, false);
  pre->add_option("--order", o.order, "Dimension k of the complex")->required();
  auto* ver = app.add_subcommand("simplicial-verify", "Check the prediction against Ann(f)");
  add_common(ver, false);
  ver->add_option("--order", o.order, "Dimension k of the complex")->required();
  auto* geo = app.add_subcommand("geometry", "Sample lines on a Nagata hypersurface");
  add_common(geo, true);
  add_seed(geo);
  geo->add_option("--trials", o.trials, "Number of lines to sample");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (hil->parsed()) run_hilbert(o);
    else if (ann->parsed()) run_ann(o);
    else if (hes->parsed()) run_hessian(o);
    else if (lef[0]->parsed()) run_lefschetz(o, Property::wlp);
    else if (lef[1]->parsed()) run_lefschetz(o, Property::slp);
    else if (nag->parsed()) run_nagata_build(o);
    else if (pre->parsed()) run_simplicial_predict(o);
    else if (ver->parsed()) run_simplicial_verify(o);
    else if (geo->parsed()) run_geometry(o);
  } catch (const ParseError& e) {
    report_error(o, "parse", e.what());
    return 2;
  } catch (const Json::parse_error& e) {
    report_error(o, "parse", e.what());
    return 2;
  } catch (const Json::exception& e) {
    report_error(o, "contract", e.what());
    return 1;
  } catch (const ContractError& e) {
    report_error(o, "contract", e.what());
    return 1;
  } catch (const StructuralError& e) {
    report_error(o, "structural", e.what());
    return 1;
  } catch (const std::exception& e) {
    report_error(o, "io", e.what());
    return 2;
  }
  return 0;
}
