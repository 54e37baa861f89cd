#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "facering/complex.hpp"
#include "facering/errors.hpp"
#include "facering/exact_matrix.hpp"
#include "facering/fixtures.hpp"
#include "facering/io.hpp"
#include "facering/lefschetz.hpp"
#include "facering/monomial_algebra.hpp"
#include "facering/subdivision.hpp"

namespace facering::cli {

namespace {

struct Options {
  std::string complex_path;
  std::string fixture;
  std::string caps;
  std::string degrees;
  int degree = -1;
  std::string forms;
  std::string sop;
  std::string f;
  std::optional<int> t;
  int r = 1;
  int i = 1;
  std::string ideal;
  int target = 0;
  std::size_t budget = kDefaultCollapseBudget;
  std::uint64_t screen = 0;
  std::string out;
  bool embed = false;
};

SimplicialComplex input_complex(const Options& o) {
  if (!o.fixture.empty()) return builtin_fixture(o.fixture);
  if (o.complex_path.empty()) throw InputError("--complex or --fixture is required");
  return load_complex(o.complex_path);
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ParseError(std::string("cannot read ") + what + " from '" + text + "'");
    }
  }
  if (out.empty()) throw ParseError(std::string("empty ") + what + " list");
  return out;
}

std::vector<int> caps_for(const Options& o, const SimplicialComplex& c) {
  if (o.caps.empty()) throw InputError("--caps is required");
  auto caps = parse_int_list(o.caps, "caps");
  if (caps.size() == 1) caps.assign(c.num_vertices(), caps.front());
  return caps;
}

Json screen_ranks(const Options& o, const std::vector<const ExactMatrix*>& matrices) {
  Json ranks = Json::array();
  for (const auto* m : matrices) ranks.push_back(rank_mod_p(*m, o.screen));
  return Json{{"prime", o.screen}, {"ranks", ranks}};
}

Json cmd_info(const Options& o) {
  const auto c = input_complex(o);
  Json j;
  j["complex"] = complex_to_json(c);
  j["dimension"] = c.dimension();
  j["fh"] = fh_to_json(fh_profile(c));
  j["homology"] = homology_to_json(homology(c));
  const auto cm = is_cohen_macaulay(c);
  j["cohen_macaulay"] = {{"holds", cm.holds},
                         {"witness_face", cm.witness_face ? Json(*cm.witness_face) : Json(nullptr)},
                         {"witness_degree", cm.holds ? Json(nullptr) : Json(cm.witness_degree)}};
  const auto pm = pseudomanifold_status(c);
  j["pseudomanifold"] = {{"pure", pm.pure},
                         {"strongly_connected", pm.strongly_connected},
                         {"max_ridge_degree", pm.max_ridge_degree},
                         {"is_pseudomanifold", pm.is_pseudomanifold()},
                         {"boundary", pm.boundary ? complex_to_json(*pm.boundary) : Json(nullptr)},
                         {"orientable", pm.orientable}};
  j["homology_sphere"] = is_homology_sphere(c);
  if (c.is_pure()) {
    const auto col = balanced_coloring(c);
    j["balanced"] = col.has_value();
    j["coloring"] = col ? coloring_to_json(*col) : Json(nullptr);
    const auto frg = facet_ridge_graph(c);
    j["facet_ridge_graph_bipartite"] = frg.bipartition.has_value();
  } else {
    j["balanced"] = nullptr;
  }
  j["stanley_reisner"] = polynomials_to_json(stanley_reisner_generators(c).generators);
  return j;
}

Json cmd_hf(const Options& o) {
  const auto c = input_complex(o);
  std::vector<Polynomial> extra;
  std::optional<ArtinianFrame> frame;
  if (!o.caps.empty()) {
    frame.emplace(c, caps_for(o, c));
    for (std::size_t i = 0; i < c.num_vertices(); ++i) {
      extra.emplace_back(Monomial::variable(i + 1, frame->caps()[i]));
    }
  }
  if (!o.forms.empty()) {
    for (auto& g : parse_polynomial_list(o.forms)) extra.push_back(std::move(g));
  }
  if (extra.empty()) throw InputError("hf needs --caps and/or --forms");
  const Quotient q(c, extra);
  std::vector<int> degrees;
  if (!o.degrees.empty()) {
    degrees = parse_int_list(o.degrees, "degrees");
  } else {
    const int top = frame && o.forms.empty() ? frame->socle_degree() + 1 : artinian_degree_bound(c, extra);
    for (int k = 0; k <= top; ++k) degrees.push_back(k);
  }
  Json values = Json::array();
  for (int k : degrees) values.push_back(q.hilbert(k));
  return Json{{"degrees", degrees}, {"values", values}};
}

Json cmd_wlp(const Options& o) {
  const auto c = input_complex(o);
  const ArtinianFrame a(c, caps_for(o, c));
  const auto rep = wlp_check(a, o.embed || o.screen != 0);
  Json j = wlp_to_json(rep);
  if (o.screen != 0) {
    std::vector<const ExactMatrix*> ms;
    for (const auto& m : rep.per_degree) ms.push_back(&*m.matrix);
    j["screen"] = screen_ranks(o, ms);
    if (!o.embed) {
      for (auto& e : j["per_degree"]) e.erase("matrix");
    }
  }
  return j;
}

Json cmd_slp(const Options& o) {
  const auto c = input_complex(o);
  const ArtinianFrame a(c, caps_for(o, c));
  return slp_to_json(slp_check(a, o.embed));
}

Json cmd_kernel(const Options& o) {
  const auto c = input_complex(o);
  const ArtinianFrame a(c, caps_for(o, c));
  if (o.degree < 0) throw InputError("--degree is required");
  const auto piece = kernel_transpose_basis(a, o.degree);
  Json j;
  j["degree"] = piece.degree;
  j["dimension"] = piece.basis.size();
  j["basis"] = polynomials_to_json(piece.basis);
  const int amax = *std::max_element(a.caps().begin(), a.caps().end());
  Json div = Json::array();
  for (const auto& g : piece.basis) {
    if (!divergence_bound_check(divided_power_to_derivative(g), amax, a.num_vars())) {
      throw FalsificationError("divergence bound fails for a kernel element of degree " +
                               std::to_string(piece.degree));
    }
    div.push_back(true);
  }
  j["divergence_bound"] = div;
  if (o.embed || o.screen != 0) {
    const auto m = multiplication_matrix(a, sum_of_variables(a.num_vars()), o.degree - 1);
    if (o.embed) j["matrix"] = matrix_to_json(m);
    if (o.screen != 0) j["screen"] = screen_ranks(o, {&m});
  }
  return j;
}

Json cmd_hesd(const Options& o) {
  return hesd_to_json(hesd(input_complex(o), o.r));
}

Json cmd_incidence(const Options& o) {
  return incidence_to_json(incidence_complex(input_complex(o), o.i));
}

Json cmd_spread(const Options& o) {
  IdealPresentation ideal;
  if (!o.ideal.empty()) {
    ideal.generators = parse_polynomial_list(o.ideal);
    for (const auto& g : ideal.generators) ideal.ambient_vars = std::max(ideal.ambient_vars, g.max_variable());
  } else {
    ideal = facet_ideal(input_complex(o));
  }
  const auto lm = log_matrix(ideal);
  Json j;
  j["generators"] = polynomials_to_json(ideal.generators);
  j["analytic_spread"] = analytic_spread(ideal);
  j["maximal"] = j["analytic_spread"].get<std::size_t>() == ideal.generators.size();
  if (o.embed) j["log_matrix"] = matrix_to_json(lm.matrix);
  if (o.screen != 0) j["screen"] = screen_ranks(o, {&lm.matrix});
  return j;
}

Json cmd_collapse(const Options& o) {
  const auto c = input_complex(o);
  const auto cert = collapse_search(c, o.target, o.budget);
  Json j;
  j["found"] = cert.has_value();
  if (cert) {
    j["certificate"] = collapse_to_json(*cert);
    j["replay_valid"] = replay_collapse(c, *cert);
  }
  return j;
}

Json cmd_colored_sop(const Options& o) {
  const auto c = input_complex(o);
  const auto rho = balanced_coloring(c);
  if (!rho) throw HypothesisError("complex is not balanced");
  const auto sop = colored_sop(c, *rho);
  const auto verdict = is_sop(c, sop);
  Json j;
  j["coloring"] = coloring_to_json(*rho);
  j["sop"] = sop_to_json(sop);
  j["is_sop"] = verdict.is_sop;
  j["vanishing_degree"] = verdict.vanishing_degree ? Json(*verdict.vanishing_degree) : Json(nullptr);
  j["quotient_hilbert"] = verdict.hilbert;
  return j;
}

Json cmd_dual_gen(const Options& o) {
  const auto c = input_complex(o);
  if (!c.is_pure()) throw HypothesisError("complex is not pure");
  const auto rho = balanced_coloring(c);
  if (!rho) throw HypothesisError("complex is not balanced");
  const auto f = colored_dual_generator(c, *rho);
  return Json{{"coloring", coloring_to_json(*rho)}, {"dual_generator", f.to_string()},
              {"degree", f.degree()}};
}

Json cmd_sop_verify(const Options& o) {
  const auto c = input_complex(o);
  if (o.sop.empty()) throw InputError("--sop is required");
  if (!o.t) throw InputError("--t is required");
  const auto cand = make_sop_candidate(parse_polynomial_list(o.sop), *o.t);
  const Polynomial f = o.f.empty() ? sum_of_variables(c.num_vertices()) : Polynomial::parse(o.f);
  const auto rep = verify_unexpected(c, cand, f, caps_for(o, c), *o.t);
  Json j = unexpected_to_json(rep);
  j["sop"] = sop_to_json(cand);
  j["f"] = f.to_string();
  return j;
}

void emit_error(std::ostream& err, std::string_view kind, const std::string& message, int code) {
  Json e;
  e["error"] = kind;
  e["message"] = message;
  e["exit_code"] = code;
  err << e.dump() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Stanley-Reisner and Lefschetz toolkit"};
  app.require_subcommand(1);
  Options o;

  auto add_complex = [&](CLI::App* s) {
    s->add_option("--complex", o.complex_path, "Complex JSON file");
    s->add_option("--fixture", o.fixture, "Built-in fixture name (OCT, CROSS4, ...)");
    s->add_option("--out", o.out, "Write the JSON report here instead of stdout");
    s->add_flag("--embed-matrices", o.embed, "Embed matrices in triplet form");
  };
  auto add_screen = [&](CLI::App* s) {
    s->add_option("--screen,--prime", o.screen, "Also report ranks modulo this prime");
  };

  std::map<std::string, std::function<Json(const Options&)>> commands = {
      {"info", cmd_info},         {"hf", cmd_hf},
      {"wlp", cmd_wlp},           {"slp", cmd_slp},
      {"kernel", cmd_kernel},     {"hesd", cmd_hesd},
      {"incidence", cmd_incidence}, {"spread", cmd_spread},
      {"collapse", cmd_collapse}, {"colored-sop", cmd_colored_sop},
      {"dual-gen", cmd_dual_gen}, {"sop-verify", cmd_sop_verify},
  };

  auto* info = app.add_subcommand("info", "f/h-vectors, homology and topological predicates");
  add_complex(info);
  auto* hf = app.add_subcommand("hf", "Hilbert function of A(a) or of a quotient by forms");
  add_complex(hf);
  hf->add_option("--caps", o.caps, "Exponent cap a or a1,...,an");
  hf->add_option("--degrees", o.degrees, "Comma-separated degrees");
  hf->add_option("--forms", o.forms, "Extra forms, semicolon-separated");
  auto* wlp = app.add_subcommand("wlp", "Weak Lefschetz check for L = sum of variables");
  add_complex(wlp);
  add_screen(wlp);
  wlp->add_option("--caps", o.caps, "Exponent cap a or a1,...,an");
  auto* slp = app.add_subcommand("slp", "Strong Lefschetz check");
  add_complex(slp);
  slp->add_option("--caps", o.caps, "Exponent cap a or a1,...,an");
  auto* kernel = app.add_subcommand("kernel", "Kernel of the transpose of xL into a degree");
  add_complex(kernel);
  add_screen(kernel);
  kernel->add_option("--caps", o.caps, "Exponent cap a or a1,...,an");
  kernel->add_option("--degree", o.degree, "Degree k of ker(xL^T : A_k -> A_{k-1})");
  auto* hesd_cmd = app.add_subcommand("hesd", "Half-hollow edgewise subdivision");
  add_complex(hesd_cmd);
  hesd_cmd->add_option("--r", o.r, "Subdivision parameter r >= 1");
  auto* inc = app.add_subcommand("incidence", "Incidence complex");
  add_complex(inc);
  inc->add_option("--i", o.i, "Index i");
  auto* spread = app.add_subcommand("spread", "Analytic spread via the log matrix");
  add_complex(spread);
  add_screen(spread);
  spread->add_option("--ideal", o.ideal, "Monomial generators, semicolon-separated");
  auto* collapse = app.add_subcommand("collapse", "Search for a collapse certificate");
  add_complex(collapse);
  collapse->add_option("--target", o.target, "Stop at this dimension");
  collapse->add_option("--budget", o.budget, "Step budget");
  auto* csop = app.add_subcommand("colored-sop", "Colored system of parameters");
  add_complex(csop);
  auto* dual = app.add_subcommand("dual-gen", "Macaulay dual generator of the colored sop");
  add_complex(dual);
  auto* verify = app.add_subcommand("sop-verify", "Unexpectedness report (U1)-(U5)");
  add_complex(verify);
  verify->add_option("--sop", o.sop, "Forms, semicolon-separated");
  verify->add_option("--f", o.f, "Polynomial f (default: sum of variables)");
  verify->add_option("--caps", o.caps, "Exponent cap a or a1,...,an");
  verify->add_option("--t", o.t, "Total degree t");

  std::vector<std::string> argv_storage{"facering"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    emit_error(err, "ParseError", e.what(), 2);
    return 2;
  }

  try {
    const auto* chosen = app.get_subcommands().front();
    const Json report = commands.at(chosen->get_name())(o);
    const std::string text = report.dump(2) + "\n";
    if (!o.out.empty()) {
      std::ofstream file(o.out, std::ios::binary);
      if (!file) throw InputError("cannot write '" + o.out + "'");
      file << text;
    } else {
      out << text;
    }
    return 0;
  } catch (const Error& e) {
    const int code = exit_code_for(e.kind());
    emit_error(err, kind_name(e.kind()), e.what(), code);
    return code;
  } catch (const std::exception& e) {
    emit_error(err, "InternalError", e.what(), 1);
    return 1;
  }
}

}  // namespace facering::cli
