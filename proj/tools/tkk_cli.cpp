#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "tkk/functor.hpp"
#include "tkk/lie_order.hpp"

namespace {

enum class LogLevel { quiet, info, debug };

LogLevel log_level() {
  const char* env = std::getenv("TKK_LOG");
  if (!env) return LogLevel::info;
  const std::string v(env);
  if (v == "quiet") return LogLevel::quiet;
  if (v == "debug") return LogLevel::debug;
  return LogLevel::info;
}

void log_info(const std::string& msg) {
  if (log_level() != LogLevel::quiet) std::cerr << msg << "\n";
}

nlohmann::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  nlohmann::json j;
  in >> j;
  return j;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << text;
}

void write_report(const std::string& path, const tkk::Report& rep) {
  if (path.empty()) return;
  write_text(path, tkk::report_to_json(rep).dump(2) + "\n");
}

struct VerifyOptions {
  std::string space_path;
  std::string suites = "jordan,tkk";
  int samples = 200;
  std::uint64_t seed = 1;
  double tol = 1e-9;
  std::string report_path;
};

tkk::Report run_jordan_suite(const tkk::TripleSpace& s, int samples, std::uint64_t seed,
                             const tkk::Tolerance& tol) {
  tkk::Rng rng(seed);
  tkk::Report rep;

  double jordan_res = 0;
  for (int i = 0; i < samples; ++i)
    jordan_res = std::max(
        jordan_res, tkk::jordan_identity_residual(s, tkk::random_element(s, rng),
                                                  tkk::random_element(s, rng),
                                                  tkk::random_element(s, rng),
                                                  tkk::random_element(s, rng),
                                                  tkk::random_element(s, rng)));
  rep.add("jordan_identity", "five-term Jordan triple identity", samples, jordan_res,
          jordan_res <= tol.algebraic * 1000);

  double norm_res = 0, spec_res = 0, herm_res = 0;
  for (int i = 0; i < samples; ++i) {
    const tkk::CVector a = tkk::random_element(s, rng);
    const tkk::CMatrix b = tkk::box(s, a, a).op;
    const double na = s.norm(a);
    const tkk::RMatrix gr = tkk::RVector(s.gram().cwiseSqrt()).asDiagonal();
    const tkk::CMatrix g = gr.cast<tkk::Complex>();
    const tkk::CMatrix sym = g * b * g.inverse();  // hermitian w.r.t. the weighted form
    herm_res = std::max(herm_res, (sym - sym.adjoint()).norm());
    Eigen::SelfAdjointEigenSolver<tkk::CMatrix> es(0.5 * (sym + sym.adjoint()));
    // a box a is hermitian, so its operator norm is its spectral radius
    norm_res = std::max(norm_res, std::abs(es.eigenvalues().cwiseAbs().maxCoeff() - na * na));
    spec_res = std::max(spec_res, std::max(0.0, -es.eigenvalues().minCoeff()));
  }
  rep.add("box_norm", "|a box a| = |a|^2", samples, norm_res, norm_res <= tol.normative * 100);
  rep.add("box_hermitian", "a box a is hermitian", samples, herm_res,
          herm_res <= tol.algebraic * 1000);
  rep.add("box_spectrum", "a box a has nonnegative spectrum", samples, spec_res,
          spec_res <= tol.algebraic * 1000);

  long peirce_fail = 0;
  const int trip_samples = std::max(8, samples / 16);
  for (int i = 0; i < trip_samples; ++i) {
    const tkk::CVector e =
        tkk::random_tripotent(s, rng.uniform_int(0, s.max_rank()), rng, tol);
    const auto pd = tkk::peirce(s, e, tol);
    const tkk::RealLinearOp sum3 = tkk::RealLinearOp(
        s.complex_dim(), s.complex_dim(),
        pd.p2.real_matrix + pd.p1.real_matrix + pd.p0.real_matrix, tkk::OpKind::complex_linear);
    if (!tkk::op_equal(sum3, tkk::RealLinearOp::identity(s.complex_dim()), tol)) ++peirce_fail;
  }
  rep.add("peirce_resolution", "P2 + P1 + P0 = id for sampled tripotents", trip_samples,
          static_cast<double>(peirce_fail), peirce_fail == 0);
  return rep;
}

tkk::Report run_tkk_suite(const tkk::TKKAlgebra& alg, int samples, std::uint64_t seed,
                          const tkk::Tolerance& tol) {
  tkk::Report rep = tkk::structural_checks(alg, samples, seed, tol);
  tkk::Rng rng(seed + 1);

  double jac = 0;
  for (int i = 0; i < samples; ++i)
    jac = std::max(jac, tkk::jacobi_residual(tkk::random_tkk_element(alg, rng),
                                             tkk::random_tkk_element(alg, rng),
                                             tkk::random_tkk_element(alg, rng)));
  rep.add("jacobi", "Jacobi identity", samples, jac, jac <= tol.algebraic * 1000);

  double cond_a = 0, cond_c = 0;
  const int units = std::max(8, samples / 16);
  for (int i = 0; i < units; ++i) {
    const tkk::CVector a = tkk::random_unit(alg.base(), rng);
    cond_a = std::max(cond_a, tkk::condition_a_residual(alg, a));
    cond_c = std::max(cond_c, tkk::condition_c_singularity(alg, a));
  }
  rep.add("unit_cube_norm", "|[[a, theta a], a]| = 1 for unit a", units, cond_a,
          cond_a <= tol.normative * 100);
  rep.add("unit_singularity", "I - ad[a, theta a] singular on degree -1", units, cond_c,
          cond_c <= tol.normative);
  return rep;
}

tkk::Report run_functor_suite(const tkk::TKKAlgebra& alg, int samples, std::uint64_t seed,
                              const tkk::Tolerance& tol) {
  tkk::Report rep;
  const tkk::TripleSpace& s = alg.base();

  tkk::TripleMap id = tkk::triple_map_identity(s);
  tkk::TripleMap scalar = tkk::triple_map_scalar(s, tkk::Complex(0, 1));
  tkk::TripleMap conj = tkk::triple_map_conjugation(s);
  rep.merge(tkk::verify_triple_map(id, samples, seed, tol));
  rep.merge(tkk::verify_triple_map(scalar, samples, seed + 1, tol));
  rep.merge(tkk::verify_triple_map(conj, samples, seed + 2, tol));

  rep.merge(tkk::functor_laws(scalar, id, alg, alg, alg, tol));

  tkk::GradedMap t = tkk::f_morphism(scalar, alg, alg);
  rep.merge(tkk::verify_graded_iso(t, samples, seed + 3, tol));
  const double iso = tkk::isometry_residual(t, samples, seed + 4);
  rep.add("isometry", "|T z| = |z| for T = F(phi)", samples, iso, iso <= tol.normative * 100);

  bool recovered = true;
  try {
    (void)tkk::recover_triple_map(t, tol);
  } catch (const std::exception&) {
    recovered = false;
  }
  rep.add("recover", "T = F(phi) for phi = T restricted to degree -1", 1, recovered ? 0.0 : 1.0,
          recovered);

  tkk::GradedMap tc = tkk::f_morphism(conj, alg, alg);
  rep.merge(tkk::verify_graded_iso(tc, samples, seed + 5, tol));
  rep.merge(tkk::conjugate_variant_check(tc, samples, seed + 6, tol));
  return rep;
}

tkk::Report run_lie_suite(const tkk::TKKAlgebra& alg, int samples, std::uint64_t seed,
                          const tkk::Tolerance& tol) {
  tkk::Report rep = tkk::cross_check(alg.base(), samples, seed, tol);
  rep.merge(tkk::lemma_suite(alg, std::max(4, samples / 2), seed + 1, tol));
  return rep;
}

tkk::Report run_atomic_suite(const tkk::TKKAlgebra& alg, int samples, std::uint64_t seed,
                             const tkk::Tolerance& tol) {
  if (!alg.base().all_parts_rank_ge2())
    throw std::invalid_argument("atomic suite: every summand must have rank >= 2");
  tkk::Report rep;
  tkk::TripleMap phi = tkk::triple_map_conjugation(alg.base());
  rep.merge(tkk::verify_triple_map(phi, samples, seed, tol));
  (void)tkk::extend_order_iso(phi, alg, alg, &rep, tol);
  (void)tkk::negatively_graded_extend(phi, alg, alg, &rep, tol);
  return rep;
}

int cmd_verify(const VerifyOptions& opt) {
  tkk::Tolerance tol;
  tol.algebraic = opt.tol;
  tol.normative = std::max(opt.tol, 1e-6);
  tol.validate();

  const tkk::TripleSpace space = tkk::TripleSpace::make(tkk::descriptor_from_json(load_json(opt.space_path)));
  std::optional<tkk::TKKAlgebra> alg;

  tkk::Report rep;
  std::stringstream suites(opt.suites);
  std::string suite;
  bool any = false;
  while (std::getline(suites, suite, ',')) {
    if (suite.empty()) continue;
    any = true;
    log_info("running suite: " + suite);
    if (suite == "jordan") {
      rep.merge(run_jordan_suite(space, opt.samples, opt.seed, tol));
      continue;
    }
    if (!alg) alg.emplace(space);
    if (suite == "tkk")
      rep.merge(run_tkk_suite(*alg, opt.samples, opt.seed + 101, tol));
    else if (suite == "functor")
      rep.merge(run_functor_suite(*alg, opt.samples, opt.seed + 202, tol));
    else if (suite == "lie")
      rep.merge(run_lie_suite(*alg, std::max(8, opt.samples / 4), opt.seed + 303, tol));
    else if (suite == "atomic")
      rep.merge(run_atomic_suite(*alg, opt.samples, opt.seed + 404, tol));
    else
      throw std::invalid_argument("unknown suite: " + suite);
  }
  if (!any) throw std::invalid_argument("no suites selected");

  write_report(opt.report_path, rep);
  log_info(rep.overall_pass() ? "overall: pass" : "overall: fail");
  return rep.overall_pass() ? 0 : 1;
}

int cmd_poset(const std::string& space_path, const std::string& tripotents_path,
              const std::string& out_path) {
  const tkk::TripleSpace space =
      tkk::TripleSpace::make(tkk::descriptor_from_json(load_json(space_path)));
  const tkk::TKKAlgebra alg(space);

  const nlohmann::json list = load_json(tripotents_path);
  std::vector<tkk::TKKElement> tripotents;
  for (const auto& j : list) tripotents.push_back(tkk::tkk_element_from_json(alg, j));

  for (std::size_t i = 0; i < tripotents.size(); ++i) {
    if (!tkk::is_strict(alg, tripotents[i], tkk::Tolerance{}).is_strict) {
      std::cerr << "input " << i << " is not a strict tripotent\n";
      return 1;
    }
  }
  const tkk::HasseDiagram h = tkk::build_poset(alg, tripotents);
  write_text(out_path, tkk::hasse_to_dot(h));
  log_info("poset: " + std::to_string(h.nodes) + " nodes, " + std::to_string(h.edges.size()) +
           " covering edges");
  return 0;
}

int cmd_transport(const std::string& phi_path, int samples, std::uint64_t seed, double tol_value,
                  const std::string& report_path) {
  tkk::Tolerance tol;
  tol.algebraic = tol_value;
  tol.normative = std::max(tol_value, 1e-6);
  tol.validate();

  const nlohmann::json j = load_json(phi_path);
  const auto domain = std::make_shared<tkk::TripleSpace>(
      tkk::TripleSpace::make(tkk::descriptor_from_json(j.at("domain"))));
  const auto codomain = std::make_shared<tkk::TripleSpace>(
      tkk::TripleSpace::make(tkk::descriptor_from_json(j.at("codomain"))));
  tkk::TripleMap phi = tkk::triple_map_from_json(j, *domain, *codomain);

  tkk::Report rep = tkk::verify_triple_map(phi, samples, seed, tol);
  if (phi.verified) {
    const tkk::TKKAlgebra alg_v(*domain), alg_w(*codomain);
    tkk::GradedMap t = tkk::f_morphism(phi, alg_v, alg_w);
    rep.merge(tkk::verify_graded_iso(t, samples, seed + 1, tol));
    const double iso = tkk::isometry_residual(t, samples, seed + 2);
    rep.add("isometry", "|T z| = |z| on transported samples", samples, iso,
            iso <= tol.normative * 100);
    bool recovered = true;
    double rec_res = 0;
    try {
      (void)tkk::recover_triple_map(t, tol);
    } catch (const std::exception&) {
      recovered = false;
      rec_res = 1;
    }
    rep.add("recover", "reconstruction through the functor", 1, rec_res, recovered);
    if (domain->same_shape(*codomain)) {
      tkk::TripleMap inv = tkk::inverse_triple_map(phi);
      rep.merge(tkk::verify_triple_map(inv, samples, seed + 3, tol));
      if (inv.verified) rep.merge(tkk::functor_laws(phi, inv, alg_v, alg_w, alg_v, tol));
    }
  }
  write_report(report_path, rep);
  log_info(rep.overall_pass() ? "overall: pass" : "overall: fail");
  return rep.overall_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification front end for JB*-triples and their TKK Lie algebras"};
  app.require_subcommand(1);

  VerifyOptions vopt;
  auto* verify = app.add_subcommand("verify", "run verification suites on a space");
  verify->add_option("--space", vopt.space_path, "space descriptor JSON")->required();
  verify->add_option("--suites", vopt.suites, "comma list of jordan,tkk,functor,lie,atomic");
  verify->add_option("--samples", vopt.samples, "sample count")->check(CLI::PositiveNumber);
  verify->add_option("--seed", vopt.seed, "random seed");
  verify->add_option("--tol", vopt.tol, "algebraic tolerance");
  verify->add_option("--report", vopt.report_path, "report JSON output path");

  std::string poset_space, poset_tripotents, poset_out;
  auto* poset = app.add_subcommand("poset", "build a Hasse diagram of strict tripotents");
  poset->add_option("--space", poset_space, "space descriptor JSON")->required();
  poset->add_option("--tripotents", poset_tripotents, "tripotent list JSON")->required();
  poset->add_option("--out", poset_out, "DOT output path")->required();

  std::string phi_path, transport_report;
  int transport_samples = 200;
  std::uint64_t transport_seed = 1;
  double transport_tol = 1e-9;
  auto* transport = app.add_subcommand("transport", "verify a morphism and its functor image");
  transport->add_option("--phi", phi_path, "morphism JSON")->required();
  transport->add_option("--samples", transport_samples, "sample count")->check(CLI::PositiveNumber);
  transport->add_option("--seed", transport_seed, "random seed");
  transport->add_option("--tol", transport_tol, "algebraic tolerance");
  transport->add_option("--report", transport_report, "report JSON output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (verify->parsed()) return cmd_verify(vopt);
    if (poset->parsed())
      return cmd_poset(poset_space, poset_tripotents, poset_out);
    return cmd_transport(phi_path, transport_samples, transport_seed, transport_tol,
                         transport_report);
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
