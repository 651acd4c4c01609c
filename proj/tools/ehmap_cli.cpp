// Command-line front end: runs the verification suites of the library and
// writes machine-readable reports (JSON) plus geometry sample tables (CSV).
//
// Subcommands:
//   decompose   span/dimension bookkeeping for one parameter pair
//   verify      build a seeded deformation and verify its induced map
//   correspond  exercise the level-shift between parameter pairs
//   gauss       verify the quartic immersion's tangent-plane geometry
//
// Exit code 0 iff every check in the written report passed.

#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ehm/contraction.hpp"
#include "ehm/exact.hpp"
#include "ehm/gauss.hpp"
#include "ehm/geometry.hpp"
#include "ehm/moduli.hpp"
#include "ehm/report.hpp"
#include "ehm/rng.hpp"
#include "ehm/spans.hpp"
#include "ehm/sym_endo.hpp"
#include "ehm/tensor.hpp"

namespace {

using ehm::cd;
using nlohmann::json;

constexpr double kPi = 3.14159265358979323846;

// Closed-form energy of the undeformed map at parameters (k, l).
double standard_energy(int k, int l) {
  const int ak = std::abs(k);
  return 4.0 * kPi * (2.0 * l * (ak + l + 1) + ak);
}

std::vector<ehm::GeomSample> collect_samples(const ehm::FrameField& f,
                                             const std::vector<cd>& pts) {
  std::vector<ehm::GeomSample> out;
  out.reserve(pts.size());
  for (const cd z : pts) out.push_back(ehm::geom_sample(f, z));
  return out;
}

void print_report(const ehm::Report& rep) {
  for (const ehm::CheckRecord& c : rep.checks())
    std::printf("%-28s measured=% .6e expected=% .6e tol=%.1e  %s\n",
                c.name.c_str(), c.measured, c.expected, c.tolerance,
                c.pass ? "pass" : "FAIL");
  std::printf("overall: %s\n", rep.overall() ? "pass" : "FAIL");
}

int finish(ehm::Report& rep, const ehm::RunConfig& cfg, const std::string& cmd) {
  rep.write(cfg.resolved_out_dir() + "/" + cmd + "_report.json");
  print_report(rep);
  return rep.overall() ? 0 : 1;
}

int cmd_decompose(const ehm::RunConfig& cfg) {
  ehm::Report rep("decompose", cfg);
  const int n = std::abs(cfg.k) + 2 * cfg.l;
  const int N = n + 1;

  int rank_sum = 0;
  bool ranks_ok = true;
  for (int m : ehm::isotypic_labels(n)) {
    const int rk = ehm::isotypic_rank(n, m);
    ranks_ok = ranks_ok && rk == m + 1;
    rank_sum += rk;
  }
  rep.add_check("isotypic_rank_sum", rank_sum, N * N, 0.0);
  rep.add_flag("isotypic_rank_each", ranks_ok);

  rep.add_check("anti_commuting_dim",
                static_cast<double>(ehm::antiJ_sym_basis(N).size()),
                static_cast<double>(N) * (N + 1), 0.0);

  ehm::SpanAccum all(2 * N * (2 * N + 1) / 2);
  for (int i = 0; i < 2 * N; ++i)
    for (int j = i; j < 2 * N; ++j) {
      Eigen::MatrixXd E = Eigen::MatrixXd::Zero(2 * N, 2 * N);
      E(i, j) = E(j, i) = 1.0;
      all.add(ehm::sym_pack(E));
    }
  rep.add_check("commuting_span_dim",
                ehm::j_commuting_span_dim(all.basis(), N),
                static_cast<double>(N) * N, 0.0);

  const ehm::AmbientResult amb = ehm::moduli_ambient(cfg.k, cfg.l, cfg.seed);
  rep.add_check("ambient_dim", amb.basis.dim(),
                ehm::moduli_ambient_expected_dim(cfg.k, cfg.l), 0.0);
  if (amb.dim_orbit_route >= 0) {
    rep.add_check("ambient_dim_orbit", amb.dim_orbit_route, amb.basis.dim(), 0.0);
    rep.add_check("ambient_route_distance", amb.route_distance, 0.0, 1e-8);
    rep.add_flag("ambient_routes_agree", amb.routes_agree);
  }

  if (cfg.k != 0) {
    const ehm::GsSpanResult pairs =
        ehm::gs_span(cfg.k, cfg.l, ehm::OrbitKind::V0V0, cfg.seed);
    const ehm::GsSpanResult moved =
        ehm::gs_span(cfg.k, cfg.l, ehm::OrbitKind::mV0V0, cfg.seed);
    rep.add_check("span_pairs_dim", pairs.basis.dim(), pairs.basis.dim(), 0.0);
    rep.add_check("span_moved_dim", moved.basis.dim(), moved.basis.dim(), 0.0);
    rep.add_flag("span_pairs_stabilized", pairs.stabilized);
    rep.add_flag("span_moved_stabilized", moved.stabilized);
  }

  if (cfg.backend == "exact") {
    bool kernel_ok = true;
    for (int level = 1; level <= 6; ++level)
      kernel_ok =
          kernel_ok && ehm::exact::contraction_kernel_dim(level) == 2 * level + 1;
    rep.add_flag("exact_kernel_dims", kernel_ok);
    bool closed_ok = true;
    ehm::Rng rng(cfg.seed);
    for (int trial = 0; trial < 10; ++trial) {
      const int nn = 1 + static_cast<int>(rng.next_u64() % 6);
      const int p = static_cast<int>(rng.next_u64() % (nn + 1));
      const int q = static_cast<int>(rng.next_u64() % (nn + 1));
      const int r = static_cast<int>(rng.next_u64() % (nn / 2 + 1));
      closed_ok =
          closed_ok &&
          ehm::exact::equal(ehm::exact::contract_power_iterated(
                                ehm::exact::symmetrized_monomial(nn, p, q), r),
                            ehm::exact::contract_power_closed(nn, p, q, r));
    }
    rep.add_flag("exact_closed_form", closed_ok);
  }

  return finish(rep, cfg, "decompose");
}

int cmd_verify(const ehm::RunConfig& cfg) {
  if (cfg.k == 0)
    throw CLI::ValidationError("verify", "--k must be nonzero");
  ehm::Report rep("verify", cfg);
  const int n = std::abs(cfg.k) + 2 * cfg.l;
  const int N = n + 1;

  ehm::Rng rng(cfg.seed);
  ehm::SymEndo D = ehm::sym_endo_zero(n);
  if (cfg.norm > 0.0) D = ehm::random_deformation(cfg.k, cfg.l, cfg.norm, rng);
  const ehm::ModuliPoint pt{cfg.k, cfg.l, D};

  if (cfg.norm < 1.0) {
    const ehm::ValidationReport val = ehm::validate(pt);
    rep.add_flag("valid_point", val.ok());
    rep.add_check("operator_norm", val.op_norm, cfg.norm, 1e-12);
    rep.add_check("ambient_residual", val.ambient_residual, 0.0, 1e-8);

    const ehm::ProjectorField field = ehm::ProjectorField::deformed(pt);
    const std::vector<cd> grid = ehm::default_grid(cfg.grid);
    const ehm::EhReport eh = ehm::eh_verify(field, grid);
    const double e_exact = standard_energy(cfg.k, cfg.l);
    const int m_int = 2 * cfg.l * (std::abs(cfg.k) + cfg.l + 1) + std::abs(cfg.k);
    rep.add_check("eh_operator_dev", eh.max_A_dev_rel, 0.0, 1e-6);
    rep.add_check("energy_density", eh.e_mean, e_exact, 1e-6 * e_exact);
    rep.add_check("energy_spread", eh.e_spread_rel, 0.0, 1e-6);
    rep.add_check("angle_mean", eh.cos_mean,
                  static_cast<double>(cfg.k) / m_int, 1e-6);
    rep.add_check("angle_spread", eh.cos_std, 0.0, 1e-6);
    rep.add_check("conformal_defect", eh.max_conformal_defect, 0.0, 1e-6);
    rep.add_check("degree", ehm::degree_estimate(field), cfg.k, 1e-2);

    // Single-point calibration of the eigenvalue ratio against the base map.
    const double mu_base =
        0.5 * ehm::geom_sample(ehm::ProjectorField::standard(1, 0), cd(0.31, 0.12)).e;
    const double mu_here = 0.5 * eh.e_mean;
    rep.add_check("eigenvalue_ratio", mu_here / mu_base, m_int, 1e-3 * m_int);

    ehm::write_csv(cfg.resolved_out_dir() + "/verify_samples.csv",
                   collect_samples(field, grid));
  } else {
    // Boundary run: the deformation is rescaled to operator norm one, where
    // id + D acquires a kernel and the induced map factors through a smaller
    // quadric.
    ehm::SymEndo B = D;
    if (cfg.norm > 1.0) B.M *= 1.0 / cfg.norm;
    const ehm::ModuliPoint bpt{cfg.k, cfg.l, B};
    const ehm::BoundaryReport br = ehm::boundary_analysis(bpt, std::min(cfg.grid, 40));
    rep.add_check("kernel_dim", br.dim_ker_T, br.dim_ker_T,
                  0.0);  // reported value
    rep.add_flag("kernel_nontrivial", br.dim_ker_T >= 1);
    rep.add_check("reduced_parameter", br.p, 2 * N - 2 - br.dim_ker_T, 0.0);
    rep.add_flag("reduced_parameter_bound", br.p < 2 * n);
    rep.add_check("fiber_kernel_overlap", br.max_fiber_overlap, 0.0, 1e-8);
    rep.add_flag("fibers_clear_kernel", br.fibers_clear_kernel);
    rep.add_flag("frame_full_rank", br.frame_full_rank);

    const ehm::ProjectorField field = ehm::ProjectorField::deformed(bpt);
    ehm::write_csv(cfg.resolved_out_dir() + "/verify_samples.csv",
                   collect_samples(field, ehm::default_grid(cfg.grid)));
  }

  return finish(rep, cfg, "verify");
}

int cmd_correspond(const ehm::RunConfig& cfg) {
  if (cfg.l < 1)
    throw CLI::ValidationError("correspond", "--l must be at least 1");
  if (cfg.k == 0)
    throw CLI::ValidationError("correspond", "--k must be nonzero");
  if (!(cfg.norm > 0.0 && cfg.norm < 1.0))
    throw CLI::ValidationError("correspond", "--norm must lie in (0, 1)");
  ehm::Report rep("correspond", cfg);

  ehm::Rng rng(cfg.seed);
  const ehm::SymEndo D = ehm::random_deformation(cfg.k, cfg.l, cfg.norm, rng);
  const ehm::SymEndo down = ehm::correspond(D, cfg.k, cfg.l, true);
  const ehm::SymEndo up = ehm::correspond(down, cfg.k, cfg.l - 1, false);

  rep.add_check("roundtrip_residual", (up.M - D.M).norm() / D.M.norm(), 0.0, 1e-8);
  rep.add_check("norm_preserved", std::abs(ehm::op_norm(down) - ehm::op_norm(D)),
                0.0, 1e-12);
  rep.add_check("down_ambient_residual",
                ehm::ambient_residual(ehm::moduli_ambient_cached(cfg.k, cfg.l - 1), down),
                0.0, 1e-8);

  const std::vector<cd> grid = ehm::default_grid(cfg.grid);
  const ehm::ProjectorField f_src =
      ehm::ProjectorField::deformed({cfg.k, cfg.l, D});
  const ehm::ProjectorField f_down =
      ehm::ProjectorField::deformed({cfg.k, cfg.l - 1, down});
  const ehm::EhReport eh_src = ehm::eh_verify(f_src, grid);
  const ehm::EhReport eh_down = ehm::eh_verify(f_down, grid);
  rep.add_check("eh_operator_dev", eh_src.max_A_dev_rel, 0.0, 1e-6);
  rep.add_check("eh_operator_dev_down", eh_down.max_A_dev_rel, 0.0, 1e-6);
  const double e_src = standard_energy(cfg.k, cfg.l);
  const double e_down = standard_energy(cfg.k, cfg.l - 1);
  rep.add_check("energy_density", eh_src.e_mean, e_src, 1e-6 * e_src);
  rep.add_check("energy_density_down", eh_down.e_mean, e_down, 1e-6 * e_down);

  ehm::write_csv(cfg.resolved_out_dir() + "/correspond_samples.csv",
                 collect_samples(f_src, grid));
  ehm::write_csv(cfg.resolved_out_dir() + "/correspond_samples_down.csv",
                 collect_samples(f_down, grid));

  return finish(rep, cfg, "correspond");
}

int cmd_gauss(const ehm::RunConfig& cfg) {
  ehm::Report rep("gauss", cfg);

  double lambda_dev = 0.0, curv_dev = 0.0, normal_dev = 0.0;
  double prop_dev = 0.0, ident_dev = 0.0;
  for (const cd z : ehm::default_grid(10)) {
    const ehm::GaussSample gs = ehm::gauss_map_sample(z);
    const double pred = 12.0 / std::pow(1.0 + std::norm(z), 2);
    lambda_dev = std::max(lambda_dev, std::abs(gs.lambda - pred) / pred);
    curv_dev = std::max(curv_dev, std::abs(gs.K - 1.0 / 3.0));
    normal_dev = std::max(
        normal_dev, (gs.n_vec + 2.0 * ehm::veronese_jet(z).I).norm());
    prop_dev = std::max(prop_dev, gs.prop_id_dev);
    ident_dev = std::max(ident_dev, gs.identity_residual);
  }
  rep.add_check("metric_factor_dev", lambda_dev, 0.0, 1e-8);
  rep.add_check("curvature_dev", curv_dev, 0.0, 1e-4);
  rep.add_check("normal_vector_dev", normal_dev, 0.0, 1e-7);
  rep.add_check("proportional_identity", prop_dev, 0.0, 1e-6);
  rep.add_check("shape_identity", ident_dev, 0.0, 1e-6);

  const ehm::VeroneseTangentField vt;
  const std::vector<cd> grid = ehm::default_grid(cfg.grid);
  const ehm::EhReport eh = ehm::eh_verify(vt, grid);
  rep.add_check("tangent_energy", eh.e_mean, 40 * kPi, 1e-6 * 40 * kPi);
  rep.add_check("tangent_angle", eh.cos_mean, 0.2, 1e-6);
  rep.add_check("degree", ehm::degree_estimate(vt), 2.0, 1e-2);

  ehm::write_csv(cfg.resolved_out_dir() + "/gauss_samples.csv",
                 collect_samples(vt, grid));

  return finish(rep, cfg, "gauss");
}

struct FlagRefs {
  CLI::Option* k = nullptr;
  CLI::Option* l = nullptr;
  CLI::Option* seed = nullptr;
  CLI::Option* grid = nullptr;
  CLI::Option* norm = nullptr;
  CLI::Option* backend = nullptr;
  CLI::Option* out = nullptr;
  std::string config_path;
};

FlagRefs add_common_flags(CLI::App* sub, ehm::RunConfig& cfg) {
  FlagRefs refs;
  refs.k = sub->add_option("--k", cfg.k, "first integer parameter");
  refs.l = sub->add_option("--l", cfg.l, "second integer parameter (>= 0)")
               ->check(CLI::NonNegativeNumber);
  refs.seed = sub->add_option("--seed", cfg.seed, "random seed");
  refs.grid = sub->add_option("--grid", cfg.grid, "sample count (>= 8)")
                  ->check(CLI::Range(8, 100000));
  refs.norm = sub->add_option("--norm", cfg.norm, "deformation operator norm")
                  ->check(CLI::NonNegativeNumber);
  refs.backend = sub->add_option("--backend", cfg.backend, "float or exact")
                     ->check(CLI::IsMember({"float", "exact"}));
  refs.out = sub->add_option("--out", cfg.out_dir, "output directory");
  sub->add_option("--config", refs.config_path,
                  "JSON file with defaults (flags take precedence)")
      ->check(CLI::ExistingFile);
  return refs;
}

// Values from the config file apply only where no flag was passed.
void apply_config_file(const FlagRefs& refs, ehm::RunConfig& cfg) {
  if (refs.config_path.empty()) return;
  std::ifstream in(refs.config_path);
  json j;
  in >> j;
  if (!refs.k->count() && j.contains("k")) cfg.k = j["k"].get<int>();
  if (!refs.l->count() && j.contains("l")) cfg.l = j["l"].get<int>();
  if (!refs.seed->count() && j.contains("seed"))
    cfg.seed = j["seed"].get<std::uint64_t>();
  if (!refs.grid->count() && j.contains("grid")) cfg.grid = j["grid"].get<int>();
  if (!refs.norm->count() && j.contains("norm"))
    cfg.norm = j["norm"].get<double>();
  if (!refs.backend->count() && j.contains("backend"))
    cfg.backend = j["backend"].get<std::string>();
  if (!refs.out->count() && j.contains("out_dir"))
    cfg.out_dir = j["out_dir"].get<std::string>();
}

// Config-file values bypass the per-flag validators, so re-check here.
void validate_cfg(const ehm::RunConfig& cfg) {
  if (cfg.grid < 8) throw CLI::ValidationError("--grid", "must be at least 8");
  if (cfg.l < 0) throw CLI::ValidationError("--l", "must be non-negative");
  if (cfg.norm < 0.0) throw CLI::ValidationError("--norm", "must be non-negative");
  if (cfg.backend != "float" && cfg.backend != "exact")
    throw CLI::ValidationError("--backend", "must be float or exact");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"construct and verify equivariant projector fields"};
  app.require_subcommand(1);

  ehm::RunConfig cfg;
  CLI::App* dec = app.add_subcommand("decompose", "span and dimension bookkeeping");
  CLI::App* ver = app.add_subcommand("verify", "verify a seeded deformation");
  CLI::App* cor = app.add_subcommand("correspond", "exercise the level shift");
  CLI::App* gau = app.add_subcommand("gauss", "verify the quartic immersion");
  const FlagRefs rdec = add_common_flags(dec, cfg);
  const FlagRefs rver = add_common_flags(ver, cfg);
  const FlagRefs rcor = add_common_flags(cor, cfg);
  const FlagRefs rgau = add_common_flags(gau, cfg);

  CLI11_PARSE(app, argc, argv);

  try {
    if (dec->parsed()) {
      apply_config_file(rdec, cfg);
      validate_cfg(cfg);
      return cmd_decompose(cfg);
    }
    if (ver->parsed()) {
      apply_config_file(rver, cfg);
      validate_cfg(cfg);
      return cmd_verify(cfg);
    }
    if (cor->parsed()) {
      apply_config_file(rcor, cfg);
      validate_cfg(cfg);
      return cmd_correspond(cfg);
    }
    apply_config_file(rgau, cfg);
    validate_cfg(cfg);
    return cmd_gauss(cfg);
  } catch (const std::exception& err) {
    std::fprintf(stderr, "error: %s\n", err.what());
    return 2;
  }
}
