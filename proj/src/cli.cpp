#include "minemb/cli.hpp"

#include <cstdint>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "minemb/campaigns.hpp"
#include "minemb/closed_forms.hpp"
#include "minemb/report_io.hpp"

namespace minemb {

namespace {

constexpr const char* kToolVersion = "minemb 1.0.0";

std::string join_command(const std::vector<std::string>& args) {
  std::string s = "minemb";
  for (const std::string& a : args) {
    s += ' ';
    s += a;
  }
  return s;
}

struct OutputOptions {
  bool json = false;
  bool csv = false;
  std::string out_path;
  bool no_timestamp = false;
};

void add_output_flags(CLI::App* cmd, OutputOptions& opt) {
  CLI::Option* j = cmd->add_flag("--json", opt.json, "emit a JSON report");
  CLI::Option* c = cmd->add_flag("--csv", opt.csv, "emit a CSV report");
  j->excludes(c);
  c->excludes(j);
  cmd->add_option("--out", opt.out_path, "write the report to this path");
  cmd->add_flag("--no-timestamp", opt.no_timestamp,
                "omit the timestamp field for byte-reproducible output");
}

// Renders the envelope and returns the exit code derived from its status.
int emit_report(ReportEnvelope env, const OutputOptions& opt,
                const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  env.tool_version = kToolVersion;
  env.command = join_command(args);
  env.with_timestamp = !opt.no_timestamp;
  if (env.with_timestamp) env.timestamp = current_utc_timestamp();
  std::string text;
  if (opt.csv)
    text = to_csv(env);
  else if (opt.json)
    text = to_json(env);
  else
    text = to_text(env);
  if (!opt.out_path.empty()) {
    std::ofstream f(opt.out_path, std::ios::binary);
    if (!f) {
      err << "cannot open output path: " << opt.out_path << "\n";
      return 2;
    }
    f << text;
    f.flush();
    if (!f.good()) {
      err << "write failed: " << opt.out_path << "\n";
      return 2;
    }
  } else {
    out << text;
  }
  return env.status == "ok" ? 0 : 1;
}

ReportEnvelope ledger_envelope(DiscrepancyLedger led, std::uint64_t seed) {
  ReportEnvelope env;
  env.seed = seed;
  env.status = led.all_pass() ? "ok" : "violation";
  env.has_ledger = true;
  env.ledger = std::move(led);
  return env;
}

ClosedFormReport product_report(int n, int k, double r1) {
  const ProductGeometry g = product_geometry(n, k, r1);
  ClosedFormReport rep;
  rep.kind = "product_closed_form";
  rep.values = {{"n", double(g.n)},
                {"k", double(g.k)},
                {"r1", g.r1},
                {"r2", g.r2},
                {"h2", g.h2},
                {"a2", g.a2},
                {"s", g.s},
                {"mu", g.mu},
                {"yamabe_quotient", g.yamabe_quotient},
                {"lambda_minimal", g.lambda_minimal},
                {"is_minimal_radius", g.minimal_radius ? 1.0 : 0.0}};
  return rep;
}

ClosedFormReport projective_report(Field f, int n) {
  const ProjectiveGeometry pg = projective_geometry(f, n);
  ClosedFormReport rep;
  rep.kind = "projective_closed_form";
  rep.labels = {{"field", field_name(f)}};
  rep.values = {{"n", double(pg.n)},
                {"nprime", double(pg.nprime)},
                {"ambient_l", double(pg.l)},
                {"codim", double(pg.codim)},
                {"rn", pg.rn},
                {"gn", pg.gn},
                {"cn", pg.cn},
                {"mu", pg.mu},
                {"a2", pg.a2},
                {"s", pg.s}};
  if (pg.has_k_real) rep.values.push_back({"k_real", pg.k_real});
  if (pg.has_k_hol) rep.values.push_back({"k_hol", pg.k_hol});
  if (pg.sigma_valid) rep.values.push_back({"sigma", pg.sigma});
  return rep;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"verification toolkit for minimal isometric sphere embeddings"};
  app.name("minemb");
  app.require_subcommand(1);

  // --- closed-form --------------------------------------------------------
  CLI::App* cf = app.add_subcommand(
      "closed-form", "catalog values from the closed-form library");
  cf->require_subcommand(1);

  int cfp_n = 0, cfp_k = 0;
  double cfp_r1 = -1.0;
  OutputOptions cfp_out;
  CLI::App* cfp = cf->add_subcommand(
      "product", "geometry of S^k(r1) x S^{n-k}(r2) inside the unit sphere");
  cfp->add_option("--n", cfp_n, "total dimension of the product")->required();
  cfp->add_option("--k", cfp_k, "dimension of the first factor")->required();
  cfp->add_option("--r1", cfp_r1,
                  "radius of the first factor (default: balanced radius)");
  add_output_flags(cfp, cfp_out);

  std::string cfj_field;
  int cfj_dim = 0;
  OutputOptions cfj_out;
  CLI::App* cfj =
      cf->add_subcommand("projective", "projective-space catalog row");
  cfj->add_option("--field", cfj_field, "coefficient field: R, C, or H")
      ->required();
  cfj->add_option("--dim", cfj_dim, "projective dimension n")->required();
  add_output_flags(cfj, cfj_out);

  // --- sigma-table ---------------------------------------------------------
  int st_max_n = 4;
  OutputOptions st_out;
  CLI::App* st = app.add_subcommand(
      "sigma-table", "sigma invariants of the catalog spaces by dimension");
  st->add_option("--max-n", st_max_n, "largest dimension to include");
  add_output_flags(st, st_out);

  // --- verify --------------------------------------------------------------
  CLI::App* ver = app.add_subcommand("verify", "run a verification campaign");
  ver->require_subcommand(1);

  CampaignConfig min_cfg;
  bool min_product = false;
  std::string min_field;
  int min_dim = 0, min_n = 0, min_k = 0;
  double min_r1 = -1.0;
  OutputOptions min_out;
  CLI::App* vmin = ver->add_subcommand(
      "minimality", "mean-curvature vanishing across sampled points");
  vmin->add_option("--samples", min_cfg.samples, "points per embedding");
  vmin->add_option("--seed", min_cfg.seed, "campaign seed");
  vmin->add_option("--tol", min_cfg.tol_mean, "bound on |H| at each point");
  vmin->add_flag("--product", min_product,
                 "target one product sphere (with --n --k --r1)");
  vmin->add_option("--field", min_field, "target one projective space: field");
  vmin->add_option("--dim", min_dim, "target one projective space: level");
  vmin->add_option("--n", min_n, "product target: total dimension");
  vmin->add_option("--k", min_k, "product target: first-factor dimension");
  vmin->add_option("--r1", min_r1, "product target: first-factor radius");
  add_output_flags(vmin, min_out);

  CampaignConfig match_cfg;
  OutputOptions match_out;
  CLI::App* vmatch = ver->add_subcommand(
      "match", "measured invariants against the closed-form catalog");
  vmatch->add_option("--samples", match_cfg.samples, "points per embedding");
  vmatch->add_option("--seed", match_cfg.seed, "campaign seed");
  vmatch->add_option("--tol", match_cfg.tol_match,
                     "tolerance for catalog comparisons");
  add_output_flags(vmatch, match_out);

  CampaignConfig id_cfg;
  OutputOptions id_out;
  CLI::App* vid = ver->add_subcommand(
      "identities", "algebraic identities of the embedding family");
  vid->add_option("--samples", id_cfg.samples, "vectors per identity");
  vid->add_option("--seed", id_cfg.seed, "campaign seed");
  add_output_flags(vid, id_out);

  int ineq_max_n = 30;
  OutputOptions ineq_out;
  CLI::App* vineq = ver->add_subcommand(
      "inequalities", "closed-form inequality sweeps, margins recorded");
  vineq->add_option("--max-n", ineq_max_n, "largest dimension in the sweeps");
  add_output_flags(vineq, ineq_out);

  int fk_n = 0, fk_k = 0, fk_grid = 10000, fk_max_n = 12;
  bool fk_sweep = false;
  OutputOptions fk_out;
  CLI::App* vfk = ver->add_subcommand(
      "fk", "radius profile: endpoint value, minimizer, monotonicity");
  vfk->add_option("--n", fk_n, "total dimension");
  vfk->add_option("--k", fk_k, "first-factor dimension");
  vfk->add_option("--grid", fk_grid, "grid resolution on (0,1)");
  vfk->add_flag("--sweep", fk_sweep, "sweep all rows up to --max-n");
  vfk->add_option("--max-n", fk_max_n, "sweep cap (with --sweep)");
  add_output_flags(vfk, fk_out);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    err << app.help();
    return 2;
  }

  try {
    if (cfp->parsed()) {
      const double r1 =
          cfp_r1 < 0.0 ? minimal_product_r1(cfp_n, cfp_k) : cfp_r1;
      ReportEnvelope env;
      env.status = "ok";
      env.has_closed_form = true;
      env.closed_form = product_report(cfp_n, cfp_k, r1);
      return emit_report(std::move(env), cfp_out, args, out, err);
    }
    if (cfj->parsed()) {
      ReportEnvelope env;
      env.status = "ok";
      env.has_closed_form = true;
      env.closed_form = projective_report(parse_field(cfj_field), cfj_dim);
      return emit_report(std::move(env), cfj_out, args, out, err);
    }
    if (st->parsed()) {
      ReportEnvelope env;
      env.status = "ok";
      env.has_closed_form = true;
      env.closed_form.kind = "sigma_table";
      env.closed_form.table = sigma_table(st_max_n);
      return emit_report(std::move(env), st_out, args, out, err);
    }
    if (vmin->parsed()) {
      DiscrepancyLedger led{"", {}};
      if (min_product) {
        if (min_n <= 0 || min_k <= 0 || min_r1 <= 0.0)
          throw std::domain_error(
              "--product needs positive --n, --k and --r1");
        led = campaign_minimality_product(min_cfg, min_n, min_k, min_r1);
      } else if (!min_field.empty()) {
        if (min_dim <= 0)
          throw std::domain_error("--field needs a positive --dim");
        led = campaign_minimality_projective(min_cfg, parse_field(min_field),
                                             min_dim);
      } else {
        led = campaign_minimality(min_cfg);
      }
      return emit_report(ledger_envelope(std::move(led), min_cfg.seed),
                         min_out, args, out, err);
    }
    if (vmatch->parsed())
      return emit_report(
          ledger_envelope(campaign_closed_form_match(match_cfg),
                          match_cfg.seed),
          match_out, args, out, err);
    if (vid->parsed())
      return emit_report(
          ledger_envelope(campaign_algebraic_identities(id_cfg), id_cfg.seed),
          id_out, args, out, err);
    if (vineq->parsed())
      return emit_report(
          ledger_envelope(campaign_inequalities(ineq_max_n), 0), ineq_out,
          args, out, err);
    if (vfk->parsed()) {
      DiscrepancyLedger led{"", {}};
      if (fk_sweep)
        led = campaign_fk_sweep(fk_max_n, fk_grid);
      else if (fk_n > 0 && fk_k > 0)
        led = campaign_fk(fk_n, fk_k, fk_grid);
      else
        throw std::domain_error("fk needs --n and --k, or --sweep");
      return emit_report(ledger_envelope(std::move(led), 0), fk_out, args,
                         out, err);
    }
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand selected\n" << app.help();
  return 2;
}

}  // namespace minemb
