#include "CLI11.hpp"

#include "voabim/bimodule.hpp"
#include "voabim/characters.hpp"
#include "voabim/errors.hpp"
#include "voabim/expr.hpp"
#include "voabim/identities.hpp"
#include "voabim/verma.hpp"
#include "voabim/vmodule.hpp"

#include <fstream>
#include <iostream>
#include <memory>
#include <string>

using namespace voabim;

namespace {

// collects suite reports, prints a one line summary per suite, tracks the
// overall verdict
struct Runner {
  ordered_json reports = ordered_json::array();
  bool ok = true;

  void take(const CheckReport &r) {
    reports.push_back(r.to_json());
    std::cout << r.suite << ": " << r.total << " checks, "
              << r.failures.size() << " failures\n";
    ok = ok && r.ok();
  }
  void comb(const std::string &name,
            const std::vector<std::vector<int>> &failed, long total) {
    ordered_json j = {{"suite", name},
                      {"trials", total},
                      {"failures", failed},
                      {"ok", failed.empty()}};
    reports.push_back(j);
    std::cout << name << ": " << total << " checks, " << failed.size()
              << " failures\n";
    ok = ok && failed.empty();
  }
  void info(const ordered_json &j) { reports.push_back(j); }
};

Voa make_voa(const std::string &name, int max_weight, const Rational &c) {
  if (name == "heisenberg")
    return Voa::heisenberg(max_weight);
  if (name == "virasoro")
    return Voa::virasoro_universal(c, max_weight);
  if (name == "ising")
    return Voa::ising(max_weight);
  throw UsageError("unknown algebra '" + name +
                   "'; use heisenberg, virasoro or ising");
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"exact products, relation spans and induced modules over "
               "graded vertex algebras"};
  app.require_subcommand(1);

  std::string voa_name = "heisenberg";
  int max_weight = 12;
  std::string c_str = "1/2";
  std::uint64_t seed = 2024;
  std::string out_path;
  app.add_option("--voa", voa_name, "algebra: heisenberg, virasoro or ising")
      ->capture_default_str();
  app.add_option("--max-weight", max_weight,
                 "top graded weight kept in the algebra")
      ->capture_default_str();
  app.add_option("--c", c_str,
                 "central charge for --voa virasoro, an exact rational")
      ->capture_default_str();
  app.add_option("--seed", seed, "seed for the sampled suites")
      ->capture_default_str();
  app.add_option("--out", out_path, "write the JSON report to this file");

  auto *verify = app.add_subcommand(
      "verify", "exact identity grids behind the product machinery");
  int vf_wt = 3, vf_lvl = 2, vf_rng = 6;
  verify->add_option("--max-gen-weight", vf_wt, "top generator weight")
      ->capture_default_str();
  verify->add_option("--max-level", vf_lvl, "top bimodule level pair")
      ->capture_default_str();
  verify->add_option("--comb-range", vf_rng,
                     "parameter range of the combinatorial grids")
      ->capture_default_str();

  auto *product =
      app.add_subcommand("product", "graded product of two elements");
  std::string pr_u, pr_v;
  int pr_m = 0, pr_n = 0, pr_p = 0;
  product->add_option("--u", pr_u, "left element")->required();
  product->add_option("--v", pr_v, "right element")->required();
  product->add_option("--m", pr_m, "source level")->capture_default_str();
  product->add_option("--n", pr_n, "target level")->capture_default_str();
  product->add_option("--p", pr_p, "auxiliary level")->capture_default_str();

  auto *residue = app.add_subcommand(
      "residue", "residue product with explicit binomial twist");
  std::string rs_u, rs_v;
  long rs_alpha = 0, rs_beta = 1;
  residue->add_option("--u", rs_u, "left element")->required();
  residue->add_option("--v", rs_v, "right element")->required();
  residue->add_option("--alpha", rs_alpha, "binomial twist exponent")
      ->capture_default_str();
  residue->add_option("--beta", rs_beta, "pole order")->capture_default_str();

  auto *ospan =
      app.add_subcommand("ospan", "rank of a truncated relation span");
  std::string os_kind = "oprime";
  int os_n = 0, os_m = 0, os_cutoff = 8, os_aux = -1;
  ospan->add_option("--kind", os_kind, "oprime or ofull")
      ->capture_default_str();
  ospan->add_option("--n", os_n, "target level")->capture_default_str();
  ospan->add_option("--m", os_m, "source level")->capture_default_str();
  ospan->add_option("--cutoff", os_cutoff, "top weight kept in the span")
      ->capture_default_str();
  ospan->add_option("--aux-bound", os_aux,
                    "auxiliary level bound for ofull (-1 = default)")
      ->capture_default_str();

  auto *qdim = app.add_subcommand(
      "quotient-dim", "dimension of the graded quotient at a cutoff");
  int qd_n = 0, qd_m = 0, qd_cutoff = 8, qd_aux = -1;
  bool qd_full = false;
  qdim->add_option("--n", qd_n, "target level")->capture_default_str();
  qdim->add_option("--m", qd_m, "source level")->capture_default_str();
  qdim->add_option("--cutoff", qd_cutoff, "top weight kept in the span")
      ->capture_default_str();
  qdim->add_flag("--with-full", qd_full,
                 "also build the span with the defect families");
  qdim->add_option("--aux-bound", qd_aux,
                   "auxiliary level bound for the defect families")
      ->capture_default_str();

  auto *check =
      app.add_subcommand("check", "sampled membership and transport suites");
  std::string ck_suite = "swap";
  int ck_trials = 40, ck_wt = 3, ck_lvl = 2;
  check
      ->add_option("--suite", ck_suite,
                   "swap, stability, phi, descent or psi")
      ->capture_default_str();
  check->add_option("--trials", ck_trials, "number of sampled checks")
      ->capture_default_str();
  check->add_option("--max-gen-weight", ck_wt, "top sampled weight")
      ->capture_default_str();
  check->add_option("--max-level", ck_lvl, "top sampled level")
      ->capture_default_str();

  auto *repc = app.add_subcommand(
      "rep-check", "module action suites for a concrete representation");
  std::string rc_module = "fock", rc_suite = "compose", rc_weight = "0";
  int rc_level = 4, rc_trials = 30, rc_wt = 2, rc_lvl = 2;
  repc->add_option("--module", rc_module, "fock, hw or irreducible")
      ->capture_default_str();
  repc->add_option("--suite", rc_suite, "compose, annihilation or omega")
      ->capture_default_str();
  repc->add_option("--weight", rc_weight,
                   "bottom weight (momentum for fock), an exact rational")
      ->capture_default_str();
  repc->add_option("--module-level", rc_level, "top module level built")
      ->capture_default_str();
  repc->add_option("--trials", rc_trials, "number of sampled checks")
      ->capture_default_str();
  repc->add_option("--max-gen-weight", rc_wt, "top sampled weight")
      ->capture_default_str();
  repc->add_option("--max-level", rc_lvl, "top sampled level pair")
      ->capture_default_str();

  auto *verma = app.add_subcommand(
      "verma", "induced module over the c = 1/2 algebra and its checks");
  std::string vm_h = "0";
  int vm_levels = 4, vm_cutoff = -1, vm_trials = 40;
  verma->add_option("--weight", vm_h, "bottom weight: 0, 1/2 or 1/16")
      ->capture_default_str();
  verma->add_option("--levels", vm_levels, "degrees built")
      ->capture_default_str();
  verma
      ->add_option("--cutoff", vm_cutoff,
                   "span cutoff (-1 = max weight minus one)")
      ->capture_default_str();
  verma->add_option("--trials", vm_trials, "commutator suite trials")
      ->capture_default_str();

  auto *structure = app.add_subcommand(
      "structure", "quotient dimension table over low level pairs");
  std::vector<int> st_cutoffs = {8, 9};
  bool st_full = false;
  structure->add_option("--cutoffs", st_cutoffs, "span cutoffs to tabulate")
      ->capture_default_str();
  structure->add_flag("--with-full", st_full,
                      "also build the spans with the defect families");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Runner run;
  try {
    Rational c = parse_rational(c_str);

    if (*verify) {
      long r = vf_rng;
      run.comb("kernel_identity", kernel_identity_grid(vf_rng, vf_rng),
               (r + 1) * (r + 1));
      run.comb("bivariate_kernel", bivariate_kernel_grid(vf_rng, vf_rng),
               (r + 1) * (r + 1));
      run.comb("inverse_power", inverse_power_grid(vf_rng, vf_rng),
               (r + 1) * (r + 2) / 2 - 1);
      run.comb("vandermonde", vandermonde_grid(vf_rng, vf_rng, vf_rng),
               (r + 1) * (r + 1) * r * (r + 1) / 2);
      Voa V = make_voa(voa_name, max_weight, c);
      run.take(lshift_star_bar_grid(V, vf_wt, vf_lvl));
      run.take(lshift_star_grid(V, vf_wt, vf_lvl));
    } else if (*product) {
      Voa V = make_voa(voa_name, max_weight, c);
      GradedVector u = parse_element(V, pr_u);
      GradedVector v = parse_element(V, pr_v);
      GradedVector w = star(V, u, v, pr_m, pr_n, pr_p);
      std::cout << V.str(w) << "\n";
      run.info({{"product", "star"},
                {"u", V.str(u)},
                {"v", V.str(v)},
                {"m", pr_m},
                {"n", pr_n},
                {"p", pr_p},
                {"result", V.str(w)}});
    } else if (*residue) {
      Voa V = make_voa(voa_name, max_weight, c);
      GradedVector u = parse_element(V, rs_u);
      GradedVector v = parse_element(V, rs_v);
      GradedVector w = residue_product(V, u, v, rs_alpha, rs_beta);
      std::cout << V.str(w) << "\n";
      run.info({{"product", "residue"},
                {"u", V.str(u)},
                {"v", V.str(v)},
                {"alpha", rs_alpha},
                {"beta", rs_beta},
                {"result", V.str(w)}});
    } else if (*ospan) {
      auto V = std::make_shared<Voa>(make_voa(voa_name, max_weight, c));
      OSpaces spans(V);
      if (os_kind != "oprime" && os_kind != "ofull")
        throw UsageError("--kind must be oprime or ofull");
      const OSpan &sp = os_kind == "oprime"
                            ? spans.prime(os_n, os_m, os_cutoff)
                            : spans.full(os_n, os_m, os_cutoff, os_aux);
      ordered_json j = {{"kind", os_kind},
                        {"n", os_n},
                        {"m", os_m},
                        {"cutoff", os_cutoff},
                        {"ambient", spans.ambient_dim(os_cutoff)},
                        {"rank", sp.basis.rank()}};
      std::cout << j.dump(2) << "\n";
      run.info(j);
    } else if (*qdim) {
      auto V = std::make_shared<Voa>(make_voa(voa_name, max_weight, c));
      OSpaces spans(V);
      QuotientReport qr =
          quotient_report(spans, qd_n, qd_m, qd_cutoff, qd_full, qd_aux);
      std::cout << qr.to_json().dump(2) << "\n";
      run.info(qr.to_json());
    } else if (*check) {
      auto V = std::make_shared<Voa>(make_voa(voa_name, max_weight, c));
      OSpaces spans(V);
      if (ck_suite == "swap")
        run.take(swap_suite(spans, seed, ck_trials, ck_wt, ck_lvl));
      else if (ck_suite == "stability")
        run.take(stability_suite(spans, seed, ck_trials, ck_wt, ck_lvl));
      else if (ck_suite == "phi")
        run.take(phi_suite(spans, seed, ck_trials, ck_wt, ck_lvl));
      else if (ck_suite == "descent")
        run.take(descent_suite(spans, seed, ck_trials, ck_wt, ck_lvl));
      else if (ck_suite == "psi")
        run.take(psi_balance_suite(spans, seed, ck_trials, ck_wt, ck_lvl));
      else
        throw UsageError(
            "--suite must be swap, stability, phi, descent or psi");
    } else if (*repc) {
      auto V = std::make_shared<Voa>(make_voa(voa_name, max_weight, c));
      Rational w0 = parse_rational(rc_weight);
      VModule M = [&] {
        if (rc_module == "fock")
          return VModule::fock(V, w0, rc_level);
        if (rc_module == "hw")
          return VModule::highest_weight(V, w0, rc_level);
        if (rc_module == "irreducible")
          return VModule::ising_irreducible(V, w0, rc_level);
        throw UsageError("--module must be fock, hw or irreducible");
      }();
      if (rc_suite == "compose")
        run.take(compose_grid(M, rc_wt, rc_lvl));
      else if (rc_suite == "annihilation")
        run.take(annihilation_suite(M, seed, rc_trials, rc_wt, rc_lvl));
      else if (rc_suite == "omega")
        run.take(omega_suite(M, seed, rc_trials, rc_wt, rc_lvl));
      else
        throw UsageError("--suite must be compose, annihilation or omega");
    } else if (*verma) {
      if (voa_name != "ising")
        throw UsageError("verma needs --voa ising");
      auto V = std::make_shared<Voa>(make_voa(voa_name, max_weight, c));
      auto spans = std::make_shared<OSpaces>(V);
      int cutoff = vm_cutoff < 0 ? max_weight - 1 : vm_cutoff;
      InducedModule M(spans, parse_rational(vm_h), vm_levels, cutoff);
      ordered_json dims = ordered_json::array();
      for (int n = 0; n <= M.built_levels(); ++n)
        dims.push_back(M.dim(n));
      std::cout << "degree dims: " << dims.dump() << "\n";
      run.info({{"h", vm_h}, {"cutoff", cutoff}, {"dims", dims}});
      run.take(induced_dims_report(M));
      run.take(vacuum_mode_suite(M, 3));
      run.take(commutator_suite(M, seed, vm_trials, 3, 3));
    } else if (*structure) {
      if (voa_name != "ising")
        throw UsageError("structure needs --voa ising");
      auto V = std::make_shared<Voa>(make_voa(voa_name, max_weight, c));
      OSpaces spans(V);
      for (int cutoff : st_cutoffs)
        for (int n = 0; n <= 1; ++n)
          for (int m = 0; m <= 1; ++m) {
            QuotientReport qr =
                quotient_report(spans, n, m, cutoff, st_full, -1);
            std::cout << "A(" << n << "," << m << ") cutoff " << cutoff
                      << ": dim " << qr.dim
                      << (qr.stabilized ? "" : " (not stabilized)") << "\n";
            run.info(qr.to_json());
          }
    }
  } catch (const WeightRangeError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const UsageError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out)
      throw std::runtime_error("cannot write " + out_path);
    out << run.reports.dump(2) << "\n";
  }
  if (!run.ok) {
    std::cout << "FAIL\n";
    return 1;
  }
  return 0;
}
