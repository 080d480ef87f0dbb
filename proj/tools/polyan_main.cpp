#include <iostream>

#include <CLI11.hpp>

#include "polyan/cli.hpp"

using namespace polyan;

int main(int argc, char** argv) {
  CLI::App app{"Period analysis for linear recurrences mod 2^w"};
  app.require_subcommand(1);

  cli::CheckOptions check;
  auto* c = app.add_subcommand("check", "Classify the period behaviour of a polynomial");
  c->add_option("--poly", check.poly, "Polynomial ('1,-1,1' or 'tri:r,s[,+-+]')")->required();
  c->add_option("--w", check.ws, "Word sizes for exact rho_w (repeatable)");
  c->add_flag("--machine", check.machine, "Append a tab-separated machine block");

  cli::EnumerateOptions en;
  en.workers = cli::default_workers();
  auto* e = app.add_subcommand("enumerate", "Count exceptional polynomials of a degree");
  e->add_option("--degree", en.degree, "Degree r")->required();
  e->add_flag("--device1,!--no-device1", en.device1, "Block skipping on forbidden positions");
  e->add_option("--device2-s", en.device2_s, "Suffix-table width (0 disables, max 22)");
  e->add_option("--workers", en.workers, "Worker threads");
  e->add_flag("--list", en.emit_list, "Print representatives, one per line");
  e->add_flag("--machine", en.machine, "Append a tab-separated machine block");

  cli::PeriodOptions pd;
  auto* p = app.add_subcommand("period", "Brute-force sequence period vs the algebraic one");
  p->add_option("--poly", pd.poly, "Polynomial")->required();
  p->add_option("--w", pd.w, "Word size")->required();
  p->add_option("--init", pd.init, "Initial window x_0..x_{r-1}, comma-separated")->required();
  p->add_option("--max-steps", pd.max_steps, "Search budget");
  p->add_flag("--machine", pd.machine, "Append a tab-separated machine block");

  cli::RngOptions rg;
  auto* g = app.add_subcommand("rng", "Stream a certified maximal-period generator");
  g->add_option("--poly", rg.poly, "Trinomial spec tri:r,s[,+-+]")->required();
  g->add_option("--w", rg.w, "Word size");
  g->add_option("--seed", rg.seed, "Seed (expanded deterministically to the window)");
  g->add_option("--count", rg.count, "Number of values to emit")->required();
  g->add_flag("--unsafe", rg.unsafe, "Skip the maximal-period certification");

  cli::TablesOptions tb;
  tb.workers = cli::default_workers();
  auto* t = app.add_subcommand("tables", "Regenerate the reference tables and diff");
  t->add_option("--max-degree", tb.max_degree, "Highest degree to regenerate")->required();
  t->add_option("--workers", tb.workers, "Worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& ex) {
    app.exit(ex);
    return ex.get_exit_code() == 0 ? 0 : cli::kUsage;
  }

  try {
    if (c->parsed()) return cli::cmd_check(check, std::cout, std::cerr);
    if (e->parsed()) return cli::cmd_enumerate(en, std::cout, std::cerr);
    if (p->parsed()) return cli::cmd_period(pd, std::cout, std::cerr);
    if (g->parsed()) return cli::cmd_rng(rg, std::cout, std::cerr);
    if (t->parsed()) return cli::cmd_tables(tb, std::cout, std::cerr);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return cli::kPrecondition;
  }
  return cli::kUsage;
}
