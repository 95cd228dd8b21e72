// CLI for the monomial valuation toolkit. Exit codes: 0 success, 1 domain
// errors (no center, value above one, non-invariant input, ...), 2 usage,
// session, and expression syntax errors.
#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "monoval/errors.hpp"
#include "monoval/session.hpp"

namespace {

struct Args {
  std::string session;
  std::string expr;
  bool json = false;
  int digits = 6;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"monomial valuations on affine space: values, residue fields, "
               "blow-up charts, group actions"};
  app.require_subcommand(1);
  Args args;

  auto add_common = [&](CLI::App* cmd, bool with_expr, bool expr_required) {
    cmd->add_option("--session", args.session, "session JSON file")->required();
    CLI::Option* e = nullptr;
    if (with_expr) {
      e = cmd->add_option("--expr,-e", args.expr, "expression over the session variables");
      if (expr_required) e->required();
    }
    cmd->add_flag("--json", args.json, "machine-readable output");
    cmd->add_option("--digits", args.digits, "significant digits for approximations")
        ->check(CLI::PositiveNumber);
    return e;
  };

  CLI::App* value = app.add_subcommand("value", "valuation of an expression");
  add_common(value, true, true);
  CLI::App* residue = app.add_subcommand("residue", "residue of an expression");
  add_common(residue, true, true);
  CLI::App* rank = app.add_subcommand("rank", "rational rank and transcendence degree");
  add_common(rank, false, false);
  CLI::App* kernel = app.add_subcommand("kernel", "kernel lattice and residue generators");
  add_common(kernel, false, false);
  CLI::App* center = app.add_subcommand("center", "center of the valuation");
  add_common(center, false, false);
  CLI::App* realize =
      app.add_subcommand("realize", "blow-up chart realizing the residue field");
  add_common(realize, false, false);
  CLI::App* adjoin = app.add_subcommand("adjoin", "adjoin g/h to the base chart");
  add_common(adjoin, true, true);
  CLI::App* group_check =
      app.add_subcommand("group-check", "invariance and induced residue action");
  CLI::Option* gc_expr = add_common(group_check, true, false);
  CLI::App* report = app.add_subcommand("report", "full session report");
  add_common(report, false, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    monoval::SessionContext ctx = monoval::make_context(monoval::load_session(args.session));
    monoval::CommandOptions opts{args.json, args.digits};
    std::string out;
    if (value->parsed())
      out = monoval::command_value(ctx, args.expr, opts);
    else if (residue->parsed())
      out = monoval::command_residue(ctx, args.expr, opts);
    else if (rank->parsed())
      out = monoval::command_rank(ctx, opts);
    else if (kernel->parsed())
      out = monoval::command_kernel(ctx, opts);
    else if (center->parsed())
      out = monoval::command_center(ctx, opts);
    else if (realize->parsed())
      out = monoval::command_realize(ctx, opts);
    else if (adjoin->parsed())
      out = monoval::command_adjoin(ctx, args.expr, opts);
    else if (group_check->parsed()) {
      std::optional<std::string> expr;
      if (gc_expr && gc_expr->count() > 0) expr = args.expr;
      out = monoval::command_group_check(ctx, expr, opts);
    } else if (report->parsed()) {
      out = monoval::command_report(ctx, opts);
    }
    std::cout << out;
    return 0;
  } catch (const monoval::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const monoval::SessionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const monoval::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
