// Command-line front end; every operation goes through the C API in
// borbit.h, which is also what language bindings would link.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "borbit.h"

namespace {

long resolve_max_weyl(long flag_value) {
  if (flag_value > 0) return flag_value;
  const char* env = std::getenv("BORBIT_MAX_WEYL");
  if (env && *env) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
    std::cerr << "ignoring malformed BORBIT_MAX_WEYL\n";
  }
  return 0;  // library default
}

struct CtxGuard {
  borbit_ctx* ctx = nullptr;
  ~CtxGuard() { borbit_close(ctx); }
};

int open_or_fail(const std::string& path, long max_weyl, CtxGuard& guard) {
  int rc = borbit_open_file(path.c_str(), max_weyl, &guard.ctx);
  if (rc != BORBIT_OK) std::cerr << borbit_last_error();
  return rc;
}

// prints *text (when set) and frees it; text must be filled by the call
// producing rc before this runs
int emit(int rc, char** text) {
  if (*text) {
    std::cout << *text;
    borbit_free(*text);
    *text = nullptr;
  }
  if (rc != BORBIT_OK) std::cerr << borbit_last_error() << "\n";
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"borbit: B-orbit combinatorics of strongly solvable spherical subgroups"};
  app.require_subcommand(1);

  std::string spec_path, orbit, word, lambda_csv, format = "table";
  std::string type_label, out_path;
  long max_weyl = 0;
  app.add_option("--max-weyl", max_weyl,
                 "override the Weyl group size budget (env BORBIT_MAX_WEYL)");

  auto add_spec_opt = [&](CLI::App* sub) {
    sub->add_option("--spec", spec_path, "spec file (JSON)")->required();
  };

  CLI::App* validate = app.add_subcommand("validate", "check the spec axioms");
  add_spec_opt(validate);
  CLI::App* count =
      app.add_subcommand("count", "orbit count, formula and brute force");
  add_spec_opt(count);
  CLI::App* orbits = app.add_subcommand("orbits", "list all B-orbits");
  add_spec_opt(orbits);
  orbits->add_option("--format", format, "table or json");
  CLI::App* act = app.add_subcommand("act", "apply the Weyl action");
  add_spec_opt(act);
  act->add_option("--orbit", orbit, "orbit string, e.g. w=1,2;I=0")->required();
  act->add_option("--word", word, "simple-root indices, e.g. 1,2")->required();
  CLI::App* mact = app.add_subcommand("mact", "apply the monoid action");
  add_spec_opt(mact);
  mact->add_option("--orbit", orbit, "orbit string")->required();
  mact->add_option("--word", word, "simple-root indices")->required();
  CLI::App* stab = app.add_subcommand("stab", "stabilizer of an orbit");
  add_spec_opt(stab);
  stab->add_option("--orbit", orbit, "orbit string")->required();
  CLI::App* polytope =
      app.add_subcommand("polytope", "weight-polytope model as JSON");
  add_spec_opt(polytope);
  polytope->add_option("--lambda", lambda_csv,
                       "regular dominant weight, e.g. 1,3/2,2 (default rho)");
  CLI::App* weak_order =
      app.add_subcommand("weak-order", "weak order graph in DOT format");
  add_spec_opt(weak_order);
  weak_order->add_flag("--dot", "emit DOT (the only format)");
  CLI::App* knop = app.add_subcommand("knop", "orbit-count bound report");
  add_spec_opt(knop);
  CLI::App* tu_prime =
      app.add_subcommand("tu-prime", "write the TU' spec for a Cartan type");
  tu_prime->add_option("--type", type_label, "Cartan type, e.g. A2")->required();
  tu_prime->add_option("--out", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return BORBIT_E_USAGE;
  }

  long budget = resolve_max_weyl(max_weyl);
  char* text = nullptr;

  if (tu_prime->parsed()) {
    CtxGuard g;
    int rc = borbit_open_tu_prime(type_label.c_str(), budget, &g.ctx);
    if (rc != BORBIT_OK) {
      std::cerr << borbit_last_error() << "\n";
      return rc;
    }
    rc = borbit_spec_json(g.ctx, &text);
    if (rc == BORBIT_OK && !out_path.empty()) {
      std::ofstream out(out_path);
      if (!out) {
        std::cerr << "cannot write " << out_path << "\n";
        borbit_free(text);
        return BORBIT_E_USAGE;
      }
      out << text;
      borbit_free(text);
      return BORBIT_OK;
    }
    return emit(rc, &text);
  }

  CtxGuard g;
  int rc = open_or_fail(spec_path, budget, g);
  if (rc != BORBIT_OK) return rc;

  if (validate->parsed()) {
    rc = borbit_validation_report(g.ctx, &text);
    if (text) {
      std::cout << text;
      borbit_free(text);
    }
    return rc;
  }
  if (count->parsed()) {
    rc = borbit_count(g.ctx, &text);
    return emit(rc, &text);
  }
  if (orbits->parsed()) {
    rc = borbit_orbits(g.ctx, format.c_str(), &text);
    return emit(rc, &text);
  }
  if (act->parsed()) {
    rc = borbit_act(g.ctx, orbit.c_str(), word.c_str(), &text);
    return emit(rc, &text);
  }
  if (mact->parsed()) {
    rc = borbit_mact(g.ctx, orbit.c_str(), word.c_str(), &text);
    return emit(rc, &text);
  }
  if (stab->parsed()) {
    rc = borbit_stab(g.ctx, orbit.c_str(), &text);
    return emit(rc, &text);
  }
  if (polytope->parsed()) {
    rc = borbit_polytope_json(
        g.ctx, lambda_csv.empty() ? nullptr : lambda_csv.c_str(), &text);
    return emit(rc, &text);
  }
  if (weak_order->parsed()) {
    rc = borbit_weak_order_dot(g.ctx, &text);
    return emit(rc, &text);
  }
  if (knop->parsed()) {
    rc = borbit_knop(g.ctx, &text);
    return emit(rc, &text);
  }

  std::cerr << "no subcommand\n";
  return BORBIT_E_USAGE;
}
