#include "borbit.h"

#include <cstring>
#include <fstream>
#include <memory>
#include <sstream>

#include "borbit/render.hpp"

using namespace borbit;

struct borbit_ctx {
  std::shared_ptr<const ActiveRootSpec> spec;
  BuildOptions opts;
  std::unique_ptr<OrbitEngine> engine;  // built on first use

  OrbitEngine& eng() {
    if (!engine) engine = std::make_unique<OrbitEngine>(spec, opts);
    return *engine;
  }
};

namespace {

thread_local std::string tl_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

int fail(int code, const std::string& message) {
  tl_error = message;
  return code;
}

// Exceptions to status codes; validation reports are rendered into the
// error text so callers do not lose the axioms involved.
template <typename Fn>
int guarded(Fn&& fn) {
  try {
    fn();
    tl_error.clear();
    return BORBIT_OK;
  } catch (const validation_error& e) {
    std::string msg = e.report.issues.empty()
                          ? std::string(e.what()) + "\n"
                          : render_validation(e.report);
    return fail(BORBIT_E_VALIDATION, msg);
  } catch (const budget_error& e) {
    return fail(BORBIT_E_BUDGET, e.what());
  } catch (const usage_error& e) {
    return fail(BORBIT_E_USAGE, e.what());
  } catch (const std::exception& e) {
    return fail(BORBIT_E_USAGE, e.what());
  }
}

BuildOptions options_for(long max_weyl) {
  BuildOptions opts;
  if (max_weyl > 0) {
    opts.max_weyl = static_cast<std::uint64_t>(max_weyl);
    if (opts.max_weyl > 51840) opts.max_positive_roots = 63;
  }
  return opts;
}

int open_spec(ActiveRootSpec&& spec, BuildOptions opts, borbit_ctx** out) {
  auto ctx = std::make_unique<borbit_ctx>();
  ctx->spec = std::make_shared<const ActiveRootSpec>(std::move(spec));
  ctx->opts = opts;
  *out = ctx.release();
  return BORBIT_OK;
}

}  // namespace

extern "C" {

const char* borbit_last_error(void) { return tl_error.c_str(); }

int borbit_open_json(const char* json_text, long max_weyl, borbit_ctx** out) {
  if (!json_text || !out) return fail(BORBIT_E_USAGE, "null argument");
  *out = nullptr;
  BuildOptions opts = options_for(max_weyl);
  return guarded([&] {
    open_spec(ActiveRootSpec::from_json(json_text, opts), opts, out);
  });
}

int borbit_open_file(const char* path, long max_weyl, borbit_ctx** out) {
  if (!path || !out) return fail(BORBIT_E_USAGE, "null argument");
  *out = nullptr;
  std::ifstream in(path);
  if (!in) return fail(BORBIT_E_USAGE, std::string("cannot open ") + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return borbit_open_json(buf.str().c_str(), max_weyl, out);
}

int borbit_open_tu_prime(const char* cartan_type, long max_weyl,
                         borbit_ctx** out) {
  if (!cartan_type || !out) return fail(BORBIT_E_USAGE, "null argument");
  *out = nullptr;
  BuildOptions opts = options_for(max_weyl);
  return guarded([&] {
    auto rs = RootSystem::build(cartan_type, opts);
    open_spec(ActiveRootSpec::tu_prime(rs), opts, out);
  });
}

void borbit_close(borbit_ctx* ctx) { delete ctx; }

int borbit_validation_report(borbit_ctx* ctx, char** out) {
  if (!ctx || !out) return fail(BORBIT_E_USAGE, "null argument");
  const ValidationReport& rep = ctx->spec->validate();
  *out = dup_string(render_validation(rep));
  tl_error.clear();
  return rep.ok() ? BORBIT_OK : BORBIT_E_VALIDATION;
}

int borbit_spec_json(borbit_ctx* ctx, char** out) {
  if (!ctx || !out) return fail(BORBIT_E_USAGE, "null argument");
  return guarded([&] { *out = dup_string(ctx->spec->to_json() + "\n"); });
}

int borbit_count(borbit_ctx* ctx, char** out) {
  if (!ctx || !out) return fail(BORBIT_E_USAGE, "null argument");
  return guarded([&] { *out = dup_string(render_count(ctx->eng())); });
}

int borbit_orbits(borbit_ctx* ctx, const char* format, char** out) {
  if (!ctx || !out) return fail(BORBIT_E_USAGE, "null argument");
  std::string fmt = format ? format : "table";
  if (fmt != "table" && fmt != "json")
    return fail(BORBIT_E_USAGE, "unknown orbit format: " + fmt);
  return guarded([&] {
    *out = dup_string(fmt == "json" ? render_orbits_json(ctx->eng())
                                    : render_orbits_table(ctx->eng()));
  });
}

int borbit_act(borbit_ctx* ctx, const char* orbit, const char* word,
               char** out) {
  if (!ctx || !orbit || !word || !out)
    return fail(BORBIT_E_USAGE, "null argument");
  return guarded([&] {
    OrbitEngine& eng = ctx->eng();
    OrbitId id = eng.parse_orbit(orbit);
    std::istringstream ws(word);
    std::string tok;
    std::vector<int> letters;
    while (std::getline(ws, tok, ',')) {
      int letter = std::stoi(tok);
      if (letter < 1 || letter > eng.rs().rank())
        throw usage_error("simple-root index out of range: " + tok);
      letters.push_back(letter - 1);
    }
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
      id = eng.weyl_action_simple(*it, id);
    *out = dup_string(eng.orbit_string(id) + "\n");
  });
}

int borbit_mact(borbit_ctx* ctx, const char* orbit, const char* word,
                char** out) {
  if (!ctx || !orbit || !word || !out)
    return fail(BORBIT_E_USAGE, "null argument");
  return guarded([&] {
    OrbitEngine& eng = ctx->eng();
    OrbitId id = eng.parse_orbit(orbit);
    ExtendedPair ep = eng.extend(id.w, id.I);
    std::istringstream ws(word);
    std::string tok;
    std::vector<int> letters;
    while (std::getline(ws, tok, ',')) {
      int letter = std::stoi(tok);
      if (letter < 1 || letter > eng.rs().rank())
        throw usage_error("simple-root index out of range: " + tok);
      letters.push_back(letter - 1);
    }
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
      ep = eng.monoid_action_simple(*it, ep);
    OrbitId res = eng.reduce(ep.w, ep.I);
    *out = dup_string(eng.orbit_string(res) + "\n");
  });
}

int borbit_stab(borbit_ctx* ctx, const char* orbit, char** out) {
  if (!ctx || !orbit || !out) return fail(BORBIT_E_USAGE, "null argument");
  return guarded([&] {
    OrbitEngine& eng = ctx->eng();
    *out = dup_string(render_stab(eng, eng.parse_orbit(orbit)));
  });
}

int borbit_polytope_json(borbit_ctx* ctx, const char* lambda_csv, char** out) {
  if (!ctx || !out) return fail(BORBIT_E_USAGE, "null argument");
  return guarded([&] {
    OrbitEngine& eng = ctx->eng();
    RatVec lambda;
    if (!lambda_csv) {
      lambda = PolytopeModel::rho(eng.rs());
    } else {
      std::istringstream ls(lambda_csv);
      std::string tok;
      while (std::getline(ls, tok, ',')) {
        try {
          lambda.push_back(Rat::parse(tok));
        } catch (const std::exception&) {
          throw usage_error("malformed lambda coordinate: " + tok);
        }
      }
    }
    PolytopeModel model(eng, std::move(lambda));
    *out = dup_string(model.export_json() + "\n");
  });
}

int borbit_weak_order_dot(borbit_ctx* ctx, char** out) {
  if (!ctx || !out) return fail(BORBIT_E_USAGE, "null argument");
  return guarded([&] { *out = dup_string(render_weak_order_dot(ctx->eng())); });
}

int borbit_knop(borbit_ctx* ctx, char** out) {
  if (!ctx || !out) return fail(BORBIT_E_USAGE, "null argument");
  return guarded([&] {
    *out = dup_string(render_knop(knop_check(*ctx->spec)));
  });
}

void borbit_free(char* text) { std::free(text); }

}  // extern "C"
