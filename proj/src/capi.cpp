#include "innervol/innervol.h"

#include <cstring>
#include <string>

#include "innervol/engine.hpp"
#include "innervol/equiangular.hpp"
#include "innervol/error.hpp"
#include "innervol/json_io.hpp"
#include "innervol/oracle.hpp"
#include "innervol/shapes.hpp"

using nlohmann::json;
using namespace innervol;

struct iv_context {
  Tolerances tol;
  std::string last_error;
};

struct iv_polytope {
  Polytope poly;
};

struct iv_volume_fn {
  InnerVolumeFunction fn;
  SmoothnessClass measured;
};

namespace {

iv_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return IV_ERR_INVALID_ARGUMENT;
    case ErrorCode::Parse: return IV_ERR_PARSE;
    case ErrorCode::ZeroNormal: return IV_ERR_ZERO_NORMAL;
    case ErrorCode::DimensionMismatch: return IV_ERR_DIMENSION_MISMATCH;
    case ErrorCode::UnboundedInput: return IV_ERR_UNBOUNDED_INPUT;
    case ErrorCode::LowerDimensional: return IV_ERR_LOWER_DIMENSIONAL;
    case ErrorCode::Empty: return IV_ERR_EMPTY;
    case ErrorCode::UnboundedCell: return IV_ERR_UNBOUNDED_CELL;
    case ErrorCode::ParallelPlanes: return IV_ERR_PARALLEL_PLANES;
    case ErrorCode::OutOfDomain: return IV_ERR_OUT_OF_DOMAIN;
    case ErrorCode::NotEquiangular: return IV_ERR_NOT_EQUIANGULAR;
    case ErrorCode::NotUniform: return IV_ERR_NOT_UNIFORM;
    case ErrorCode::MemoryBudget: return IV_ERR_MEMORY_BUDGET;
    case ErrorCode::NumericalFailure: return IV_ERR_NUMERICAL_FAILURE;
  }
  return IV_ERR_INTERNAL;
}

// Runs fn, translating exceptions into a status and a message on ctx.
template <class Fn>
iv_status guarded(iv_context* ctx, Fn&& fn) {
  if (!ctx) return IV_ERR_INVALID_ARGUMENT;
  try {
    ctx->last_error.clear();
    fn();
    return IV_OK;
  } catch (const Error& e) {
    ctx->last_error = e.what();
    return status_of(e.code());
  } catch (const json::exception& e) {
    ctx->last_error = e.what();
    return IV_ERR_PARSE;
  } catch (const std::bad_alloc&) {
    ctx->last_error = "out of memory";
    return IV_ERR_MEMORY_BUDGET;
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return IV_ERR_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::InvalidArgument, what);
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

json class_json(const SmoothnessClass& c) {
  if (c.infinite) return "infinity";
  return c.order;
}

json report_json(const VerifyReport& rep) {
  json rows = json::array();
  for (const auto& r : rep.rows)
    rows.push_back({{"r", r.r}, {"engine", r.engine}, {"mc", r.mc}, {"stderr", r.std_error},
                    {"grid_lo", r.grid_lo}, {"grid_hi", r.grid_hi}, {"z", r.z}});
  return {{"passed", rep.passed}, {"max_abs_z", rep.max_abs_z},
          {"bracket_violations", rep.bracket_violations}, {"rows", std::move(rows)}};
}

}  // namespace

extern "C" {

const char* iv_status_name(iv_status status) {
  switch (status) {
    case IV_OK: return "Ok";
    case IV_ERR_INVALID_ARGUMENT: return error_name(ErrorCode::InvalidArgument);
    case IV_ERR_PARSE: return error_name(ErrorCode::Parse);
    case IV_ERR_ZERO_NORMAL: return error_name(ErrorCode::ZeroNormal);
    case IV_ERR_DIMENSION_MISMATCH: return error_name(ErrorCode::DimensionMismatch);
    case IV_ERR_UNBOUNDED_INPUT: return error_name(ErrorCode::UnboundedInput);
    case IV_ERR_LOWER_DIMENSIONAL: return error_name(ErrorCode::LowerDimensional);
    case IV_ERR_EMPTY: return error_name(ErrorCode::Empty);
    case IV_ERR_UNBOUNDED_CELL: return error_name(ErrorCode::UnboundedCell);
    case IV_ERR_PARALLEL_PLANES: return error_name(ErrorCode::ParallelPlanes);
    case IV_ERR_OUT_OF_DOMAIN: return error_name(ErrorCode::OutOfDomain);
    case IV_ERR_NOT_EQUIANGULAR: return error_name(ErrorCode::NotEquiangular);
    case IV_ERR_NOT_UNIFORM: return error_name(ErrorCode::NotUniform);
    case IV_ERR_MEMORY_BUDGET: return error_name(ErrorCode::MemoryBudget);
    case IV_ERR_NUMERICAL_FAILURE: return error_name(ErrorCode::NumericalFailure);
    case IV_ERR_INTERNAL: return "Internal";
  }
  return "Unknown";
}

int iv_status_is_input_error(iv_status status) {
  switch (status) {
    case IV_ERR_INVALID_ARGUMENT:
    case IV_ERR_PARSE:
    case IV_ERR_ZERO_NORMAL:
    case IV_ERR_DIMENSION_MISMATCH:
    case IV_ERR_UNBOUNDED_INPUT:
    case IV_ERR_LOWER_DIMENSIONAL:
    case IV_ERR_EMPTY:
      return 1;
    default:
      return 0;
  }
}

iv_context* iv_context_new(void) { return new (std::nothrow) iv_context(); }

void iv_context_free(iv_context* ctx) { delete ctx; }

iv_status iv_context_set_tolerances(iv_context* ctx, const char* text) {
  return guarded(ctx, [&] {
    require(text != nullptr, "tolerances JSON is null");
    ctx->tol = tolerances_from_json(text);
  });
}

const char* iv_context_last_error(const iv_context* ctx) { return ctx ? ctx->last_error.c_str() : ""; }

iv_status iv_polytope_from_json(iv_context* ctx, const char* text, iv_polytope** out) {
  return guarded(ctx, [&] {
    require(text != nullptr && out != nullptr, "null argument");
    *out = new iv_polytope{polytope_from_json_text(text, ctx->tol)};
  });
}

iv_status iv_polytope_generate(iv_context* ctx, const char* spec, iv_polytope** out) {
  return guarded(ctx, [&] {
    require(spec != nullptr && out != nullptr, "null argument");
    *out = new iv_polytope{shape_from_spec(spec, ctx->tol)};
  });
}

iv_status iv_polytope_roof(iv_context* ctx, const iv_polytope* p, iv_polytope** out) {
  return guarded(ctx, [&] {
    require(p != nullptr && out != nullptr, "null argument");
    *out = new iv_polytope{make_roof(p->poly)};
  });
}

void iv_polytope_free(iv_polytope* p) { delete p; }

size_t iv_polytope_dim(const iv_polytope* p) { return p ? p->poly.dim() : 0; }

iv_status iv_polytope_to_json(iv_context* ctx, const iv_polytope* p, char** out) {
  return guarded(ctx, [&] {
    require(p != nullptr && out != nullptr, "null argument");
    *out = dup_string(polytope_to_json(p->poly).dump());
  });
}

iv_status iv_inradius(iv_context* ctx, const iv_polytope* p, double* g, double* center, size_t center_len) {
  return guarded(ctx, [&] {
    require(p != nullptr && g != nullptr, "null argument");
    const auto ball = inradius(p->poly, ctx->tol);
    *g = ball.g;
    if (center) {
      require(center_len >= p->poly.dim(), "center buffer too short");
      for (Eigen::Index i = 0; i < ball.center.size(); ++i) center[i] = ball.center[i];
    }
  });
}

iv_status iv_absolute_rank(iv_context* ctx, const iv_polytope* p, int* rank, int* all_independent) {
  return guarded(ctx, [&] {
    require(p != nullptr && rank != nullptr, "null argument");
    const auto r = absolute_rank(facet_normals(p->poly), ctx->tol);
    *rank = r.rank;
    if (all_independent) *all_independent = r.all_independent ? 1 : 0;
  });
}

iv_status iv_polytope_volume(iv_context* ctx, const iv_polytope* p, double* volume) {
  return guarded(ctx, [&] {
    require(p != nullptr && volume != nullptr, "null argument");
    *volume = polytope_volume(p->poly, ctx->tol);
  });
}

iv_status iv_volume_fn_compute(iv_context* ctx, const iv_polytope* p, double window_margin, iv_volume_fn** out) {
  return guarded(ctx, [&] {
    require(p != nullptr && out != nullptr, "null argument");
    auto fn = inner_volume_function(p->poly, window_margin, ctx->tol);
    const auto cls = fn.V.smoothness_class(ctx->tol);
    *out = new iv_volume_fn{std::move(fn), cls};
  });
}

void iv_volume_fn_free(iv_volume_fn* f) { delete f; }

iv_status iv_volume_fn_to_json(iv_context* ctx, const iv_volume_fn* f, char** out) {
  return guarded(ctx, [&] {
    require(f != nullptr && out != nullptr, "null argument");
    const json j{{"g", f->fn.g},
                 {"volume", f->fn.volume},
                 {"class_bound", f->fn.class_bound},
                 {"measured_class", class_json(f->measured)},
                 {"V", piecewise_to_json(f->fn.V)},
                 {"W", piecewise_to_json(f->fn.W)}};
    *out = dup_string(j.dump());
  });
}

iv_status iv_volume_fn_eval(iv_context* ctx, const iv_volume_fn* f, double r, double* V, double* W) {
  return guarded(ctx, [&] {
    require(f != nullptr, "null argument");
    if (V) *V = f->fn.V.evaluate(r);
    if (W) *W = f->fn.W.evaluate(r);
  });
}

double iv_volume_fn_inradius(const iv_volume_fn* f) { return f ? f->fn.g : 0.0; }

iv_status iv_equiangular_report(iv_context* ctx, const iv_polytope* p, char** out) {
  return guarded(ctx, [&] {
    require(p != nullptr && out != nullptr, "null argument");
    const auto check = check_dimensionwise_equiangular(p->poly, ctx->tol);
    json j;
    j["equiangular"] = check.profile.has_value();
    if (check.profile) {
      const auto ep = equiangular_volume_polynomial(p->poly, ctx->tol);
      j["alphas"] = ep.profile.alphas;
      j["gammas"] = ep.profile.gammas;
      j["omegas"] = ep.profile.omegas;
      std::vector<double> c;
      for (std::size_t k = 0; k <= p->poly.dim(); ++k) c.push_back(ep.poly.coeff(k));
      j["poly"] = c;
      j["valid_on"] = {0.0, ep.valid_to};
    } else {
      const auto& w = *check.witness;
      j["alphas"] = json::array();
      j["gammas"] = json::array();
      j["omegas"] = json::array();
      j["poly"] = json::array();
      j["valid_on"] = nullptr;
      j["witness"] = {{"level", w.level}, {"chain", w.chain}, {"facets", {w.facet_i, w.facet_j}},
                      {"angle", w.angle}, {"expected", w.expected}};
    }
    *out = dup_string(j.dump());
  });
}

iv_status iv_verify(iv_context* ctx, const iv_polytope* p, const char* v_json, size_t samples, size_t mc_samples,
                    uint64_t seed, char** out, int* passed) {
  return guarded(ctx, [&] {
    require(p != nullptr && out != nullptr && passed != nullptr, "null argument");
    PiecewisePoly V;
    if (v_json) {
      json j;
      try {
        j = json::parse(v_json);
      } catch (const json::parse_error& e) {
        throw Error(ErrorCode::Parse, e.what());
      }
      V = piecewise_from_json(j.contains("V") ? j.at("V") : j);
    } else {
      V = inner_volume_function(p->poly, 0.1, ctx->tol).V;
    }
    VerifyOptions opt;
    opt.mc_samples = mc_samples;
    const auto rep = verify_volume_function(p->poly, V, samples, seed, opt, ctx->tol);
    *passed = rep.passed ? 1 : 0;
    *out = dup_string(report_json(rep).dump());
  });
}

void iv_string_free(char* s) { delete[] s; }

}  // extern "C"
