#include "ltc.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "dimers.hpp"
#include "json_io.hpp"
#include "projection.hpp"
#include "propagation.hpp"
#include "render.hpp"
#include "verify.hpp"

using namespace ltc;

struct ltc_region {
  Region impl;
};

namespace {

thread_local std::string g_error;
thread_local std::string g_error_code;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
ltc_status guarded(Fn&& fn) {
  try {
    fn();
    g_error.clear();
    g_error_code.clear();
    return LTC_OK;
  } catch (const TilingError& e) {
    g_error = e.what();
    g_error_code = e.code();
    return LTC_ERR_DOMAIN;
  } catch (const std::exception& e) {
    g_error = e.what();
    g_error_code = "Internal";
    return LTC_ERR_INTERNAL;
  }
}

Tiling parse_tiling(const char* json) {
  if (!json) throw TilingError("SyntaxError", "tiling JSON is required");
  return tiling_from_json(Json::parse(json));
}

}  // namespace

extern "C" {

ltc_status ltc_region_square(int side, int missing_row, int missing_col,
                             ltc_region** out) {
  return guarded([&] {
    *out = new ltc_region{
        Region::deficient_square(side, {missing_row, missing_col})};
  });
}

ltc_status ltc_region_parse(const char* text, ltc_region** out) {
  return guarded([&] {
    if (!text) throw TilingError("SyntaxError", "region text is required");
    *out = new ltc_region{Region::parse(text)};
  });
}

ltc_status ltc_region_serialize(const ltc_region* region, char** out) {
  return guarded([&] { *out = dup_string(region->impl.serialize()); });
}

void ltc_region_free(ltc_region* region) { delete region; }

ltc_status ltc_count(const ltc_region* region, const char* tileset,
                     int threads, char** out_decimal) {
  return guarded([&] {
    BigCount n =
        count_tilings(region->impl, tileset_from_name(tileset), threads);
    *out_decimal = dup_string(n.str());
  });
}

ltc_status ltc_enumerate(const ltc_region* region, const char* tileset,
                         unsigned long long limit, ltc_tiling_cb cb,
                         void* user) {
  return guarded([&] {
    std::optional<uint64_t> lim;
    if (limit) lim = limit;
    enumerate_tilings(region->impl, tileset_from_name(tileset),
                      [&](const Tiling& t) {
                        return cb(tiling_to_json(t).dump().c_str(), user) != 0;
                      },
                      lim);
  });
}

ltc_status ltc_analyze(const ltc_region* region, const char* tiling_json,
                       char** out_json) {
  return guarded([&] {
    Tiling t = parse_tiling(tiling_json);
    auto violations = validate_tiling(region->impl, t);
    if (!violations.empty())
      throw TilingError("InvalidTiling", "tiling is not an exact cover");
    Decomposition d = decompose(region->impl, t);
    CrackReport r = extract_crack(region->impl, t);
    TileSetId set = TileSetId::RibbonT4;
    for (const Placement& p : t.placements)
      if (!is_ribbon(p.kind)) set = TileSetId::RibbonT4Plus;
    CrackVerdict v = validate_crack(r, region->impl.width(), set);
    Json out{{"decomposition", decomposition_to_json(d)},
             {"crack", crack_report_to_json(r)},
             {"verdict", crack_verdict_to_json(v)}};
    *out_json = dup_string(out.dump(2));
  });
}

ltc_status ltc_census(const ltc_region* region, const char* tileset,
                      int threads, char** out_json) {
  (void)threads;  // the census enumerates; it is single-threaded by contract
  return guarded([&] {
    CensusReport r = crack_census(region->impl, tileset_from_name(tileset));
    *out_json = dup_string(census_to_json(r).dump(2));
  });
}

ltc_status ltc_project(const ltc_region* region, const char* tiling_json,
                       char** out_json) {
  return guarded([&] {
    Tiling t = parse_tiling(tiling_json);
    ImageTiling img = project(region->impl, t);
    auto [lower, upper] = diagonal_balance(img);
    Json out{{"image", image_to_json(img)},
             {"choices", choices_to_json(read_choices(region->impl, t))},
             {"balance", Json{{"lower", lower}, {"upper", upper}}},
             {"preimages",
              bigcount_to_json(preimage_cardinality(img, region->impl.width()))}};
    *out_json = dup_string(out.dump(2));
  });
}

ltc_status ltc_lift(const char* image_json, int side, int missing_pos,
                    const char* choices_json, char** out_tiling_json) {
  return guarded([&] {
    if (!image_json) throw TilingError("SyntaxError", "image JSON is required");
    ImageTiling img = image_from_json(Json::parse(image_json));
    LiftChoices choices;
    if (choices_json) choices = choices_from_json(Json::parse(choices_json));
    Tiling t = lift(img, side, missing_pos, choices);
    *out_tiling_json = dup_string(tiling_to_json(t).dump(2));
  });
}

ltc_status ltc_dimer_count(int n, char** out_decimal) {
  return guarded(
      [&] { *out_decimal = dup_string(count_dimer_tilings(n).str()); });
}

ltc_status ltc_dimer_deficient(int n, int diag_pos, char** out_decimal) {
  return guarded([&] {
    *out_decimal = dup_string(count_dimer_deficient(n, diag_pos).str());
  });
}

ltc_status ltc_dimer_profile(int n, char** out_json) {
  return guarded([&] {
    *out_json = dup_string(profile_to_json(diagonal_profile(n)).dump(2));
  });
}

ltc_status ltc_capital_n(int m, int include_k0, char** out_decimal) {
  return guarded([&] {
    *out_decimal = dup_string(capital_n(m, include_k0 != 0).str());
  });
}

ltc_status ltc_kasteleyn(int n, char** out_decimal) {
  return guarded(
      [&] { *out_decimal = dup_string(kasteleyn_closed_form(n).str()); });
}

ltc_status ltc_propagate(const ltc_region* region, const char* tiling_json,
                         const char* tileset, char** out_json) {
  return guarded([&] {
    Tiling t = parse_tiling(tiling_json);
    auto [bigger, extended] =
        propagate(region->impl, t, tileset_from_name(tileset));
    Json out{{"region", bigger.serialize()},
             {"tiling", tiling_to_json(extended)}};
    *out_json = dup_string(out.dump(2));
  });
}

ltc_status ltc_render(const ltc_region* region, const char* tiling_json,
                      const char* format, char** out) {
  return guarded([&] {
    std::optional<Tiling> t;
    if (tiling_json) t = parse_tiling(tiling_json);
    std::string fmt = format ? format : "ascii";
    if (fmt == "ascii")
      *out = dup_string(render_ascii(region->impl, t ? &*t : nullptr));
    else if (fmt == "svg")
      *out = dup_string(render_svg(region->impl, t ? &*t : nullptr));
    else
      throw TilingError("SyntaxError", "format must be ascii or svg");
  });
}

ltc_status ltc_verify(int full, int threads, char** out_json,
                      int* out_failures) {
  return guarded([&] {
    VerificationReport r = run_suite(full != 0, threads);
    if (out_json) *out_json = dup_string(report_to_json(r));
    if (out_failures) *out_failures = r.failures();
  });
}

const char* ltc_last_error(void) { return g_error.c_str(); }
const char* ltc_last_error_code(void) { return g_error_code.c_str(); }
void ltc_string_free(char* s) { std::free(s); }

}  // extern "C"
