#include "canonbasis/canonbasis.h"

#include "canonbasis/serialize.hpp"

#include <cstdlib>
#include <cstring>
#include <functional>
#include <iomanip>
#include <sstream>

using namespace canonbasis;

struct cb_result {
  const GroupSpec* group = nullptr;
  Canonicalization canon;
};

struct cb_report {
  VerificationReport report;
};

namespace {

thread_local std::string last_error;

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

cb_status fail(cb_status status, const std::string& message) {
  last_error = message;
  return status;
}

// Runs fn, translating exceptions into status codes.
cb_status guarded(const std::function<cb_status()>& fn) {
  try {
    last_error.clear();
    return fn();
  } catch (const FormatError& e) {
    return fail(CB_USAGE_ERROR, std::string("malformed input: ") + e.what());
  } catch (const Json::exception& e) {
    return fail(CB_USAGE_ERROR, std::string("malformed input: ") + e.what());
  } catch (const std::invalid_argument& e) {
    return fail(CB_USAGE_ERROR, e.what());
  } catch (const InvariantViolation& e) {
    return fail(CB_INTERNAL_ERROR, std::string("invariant violation: ") + e.what());
  } catch (const std::bad_alloc&) {
    return fail(CB_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(CB_INTERNAL_ERROR, e.what());
  } catch (...) {
    return fail(CB_INTERNAL_ERROR, "unknown error");
  }
}

cb_status emit(char** out, const std::function<std::string()>& make) {
  if (!out) return fail(CB_USAGE_ERROR, "null output pointer");
  return guarded([&] {
    *out = copy_string(make());
    return CB_OK;
  });
}

const GroupSpec& lookup(const char* group) {
  if (!group) throw std::invalid_argument("group name is null");
  return catalog(group);
}

bool is_heavy(const GroupSpec& g) { return g.name == "E8"; }

cb_options resolved(const cb_options* options) {
  cb_options o;
  cb_options_init(&o);
  if (options) o = *options;
  if (o.threads == 0) o.threads = 1;
  return o;
}

bool heavy_env() {
  const char* v = std::getenv("CANONBASIS_HEAVY");
  return v && *v && std::strcmp(v, "0") != 0;
}

}  // namespace

extern "C" {

const char* cb_version(void) { return "1.0.0"; }

const char* cb_last_error(void) { return last_error.c_str(); }

void cb_options_init(cb_options* options) {
  if (!options) return;
  options->threads = 1;
  options->seed = 1;
  options->heavy_ok = 0;
  options->full_checks = 0;
  options->invariance = -1;
  options->progress = nullptr;
  options->user_data = nullptr;
}

void cb_string_free(char* text) { std::free(text); }

int cb_group_count(void) { return static_cast<int>(catalog_names().size()); }

const char* cb_group_name(int index) {
  const auto& names = catalog_names();
  if (index < 0 || index >= static_cast<int>(names.size())) return nullptr;
  return names[static_cast<std::size_t>(index)].c_str();
}

cb_status cb_group_to_json(const char* group, char** out) {
  return emit(out, [&] { return dump(group_to_json(lookup(group))); });
}

cb_status cb_group_to_text(const char* group, char** out) {
  return emit(out, [&] { return group_text(lookup(group)); });
}

cb_status cb_roots_to_json(const char* group, char** out) {
  return emit(out, [&] {
    const GroupSpec& g = lookup(group);
    Json j;
    j["group"] = g.name;
    const auto roots = generate_positive_roots(g);
    j["count"] = roots.size();
    Json list = Json::array();
    for (const auto& r : roots) list.push_back(polynomial_to_json(root_form(r)));
    j["roots"] = std::move(list);
    return dump(j);
  });
}

cb_status cb_roots_to_text(const char* group, char** out) {
  return emit(out, [&] { return roots_text(lookup(group)); });
}

cb_status cb_basis_to_json(const char* group, char** out) {
  return emit(out, [&] { return dump(basis_to_json(lookup(group))); });
}

cb_status cb_basis_to_text(const char* group, char** out) {
  return emit(out, [&] { return basis_text(lookup(group)); });
}

cb_status cb_canonicalize(const char* group, const cb_options* options, cb_result** out) {
  if (!out) return fail(CB_USAGE_ERROR, "null output pointer");
  *out = nullptr;
  return guarded([&] {
    const GroupSpec& g = lookup(group);
    const cb_options o = resolved(options);
    if (is_heavy(g) && !o.heavy_ok) {
      return fail(CB_USAGE_ERROR, g.name + " is a long computation; pass heavy_ok to run it");
    }
    CanonicalizeOptions co;
    co.threads = o.threads;
    co.seed = o.seed;
    if (o.progress) {
      co.progress = [p = o.progress, u = o.user_data](int a, int n, int d) { p(a, n, d, u); };
    }
    auto r = std::make_unique<cb_result>();
    r->group = &g;
    r->canon = canonicalize_all(g, co);
    *out = r.release();
    return CB_OK;
  });
}

cb_status cb_result_from_json(const char* json, cb_result** out) {
  if (!out) return fail(CB_USAGE_ERROR, "null output pointer");
  *out = nullptr;
  if (!json) return fail(CB_USAGE_ERROR, "null input");
  return guarded([&] {
    auto r = std::make_unique<cb_result>();
    r->canon = canonicalization_from_json(parse_json(json));
    r->group = &catalog(r->canon.group);
    *out = r.release();
    return CB_OK;
  });
}

cb_status cb_result_to_json(const cb_result* result, int include_h_poly, char** out) {
  if (!result) return fail(CB_USAGE_ERROR, "null result");
  return emit(out, [&] { return dump(canonicalization_to_json(*result->group, result->canon, include_h_poly != 0)); });
}

cb_status cb_result_to_text(const cb_result* result, char** out) {
  if (!result) return fail(CB_USAGE_ERROR, "null result");
  return emit(out, [&] { return canonicalization_text(*result->group, result->canon); });
}

const char* cb_result_group(const cb_result* result) { return result ? result->canon.group.c_str() : nullptr; }

cb_status cb_normalization_to_json(const cb_result* result, char** out) {
  if (!result) return fail(CB_USAGE_ERROR, "null result");
  return emit(out, [&] { return dump(normalization_to_json(*result->group, result->canon)); });
}

cb_status cb_normalization_to_text(const cb_result* result, char** out) {
  if (!result) return fail(CB_USAGE_ERROR, "null result");
  return emit(out, [&] { return normalization_text(*result->group, result->canon); });
}

cb_status cb_result_stats_text(const cb_result* result, char** out) {
  if (!result) return fail(CB_USAGE_ERROR, "null result");
  return emit(out, [&] {
    std::ostringstream os;
    for (const auto& s : result->canon.stats) {
      os << "degree " << s.degree << ": " << s.unknowns << " unknowns, " << s.rows_used << " rows, "
         << s.verify_rounds << " verification round(s), " << std::fixed << std::setprecision(3) << s.seconds
         << " s\n";
    }
    return os.str();
  });
}

void cb_result_free(cb_result* result) { delete result; }

cb_status cb_verify(const cb_result* result, const cb_options* options, cb_report** out) {
  if (!out) return fail(CB_USAGE_ERROR, "null output pointer");
  *out = nullptr;
  if (!result) return fail(CB_USAGE_ERROR, "null result");
  return guarded([&] {
    const GroupSpec& g = *result->group;
    const cb_options o = resolved(options);
    if (is_heavy(g) && !o.heavy_ok) {
      return fail(CB_USAGE_ERROR, g.name + " is a long computation; pass heavy_ok to run it");
    }
    VerifyOptions vo;
    vo.level = o.full_checks ? CheckLevel::full : CheckLevel::fast;
    vo.seed = o.seed;
    vo.threads = o.threads;
    vo.check_invariance = o.invariance > 0 || (o.invariance < 0 && (!is_heavy(g) || heavy_env()));
    auto r = std::make_unique<cb_report>();
    r->report = verify_canonicalization(g, result->canon.records, vo);
    const bool passed = r->report.passed();
    *out = r.release();
    if (!passed) return fail(CB_VERIFICATION_FAILED, "verification failed");
    return CB_OK;
  });
}

int cb_report_passed(const cb_report* report) { return report && report->report.passed() ? 1 : 0; }

cb_status cb_report_to_json(const cb_report* report, char** out) {
  if (!report) return fail(CB_USAGE_ERROR, "null report");
  return emit(out, [&] { return dump(report_to_json(report->report)); });
}

cb_status cb_report_to_text(const cb_report* report, char** out) {
  if (!report) return fail(CB_USAGE_ERROR, "null report");
  return emit(out, [&] { return report_text(report->report); });
}

cb_status cb_report_timings_text(const cb_report* report, char** out) {
  if (!report) return fail(CB_USAGE_ERROR, "null report");
  return emit(out, [&] {
    std::ostringstream os;
    for (const auto& c : report->report.checks) {
      os << c.id << ": " << std::fixed << std::setprecision(3) << c.seconds << " s\n";
    }
    return os.str();
  });
}

void cb_report_free(cb_report* report) { delete report; }

}  // extern "C"
