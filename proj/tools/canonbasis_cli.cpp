// Command-line front end. Uses only the C interface of the library.

#include "canonbasis/canonbasis.h"

#include "CLI11.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kInternal = 3 };

struct Config {
  std::string command;
  std::string group;
  std::string format = "json";
  std::string out;
  std::string in;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  bool heavy_ok = false;
  bool h_poly = false;
  bool quiet = false;
  std::string check_level = "fast";
};

class CliError : public std::runtime_error {
 public:
  CliError(int code, const std::string& message) : std::runtime_error(message), code_(code) {}
  int code() const { return code_; }

 private:
  int code_;
};

struct StringDeleter {
  void operator()(char* s) const { cb_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct ResultDeleter {
  void operator()(cb_result* r) const { cb_result_free(r); }
};
using ResultPtr = std::unique_ptr<cb_result, ResultDeleter>;

struct ReportDeleter {
  void operator()(cb_report* r) const { cb_report_free(r); }
};
using ReportPtr = std::unique_ptr<cb_report, ReportDeleter>;

void check(cb_status status) {
  if (status != CB_OK) throw CliError(static_cast<int>(status), cb_last_error());
}

template <class F>
std::string fetch(F&& call) {
  char* raw = nullptr;
  check(call(&raw));
  OwnedString owned(raw);
  return std::string(owned.get());
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw CliError(kUsage, "cannot open '" + path.string() + "' for writing");
  f << text;
  if (!f) throw CliError(kInternal, "failed writing '" + path.string() + "'");
}

void write_output(const Config& cfg, const std::string& text) {
  if (cfg.out.empty() || cfg.out == "-") {
    std::fwrite(text.data(), 1, text.size(), stdout);
    std::fflush(stdout);
  } else {
    write_file(cfg.out, text);
  }
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw CliError(kUsage, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

struct Progress {
  std::string group;
  bool quiet = false;
};

void on_progress(int index, int rank, int degree, void* user) {
  auto* p = static_cast<Progress*>(user);
  if (p->quiet) return;
  std::fprintf(stderr, "[%s] h%d of %d: degree %d\n", p->group.c_str(), index, rank, degree);
}

cb_options make_options(const Config& cfg, Progress* progress) {
  cb_options o;
  cb_options_init(&o);
  o.threads = cfg.threads;
  o.seed = cfg.seed;
  o.heavy_ok = cfg.heavy_ok ? 1 : 0;
  o.full_checks = cfg.check_level == "full" ? 1 : 0;
  if (progress) {
    o.progress = on_progress;
    o.user_data = progress;
  }
  return o;
}

void require_group(const Config& cfg) {
  if (cfg.group.empty()) throw CliError(kUsage, cfg.command + " needs --group");
}

ResultPtr canonicalize(const Config& cfg) {
  require_group(cfg);
  Progress progress{cfg.group, cfg.quiet};
  const cb_options o = make_options(cfg, &progress);
  const auto t0 = std::chrono::steady_clock::now();
  cb_result* raw = nullptr;
  check(cb_canonicalize(cfg.group.c_str(), &o, &raw));
  ResultPtr result(raw);
  if (!cfg.quiet) {
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cerr << fetch([&](char** s) { return cb_result_stats_text(result.get(), s); });
    std::fprintf(stderr, "[%s] canonicalized in %.3f s\n", cfg.group.c_str(), secs);
  }
  return result;
}

ResultPtr load_result(const Config& cfg) {
  const std::string text = read_file(cfg.in);
  cb_result* raw = nullptr;
  check(cb_result_from_json(text.c_str(), &raw));
  ResultPtr result(raw);
  const std::string group = cb_result_group(result.get());
  if (!cfg.group.empty() && cfg.group != group) {
    throw CliError(kUsage, "--group " + cfg.group + " does not match the input file (" + group + ")");
  }
  return result;
}

// Round trip through the interchange format so verification never sees
// in-process state.
ResultPtr reload(const ResultPtr& result) {
  const std::string json = fetch([&](char** s) { return cb_result_to_json(result.get(), 1, s); });
  cb_result* raw = nullptr;
  check(cb_result_from_json(json.c_str(), &raw));
  return ResultPtr(raw);
}

bool json_format(const Config& cfg) { return cfg.format == "json"; }

int run_basis(const Config& cfg) {
  require_group(cfg);
  const char* g = cfg.group.c_str();
  write_output(cfg, json_format(cfg) ? fetch([&](char** s) { return cb_basis_to_json(g, s); })
                                     : fetch([&](char** s) { return cb_basis_to_text(g, s); }));
  return kOk;
}

int run_roots(const Config& cfg) {
  require_group(cfg);
  const char* g = cfg.group.c_str();
  write_output(cfg, json_format(cfg) ? fetch([&](char** s) { return cb_roots_to_json(g, s); })
                                     : fetch([&](char** s) { return cb_roots_to_text(g, s); }));
  return kOk;
}

int run_canonicalize(const Config& cfg) {
  ResultPtr r = canonicalize(cfg);
  write_output(cfg, json_format(cfg) ? fetch([&](char** s) { return cb_result_to_json(r.get(), cfg.h_poly, s); })
                                     : fetch([&](char** s) { return cb_result_to_text(r.get(), s); }));
  return kOk;
}

int run_normalize(const Config& cfg) {
  ResultPtr r = cfg.in.empty() ? canonicalize(cfg) : load_result(cfg);
  write_output(cfg, json_format(cfg) ? fetch([&](char** s) { return cb_normalization_to_json(r.get(), s); })
                                     : fetch([&](char** s) { return cb_normalization_to_text(r.get(), s); }));
  return kOk;
}

int run_verify(const Config& cfg) {
  ResultPtr r = cfg.in.empty() ? reload(canonicalize(cfg)) : load_result(cfg);
  const cb_options o = make_options(cfg, nullptr);
  cb_report* raw = nullptr;
  const cb_status status = cb_verify(r.get(), &o, &raw);
  if (status != CB_OK && status != CB_VERIFICATION_FAILED) check(status);
  ReportPtr report(raw);
  write_output(cfg, json_format(cfg) ? fetch([&](char** s) { return cb_report_to_json(report.get(), s); })
                                     : fetch([&](char** s) { return cb_report_to_text(report.get(), s); }));
  if (!cfg.quiet) std::cerr << fetch([&](char** s) { return cb_report_timings_text(report.get(), s); });
  if (!cb_report_passed(report.get())) {
    std::cerr << "verification failed\n";
    return kVerifyFailed;
  }
  return kOk;
}

int run_export(const Config& cfg) {
  require_group(cfg);
  if (cfg.out.empty() || cfg.out == "-") throw CliError(kUsage, "export needs --out DIRECTORY");
  const std::filesystem::path dir(cfg.out);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw CliError(kUsage, "cannot create '" + dir.string() + "': " + ec.message());
  const char* g = cfg.group.c_str();
  ResultPtr r = canonicalize(cfg);
  if (json_format(cfg)) {
    write_file(dir / "group.json", fetch([&](char** s) { return cb_group_to_json(g, s); }));
    write_file(dir / "basis.json", fetch([&](char** s) { return cb_basis_to_json(g, s); }));
    write_file(dir / "canonical.json", fetch([&](char** s) { return cb_result_to_json(r.get(), 1, s); }));
    write_file(dir / "normalization.json", fetch([&](char** s) { return cb_normalization_to_json(r.get(), s); }));
  } else {
    write_file(dir / "group.txt", fetch([&](char** s) { return cb_group_to_text(g, s); }));
    write_file(dir / "basis.txt", fetch([&](char** s) { return cb_basis_to_text(g, s); }));
    write_file(dir / "canonical.txt", fetch([&](char** s) { return cb_result_to_text(r.get(), s); }));
    write_file(dir / "normalization.txt", fetch([&](char** s) { return cb_normalization_to_text(r.get(), s); }));
  }
  write_file(dir / "roots.txt", fetch([&](char** s) { return cb_roots_to_text(g, s); }));
  return kOk;
}

int dispatch(const Config& cfg) {
  if (cfg.command == "basis") return run_basis(cfg);
  if (cfg.command == "roots") return run_roots(cfg);
  if (cfg.command == "canonicalize") return run_canonicalize(cfg);
  if (cfg.command == "normalize") return run_normalize(cfg);
  if (cfg.command == "verify") return run_verify(cfg);
  return run_export(cfg);
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  CLI::App app{"Canonical invariant bases of the reflection groups E6, E7, E8 (and D4, B3)"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  std::vector<std::string> groups;
  for (int i = 0; i < cb_group_count(); ++i) groups.emplace_back(cb_group_name(i));

  app.add_option("--group", cfg.group, "Group name")->check(CLI::IsMember(groups));
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", cfg.out, "Output file (export: directory); stdout by default");
  app.add_option("--in", cfg.in, "Canonicalization JSON to read (normalize, verify)");
  app.add_option("--seed", cfg.seed, "Seed for randomized sampling and checks");
  app.add_option("--threads", cfg.threads, "Worker threads")->check(CLI::Range(1u, 256u));
  app.add_flag("--heavy-ok", cfg.heavy_ok, "Allow the long E8 computation");
  app.add_option("--check-level", cfg.check_level, "Verification depth")->check(CLI::IsMember({"fast", "full"}));
  app.add_flag("--h-poly", cfg.h_poly, "Include expanded h polynomials in canonicalize output");
  app.add_flag("--quiet", cfg.quiet, "No progress output");

  const std::pair<const char*, const char*> commands[] = {
      {"basis", "Print the starting invariant bases p and q"},
      {"roots", "Print the positive roots"},
      {"canonicalize", "Compute the canonical basis transformation"},
      {"normalize", "Print the normalization factors 1/||h_a||"},
      {"verify", "Verify a canonicalization (computed, or read with --in)"},
      {"export", "Write group, basis, canonical basis and normalization files to a directory"},
  };
  for (const auto& [name, help] : commands) {
    app.add_subcommand(name, help)->callback([&cfg, name = std::string(name)] { cfg.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    return dispatch(cfg);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternal;
  }
}
