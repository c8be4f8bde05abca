// nlhorn: Newell-Littlewood positivity toolkit.
//
// Subcommands: lr, nl, tau (one-shot arithmetic), gen (inequality families),
// check (one triple), verify / saturate (exhaustive scans), redundant
// (implied-inequality filter). Exit codes: 0 clean, 1 findings, 2 usage or
// parse failure, 3 scale guard.

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "nlhorn/errors.hpp"
#include "nlhorn/inequalities.hpp"
#include "nlhorn/lr.hpp"
#include "nlhorn/nl.hpp"
#include "nlhorn/records.hpp"
#include "nlhorn/verify.hpp"
#include "nlhorn/version.hpp"

namespace fs = std::filesystem;
using namespace nlhorn;

namespace {

struct Options {
  int n = 2;
  long long max_size = 8;
  int t_max = 2;
  std::vector<std::string> families;
  int jobs = 1;
  std::string cache;
  std::string out;
  std::string format = "records";
  bool regen = false;
  bool rowcol = false;
  bool orbits = false;
  bool force = false;
  bool progress = false;
};

fs::path cache_root(const Options& opt) {
  if (!opt.cache.empty()) return opt.cache;
  if (const char* env = std::getenv("NLHORN_CACHE"); env && *env) return env;
  return ".nlhorn-cache";
}

fs::path cache_file(const Options& opt, Family f) {
  return cache_root(opt) / ("g" + std::to_string(opt.n) + "-" + std::string(family_tag(f)) +
                            "-v" + std::to_string(kFormatVersion) + ".records");
}

std::vector<Family> parse_families(const Options& opt) {
  std::vector<std::string> tags = opt.families;
  if (tags.empty()) tags.push_back("extended");
  std::set<Family> out;
  for (const std::string& tag : tags) {
    if (tag == "all") {
      out.insert(kAllFamilies.begin(), kAllFamilies.end());
      continue;
    }
    auto f = family_from_tag(tag);
    if (!f) throw ParseError("unknown family '" + tag + "'");
    out.insert(*f);
  }
  return {out.begin(), out.end()};
}

void guard_scale(const Options& opt) {
  if (opt.n >= 5 && !opt.force)
    throw ScaleGuardError("n >= 5 is expensive; pass --force to run anyway");
}

InequalitySet load_or_generate(Family f, const Options& opt) {
  const fs::path path = cache_file(opt, f);
  if (!opt.regen && fs::exists(path)) {
    try {
      InequalitySet set = set_from_records(read_file(path));
      if (set.n == opt.n && set.family == family_tag(f)) return set;
    } catch (const ParseError&) {
      // stale or corrupt cache entry; fall through and rebuild it
    }
  }
  InequalitySet set = generate_family(f, opt.n, opt.jobs);
  write_file_atomic(path, to_records(set));
  return set;
}

InequalitySet load_families(const Options& opt) {
  std::vector<InequalitySet> sets;
  for (Family f : parse_families(opt)) sets.push_back(load_or_generate(f, opt));
  return sets.size() == 1 ? std::move(sets.front()) : merge_sets(sets);
}

// one representative per S3 orbit: the record with the least vector
InequalitySet collapse_orbits(const InequalitySet& in) {
  InequalitySet out;
  out.n = in.n;
  out.family = in.family;
  std::set<std::vector<std::int8_t>> skip;
  for (const IneqRecord& r : in.records) {
    if (skip.count(r.coeffs)) continue;
    out.records.push_back(r);
    for (const auto& img : s3_images(r.coeffs, in.n)) skip.insert(img);
  }
  return out;
}

void emit(const std::string& text, const Options& opt) {
  if (opt.out.empty()) {
    std::cout << text;
    return;
  }
  write_file_atomic(opt.out, text);
}

std::string render(const InequalitySet& set, const Options& opt) {
  return opt.format == "csv" ? to_csv(set) : to_records(set);
}

std::string render(const ScanReport& report, const Options& opt) {
  return opt.format == "csv" ? to_csv(report) : to_records(report);
}

ProgressFn progress_fn(const Options& opt) {
  if (!opt.progress) return {};
  return [](long long done, long long total) {
    const long long step = total < 100 ? 1 : total / 100;
    if (done % step && done != total) return;
    std::fprintf(stderr, "\r%3lld%% (%lld/%lld)", 100 * done / total, done, total);
    if (done == total) std::fputc('\n', stderr);
  };
}

bool has_findings(const ScanReport& r) {
  return !r.counterexamples.empty() || !r.breaches.empty();
}

int run(const Options& opt, CLI::App& app, const std::vector<std::string>& triple_args) {
  if (app.got_subcommand("lr") || app.got_subcommand("nl")) {
    const Partition mu = Partition::parse(triple_args[0]);
    const Partition nu = Partition::parse(triple_args[1]);
    const Partition la = Partition::parse(triple_args[2]);
    const long long v = app.got_subcommand("lr") ? lr_coefficient(mu, nu, la)
                                                 : newell_littlewood(mu, nu, la);
    std::cout << v << '\n';
    return 0;
  }
  if (app.got_subcommand("tau")) {
    std::cout << tau(IndexSet::parse(triple_args[0])).str() << '\n';
    return 0;
  }
  if (app.got_subcommand("gen")) {
    guard_scale(opt);
    InequalitySet set = load_families(opt);
    if (opt.orbits) set = collapse_orbits(set);
    emit(render(set, opt), opt);
    return 0;
  }
  if (app.got_subcommand("check")) {
    guard_scale(opt);
    const InequalitySet set = load_families(opt);
    const TripleVerdict v = check_triple(Partition::parse(triple_args[0]),
                                         Partition::parse(triple_args[1]),
                                         Partition::parse(triple_args[2]), set);
    const bool breach = v.nl_pos && !v.violated.empty();
    const bool hole = v.parity && !v.nl_pos && v.violated.empty();
    std::cout << "parity: " << (v.parity ? "yes" : "no") << '\n';
    std::cout << "nl_positive: " << (v.nl_pos ? "yes" : "no") << '\n';
    std::cout << "violated: ";
    if (v.violated.empty()) {
      std::cout << "none\n";
    } else {
      for (std::size_t i = 0; i < v.violated.size(); ++i)
        std::cout << (i ? "," : "") << v.violated[i];
      std::cout << '\n';
    }
    std::cout << "classification: "
              << (breach ? "breach" : hole ? "counterexample" : "consistent") << '\n';
    return breach || hole ? 1 : 0;
  }
  if (app.got_subcommand("verify")) {
    guard_scale(opt);
    const InequalitySet set = load_families(opt);
    std::string text;
    bool findings = false;
    const ScanReport conj = scan_conjecture(opt.n, opt.max_size, set, opt.jobs,
                                            progress_fn(opt));
    text += render(conj, opt);
    findings = findings || has_findings(conj);
    if (opt.rowcol) {
      const ScanReport rc = scan_rowcol(opt.n, opt.max_size, opt.jobs, progress_fn(opt));
      text += render(rc, opt);
      findings = findings || has_findings(rc);
    }
    emit(text, opt);
    return findings ? 1 : 0;
  }
  if (app.got_subcommand("saturate")) {
    guard_scale(opt);
    const ScanReport report = scan_saturation(opt.n, opt.max_size, opt.t_max, opt.jobs,
                                              progress_fn(opt));
    emit(render(report, opt), opt);
    return has_findings(report) ? 1 : 0;
  }
  if (app.got_subcommand("redundant")) {
    const InequalitySet set = load_families(opt);
    emit(render(filter_redundant(set), opt), opt);
    return 0;
  }
  return 2;  // unreachable: a subcommand is required
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string(kToolName) + " " + kToolVersion +
               ": Newell-Littlewood numbers and their positivity inequalities"};
  app.require_subcommand(1);

  Options opt;
  std::vector<std::string> triple_args(3);

  auto add_common = [&](CLI::App* cmd, bool sized) {
    cmd->add_option("--n", opt.n, "number of parts the scan or family is indexed by");
    if (sized) cmd->add_option("--max-size", opt.max_size, "largest partition size scanned");
    cmd->add_option("--family", opt.families,
                    "inequality family: horn|extended|weyl|subset-sum|variant|all (repeatable)");
    cmd->add_option("--jobs", opt.jobs, "worker threads")->check(CLI::PositiveNumber);
    cmd->add_option("--cache", opt.cache, "cache directory (default $NLHORN_CACHE or .nlhorn-cache)");
    cmd->add_option("--out", opt.out, "write output to this file instead of stdout");
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"records", "csv"}));
    cmd->add_flag("--regen", opt.regen, "ignore cached families and regenerate");
    cmd->add_flag("--force", opt.force, "override the n >= 5 scale guard");
    cmd->add_flag("--progress", opt.progress, "stream scan progress to stderr");
  };

  auto* lr_cmd = app.add_subcommand("lr", "Littlewood-Richardson coefficient of three partitions");
  lr_cmd->add_option("mu", triple_args[0], "e.g. \"2,1\" (empty string for the empty partition)");
  lr_cmd->add_option("nu", triple_args[1], "");
  lr_cmd->add_option("lambda", triple_args[2], "");

  auto* nl_cmd = app.add_subcommand("nl", "Newell-Littlewood number of three partitions");
  nl_cmd->add_option("mu", triple_args[0], "");
  nl_cmd->add_option("nu", triple_args[1], "");
  nl_cmd->add_option("lambda", triple_args[2], "");

  auto* tau_cmd = app.add_subcommand("tau", "partition attached to an index set, e.g. \"{2,4}\"");
  tau_cmd->add_option("set", triple_args[0], "")->required();

  auto* gen_cmd = app.add_subcommand("gen", "generate inequality families");
  add_common(gen_cmd, false);
  gen_cmd->add_flag("--orbits", opt.orbits, "collapse the listing to one vector per S3 orbit");

  auto* check_cmd = app.add_subcommand("check", "classify one triple against a family");
  check_cmd->add_option("mu", triple_args[0], "")->required();
  check_cmd->add_option("nu", triple_args[1], "");
  check_cmd->add_option("lambda", triple_args[2], "");
  add_common(check_cmd, false);

  auto* verify_cmd = app.add_subcommand("verify", "scan all small triples for conjecture holes");
  add_common(verify_cmd, true);
  verify_cmd->add_flag("--rowcol", opt.rowcol, "also cross-check the row/column criteria");

  auto* saturate_cmd = app.add_subcommand("saturate", "scan for saturation failures");
  add_common(saturate_cmd, true);
  saturate_cmd->add_option("--t-max", opt.t_max, "largest stretch factor")
      ->check(CLI::Range(2, 16));

  auto* redundant_cmd = app.add_subcommand("redundant", "drop implied inequalities (n <= 3)");
  add_common(redundant_cmd, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    return run(opt, app, triple_args);
  } catch (const ScaleGuardError& e) {
    std::cerr << "scale guard: " << e.what() << '\n';
    return 3;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
