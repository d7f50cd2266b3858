#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "tspectra/io.hpp"
#include "tspectra/partition.hpp"
#include "tspectra/recipes.hpp"
#include "tspectra/spectrum.hpp"
#include "tspectra/witness.hpp"

namespace {

using namespace tspectra;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitBadArgs = 2;
constexpr int kExitResourceLimit = 3;

i64 spectrum_ceiling() {
  if (const char* env = std::getenv("TS_SPECTRA_LIMIT")) {
    char* end = nullptr;
    long long parsed = std::strtoll(env, &end, 10);
    if (end && *end == '\0' && parsed > 0) return parsed;
  }
  return 85;
}

int write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text << "\n";
    return kExitOk;
  }
  std::ofstream out(path);
  if (!out) {
    std::cerr << "cannot write to " << path << "\n";
    return kExitBadArgs;
  }
  out << text << "\n";
  return kExitOk;
}

bool parse_range(const std::string& text, i64& lo, i64& hi) {
  auto sep = text.find("..");
  if (sep == std::string::npos) return false;
  try {
    lo = std::stoll(text.substr(0, sep));
    hi = std::stoll(text.substr(sep + 2));
  } catch (...) {
    return false;
  }
  return lo <= hi;
}

std::string human_spectrum(const SpectrumReport& report) {
  std::string out = "n = " + std::to_string(report.n) + ", " +
                    std::to_string(report.values.size()) + " distinct values\n";
  out += "values:";
  for (i64 v : report.values) out += " " + std::to_string(v);
  if (report.multiplicities) {
    out += "\nmultiplicities:";
    for (const auto& [value, count] : *report.multiplicities) {
      out += " " + std::to_string(value) + ":" + std::to_string(count);
    }
  }
  if (report.witnesses) {
    out += "\nwitnesses:";
    for (const auto& [value, partition] : *report.witnesses) {
      out += "\n  " + std::to_string(value) + " <-";
      for (i64 part : partition.parts()) out += " " + std::to_string(part);
    }
  }
  return out;
}

int cmd_spectrum(i64 n, bool witnesses, bool multiplicities,
                 const std::string& format, bool limit_override, int threads,
                 const std::string& output) {
  if (n < 1) {
    std::cerr << "n must be >= 1\n";
    return kExitBadArgs;
  }
  SpectrumReport report;
  if (multiplicities) {
    auto result = spectrum_with_multiplicity(n);
    if (!result.ok()) {
      std::cerr << result.error().message << "\n";
      return result.error().code == Errc::ResourceLimit ? kExitResourceLimit
                                                        : kExitBadArgs;
    }
    report = *result;
  }
  if (!multiplicities || witnesses) {
    BruteOptions opts;
    opts.with_witnesses = witnesses;
    opts.threads = threads;
    opts.limit_override = limit_override;
    opts.ceiling = spectrum_ceiling();
    auto result = brute_spectrum(n, opts);
    if (!result.ok()) {
      std::cerr << result.error().message << "\n";
      return result.error().code == Errc::ResourceLimit ? kExitResourceLimit
                                                        : kExitBadArgs;
    }
    if (multiplicities) {
      report.witnesses = result->witnesses;
    } else {
      report = *result;
    }
  }
  std::string text;
  if (format == "json") text = to_json(report).dump();
  else if (format == "csv") text = to_csv(report);
  else text = human_spectrum(report);
  return write_output(text, output);
}

int cmd_witness(i64 n, i64 e, bool as_json, const std::string& output) {
  if (n < 1 || std::llabs(e) > choose2(n)) {
    std::cerr << "require n >= 1 and |e| <= C(n,2)\n";
    return kExitBadArgs;
  }
  auto cert = witness(n, e);
  if (!cert.ok()) {
    if (cert.error().code == Errc::BadArgument) {
      std::cerr << cert.error().message << "\n";
      return kExitBadArgs;
    }
    std::cerr << cert.error().message << "\n";
    return kExitVerifyFail;
  }
  std::string text;
  if (as_json) {
    text = to_json(*cert).dump();
  } else {
    text = "target " + std::to_string(e) + " at n = " + std::to_string(n) +
           "\npartition:";
    for (i64 part : cert->partition.parts()) text += " " + std::to_string(part);
    text += "\nderivation: " + derivation_summary(*cert);
    text += cert->verified ? "\nverified" : "\nNOT VERIFIED";
  }
  int rc = write_output(text, output);
  if (rc != kExitOk) return rc;
  return cert->verified ? kExitOk : kExitVerifyFail;
}

int verify_coverage(bool with_negatives, i64 lo_n, i64 hi_n,
                    const std::string& report_path) {
  if (lo_n < 15) {
    std::cerr << "coverage targets need n >= 15\n";
    return kExitBadArgs;
  }
  json results = json::array();
  bool ok = true;
  for (i64 n = lo_n; n <= hi_n; ++n) {
    i64 hi = constructive_bound(n);
    i64 lo = with_negatives ? -hi : 0;
    CoverageReport cov = coverage(n, lo, hi);
    ok = ok && cov.missing.empty();
    json entry;
    entry["n"] = n;
    entry["lo"] = lo;
    entry["hi"] = hi;
    entry["covered"] = cov.covered;
    entry["missing"] = cov.missing;
    results.push_back(std::move(entry));
    std::cerr << "n=" << n << " covered " << cov.covered << "/"
              << (hi - lo + 1) << "\n";
  }
  json report;
  report["target"] = with_negatives ? "theorem-xx" : "theorem-x";
  report["ok"] = ok;
  report["results"] = std::move(results);
  int rc = write_output(report.dump(), report_path);
  if (rc != kExitOk) return rc;
  return ok ? kExitOk : kExitVerifyFail;
}

int verify_conjecture(i64 lo_n, i64 hi_n, bool limit_override, int threads,
                      const std::string& report_path) {
  json results = json::array();
  bool ok = true;
  for (i64 n = lo_n; n <= hi_n; ++n) {
    BruteOptions opts;
    opts.threads = threads;
    opts.limit_override = limit_override;
    opts.ceiling = spectrum_ceiling();
    auto spectrum = brute_spectrum(n, opts);
    if (!spectrum.ok()) {
      std::cerr << spectrum.error().message << "\n";
      return spectrum.error().code == Errc::ResourceLimit ? kExitResourceLimit
                                                          : kExitBadArgs;
    }
    i64 edge = choose2(floor_div(2 * n + 1, 3));
    std::vector<i64> missing;
    size_t at = 0;
    const auto& values = spectrum->values;
    for (i64 want = -edge; want <= edge; ++want) {
      while (at < values.size() && values[at] < want) ++at;
      if (at >= values.size() || values[at] != want) missing.push_back(want);
    }
    ok = ok && missing.empty();
    json entry;
    entry["n"] = n;
    entry["interval"] = json::array({-edge, edge});
    entry["distinct_values"] = values.size();
    entry["partitions_scanned"] = partition_count(n);
    entry["missing"] = missing;
    results.push_back(std::move(entry));
    std::cerr << "n=" << n << " checked [" << -edge << ", " << edge << "], "
              << missing.size() << " missing\n";
  }
  json report;
  report["target"] = "conjecture";
  report["ok"] = ok;
  report["results"] = std::move(results);
  int rc = write_output(report.dump(), report_path);
  if (rc != kExitOk) return rc;
  return ok ? kExitOk : kExitVerifyFail;
}

int verify_inequalities(i64 lo_n, i64 hi_n, const std::string& report_path) {
  if (lo_n < 76) {
    std::cerr << "the closing inequalities are stated for n >= 76\n";
    return kExitBadArgs;
  }
  std::vector<i64> failures;
  for (i64 n = lo_n; n <= hi_n; ++n) {
    if (!theorem_c_inequalities(n)) failures.push_back(n);
  }
  json report;
  report["target"] = "inequalities";
  report["ok"] = failures.empty();
  report["range"] = json::array({lo_n, hi_n});
  report["failures"] = failures;
  int rc = write_output(report.dump(), report_path);
  if (rc != kExitOk) return rc;
  return failures.empty() ? kExitOk : kExitVerifyFail;
}

int verify_errata(i64 hi_n, const std::string& report_path) {
  std::cerr << "sweeping every recipe up to n = " << hi_n << "\n";
  auto errata = sweep_recipes(hi_n);
  std::string lines;
  bool only_known = true;
  for (const ErrataRecord& record : errata) {
    lines += to_json(record).dump();
    lines += "\n";
    if (record.failure != "non_monotone") only_known = false;
  }
  if (!lines.empty()) lines.pop_back();
  int rc = write_output(lines, report_path);
  if (rc != kExitOk) return rc;
  std::cerr << errata.size() << " errata records, "
            << (only_known ? "all" : "NOT all")
            << " of the known non-monotone class\n";
  return only_known ? kExitOk : kExitVerifyFail;
}

int cmd_oracle(i64 n, bool multiplicities, const std::string& format,
               const std::string& output) {
  auto numeric = cayley_adjacency_spectrum(n);
  if (!numeric.ok()) {
    std::cerr << numeric.error().message << "\n";
    return numeric.error().code == Errc::ResourceLimit ? kExitResourceLimit
                                                       : kExitVerifyFail;
  }
  auto exact = brute_spectrum(n);
  if (!exact.ok()) {
    std::cerr << exact.error().message << "\n";
    return kExitVerifyFail;
  }
  bool agree = numeric->values == exact->values;
  if (multiplicities && numeric->multiplicities) {
    auto by_dimension = spectrum_with_multiplicity(n);
    agree = agree && by_dimension.ok() &&
            *numeric->multiplicities == *by_dimension->multiplicities;
  }
  json report;
  report["n"] = n;
  report["adjacency"] = to_json(*numeric);
  report["partitions"] = to_json(*exact);
  report["agree"] = agree;
  std::string text = format == "json"
                         ? report.dump()
                         : "adjacency and partition spectra " +
                               std::string(agree ? "agree" : "DISAGREE") +
                               " for n = " + std::to_string(n);
  int rc = write_output(text, output);
  if (rc != kExitOk) return rc;
  return agree ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact spectra of the all-transpositions Cayley graph"};
  app.require_subcommand(1);

  int threads = static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;
  app.add_option("--threads", threads, "parallel fan-out cap");

  // spectrum
  i64 spec_n = 0;
  bool spec_wit = false, spec_mult = false, spec_override = false;
  std::string spec_format = "human", spec_output;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "distinct eigenvalues for one n");
  spectrum_cmd->add_option("n", spec_n, "group degree")->required();
  spectrum_cmd->add_flag("--witnesses", spec_wit, "attach one partition per value");
  spectrum_cmd->add_flag("--multiplicities", spec_mult, "attach multiplicities (n <= 12)");
  spectrum_cmd->add_option("--format", spec_format, "json | csv | human")
      ->check(CLI::IsMember({"json", "csv", "human"}));
  spectrum_cmd->add_flag("--limit-override", spec_override, "ignore the n ceiling");
  spectrum_cmd->add_option("--output,-o", spec_output, "write to file");

  // witness
  i64 wit_n = 0, wit_e = 0;
  bool wit_json = false;
  std::string wit_output;
  auto* witness_cmd = app.add_subcommand("witness", "certified partition for (n, e)");
  witness_cmd->add_option("n", wit_n)->required();
  witness_cmd->add_option("e", wit_e)->required();
  witness_cmd->add_flag("--json", wit_json, "print the certificate as JSON");
  witness_cmd->add_option("--output,-o", wit_output, "write to file");

  // verify
  std::string verify_target, verify_report;
  i64 verify_n = -1;
  std::string verify_range;
  bool verify_override = false;
  auto* verify_cmd = app.add_subcommand("verify", "reproduce the interval-coverage claims");
  verify_cmd->add_option("target", verify_target,
                         "theorem-x | theorem-xx | conjecture | inequalities | errata")
      ->required()
      ->check(CLI::IsMember({"theorem-x", "theorem-xx", "conjecture",
                             "inequalities", "errata"}));
  verify_cmd->add_option("--n", verify_n, "single n");
  verify_cmd->add_option("--n-range", verify_range, "inclusive range A..B");
  verify_cmd->add_option("--report", verify_report, "write the report here");
  verify_cmd->add_flag("--limit-override", verify_override, "ignore the n ceiling");

  // oracle
  i64 oracle_n = 0;
  bool oracle_mult = false;
  std::string oracle_format = "human", oracle_output;
  auto* oracle_cmd = app.add_subcommand("oracle", "adjacency-matrix cross-check (n <= 6)");
  oracle_cmd->add_option("n", oracle_n)->required();
  oracle_cmd->add_flag("--multiplicities", oracle_mult, "compare multiplicities too");
  oracle_cmd->add_option("--format", oracle_format, "json | human")
      ->check(CLI::IsMember({"json", "human"}));
  oracle_cmd->add_option("--output,-o", oracle_output, "write to file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      app.exit(e);
      return kExitOk;
    }
    std::cerr << e.what() << "\n";
    return kExitBadArgs;
  }

  if (spectrum_cmd->parsed()) {
    return cmd_spectrum(spec_n, spec_wit, spec_mult, spec_format, spec_override,
                        threads, spec_output);
  }
  if (witness_cmd->parsed()) {
    return cmd_witness(wit_n, wit_e, wit_json, wit_output);
  }
  if (verify_cmd->parsed()) {
    i64 lo = verify_n, hi = verify_n;
    if (!verify_range.empty() && !parse_range(verify_range, lo, hi)) {
      std::cerr << "bad --n-range, expected A..B\n";
      return kExitBadArgs;
    }
    if (verify_target == "errata") {
      if (verify_range.empty() && verify_n < 0) hi = 200;
      return verify_errata(hi, verify_report);
    }
    if (verify_range.empty() && verify_n < 0) {
      std::cerr << "pass --n or --n-range\n";
      return kExitBadArgs;
    }
    if (verify_target == "theorem-x") return verify_coverage(false, lo, hi, verify_report);
    if (verify_target == "theorem-xx") return verify_coverage(true, lo, hi, verify_report);
    if (verify_target == "conjecture") {
      return verify_conjecture(lo, hi, verify_override, threads, verify_report);
    }
    return verify_inequalities(lo, hi, verify_report);
  }
  return cmd_oracle(oracle_n, oracle_mult, oracle_format, oracle_output);
}
