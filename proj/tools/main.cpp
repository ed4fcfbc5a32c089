#include <chrono>
#include <iomanip>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "sudiag/closure.hpp"
#include "sudiag/errors.hpp"
#include "sudiag/projection.hpp"
#include "sudiag/records.hpp"
#include "sudiag/verify.hpp"

namespace {

struct CommonOptions {
  std::string format = "text";
  int threads = 0;  // 0 = all available parallelism, 1 = sequential
  bool stats = false;
  bool noSign = false;
};

using Clock = std::chrono::steady_clock;

double millisecondsSince(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void printStats(std::size_t terms, double ms) {
  std::cerr << "sudiag: " << terms << " terms, " << std::fixed
            << std::setprecision(1) << ms << " ms\n";
}

sudiag::Diagonal computeDiagonal(bool assoc, int n, int threads) {
  return assoc ? sudiag::diagonalOfAssociahedron(n, threads)
               : sudiag::diagonalOfPermutahedron(n, threads);
}

int runEmit(int n, bool assoc, const CommonOptions& opt) {
  const auto format = sudiag::parseRecordFormat(opt.format);
  if (!format) {
    std::cerr << "error: unknown format '" << opt.format << "'\n";
    return 1;
  }
  const bool digitBound = *format == sudiag::RecordFormat::Short ||
                          *format == sudiag::RecordFormat::Matrix;
  if (digitBound && n >= 10) {
    std::cerr << "error: --format " << opt.format
              << " is ambiguous once labels reach two digits (n >= 10)\n";
    return 1;
  }
  const bool signable = *format == sudiag::RecordFormat::Text ||
                        *format == sudiag::RecordFormat::Short;
  if (opt.noSign && !signable) {
    std::cerr << "error: --no-sign applies only to the text and short formats\n";
    return 1;
  }

  const auto start = Clock::now();
  const sudiag::Diagonal d = computeDiagonal(assoc, n, opt.threads);
  sudiag::emitRecords(d, *format, std::cout, !opt.noSign);
  std::cout.flush();
  if (opt.stats) printStats(d.termCount(), millisecondsSince(start));
  return 0;
}

int runCount(const std::string& kind, int n, const CommonOptions& opt) {
  const auto start = Clock::now();
  const sudiag::Diagonal d = computeDiagonal(kind == "assoc", n, opt.threads);
  std::cout << d.termCount() << '\n';
  if (opt.stats) printStats(d.termCount(), millisecondsSince(start));
  return 0;
}

int runVerify(int n, const CommonOptions& opt) {
  const auto start = Clock::now();
  const sudiag::VerifyReport report = sudiag::verifyDiagonal(n, opt.threads);
  std::cout << "verify n=" << report.n << ": " << report.permutahedronTerms
            << " permutahedron terms, " << report.associahedronTerms
            << " associahedron terms\n";
  for (const auto& check : report.checks)
    std::cout << (check.pass ? "PASS " : "FAIL ") << check.name << " ("
              << check.detail << ")\n";
  if (opt.stats) printStats(report.permutahedronTerms, millisecondsSince(start));
  return report.allPass() ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);

  CLI::App app{"Enumerates the Saneblidze-Umble diagonal of the permutahedron "
               "P_n and, via the Tonks projection, of the associahedron K_n"};
  app.require_subcommand(1);

  CommonOptions opt;
  int permN = 0;
  int assocN = 0;
  int countN = 0;
  int verifyN = 0;
  std::string countKind;

  const auto addThreads = [&opt](CLI::App* cmd) {
    cmd->add_option("--threads", opt.threads,
                    "worker threads (0 = all available, 1 = sequential)");
    cmd->add_flag("--stats", opt.stats,
                  "print term count and wall-clock time to stderr");
  };
  const auto addFormatting = [&opt, &addThreads](CLI::App* cmd) {
    cmd->add_option("--format", opt.format,
                    "output format: text|short|matrix|jsonl|tsv");
    cmd->add_flag("--no-sign", opt.noSign,
                  "omit sign prefixes (text and short only)");
    addThreads(cmd);
  };

  CLI::App* perm = app.add_subcommand("perm", "emit the permutahedron diagonal");
  perm->add_option("n", permN, "ground set size")->required();
  addFormatting(perm);

  CLI::App* assoc = app.add_subcommand("assoc", "emit the associahedron diagonal");
  assoc->add_option("n", assocN, "ground set size")->required();
  addFormatting(assoc);

  CLI::App* count = app.add_subcommand("count", "print only the term count");
  count->add_option("kind", countKind, "perm or assoc")
      ->required()
      ->check(CLI::IsMember({"perm", "assoc"}));
  count->add_option("n", countN, "ground set size")->required();
  addThreads(count);

  CLI::App* verify = app.add_subcommand("verify", "run the invariant suite");
  verify->add_option("n", verifyN, "ground set size")->required();
  addThreads(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (perm->parsed()) return runEmit(permN, false, opt);
    if (assoc->parsed()) return runEmit(assocN, true, opt);
    if (count->parsed()) return runCount(countKind, countN, opt);
    if (verify->parsed()) return runVerify(verifyN, opt);
  } catch (const sudiag::SizeCapError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
