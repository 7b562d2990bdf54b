#ifndef FTHRESH_REPORT_HPP
#define FTHRESH_REPORT_HPP

#include <json.hpp>

#include "fthresh/bertini.hpp"
#include "fthresh/frobenius.hpp"
#include "fthresh/resolution.hpp"
#include "fthresh/ringfile.hpp"

namespace fthresh {

using Json = nlohmann::json;

inline constexpr int kReportSchemaVersion = 1;

struct ReportOptions {
  int maxE = 2;
  std::uint64_t seed = 0;
  std::int64_t budgetCells = 10000000;
  std::vector<std::string> withGens;  // extra generators for `compatible`
};

struct CommandResult {
  Json report;
  int exitCode = 0;
  std::string summary;
};

// cmd in {check, fpt, nu, ainv, betti, splitting, compatible, sequence,
// verify}. Throws the module errors; the CLI maps them to exit codes.
CommandResult runCommand(const std::string& cmd, const RingFile& ring,
                         const ReportOptions& opt);

Json rationalJson(const Rational& r);

struct CorpusEntry {
  std::string name;
  std::uint32_t p;
  std::vector<std::string> vars;
  std::vector<std::string> gens;
};

// Built-in F-pure example rings used by `verify --corpus` and the tests.
const std::vector<CorpusEntry>& builtinCorpus();
RingFile corpusRing(const CorpusEntry& entry);

}  // namespace fthresh

#endif
