#pragma once

// Batch front end: parse job descriptions, run the analysis commands in
// dependency order, serialize the results. The json document produced by
// run_jobs is the single source of truth; both emitters render it, so a
// report round-trips through its own json form byte for byte.

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "gkz/exactla.hpp"

namespace gkz::report {

using json = nlohmann::ordered_json;

// Bumped whenever the emitted document shape changes.
inline constexpr const char* kSchemaVersion = "gkz-report/1";

// Command names in dependency order. "report" is accepted as shorthand for
// all of them. Per-parameter commands come last; they reuse nothing from the
// earlier ones but read much better after the matrix-level sections.
const std::vector<std::string>& all_commands();

// Validates, deduplicates, expands "report", and sorts into dependency
// order. Throws ParseError on an unknown name or an empty selection.
std::vector<std::string> canonical_commands(const std::vector<std::string>& names);

struct ParseError : std::runtime_error {
  int line = 0;    // 1-based; 0 when no position applies (json bodies, flags)
  int column = 0;  // 1-based byte offset in the line
  ParseError(int l, int c, const std::string& msg);
};

struct JobSpec {
  IntMat matrix;
  std::vector<RatVec> parameters;     // each of length matrix.rows()
  std::vector<std::string> commands;  // canonical order, nonempty
};

// Text bodies are line oriented: "matrix d n" followed by d rows of n
// integers, then any number of "beta q1 .. qd" lines with exact rationals
// like 10/3; '#' starts a comment; a fresh "matrix" line starts a new job.
// A body whose first nonspace byte is '{' or '[' is read as json instead:
// either {"jobs": [...]}, a bare job object, or an array of job objects,
// each {"matrix": [[...]], "beta": [["p/q", ...], ...]}.
std::vector<JobSpec> parse_jobs(const std::string& text,
                                const std::vector<std::string>& commands);

struct AnalysisReport {
  json doc;
};

// Runs every job. parallel > 1 evaluates that many jobs concurrently; the
// output order is the input order either way, and the documents are
// identical apart from elapsed_ms. Unsupported regimes and inconsistent
// parameters land in the per-command results; nothing aborts the batch.
AnalysisReport run_jobs(const std::vector<JobSpec>& jobs, int parallel = 1);

std::string emit_json(const AnalysisReport& r);
std::string emit_text(const AnalysisReport& r);

}  // namespace gkz::report
