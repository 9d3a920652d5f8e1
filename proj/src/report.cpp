#include "gkz/report.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <limits>
#include <sstream>

#include "gkz/gkzan.hpp"
#include "gkz/polycone.hpp"
#include "gkz/semigrp.hpp"
#include "gkz/toricgb.hpp"

namespace gkz::report {

namespace {

// json numbers are 64-bit; wider integers travel as decimal strings so the
// document stays exact. Rationals are always "p/q" strings, never floats.
json int_json(const Int& v) {
  static const Int lo = std::numeric_limits<long long>::min();
  static const Int hi = std::numeric_limits<long long>::max();
  if (v >= lo && v <= hi) return static_cast<long long>(v);
  return v.str();
}

std::string rat_str(const Rat& q) { return q.str(); }

json ivec_json(const IntVec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(int_json(x));
  return a;
}

json rvec_json(const RatVec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(rat_str(x));
  return a;
}

json mat_json(const IntMat& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(ivec_json(m.row(i)));
  return a;
}

json cols_json(const std::vector<int>& cols) {
  json a = json::array();
  for (int c : cols) a.push_back(c);
  return a;
}

json points_json(const std::vector<IntVec>& pts) {
  json a = json::array();
  for (const auto& p : pts) a.push_back(ivec_json(p));
  return a;
}

json degree_set_json(const DegreeSet& ds) {
  json comps = json::array();
  for (const auto& c : ds.components) {
    comps.push_back(json{{"shift", ivec_json(c.shift)},
                         {"directions", points_json(c.directions)},
                         {"face_cols", cols_json(c.face_cols)}});
  }
  return json{{"points", points_json(ds.points)}, {"components", comps}};
}

// ---------------------------------------------------------------- parsing

struct Tok {
  std::string text;
  int col = 0;  // 1-based
};

// '#' starts a comment; fields split on blanks.
std::vector<Tok> tokenize(const std::string& line) {
  std::vector<Tok> out;
  std::size_t end = line.find('#');
  if (end == std::string::npos) end = line.size();
  std::size_t i = 0;
  while (i < end) {
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < end && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

bool parse_int(const std::string& s, Int& out) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) return false;
  for (std::size_t k = i; k < s.size(); ++k)
    if (s[k] < '0' || s[k] > '9') return false;
  out = Int(s);
  return true;
}

// p or p/q with q a positive integer.
bool parse_rat(const std::string& s, Rat& out, std::string& why) {
  std::size_t slash = s.find('/');
  if (slash == std::string::npos) {
    Int n;
    if (!parse_int(s, n)) {
      why = "malformed rational '" + s + "' (expected p or p/q)";
      return false;
    }
    out = Rat(n);
    return true;
  }
  Int n, d;
  if (!parse_int(s.substr(0, slash), n) || !parse_int(s.substr(slash + 1), d)) {
    why = "malformed rational '" + s + "' (expected p or p/q)";
    return false;
  }
  if (d <= 0) {
    why = "denominator must be a positive integer in '" + s + "'";
    return false;
  }
  out = Rat(n, d);
  return true;
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  return lines;
}

constexpr std::size_t kDimCap = 512;  // rows/cols sanity cap for typo safety

std::vector<JobSpec> parse_text(const std::string& text,
                                const std::vector<std::string>& commands) {
  std::vector<JobSpec> jobs;
  auto lines = split_lines(text);
  std::size_t li = 0;
  while (li < lines.size()) {
    int lno = static_cast<int>(li) + 1;
    auto toks = tokenize(lines[li]);
    if (toks.empty()) {
      ++li;
      continue;
    }
    if (toks[0].text == "matrix") {
      if (toks.size() != 3)
        throw ParseError(lno, toks[0].col,
                         "matrix header must be 'matrix <rows> <cols>'");
      Int d, n;
      if (!parse_int(toks[1].text, d) || !parse_int(toks[2].text, n) || d <= 0 ||
          n <= 0)
        throw ParseError(lno, toks[1].col,
                         "matrix dimensions must be positive integers");
      if (d > Int(kDimCap) || n > Int(kDimCap))
        throw ParseError(lno, toks[1].col, "matrix dimensions too large");
      std::size_t rows = static_cast<std::size_t>(d);
      std::size_t cols = static_cast<std::size_t>(n);
      std::vector<IntVec> rowdata;
      ++li;
      while (rowdata.size() < rows) {
        if (li >= lines.size())
          throw ParseError(static_cast<int>(li) + 1, 1,
                           "unexpected end of input: expected matrix row " +
                               std::to_string(rowdata.size() + 1) + " of " +
                               std::to_string(rows));
        int rln = static_cast<int>(li) + 1;
        auto rt = tokenize(lines[li]);
        if (rt.empty()) {
          ++li;
          continue;
        }
        if (rt.size() != cols) {
          int col = rt.size() > cols ? rt[cols].col
                                     : static_cast<int>(lines[li].size()) + 1;
          throw ParseError(rln, col,
                           "matrix row " + std::to_string(rowdata.size() + 1) +
                               " has " + std::to_string(rt.size()) +
                               " entries, expected " + std::to_string(cols));
        }
        IntVec row(cols);
        for (std::size_t j = 0; j < cols; ++j)
          if (!parse_int(rt[j].text, row[j]))
            throw ParseError(rln, rt[j].col,
                             "expected an integer entry, got '" + rt[j].text + "'");
        rowdata.push_back(std::move(row));
        ++li;
      }
      jobs.push_back({IntMat::from_rows(rowdata), {}, commands});
      continue;
    }
    if (toks[0].text == "beta") {
      if (jobs.empty())
        throw ParseError(lno, toks[0].col, "'beta' before any 'matrix'");
      std::size_t d = jobs.back().matrix.rows();
      if (toks.size() != d + 1) {
        int col = toks.size() > d + 1 ? toks[d + 1].col
                                      : static_cast<int>(lines[li].size()) + 1;
        throw ParseError(lno, col,
                         "expected " + std::to_string(d) +
                             " entries after 'beta', got " +
                             std::to_string(toks.size() - 1));
      }
      RatVec beta(d);
      for (std::size_t j = 0; j < d; ++j) {
        std::string why;
        if (!parse_rat(toks[j + 1].text, beta[j], why))
          throw ParseError(lno, toks[j + 1].col, why);
      }
      jobs.back().parameters.push_back(std::move(beta));
      ++li;
      continue;
    }
    throw ParseError(lno, toks[0].col,
                     "expected 'matrix' or 'beta', got '" + toks[0].text + "'");
  }
  if (jobs.empty()) throw ParseError(1, 1, "input contains no 'matrix' block");
  return jobs;
}

Int json_int(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Int(v.get<long long>());
  if (v.is_string()) {
    Int out;
    if (parse_int(v.get<std::string>(), out)) return out;
  }
  throw ParseError(0, 0, where + " must be an integer or a decimal string");
}

Rat json_rat(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Rat(Int(v.get<long long>()));
  if (v.is_string()) {
    Rat out;
    std::string why;
    if (parse_rat(v.get<std::string>(), out, why)) return out;
    throw ParseError(0, 0, where + ": " + why);
  }
  throw ParseError(0, 0, where + " must be an integer or a 'p/q' string");
}

JobSpec parse_json_job(const json& jj, std::size_t index,
                       const std::vector<std::string>& commands) {
  std::string where = "job " + std::to_string(index + 1);
  if (!jj.is_object()) throw ParseError(0, 0, where + " must be an object");
  for (const auto& item : jj.items())
    if (item.key() != "matrix" && item.key() != "beta")
      throw ParseError(0, 0, where + ": unknown key '" + item.key() +
                                 "' (allowed: matrix, beta)");
  if (!jj.contains("matrix") || !jj["matrix"].is_array() || jj["matrix"].empty())
    throw ParseError(0, 0, where + ": 'matrix' must be a nonempty array of rows");
  const json& jm = jj["matrix"];
  std::vector<IntVec> rows;
  std::size_t cols = 0;
  for (std::size_t i = 0; i < jm.size(); ++i) {
    if (!jm[i].is_array() || jm[i].empty())
      throw ParseError(0, 0, where + ": matrix rows must be nonempty arrays");
    if (i == 0) cols = jm[i].size();
    if (jm[i].size() != cols)
      throw ParseError(0, 0, where + ": matrix rows have unequal lengths");
    IntVec row(jm[i].size());
    for (std::size_t j = 0; j < jm[i].size(); ++j)
      row[j] = json_int(jm[i][j], where + " matrix entry");
    rows.push_back(std::move(row));
  }
  if (rows.size() > kDimCap || cols > kDimCap)
    throw ParseError(0, 0, where + ": matrix dimensions too large");
  JobSpec job{IntMat::from_rows(rows), {}, commands};
  if (jj.contains("beta")) {
    if (!jj["beta"].is_array())
      throw ParseError(0, 0, where + ": 'beta' must be an array of vectors");
    for (const json& jb : jj["beta"]) {
      if (!jb.is_array() || jb.size() != rows.size())
        throw ParseError(0, 0, where + ": each beta needs exactly " +
                                   std::to_string(rows.size()) + " entries");
      RatVec beta(jb.size());
      for (std::size_t j = 0; j < jb.size(); ++j)
        beta[j] = json_rat(jb[j], where + " beta entry");
      job.parameters.push_back(std::move(beta));
    }
  }
  return job;
}

std::vector<JobSpec> parse_json_body(const std::string& text,
                                     const std::vector<std::string>& commands) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(0, 0, e.what());
  }
  json list;
  if (doc.is_array()) {
    list = doc;
  } else if (doc.is_object() && doc.contains("jobs")) {
    if (!doc["jobs"].is_array())
      throw ParseError(0, 0, "'jobs' must be an array");
    list = doc["jobs"];
  } else if (doc.is_object()) {
    list = json::array({doc});
  } else {
    throw ParseError(0, 0, "json body must be a job object or an array of jobs");
  }
  if (list.empty()) throw ParseError(0, 0, "input contains no jobs");
  std::vector<JobSpec> jobs;
  for (std::size_t i = 0; i < list.size(); ++i)
    jobs.push_back(parse_json_job(list[i], i, commands));
  return jobs;
}

// ---------------------------------------------------------------- running

struct Ingested {
  IntMat a;  // full row rank, possibly rewritten by a unimodular row transform
  std::vector<std::optional<RatVec>> betas;  // nullopt: outside the row space
  json reduction;
};

// Rank-deficient matrices are reduced once at ingestion: U*A has its nonzero
// rows on top, those rows become the analysis matrix, and parameters map to
// their top coordinates. A parameter with a nonzero bottom coordinate is not
// expressible in the reduced system and is reported, not analyzed.
Ingested ingest(const JobSpec& job) {
  Ingested ing{job.matrix, {}, json{{"applied", false}}};
  auto hr = hermite_normal_form(job.matrix);
  if (hr.rank == job.matrix.rows() || hr.rank == 0) {
    for (const auto& b : job.parameters) ing.betas.emplace_back(b);
    return ing;
  }
  std::vector<IntVec> top;
  for (std::size_t i = 0; i < hr.rank; ++i) top.push_back(hr.h.row(i));
  ing.a = IntMat::from_rows(top);
  ing.reduction = json{{"applied", true},
                       {"rank", hr.rank},
                       {"row_transform", mat_json(hr.u)},
                       {"matrix", mat_json(ing.a)}};
  for (const auto& b : job.parameters) {
    RatVec ub(job.matrix.rows());
    for (std::size_t i = 0; i < job.matrix.rows(); ++i)
      ub[i] = dot_rat(hr.u.row(i), b);
    bool consistent = true;
    for (std::size_t i = hr.rank; i < ub.size(); ++i)
      if (ub[i] != 0) consistent = false;
    if (consistent)
      ing.betas.emplace_back(RatVec(ub.begin(), ub.begin() + hr.rank));
    else
      ing.betas.emplace_back(std::nullopt);
  }
  return ing;
}

json volume_json(const IntMat& a) {
  auto vc = normalized_volume(a);
  json tri = json::array();
  for (const auto& s : vc.simplices)
    tri.push_back(json{{"cols", cols_json(s.cols)}, {"volume", int_json(s.volume)}});
  return json{{"supported", true},
              {"volume", int_json(vc.volume)},
              {"triangulation", tri}};
}

json toric_json(const IntMat& a) {
  auto bi = toric_ideal(a);
  json gens = json::array();
  for (const auto& b : bi.gens)
    gens.push_back(json{{"lead", ivec_json(b.lead)},
                        {"trail", ivec_json(b.trail)},
                        {"text", to_string(b)}});
  return json{{"supported", true},
              {"order", "grevlex"},
              {"generator_count", bi.gens.size()},
              {"generators", gens}};
}

json saturate_json(const SemigroupProfile& sp) {
  return json{{"supported", true},
              {"normal", sp.is_normal()},
              {"hilbert_basis", points_json(sp.hilbert_basis())}};
}

json holes_json(const SemigroupProfile& sp) {
  json ds = degree_set_json(sp.holes());
  return json{{"supported", true},
              {"points", std::move(ds["points"])},
              {"components", std::move(ds["components"])}};
}

json exceptional_json(const SemigroupProfile& sp) {
  auto ex = exceptional_set_d2(sp);
  return json{{"supported", ex.supported},
              {"points", points_json(ex.points)},
              {"note", ex.note}};
}

json degrees_json(const IntMat& a) {
  auto cd = canonical_degrees(a);
  json out{{"eps_a", ivec_json(cd.eps_a)}, {"eps_atilde", ivec_json(cd.eps_atilde)}};
  out["c_a"] = cd.c_a ? ivec_json(*cd.c_a) : json();
  return out;
}

json arrangement_json(const IntMat& a) {
  auto ca = conjecture_arrangement(a);
  json out{{"supported", ca.supported}};
  out.update(degree_set_json(ca.arrangement));
  out["note"] = ca.note;
  return out;
}

const char* kInconsistentNote = "parameter lies outside the row space of the matrix";

json reducibility_json(const IntMat& a, const JobSpec& job, const Ingested& ing) {
  json verdicts = json::array();
  for (std::size_t i = 0; i < job.parameters.size(); ++i) {
    json e{{"beta", rvec_json(job.parameters[i])}};
    if (!ing.betas[i]) {
      e["status"] = "Inconsistent";
      e["note"] = kInconsistentNote;
      verdicts.push_back(std::move(e));
      continue;
    }
    if (ing.reduction["applied"].get<bool>())
      e["beta_reduced"] = rvec_json(*ing.betas[i]);
    auto v = classify_reducibility(a, *ing.betas[i]);
    e["status"] = to_string(v.status);
    e["representative"] = rvec_json(v.representative);
    json trail = json::array();
    for (const auto& s : v.trail)
      trail.push_back(json{{"rule", s.key}, {"detail", s.detail}});
    e["trail"] = std::move(trail);
    e["face_cols"] = cols_json(v.reduced.face_cols);
    e["dropped_cols"] = cols_json(v.reduced.dropped_cols);
    e["beta_f"] = rvec_json(v.reduced.beta_f);
    e["gamma"] = rvec_json(v.reduced.gamma);
    verdicts.push_back(std::move(e));
  }
  return json{{"supported", true}, {"verdicts", std::move(verdicts)}};
}

json dualize_json(const IntMat& a, const JobSpec& job, const Ingested& ing) {
  json out{{"supported", true},
           {"degrees", degrees_json(a)},
           {"arrangement", arrangement_json(a)}};
  json verdicts = json::array();
  for (std::size_t i = 0; i < job.parameters.size(); ++i) {
    json e{{"beta", rvec_json(job.parameters[i])}};
    if (!ing.betas[i]) {
      e["status"] = "Inconsistent";
      e["note"] = kInconsistentNote;
      verdicts.push_back(std::move(e));
      continue;
    }
    if (ing.reduction["applied"].get<bool>())
      e["beta_reduced"] = rvec_json(*ing.betas[i]);
    auto v = dualize(a, *ing.betas[i]);
    e["status"] = to_string(v.status);
    e["regime"] = to_string(v.regime);
    if (v.dual_parameter) e["dual_parameter"] = rvec_json(*v.dual_parameter);
    if (v.status == DualStatus::NotProperGKZ) {
      e["certificate"] = v.certificate;
      if (v.witness_degree) e["witness_degree"] = ivec_json(*v.witness_degree);
    }
    if (v.status == DualStatus::Undetermined) {
      json failed = json::array();
      for (const auto& c : v.conditions_failed) failed.push_back(c);
      e["conditions_failed"] = std::move(failed);
    }
    verdicts.push_back(std::move(e));
  }
  out["verdicts"] = std::move(verdicts);
  return out;
}

json run_one(const JobSpec& job) {
  json out;
  out["input"] = json{{"rows", job.matrix.rows()},
                      {"cols", job.matrix.cols()},
                      {"matrix", mat_json(job.matrix)}};
  json params = json::array();
  for (const auto& b : job.parameters) params.push_back(rvec_json(b));
  out["input"]["parameters"] = std::move(params);

  Ingested ing = ingest(job);
  out["reduction"] = ing.reduction;

  auto val = validate_matrix(ing.a);
  bool ok = val.ok();
  std::string gate = "analysis requires a validated matrix: " + val.detail;
  auto unsupported = [&] { return json{{"supported", false}, {"note", gate}}; };
  auto want = [&](const char* c) {
    return std::find(job.commands.begin(), job.commands.end(), c) !=
           job.commands.end();
  };

  std::optional<SemigroupProfile> sp;
  if (ok && (want("saturate") || want("holes") || want("exceptional")))
    sp = SemigroupProfile::build(ing.a);

  json results;
  if (want("validate"))
    results["validate"] = json{{"nonempty", val.nonempty},
                               {"distinct_columns", val.distinct_columns},
                               {"full_rank", val.full_rank},
                               {"lattice_full", val.lattice_full},
                               {"pointed", val.pointed},
                               {"ok", ok},
                               {"detail", val.detail}};
  if (want("volume")) results["volume"] = ok ? volume_json(ing.a) : unsupported();
  if (want("toric-ideal"))
    results["toric-ideal"] = ok ? toric_json(ing.a) : unsupported();
  if (want("saturate"))
    results["saturate"] = ok ? saturate_json(*sp) : unsupported();
  if (want("holes")) results["holes"] = ok ? holes_json(*sp) : unsupported();
  if (want("exceptional"))
    results["exceptional"] = ok ? exceptional_json(*sp) : unsupported();
  if (want("reducibility"))
    results["reducibility"] =
        ok ? reducibility_json(ing.a, job, ing) : unsupported();
  if (want("dualize"))
    results["dualize"] = ok ? dualize_json(ing.a, job, ing) : unsupported();
  out["results"] = std::move(results);
  return out;
}

}  // namespace

const std::vector<std::string>& all_commands() {
  static const std::vector<std::string> k = {
      "validate", "volume",      "toric-ideal",  "saturate",
      "holes",    "exceptional", "reducibility", "dualize"};
  return k;
}

std::vector<std::string> canonical_commands(const std::vector<std::string>& names) {
  if (names.empty()) throw ParseError(0, 0, "empty command list");
  const auto& all = all_commands();
  bool everything = false;
  std::vector<std::string> requested;
  for (const auto& n : names) {
    if (n == "report") {
      everything = true;
      continue;
    }
    if (std::find(all.begin(), all.end(), n) == all.end()) {
      std::string known;
      for (const auto& a : all) known += a + ", ";
      throw ParseError(0, 0,
                       "unknown command '" + n + "' (known: " + known + "report)");
    }
    requested.push_back(n);
  }
  if (everything) return all;
  std::vector<std::string> out;
  for (const auto& a : all)
    if (std::find(requested.begin(), requested.end(), a) != requested.end())
      out.push_back(a);
  if (out.empty()) throw ParseError(0, 0, "empty command list");
  return out;
}

ParseError::ParseError(int l, int c, const std::string& msg)
    : std::runtime_error(msg), line(l), column(c) {}

std::vector<JobSpec> parse_jobs(const std::string& text,
                                const std::vector<std::string>& commands) {
  auto cmds = canonical_commands(commands);
  std::size_t i = 0;
  while (i < text.size() &&
         (text[i] == ' ' || text[i] == '\t' || text[i] == '\n' || text[i] == '\r'))
    ++i;
  if (i < text.size() && (text[i] == '{' || text[i] == '['))
    return parse_json_body(text, cmds);
  return parse_text(text, cmds);
}

AnalysisReport run_jobs(const std::vector<JobSpec>& jobs, int parallel) {
  auto t0 = std::chrono::steady_clock::now();
  json arr = json::array();
  if (parallel > 1 && jobs.size() > 1) {
    std::vector<json> slots(jobs.size());
    std::vector<std::pair<std::size_t, std::future<json>>> inflight;
    std::size_t next = 0;
    while (next < jobs.size() || !inflight.empty()) {
      while (next < jobs.size() &&
             inflight.size() < static_cast<std::size_t>(parallel)) {
        const JobSpec* jp = &jobs[next];
        inflight.emplace_back(
            next, std::async(std::launch::async, [jp] { return run_one(*jp); }));
        ++next;
      }
      slots[inflight.front().first] = inflight.front().second.get();
      inflight.erase(inflight.begin());
    }
    for (auto& s : slots) arr.push_back(std::move(s));
  } else {
    for (const auto& j : jobs) arr.push_back(run_one(j));
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  AnalysisReport r;
  r.doc = json{{"schema", kSchemaVersion},
               {"job_count", jobs.size()},
               {"elapsed_ms", ms},
               {"jobs", std::move(arr)}};
  return r;
}

std::string emit_json(const AnalysisReport& r) { return r.doc.dump(2) + "\n"; }

namespace {

// Text rendering reads the finished json document so both emitters always
// agree on content.

std::string num_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string vec_text(const json& arr) {
  std::string out = "(";
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (i) out += ", ";
    out += num_text(arr[i]);
  }
  return out + ")";
}

std::string point_list_text(const json& pts) {
  if (pts.empty()) return "{}";
  std::string out = "{";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out += ", ";
    out += vec_text(pts[i]);
  }
  return out + "}";
}

std::string set_text(const json& cols) {
  std::string out = "{";
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (i) out += ", ";
    out += num_text(cols[i]);
  }
  return out + "}";
}

void degree_set_text(std::ostream& os, const json& ds, const char* indent) {
  if (!ds["points"].empty())
    os << indent << "points: " << point_list_text(ds["points"]) << "\n";
  for (const auto& c : ds["components"])
    os << indent << "component: shift " << vec_text(c["shift"]) << " + N-span "
       << point_list_text(c["directions"]) << " on face cols "
       << set_text(c["face_cols"]) << "\n";
}

void beta_header(std::ostream& os, const json& e) {
  os << "    beta " << vec_text(e["beta"]);
  if (e.contains("beta_reduced")) os << " -> " << vec_text(e["beta_reduced"]);
  os << ": " << e["status"].get<std::string>();
}

void section_text(std::ostream& os, const std::string& name, const json& s) {
  if (name != "validate" && s.contains("supported") &&
      !s["supported"].get<bool>() && name != "exceptional") {
    os << "  " << name << ": unsupported (" << s["note"].get<std::string>()
       << ")\n";
    return;
  }
  if (name == "validate") {
    if (s["ok"].get<bool>()) {
      os << "  validate: ok (distinct columns, full rank, full lattice, "
            "pointed)\n";
    } else {
      os << "  validate: failed: " << s["detail"].get<std::string>() << "\n";
    }
    return;
  }
  if (name == "volume") {
    os << "  volume: " << num_text(s["volume"]) << " (triangulation with "
       << s["triangulation"].size() << " simplices)\n";
    return;
  }
  if (name == "toric-ideal") {
    os << "  toric ideal: " << s["generator_count"] << " generators, "
       << s["order"].get<std::string>() << " order\n";
    for (const auto& g : s["generators"])
      os << "    " << g["text"].get<std::string>() << "\n";
    return;
  }
  if (name == "saturate") {
    os << "  saturation: " << (s["normal"].get<bool>() ? "normal" : "not normal")
       << ", hilbert basis " << point_list_text(s["hilbert_basis"]) << "\n";
    return;
  }
  if (name == "holes") {
    if (s["points"].empty() && s["components"].empty()) {
      os << "  holes: none\n";
    } else {
      os << "  holes:\n";
      degree_set_text(os, s, "    ");
    }
    return;
  }
  if (name == "exceptional") {
    if (!s["supported"].get<bool>())
      os << "  exceptional: unsupported (" << s["note"].get<std::string>()
         << ")\n";
    else
      os << "  exceptional: " << point_list_text(s["points"]) << "\n";
    return;
  }
  if (name == "reducibility") {
    os << "  reducibility:\n";
    for (const auto& e : s["verdicts"]) {
      beta_header(os, e);
      if (e["status"] == "Inconsistent") {
        os << " (" << e["note"].get<std::string>() << ")\n";
        continue;
      }
      os << "\n      representative " << vec_text(e["representative"])
         << ", face cols " << set_text(e["face_cols"]) << ", dropped "
         << set_text(e["dropped_cols"]) << "\n";
      for (const auto& t : e["trail"])
        os << "      rule " << t["rule"].get<std::string>() << ": "
           << t["detail"].get<std::string>() << "\n";
    }
    return;
  }
  if (name == "dualize") {
    os << "  duality:\n";
    const json& dg = s["degrees"];
    os << "    degrees: eps_a " << vec_text(dg["eps_a"]) << ", eps_atilde "
       << vec_text(dg["eps_atilde"]) << ", c_a "
       << (dg["c_a"].is_null() ? std::string("none") : vec_text(dg["c_a"]))
       << "\n";
    const json& ar = s["arrangement"];
    if (ar["supported"].get<bool>()) {
      os << "    arrangement:";
      if (ar["points"].empty() && ar["components"].empty()) {
        os << " empty\n";
      } else {
        os << "\n";
        degree_set_text(os, ar, "      ");
      }
    } else {
      os << "    arrangement: unsupported (" << ar["note"].get<std::string>()
         << ")\n";
    }
    for (const auto& e : s["verdicts"]) {
      beta_header(os, e);
      if (e["status"] == "Inconsistent") {
        os << " (" << e["note"].get<std::string>() << ")\n";
        continue;
      }
      os << " [" << e["regime"].get<std::string>() << "]\n";
      if (e.contains("dual_parameter"))
        os << "      dual parameter: " << vec_text(e["dual_parameter"]) << "\n";
      if (e.contains("certificate"))
        os << "      certificate: " << e["certificate"].get<std::string>()
           << "\n";
      if (e.contains("witness_degree"))
        os << "      witness degree: " << vec_text(e["witness_degree"]) << "\n";
      if (e.contains("conditions_failed"))
        for (const auto& c : e["conditions_failed"])
          os << "      failed: " << c.get<std::string>() << "\n";
    }
    return;
  }
  os << "  " << name << ": " << s.dump() << "\n";
}

}  // namespace

std::string emit_text(const AnalysisReport& r) {
  std::ostringstream os;
  const json& doc = r.doc;
  os << "gkz report " << doc["schema"].get<std::string>() << "\n";
  os << "jobs: " << doc["job_count"] << "\n";
  int k = 0;
  for (const auto& jb : doc["jobs"]) {
    ++k;
    const json& in = jb["input"];
    os << "\njob " << k << ": " << in["rows"] << "x" << in["cols"] << " matrix\n";
    for (const auto& row : in["matrix"]) {
      os << "  [";
      for (const auto& v : row) os << " " << num_text(v);
      os << " ]\n";
    }
    if (in["parameters"].empty()) {
      os << "  parameters: none\n";
    } else {
      os << "  parameters:";
      for (const auto& b : in["parameters"]) os << " " << vec_text(b);
      os << "\n";
    }
    const json& red = jb["reduction"];
    if (red["applied"].get<bool>()) {
      os << "  reduction: row rank " << red["rank"]
         << ", unimodular row transform applied, analysis matrix:\n";
      for (const auto& row : red["matrix"]) {
        os << "    [";
        for (const auto& v : row) os << " " << num_text(v);
        os << " ]\n";
      }
    }
    for (const auto& item : jb["results"].items())
      section_text(os, item.key(), item.value());
  }
  os << "\nelapsed: " << doc["elapsed_ms"] << " ms\n";
  return os.str();
}

}  // namespace gkz::report
