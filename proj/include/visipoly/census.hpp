#pragma once

#include <chrono>
#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "visipoly/polynomial.hpp"
#include "visipoly/vertex_set.hpp"
#include "visipoly/visibility.hpp"

namespace visipoly {

struct CensusOptions {
  int jobs = 1;
  /// Default: disconnected graphs stay in the output, marked, with the
  /// visibility fields left empty. When false the run aborts on the first
  /// disconnected graph (strict mode for corpora expected to be connected).
  bool skip_disconnected = true;
  bool compute_poly = true;        // mu + visibility polynomial
  bool compute_absolute_clear = true;
  EnumerationLimits limits;
};

struct CensusRecord {
  std::string graph6;
  int order = 0;
  int edges = 0;
  bool connected = false;
  std::optional<int> mu;
  std::optional<Polynomial> poly;
  std::optional<bool> absolute_clear;
  std::optional<VertexSet> witness_q;  // least non-disjoint-visible Q
  std::chrono::microseconds elapsed{0};
};

struct CensusLineError {
  std::size_t line;  // 1-based
  std::string reason;
};

struct OrderBreakdown {
  int total = 0;
  int connected = 0;
  int absolute_clear = 0;
};

struct CensusSummary {
  int total = 0;
  int connected = 0;
  int absolute_clear = 0;
  std::map<int, OrderBreakdown> by_order;
};

struct CensusResult {
  std::vector<CensusRecord> records;   // in input order
  std::vector<CensusLineError> errors; // parse failures, in input order
  CensusSummary summary;
};

/// One record per parseable graph6 line of `in`, in input order regardless
/// of the jobs count. Parse failures are recorded per line and do not abort
/// the run. Graphs whose order exceeds the enumeration cap keep their
/// parsed fields but get an error entry instead of visibility results.
CensusResult run_census(std::istream& in, const CensusOptions& options = {});

/// CSV with header graph6,order,edges,connected,mu,poly,absolute_clear,
/// witness_q,elapsed_ms. Deterministic except for the timing column.
void write_census_csv(std::ostream& out, const CensusResult& result);

/// {"records": [...], "summary": {...}, "errors": [...]} mirroring the CSV;
/// polynomial coefficients as decimal strings, index = degree.
void write_census_json(std::ostream& out, const CensusResult& result);

std::string summary_text(const CensusSummary& summary);

}  // namespace visipoly
