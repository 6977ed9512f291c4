#include "visipoly/census.hpp"

#include <algorithm>
#include <atomic>
#include <istream>
#include <ostream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "visipoly/cq_visibility.hpp"
#include "visipoly/errors.hpp"
#include "visipoly/graph6.hpp"

namespace visipoly {

namespace {

struct LineTask {
  std::size_t line;  // 1-based input line number
  std::string text;
};

// Computes one record; returns an error note for failures past parsing
// (e.g. the enumeration cap), which the caller attaches to the line.
std::optional<std::string> fill_record(const Graph& g, const CensusOptions& options,
                                       CensusRecord& rec) {
  rec.order = g.order();
  rec.edges = g.edge_count();
  rec.connected = is_connected(g);
  if (!rec.connected) return std::nullopt;
  try {
    if (options.compute_poly) {
      ThetaTable table = enumerate_mv_sets(g, options.limits);
      rec.mu = table.mu();
      rec.poly = table.polynomial();
    }
    if (options.compute_absolute_clear) {
      const DistanceMatrix dm = all_pairs_distances(g);
      ClearnessReport report = check_absolute_clear(g, dm, options.limits);
      rec.absolute_clear = report.absolute_clear;
      rec.witness_q = std::move(report.witness);
    }
  } catch (const LimitError& e) {
    return e.what();
  }
  return std::nullopt;
}

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string quoted = "\"";
  for (char c : value) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string format_elapsed_ms(std::chrono::microseconds us) {
  std::ostringstream os;
  os << us.count() / 1000 << '.';
  const auto frac = us.count() % 1000;
  os << static_cast<char>('0' + frac / 100) << static_cast<char>('0' + (frac / 10) % 10)
     << static_cast<char>('0' + frac % 10);
  return os.str();
}

}  // namespace

CensusResult run_census(std::istream& in, const CensusOptions& options) {
  CensusResult result;

  // Parsing stays on the reader thread: line numbers and error order are
  // then trivially deterministic.
  std::vector<LineTask> tasks;
  std::vector<Graph> graphs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      Graph g = parse_graph6(line);
      if (!options.skip_disconnected && !is_connected(g))
        (void)all_pairs_distances(g);  // throws with component representatives
      graphs.push_back(std::move(g));
      tasks.push_back(LineTask{line_no, line});
    } catch (const Graph6Error& e) {
      result.errors.push_back(CensusLineError{line_no, e.what()});
    }
  }

  result.records.resize(tasks.size());
  std::vector<std::optional<std::string>> notes(tasks.size());

  auto work_one = [&](std::size_t i) {
    const auto start = std::chrono::steady_clock::now();
    CensusRecord& rec = result.records[i];
    rec.graph6 = tasks[i].text;
    notes[i] = fill_record(graphs[i], options, rec);
    rec.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
        std::chrono::steady_clock::now() - start);
  };

  const int jobs = std::max(1, options.jobs);
  if (jobs == 1 || tasks.size() <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) work_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    const int workers = std::min<int>(jobs, static_cast<int>(tasks.size()));
    pool.reserve(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t)
      pool.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1))
          work_one(i);
      });
    for (std::thread& t : pool) t.join();
  }

  for (std::size_t i = 0; i < tasks.size(); ++i)
    if (notes[i]) result.errors.push_back(CensusLineError{tasks[i].line, *notes[i]});
  std::sort(result.errors.begin(), result.errors.end(),
            [](const CensusLineError& a, const CensusLineError& b) { return a.line < b.line; });

  CensusSummary& s = result.summary;
  s.total = static_cast<int>(result.records.size());
  for (const CensusRecord& rec : result.records) {
    OrderBreakdown& o = s.by_order[rec.order];
    ++o.total;
    if (rec.connected) {
      ++s.connected;
      ++o.connected;
    }
    if (rec.absolute_clear.value_or(false)) {
      ++s.absolute_clear;
      ++o.absolute_clear;
    }
  }
  return result;
}

void write_census_csv(std::ostream& out, const CensusResult& result) {
  out << "graph6,order,edges,connected,mu,poly,absolute_clear,witness_q,elapsed_ms\n";
  for (const CensusRecord& rec : result.records) {
    out << csv_field(rec.graph6) << ',' << rec.order << ',' << rec.edges << ','
        << (rec.connected ? "true" : "false") << ',';
    if (rec.mu) out << *rec.mu;
    out << ',';
    if (rec.poly) out << csv_field(rec.poly->str());
    out << ',';
    if (rec.absolute_clear) out << (*rec.absolute_clear ? "true" : "false");
    out << ',';
    if (rec.witness_q) out << csv_field(rec.witness_q->str());
    out << ',' << format_elapsed_ms(rec.elapsed) << '\n';
  }
}

void write_census_json(std::ostream& out, const CensusResult& result) {
  nlohmann::json root;
  root["records"] = nlohmann::json::array();
  for (const CensusRecord& rec : result.records) {
    nlohmann::json j;
    j["graph6"] = rec.graph6;
    j["order"] = rec.order;
    j["edges"] = rec.edges;
    j["connected"] = rec.connected;
    j["mu"] = rec.mu ? nlohmann::json(*rec.mu) : nlohmann::json();
    j["poly"] = rec.poly ? nlohmann::json(rec.poly->coeff_strings()) : nlohmann::json();
    j["absolute_clear"] =
        rec.absolute_clear ? nlohmann::json(*rec.absolute_clear) : nlohmann::json();
    j["witness_q"] = rec.witness_q ? nlohmann::json(rec.witness_q->to_vector()) : nlohmann::json();
    j["elapsed_ms"] = static_cast<double>(rec.elapsed.count()) / 1000.0;
    root["records"].push_back(std::move(j));
  }
  nlohmann::json summary;
  summary["total"] = result.summary.total;
  summary["connected"] = result.summary.connected;
  summary["absolute_clear"] = result.summary.absolute_clear;
  summary["by_order"] = nlohmann::json::object();
  for (const auto& [order, o] : result.summary.by_order) {
    summary["by_order"][std::to_string(order)] = {
        {"total", o.total}, {"connected", o.connected}, {"absolute_clear", o.absolute_clear}};
  }
  root["summary"] = std::move(summary);
  root["errors"] = nlohmann::json::array();
  for (const CensusLineError& e : result.errors)
    root["errors"].push_back({{"line", e.line}, {"reason", e.reason}});
  out << root.dump(2) << '\n';
}

std::string summary_text(const CensusSummary& summary) {
  std::ostringstream os;
  os << "total: " << summary.total << '\n'
     << "connected: " << summary.connected << '\n'
     << "absolute-clear: " << summary.absolute_clear << '\n';
  for (const auto& [order, o] : summary.by_order)
    os << "order " << order << ": total=" << o.total << " connected=" << o.connected
       << " absolute-clear=" << o.absolute_clear << '\n';
  return os.str();
}

}  // namespace visipoly
