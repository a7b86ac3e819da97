#include "vne/bench.hpp"

#include <cmath>
#include <condition_variable>
#include <cstdio>
#include <json.hpp>
#include <mutex>
#include <thread>

#include "vne/generators.hpp"
#include "vne/solver.hpp"

namespace vne {

namespace {

struct Job {
  int f;
  std::size_t r;
  double p;
  std::uint64_t seed;
};

std::string format_p(double p) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", p);
  return buf;
}

std::string run_one(const Job& job, const BenchConfig& config) {
  Substrate substrate = gen_fat_tree(job.f, job.seed);
  Request request = gen_er_request(job.r, job.p, job.seed, config.max_resample);
  SolveOptions options;
  options.timeout = config.timeout;

  std::string status;
  std::string cost;
  double ms = 0;
  std::size_t entries = 0;
  std::uint64_t iterations = 0;
  auto started = std::chrono::steady_clock::now();
  try {
    SolveResult result = dp_solve(substrate, request, options);
    status = to_string(result.status);
    if (result.status == SolveStatus::Optimal) cost = result.cost.to_decimal();
    ms = result.stats.wall_ms;
    entries = result.stats.table_entries;
    iterations = result.stats.inner_iterations;
  } catch (const TimeoutError&) {
    status = "Timeout";
    ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
             .count();
  } catch (const Error&) {
    status = "Error";  // e.g. resample budget exhausted; the run continues
    ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
             .count();
  }
  char row[256];
  std::snprintf(row, sizeof row, "%d,%zu,%s,%llu,%s,%s,%.3f,%zu,%llu\n", job.f, job.r,
                format_p(job.p).c_str(), static_cast<unsigned long long>(job.seed),
                status.c_str(), cost.c_str(), ms, entries,
                static_cast<unsigned long long>(iterations));
  return row;
}

}  // namespace

BenchConfig parse_bench_config(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(std::string("invalid bench config: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("grid") || !doc["grid"].is_array())
    throw Error("bench config needs a \"grid\" array");
  BenchConfig config;
  for (const auto& cell : doc["grid"]) {
    BenchConfig::Cell c;
    if (!cell.contains("f") || !cell.contains("r") || !cell.contains("p") ||
        !cell.contains("seeds"))
      throw Error("bench grid cells need f, r, p and seeds");
    c.f = cell["f"].get<int>();
    c.r = cell["r"].get<std::size_t>();
    c.p = cell["p"].get<double>();
    for (const auto& s : cell["seeds"]) c.seeds.push_back(s.get<std::uint64_t>());
    config.grid.push_back(std::move(c));
  }
  if (doc.contains("timeout_ms"))
    config.timeout = std::chrono::milliseconds(doc["timeout_ms"].get<std::int64_t>());
  if (doc.contains("parallelism")) config.parallelism = doc["parallelism"].get<unsigned>();
  if (config.parallelism < 1) config.parallelism = 1;
  if (doc.contains("max_resample")) config.max_resample = doc["max_resample"].get<int>();
  return config;
}

void run_bench(const BenchConfig& config, std::ostream& out) {
  std::vector<Job> jobs;
  for (const auto& cell : config.grid)
    for (std::uint64_t seed : cell.seeds) jobs.push_back({cell.f, cell.r, cell.p, seed});

  out << "# vnembed-bench v1\n";
  out << "f,r,p,seed,status,cost,solve_ms,table_entries,inner_iterations\n";
  out.flush();

  if (config.parallelism == 1 || jobs.size() <= 1) {
    for (const Job& job : jobs) {
      out << run_one(job, config);
      out.flush();
    }
    return;
  }

  // Rows come back in grid order regardless of which worker finishes first.
  std::mutex mu;
  std::condition_variable cv;
  std::vector<std::string> rows(jobs.size());
  std::vector<char> done(jobs.size(), 0);
  std::size_t next_job = 0;

  auto worker = [&] {
    while (true) {
      std::size_t index;
      {
        std::lock_guard lock(mu);
        if (next_job >= jobs.size()) return;
        index = next_job++;
      }
      std::string row = run_one(jobs[index], config);
      {
        std::lock_guard lock(mu);
        rows[index] = std::move(row);
        done[index] = 1;
      }
      cv.notify_all();
    }
  };
  std::vector<std::thread> pool;
  unsigned n = std::min<unsigned>(config.parallelism, static_cast<unsigned>(jobs.size()));
  pool.reserve(n);
  for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);

  {
    std::unique_lock lock(mu);
    for (std::size_t i = 0; i < jobs.size(); ++i) {
      cv.wait(lock, [&] { return done[i] == 1; });
      out << rows[i];
      out.flush();
    }
  }
  for (std::thread& t : pool) t.join();
}

}  // namespace vne
