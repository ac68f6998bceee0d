#include "dqgraph/bench.hpp"

#include <ostream>

#include "dqgraph/generators.hpp"

namespace dqgraph {

std::uint64_t cell_seed(std::uint64_t base, int n, WeightType type) {
  // splitmix64 finaliser over the cell coordinates
  std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(n) * 8 + static_cast<std::uint64_t>(type) + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::vector<BenchRecord> bench(const BenchConfig& config) {
  if (config.repetitions < 1) throw Error(Errc::invalid_argument, "repetitions must be >= 1");
  std::vector<BenchRecord> records;
  for (const WeightType type : config.weight_types) {
    for (const int n : config.sizes) {
      const WeightedDigraph g = gen_cycle(n, type, cell_seed(config.seed, n, type));
      for (const Method method : config.methods) {
        BenchRecord rec{n, type, method, 0.0, 1.0, Verdict::indeterminate};
        double total = 0.0;
        for (int rep = 0; rep < config.repetitions; ++rep) {
          const BalanceReport report = check_balance(g, method);
          total += report.seconds;
          rec.verdict = report.verdict;
          rec.err = report.verdict == Verdict::balanced && report.err ? *report.err : 1.0;
        }
        rec.cpu_seconds = total / config.repetitions;
        records.push_back(rec);
      }
    }
  }
  return records;
}

void write_csv(std::ostream& os, const std::vector<BenchRecord>& records) {
  os << "n,weight_type,method,cpu_seconds,err,verdict\n";
  const auto flags = os.flags();
  const auto precision = os.precision();
  os.precision(3);
  for (const auto& r : records) {
    os << r.n << ',' << to_string(r.weight_type) << ',' << to_string(r.method) << ',' << std::scientific << r.cpu_seconds
       << ',' << r.err << ',' << std::defaultfloat << to_string(r.verdict) << '\n';
  }
  os.flags(flags);
  os.precision(precision);
}

}  // namespace dqgraph
