#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "dqgraph/balance.hpp"

namespace dqgraph {

struct BenchRecord {
  int n{0};
  WeightType weight_type{WeightType::unit_dual_quaternion};
  Method method{Method::direct};
  double cpu_seconds{0.0};  // mean wall time of the check over the repetitions
  double err{1.0};          // Err of the certificate, 1 when any step failed
  Verdict verdict{Verdict::indeterminate};
};

struct BenchConfig {
  std::vector<int> sizes{10, 20, 50, 100, 200, 500};
  std::vector<WeightType> weight_types{WeightType::unit_complex, WeightType::unit_dual_quaternion};
  std::vector<Method> methods{Method::direct, Method::gain_graph};
  int repetitions{1};
  std::uint64_t seed{20240601};
};

/// Seed of the cycle generated for one (n, weight type) cell.
std::uint64_t cell_seed(std::uint64_t base, int n, WeightType type);

/// One record per (n, weight type, method); every method of a cell sees the
/// same gen_cycle graph.
std::vector<BenchRecord> bench(const BenchConfig& config);

/// Header n,weight_type,method,cpu_seconds,err,verdict.
void write_csv(std::ostream& os, const std::vector<BenchRecord>& records);

}  // namespace dqgraph
