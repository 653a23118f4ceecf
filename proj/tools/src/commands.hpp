#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "ltsenv/nucleus_lab.hpp"
#include "ltsenv/report.hpp"
#include "ltsenv/triple_system.hpp"

namespace ltsenv::cli {

/// Bad flags or flag combinations; exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string system;
  std::string file;
  std::string algebra;
  std::string format = "text";
  std::string output;
  bool timing = false;

  unsigned degree = 0;  // 0 = verb default
  unsigned max_n = 0;
  unsigned cases = 0;
  std::uint64_t seed = 1;

  std::string mode = "lts";
  std::string scale = "1";
  std::string method = "split";
  std::string left;
  std::string right;
  std::string subspace;
  std::string id;
};

TernarySystem load_system(const Options& o);
FinAlgebra load_algebra(const Options& o);

Report run_catalog(const Options& o);
Report run_axioms(const Options& o);
Report run_envelope(const Options& o);
Report run_mul(const Options& o);
Report run_centralizer(const Options& o);
Report run_nuclei(const Options& o);
Report run_decompose(const Options& o);
Report run_verify(const Options& o);

}  // namespace ltsenv::cli
