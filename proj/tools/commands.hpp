#pragma once

#include <iosfwd>
#include <string>

#include "serialize.hpp"

namespace tcm::cli {

struct GenTcmOptions {
  int n = 2;
  int p = 2;
  std::string method = "rule";  // rule | elementary | gellmann
  OutputFormat format = OutputFormat::Text;
};

struct GenGellmannOptions {
  int n = 2;
  int p = 2;
  OutputFormat format = OutputFormat::Text;
};

struct VerifyOptions {
  int n_max = 4;
  int p_max = 4;
  double tol = 1e-12;
  OutputFormat format = OutputFormat::Text;  // json | text
};

struct BenchOptions {
  int n = 64;
  int p = 64;
  long long batch = 1000;
  OutputFormat format = OutputFormat::Text;  // json | text
};

struct BenchResult {
  int n = 0;
  int p = 0;
  long long batch = 0;
  double dense_ns_per_apply = 0.0;
  double matrixfree_ns_per_apply = 0.0;
  double speedup = 0.0;
};

/// Time dense multiplication by the materialized swap matrix against the
/// matrix-free kernel. Agreement of the two methods on the benchmark inputs
/// is verified before any timing is reported (a mismatch throws). The
/// matrix-free side runs the full batch; the dense side runs a calibrated
/// sample and is reported per apply.
BenchResult run_swap_bench(int n, int p, long long batch);

int cmd_gen_tcm(const GenTcmOptions& options, std::ostream& out);
int cmd_gen_gellmann(const GenGellmannOptions& options, std::ostream& out);
int cmd_verify(const VerifyOptions& options, std::ostream& out);
int cmd_bench(const BenchOptions& options, std::ostream& out);

}  // namespace tcm::cli
