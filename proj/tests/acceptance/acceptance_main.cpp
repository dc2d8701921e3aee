// Acceptance suite: one check per shipping criterion, each printing a single
// PASS/FAIL line. Exit status is nonzero when any criterion fails.

#include <Eigen/Dense>

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "serialize.hpp"
#include "tensorcomm/commutation.hpp"
#include "tensorcomm/gellmann.hpp"
#include "tensorcomm/structure_constants.hpp"
#include "tensorcomm/verification.hpp"

using namespace tcm;

namespace {

constexpr double kTol = 1e-12;
constexpr double kRoundTripTol = 1e-15;
constexpr double kRankThreshold = 1e-8;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
  void info(const std::string& what) {
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

std::string fmt(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

double elapsed_ms(const std::chrono::steady_clock::time_point& start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

std::vector<ComplexScalar> random_vector(std::mt19937& rng, std::size_t len) {
  std::uniform_real_distribution<double> reals(-1.0, 1.0);
  std::vector<ComplexScalar> v(len);
  for (auto& z : v) z = ComplexScalar(reals(rng), reals(rng));
  return v;
}

std::vector<ComplexScalar> kron_vec(const std::vector<ComplexScalar>& a,
                                    const std::vector<ComplexScalar>& b) {
  std::vector<ComplexScalar> out(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = a[i] * b[j];
  }
  return out;
}

double vec_max_diff(const std::vector<ComplexScalar>& a, const std::vector<ComplexScalar>& b) {
  double best = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) best = std::max(best, std::abs(a[k] - b[k]));
  return best;
}

const ComplexDense kSwap22{{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}};
const ComplexDense kSwap23{{1, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0}, {0, 1, 0, 0, 0, 0},
                           {0, 0, 0, 0, 1, 0}, {0, 0, 1, 0, 0, 0}, {0, 0, 0, 0, 0, 1}};

// 1. the stepping construction reproduces the printed 6x6 matrix, in < 1 ms
Outcome criterion_explicit_2x3() {
  Outcome o;
  ComplexDense u;
  double best_ms = 1e9;
  for (int rep = 0; rep < 3; ++rep) {
    const auto start = std::chrono::steady_clock::now();
    u = tcm_by_rule(2, 3).to_dense();
    best_ms = std::min(best_ms, elapsed_ms(start));
  }
  if (!(u == kSwap23)) o.fail("materialized matrix differs from the reference");
  if (best_ms >= 1.0) o.fail("construction took " + fmt(best_ms) + " ms (budget 1 ms)");
  o.info(fmt(best_ms) + " ms");
  return o;
}

// 2. all three constructions reproduce the 4x4 matrix, decomposition within
// tolerance, in < 1 ms
Outcome criterion_explicit_2x2() {
  Outcome o;
  ComplexDense by_rule, by_elem, by_gell;
  double best_ms = 1e9;
  for (int rep = 0; rep < 3; ++rep) {
    const auto start = std::chrono::steady_clock::now();
    by_rule = tcm_by_rule(2, 2).to_dense();
    by_elem = tcm_by_elementary(2, 2);
    by_gell = tcm_by_gellmann(2, 2);
    best_ms = std::min(best_ms, elapsed_ms(start));
  }
  if (!(by_rule == kSwap22)) o.fail("stepping construction differs");
  if (!(by_elem == kSwap22)) o.fail("elementary sum differs");
  const double res = max_abs_diff(by_gell, kSwap22);
  if (res > kTol) o.fail("decomposition residual " + fmt(res));
  if (best_ms >= 1.0) o.fail("constructions took " + fmt(best_ms) + " ms (budget 1 ms)");
  o.info(fmt(best_ms) + " ms, decomposition residual " + fmt(res));
  return o;
}

// 3. the three constructions agree across the whole grid in < 10 s
Outcome criterion_cross_construction() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (int n = 2; n <= 8; ++n) {
    for (int p = 2; p <= 8; ++p) {
      const ComplexDense by_rule = tcm_by_rule(n, p).to_dense();
      const ComplexDense by_elem = tcm_by_elementary(n, p);
      if (!(by_rule == by_elem)) {
        o.fail("rule and elementary differ at n=" + std::to_string(n) +
               " p=" + std::to_string(p));
      }
      const double res = max_abs_diff(by_rule, tcm_by_gellmann(n, p));
      worst = std::max(worst, res);
      if (res > kTol) {
        o.fail("decomposition residual " + fmt(res) + " at n=" + std::to_string(n) +
               " p=" + std::to_string(p));
      }
    }
  }
  const double ms = elapsed_ms(start);
  if (ms >= 10'000.0) o.fail("grid took " + fmt(ms) + " ms (budget 10 s)");
  o.info("max residual " + fmt(worst) + ", " + fmt(ms) + " ms");
  return o;
}

// 4. U * (a kron b) = b kron a on 200 random pairs per cell
Outcome criterion_defining_property() {
  Outcome o;
  double worst = 0.0;
  for (int n = 2; n <= 8; ++n) {
    for (int p = 2; p <= 8; ++p) {
      std::mt19937 rng(7000u + 97u * static_cast<unsigned>(n) + static_cast<unsigned>(p));
      const ComplexDense u = tcm_by_rule(n, p).to_dense();
      for (int trial = 0; trial < 200; ++trial) {
        const auto a = random_vector(rng, static_cast<std::size_t>(n));
        const auto b = random_vector(rng, static_cast<std::size_t>(p));
        const double res = vec_max_diff(matvec(u, kron_vec(a, b)), kron_vec(b, a));
        worst = std::max(worst, res);
        if (res > kTol) {
          o.fail("residual " + fmt(res) + " at n=" + std::to_string(n) +
                 " p=" + std::to_string(p));
        }
      }
    }
  }
  o.info("max residual " + fmt(worst));
  return o;
}

// 5. Tr(L_a^+ L_b) = 2 delta_ab across the grid, both orientations
Outcome criterion_gram() {
  Outcome o;
  double worst = 0.0;
  for (int n = 2; n <= 8; ++n) {
    for (int p = 2; p <= 8; ++p) {
      const ComplexDense g = gram(rect_gellmann(n, p));
      const double res = max_abs_diff(g, 2.0 * identity(g.rows()));
      worst = std::max(worst, res);
      if (res > kTol) {
        o.fail("gram residual " + fmt(res) + " at n=" + std::to_string(n) +
               " p=" + std::to_string(p));
      }
    }
  }
  o.info("max residual " + fmt(worst));
  return o;
}

// 6. {padded identity} + generators have full numerical rank np
Outcome criterion_span() {
  Outcome o;
  double smallest = 1e9;
  for (int n = 2; n <= 8; ++n) {
    for (int p = 2; p <= 8; ++p) {
      const double sigma = basis_min_singular_value(rect_gellmann(n, p));
      smallest = std::min(smallest, sigma);
      if (sigma <= kRankThreshold) {
        o.fail("smallest singular value " + fmt(sigma) + " at n=" + std::to_string(n) +
               " p=" + std::to_string(p));
      }
    }
  }
  o.info("smallest singular value " + fmt(smallest));
  return o;
}

// 7. the extra-column identity and the square elementary identity
Outcome criterion_proof_identities() {
  Outcome o;
  double worst = 0.0;
  for (int n = 2; n <= 8; ++n) {
    for (int p = n; p <= 8; ++p) {
      const auto [lhs, rhs] = tail_identity(n, p);
      const double res = max_abs_diff(lhs, rhs);
      worst = std::max(worst, res);
      if (res > kTol) {
        o.fail("extra-column identity residual " + fmt(res) + " at n=" + std::to_string(n) +
               " p=" + std::to_string(p));
      }
    }
    ComplexDense lhs(static_cast<std::size_t>(n) * n, static_cast<std::size_t>(n) * n);
    for (std::size_t j = 1; j <= static_cast<std::size_t>(n); ++j) {
      for (std::size_t l = 1; l <= static_cast<std::size_t>(n); ++l) {
        const ComplexDense e = elementary(n, n, j, l);
        lhs += kron(transpose(e), e);
      }
    }
    ComplexDense rhs = (1.0 / n) * kron(identity(n), identity(n));
    for (const auto& s : square_gellmann(n)) rhs += 0.5 * kron(s, s);
    const double res = max_abs_diff(lhs, rhs);
    worst = std::max(worst, res);
    if (res > kTol) o.fail("square elementary identity residual " + fmt(res));
  }
  o.info("max residual " + fmt(worst));
  return o;
}

// 8. transpose pairing, inverse pairing, and the square involution, exactly
Outcome criterion_permutation_algebra() {
  Outcome o;
  for (int n = 2; n <= 8; ++n) {
    for (int p = 2; p <= 8; ++p) {
      const ComplexDense u = tcm_by_rule(n, p).to_dense();
      const ComplexDense u_swapped = tcm_by_rule(p, n).to_dense();
      const std::string cell = "n=" + std::to_string(n) + " p=" + std::to_string(p);
      if (!(transpose(u) == u_swapped)) o.fail("transpose pairing differs at " + cell);
      if (!(matmul(u_swapped, u) == identity(u.rows()))) o.fail("inverse pairing at " + cell);
      if (n == p) {
        if (!(u == transpose(u))) o.fail("square matrix not symmetric at " + cell);
        if (!(matmul(u, u) == identity(u.rows()))) o.fail("square matrix not involutive at " + cell);
      }
    }
  }
  return o;
}

// 9. the claimed all-shape transpose symmetry fails at (2,3) exactly as
// documented, and the report marks it erratum-expected
Outcome criterion_symmetry_erratum() {
  Outcome o;
  const ComplexDense u = tcm_by_rule(2, 3).to_dense();
  if (!(u(1, 3) == ComplexScalar{1.0} && u(3, 1) == ComplexScalar{})) {
    o.fail("expected entry (2,4) = 1 with empty mirror (4,2)");
  }
  if (max_abs_diff(u, transpose(u)) == 0.0) o.fail("U at (2,3) is unexpectedly symmetric");

  const VerificationReport report = full_report(2, 3, kTol);
  const IdentityRecord* rec = report.find("symmetry-claim");
  if (rec == nullptr) {
    o.fail("symmetry-claim record missing");
    return o;
  }
  if (rec->status != CheckStatus::ErratumExpected) {
    o.fail("symmetry-claim status is " + std::string(to_string(rec->status)));
  }
  bool pinned = false;
  for (const auto& ce : rec->counterexamples) {
    if (ce.location.find("(2,4) vs (4,2)") != std::string::npos) pinned = true;
  }
  if (!pinned) o.fail("counterexample (2,4) vs (4,2) not recorded");
  if (!report.ok()) o.fail("report does not stay green");
  o.info("recorded as erratum-expected with entries (2,4) vs (4,2)");
  return o;
}

// 10. the commutator expansion reconstructs every pair on the wide grid
Outcome criterion_expansion_exactness() {
  Outcome o;
  double worst = 0.0;
  for (int n = 2; n <= 8; ++n) {
    for (int p = n; p <= 8; ++p) {
      const auto records = check_structure_identities(n, p, kTol);
      const IdentityRecord& expansion = records[0];
      worst = std::max(worst, expansion.max_residual);
      if (expansion.status != CheckStatus::Pass) {
        o.fail("expansion not exact at n=" + std::to_string(n) + " p=" + std::to_string(p));
      }
    }
  }
  o.info("max reconstruction residual " + fmt(worst));
  return o;
}

// 11. f[4,5,2] = 2 at (2,3), against the vanishing claim; confirmed by an
// independent least-squares expansion
Outcome criterion_vanishing_erratum() {
  Outcome o;
  const StructureConstants f = structure_constants(2, 3);
  if (std::abs(f.get(4, 5, 2) - 2.0) > kTol) {
    o.fail("trace projection gives f[4,5,2] = " + fmt(f.get(4, 5, 2)));
  }

  const VerificationReport report = full_report(2, 3, kTol);
  const IdentityRecord* rec = report.find("vanishing-claim");
  if (rec == nullptr || rec->status != CheckStatus::ErratumExpected) {
    o.fail("vanishing-claim not recorded as erratum-expected");
  } else {
    bool pinned = false;
    for (const auto& ce : rec->counterexamples) {
      if (ce.location.find("f[4,5,2]") != std::string::npos) pinned = true;
    }
    if (!pinned) o.fail("counterexample f[4,5,2] not recorded");
  }

  // independent oracle: least-squares solve of X = i * sum_c g_c S_c in the
  // flattened real coordinates, no trace projection involved
  const GellMannSystem sys = rect_gellmann(2, 3);
  const ComplexDense x = matmul(sys.lambdas[3], dagger(sys.lambdas[4])) -
                         matmul(sys.lambdas[4], dagger(sys.lambdas[3]));
  const auto square = square_gellmann(2);
  Eigen::MatrixXd a(2 * 4, 3);
  Eigen::VectorXd b(2 * 4);
  for (std::size_t entry = 0; entry < 4; ++entry) {
    const std::size_t i = entry / 2, j = entry % 2;
    b(static_cast<Eigen::Index>(2 * entry)) = x(i, j).real();
    b(static_cast<Eigen::Index>(2 * entry + 1)) = x(i, j).imag();
    for (int c = 0; c < 3; ++c) {
      const ComplexScalar basis_entry = ComplexScalar{0.0, 1.0} * square[c](i, j);
      a(static_cast<Eigen::Index>(2 * entry), c) = basis_entry.real();
      a(static_cast<Eigen::Index>(2 * entry + 1), c) = basis_entry.imag();
    }
  }
  const Eigen::VectorXd solved = a.colPivHouseholderQr().solve(b);
  const double lsq_residual = (a * solved - b).norm();
  if (lsq_residual > kTol) o.fail("least-squares residual " + fmt(lsq_residual));
  if (std::abs(solved(1) - 2.0) > kTol) {
    o.fail("least squares gives coefficient " + fmt(solved(1)) + " on the antisymmetric "
           "generator");
  }
  for (const int c : {0, 2}) {
    if (std::abs(solved(c)) > kTol) o.fail("unexpected coefficient in least-squares solution");
  }
  for (int c = 1; c <= 3; ++c) {
    if (std::abs(solved(c - 1) - f.get(4, 5, c)) > kTol) {
      o.fail("least squares and trace projection disagree at c=" + std::to_string(c));
    }
  }
  o.info("f[4,5,2] = " + fmt(f.get(4, 5, 2)) + ", least squares agrees");
  return o;
}

// 12. square regression at n = p = 2: f[1,2,3] = 2 with total antisymmetry
Outcome criterion_square_constants() {
  Outcome o;
  const StructureConstants f = structure_constants(2, 2);
  if (std::abs(f.get(1, 2, 3) - 2.0) > kTol) {
    o.fail("f[1,2,3] = " + fmt(f.get(1, 2, 3)));
  }
  const auto value = [&](int a, int b, int c) { return a == b ? 0.0 : f.get(a, b, c); };
  for (int a = 1; a <= 3; ++a) {
    for (int b = 1; b <= 3; ++b) {
      for (int c = 1; c <= 3; ++c) {
        const double v = value(a, b, c);
        if (a == b || b == c || a == c) {
          if (std::abs(v) > kTol) o.fail("repeated-index entry is nonzero");
          continue;
        }
        const struct {
          int x, y, z;
          double sign;
        } perms[] = {{a, b, c, 1.0}, {b, c, a, 1.0}, {c, a, b, 1.0},
                     {b, a, c, -1.0}, {a, c, b, -1.0}, {c, b, a, -1.0}};
        for (const auto& perm : perms) {
          if (std::abs(value(perm.x, perm.y, perm.z) - perm.sign * v) > kTol) {
            o.fail("antisymmetry broken at a permutation of (" + std::to_string(a) + "," +
                   std::to_string(b) + "," + std::to_string(c) + ")");
          }
        }
      }
    }
  }
  o.info("f[1,2,3] = " + fmt(f.get(1, 2, 3)));
  return o;
}

// 13. the matrix-free kernel agrees with dense multiplication everywhere and
// beats it at 64x64 over 1000 applications
Outcome criterion_matrix_free() {
  Outcome o;
  double worst = 0.0;
  for (int n = 2; n <= 8; ++n) {
    for (int p = 2; p <= 8; ++p) {
      std::mt19937 rng(31000u + 13u * static_cast<unsigned>(n) + static_cast<unsigned>(p));
      const ComplexDense u = tcm_by_rule(n, p).to_dense();
      for (int trial = 0; trial < 100; ++trial) {
        const auto v = random_vector(rng, static_cast<std::size_t>(n) * p);
        const double res = vec_max_diff(apply_swap(n, p, v), matvec(u, v));
        worst = std::max(worst, res);
        if (res > kTol) {
          o.fail("disagreement " + fmt(res) + " at n=" + std::to_string(n) +
                 " p=" + std::to_string(p));
        }
      }
    }
  }
  const cli::BenchResult bench = cli::run_swap_bench(64, 64, 1000);
  if (!(bench.speedup > 1.0)) {
    o.fail("speedup " + fmt(bench.speedup) + " does not exceed 1");
  }
  o.info("max residual " + fmt(worst) + "; 64x64: dense " + fmt(bench.dense_ns_per_apply) +
         " ns/apply vs matrix-free " + fmt(bench.matrixfree_ns_per_apply) + " ns/apply (" +
         fmt(bench.speedup) + "x)");
  return o;
}

// 14. matrix market and json serializations round-trip every generated matrix
Outcome criterion_round_trip() {
  Outcome o;
  double worst = 0.0;
  const auto check_round_trip = [&](const ComplexDense& m, const std::string& what) {
    const double mm = max_abs_diff(cli::read_matrix_market(cli::to_matrix_market(m)), m);
    const double js = max_abs_diff(cli::dense_from_json(cli::dense_to_json(m)), m);
    worst = std::max({worst, mm, js});
    if (mm > kRoundTripTol) o.fail("matrix market round trip off by " + fmt(mm) + " for " + what);
    if (js > kRoundTripTol) o.fail("json round trip off by " + fmt(js) + " for " + what);
  };
  for (int n = 2; n <= 8; ++n) {
    for (int p = 2; p <= 8; ++p) {
      const std::string cell = "n=" + std::to_string(n) + " p=" + std::to_string(p);
      check_round_trip(tcm_by_rule(n, p).to_dense(), "swap matrix at " + cell);
      check_round_trip(tcm_by_gellmann(n, p), "decomposition matrix at " + cell);
      const GellMannSystem sys = rect_gellmann(n, p);
      check_round_trip(sys.padded_identity, "padded identity at " + cell);
      for (const auto& lam : sys.lambdas) check_round_trip(lam, "generator at " + cell);
    }
  }
  o.info("max round-trip residual " + fmt(worst));
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"stepping construction reproduces the 6x6 swap matrix at (2,3)", criterion_explicit_2x3},
      {"all three constructions reproduce the 4x4 swap matrix at (2,2)", criterion_explicit_2x2},
      {"cross-construction equality over 2 <= n,p <= 8", criterion_cross_construction},
      {"defining swap property on random product vectors", criterion_defining_property},
      {"gram orthonormality over the grid, both orientations", criterion_gram},
      {"stacked systems have full numerical rank", criterion_span},
      {"extra-column and square elementary identities", criterion_proof_identities},
      {"permutation algebra holds exactly", criterion_permutation_algebra},
      {"transpose symmetry claim fails exactly as documented", criterion_symmetry_erratum},
      {"commutator expansion is exact on the wide grid", criterion_expansion_exactness},
      {"vanishing claim fails with f[4,5,2] = 2, confirmed by least squares",
       criterion_vanishing_erratum},
      {"square structure constants: f[1,2,3] = 2 with total antisymmetry",
       criterion_square_constants},
      {"matrix-free swap agrees with dense and beats it at 64x64", criterion_matrix_free},
      {"matrix market and json round trips are lossless", criterion_round_trip},
  };

  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome outcome;
    try {
      outcome = criteria[k].second();
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    std::cout << (outcome.pass ? "[PASS] " : "[FAIL] ") << (k + 1) << ". " << criteria[k].first;
    if (!outcome.detail.empty()) std::cout << " -- " << outcome.detail;
    std::cout << "\n";
    if (!outcome.pass) ++failures;
  }
  std::cout << "acceptance: " << (criteria.size() - failures) << "/" << criteria.size()
            << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
