#include "tensorcomm/verification.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "tensorcomm/commutation.hpp"
#include "tensorcomm/structure_constants.hpp"

namespace tcm {

std::string_view to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::ErratumExpected: return "erratum-expected";
    case CheckStatus::ErratumChanged: return "erratum-changed";
  }
  return "unknown";
}

bool VerificationReport::ok() const {
  return std::none_of(records.begin(), records.end(), [](const IdentityRecord& r) {
    return r.status == CheckStatus::Fail || r.status == CheckStatus::ErratumChanged;
  });
}

const IdentityRecord* VerificationReport::find(std::string_view name) const {
  for (const auto& r : records) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

double basis_min_singular_value(const GellMannSystem& system) {
  const std::size_t dim = system.padded_identity.size();
  Eigen::MatrixXcd stacked(system.lambdas.size() + 1, dim);
  const auto fill_row = [&](Eigen::Index row, const ComplexDense& m) {
    const auto entries = m.entries();
    for (std::size_t k = 0; k < entries.size(); ++k) {
      stacked(row, static_cast<Eigen::Index>(k)) = entries[k];
    }
  };
  fill_row(0, system.padded_identity);
  for (std::size_t a = 0; a < system.lambdas.size(); ++a) {
    fill_row(static_cast<Eigen::Index>(a) + 1, system.lambdas[a]);
  }
  const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(stacked);
  return svd.singularValues().minCoeff();
}

namespace {

constexpr double kSpanThreshold = 1e-8;   // rank cutoff for the span check
constexpr double kSparsityCutoff = 1e-9;  // stored structure constants
constexpr std::size_t kMaxCounterexamples = 12;

std::string cell_str(int n, int p) {
  return "n=" + std::to_string(n) + " p=" + std::to_string(p);
}

std::string fmt(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

// Tr(a*b) without forming the product; a.cols()==b.rows(), a.rows()==b.cols()
ComplexScalar trace_product(const ComplexDense& a, const ComplexDense& b) {
  ComplexScalar acc{};
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      acc += a(i, j) * b(j, i);
    }
  }
  return acc;
}

class RecordBuilder {
 public:
  RecordBuilder(std::string name, std::string claim) {
    rec_.name = std::move(name);
    rec_.claim = std::move(claim);
  }

  void observe(double residual) { rec_.max_residual = std::max(rec_.max_residual, residual); }

  void counterexample(std::string location, std::string expected, std::string computed) {
    ++violations_;
    if (rec_.counterexamples.size() < kMaxCounterexamples) {
      rec_.counterexamples.push_back({std::move(location), std::move(expected), std::move(computed)});
    }
  }

  void require(bool ok, double residual, const std::string& location, const std::string& expected,
               const std::string& computed) {
    observe(residual);
    if (!ok) counterexample(location, expected, computed);
  }

  void set_range(std::string range) { rec_.range = std::move(range); }
  void set_note(std::string note) { rec_.note = std::move(note); }
  std::size_t violations() const { return violations_; }

  IdentityRecord finish(CheckStatus status_if_clean = CheckStatus::Pass) {
    return finish_with(violations_ == 0 ? status_if_clean : CheckStatus::Fail);
  }

  IdentityRecord finish_with(CheckStatus status) {
    rec_.status = status;
    if (violations_ > rec_.counterexamples.size()) {
      const auto suppressed = violations_ - rec_.counterexamples.size();
      if (!rec_.note.empty()) rec_.note += "; ";
      rec_.note += std::to_string(suppressed) + " further counterexamples suppressed";
    }
    return std::move(rec_);
  }

 private:
  IdentityRecord rec_;
  std::size_t violations_ = 0;
};

ComplexDense random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, bool integer) {
  std::uniform_int_distribution<int> ints(-3, 3);
  std::uniform_real_distribution<double> reals(-1.0, 1.0);
  ComplexDense m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      m(i, j) = integer ? ComplexScalar(ints(rng), ints(rng))
                        : ComplexScalar(reals(rng), reals(rng));
    }
  }
  return m;
}

std::vector<ComplexScalar> random_vector(std::mt19937& rng, std::size_t len) {
  std::uniform_real_distribution<double> reals(-1.0, 1.0);
  std::vector<ComplexScalar> v(len);
  for (auto& z : v) z = ComplexScalar(reals(rng), reals(rng));
  return v;
}

// flattened a (x) b, row-major: out[i*p + j] = a[i]*b[j]
std::vector<ComplexScalar> kron_vec(std::span<const ComplexScalar> a,
                                    std::span<const ComplexScalar> b) {
  std::vector<ComplexScalar> out(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i * b.size() + j] = a[i] * b[j];
    }
  }
  return out;
}

double vec_max_diff(std::span<const ComplexScalar> a, std::span<const ComplexScalar> b) {
  double best = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) best = std::max(best, std::abs(a[k] - b[k]));
  return best;
}

// ---------------------------------------------------------------------------
// structure-constant analysis for one (n, p) cell, p >= n
// ---------------------------------------------------------------------------

struct VanishingViolation {
  int a = 0, b = 0, c = 0;
  double value = 0.0;
};

struct StructureCellData {
  int n = 0, p = 0;
  double max_expansion_residual = 0.0;
  double max_imag_residual = 0.0;
  int square_count = 0;            // n^2 - 1
  std::vector<double> restricted;  // f over the square block, all three slots
  std::vector<VanishingViolation> violations;

  double f(int a, int b, int c) const {
    const auto m = static_cast<std::size_t>(square_count);
    return restricted[((static_cast<std::size_t>(a) - 1) * m + (b - 1)) * m + (c - 1)];
  }
};

StructureCellData analyze_structure_cell(int n, int p) {
  const GellMannSystem system = rect_gellmann(n, p);
  const auto square = square_gellmann(n);
  const int count = n * p - 1;
  const int m = n * n - 1;

  StructureCellData data;
  data.n = n;
  data.p = p;
  data.square_count = m;
  data.restricted.assign(static_cast<std::size_t>(m) * m * m, 0.0);
  constexpr ComplexScalar minus_i{0.0, -1.0};

  for (int a = 1; a <= count; ++a) {
    for (int b = a + 1; b <= count; ++b) {
      const ComplexDense x = matmul(system.lambdas[a - 1], dagger(system.lambdas[b - 1])) -
                             matmul(system.lambdas[b - 1], dagger(system.lambdas[a - 1]));
      const ComplexDense hx = minus_i * x;  // hermitian traceless
      ComplexDense recon = (trace(hx) / static_cast<double>(n)) * identity(x.rows());
      for (int c = 1; c <= m; ++c) {
        const ComplexScalar raw = 0.5 * trace_product(hx, square[c - 1]);
        const double coeff = raw.real();
        data.max_imag_residual = std::max(data.max_imag_residual, std::abs(raw.imag()));
        recon += coeff * square[c - 1];
        if (a <= m && b <= m) {
          const auto um = static_cast<std::size_t>(m);
          const auto ia = static_cast<std::size_t>(a) - 1;
          const auto ib = static_cast<std::size_t>(b) - 1;
          const auto ic = static_cast<std::size_t>(c) - 1;
          data.restricted[(ia * um + ib) * um + ic] = coeff;
          data.restricted[(ib * um + ia) * um + ic] = -coeff;
        }
        if (b > m && std::abs(coeff) > kSparsityCutoff) {
          data.violations.push_back({a, b, c, coeff});
        }
      }
      data.max_expansion_residual =
          std::max(data.max_expansion_residual, max_abs_diff(hx, recon));
    }
  }
  return data;
}

// worst deviation from total antisymmetry over slots confined to the square
// block, including the repeated-index cases which must vanish
double restricted_antisymmetry_deviation(const StructureCellData& data) {
  const int m = data.square_count;
  double worst = 0.0;
  for (int a = 1; a <= m; ++a) {
    for (int b = a + 1; b <= m; ++b) {
      for (int c = 1; c <= m; ++c) {
        const double v = data.f(a, b, c);
        if (c == a || c == b) {
          worst = std::max(worst, std::abs(v));
          continue;
        }
        const auto check = [&](double other, double sign) {
          worst = std::max(worst, std::abs(other - sign * v));
        };
        check(data.f(b, c, a), 1.0);
        check(data.f(c, a, b), 1.0);
        check(data.f(a, c, b), -1.0);
        check(data.f(c, b, a), -1.0);
        check(data.f(b, a, c), -1.0);
      }
    }
  }
  return worst;
}

const std::string kExpansionClaim =
    "L_a L_b^+ - L_b L_a^+ = i * sum_c f[a,b,c] S_c with real f over the square basis "
    "(reconstruction exact)";
const std::string kAntisymmetryClaim =
    "f is totally antisymmetric on slot permutations where all three indices address the "
    "square block (a, b, c <= n^2-1)";
const std::string kVanishingClaim =
    "f[a,b,c] = 0 whenever at least one of a, b, c lies in {n^2, ..., np-1}";
const std::string kSkippedRegimeNote =
    "n > p lies outside the claimed regime (p >= n >= 2); nothing checked";

}  // namespace

std::vector<IdentityRecord> check_structure_identities(int n, int p, double tol) {
  if (n < 2 || p < 2) {
    throw std::domain_error("check_structure_identities: both dimensions must be >= 2");
  }
  std::vector<IdentityRecord> records;
  RecordBuilder expansion("expansion-exactness", kExpansionClaim);
  RecordBuilder antisymmetry("antisymmetry-restricted", kAntisymmetryClaim);
  RecordBuilder vanishing("vanishing-claim", kVanishingClaim);
  const std::string cell = cell_str(n, p);
  expansion.set_range(cell);
  antisymmetry.set_range(cell);
  vanishing.set_range(cell);

  if (n > p) {
    expansion.set_note(kSkippedRegimeNote);
    antisymmetry.set_note(kSkippedRegimeNote);
    vanishing.set_note(kSkippedRegimeNote);
    records.push_back(expansion.finish());
    records.push_back(antisymmetry.finish());
    records.push_back(vanishing.finish());
    return records;
  }

  const StructureCellData data = analyze_structure_cell(n, p);
  expansion.require(data.max_expansion_residual <= tol && data.max_imag_residual <= tol,
                    std::max(data.max_expansion_residual, data.max_imag_residual), cell,
                    "residual <= " + fmt(tol), fmt(data.max_expansion_residual));
  records.push_back(expansion.finish());

  const double dev = restricted_antisymmetry_deviation(data);
  antisymmetry.require(dev <= tol, dev, cell, "deviation <= " + fmt(tol), fmt(dev));
  records.push_back(antisymmetry.finish());

  for (const auto& v : data.violations) {
    vanishing.observe(std::abs(v.value));
    vanishing.counterexample(cell + ", f[" + std::to_string(v.a) + "," + std::to_string(v.b) +
                                 "," + std::to_string(v.c) + "]",
                             "0", fmt(v.value));
  }
  if (data.violations.empty()) {
    records.push_back(vanishing.finish());
  } else {
    vanishing.set_note("the claim fails for same-column generator pairs; recorded as an "
                       "expected discrepancy");
    records.push_back(vanishing.finish_with(CheckStatus::ErratumExpected));
  }
  return records;
}

VerificationReport full_report(int n_max, int p_max, double tol) {
  if (n_max < 2 || p_max < 2) {
    throw std::domain_error("full_report: grid bounds must be >= 2");
  }

  VerificationReport report;
  report.n_max = n_max;
  report.p_max = p_max;
  report.tol = tol;

  const std::string grid = "2 <= n <= " + std::to_string(n_max) +
                           ", 2 <= p <= " + std::to_string(p_max);
  const std::string wide_grid = grid + ", restricted to p >= n";

  // --- product-algebra spot checks on random matrices -----------------------
  RecordBuilder assoc("kron-associativity",
                      "kron(kron(A,B),C) = kron(A,kron(B,C)), exactly on integer entries");
  RecordBuilder mixed("kron-mixed-product",
                      "kron(A,B) * kron(C,D) = kron(A*C, B*D) on conforming shapes");
  RecordBuilder daggerdist("kron-dagger-distribution", "kron(A,B)^+ = kron(A^+, B^+)");
  RecordBuilder tracemul("kron-trace-product", "Tr kron(A,B) = Tr(A) * Tr(B) for square A, B");
  {
    std::mt19937 rng(19937);
    std::uniform_int_distribution<std::size_t> dims(1, 4);
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t q = dims(rng), r = dims(rng), s = dims(rng);
      const std::size_t t = dims(rng), u = dims(rng), w = dims(rng);
      const ComplexDense a = random_matrix(rng, q, r, false);
      const ComplexDense c = random_matrix(rng, r, s, false);
      const ComplexDense b = random_matrix(rng, t, u, false);
      const ComplexDense d = random_matrix(rng, u, w, false);
      const double res = max_abs_diff(matmul(kron(a, b), kron(c, d)), kron(matmul(a, c), matmul(b, d)));
      mixed.require(res <= tol, res, "trial " + std::to_string(trial), "<= " + fmt(tol), fmt(res));

      const double dres = max_abs_diff(dagger(kron(a, b)), kron(dagger(a), dagger(b)));
      daggerdist.require(dres <= tol, dres, "trial " + std::to_string(trial), "<= " + fmt(tol),
                         fmt(dres));

      const ComplexDense sq1 = random_matrix(rng, q, q, false);
      const ComplexDense sq2 = random_matrix(rng, t, t, false);
      const double tres = std::abs(trace(kron(sq1, sq2)) - trace(sq1) * trace(sq2));
      tracemul.require(tres <= tol, tres, "trial " + std::to_string(trial), "<= " + fmt(tol),
                       fmt(tres));

      const ComplexDense ia = random_matrix(rng, q, r, true);
      const ComplexDense ib = random_matrix(rng, t, u, true);
      const ComplexDense ic = random_matrix(rng, s, w, true);
      assoc.require(kron(kron(ia, ib), ic) == kron(ia, kron(ib, ic)), 0.0,
                    "trial " + std::to_string(trial), "identical matrices", "differ");
    }
    assoc.set_range("random integer shapes <= 4, 40 trials");
    mixed.set_range("random shapes <= 4, 40 trials");
    daggerdist.set_range("random shapes <= 4, 40 trials");
    tracemul.set_range("random shapes <= 4, 40 trials");
  }

  // --- grid accumulators -----------------------------------------------------
  RecordBuilder rule_index("stepping-rule-index-map",
                           "the stepping walk and the closed-form index map (col = i*p + j, "
                           "row = j*n + i) build the same permutation");
  RecordBuilder elementary_sum("elementary-sum",
                               "U = sum over i <= p, j <= n of kron(E_pxn^(i,j), E_nxp^(j,i)), "
                               "exactly");
  RecordBuilder gell_dec("gellmann-decomposition",
                         "U = (1/min(n,p)) kron(I_nxp^+, I_nxp) + (1/2) sum_a kron(L_a^+, L_a)");
  RecordBuilder square_dec("square-decomposition",
                           "U = (1/n) kron(I, I) + (1/2) sum_a kron(S_a, S_a) for the square "
                           "basis S");
  RecordBuilder defining("defining-property",
                         "U * (a kron b) = b kron a for all complex a (length n), b (length p)");
  RecordBuilder swap_agree("apply-swap-agreement",
                           "matrix-free application agrees with multiplication by the "
                           "materialized matrix");
  RecordBuilder explicit22("explicit-2x2", "U at (2,2) equals the 4x4 swap matrix");
  RecordBuilder explicit23("explicit-2x3",
                           "U at (2,3) equals its reference 6x6 permutation matrix");
  RecordBuilder reference_systems("reference-systems",
                                  "the (2,3), (3,2) and (2,4) systems match their hand-built "
                                  "references; the (3,4) system has 11 generators of shape 3x4");
  RecordBuilder system_structure("system-structure",
                                 "each system has np-1 generators of shape n x p; wide systems "
                                 "pad the square basis with zero columns and complete with "
                                 "sqrt(2) single-entry matrices; square systems reduce to the "
                                 "square basis; the padded identity embeds I_min(n,p)");
  RecordBuilder wide_tall("wide-tall-conjugation",
                          "the p x n system is the entrywise conjugate transpose of the n x p "
                          "system, in the same order");
  RecordBuilder gram_orth("gram-orthonormality", "Tr(L_a^+ L_b) = 2 delta_ab");
  RecordBuilder span("basis-span",
                     "{padded identity} united with the generators spans the n x p matrix "
                     "space (smallest singular value of the stacked system > 1e-8)");
  RecordBuilder tail("tail-identity",
                     "(1/2) sum over extra-column generators of kron(L_a^+, L_a) = "
                     "sum over j <= n, n < l <= p of kron(E^(j,l)t, E^(j,l))");
  RecordBuilder square_elem("square-elementary-identity",
                            "sum over j, l <= n of kron(E^(j,l)t, E^(j,l)) = (1/n) kron(I, I) + "
                            "(1/2) sum_a kron(S_a, S_a)");
  RecordBuilder transpose_dual("transpose-duality", "U_nxp^t = U_pxn, exactly");
  RecordBuilder inverse_pair("inverse-pairing", "U_pxn * U_nxp = I, exactly");
  RecordBuilder square_sym("square-symmetric-involution",
                           "U_nxn is symmetric and squares to the identity, exactly");
  RecordBuilder symmetry_claim("symmetry-claim", "U_nxp = U_nxp^t = U_nxp^+ for all n, p >= 2");
  RecordBuilder expansion("expansion-exactness", kExpansionClaim);
  RecordBuilder antisymmetry("antisymmetry-restricted", kAntisymmetryClaim);
  RecordBuilder pauli_reg("pauli-commutator-regression",
                          "at n = p = 2 the only independent nonzero constant is f[1,2,3] = 2");
  RecordBuilder vanishing("vanishing-claim", kVanishingClaim);
  RecordBuilder enumeration("extra-column-enumeration",
                            "wide systems enumerate the extra-column block column-major: "
                            "generator n^2 + (t-1)n + (r-1) is sqrt(2) E^(r, n+t), ending each "
                            "column block at row n");

  int nonsquare_cells = 0;
  int nonsquare_asymmetric = 0;
  bool square_symmetry_broken = false;
  int wide_nonsquare_cells = 0;
  int wide_nonsquare_violated = 0;
  std::optional<bool> pinned_23_violation;
  double min_sigma = std::numeric_limits<double>::infinity();

  const double root2 = std::sqrt(2.0);

  for (int n = 2; n <= n_max; ++n) {
    for (int p = 2; p <= p_max; ++p) {
      const std::string cell = cell_str(n, p);
      const std::size_t dim = static_cast<std::size_t>(n) * p;

      const PermutationSpec rule = tcm_by_rule(n, p);
      const PermutationSpec closed = tcm_from_index_map(n, p);
      rule_index.require(rule.target_of == closed.target_of && rule.is_bijection(), 0.0, cell,
                         "identical permutations", "differ");

      const ComplexDense u = rule.to_dense();
      const ComplexDense u_elem = tcm_by_elementary(n, p);
      {
        const double res = max_abs_diff(u, u_elem);
        elementary_sum.require(u == u_elem, res, cell, "0", fmt(res));
      }

      const ComplexDense u_gell = tcm_by_gellmann(n, p);
      {
        const double res = max_abs_diff(u, u_gell);
        bool rounds = true;
        for (const auto& z : u_gell.entries()) {
          const double re = z.real();
          if (std::abs(z.imag()) > 1e-9 || std::min(std::abs(re), std::abs(re - 1.0)) > 1e-9) {
            rounds = false;
            break;
          }
        }
        gell_dec.require(res <= tol && rounds, res, cell,
                         "residual <= " + fmt(tol) + " and entries round to 0/1", fmt(res));
      }

      if (n == p) {
        const auto square = square_gellmann(n);
        ComplexDense rhs = (1.0 / n) * kron(identity(n), identity(n));
        for (const auto& s : square) rhs += 0.5 * kron(s, s);
        const double res = max_abs_diff(u, rhs);
        square_dec.require(res <= tol, res, cell, "<= " + fmt(tol), fmt(res));

        // proof identity: the elementary double sum equals the same expansion
        ComplexDense lhs(dim, dim);
        for (std::size_t j = 1; j <= static_cast<std::size_t>(n); ++j) {
          for (std::size_t l = 1; l <= static_cast<std::size_t>(n); ++l) {
            const ComplexDense e = elementary(n, n, j, l);
            lhs += kron(transpose(e), e);
          }
        }
        const double res4 = max_abs_diff(lhs, rhs);
        square_elem.require(res4 <= tol, res4, cell, "<= " + fmt(tol), fmt(res4));
      }

      {
        std::mt19937 rng(1000003u * static_cast<unsigned>(n) + static_cast<unsigned>(p));
        double worst_gell = 0.0;
        bool exact_ok = true;
        for (int trial = 0; trial < 200; ++trial) {
          const auto a = random_vector(rng, static_cast<std::size_t>(n));
          const auto b = random_vector(rng, static_cast<std::size_t>(p));
          const auto ab = kron_vec(a, b);
          const auto ba = kron_vec(b, a);
          if (vec_max_diff(matvec(u, ab), ba) != 0.0) exact_ok = false;
          worst_gell = std::max(worst_gell, vec_max_diff(matvec(u_gell, ab), ba));
        }
        defining.require(exact_ok && worst_gell <= tol, worst_gell, cell,
                         "exact for the permutation form, <= " + fmt(tol) + " for the "
                         "decomposition form",
                         fmt(worst_gell));

        double worst_apply = 0.0;
        for (int trial = 0; trial < 100; ++trial) {
          const auto v = random_vector(rng, dim);
          worst_apply = std::max(worst_apply, vec_max_diff(apply_swap(n, p, v), matvec(u, v)));
        }
        swap_agree.require(worst_apply <= tol, worst_apply, cell, "<= " + fmt(tol),
                           fmt(worst_apply));
      }

      if (n == 2 && p == 2) {
        const ComplexDense golden{{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}};
        const double res = std::max(max_abs_diff(u, golden), max_abs_diff(u_elem, golden));
        const double res_gell = max_abs_diff(u_gell, golden);
        explicit22.require(u == golden && u_elem == golden && res_gell <= tol,
                           std::max(res, res_gell), cell,
                           "all three constructions reproduce the 4x4 swap matrix",
                           fmt(std::max(res, res_gell)));
        explicit22.set_range(cell);
      }
      if (n == 2 && p == 3) {
        const ComplexDense golden{{1, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0}, {0, 1, 0, 0, 0, 0},
                                  {0, 0, 0, 0, 1, 0}, {0, 0, 1, 0, 0, 0}, {0, 0, 0, 0, 0, 1}};
        const double res = max_abs_diff(u, golden);
        explicit23.require(u == golden, res, cell, "0", fmt(res));
        explicit23.set_range(cell);
      }

      // --- basis system checks ---------------------------------------------
      const GellMannSystem sys = rect_gellmann(n, p);
      {
        bool ok = sys.lambdas.size() == dim - 1;
        for (const auto& lam : sys.lambdas) {
          ok = ok && lam.rows() == static_cast<std::size_t>(n) &&
               lam.cols() == static_cast<std::size_t>(p);
        }
        // padded identity embeds I_min(n,p)
        for (std::size_t i = 0; i < static_cast<std::size_t>(n) && ok; ++i) {
          for (std::size_t j = 0; j < static_cast<std::size_t>(p) && ok; ++j) {
            const ComplexScalar want = (i == j && i < std::min<std::size_t>(n, p)) ? 1.0 : 0.0;
            ok = sys.padded_identity(i, j) == want;
          }
        }
        if (n == p) {
          const auto square = square_gellmann(n);
          for (std::size_t k = 0; k < square.size() && ok; ++k) {
            ok = sys.lambdas[k] == square[k];
          }
        }
        if (p > n) {
          const int m = n * n - 1;
          for (int a = 1; a <= m && ok; ++a) {
            const auto& lam = sys.lambdas[a - 1];
            for (std::size_t i = 0; i < lam.rows() && ok; ++i) {
              for (std::size_t j = static_cast<std::size_t>(n); j < lam.cols() && ok; ++j) {
                ok = lam(i, j) == ComplexScalar{};
              }
            }
          }
        }
        system_structure.require(ok, 0.0, cell, "structure holds", "violated");
      }

      if (p > n) {
        // pinned column-major enumeration of the extra-column block
        bool ok = true;
        const int m = n * n - 1;
        for (int t = 1; t <= p - n && ok; ++t) {
          for (int r = 1; r <= n && ok; ++r) {
            const std::size_t index = static_cast<std::size_t>(m) +
                                      (static_cast<std::size_t>(t) - 1) * n + (r - 1);
            const ComplexDense expected = root2 * elementary(n, p, r, n + t);
            ok = sys.lambdas[index] == expected;
          }
        }
        enumeration.require(ok, 0.0, cell, "column-major sqrt(2) E^(r, n+t)", "differs");
      }

      {
        const GellMannSystem swapped = rect_gellmann(p, n);
        bool ok = swapped.lambdas.size() == sys.lambdas.size() &&
                  swapped.padded_identity == dagger(sys.padded_identity);
        for (std::size_t k = 0; k < sys.lambdas.size() && ok; ++k) {
          ok = swapped.lambdas[k] == dagger(sys.lambdas[k]);
        }
        wide_tall.require(ok, 0.0, cell, "conjugate transpose, same order", "differs");
      }

      {
        const ComplexDense g = gram(sys);
        const double res = max_abs_diff(g, 2.0 * identity(g.rows()));
        gram_orth.require(res <= tol, res, cell, "<= " + fmt(tol), fmt(res));
      }

      {
        const double sigma = basis_min_singular_value(sys);
        min_sigma = std::min(min_sigma, sigma);
        span.require(sigma > kSpanThreshold, 0.0, cell, "> " + fmt(kSpanThreshold), fmt(sigma));
      }

      if (n == 2 && p == 3) {
        const std::vector<ComplexDense> golden{
            {{0, 1, 0}, {1, 0, 0}},
            {{0, {0, -1}, 0}, {{0, 1}, 0, 0}},
            {{1, 0, 0}, {0, -1, 0}},
            {{0, 0, root2}, {0, 0, 0}},
            {{0, 0, 0}, {0, 0, root2}},
        };
        bool ok = sys.lambdas.size() == golden.size() &&
                  sys.padded_identity == ComplexDense{{1, 0, 0}, {0, 1, 0}};
        for (std::size_t k = 0; k < golden.size() && ok; ++k) ok = sys.lambdas[k] == golden[k];
        reference_systems.require(ok, 0.0, cell, "matches the reference list", "differs");
      }
      if (n == 3 && p == 2) {
        const GellMannSystem wide = rect_gellmann(2, 3);
        bool ok = sys.lambdas.size() == wide.lambdas.size();
        for (std::size_t k = 0; k < wide.lambdas.size() && ok; ++k) {
          ok = sys.lambdas[k] == dagger(wide.lambdas[k]);
        }
        reference_systems.require(ok, 0.0, cell, "conjugates of the (2,3) list", "differs");
      }
      if (n == 2 && p == 4) {
        const std::vector<ComplexDense> golden_tail{
            {{0, 0, root2, 0}, {0, 0, 0, 0}},
            {{0, 0, 0, 0}, {0, 0, root2, 0}},
            {{0, 0, 0, root2}, {0, 0, 0, 0}},
            {{0, 0, 0, 0}, {0, 0, 0, root2}},
        };
        bool ok = sys.lambdas.size() == 7;
        for (std::size_t k = 0; k < golden_tail.size() && ok; ++k) {
          ok = sys.lambdas[3 + k] == golden_tail[k];
        }
        reference_systems.require(ok, 0.0, cell, "extra-column generators match", "differs");
      }
      if (n == 3 && p == 4) {
        const bool ok = sys.lambdas.size() == 11 &&
                        std::all_of(sys.lambdas.begin(), sys.lambdas.end(),
                                    [](const ComplexDense& lam) {
                                      return lam.rows() == 3 && lam.cols() == 4;
                                    });
        reference_systems.require(ok, 0.0, cell, "11 generators of shape 3x4", "differs");
      }

      if (n <= p) {
        const auto [lhs, rhs] = tail_identity(n, p);
        const double res = max_abs_diff(lhs, rhs);
        tail.require(res <= tol, res, cell, "<= " + fmt(tol), fmt(res));
      }

      // --- permutation algebra ----------------------------------------------
      const ComplexDense u_swapped = tcm_by_rule(p, n).to_dense();
      {
        const ComplexDense ut = transpose(u);
        transpose_dual.require(ut == u_swapped, max_abs_diff(ut, u_swapped), cell, "0",
                               fmt(max_abs_diff(ut, u_swapped)));
        const ComplexDense prod = matmul(u_swapped, u);
        const ComplexDense eye = identity(dim);
        inverse_pair.require(prod == eye, max_abs_diff(prod, eye), cell, "0",
                             fmt(max_abs_diff(prod, eye)));
      }
      if (n == p) {
        const ComplexDense usq = matmul(u, u);
        const bool ok = u == transpose(u) && usq == identity(dim);
        square_sym.require(ok, 0.0, cell, "symmetric involution", "violated");
        if (!ok) square_symmetry_broken = true;
      } else {
        ++nonsquare_cells;
        // report the first 1 whose mirror position is empty
        bool found = false;
        for (std::size_t r = 0; r < dim && !found; ++r) {
          for (std::size_t c = 0; c < dim && !found; ++c) {
            if (r == c) continue;
            if (u(r, c) == ComplexScalar{1.0} && u(c, r) != ComplexScalar{1.0}) {
              found = true;
              symmetry_claim.counterexample(
                  cell + ", entries (" + std::to_string(r + 1) + "," + std::to_string(c + 1) +
                      ") vs (" + std::to_string(c + 1) + "," + std::to_string(r + 1) + ")",
                  "equal", "1 vs 0");
            }
          }
        }
        if (found) ++nonsquare_asymmetric;
      }

      // --- structure constants ----------------------------------------------
      if (n <= p) {
        const StructureCellData data = analyze_structure_cell(n, p);
        const double res = std::max(data.max_expansion_residual, data.max_imag_residual);
        expansion.require(res <= tol, res, cell, "<= " + fmt(tol), fmt(res));
        const double dev = restricted_antisymmetry_deviation(data);
        antisymmetry.require(dev <= tol, dev, cell, "<= " + fmt(tol), fmt(dev));

        if (n == 2 && p == 2) {
          const double f123 = data.f(1, 2, 3);
          bool only_perms = true;
          for (int a = 1; a <= 3; ++a) {
            for (int b = 1; b <= 3; ++b) {
              for (int c = 1; c <= 3; ++c) {
                if (std::abs(data.f(a, b, c)) <= kSparsityCutoff) continue;
                const bool perm = a != b && b != c && a != c;
                only_perms = only_perms && perm;
              }
            }
          }
          pauli_reg.require(std::abs(f123 - 2.0) <= tol && only_perms, std::abs(f123 - 2.0),
                            cell, "f[1,2,3] = 2 and no nonzero outside its permutations",
                            "f[1,2,3] = " + fmt(f123));
          pauli_reg.set_range(cell);
        }

        if (n < p) {
          ++wide_nonsquare_cells;
          if (!data.violations.empty()) ++wide_nonsquare_violated;
          for (const auto& v : data.violations) {
            vanishing.observe(std::abs(v.value));
            vanishing.counterexample(cell + ", f[" + std::to_string(v.a) + "," +
                                         std::to_string(v.b) + "," + std::to_string(v.c) + "]",
                                     "0", fmt(v.value));
          }
          if (n == 2 && p == 3) {
            pinned_23_violation = std::any_of(
                data.violations.begin(), data.violations.end(), [&](const VanishingViolation& v) {
                  return v.a == 4 && v.b == 5 && v.c == 2 && std::abs(v.value - 2.0) <= tol;
                });
          }
        }
      }
    }
  }

  // --- assemble --------------------------------------------------------------
  const auto with_grid = [&](RecordBuilder& b, const std::string& range) -> RecordBuilder& {
    b.set_range(range);
    return b;
  };

  report.records.push_back(assoc.finish());
  report.records.push_back(mixed.finish());
  report.records.push_back(daggerdist.finish());
  report.records.push_back(tracemul.finish());
  report.records.push_back(with_grid(rule_index, grid).finish());
  report.records.push_back(with_grid(elementary_sum, grid).finish());
  report.records.push_back(with_grid(gell_dec, grid).finish());
  report.records.push_back(with_grid(square_dec, grid + ", n = p").finish());
  report.records.push_back(with_grid(defining, grid + ", 200 random pairs per cell").finish());

  report.records.push_back(explicit22.finish());
  if (p_max >= 3) {
    report.records.push_back(explicit23.finish());
  } else {
    explicit23.set_note("cell (2,3) outside the requested grid; not evaluated");
    report.records.push_back(explicit23.finish());
  }

  report.records.push_back(with_grid(reference_systems,
                                     "cells (2,3), (3,2), (2,4), (3,4) when on the grid")
                               .finish());
  report.records.push_back(with_grid(system_structure, grid).finish());
  report.records.push_back(with_grid(wide_tall, grid).finish());
  report.records.push_back(with_grid(gram_orth, grid).finish());
  {
    span.set_note("smallest singular value observed: " + fmt(min_sigma));
    report.records.push_back(with_grid(span, grid).finish());
  }
  report.records.push_back(with_grid(tail, wide_grid).finish());
  report.records.push_back(with_grid(square_elem, grid + ", n = p").finish());
  report.records.push_back(with_grid(transpose_dual, grid).finish());
  report.records.push_back(with_grid(inverse_pair, grid).finish());
  report.records.push_back(with_grid(square_sym, grid + ", n = p").finish());

  {
    symmetry_claim.set_range(grid);
    CheckStatus status;
    if (square_symmetry_broken) {
      status = CheckStatus::ErratumChanged;
      symmetry_claim.set_note("symmetry failed on a square cell, which contradicts the "
                              "documented behavior");
    } else if (nonsquare_cells == 0) {
      status = CheckStatus::Pass;
      symmetry_claim.set_note("holds on the all-square range checked");
    } else if (nonsquare_asymmetric == nonsquare_cells) {
      status = CheckStatus::ErratumExpected;
      symmetry_claim.set_note("fails for every n != p as documented; the transpose is "
                              "U_pxn, not U_nxp (see transpose-duality)");
    } else {
      status = CheckStatus::ErratumChanged;
      symmetry_claim.set_note("some non-square cell was unexpectedly symmetric");
    }
    report.records.push_back(symmetry_claim.finish_with(status));
  }

  report.records.push_back(with_grid(expansion, wide_grid).finish());
  report.records.push_back(with_grid(antisymmetry, wide_grid).finish());
  report.records.push_back(pauli_reg.finish());

  {
    vanishing.set_range(wide_grid);
    CheckStatus status;
    if (wide_nonsquare_cells == 0) {
      status = CheckStatus::Pass;
      vanishing.set_note("no wide non-square cells on the grid; nothing to contradict");
    } else if (wide_nonsquare_violated == wide_nonsquare_cells &&
               pinned_23_violation.value_or(true)) {
      status = CheckStatus::ErratumExpected;
      vanishing.set_note("fails on every wide non-square cell as documented: same-column "
                         "generator pairs give nonzero constants (e.g. f[4,5,2] = 2 at n=2 "
                         "p=3); tall cells are outside the claimed regime");
    } else {
      status = CheckStatus::ErratumChanged;
      vanishing.set_note("the documented counterexample pattern did not reproduce");
    }
    report.records.push_back(vanishing.finish_with(status));
  }

  {
    enumeration.set_range(grid + ", restricted to p > n");
    enumeration.set_note("pins the enumeration of the extra-column block: each column block "
                         "ends at row n (the block for column n+2 ends with sqrt(2) E^(n,n+2), "
                         "not E^(1,n+2)), consistent with the (2,4) reference system");
    report.records.push_back(enumeration.finish());
  }

  report.records.push_back(with_grid(swap_agree, grid + ", 100 random vectors per cell").finish());

  return report;
}

}  // namespace tcm
