#include "serialize.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace tcm::cli {

namespace {

std::string format_scalar(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

// compact display form for text grids
std::string display_complex(const ComplexScalar& z) {
  std::ostringstream os;
  os << std::setprecision(6);
  if (z.imag() == 0.0) {
    os << z.real();
  } else if (z.real() == 0.0) {
    os << z.imag() << "i";
  } else {
    os << z.real() << (z.imag() < 0.0 ? "-" : "+") << std::abs(z.imag()) << "i";
  }
  return os.str();
}

}  // namespace

std::optional<OutputFormat> parse_format(std::string_view name) {
  if (name == "matrix-market") return OutputFormat::MatrixMarket;
  if (name == "json") return OutputFormat::Json;
  if (name == "text") return OutputFormat::Text;
  return std::nullopt;
}

std::string_view to_string(OutputFormat format) {
  switch (format) {
    case OutputFormat::MatrixMarket: return "matrix-market";
    case OutputFormat::Json: return "json";
    case OutputFormat::Text: return "text";
  }
  return "unknown";
}

std::string to_matrix_market(const ComplexDense& m, const std::vector<std::string>& comments) {
  std::ostringstream os;
  os << "%%MatrixMarket matrix coordinate complex general\n";
  for (const auto& comment : comments) os << "% " << comment << "\n";
  std::size_t nnz = 0;
  for (const auto& z : m.entries()) {
    if (z != ComplexScalar{}) ++nnz;
  }
  os << m.rows() << " " << m.cols() << " " << nnz << "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const ComplexScalar z = m(i, j);
      if (z == ComplexScalar{}) continue;
      os << (i + 1) << " " << (j + 1) << " " << format_scalar(z.real()) << " "
         << format_scalar(z.imag()) << "\n";
    }
  }
  return os.str();
}

ComplexDense read_matrix_market(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw std::runtime_error("matrix market: empty input");
  }
  std::istringstream banner(line);
  std::string tag, object, layout, field, symmetry;
  banner >> tag >> object >> layout >> field >> symmetry;
  if (tag != "%%MatrixMarket" || object != "matrix" || layout != "coordinate") {
    throw std::runtime_error("matrix market: unsupported banner: " + line);
  }
  if (field != "complex" || symmetry != "general") {
    throw std::runtime_error("matrix market: only 'complex general' is supported");
  }

  std::size_t rows = 0, cols = 0, nnz = 0;
  bool have_size = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '%') continue;
    std::istringstream sizes(line);
    if (!(sizes >> rows >> cols >> nnz)) {
      throw std::runtime_error("matrix market: malformed size line: " + line);
    }
    have_size = true;
    break;
  }
  if (!have_size) {
    throw std::runtime_error("matrix market: missing size line");
  }

  ComplexDense m(rows, cols);
  std::size_t seen = 0;
  while (seen < nnz && std::getline(in, line)) {
    if (line.empty() || line[0] == '%') continue;
    std::istringstream entry(line);
    std::size_t i = 0, j = 0;
    double re = 0.0, im = 0.0;
    if (!(entry >> i >> j >> re >> im)) {
      throw std::runtime_error("matrix market: malformed entry: " + line);
    }
    if (i < 1 || i > rows || j < 1 || j > cols) {
      throw std::runtime_error("matrix market: entry index out of range: " + line);
    }
    m(i - 1, j - 1) = ComplexScalar(re, im);
    ++seen;
  }
  if (seen != nnz) {
    throw std::runtime_error("matrix market: expected " + std::to_string(nnz) +
                             " entries, found " + std::to_string(seen));
  }
  return m;
}

ComplexDense read_matrix_market(const std::string& text) {
  std::istringstream in(text);
  return read_matrix_market(in);
}

nlohmann::json dense_to_json(const ComplexDense& m) {
  nlohmann::json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  auto& entries = j["entries"] = nlohmann::json::array();
  for (const auto& z : m.entries()) {
    entries.push_back({z.real(), z.imag()});
  }
  return j;
}

ComplexDense dense_from_json(const nlohmann::json& j) {
  const auto rows = j.at("rows").get<std::size_t>();
  const auto cols = j.at("cols").get<std::size_t>();
  const auto& entries = j.at("entries");
  if (entries.size() != rows * cols) {
    throw std::runtime_error("json matrix: entry count does not match rows*cols");
  }
  std::vector<ComplexScalar> values;
  values.reserve(entries.size());
  for (const auto& pair : entries) {
    values.emplace_back(pair.at(0).get<double>(), pair.at(1).get<double>());
  }
  return ComplexDense(rows, cols, std::move(values));
}

nlohmann::json permutation_to_json(const PermutationSpec& spec) {
  nlohmann::json j;
  j["n"] = spec.n;
  j["p"] = spec.p;
  j["targets"] = spec.target_of;
  return j;
}

PermutationSpec permutation_from_json(const nlohmann::json& j) {
  PermutationSpec spec;
  spec.n = j.at("n").get<int>();
  spec.p = j.at("p").get<int>();
  spec.target_of = j.at("targets").get<std::vector<std::size_t>>();
  if (spec.n < 2 || spec.p < 2 ||
      spec.target_of.size() != static_cast<std::size_t>(spec.n) * spec.p ||
      !spec.is_bijection()) {
    throw std::runtime_error("json permutation: invalid spec");
  }
  return spec;
}

nlohmann::json system_to_json(const GellMannSystem& system) {
  nlohmann::json j;
  j["n"] = system.n;
  j["p"] = system.p;
  j["ordering"] = kOrderingName;
  j["padded_identity"] = dense_to_json(system.padded_identity);
  auto& lambdas = j["lambdas"] = nlohmann::json::array();
  for (const auto& lam : system.lambdas) lambdas.push_back(dense_to_json(lam));
  return j;
}

nlohmann::json report_to_json(const VerificationReport& report) {
  nlohmann::json j;
  j["n_max"] = report.n_max;
  j["p_max"] = report.p_max;
  j["tol"] = report.tol;
  j["ok"] = report.ok();
  auto& records = j["records"] = nlohmann::json::array();
  for (const auto& rec : report.records) {
    nlohmann::json r;
    r["name"] = rec.name;
    r["claim"] = rec.claim;
    r["range"] = rec.range;
    r["max_residual"] = rec.max_residual;
    r["status"] = to_string(rec.status);
    if (!rec.note.empty()) r["note"] = rec.note;
    auto& ces = r["counterexamples"] = nlohmann::json::array();
    for (const auto& ce : rec.counterexamples) {
      ces.push_back({{"location", ce.location}, {"expected", ce.expected},
                     {"computed", ce.computed}});
    }
    records.push_back(std::move(r));
  }
  return j;
}

std::string to_text(const ComplexDense& m) {
  std::vector<std::string> cells;
  cells.reserve(m.size());
  std::size_t width = 0;
  for (const auto& z : m.entries()) {
    cells.push_back(display_complex(z));
    width = std::max(width, cells.back().size());
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) os << "  ";
      os << std::setw(static_cast<int>(width)) << cells[i * m.cols() + j];
    }
    os << "\n";
  }
  return os.str();
}

std::string system_to_text(const GellMannSystem& system) {
  std::ostringstream os;
  os << "n=" << system.n << " p=" << system.p << " ordering=" << kOrderingName
     << " generators=" << system.lambdas.size() << "\n\n";
  os << "I =\n" << to_text(system.padded_identity) << "\n";
  for (std::size_t a = 0; a < system.lambdas.size(); ++a) {
    os << "L" << (a + 1) << " =\n" << to_text(system.lambdas[a]);
    if (a + 1 < system.lambdas.size()) os << "\n";
  }
  return os.str();
}

std::string system_to_matrix_market(const GellMannSystem& system) {
  const std::string shape = "n=" + std::to_string(system.n) + " p=" + std::to_string(system.p) +
                            " ordering=" + std::string(kOrderingName);
  std::ostringstream os;
  os << to_matrix_market(system.padded_identity, {shape + " matrix=padded-identity"});
  for (std::size_t a = 0; a < system.lambdas.size(); ++a) {
    os << to_matrix_market(system.lambdas[a],
                           {shape + " matrix=L" + std::to_string(a + 1) + "-of-" +
                            std::to_string(system.lambdas.size())});
  }
  return os.str();
}

std::string report_to_text(const VerificationReport& report) {
  std::ostringstream os;
  os << "identity verification over 2 <= n <= " << report.n_max << ", 2 <= p <= " << report.p_max
     << " at tolerance " << report.tol << "\n";
  std::size_t errata = 0, failures = 0;
  for (const auto& rec : report.records) {
    if (rec.status == CheckStatus::ErratumExpected) ++errata;
    if (rec.status == CheckStatus::Fail || rec.status == CheckStatus::ErratumChanged) ++failures;
  }
  os << "result: " << (report.ok() ? "OK" : "FAILED") << " (" << report.records.size()
     << " identities, " << errata << " expected discrepancies, " << failures << " failures)\n\n";
  for (const auto& rec : report.records) {
    os << "[" << to_string(rec.status) << "] " << rec.name;
    os << "  (max residual " << rec.max_residual << ")\n";
    os << "    claim: " << rec.claim << "\n";
    if (!rec.range.empty()) os << "    range: " << rec.range << "\n";
    if (!rec.note.empty()) os << "    note: " << rec.note << "\n";
    for (const auto& ce : rec.counterexamples) {
      os << "    counterexample: " << ce.location << ": expected " << ce.expected
         << ", computed " << ce.computed << "\n";
    }
  }
  return os.str();
}

}  // namespace tcm::cli
