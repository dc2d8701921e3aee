#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "tensorcomm/commutation.hpp"
#include "tensorcomm/complex_dense.hpp"
#include "tensorcomm/gellmann.hpp"
#include "tensorcomm/verification.hpp"

namespace tcm::cli {

enum class OutputFormat { MatrixMarket, Json, Text };

std::optional<OutputFormat> parse_format(std::string_view name);
std::string_view to_string(OutputFormat format);

/// Matrix Market "coordinate complex general" with 1-based indices and
/// 17-significant-digit entries, so values survive a round trip bit-exactly.
/// Comment lines are emitted after the banner, one "%" prefix each.
std::string to_matrix_market(const ComplexDense& m,
                             const std::vector<std::string>& comments = {});

/// Read one Matrix Market document from the stream; trailing content is left
/// unread so concatenated documents can be consumed in sequence.
ComplexDense read_matrix_market(std::istream& in);
ComplexDense read_matrix_market(const std::string& text);

nlohmann::json dense_to_json(const ComplexDense& m);
ComplexDense dense_from_json(const nlohmann::json& j);

nlohmann::json permutation_to_json(const PermutationSpec& spec);
PermutationSpec permutation_from_json(const nlohmann::json& j);

nlohmann::json system_to_json(const GellMannSystem& system);
nlohmann::json report_to_json(const VerificationReport& report);

/// Human-oriented aligned grid; not meant to round-trip.
std::string to_text(const ComplexDense& m);
std::string system_to_text(const GellMannSystem& system);
std::string system_to_matrix_market(const GellMannSystem& system);
std::string report_to_text(const VerificationReport& report);

/// Name of the generator ordering produced by rect_gellmann.
inline constexpr std::string_view kOrderingName = "sym-asym-diag";

}  // namespace tcm::cli
