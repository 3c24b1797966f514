#pragma once

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <utility>

namespace gcover {

// One exception type for every contract violation the library reports.
// `code` is a stable machine-readable identifier (NotAGroup, SearchTooLarge,
// ...), `witness` optional structured data (a failing triple, a size bound).
class GcError : public std::runtime_error {
public:
    GcError(std::string code, const std::string& message, nlohmann::json witness = nullptr)
        : std::runtime_error(message), code_(std::move(code)), witness_(std::move(witness)) {}

    const std::string& code() const { return code_; }
    const nlohmann::json& witness() const { return witness_; }

private:
    std::string code_;
    nlohmann::json witness_;
};

namespace errc {
inline constexpr const char* not_a_group = "NotAGroup";
inline constexpr const char* not_a_subgroup = "NotASubgroup";
inline constexpr const char* unsupported_group = "UnsupportedGroup";
inline constexpr const char* non_integral_multiplicity = "NonIntegralMultiplicity";
inline constexpr const char* non_integral_count = "NonIntegralCount";
inline constexpr const char* search_too_large = "SearchTooLarge";
inline constexpr const char* index_out_of_range = "IndexOutOfRange";
inline constexpr const char* inconsistent_profile = "InconsistentProfile";
inline constexpr const char* internal_mismatch = "InternalMismatch";
inline constexpr const char* closed_form_mismatch = "ClosedFormMismatch";
inline constexpr const char* unsupported_degree = "UnsupportedDegree";
inline constexpr const char* genus_mismatch = "GenusMismatch";
inline constexpr const char* usage = "Usage";
}  // namespace errc

}  // namespace gcover
