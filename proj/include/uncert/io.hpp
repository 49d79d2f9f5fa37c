#pragma once

// JSON function descriptors, report serialization, and CSV tables.
//
// Descriptor: {"breakpoints": ["-1","0","1"], "pieces": [["1","1"],["1","-1"]]}
// with rational strings and ascending-degree coefficients.

#include "uncert/bspline.hpp"
#include "uncert/dictionaries.hpp"
#include "uncert/moments.hpp"
#include "uncert/piecewise.hpp"
#include "uncert/spectrum.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace uncert {

/// Malformed descriptor; the message names the line/column or the field.
class DescriptorError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

[[nodiscard]] PiecewisePoly parse_descriptor(std::string_view text);
[[nodiscard]] nlohmann::ordered_json descriptor_json(const PiecewisePoly& f);
[[nodiscard]] std::string to_descriptor(const PiecewisePoly& f);

/// Shortest decimal that parses back to the same double; "inf"/"-inf"/"nan".
[[nodiscard]] std::string format_double(double v);

/// A JSON number, or the string "inf" for infinities.
[[nodiscard]] nlohmann::ordered_json float_json(double v);

/// Adds `key` (exact string) and `key_float` to obj.
void put_exact(nlohmann::ordered_json& obj, const std::string& key, const Rational& v);
void put_exact(nlohmann::ordered_json& obj, const std::string& key, const ExtReal& v);

[[nodiscard]] nlohmann::ordered_json moments_json(const MomentsReport& m, const ClassTag& tag,
                                                  const std::optional<AtomParams>& gamma);

[[nodiscard]] std::string dict_csv(const std::vector<DictRow>& rows);
[[nodiscard]] std::string scan_csv(const std::vector<ScanRow>& rows);
[[nodiscard]] std::string spectrum_csv(const std::vector<SpectrumSample>& samples);

}  // namespace uncert
