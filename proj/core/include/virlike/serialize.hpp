#ifndef VIRLIKE_SERIALIZE_HPP
#define VIRLIKE_SERIALIZE_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "virlike/classifier.hpp"
#include "virlike/span.hpp"
#include "virlike/verifier.hpp"

namespace virlike {

/// Thrown on malformed serialized input: parse errors, missing or unknown
/// fields, out-of-window entries, duplicates, non-canonical rationals.
struct SchemaError : std::runtime_error {
    explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

// All emitters produce deterministic output: object keys in fixed order,
// arrays sorted, no trailing newline.

std::string to_json_string(const LieElement& e);
LieElement lie_element_from_json_string(const std::string& text);

std::string to_json_string(const ModVector& v);

std::string to_json_string(const FamilySpec& spec);
FamilySpec family_spec_from_json_string(const std::string& text);

std::string to_json_string(const ActionTable& t);
ActionTable action_table_from_json_string(const std::string& text);

/// File round trip: load(save(t)) == t, field-exact including rational
/// strings. Throws SchemaError / std::runtime_error on I/O and format errors.
void save_table(const ActionTable& t, const std::string& path);
ActionTable load_table(const std::string& path);

std::string to_json_string(const ResidualReport& r);
std::string to_csv(const ResidualReport& r);

std::string to_json_string(const WitnessReport& r);
std::string to_csv(const WitnessReport& r);

std::string to_json_string(const ClassifyResult& r);

std::string to_json_string(const SweepReport& r);
std::string to_csv(const SweepReport& r);

std::string to_json_string(const std::vector<std::pair<long, long>>& ghw_set);

}  // namespace virlike

#endif
