#pragma once

#include <stdexcept>
#include <string>

#include "rxch/model.hpp"

namespace rxch {

/// Parse/validation failure with a machine-readable code and the offending
/// field where applicable.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string code, std::string field, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)), field_(std::move(field)) {}
  const std::string& code() const { return code_; }
  const std::string& field() const { return field_; }

 private:
  std::string code_;
  std::string field_;
};

/// Parse a .rxm.json document (schema_version 1). Unknown fields are
/// rejected; the model is validated before being returned.
ReceptorModel parse_model(const std::string& text);

/// Canonical serialization: sorted keys, edges sorted by (from,to), integral
/// rates rendered as integers. parse(serialize(m)) == m exactly.
std::string serialize_model(const ReceptorModel& model);

/// Convenience: a built-in name ("chr2", "ach", "cam") or a path to a model file.
ReceptorModel load_model(const std::string& name_or_path);

}  // namespace rxch
