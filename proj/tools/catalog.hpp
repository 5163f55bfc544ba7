#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "lagsurf/immersion.hpp"

namespace lagsurf::cli {

/// Invalid command line or configuration (exit code 2).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CatalogParam {
  std::string name;
  double default_value;
};

struct CatalogEntry {
  std::string name;
  std::string family;
  std::string anchor;  // where the construction comes from, in words
  std::string description;
  std::vector<CatalogParam> params;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry& find_entry(const std::string& name);

using ParamMap = std::map<std::string, double>;

/// Builds the named surface; unknown names or parameters raise UsageError,
/// parameter values outside a family's domain raise lagsurf::DomainError.
ImmersionSpec build_surface(const std::string& name, const ParamMap& params = {});

/// Constraint residual of the generating curve(s) of a spec.
ResidualReport generating_constraints(const ImmersionSpec& spec, int n_samples = 256);

}  // namespace lagsurf::cli
