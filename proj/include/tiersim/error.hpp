#pragma once

#include <stdexcept>
#include <string>

namespace tiersim {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid configuration: bad values, unknown keys, unsatisfiable tier setups.
struct ConfigError : Error {
  using Error::Error;
};

// Caller stored a page id that is already present in the tier.
struct DuplicatePageError : Error {
  using Error::Error;
};

// Requested page id is not present in the tier.
struct PageNotFoundError : Error {
  using Error::Error;
};

// Trace and region/footprint state disagree (address outside the footprint).
struct TraceError : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

// The placement constraint cannot be met with the configured tier set.
struct InfeasibleError : Error {
  using Error::Error;
};

}  // namespace tiersim
