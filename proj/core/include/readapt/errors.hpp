#pragma once

#include <stdexcept>

namespace readapt {

// Error categories map onto CLI exit codes:
//   ConfigError -> 1, DataError -> 2, ArtifactError -> 3.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ArtifactError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace readapt
