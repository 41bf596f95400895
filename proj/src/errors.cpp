#include "zlab/errors.hpp"

namespace zlab {

const char* to_string(ErrorClass c) noexcept {
  switch (c) {
    case ErrorClass::domain: return "domain";
    case ErrorClass::pole: return "pole";
    case ErrorClass::precision: return "precision";
    case ErrorClass::root: return "root";
    case ErrorClass::tracking: return "tracking";
    case ErrorClass::ambiguous_branch: return "ambiguous_branch";
    case ErrorClass::configuration: return "configuration";
  }
  return "unknown";
}

}  // namespace zlab
