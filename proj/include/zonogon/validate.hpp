#pragma once

#include <string>
#include <vector>

#include "zonogon/complex.hpp"

namespace zonogon {

struct ValidationReport {
  struct Finding {
    std::string check;
    bool pass = false;
    std::string detail;  // first failure found, empty when passing
  };
  std::vector<Finding> findings;

  bool ok() const {
    for (const Finding& f : findings)
      if (!f.pass) return false;
    return true;
  }
};

// Re-checks a complex against the definitions without trusting how it was
// built. If the incidence structure itself is broken, the remaining checks
// are reported failed rather than evaluated on garbage.
ValidationReport validate_complex(const TilingComplex& c);

}  // namespace zonogon
