#pragma once

// `multisec verify`: the worked examples, recomputed and compared with their
// closed forms. Every assertion prints one line with expected and computed values.

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

namespace multisec {

struct VerifyOutcome {
  std::size_t passed = 0;
  std::size_t failed = 0;

  bool ok() const { return failed == 0; }
};

/// veronese, fano-product, gorenstein-grid, blowup.
const std::vector<std::string>& verify_names();

/// `name` is one of verify_names() or "all". Throws std::invalid_argument otherwise.
VerifyOutcome run_verify(const std::string& name, std::ostream& out);

}  // namespace multisec
