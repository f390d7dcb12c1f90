#pragma once

#include <string>
#include <vector>

namespace rackoh {

/// trivial 1-4, dihedral 3-6, cyclic 3-5 and conj:S3.
std::vector<std::string> theorem_corpus();

/// theorem_corpus() followed by small semidirect products.
std::vector<std::string> default_corpus();

}  // namespace rackoh
