#include "rackoh/cohomology/corpus.hpp"

namespace rackoh {

std::vector<std::string> theorem_corpus() {
  std::vector<std::string> out;
  for (int n = 1; n <= 4; ++n) out.push_back("trivial:" + std::to_string(n));
  for (int n = 3; n <= 6; ++n) out.push_back("dihedral:" + std::to_string(n));
  for (int n = 3; n <= 5; ++n) out.push_back("cyclic:" + std::to_string(n));
  out.push_back("conj:S3");
  return out;
}

std::vector<std::string> default_corpus() {
  std::vector<std::string> out = theorem_corpus();
  out.push_back("semidirect:2,1,trivial:2");
  out.push_back("semidirect:3,2,trivial:2");
  out.push_back("semidirect:2,1,dihedral:3");
  return out;
}

}  // namespace rackoh
