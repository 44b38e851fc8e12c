#include "kpsumm/common.hpp"

#include <iostream>

namespace kpsumm {

void warn(const std::string& message) {
  std::cerr << "kpsumm: warning: " << message << '\n';
}

}  // namespace kpsumm
