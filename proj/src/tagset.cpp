#include "evomt/tagset.hpp"

#include <algorithm>

namespace evomt {

bool is_tag(std::string_view tag) {
  return std::find(kTagset.begin(), kTagset.end(), tag) != kTagset.end();
}

}  // namespace evomt
