#include "e8/jordan.hpp"

namespace e8 {

Sigma4Split eigenspace_split_sigma4() {
  Sigma4Split s;
  for (int i = 0; i < 27; ++i) {
    bool fixed = i < 3 || i == 3 || i == 4;
    (fixed ? s.fixed : s.moved).push_back(i);
  }
  return s;
}

}  // namespace e8
