#include "e8/octonion.hpp"

namespace e8 {

const std::array<std::array<OctEntry, 8>, 8>& oct_table() {
  static const auto table = [] {
    std::array<std::array<OctEntry, 8>, 8> t{};
    for (int i = 0; i < 8; ++i) {
      t[0][i] = {1, i};
      t[i][0] = {1, i};
    }
    for (int i = 1; i < 8; ++i) t[i][i] = {-1, 0};
    const int lines[7][3] = {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6}, {2, 7, 5}, {3, 7, 4}, {3, 6, 5}};
    for (const auto& l : lines)
      for (int r = 0; r < 3; ++r) {
        int a = l[r], b = l[(r + 1) % 3], c = l[(r + 2) % 3];
        t[a][b] = {1, c};
        t[b][a] = {-1, c};
      }
    return t;
  }();
  return table;
}

}  // namespace e8
