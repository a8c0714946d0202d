#include "fincat/preorders.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "fincat/builders.hpp"

namespace fincat {

std::vector<FinCat> all_preorders_on_3() {
  const std::vector<std::string> elems = {"p", "q", "r"};
  // Bit k of the mask switches the k-th off-diagonal pair on, in this order.
  const std::pair<int, int> offdiag[6] = {{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}};

  std::vector<FinCat> out;
  for (int mask = 0; mask < 64; ++mask) {
    bool rel[3][3] = {};
    for (int i = 0; i < 3; ++i) rel[i][i] = true;
    for (int k = 0; k < 6; ++k)
      if (mask & (1 << k)) rel[offdiag[k].first][offdiag[k].second] = true;

    bool transitive = true;
    for (int i = 0; i < 3 && transitive; ++i)
      for (int j = 0; j < 3 && transitive; ++j)
        for (int k = 0; k < 3 && transitive; ++k)
          if (rel[i][j] && rel[j][k] && !rel[i][k]) transitive = false;
    if (!transitive) continue;

    std::vector<std::pair<std::string, std::string>> pairs;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (rel[i][j]) pairs.emplace_back(elems[i], elems[j]);

    PreorderResult built = from_preorder(elems, pairs, /*close=*/false);
    if (!built.ok())
      throw std::logic_error("all_preorders_on_3: mask " + std::to_string(mask) +
                             " failed validation");
    out.push_back(std::move(*built.category));
  }
  return out;
}

}  // namespace fincat
