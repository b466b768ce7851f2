#include "catwords/dyck.hpp"

#include <stdexcept>

namespace catwords {

bool is_valid_dyck(const DyckPath& p) {
  long long height = 0;
  for (Step s : p.steps) {
    height += (s == Step::Up) ? 1 : -1;
    if (height < 0) return false;
  }
  return height == 0;
}

DyckPath catalan_to_dyck(const Word& w) {
  if (!is_catalan(w)) throw std::invalid_argument("catalan_to_dyck: not a Catalan word");
  DyckPath p;
  p.steps.reserve(2 * w.size());
  int height = 0;
  for (int v : w) {
    while (height > v) {
      p.steps.push_back(Step::Down);
      --height;
    }
    p.steps.push_back(Step::Up);
    ++height;
  }
  while (height > 0) {
    p.steps.push_back(Step::Down);
    --height;
  }
  return p;
}

Word dyck_to_catalan(const DyckPath& p) {
  if (!is_valid_dyck(p)) throw std::invalid_argument("dyck_to_catalan: invalid Dyck path");
  Word w;
  w.reserve(p.steps.size() / 2);
  int height = 0;
  for (Step s : p.steps) {
    if (s == Step::Up) {
      w.push_back(height);
      ++height;
    } else {
      --height;
    }
  }
  return w;
}

std::string format_dyck(const DyckPath& p) {
  std::string out;
  out.reserve(p.steps.size());
  for (Step s : p.steps) out += (s == Step::Up) ? 'U' : 'D';
  return out;
}

DyckPath parse_dyck(std::string_view text) {
  DyckPath p;
  p.steps.reserve(text.size());
  for (char c : text) {
    if (c == 'U' || c == 'u') p.steps.push_back(Step::Up);
    else if (c == 'D' || c == 'd') p.steps.push_back(Step::Down);
    else throw std::invalid_argument("bad Dyck path: '" + std::string(text) + "'");
  }
  return p;
}

}  // namespace catwords
