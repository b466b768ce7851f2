#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "catwords/word.hpp"

namespace catwords {

enum class Step : unsigned char { Up, Down };

// A Dyck path: equally many up and down steps, every prefix having at
// least as many ups as downs.
struct DyckPath {
  std::vector<Step> steps;

  bool operator==(const DyckPath&) const = default;
};

bool is_valid_dyck(const DyckPath& p);

// The bijection between Catalan words and Dyck paths: reading the path
// left to right, the ordinates of the up-step starting points spell the
// word. catalan_to_dyck rejects non-Catalan input; dyck_to_catalan rejects
// invalid paths. The two maps are mutually inverse.
DyckPath catalan_to_dyck(const Word& w);
Word dyck_to_catalan(const DyckPath& p);

std::string format_dyck(const DyckPath& p);        // e.g. "UUDUDD"
DyckPath parse_dyck(std::string_view text);        // throws std::invalid_argument

}  // namespace catwords
