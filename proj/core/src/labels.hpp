#pragma once

#include <string>
#include <vector>

namespace efglat::detail {

// Throws InvalidLabel for empty labels or labels with whitespace or control
// bytes, DuplicateLabel for repeats.
void check_labels(const std::vector<std::string>& labels);

}  // namespace efglat::detail
