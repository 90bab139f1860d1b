#pragma once

#include <string>

#include "hirsch/incidence.hpp"

namespace hirsch {

// Canonical byte string of a (possibly marked) vertex-facet incidence
// structure: equal strings exactly when two inputs are related by a
// vertex/facet relabeling fixing the marks pointwise. Canonical labeling of
// the bipartite incidence graph by iterated color refinement plus
// backtracking over the first non-singleton cell; the minimum encoding over
// all discrete leaves is returned.
std::string canonical_form(const Incidence& inc, int mark_x = -1, int mark_y = -1);

// Unordered-pair convention: minimum of the two ordered forms.
std::string canonical_form_unordered(const Incidence& inc, int mark_x, int mark_y);

std::string to_hex(const std::string& bytes);

}  // namespace hirsch
