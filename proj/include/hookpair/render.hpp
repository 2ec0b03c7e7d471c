#pragma once

#include <algorithm>
#include <optional>
#include <string>

#include "hookpair/cell_set.hpp"
#include "hookpair/dyck.hpp"
#include "hookpair/error.hpp"

namespace hookpair {

/// Text picture of a cell set, top row first.
///
/// Each cell is three characters wide: "[ ]" on or below the diagonal (or
/// everywhere when no diagonal is given), "( )" strictly above it. Marked
/// cells show '*' inside the brackets. Trailing blanks are trimmed.
inline std::string render_ascii(const CellSet& g, std::optional<int> diagonal_sum = std::nullopt,
                                const CellSet& marks = {}) {
  if (g.empty()) throw Error(ErrorCode::EmptySet, "nothing to render");
  std::string out;
  for (int r = g.max_row(); r >= g.min_row(); --r) {
    std::string line;
    for (int c = g.min_col(); c <= g.max_col(); ++c) {
      const Cell x{r, c};
      if (!g.contains(x)) {
        line += "   ";
        continue;
      }
      const bool above = diagonal_sum && r + c > *diagonal_sum;
      line += above ? '(' : '[';
      line += marks.contains(x) ? '*' : ' ';
      line += above ? ')' : ']';
    }
    line.erase(line.find_last_not_of(' ') + 1);
    out += line + '\n';
  }
  return out;
}

/// Two aligned lines: step directions and step labels.
inline std::string render_dyck(const DyckPath& d) {
  std::size_t width = 1;
  for (const auto& st : d.steps()) width = std::max(width, st.label.name().size());
  width += 1;
  std::string dirs;
  std::string labels;
  for (const auto& st : d.steps()) {
    std::string dir(1, st.dir > 0 ? 'U' : 'D');
    dirs += dir + std::string(width - dir.size(), ' ');
    const std::string name = st.label.name();
    labels += name + std::string(width - name.size(), ' ');
  }
  auto trim = [](std::string s) {
    s.erase(s.find_last_not_of(' ') + 1);
    return s;
  };
  return trim(dirs) + '\n' + trim(labels) + '\n';
}

}  // namespace hookpair
