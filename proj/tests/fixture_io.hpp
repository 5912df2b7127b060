#pragma once

#include "latwalk/rational.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <string>

namespace latwalk::testing {

/// N -> (|area row index| -> sign-aggregated count)
using GoldenTable = std::map<int, std::map<int, Integer>>;

inline GoldenTable load_golden_table(const std::string& name) {
  std::string path = std::string(LATWALK_FIXTURE_DIR) + "/" + name;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture " + path);
  GoldenTable t;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string n_s, a_s, v_s;
    std::getline(ls, n_s, ',');
    std::getline(ls, a_s, ',');
    std::getline(ls, v_s, ',');
    t[std::stoi(n_s)][std::stoi(a_s)] = Integer(v_s);
  }
  return t;
}

/// Sign-aggregate a specialized area GF. Keys are |2A| downscaled by `div`
/// (2 for the square table, which indexes integer areas; 1 for triangular).
inline std::map<int, Integer> aggregate_rows(const std::map<int, Rational>& counts, int div) {
  std::map<int, Integer> rows;
  for (const auto& [d, v] : counts) {
    if (v.get_den() != 1) throw std::runtime_error("non-integer walk count");
    if (d % div != 0) throw std::runtime_error("unexpected area parity in counts");
    rows[std::abs(d) / div] += v.get_num();
  }
  return rows;
}

} // namespace latwalk::testing
