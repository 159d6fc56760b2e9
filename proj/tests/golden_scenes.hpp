#pragma once

// Fixed scenes whose SVG output is pinned under tests/golden.

#include <fstream>
#include <sstream>
#include <string>

#include "affold/example8.hpp"
#include "affold/render.hpp"

namespace golden {

inline affold::SceneSpec a2_radius2()
{
  return affold::SceneSpec{affold::AffineWeylGroup(affold::cartan_from_label("A2")), 2, {}, {}, {}};
}

inline affold::SceneSpec a2_worked_path()
{
  auto spec = a2_radius2();
  const auto end = spec.group.from_word(affold::example8::endpoint_word());
  for (auto& p : affold::enumerate_folded_paths(spec.group, affold::example8::word()))
    if (p.endpoint == end) spec.paths.push_back(std::move(p));
  return spec;
}

inline std::string path(const std::string& name) { return std::string(AFFOLD_GOLDEN_DIR) + "/" + name; }

inline std::string read(const std::string& name)
{
  std::ifstream f(path(name), std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

inline void write(const std::string& name, const std::string& text)
{
  std::ofstream f(path(name), std::ios::binary);
  f << text;
}

}  // namespace golden
