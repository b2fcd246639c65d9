#pragma once

#include "lam/lamination.hpp"

#include <iosfwd>
#include <string>

namespace lam {

// Text format:
//   d=<d> depth=<N> recipe=<tag>
//   leaves <count>
//   <chord>            one per line
//   gaps <count>
//   <gap line>         one per line
std::string write_lamination(const Lamination& L);
Lamination read_lamination(const std::string& text);

Lamination load_lamination(const std::string& path);
void save_lamination(const Lamination& L, const std::string& path);

}  // namespace lam
