#pragma once

#include <cstddef>
#include <span>
#include <string>

#include "pilat/lattice_enum.hpp"

namespace pilat {

/// DOT digraph of Pi_n: one node per partition labelled with its literal, one edge per
/// covering pair, drawn bottom to top.
std::string hasse_dot(int n, const Limits& limits = {});
/// DOT digraph of the subposet formed by `members` (edges are its own cover relation).
std::string hasse_dot(std::span<const Partition> members);

/// Number of covering pairs in Pi_n: sum over partitions of C(#blocks, 2).
std::size_t covering_pair_count(int n);

}  // namespace pilat
