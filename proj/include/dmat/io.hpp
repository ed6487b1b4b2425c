#ifndef DMAT_IO_HPP
#define DMAT_IO_HPP

#include <string>
#include <string_view>

#include "dmat/core.hpp"
#include "dmat/gf2.hpp"

namespace dmat {

// .dm: n, then k = |F|, then k lines of ascending comma-separated elements
// ("-" for the empty set).
SetSystem parse_dm(std::string_view text);
std::string format_dm(const SetSystem& s);

// .gf2: n, then n rows of n characters from {0,1}.
SymMatrixGF2 parse_gf2(std::string_view text);
std::string format_gf2(const SymMatrixGF2& c);

// .graph: vertex count, then one "u v" line per edge ("u u" is a loop).
IntersectionGraph parse_graph(std::string_view text);
std::string format_graph(const IntersectionGraph& g);

std::string read_file(const std::string& path);

}  // namespace dmat

#endif
