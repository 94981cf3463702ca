#ifndef MOTIFSCOPE_CANONICAL_HPP
#define MOTIFSCOPE_CANONICAL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "motifscope/graph.hpp"

namespace motifscope {

// Canonical forms for small graphs, optionally vertex-colored with two
// colors (black = sampled, white = not). Two graphs get the same code iff
// they are isomorphic (color-preserving when colors are given).

inline constexpr uint32_t kSmallCanonMax = 8;

// Packed code for n <= 8: per vertex in canonical order, one color bit
// (when colored) followed by the adjacency bits towards earlier vertices.
// Minimized over all orderings by pruned search.
uint64_t canonical_code_small(const Graph& g, const std::vector<uint8_t>* colors = nullptr);

// Same packing applied directly to adjacency bitmasks; used in inner loops.
uint64_t canonical_code_small_masks(uint32_t n, const uint8_t* adj_masks,
                                    const uint8_t* colors = nullptr);

// Byte-string code for connected or general graphs up to ~20 vertices,
// computed by refinement plus individualization. Distinct lengths for
// distinct vertex counts, so codes are comparable across sizes.
std::string canonical_code(const Graph& g, const std::vector<uint8_t>* colors = nullptr);

// Class key for an observed/sampled graph: the sorted multiset of connected
// component codes plus a count of invisible vertices. Equal keys iff the
// observations are isomorphic (as colored graphs when colors are given).
std::string observed_class_key(const Graph& g, const std::vector<uint8_t>* colors,
                               uint64_t invisible_vertices);

// Works for any pair whose connected components are each canonicalizable.
bool is_isomorphic(const Graph& a, const Graph& b);

}  // namespace motifscope

#endif
