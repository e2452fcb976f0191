#pragma once

#include <cstddef>
#include <string_view>

namespace covertop::caps {

// Default size caps. The environment variable COVERTOP_MAX_BASE can lower
// every cap (never raise one).
inline constexpr std::size_t atomic_base = 20;
inline constexpr std::size_t compound_base = 4096;
inline constexpr std::size_t lattice = 16;
inline constexpr std::size_t element_laws = 12;
inline constexpr std::size_t subset_pair_laws = 8;
inline constexpr std::size_t subset_triple_laws = 5;
inline constexpr std::size_t adjunction = 4;
inline constexpr std::size_t semantic_oracle = 5;
inline constexpr std::size_t exhaustive_map = 12;
inline constexpr std::size_t dot_source = 8;

//! The cap in force for `default_cap` after applying COVERTOP_MAX_BASE.
std::size_t effective(std::size_t default_cap);

//! Throws SizeCapError when `size` exceeds the effective cap.
void require(std::size_t size, std::size_t default_cap, std::string_view what);

}  // namespace covertop::caps
