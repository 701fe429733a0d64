#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "memdep/multiset.hpp"
#include "memdep/system.hpp"

namespace memdep::corpus {

struct Entry {
  std::string name;
  std::string text;  // .pms source
  MembraneSystem system;
  Multiset input;
};

/// Hand-shaped families (relays, send-in chains, both kinds of division,
/// general-only races, heavy multiplicities, empty and cyclic systems).
std::vector<Entry> families();

/// Seeded random dissolution-free systems over small random structures.
std::vector<Entry> random_systems(std::uint64_t seed, std::size_t count);

/// families() followed by random_systems(seed, random_count).
std::vector<Entry> full(std::uint64_t seed = 2024, std::size_t random_count = 12);

/// Copy of `sys` with every evolution right-hand side scaled by a factor in 1..5.
MembraneSystem scale_multiplicities(const MembraneSystem& sys, std::uint64_t seed);

}  // namespace memdep::corpus
