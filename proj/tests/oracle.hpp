#pragma once

// Reference implementations that share no code with the library.

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using IMatrix = std::vector<std::vector<std::int64_t>>;

struct Inertia {
  std::size_t pos = 0, neg = 0, zero = 0;
  bool operator==(const Inertia&) const = default;
};

// Characteristic polynomial by Berkowitz (division free, GMP integers), then
// Descartes' rule, which is exact because a symmetric matrix has real spectrum.
Inertia inertia_by_charpoly(const IMatrix& a);

// Minimum over an explicitly materialized dihedral orbit.
std::vector<int> orbit_minimum(const std::vector<int>& seq);

// Every cycle with entries >= 2 and sum(e - 2) == mult, up to rotation and reflection.
std::set<std::vector<int>> cycles_by_brute_force(int mult, int length);

// Germs encoded as strings: "se1", "se2", "rdp", "smooth", or "c" + entries joined by '.'.
std::string cusp_code(const std::vector<int>& es);
std::vector<std::string> germ_universe(int max_length);
// Direct adjacency, re-encoded from the rule statements.
bool directly_adjacent(const std::string& from, const std::string& to);
std::set<std::string> reachable_by_bfs(const std::string& from, const std::vector<std::string>& universe);

}  // namespace oracle
