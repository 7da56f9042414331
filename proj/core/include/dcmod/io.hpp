#pragma once

// Self-describing CSV dumps for CLI caching and plotting: a '# key = value'
// header block with the grid spec, then one sample per line.

#include <string>

#include "dcmod/boundary.hpp"
#include "dcmod/bulk.hpp"

namespace dcmod {

void save_cauchy_csv(const CauchyData& d, const std::string& path);
CauchyData load_cauchy_csv(const std::string& path);

void save_modes_csv(const ModeAmplitude& m, const std::string& path);
ModeAmplitude load_modes_csv(const std::string& path);

/// (omega-index, u, value) rows for plotting and regression baselines.
void save_boundary_csv(const BoundaryData& d, const std::string& path);

}  // namespace dcmod
