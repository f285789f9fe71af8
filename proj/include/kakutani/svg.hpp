#pragma once

#include <string>
#include <vector>

#include "kakutani/discrepancy.hpp"
#include "kakutani/enumerate.hpp"

namespace kak {

// Ruled-lines figure: one row per refinement level, ticks at interval
// endpoints, labels on the endpoints new to that row.
std::string partitions_svg(const std::vector<PartitionLevel>& levels);

// Log-log polyline of extreme discrepancy against lambda.
std::string discrepancy_svg(const std::vector<DiscrepancyValue>& curve);

}  // namespace kak
