#ifndef MORPHCLUST_CSV_IO_HPP
#define MORPHCLUST_CSV_IO_HPP

#include <optional>
#include <string>
#include <utility>

#include "morphclust/geometry.hpp"
#include "morphclust/metrics.hpp"

namespace morphclust {

// Reads `x,y[,z][,label]` with a case-insensitive header. Headerless numeric
// files infer the dimension from the column count: 2 columns = 2D, 3 = 3D,
// 4 = 3D plus a label column. Accepts \n and \r\n.
std::pair<Dataset, std::optional<LabelVector>> read_csv(const std::string& path);

// Writes `x,y[,z],label` with round-trip precision; rereading reproduces the
// dataset exactly.
void write_csv(const std::string& path, const Dataset& data, const LabelVector& labels);

} // namespace morphclust

#endif
