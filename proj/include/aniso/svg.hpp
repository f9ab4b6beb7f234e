#pragma once
#include <string>
#include <vector>

#include "aniso/dynamics.hpp"

namespace aniso {

enum class Projection { XY, XZ, YZ, Isometric3D };

Projection projection_from_string(const std::string& s);

// 2-D polyline projection of a trajectory with axes and min/max scale labels.
// Output bytes are a pure function of the input samples and projection.
void write_svg_plot(const std::string& path, const std::vector<TrajectorySample>& samples,
                    Projection proj);

}  // namespace aniso
