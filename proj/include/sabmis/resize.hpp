#pragma once

#include "sabmis/image.hpp"

namespace sabmis {

// Separable resampling used when ingesting arbitrary-size inputs: each axis
// is reduced with exact area averaging (box filter over the covered source
// interval) or enlarged with bilinear interpolation at pixel centers.
RealImage resample(const RealImage& img, Eigen::Index out_rows, Eigen::Index out_cols);

// Convenience wrapper: resample an 8-bit image and re-quantize. Returns the
// input unchanged when dimensions already match.
GrayImage resize_to(const GrayImage& img, Eigen::Index out_rows, Eigen::Index out_cols);

}  // namespace sabmis
