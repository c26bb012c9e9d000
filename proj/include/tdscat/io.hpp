#ifndef TDSCAT_IO_HPP
#define TDSCAT_IO_HPP

#include <string>

#include "tdscat/forward.hpp"
#include "tdscat/imaging.hpp"

// File formats. All text, all deterministic:
//  - far-field data: '# key value' header (fingerprint, medium, quadrature
//    spec, block tags), then per block one row per node
//    're0,im0,re1,im1,re2,im2' with 17 significant digits;
//  - indicator maps: '# key=value' header lines then 'x,y,z,value' rows in
//    grid enumeration order;
//  - images: 8-bit binary PGM, linear min-max normalization, one pixel per
//    grid point.

namespace tdscat {

void write_far_field(const std::string& path, const FarFieldData& data);
FarFieldData read_far_field(const std::string& path);

void write_map_csv(const std::string& path, const IndicatorMap& map);

void write_map_pgm(const std::string& path, const IndicatorMap& map);

std::string format_double(double v);  // shortest 17-significant-digit form

}  // namespace tdscat

#endif
