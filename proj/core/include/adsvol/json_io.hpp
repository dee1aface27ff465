#pragma once

#include <string>

#include "adsvol/bounds.hpp"
#include "adsvol/deform.hpp"
#include "adsvol/riera.hpp"
#include "adsvol/surface.hpp"

// String-level JSON interfaces. The surface description schema is
//   {"genus": g, "lengths": [...], "twists": [...]}
// with field order irrelevant and unknown fields rejected.

namespace adsvol::json_io {

struct SurfaceDescription {
  surface::SurfaceTopology topology;
  surface::FNCoordinates fn;
};

SurfaceDescription parse_surface(const std::string& text);
std::string surface_to_json(int genus, const surface::FNCoordinates& fn);

struct SurfaceValidation {
  int genus = 2;
  double relator_residual = 0.0;
  std::vector<double> edge_traces;
  std::vector<double> expected_traces;
  bool pass = false;
};

SurfaceValidation validate_surface(const SurfaceDescription& desc, double tolerance);

std::string to_json(const SurfaceValidation& v);
std::string to_json(const riera::RieraReport& r, const std::string& curve, double ratio);
std::string to_json(const curves::IntersectionResult& r);
std::string to_json(const deform::EnergyReport& r, int genus, double mc_length);
std::string to_json(const deform::GrowthBoundReport& r);
std::string to_json(const bounds::VolumeBracket& b);
std::string to_json(const bounds::DensityReport& d);
std::string to_json(const bounds::Prop52Report& r);
std::string to_json(const bounds::GenusOptimalityReport& r);
std::string to_json(const bounds::LogFit& f);
std::string scalar_json(const std::string& name, double value);

}  // namespace adsvol::json_io
