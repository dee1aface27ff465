#include "adsvol/json_io.hpp"

#include <cmath>

#include <json.hpp>

namespace adsvol::json_io {

using nlohmann::ordered_json;

namespace {

ordered_json with_version(const char* kind) {
  ordered_json j;
  j["version"] = kVersion;
  j["kind"] = kind;
  return j;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

SurfaceDescription parse_surface(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    fail(ErrorKind::InvalidInput, std::string("surface JSON parse error: ") + e.what());
  }
  if (!j.is_object()) fail(ErrorKind::InvalidInput, "surface description must be a JSON object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.key() != "genus" && it.key() != "lengths" && it.key() != "twists") {
      fail(ErrorKind::InvalidInput, "unknown surface field: " + it.key());
    }
  }
  if (!j.contains("genus") || !j.contains("lengths") || !j.contains("twists")) {
    fail(ErrorKind::InvalidInput, "surface description needs genus, lengths, twists");
  }
  if (!j["genus"].is_number_integer()) fail(ErrorKind::InvalidInput, "genus must be an integer");
  int genus = j["genus"].get<int>();
  SurfaceDescription desc;
  desc.topology = surface::standard_topology(genus);
  auto read_array = [&](const char* key, bool positive) {
    if (!j[key].is_array()) fail(ErrorKind::InvalidInput, std::string(key) + " must be an array");
    std::vector<double> v;
    for (const auto& x : j[key]) {
      if (!x.is_number()) fail(ErrorKind::InvalidInput, std::string(key) + " must hold numbers");
      double d = x.get<double>();
      if (!std::isfinite(d)) fail(ErrorKind::InvalidInput, std::string(key) + " must be finite");
      if (positive && !(d > 0.0)) {
        fail(ErrorKind::InvalidInput, std::string(key) + " must be strictly positive");
      }
      v.push_back(d);
    }
    if (static_cast<int>(v.size()) != desc.topology.num_curves()) {
      fail(ErrorKind::InvalidInput,
           std::string(key) + " must have length " + std::to_string(desc.topology.num_curves()));
    }
    return v;
  };
  desc.fn.lengths = read_array("lengths", true);
  desc.fn.twists = read_array("twists", false);
  return desc;
}

std::string surface_to_json(int genus, const surface::FNCoordinates& fn) {
  ordered_json j;
  j["genus"] = genus;
  j["lengths"] = fn.lengths;
  j["twists"] = fn.twists;
  return dump(j);
}

SurfaceValidation validate_surface(const SurfaceDescription& desc, double tolerance) {
  surface::HolonomyRep rep = surface::build_holonomy(desc.topology, desc.fn);
  SurfaceValidation v;
  v.genus = desc.topology.genus;
  v.relator_residual = rep.relator_residual();
  v.pass = rep.relator_residual() <= tolerance;
  for (int e = 0; e < desc.topology.num_curves(); ++e) {
    double tr = std::abs(hypgeom::trace(rep.evaluate(rep.edge_word(e))));
    double want = 2.0 * std::cosh(desc.fn.lengths[static_cast<std::size_t>(e)] / 2.0);
    v.edge_traces.push_back(tr);
    v.expected_traces.push_back(want);
    v.pass = v.pass && std::abs(tr - want) <= tolerance * std::max(1.0, want);
  }
  return v;
}

std::string to_json(const SurfaceValidation& v) {
  ordered_json j = with_version("surface_validation");
  j["genus"] = v.genus;
  j["relator_residual"] = v.relator_residual;
  ordered_json edges = ordered_json::array();
  for (std::size_t i = 0; i < v.edge_traces.size(); ++i) {
    ordered_json e;
    e["edge"] = i;
    e["trace"] = v.edge_traces[i];
    e["expected"] = v.expected_traces[i];
    edges.push_back(e);
  }
  j["edges"] = edges;
  j["pass"] = v.pass;
  return dump(j);
}

std::string to_json(const riera::RieraReport& r, const std::string& curve, double ratio) {
  ordered_json j = with_version("wp_gradient_lower_bound");
  j["curve"] = curve;
  j["word_radius"] = r.word_radius;
  j["base_term"] = r.base_term;
  j["series_sum"] = r.series_sum;
  j["lower_bound"] = r.lower_bound;
  j["n_terms"] = r.n_terms;
  j["n_skipped_near_tangent"] = r.n_skipped_near_tangent;
  j["crossing_detected"] = r.crossing_detected;
  j["mainestimate_ratio"] = ratio;
  return dump(j);
}

std::string to_json(const curves::IntersectionResult& r) {
  ordered_json j = with_version("intersection_number");
  j["count_lower_bound"] = r.count_lower_bound;
  j["certified_exact"] = r.certified_exact;
  j["enumeration_radius"] = r.enumeration_radius;
  return dump(j);
}

std::string to_json(const deform::EnergyReport& r, int genus, double mc_length) {
  ordered_json j = with_version("collar_testmap_energy");
  j["genus"] = genus;
  j["mc_length"] = mc_length;
  j["eps"] = r.eps;
  j["quadrature_points"] = r.quadrature_points;
  j["collar_contribution"] = r.collar_contribution;
  j["isometric_contribution"] = r.isometric_contribution;
  j["total_energy"] = r.total_energy;
  return dump(j);
}

std::string to_json(const deform::GrowthBoundReport& r) {
  ordered_json j = with_version("length_growth_bound");
  j["level"] = r.level;
  j["lamination_length"] = r.lamination_length;
  j["collar"] = r.collar;
  j["trivially_disjoint"] = r.trivially_disjoint;
  ordered_json edges = ordered_json::array();
  for (const auto& e : r.edges) {
    ordered_json x;
    x["edge"] = e.edge;
    x["length_after"] = e.length_after;
    x["bound"] = e.bound;
    x["satisfied"] = e.satisfied;
    edges.push_back(x);
  }
  j["edges"] = edges;
  return dump(j);
}

std::string to_json(const bounds::VolumeBracket& b) {
  ordered_json j = with_version("volume_bracket");
  j["genus"] = b.genus;
  j["lower"] = b.lower;
  j["upper"] = b.upper;
  return dump(j);
}

std::string to_json(const bounds::DensityReport& d) {
  ordered_json j = with_version("pointwise_densities");
  j["norm_df"] = d.norm_df;
  j["norm_del"] = d.norm_del;
  j["norm_delbar"] = d.norm_delbar;
  j["schatten_trace"] = d.schatten_trace;
  j["orientation_preserving"] = d.orientation_preserving;
  return dump(j);
}

std::string to_json(const bounds::Prop52Report& r) {
  ordered_json j = with_version("prop52_family");
  j["n"] = r.n;
  j["mu_length"] = r.mu_length;
  j["alpha_length"] = r.alpha_length;
  j["lambda_length"] = r.lambda_length;
  j["beta_length_closed_form"] = r.beta_length_closed_form;
  j["beta_length_holonomy"] = r.beta_length_holonomy;
  j["ratio_floor"] = r.ratio_floor;
  j["bracket_lower"] = r.bracket.lower;
  j["bracket_upper"] = r.bracket.upper;
  return dump(j);
}

std::string to_json(const bounds::GenusOptimalityReport& r) {
  ordered_json j = with_version("genus_optimality_family");
  j["genus"] = r.genus;
  j["u"] = r.u;
  j["weight"] = r.weight;
  j["r_u"] = r.r_u;
  j["lambda_length"] = r.lambda_length;
  j["exp_dth_upper"] = r.exp_dth_upper;
  j["volume_ratio_floor"] = r.volume_ratio_floor;
  j["c0"] = r.c0;
  j["c0_argmax"] = r.c0_argmax;
  return dump(j);
}

std::string to_json(const bounds::LogFit& f) {
  ordered_json j = with_version("log_fit");
  j["c1"] = f.c1;
  j["c2"] = f.c2;
  j["max_residual"] = f.max_residual;
  j["fitted"] = f.fitted;
  return dump(j);
}

std::string scalar_json(const std::string& name, double value) {
  ordered_json j = with_version("scalar");
  j["name"] = name;
  j["value"] = value;
  return dump(j);
}

}  // namespace adsvol::json_io
