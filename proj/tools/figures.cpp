#include "figures.hpp"

#include <fstream>
#include <json.hpp>
#include <vector>

#include "floorlab/errors.hpp"
#include "floorlab/real_spec.hpp"
#include "floorlab/torus_lab.hpp"

namespace floorlab::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

struct Segment {
  std::string label;
  double x0, y0, x1, y1;
};

// Boundary lines y = c*x - j of the band region, clipped to the unit square.
void region_boundaries(double c, unsigned m, std::vector<Segment>& out) {
  for (unsigned j = 0; j <= m; ++j) {
    double x0 = j / c;
    double x1 = std::min(1.0, (j + 1.0) / c);
    if (x0 >= 1.0) continue;
    const std::string label = j ? "boundary y-cx=-" + std::to_string(j) : "boundary y-cx=0";
    out.push_back({label, x0, 0.0, x1, c * x1 - j});
  }
}

// Overlay lines y = s*x + t wrapped into the square: one segment per integer
// offset that intersects it.
void overlay_lines(double s, const std::string& label, std::vector<Segment>& out) {
  for (int j = 0; j < static_cast<int>(s) + 1; ++j) {
    double x0 = j / s;
    double x1 = std::min(1.0, (j + 1.0) / s);
    if (x0 >= 1.0) continue;
    out.push_back({label, x0, 0.0, x1, s * x1 - j});
  }
}

void write_lines_csv(const std::string& path, const std::vector<Segment>& segments) {
  std::ofstream out(path);
  out << "label,x0,y0,x1,y1\n";
  for (const auto& s : segments)
    out << s.label << "," << s.x0 << "," << s.y0 << "," << s.x1 << "," << s.y1 << "\n";
}

void write_points_csv(const std::string& path, const std::vector<OrbitRecord>& records) {
  std::ofstream out(path);
  write_orbit_csv(out, records);
}

}  // namespace

std::string emit_figure(const std::string& which, const std::string& out_prefix) {
  AlgebraicReal golden = parse_algebraic("root([-1,-1,1],1,2)");
  const double golden_d = golden.to_double();

  std::vector<OrbitRecord> records;
  std::vector<Segment> segments;
  ordered_json summary;
  summary["figure"] = which;

  if (which == "fig1-left" || which == "fig1-mid" || which == "fig1-right") {
    // All three panels shade the golden band -1 <= y - golden*x < 0; the
    // orbits come from three different numbers.
    AlgebraicReal alpha = golden;
    long count = 250;
    if (which == "fig1-left") {
      alpha = parse_algebraic("root([-4,0,0,1],1,2)");  // cube root of 4
      count = 250;
    } else if (which == "fig1-mid") {
      // The mid panel's constant is only known as a decimal; reproduced as
      // the exact rational it literally is.
      alpha = parse_algebraic("1914213562/1000000000");
      count = 150;
    } else {
      alpha = parse_algebraic("root([-1,-2,1],2,3)");  // 1 + sqrt(2)
      count = 100;
    }
    std::vector<TorusPoint> pts;
    for (Int n = 1; n <= count; ++n) pts.push_back(orbit_point(n, alpha, 1, 1));
    records = dump_records(pts, golden, 1);
    region_boundaries(golden_d, 1, segments);
    summary["alpha"] = alpha.to_string();
    summary["points"] = count;
  } else if (which == "fig2") {
    // alpha = 1 + sqrt(2), beta = alpha^2, m = 2; slope beta/alpha = alpha.
    AlgebraicReal alpha = parse_algebraic("root([-1,-2,1],2,3)");
    RegionSpec region{FieldElement::generator(alpha), 2};
    std::vector<TorusPoint> pts;
    const long count = 10000;
    for (Int n = 1; n <= count; ++n) pts.push_back(orbit_point(n, alpha, 1, 1));
    records = dump_records(pts, &region);
    region_boundaries(alpha.to_double(), 2, segments);
    overlay_lines(1.0, "slope 1", segments);
    overlay_lines(2.0, "slope 2", segments);
    overlay_lines(3.0, "slope 3", segments);
    summary["alpha"] = alpha.to_string();
    summary["points"] = count;
    std::vector<std::uint64_t> counts(3, 0);
    for (const auto& rec : records) ++counts[rec.band == kOutside ? 0 : rec.band];
    summary["band_counts"] = {counts[1], counts[2]};
    summary["outside"] = counts[0];
  } else {
    throw UnknownFigure(which);
  }

  const std::string points_path = out_prefix + "_points.csv";
  const std::string lines_path = out_prefix + "_lines.csv";
  write_points_csv(points_path, records);
  write_lines_csv(lines_path, segments);
  summary["points_file"] = points_path;
  summary["lines_file"] = lines_path;
  if (which != "fig2") {
    int outside = 0;
    for (const auto& rec : records)
      if (rec.band == kOutside) ++outside;
    summary["outside"] = outside;
  }
  return summary.dump(2);
}

}  // namespace floorlab::cli
