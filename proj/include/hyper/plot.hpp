#pragma once

#include <optional>
#include <string>

#include "hyper/hypergroup.hpp"

namespace hyper {

struct PlotRequest {
  HypergroupModel model;
  Point x;
  Point y;
  std::optional<Scalar> a;  // also draw a o x when set
};

/// SVG 1.1 document, 800x800, showing the frame [-10, 10]^2 with x, y, the
/// region x # y, its essential points and optionally a o x.
std::string plot_svg(const PlotRequest& req);

/// Writes plot_svg(req) to path; throws std::runtime_error on I/O failure.
void render_plot(const PlotRequest& req, const std::string& path);

}  // namespace hyper
