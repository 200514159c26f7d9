#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace effradius {

struct PlotSeries {
  std::string label;
  Eigen::VectorXd x;
  Eigen::VectorXd y;  // same length as x
  bool markers = false;  // draw circles at the sample points too
};

// Fixed-size 800x600 line chart with axes, ticks and a legend. The output
// depends only on the arguments, so identical calls give identical bytes.
void write_svg_chart(std::ostream& out, const std::string& title,
                     const std::string& x_label, const std::string& y_label,
                     const std::vector<PlotSeries>& series);

}  // namespace effradius
