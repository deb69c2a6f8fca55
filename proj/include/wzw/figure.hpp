#pragma once

// SVG scatter plots of rank-2 level-k alcoves.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "wzw/error.hpp"
#include "wzw/rootsys.hpp"
#include "wzw/spectrum.hpp"

namespace wzw {

struct AlcoveFigure {
  std::vector<std::array<double, 2>> nodes;     // plane coordinates, one per point of A_k
  std::vector<std::array<double, 2>> boundary;  // vertices of k * A, counterclockwise
  std::string title;
};

namespace detail {

/// Lower-triangular L with L L^T = gram.
inline std::vector<std::vector<double>> cholesky(const RatMatrix& gram) {
  const std::size_t n = gram.rows();
  std::vector<std::vector<double>> l(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      double s = gram(i, j).get_d();
      for (std::size_t p = 0; p < j; ++p) s -= l[i][p] * l[j][p];
      l[i][j] = i == j ? std::sqrt(s) : s / l[j][j];
    }
  return l;
}

inline std::array<double, 2> embed(const std::vector<std::vector<double>>& l, const std::vector<double>& x) {
  // y = L^T x, so |y|^2 = x^T gram x
  std::array<double, 2> y{0.0, 0.0};
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t i = 0; i < 2; ++i) y[r] += l[i][r] * x[i];
  return y;
}

inline void sort_counterclockwise(std::vector<std::array<double, 2>>& pts) {
  double cx = 0, cy = 0;
  for (const auto& p : pts) cx += p[0], cy += p[1];
  cx /= double(pts.size());
  cy /= double(pts.size());
  std::sort(pts.begin(), pts.end(), [&](const auto& a, const auto& b) {
    return std::atan2(a[1] - cy, a[0] - cx) < std::atan2(b[1] - cy, b[0] - cx);
  });
}

}  // namespace detail

/// A single rank-2 factor, or two rank-1 factors with one level each. Coordinates are
/// Dynkin labels placed isometrically for the basic form.
inline AlcoveFigure alcove_figure(const std::vector<SimpleType>& factors, const std::vector<int>& levels) {
  int total = 0;
  for (const auto& t : factors) total += t.rank;
  if (total != 2 || factors.size() != levels.size())
    fail(ErrorKind::Unsupported, "figures need total rank 2 and one level per factor");
  RatMatrix gram(2, 2);
  std::vector<std::vector<double>> corners;  // vertices of k * A in label coordinates
  AlcoveFigure fig;
  if (factors.size() == 1) {
    const RootSystemData& rs = root_data(factors[0]);
    gram = rs.weight_gram;
    const double k = levels[0];
    corners = {{0, 0}, {k / rs.comarks[0].get_d(), 0}, {0, k / rs.comarks[1].get_d()}};
    fig.title = factors[0].name() + " level " + std::to_string(levels[0]);
  } else {
    for (std::size_t i = 0; i < 2; ++i) gram(i, i) = root_data(factors[i]).weight_gram(0, 0);
    const double a = levels[0], b = levels[1];
    corners = {{0, 0}, {a, 0}, {a, b}, {0, b}};
    fig.title = factors[0].name() + " x " + factors[1].name() + " level (" + std::to_string(levels[0]) + "," +
                std::to_string(levels[1]) + ")";
  }
  auto l = detail::cholesky(gram);
  for (const auto& tuple : enumerate_alcove_product(factors, levels)) {
    std::vector<double> x;
    for (const auto& p : tuple)
      for (long c : p.coords) x.push_back(double(c));
    fig.nodes.push_back(detail::embed(l, x));
  }
  for (const auto& c : corners) fig.boundary.push_back(detail::embed(l, c));
  detail::sort_counterclockwise(fig.boundary);
  return fig;
}

/// SVG 1.1 document; every alcove point is one <circle class="node">.
inline std::string render_svg(const AlcoveFigure& fig, double size = 480.0) {
  double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  for (const auto& p : fig.boundary) {
    xmin = std::min(xmin, p[0]), xmax = std::max(xmax, p[0]);
    ymin = std::min(ymin, p[1]), ymax = std::max(ymax, p[1]);
  }
  const double margin = 30.0;
  const double span = std::max({xmax - xmin, ymax - ymin, 1e-9});
  const double s = (size - 2 * margin) / span;
  auto fmt = [](double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v == 0.0 ? 0.0 : v);
    return std::string(buf);
  };
  auto px = [&](const std::array<double, 2>& p) { return fmt(margin + (p[0] - xmin) * s); };
  auto py = [&](const std::array<double, 2>& p) { return fmt(size - margin - (p[1] - ymin) * s); };

  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fmt(size) + "\" height=\"" +
         fmt(size) + "\" viewBox=\"0 0 " + fmt(size) + " " + fmt(size) + "\">\n";
  out += "  <title>" + fig.title + "</title>\n";
  out += "  <polygon class=\"alcove\" fill=\"none\" stroke=\"#444444\" stroke-width=\"1.5\" stroke-dasharray=\"6,4\" points=\"";
  for (std::size_t i = 0; i < fig.boundary.size(); ++i)
    out += (i ? " " : "") + px(fig.boundary[i]) + "," + py(fig.boundary[i]);
  out += "\"/>\n";
  for (const auto& p : fig.nodes)
    out += "  <circle class=\"node\" cx=\"" + px(p) + "\" cy=\"" + py(p) + "\" r=\"4.000000\" fill=\"#1f4e79\"/>\n";
  out += "</svg>\n";
  return out;
}

}  // namespace wzw
