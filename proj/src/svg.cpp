#include "upsilon/svg.hpp"

#include <array>
#include <sstream>

#include "upsilon/error.hpp"

namespace upsilon {

namespace {

constexpr std::array<const char*, 12> kPalette = {
    "#e6194b", "#3cb44b", "#ffe119", "#4363d8", "#f58231", "#911eb4",
    "#46f0f0", "#f032e6", "#bcf60c", "#fabebe", "#008080", "#e6beff",
};

}  // namespace

std::string render_svg(const PeriodicTiling& tiling, int cell_px) {
  if (tiling.dimension() != 2) throw PreconditionError("svg export needs n = 2");
  if (cell_px < 1) throw InvalidArgument("cell size must be positive");
  const auto report = verify(tiling);
  if (!report.is_tiling) throw PreconditionError("svg export refused: input is not a tiling");

  const Coord p = tiling.period();
  const Window w(2, p);
  std::vector<std::size_t> owner(w.cell_count());
  const auto& shape = upsilon_offsets(2);
  const auto& words = tiling.codewords();
  for (std::size_t k = 0; k < words.size(); ++k)
    for (const auto& d : shape.offsets) owner[w.index_of(words[k] - d)] = k;

  const long side = static_cast<long>(p) * cell_px;
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << side << "\" height=\"" << side
     << "\" viewBox=\"0 0 " << side << ' ' << side << "\">\n"
     << "<style>.cell{stroke:#333;stroke-width:1}.word{fill:#000}</style>\n";
  // Row 0 at the bottom so the picture reads with y increasing upward.
  for (CellIndex c = 0; c < w.cell_count(); ++c) {
    const Point a = w.point_of(c);
    const long x = a[0] * cell_px;
    const long y = (p - 1 - a[1]) * cell_px;
    os << "<rect class=\"cell\" x=\"" << x << "\" y=\"" << y << "\" width=\"" << cell_px << "\" height=\"" << cell_px
       << "\" fill=\"" << kPalette[owner[c] % kPalette.size()] << "\"/>\n";
  }
  for (const auto& x : words) {
    const double cx = (static_cast<double>(x[0]) + 0.5) * cell_px;
    const double cy = (static_cast<double>(p - 1 - x[1]) + 0.5) * cell_px;
    os << "<circle class=\"word\" cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << cell_px / 4.0 << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace upsilon
