#pragma once

#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "dronecell/experiment.hpp"

namespace dronecell {

// Preset experiment bundles, each reproducing one published result table:
//   fig2  - SEG vs simulation time (warm-up forced to 0 so short horizons
//           are measurable)
//   fig3  - SEG vs area width
//   fig4  - mean spectral efficiency and its across-run std vs area width
//   fig5a - SEG vs drone height
//   fig5b - SEG vs user count / density
//   fig5c - SEG vs drone speed
//   fig6  - CEE vs area width (fixed, mobile at 20 m/s, mobile at 10 m/s)
//   fig7  - MEE vs area width (same three configurations)
enum class FigureId { Fig2, Fig3, Fig4, Fig5a, Fig5b, Fig5c, Fig6, Fig7 };

std::optional<FigureId> figure_from_name(std::string_view name);
std::vector<std::string_view> figure_names();

// Run the preset's sweep(s) on top of `base` (seed and replication count
// are taken from it) and write the figure's CSV.  Column layouts are
// documented in the README.
void reproduce_figure(FigureId id, const SimConfig& base, std::ostream& out, unsigned threads);

}  // namespace dronecell
