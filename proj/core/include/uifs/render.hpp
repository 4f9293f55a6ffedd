#pragma once

#include "uifs/ifs.hpp"
#include "uifs/rational.hpp"

#include <string>

namespace uifs {

// Real position of a digit expansion under the embedding
// sum d_j t^j  ->  sum d_j p^{-j-1}  (used only for drawing).
Rational monna_position(const Element& a);

struct RenderOptions {
    int width = 800;
    int row_height = 40;
    int row_gap = 8;
    int margin = 20;
};

// One row per depth 0..depth; row d draws one bar per composition image
// f_w(universe) over words w of length d. Output is byte-deterministic for
// identical inputs.
std::string render_svg(const Ifs& system, const Ball& universe, int depth,
                       const RenderOptions& options = {});

} // namespace uifs
