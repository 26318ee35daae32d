#pragma once

#include "linepin/classify.hpp"
#include "linepin/polytopes.hpp"

#include <optional>
#include <string>
#include <vector>

namespace linepin {

struct NamedFamily {
    std::string name;
    std::vector<Constraint> constraints;
    std::vector<ConvexPolytope> polytopes;
    std::string expected;                  // short verdict summary
    std::optional<OrthoClass> label;
    std::vector<LineCoords> escape_dirs;   // gen_infinite: escape direction with wedge i removed
};

NamedFamily gen_ortho8();
NamedFamily gen_quadric_4block();
NamedFamily gen_tangent_4pinning();
NamedFamily gen_six_k1();
NamedFamily gen_six_k2();
NamedFamily gen_six_k3();           // pinning variant, slopes of the first two lines reversed
NamedFamily gen_six_k3_open();      // same tail, first two lines sloping down; does not pin
NamedFamily gen_five_block();
NamedFamily gen_char_ortho(OrthoClass label);
std::vector<OrthoClass> supported_char_ortho();
NamedFamily gen_infinite(int n);

std::vector<std::string> generator_names();
NamedFamily generate(const std::string& name, int n = 3);

} // namespace linepin
