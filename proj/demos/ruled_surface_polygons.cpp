// Newton-Okounkov polygons of a few classes on the ruled surface P(O ⊕ O(1)),
// for both flag positions, next to the Zariski data and the volume.
#include "okb/okb.hpp"

#include <iostream>

namespace {

void show(const okb::HNData& hn, const okb::Rat& a, const okb::Rat& b) {
    const okb::ZariskiResult z = okb::zariski(hn, a, b);
    std::cout << "class a=" << okb::to_string(a) << " b=" << okb::to_string(b) << "  t*=" << okb::to_string(z.t_star)
              << "  vol=" << okb::to_string(okb::volume_class(hn, a, b)) << "\n";
    for (bool through : {true, false}) {
        std::cout << (through ? "  through    :" : "  not through:");
        for (const auto& v : okb::polygon(hn, a, b, through).vertices)
            std::cout << " (" << okb::to_string(v[0]) << ", " << okb::to_string(v[1]) << ")";
        std::cout << "\n";
    }
}

} // namespace

int main() {
    const okb::HNData hn({{1, okb::Rat(0)}, {1, okb::Rat(1)}});
    show(hn, okb::Rat(1), okb::Rat(2));
    show(hn, okb::Rat(1), okb::Rat(1));
    show(hn, okb::Rat(1), okb::make_rat(1, 2));
}
