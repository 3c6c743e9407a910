// Tabulates vol(ξ − t f) and the restricted volume on P(E) for E with
// HN quotients of ranks 2, 1 and slopes 0, 2.
#include "okb/okb.hpp"

#include <iomanip>
#include <iostream>

int main() {
    const okb::HNData hn({{2, okb::Rat(0)}, {1, okb::Rat(2)}});
    std::cout << std::setw(6) << "t" << std::setw(12) << "vol" << std::setw(12) << "restricted" << "\n";
    for (int k = -4; k <= 8; ++k) {
        const okb::Rat t = okb::make_rat(k, 4);
        std::cout << std::setw(6) << okb::to_string(t) << std::setw(12) << okb::to_string(okb::chen_volume(hn, t))
                  << std::setw(12) << okb::to_string(okb::restricted_volume(hn, t)) << "\n";
    }
}
