#include "plumbhf/family.hpp"

#include <stdexcept>

namespace plumbhf {

PlumbingGraph family_graph(int n) {
    if (n < 1) throw std::invalid_argument("family index must be at least 1");
    std::vector<int> w{-1, -2, -3, -(4 * n + 3)};
    std::vector<std::pair<int, int>> e{{0, 1}, {0, 2}, {0, 3}};
    int prev = 2;
    for (int k = 0; k < n - 1; ++k) {
        w.push_back(-2);
        int v = static_cast<int>(w.size()) - 1;
        e.emplace_back(prev, v);
        prev = v;
    }
    return make_graph(std::move(w), std::move(e));
}

CharVector family_generator(int n, int i) {
    if (i < 1 || i > 2 * n) throw std::out_of_range("generator index out of range");
    CharVector k(n + 3, 0);
    k[0] = 1;
    k[2] = -1;
    k[3] = -4 * n - 3 + 2 * i;
    return k;
}

}  // namespace plumbhf
