#include <iostream>
#include "hk/cells.hpp"
#include "hk/ehrhart.hpp"
#include "hk/oracles.hpp"

using namespace hk;

int main() {
    // rational normal cone of degree 3: four independent routes to hk(p=2, e<=3)
    std::vector<IVec> gens = {{1, 0}, {1, 1}, {1, 2}, {1, 3}};
    auto m = AffineSemigroup::create(gens, 2);
    auto ideal = MonomialIdeal::create(m, m.generators());
    auto pc = Polycell::create(m, ideal);
    auto form = hk_form(pc, 2, 3);
    auto dec = CellDecomposition::create(m);
    bool ok = true;
    for (unsigned e = 0; e <= 3; ++e) {
        Int direct = hk_value(pc, 2, e);
        Int cells = dec.value(int_pow(Int(2), e));
        Int bfs = semigroup_bfs_hk(m, ideal, 2, e);
        Rat closed = form.value(e);
        std::cout << "e=" << e << " direct=" << direct << " cells=" << cells
                  << " bfs=" << bfs << " closed=" << to_string(closed) << "\n";
        ok = ok && direct == cells && cells == bfs && closed == Rat(direct);
    }
    std::cout << (ok ? "ALL ROUTES AGREE" : "MISMATCH") << "\n";
    return ok ? 0 : 1;
}
