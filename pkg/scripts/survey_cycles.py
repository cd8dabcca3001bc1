"""Survey the disjoint game on cycles: exact winner per length and starter.

The long-cycle Dom-start games flip to Sepy; the small cases (3..7) carry no
general claim, so this table is the empirical record.
"""

import sys
import time

sys.path.insert(0, "src")

from domgame.engine import DOM, SEPY, GameConfig
from domgame.graphs import gen_cycle
from domgame.solver import solve


def main():
    print(f"{'n':>3} {'dom-start':>10} {'sepy-start':>10} {'nodes':>9} {'sec':>6}")
    for n in range(3, 13):
        g = gen_cycle(n)
        row = [f"{n:>3}"]
        nodes = 0
        t0 = time.time()
        for starter in (DOM, SEPY):
            res = solve(GameConfig(variant="ddg", starter=starter), g)
            row.append(f"{res.winner:>10}")
            nodes += res.nodes
        row.append(f"{nodes:>9}")
        row.append(f"{time.time() - t0:>6.2f}")
        print(" ".join(row))


if __name__ == "__main__":
    main()
