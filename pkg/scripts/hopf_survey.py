#!/usr/bin/env python3
"""Survey the corpus: antipodes, opantipodes and fusion-operator ranks.

For each bialgebra in the corpus this prints whether the antipode/opantipode
exists, whether s^2 = id, and the ranks of the four fusion operators; the
rank deficit of h is exactly what obstructs a Hopf structure.
"""

from sweedler.linalg import compose, rank
from sweedler.structures import find_antipode, find_opantipode, fusion_operators
from sweedler.zoo import corpus_bialgebras


def main() -> None:
    header = f"{'bialgebra':<16} {'dim':>3} {'antipode':>9} {'s^2=id':>7} " \
             f"{'opant.':>7} {'rk h':>5} {'rk h_':>5} {'rk hb':>5} {'rk hb_':>6}"
    print(header)
    print("-" * len(header))
    for name, b in corpus_bialgebras():
        ops = fusion_operators(b)
        hopf = find_antipode(b)
        op = find_opantipode(b)
        if hopf is not None:
            square = compose(hopf.antipode, hopf.antipode)
            involutive = "yes" if square.is_identity() else "no"
        else:
            involutive = "-"
        print(f"{name:<16} {b.dim:>3} "
              f"{'yes' if hopf else 'no':>9} {involutive:>7} "
              f"{'yes' if op is not None else 'no':>7} "
              f"{rank(ops.h):>5} {rank(ops.h_prime):>5} "
              f"{rank(ops.h_bar):>5} {rank(ops.h_bar_prime):>6}")


if __name__ == "__main__":
    main()
