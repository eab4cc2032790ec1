#!/usr/bin/env python3
"""Print the flat-torus worked examples straight from the library.

Reproduces, per direction: the symplectic form, the complex-structure
table, the holomorphic 3-form parts (7-dim model), and the induced
3-forms of the 8-dim model, all as canonical DSL text.
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from g2spin7.cy import induce_cy
from g2spin7.dsl import print_form, print_vector
from g2spin7.exterior import Vector
from g2spin7.g2 import phi0
from g2spin7.spin7 import induce_g2, psi0

E = Vector.basis


def main() -> int:
    g = phi0()
    print("7-dim flat model, phi =", print_form(g.phi))
    for i in (7, 3):
        c = induce_cy(g, E(7, i))
        print(f"\ndirection e{i}:")
        print("  omega =", print_form(c.omega))
        for j in range(1, 8):
            img = c.j(E(7, j))
            if not img.is_zero():
                print(f"  J: e{j} -> {print_vector(img)}")
        print("  Re =", print_form(c.re_omega3))
        print("  Im =", print_form(c.im_omega3))

    s = psi0()
    print("\n8-dim flat model, Psi =", print_form(s.psi4))
    for i in (4, 5):
        gg = induce_g2(s, E(8, i))
        print(f"\ndirection e{i}:  phi = {print_form(gg.phi)}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
