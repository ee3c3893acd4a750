#!/usr/bin/env python3
"""Sweep e1 over a family of parameter ideals Q_l = (x1^l, x2, ..., xr).

Demonstrates that e1 is unbounded below on a module that is not
generalized Cohen-Macaulay: a plane union a line meeting it in a point.

Usage: python scripts/lambda_sweep.py [max-power]
"""

import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from gradedca.modules import GradedModule  # noqa: E402
from gradedca.poly import CoeffField, PolyRing  # noqa: E402
from gradedca.sampler import lambda_sweep  # noqa: E402


def main():
    top = int(sys.argv[1]) if len(sys.argv) > 1 else 5
    ring = PolyRing(CoeffField(32003), ["x", "y", "z"])
    x, y, z = ring.gens()
    plane = GradedModule.quotient_ring(ring, [x])
    line = GradedModule.quotient_ring(ring, [y, z])
    module = plane.direct_sum(line)
    print("module: S/(x) + S/(y,z) over k[x,y,z], Q_l = ((x+y)^l, z)")
    for power, e1 in lambda_sweep(module, [x + y, z], list(range(1, top + 1))):
        print("  l = %d  e1 = %d" % (power, e1))
    print("e1 is unbounded below: the module is not generalized "
          "Cohen-Macaulay, so no uniform lower bound exists.")


if __name__ == "__main__":
    main()
