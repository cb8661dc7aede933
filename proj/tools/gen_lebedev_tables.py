#!/usr/bin/env python3
"""Regenerate src/lebedev_tables.cpp from SciPy's Lebedev rules.

Usage: python3 tools/gen_lebedev_tables.py > src/lebedev_tables.cpp
Weights are rescaled so that each rule sums to 4*pi (surface area of S^2).
"""
import math
import sys

from scipy.integrate import lebedev_rule

ORDERS = [3, 5, 7, 9, 11, 17, 35, 71, 131]


def main():
    out = sys.stdout
    out.write("// Generated by tools/gen_lebedev_tables.py. Do not edit.\n\n")
    out.write('#include "lebedev_tables.hpp"\n\n')
    out.write("namespace wavelab::detail {\n\nnamespace {\n\n")
    sizes = []
    for order in ORDERS:
        x, w = lebedev_rule(order)
        w = w * (4.0 * math.pi / w.sum())
        sizes.append(x.shape[1])
        out.write(f"constexpr SpherePoint kOrder{order}[] = {{\n")
        for i in range(x.shape[1]):
            out.write("    {%s, %s, %s, %s},\n" % tuple(float(v).hex() for v in
                                                    (x[0, i], x[1, i], x[2, i], w[i])))
        out.write("};\n\n")
    out.write("}  // namespace\n\n")
    out.write("const std::array<LebedevTable, %d>& lebedev_tables() {\n" % len(ORDERS))
    out.write("  static const std::array<LebedevTable, %d> tables{{\n" % len(ORDERS))
    for order, n in zip(ORDERS, sizes):
        out.write(f"      {{{order}, std::span<const SpherePoint>(kOrder{order}, {n})}},\n")
    out.write("  }};\n  return tables;\n}\n\n}  // namespace wavelab::detail\n")


if __name__ == "__main__":
    main()
