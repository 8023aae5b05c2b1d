#!/usr/bin/env python3
"""Regenerate core/src/sobol_directions.cpp from the Joe-Kuo direction numbers.

The initial direction numbers and primitive polynomials are the published
"new-joe-kuo-6" data set (S. Joe and F. Y. Kuo, 2008), as redistributed by
scipy in scipy/stats/_sobol_direction_numbers.npz.  Only the first 64
dimensions are embedded; the first dimension is the plain van der Corput
sequence and needs no table entry.

Usage: python3 scripts/gen_sobol_directions.py > core/src/sobol_directions.cpp
"""

import os
import sys

import numpy as np
import scipy.stats


def load_joe_kuo():
    path = os.path.join(os.path.dirname(scipy.stats.__file__),
                        "_sobol_direction_numbers.npz")
    data = np.load(path)
    return data["poly"], data["vinit"]


def main():
    poly, vinit = load_joe_kuo()
    max_dim = 64
    rows = []
    # Row r describes dimension r + 2 (dimension 1 is van der Corput).
    for r in range(1, max_dim):
        p = int(poly[r])
        degree = p.bit_length() - 1
        m = [int(v) for v in vinit[r][:degree]]
        assert all(v % 2 == 1 and v < (1 << (j + 1)) for j, v in enumerate(m))
        rows.append((p, degree, m))

    out = sys.stdout
    out.write("// Generated by scripts/gen_sobol_directions.py -- do not edit by hand.\n")
    out.write("// Primitive polynomials and initial direction numbers for Sobol\n")
    out.write("// dimensions 2..%d, from the Joe-Kuo \"new-joe-kuo-6\" data set.\n" % max_dim)
    out.write("\n#include \"sboc/sobol.hpp\"\n\n")
    out.write("#include <array>\n#include <cstdint>\n\nnamespace sboc::detail {\n\n")
    out.write("const SobolDirectionRow kSobolDirectionRows[%d] = {\n" % len(rows))
    for p, degree, m in rows:
        ms = ", ".join(str(v) for v in m)
        out.write("    {%d, %d, {%s}},\n" % (p, degree, ms))
    out.write("};\n\n")
    out.write("const int kSobolMaxDimension = %d;\n" % max_dim)
    out.write("\n}  // namespace sboc::detail\n")


if __name__ == "__main__":
    main()
