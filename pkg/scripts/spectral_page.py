#!/usr/bin/env python3
"""Print the triangular first page of the stratification spectral sequence.

Each column is one Ekedahl-Oort stratum; a cell lists the constituents per
Frobenius exponent, so the pairwise cancellations down each eigenvalue row
can be read off directly.  Example:

    python scripts/spectral_page.py --theta 3 --dims
"""

import argparse
import sys

from unicoh import from_symbol, spectral_first_page


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--theta", type=int, default=2)
    parser.add_argument("--dims", action="store_true", help="also print dimension polynomials")
    args = parser.parse_args()

    page = spectral_first_page(args.theta)
    print(f"first page, theta = {page.theta} (columns = strata, rows = total degree)")
    for degree in range(2 * page.theta, -1, -1):
        cells = [c for c in page.cells if c.degree == degree]
        if not cells:
            continue
        chunks = []
        for cell in sorted(cells, key=lambda c: c.column):
            parts = []
            for exponent, reps in cell.parts:
                labels = " + ".join(str(list(from_symbol(l))) for l in reps)
                piece = f"(-q)^{exponent}: {labels}"
                if args.dims:
                    piece += f" [dim {reps.dimension_poly()}]"
                parts.append(piece)
            chunks.append(f"col {cell.column} | " + " ; ".join(parts))
        print(f"  degree {degree}:")
        for chunk in chunks:
            print(f"    {chunk}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
