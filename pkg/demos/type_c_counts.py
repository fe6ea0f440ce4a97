"""Four ways to count character sheaves of (Sp(2n), GL(n)), side by side."""
from __future__ import annotations

from charsheaves import SymmetricPair, char_count, orbital_complex_count
from charsheaves.atlas import ci_formula, ci_product_coefficient

print(f"{'n':>3} {'orbits':>8} {'formula':>8} {'product':>8} {'labels':>8}")
for n in range(11):
    pr = SymmetricPair("CI", n, n)
    row = (orbital_complex_count(pr), ci_formula(n), ci_product_coefficient(n), char_count(pr))
    flag = "" if len(set(row)) == 1 else "  <-- mismatch"
    print(f"{n:>3} " + " ".join(f"{x:>8}" for x in row) + flag)
