"""Walk through one orthogonal pair: orbits, component groups, supports, sheaves."""
from __future__ import annotations

import sys

from charsheaves import (
    SymmetricPair,
    char_count,
    component_group,
    enumerate_syd,
    fundamental_group_descriptor,
    orbital_complex_count,
    support_set,
)
from charsheaves.richardson import is_richardson, omega_data


def main(text: str = "BDI:4,3") -> None:
    pair = SymmetricPair.parse(text)
    print(f"pair {pair.text()}")
    print("orbits:")
    for o in enumerate_syd(pair):
        mark = " richardson" if is_richardson(pair, o) else ""
        extra = ""
        if mark and pair.kind == "BDI":
            om = omega_data(o)
            extra = f" |Pi|={om.pi_cardinality}"
        print(f"  {o.text():<24} {str(component_group(pair, o)):<8}{mark}{extra}")
    print("supports:")
    for s in support_set(pair):
        print(f"  {s.text():<40} pi1 = {fundamental_group_descriptor(s).text()}")
    print(f"orbital complexes {orbital_complex_count(pair)}, character sheaves {char_count(pair)}")


if __name__ == "__main__":
    main(*sys.argv[1:])
