"""Print facet, ridge and belt statistics for every catalog entry."""

import time

from zonobelt import catalog
from zonobelt.belts import belt_diameter, belts
from zonobelt.search import bound_check
from zonobelt.venkov import venkov_test
from zonobelt.zonotope import facet_classes, ridge_classes


def main():
    header = f"{'name':<24}{'d':>3}{'n':>4}{'facets':>8}{'ridges':>8}{'belts':>10}{'tiles':>7}{'diam':>6}{'bound':>7}{'sec':>8}"
    print(header)
    print("-" * len(header))
    for e in catalog.all_entries(max_dim=6):
        V = e.generators
        t0 = time.perf_counter()
        lengths = sorted({b.length for b in belts(V)})
        bc = bound_check(V)
        row = (f"{e.name:<24}{V.dim:>3}{V.n:>4}{2 * len(facet_classes(V)):>8}{len(ridge_classes(V)):>8}"
               f"{','.join(map(str, lengths)):>10}{str(bool(venkov_test(V))):>7}{belt_diameter(V):>6}"
               f"{bc.bound:>7}{time.perf_counter() - t0:>8.2f}")
        print(row)


if __name__ == "__main__":
    main()
