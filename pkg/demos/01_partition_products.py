"""Decompositions of an integer and the max-product criterion.

Splitting N objects into ordered subsets of sizes p_1..p_n yields a
numeration system that can describe product(p_i) states, so the best
split of N is the partition with the largest part product. This walk
prints the full product table for small N and the winner for a few
larger ones.

Run: python demos/01_partition_products.py
"""

from gpncodec import enumerate_compositions, max_product_partition, product_table

print("Ordered splits of 5 into 2 parts and their products:")
for comp in enumerate_compositions(5, 2):
    a, b = comp
    print(f"  {a}+{b}  product {a * b}")
print("The half-and-half split wins, as it always does for two parts.\n")

print("All multi-part partitions for N = 6..8:")
for n, reports in product_table(8).items():
    if n < 6:
        continue
    row = "  ".join(
        f"[{'+'.join(map(str, r.partition))}={r.product}{'*' if r.is_max else ''}]"
        for r in reports)
    print(f"  N={n}: {row}")
print("(* marks the maximal product: 9, 12, 18)\n")

print("Winners for larger N are built from 3s, patched with a 4 or a 2:")
for n in (10, 12, 20, 30):
    rep = max_product_partition(n)
    print(f"  N={n:2d}: {'+'.join(map(str, rep.partition))} = {rep.product}")
