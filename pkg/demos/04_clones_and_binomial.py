"""Clone codebooks and the binomial split.

Clones free the class sizes: any M_1..M_N with sum 2^N and M_K <= 2^K
works. The binomial codebook instead groups symbols by popcount, with
C(N, K) symbols per class; singleton classes emit no core bits at all,
so at width 1 the whole input moves into the flag channel.

Run: python demos/04_clones_and_binomial.py
"""

from gpncodec import (
    build_binomial_codebook,
    build_clone_codebook,
    inverse_transform,
    transform,
)

print("Clone with class sizes [1, 3] at width 2:")
clone = build_clone_codebook(2, [1, 3], seed=5)
for sym, (code, k) in sorted(clone.encode_map.items()):
    print(f"  {sym} -> {code}")
print()

print("Binomial codebook at width 4 (class = popcount, code = rank):")
binom = build_binomial_codebook(4)
for sym, (code, k) in sorted(binom.encode_map.items()):
    print(f"  {sym} -> {code or '(nothing)':>8s}  class {k}")
sizes = binom.multiplicities
print(f"Class sizes {sizes} sum to {sum(sizes.values())} = 2^4\n")

bits = "1100101001110001"
out = transform(bits, binom, rounds=2)
print(f"Two binomial rounds over {bits}:")
print(f"  flags per round: {out.flags}")
print(f"  final core:      {out.core!r}")
print(f"  recovered:       {inverse_transform(out, binom)}\n")

tiny = build_binomial_codebook(1)
out = transform("0110", tiny, rounds=5)
print("Width-1 binomial moves everything into the flags and stops early:")
print(f"  rounds executed: {out.rounds_executed}")
print(f"  core:  {out.core!r}")
print(f"  flags: {out.flags[0]}")
print(f"  recovered: {inverse_transform(out, tiny)}")
