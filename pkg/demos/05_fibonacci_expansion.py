"""The expanding transform: N-bit chunks to M-bit Fibonacci words.

Where the core+flag codecs shorten symbols, this one widens them, buying
a choice among plural representations per chunk. The keyed policy spends
that choice on seed-dependent diffusion: same input, different payloads,
one decode.

Run: python demos/05_fibonacci_expansion.py
"""

from gpncodec import FmaConfig, fma_decode, fma_encode, min_width
from gpncodec.fma import FIBONACCI, fma_encode_chunk, representation_count

print("Smallest covering width per chunk width:")
for n in (1, 2, 3, 4, 8, 16):
    print(f"  {n:2d} bits -> {min_width(n, FIBONACCI):2d} fibonacci digits")
print()

cfg = FmaConfig(chunk_width=3, target_width=4)
print("Choice per 3-bit value at width 4:")
for value in range(8):
    print(f"  {value}: {representation_count(value, 4, FIBONACCI)} representation(s),"
          f" canonical {fma_encode_chunk(value, cfg)}")
print()

bits = "101110010011"
for seed in (1, 2, 3):
    keyed = FmaConfig(chunk_width=3, target_width=4, policy="keyed", seed=seed)
    stream = fma_encode(bits, keyed)
    print(f"seed {seed}: payload {stream.payload}  "
          f"decodes to {fma_decode(stream, keyed)}")
print(f"(input was {bits}; every payload is 4/3 the length)\n")

wide = FmaConfig(chunk_width=3, target_width=7, policy="keyed", seed=9)
print(f"A wider target ({wide.target_width} digits) multiplies the choice:")
for value in range(8):
    print(f"  {value}: {representation_count(value, 7, FIBONACCI)} representations")
stream = fma_encode(bits, wide)
assert fma_decode(stream, wide) == bits
print(f"payload {stream.payload} still decodes to the input exactly")
