"""Weight systems and plural representation.

A weight system turns a bit word a_m..a_1 into the value sum a_k * R_k.
Base-2 weights give every value exactly one word; slowly growing weights
(Fibonacci and friends) give some values several words and skip others
entirely. Both effects drive the codecs in this package.

Run: python demos/02_weight_systems.py
"""

from gpncodec import (
    WeightSystem,
    canonical_encode,
    combo_rank,
    combo_unrank,
    evaluate,
    max_value,
    representation_count,
    representations,
    weights,
)

systems = {
    "binary": WeightSystem.b_radix(2),
    "factorial": WeightSystem.factorial(),
    "fibonacci": WeightSystem.fibonacci(),
    "deformed [1,2]": WeightSystem.deformed_fibonacci([1, 2]),
}

print("First eight weights of each system:")
for name, ws in systems.items():
    print(f"  {name:14s} {weights(ws, 8)}")
print()

fib = systems["fibonacci"]
print("Every 4-bit word under fibonacci weights [1, 1, 2, 3]:")
for i in range(16):
    word = format(i, "04b")
    print(f"  {word} -> {evaluate(word, fib)}")
print(f"Max value at width 4: {max_value(fib, 4)}\n")

print("Values 0..7 and their full representation sets at width 4:")
for value in range(8):
    reps = sorted(representations(value, 4, fib))
    chosen = canonical_encode(value, 4, fib)
    print(f"  {value}: {reps}  canonical {chosen}  count {representation_count(value, 4, fib)}")
print("Values 1..6 are plural; 0 and 7 are unique. Width 3 cannot reach 5..7 at all:")
print(f"  representations(5, 3): {representations(5, 3, fib)}\n")

print("The binomial system ranks same-weight words lexicographically:")
for word in ("0011", "0101", "0110", "1001", "1010", "1100"):
    print(f"  {word} -> rank {combo_rank(word)}")
print(f"  combo_unrank(4, 2, 3) -> {combo_unrank(4, 2, 3)}")
