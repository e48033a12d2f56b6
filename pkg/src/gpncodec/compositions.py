"""Decompositions of an integer into positive summands.

A *composition* is an ordered tuple of positive parts, a *partition* the
order-free version (kept nonincreasing). The product of the parts is what
ranks a decomposition here: the partition of N with the largest part
product identifies the most effective way to split N objects into ordered
subsets, since the split describes ``product(parts)`` distinct states.
"""

from dataclasses import dataclass
from math import prod

Composition = tuple[int, ...]
Partition = tuple[int, ...]


@dataclass(frozen=True)
class ProductReport:
    """A partition together with its part product and a max marker."""

    partition: Partition
    product: int
    is_max: bool


def _compositions(n: int, parts: int):
    if parts == 1:
        yield (n,)
        return
    for first in range(1, n - parts + 2):
        for rest in _compositions(n - first, parts - 1):
            yield (first,) + rest


def enumerate_compositions(n: int, parts: int) -> list[Composition]:
    """All ordered tuples of `parts` positive integers summing to `n`.

    Lexicographic order; the count is C(n-1, parts-1).
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if parts < 1 or parts > n:
        raise ValueError(f"parts must be in [1, {n}], got {parts}")
    return list(_compositions(n, parts))


def _partitions(n: int, max_part: int):
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of `n`, parts nonincreasing, in reverse-lexicographic
    order: (n,) first, (1,)*n last."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return list(_partitions(n, n))


def _multi_part_reports(n: int) -> list[ProductReport]:
    """Reports for the partitions of `n` with at least two parts.

    Ordered by part count ascending, then reverse-lexicographic descending
    within a count, which is the order the product table is read in.
    Exactly one report carries is_max; ties go to the fewest parts, then
    to the reverse-lexicographically largest partition.
    """
    parts = [p for p in enumerate_partitions(n) if len(p) >= 2]
    if not parts:
        return []
    best = max(parts, key=lambda p: (prod(p), -len(p), p))
    ordered = sorted(parts, key=lambda p: (len(p), tuple(-x for x in p)))
    return [ProductReport(p, prod(p), p == best) for p in ordered]


def max_product_partition(n: int) -> ProductReport:
    """The multi-part partition of `n` whose part product is maximal."""
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    for report in _multi_part_reports(n):
        if report.is_max:
            return report
    raise AssertionError("unreachable: n >= 2 always has a 2-part split")


def product_table(n_max: int) -> dict[int, list[ProductReport]]:
    """Per-N product reports for N = 1..n_max.

    Single-part partitions are omitted, so the group for N=1 is empty and
    the group for N has p(N) - 1 entries.
    """
    if n_max < 1:
        raise ValueError(f"n_max must be positive, got {n_max}")
    return {n: _multi_part_reports(n) for n in range(1, n_max + 1)}
