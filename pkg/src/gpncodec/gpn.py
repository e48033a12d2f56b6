"""Generalized positional numeration over the binary digit alphabet.

A weight system fixes a sequence of positive weights R_1, R_2, ... and a
word ``a_m ... a_2 a_1`` of bits then denotes the value ``sum a_k * R_k``.
Word strings are written highest index first, i.e. the rightmost character
is a_1 and carries weight R_1; for the base-2 radix that coincides with
ordinary binary notation.

Unlike base-b positions, general weights make the numeral map non-bijective
at a fixed width: some values gain several words (plural representation),
others none at all (forbidden combinations). ``representations`` enumerates
the full preimage of a value, which is what the expanding multichannel
transform keys its diffusion on.

The binomial (combinadic) system does not have fixed per-position weights;
its numerical function is ``combo_rank`` / ``combo_unrank`` at the bottom of
this module.
"""

import math
import threading

from .errors import NotRepresentableError

_ENUM_WIDTH_LIMIT = 64


class WeightSystem:
    """A rule generating the weights R_1..R_m, with a memoized cache.

    Construct via the factory classmethods. Instances are immutable value
    objects; the weight cache grows on demand and is swapped in whole so
    concurrent readers never observe a partially built list.
    """

    _KINDS = ("b_radix", "factorial", "fibonacci", "deformed_fibonacci", "binomial_class")

    def __init__(self, kind: str, *, b: int = 0, deformation: tuple[int, ...] = (),
                 n: int = 0, k: int = 0):
        if kind not in self._KINDS:
            raise ValueError(f"unknown weight system kind {kind!r}")
        if kind == "b_radix" and b < 2:
            raise ValueError(f"radix base must be >= 2, got {b}")
        if kind == "deformed_fibonacci":
            if not deformation:
                raise ValueError("deformation list must be nonempty")
            if any(c < 1 for c in deformation):
                raise ValueError(f"deformation coefficients must be >= 1, got {deformation}")
        if kind == "binomial_class" and not 0 <= k <= n:
            raise ValueError(f"binomial class needs 0 <= k <= n, got n={n} k={k}")
        self.kind = kind
        self.b = b
        self.deformation = tuple(deformation)
        self.n = n
        self.k = k
        self._weights: list[int] = []
        self._lock = threading.Lock()

    @classmethod
    def b_radix(cls, b: int) -> "WeightSystem":
        """Weights b^(k-1); b=2 is ordinary binary."""
        return cls("b_radix", b=b)

    @classmethod
    def factorial(cls) -> "WeightSystem":
        """Weights k!."""
        return cls("factorial")

    @classmethod
    def fibonacci(cls) -> "WeightSystem":
        """Weights F(k) with F(1) = F(2) = 1."""
        return cls("fibonacci")

    @classmethod
    def deformed_fibonacci(cls, coefficients) -> "WeightSystem":
        """Weights from R_k = sum_i c_i * R_{k-i}, seeded R_1 = 1, R_j = 0
        for j <= 0. Coefficients (1, 1) reproduce the Fibonacci weights."""
        return cls("deformed_fibonacci", deformation=tuple(coefficients))

    @classmethod
    def binomial_class(cls, n: int, k: int) -> "WeightSystem":
        """The class of n-bit words of weight k, ranked combinadically.

        This system has no fixed positional weights; use combo_rank and
        combo_unrank for its numerical function.
        """
        return cls("binomial_class", n=n, k=k)

    def _key(self):
        return (self.kind, self.b, self.deformation, self.n, self.k)

    def __eq__(self, other):
        return isinstance(other, WeightSystem) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        if self.kind == "b_radix":
            return f"WeightSystem.b_radix({self.b})"
        if self.kind == "deformed_fibonacci":
            return f"WeightSystem.deformed_fibonacci({list(self.deformation)})"
        if self.kind == "binomial_class":
            return f"WeightSystem.binomial_class({self.n}, {self.k})"
        return f"WeightSystem.{self.kind}()"

    def _extend(self, cur: list[int], upto: int) -> None:
        while len(cur) < upto:
            pos = len(cur) + 1
            if self.kind == "b_radix":
                cur.append(self.b ** (pos - 1))
            elif self.kind == "factorial":
                cur.append(math.factorial(pos))
            elif self.kind == "fibonacci":
                cur.append(1 if pos <= 2 else cur[-1] + cur[-2])
            else:
                if pos == 1:
                    cur.append(1)
                else:
                    acc = 0
                    for i, c in enumerate(self.deformation, start=1):
                        if pos - i >= 1:
                            acc += c * cur[pos - i - 1]
                    cur.append(acc)

    def weights(self, m: int) -> list[int]:
        """The weights R_1..R_m as a fresh list."""
        if m < 1:
            raise ValueError(f"m must be positive, got {m}")
        if self.kind == "binomial_class":
            raise ValueError("binomial_class has no positional weights; "
                             "use combo_rank/combo_unrank")
        if len(self._weights) < m:
            with self._lock:
                cur = list(self._weights)
                self._extend(cur, m)
                self._weights = cur
        return self._weights[:m]

    def max_value(self, width: int) -> int:
        """Largest representable value at `width`: the all-ones word."""
        return sum(self.weights(width))


def weights(ws: WeightSystem, m: int) -> list[int]:
    return ws.weights(m)


def _check_word(word: str) -> None:
    if not word:
        raise ValueError("word must be nonempty")
    if word.strip("01"):
        raise ValueError(f"word must contain only '0'/'1', got {word!r}")


def evaluate(word: str, ws: WeightSystem) -> int:
    """Numerical value of `word`: sum of the weights at its one-bits."""
    _check_word(word)
    w = ws.weights(len(word))
    return sum(wt for wt, ch in zip(w, reversed(word)) if ch == "1")


def max_value(ws: WeightSystem, width: int) -> int:
    return ws.max_value(width)


def representations(value: int, width: int, ws: WeightSystem) -> set[str]:
    """Every width-bit word whose value is `value`; empty if forbidden.

    Depth-first over positions from the highest weight down, pruned by the
    running prefix-sum bound, so cost tracks the size of the result rather
    than 2**width. Width is capped at 64.
    """
    if value < 0:
        raise ValueError(f"value must be nonnegative, got {value}")
    if width < 1:
        raise ValueError(f"width must be positive, got {width}")
    if width > _ENUM_WIDTH_LIMIT:
        raise ValueError(f"width {width} above enumeration limit {_ENUM_WIDTH_LIMIT}")
    w = ws.weights(width)
    reach = [0] * (width + 1)  # reach[k] = R_1 + ... + R_k
    for k in range(1, width + 1):
        reach[k] = reach[k - 1] + w[k - 1]

    found: set[str] = set()
    acc: list[str] = []

    def descend(k: int, remaining: int) -> None:
        if remaining < 0 or remaining > reach[k]:
            return
        if k == 0:
            found.add("".join(acc))
            return
        acc.append("1")
        descend(k - 1, remaining - w[k - 1])
        acc.pop()
        acc.append("0")
        descend(k - 1, remaining)
        acc.pop()

    descend(width, value)
    return found


def representation_count(value: int, width: int, ws: WeightSystem) -> int:
    """|representations(value, width, ws)| without materializing the set."""
    if value < 0:
        raise ValueError(f"value must be nonnegative, got {value}")
    if width < 1:
        raise ValueError(f"width must be positive, got {width}")
    if width > _ENUM_WIDTH_LIMIT:
        raise ValueError(f"width {width} above enumeration limit {_ENUM_WIDTH_LIMIT}")
    w = ws.weights(width)
    reach = [0] * (width + 1)
    for k in range(1, width + 1):
        reach[k] = reach[k - 1] + w[k - 1]

    memo: dict[tuple[int, int], int] = {}

    def count(k: int, remaining: int) -> int:
        if remaining < 0 or remaining > reach[k]:
            return 0
        if k == 0:
            return 1
        key = (k, remaining)
        hit = memo.get(key)
        if hit is None:
            hit = count(k - 1, remaining - w[k - 1]) + count(k - 1, remaining)
            memo[key] = hit
        return hit

    return count(width, value)


def canonical_encode(value: int, width: int, ws: WeightSystem) -> str:
    """Deterministic representative among the representations of `value`.

    Greedy highest-weight-first; when the greedy scan strands a remainder
    the lexicographically largest representation is used instead. Raises
    NotRepresentableError when no representation exists at this width.
    """
    if value < 0:
        raise ValueError(f"value must be nonnegative, got {value}")
    if width < 1:
        raise ValueError(f"width must be positive, got {width}")
    w = ws.weights(width)
    if value > sum(w):
        raise NotRepresentableError(
            f"value {value} exceeds max {sum(w)} at width {width}")
    bits = []
    remaining = value
    for k in range(width, 0, -1):
        if w[k - 1] <= remaining:
            bits.append("1")
            remaining -= w[k - 1]
        else:
            bits.append("0")
    if remaining == 0:
        return "".join(bits)
    candidates = representations(value, width, ws)
    if not candidates:
        raise NotRepresentableError(
            f"value {value} is a forbidden combination at width {width}")
    return max(candidates)


def combo_rank(word: str) -> int:
    """Lexicographic rank of `word` among equal-width words of its weight.

    With one-bits at positions p_1 < ... < p_K (position 0 = rightmost
    character), the rank is sum_i C(p_i, i). The all-low word 0..011..1
    ranks 0 and the all-high word ranks C(n, K) - 1.
    """
    _check_word(word)
    rank = 0
    ones = 0
    for pos, ch in enumerate(reversed(word)):
        if ch == "1":
            ones += 1
            rank += math.comb(pos, ones)
    return rank


def combo_unrank(n: int, k: int, rank: int) -> str:
    """Inverse of combo_rank: the rank-th weight-k word of width n."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if not 0 <= k <= n:
        raise ValueError(f"k must be in [0, {n}], got {k}")
    if not 0 <= rank < math.comb(n, k):
        raise ValueError(f"rank must be in [0, {math.comb(n, k)}), got {rank}")
    bits = ["0"] * n
    remaining = rank
    pos = n - 1
    for i in range(k, 0, -1):
        while math.comb(pos, i) > remaining:
            pos -= 1
        bits[n - 1 - pos] = "1"
        remaining -= math.comb(pos, i)
        pos -= 1
    return "".join(bits)
