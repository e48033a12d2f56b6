"""Expanding multichannel transform over Fibonacci-type weights.

Where the core+flag rounds compress (codewords no longer than the symbol),
this transform expands: each N-bit chunk value is re-expressed as an M-bit
word of a slowly growing weight system, M >= N. Slow weight growth buys
plural representation, and the keyed policy picks among a value's words
with a per-chunk generator, so the same input encodes differently under
different keys while decoding stays choice-independent.
"""

from dataclasses import dataclass
from functools import lru_cache

from .errors import (
    BitAlignmentError,
    CorruptStreamError,
    InvalidChunkError,
    NotRepresentableError,
)
from .gpn import (
    WeightSystem,
    canonical_encode,
    evaluate,
    representation_count,
    representations,
)
from .prng import SplitMix64, splitmix64

__all__ = [
    "FIBONACCI",
    "FmaConfig",
    "FmaStream",
    "min_width",
    "fma_encode_chunk",
    "fma_decode_chunk",
    "fma_encode",
    "fma_decode",
    "representation_count",
]

FIBONACCI = WeightSystem.fibonacci()

_POLICIES = ("canonical", "keyed")


def min_width(n: int, ws: WeightSystem = FIBONACCI) -> int:
    """Smallest width whose maximum value covers every n-bit chunk."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    target = (1 << n) - 1
    m = 1
    while ws.max_value(m) < target:
        m += 1
    return m


@dataclass(frozen=True)
class FmaConfig:
    """Parameters of the expanding transform.

    target_width defaults to the minimal covering width; any larger width
    is valid and yields more representations per value. The keyed policy
    draws its per-chunk selector from seed and chunk index only, so chunks
    may be encoded in parallel without changing the output.
    """

    chunk_width: int
    target_width: int = 0
    weight_system: WeightSystem = FIBONACCI
    policy: str = "canonical"
    seed: int = 0

    def __post_init__(self):
        if self.chunk_width < 1:
            raise ValueError(f"chunk_width must be positive, got {self.chunk_width}")
        if self.policy not in _POLICIES:
            raise ValueError(f"policy must be one of {_POLICIES}, got {self.policy!r}")
        if self.target_width == 0:
            object.__setattr__(self, "target_width",
                               min_width(self.chunk_width, self.weight_system))
        if self.target_width < 1:
            raise ValueError(f"target_width must be positive, got {self.target_width}")
        if self.weight_system.max_value(self.target_width) < (1 << self.chunk_width) - 1:
            raise ValueError(
                f"width {self.target_width} cannot represent every "
                f"{self.chunk_width}-bit value")


@dataclass(frozen=True)
class FmaStream:
    """Concatenated fixed-width payload plus the true input length."""

    chunks_encoded: int
    payload: str
    original_bit_length: int


@lru_cache(maxsize=64)
def _representation_table(ws: WeightSystem, m: int, n: int) -> tuple[tuple[str, ...], ...]:
    """Sorted representation lists for every n-bit chunk value."""
    return tuple(tuple(sorted(representations(v, m, ws)))
                 for v in range(1 << n))


def _chunk_selector(seed: int, chunk_index: int) -> int:
    # per-chunk stream seeded with seed XOR splitmix64(chunk_index)
    return SplitMix64(seed ^ splitmix64(chunk_index)).next_u64()


def fma_encode_chunk(value: int, cfg: FmaConfig, chunk_index: int = 0) -> str:
    """Encode one chunk value as a target-width word."""
    if not 0 <= value < 1 << cfg.chunk_width:
        raise ValueError(
            f"value {value} outside [0, 2^{cfg.chunk_width})")
    if cfg.policy == "canonical":
        return canonical_encode(value, cfg.target_width, cfg.weight_system)
    reps = _representation_table(cfg.weight_system, cfg.target_width,
                                 cfg.chunk_width)[value]
    if not reps:
        raise NotRepresentableError(
            f"value {value} is a forbidden combination at width {cfg.target_width}")
    return reps[_chunk_selector(cfg.seed, chunk_index) % len(reps)]


def fma_decode_chunk(word: str, cfg: FmaConfig) -> int:
    """Value of one payload word, whichever representation was chosen."""
    if len(word) != cfg.target_width:
        raise InvalidChunkError(
            f"word width {len(word)}, expected {cfg.target_width}")
    value = evaluate(word, cfg.weight_system)
    if value >= 1 << cfg.chunk_width:
        raise InvalidChunkError(
            f"word value {value} cannot come from a {cfg.chunk_width}-bit chunk")
    return value


def fma_encode(bits: str, cfg: FmaConfig) -> FmaStream:
    """Encode a bit string chunk by chunk, zero-padding the tail chunk."""
    n = cfg.chunk_width
    padded = bits + "0" * (-len(bits) % n)
    words = [fma_encode_chunk(int(padded[i:i + n], 2), cfg, chunk_index=i // n)
             for i in range(0, len(padded), n)]
    return FmaStream(chunks_encoded=len(words),
                     payload="".join(words),
                     original_bit_length=len(bits))


def fma_decode(stream: FmaStream, cfg: FmaConfig) -> str:
    """Invert fma_encode, stripping the recorded padding."""
    n, m = cfg.chunk_width, cfg.target_width
    payload = stream.payload
    if len(payload) % m:
        raise BitAlignmentError(
            f"payload length {len(payload)} is not a multiple of {m}")
    chunks = [format(fma_decode_chunk(payload[i:i + m], cfg), f"0{n}b")
              for i in range(0, len(payload), m)]
    bits = "".join(chunks)
    original = stream.original_bit_length
    if not original <= len(bits) < original + n:
        raise CorruptStreamError(
            f"payload decodes to {len(bits)} bits, recorded length {original}")
    if bits[original:].strip("0"):
        raise CorruptStreamError("padding bits are not zero")
    return bits[:original]
