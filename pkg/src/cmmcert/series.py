"""Exact truncated q-series over big integers.

G(q) = 1 / ((q; q^4)_inf (-q^3; q^4)_inf) is expanded by applying one
in-place update per factor 1/(1 - sign q^m) to a dense coefficient list, so
no big-integer division is ever needed.
"""

from __future__ import annotations

import hashlib
import struct
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

CACHE_MAGIC = b"CMMQ"
CACHE_VERSION = 1


class OrderMismatch(ValueError):
    pass


class CacheError(OSError):
    """Cache file missing, malformed, or failing its content hash."""


@dataclass(frozen=True)
class QSeries:
    """Power series truncated after ``q**order``; coefficients are exact ints."""

    order: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("order must be non-negative")
        if len(self.coeffs) != self.order + 1:
            raise ValueError(f"expected {self.order + 1} coefficients, got {len(self.coeffs)}")

    @classmethod
    def from_list(cls, coeffs: Sequence[int]) -> QSeries:
        return cls(len(coeffs) - 1, tuple(int(c) for c in coeffs))

    @classmethod
    def one(cls, order: int) -> QSeries:
        return cls(order, (1,) + (0,) * order)

    def __getitem__(self, n: int) -> int:
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __mul__(self, other: QSeries) -> QSeries:
        return series_mul(self, other)

    def truncate(self, order: int) -> QSeries:
        if order > self.order:
            raise OrderMismatch(f"cannot extend order {self.order} to {order}")
        return QSeries(order, self.coeffs[: order + 1])


@dataclass(frozen=True)
class PochhammerFactor:
    """The product prod_{k>=0} (1 - sign q^(t k + r))."""

    r: int
    t: int
    sign: int = 1

    def __post_init__(self):
        if not 0 < self.r <= self.t:
            raise ValueError("need 0 < r <= t")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")

    def parts(self, order: int) -> range:
        return range(self.r, order + 1, self.t)


def _apply_inverse(c: list[int], f: PochhammerFactor) -> None:
    # multiply in place by 1/(1 - sign q^m) for every part m = tk + r
    n_max = len(c) - 1
    for m in f.parts(n_max):
        if f.sign == 1:
            for n in range(m, n_max + 1):
                c[n] += c[n - m]
        else:
            for n in range(m, n_max + 1):
                c[n] -= c[n - m]


def expand_inverse_pochhammer(f: PochhammerFactor, order: int) -> QSeries:
    if order < 0:
        raise ValueError("order must be non-negative")
    c = [1] + [0] * order
    _apply_inverse(c, f)
    return QSeries(order, tuple(c))


G_FACTORS = (PochhammerFactor(1, 4, 1), PochhammerFactor(3, 4, -1))


def expand_G(order: int) -> QSeries:
    """Coefficients a(0..order) of 1/(q, -q^3; q^4)_inf.

    Equal to the truncated product of the two inverse Pochhammer
    expansions; both factors are applied to a single buffer.
    """
    if order < 0:
        raise ValueError("order must be non-negative")
    c = [1] + [0] * order
    for f in G_FACTORS:
        _apply_inverse(c, f)
    return QSeries(order, tuple(c))


def _pack(coeffs: Sequence[int], bits: int) -> int:
    x = 0
    for a in reversed(coeffs):
        x = (x << bits) + a
    return x


def _unpack(x: int, bits: int, count: int) -> list[int]:
    mask = (1 << bits) - 1
    half = 1 << (bits - 1)
    out = []
    for _ in range(count):
        d = x & mask
        if d >= half:
            d -= 1 << bits
        out.append(d)
        x = (x - d) >> bits
    return out


def series_mul(a: QSeries, b: QSeries) -> QSeries:
    """Truncated Cauchy product via Kronecker substitution."""
    if a.order != b.order:
        raise OrderMismatch(f"orders differ: {a.order} vs {b.order}")
    n = a.order
    ma = max((abs(x) for x in a.coeffs), default=0)
    mb = max((abs(x) for x in b.coeffs), default=0)
    if ma == 0 or mb == 0:
        return QSeries(n, (0,) * (n + 1))
    # each product coefficient is bounded by (n+1) * ma * mb
    bits = ma.bit_length() + mb.bit_length() + (n + 1).bit_length() + 2
    prod = _pack(a.coeffs, bits) * _pack(b.coeffs, bits)
    return QSeries(n, tuple(_unpack(prod, bits, n + 1)))


def scan_nonnegative(s: QSeries) -> int | None:
    """Index of the first strictly negative coefficient, or None."""
    for i, c in enumerate(s.coeffs):
        if c < 0:
            return i
    return None


# ---------------------------------------------------------------------------
# coefficient cache: "CMMQ", u32 version, u64 order, then per coefficient a
# sign byte, u32 magnitude length and big-endian magnitude; a trailing
# SHA-256 of everything before it.

def encode_cache(s: QSeries) -> bytes:
    chunks = [CACHE_MAGIC, struct.pack("<IQ", CACHE_VERSION, s.order)]
    for c in s.coeffs:
        mag = abs(c)
        raw = mag.to_bytes((mag.bit_length() + 7) // 8, "big")
        chunks.append(struct.pack("<BI", 1 if c < 0 else 0, len(raw)))
        chunks.append(raw)
    body = b"".join(chunks)
    return body + hashlib.sha256(body).digest()


def decode_cache(data: bytes) -> QSeries:
    if len(data) < 4 + 12 + 32:
        raise CacheError("cache file truncated")
    body, digest = data[:-32], data[-32:]
    if hashlib.sha256(body).digest() != digest:
        raise CacheError("cache content hash mismatch")
    if body[:4] != CACHE_MAGIC:
        raise CacheError("bad cache magic")
    version, order = struct.unpack_from("<IQ", body, 4)
    if version != CACHE_VERSION:
        raise CacheError(f"unsupported cache version {version}")
    pos = 16
    coeffs = []
    try:
        for _ in range(order + 1):
            sign, length = struct.unpack_from("<BI", body, pos)
            pos += 5
            if pos + length > len(body):
                raise CacheError("coefficient runs past the end of the cache")
            mag = int.from_bytes(body[pos:pos + length], "big")
            pos += length
            coeffs.append(-mag if sign else mag)
    except struct.error as e:
        raise CacheError(f"malformed cache body: {e}") from e
    if pos != len(body):
        raise CacheError("trailing bytes in cache body")
    return QSeries(order, tuple(coeffs))


def write_cache(s: QSeries, path: str | Path) -> None:
    path = Path(path)
    tmp = path.with_suffix(path.suffix + ".tmp")
    tmp.write_bytes(encode_cache(s))
    tmp.replace(path)


def read_cache(path: str | Path) -> QSeries:
    try:
        data = Path(path).read_bytes()
    except OSError as e:
        raise CacheError(str(e)) from e
    return decode_cache(data)


def load_or_expand_G(order: int, cache_dir: str | Path | None) -> tuple[QSeries, str]:
    """G coefficients through ``order``, reusing a cache file when it is valid.

    Returns the series and one of "cache", "computed", "recomputed" (the
    last when a cache file existed but failed its integrity check).
    """
    if cache_dir is None:
        return expand_G(order), "computed"
    path = Path(cache_dir) / f"G_{order}.cmmq"
    status = "computed"
    if path.exists():
        try:
            s = read_cache(path)
            if s.order == order:
                return s, "cache"
        except CacheError:
            pass
        status = "recomputed"
    s = expand_G(order)
    Path(cache_dir).mkdir(parents=True, exist_ok=True)
    write_cache(s, path)
    return s, status
