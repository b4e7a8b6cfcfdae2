"""Lex-segment structure: blocks, the transform T(L), and depth certificates."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from . import hilbert as hs
from . import staircase as st


@dataclass(frozen=True)
class BlockProfile:
    """Generator counts per degree above the order.

    ``p[0]`` is |B_1| - 1 and ``p[i]`` is |B_(i+1)| for i >= 1, so the blocks
    run over degrees d, d+1, ..., d+s.
    """

    d: int
    p: tuple[int, ...]

    @property
    def s(self) -> int:
        return len(self.p) - 1

    @property
    def c(self) -> int:
        """Terminal coefficient: p_(s+1) when it breaks the monotone run, else 0."""
        if len(self.p) >= 2 and self.p[-1] < self.p[-2]:
            return self.p[-1]
        return 0

    @property
    def head(self) -> tuple[int, ...]:
        """p_1..p_s' with the terminal coefficient split off."""
        return self.p[:-1] if self.c else self.p

    def column_sequence(self) -> st.ColumnSequence:
        """Lex ideal with these block counts."""
        degrees = [self.d] * (self.p[0] + 1)
        for i, cnt in enumerate(self.p[1:], start=1):
            degrees += [self.d + i] * cnt
        if len(degrees) != self.d + 1:
            raise ValueError(f"block counts {self.p} do not sum to the order {self.d}")
        return st.ColumnSequence(deg - self.d + i for i, deg in enumerate(degrees))


def blocks(a: Sequence[int]) -> BlockProfile:
    if not st.is_contracted_monomial(a):
        raise ValueError(f"{st.ColumnSequence(a)} is not contracted; blocks undefined")
    o = st.order(a)
    degs = [u + v for u, v in st.minimal_generators(a)]
    top = max(degs) - o
    counts = [0] * (top + 1)
    for g in degs:
        counts[g - o] += 1
    counts[0] -= 1
    return BlockProfile(o, tuple(counts))


def transform(a: Sequence[int]) -> Optional[st.ColumnSequence]:
    """T(L) in k[z, y], returned with z in the x-slot; None for the unit ideal."""
    if not st.is_lex(a):
        raise ValueError(f"{st.ColumnSequence(a)} is not a lex-segment ideal")
    prof = blocks(a)
    d = prof.d
    if prof.p[0] == d:
        return None
    gens = [(d - prof.p[0], 0)]
    partial = prof.p[0]
    for i, cnt in enumerate(prof.p[1:], start=2):
        partial += cnt
        if cnt:
            gens.append((d - partial, i - 1))
    return st.from_generators(gens)


def transform_by_substitution(a: Sequence[int]) -> Optional[st.ColumnSequence]:
    """x -> yz then divide by y^d; generator-wise, no block bookkeeping."""
    d = len(a) - 1
    gens = [(d - i, a[i] - i) for i in range(d + 1)]
    if any(v == 0 and u == 0 for u, v in gens):
        return None
    return st.from_generators(gens)


def transform_is_lex(profile: BlockProfile) -> str:
    tail = profile.p[1:]
    in_z = all(p <= 1 for p in tail)
    in_y = all(p != 0 for p in tail)
    if in_z and in_y:
        return "both"
    if in_z:
        return "lex-in-z"
    if in_y:
        return "lex-in-y"
    return "neither"


def reduction_equality(a: Sequence[int], j: Iterable[tuple[int, int]]) -> bool:
    """L^2 == J L for the monomial ideal J generated by ``j``."""
    gens = list(j)
    own = set(st.minimal_generators(a))
    stray = [g for g in gens if g not in own]
    if stray:
        raise ValueError(f"{stray} are not minimal generators of {st.ColumnSequence(a)}")
    jseq = st.from_generators(gens)
    return st.power(a, 2) == st.min_plus_product(jseq, a)


def reduction_depth_witness(a: Sequence[int]) -> Optional[int]:
    """Some i with L^2 = (x^d, x^(d-i) y^(a_i), y^(a_d)) L, if any."""
    d = len(a) - 1
    sq = st.power(a, 2)
    for i in range(d + 1):
        j = st.from_generators([(d, 0), (d - i, a[i]), (0, a[d])])
        if st.min_plus_product(j, a) == sq:
            return i
    return None


def reduction_one_condition(a: Sequence[int]) -> bool:
    b = st.ColumnSequence(a).b
    return all(x >= y for x, y in zip(b[1:], b[2:]))


def monotone_blocks_condition(profile: BlockProfile) -> bool:
    tail = profile.p[1:]
    if not tail:
        return True
    inc = tail[0] > 0 and all(x <= y for x, y in zip(tail, tail[1:]))
    dec = all(x >= y for x, y in zip(tail, tail[1:]))
    return inc or dec


# ------------------------------------------------------------ Ratliff-Rush


@dataclass(frozen=True)
class RatliffRush:
    closure: st.ColumnSequence
    closed: bool
    stable: bool
    k: int  # colon index that first exceeded the ideal, or the last one tried


def ratliff_rush(a: Sequence[int], kmax: int = 6) -> RatliffRush:
    """Union of (I^(k+1) : I^k) for k <= kmax."""
    if kmax < 1:
        raise ValueError("kmax must be >= 1")
    a = st.ColumnSequence(a)
    union = a
    prev = None
    first_k = None
    powk = a
    for k in range(1, kmax + 1):
        nxt = st.min_plus_product(powk, a)
        union = st.ideal_sum(union, st.colon(nxt, powk))
        if first_k is None and union != a:
            first_k = k
        if prev is not None and union == prev:
            return RatliffRush(union, union == a, True, first_k or k)
        prev = union
        powk = nxt
    return RatliffRush(union, union == a, False, first_k or kmax)


# ------------------------------------------------------------- depth verdict


@dataclass(frozen=True)
class DepthVerdict:
    depth: int
    certainty: str  # "exact" | "lower-bound" | "heuristic"
    certificate: str
    window: Optional[dict] = None

    def to_dict(self) -> dict:
        return asdict(self)


MAX_TRANSFORM_DEPTH = 10


def depth_classify(a: Sequence[int], window: int = 6, power_probe: int = 4) -> DepthVerdict:
    return _classify(tuple(a), window, power_probe, 0)


@lru_cache(maxsize=65536)
def _classify(a: tuple, kmax: int, probe: int, level: int) -> DepthVerdict:
    win = {"kmax": kmax, "power_probe": probe}
    try:
        series = hs.hilbert_series(a)
    except hs.StabilizationError:
        series = None
    if series is not None and series.is_cm():
        return DepthVerdict(2, "exact", "short h-vector")
    certainty = "exact" if series is not None else "lower-bound"

    cert = _positive_depth_certificate(a, kmax, probe, level)
    if isinstance(cert, DepthVerdict):
        return cert
    if cert is not None:
        return DepthVerdict(1, certainty, cert)

    for n in range(1, probe + 1):
        rr = ratliff_rush(st.power(a, n), kmax)
        if not rr.closed:
            return DepthVerdict(0, "exact", f"ratliff-rush n={n} not closed (k={rr.k})", win)
    return DepthVerdict(1, "heuristic", "ratliff-rush closed", win)


def _positive_depth_certificate(a: tuple, kmax: int, probe: int, level: int):
    for cand, tag in ((a, ""), (tuple(st.transpose(a)), " (transposed)")):
        if not st.is_lex(cand):
            continue
        if reduction_one_condition(cand):
            d = len(cand) - 1
            if not reduction_equality(cand, {(d, 0), (d - 1, cand[1]), (0, cand[d])}):
                raise AssertionError(f"{cand} has b_2 >= ... >= b_d but L^2 != JL")
            return "reduction-one" + tag
        i = reduction_depth_witness(cand)
        if i is not None:
            return f"reduction-depth i={i}" + tag
        if monotone_blocks_condition(blocks(cand)):
            raise AssertionError(f"block profile of {cand} forces CM but the h-vector is longer")
        if level < MAX_TRANSFORM_DEPTH:
            t = transform(cand)
            if t is None:
                continue
            kind = transform_is_lex(blocks(cand))
            if kind == "neither":
                continue
            inner = _classify(tuple(t), kmax, probe, level + 1)
            if inner.depth == 2 and inner.certainty == "exact":
                raise AssertionError(f"T({cand}) is CM but {cand} is not")
            if inner.certainty == "exact" or inner.depth == 0:
                return DepthVerdict(
                    inner.depth,
                    inner.certainty,
                    f"transform-recursion{tag}/{inner.certificate}",
                    inner.window,
                )
    return None
