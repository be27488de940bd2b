"""Braid action on measured multicurves of the punctured disk.

Multicurves on the k-punctured disk are encoded by their Dynnikov
coordinates ``(a_1, b_1, ..., a_{k-2}, b_{k-2})``; generators act by
piecewise-linear (max-plus) update rules. The action is exact on integer
vectors and positively homogeneous, so floating point iterates can be
renormalised freely while the logarithm of the scale is accumulated.

Every braid in the centre (powers of the full twist) acts trivially on
multicurves; the word problem therefore also checks the exponent sum.
"""

from __future__ import annotations

import enum
import math
import random
from dataclasses import dataclass
from typing import Sequence

from .braid import BraidWord, concat, full_twist, power
from .errors import DimensionMismatch, NoConvergence, ZeroSeed

DEFAULT_TOL = 1e-4
DEFAULT_MAX_ITER = 10_000
EXACT_LIMIT = 10**30


def _pos(x):
    return x if x > 0 else 0


def _neg(x):
    return x if x < 0 else 0


@dataclass(frozen=True)
class LamVector:
    """Dynnikov coordinates of a multicurve, stored as (a_i, b_i) pairs.

    ``log_scale`` is the logarithm of the factor divided out by
    renormalisation; the represented lamination is ``exp(log_scale) * coords``.
    """

    punctures: int
    coords: tuple
    log_scale: float = 0.0

    def __post_init__(self):
        if len(self.coords) != 2 * (self.punctures - 2):
            raise DimensionMismatch(
                f"{self.punctures} punctures need {2 * (self.punctures - 2)} "
                f"coordinates, got {len(self.coords)}"
            )
        object.__setattr__(self, "coords", tuple(self.coords))

    @property
    def a(self) -> tuple:
        return self.coords[0::2]

    @property
    def b(self) -> tuple:
        return self.coords[1::2]

    def is_zero(self) -> bool:
        return not any(self.coords)

    def norm1(self):
        return sum(abs(x) for x in self.coords)

    @classmethod
    def from_ab(cls, a: Sequence, b: Sequence, log_scale: float = 0.0) -> "LamVector":
        coords = [v for pair in zip(a, b) for v in pair]
        return cls(len(a) + 2, tuple(coords), log_scale)


def _sigma(a: list, b: list, i: int, k: int) -> None:
    """Apply the positive generator sigma_i in place (0-based a, b)."""
    if i == 1:
        bp = -a[0] + _pos(b[0])
        a[0] = b[0] - _pos(bp)
        b[0] = bp
    elif i == k - 1:
        j = k - 3
        bp = -a[j] + _neg(b[j])
        a[j] = b[j] - _neg(bp)
        b[j] = bp
    else:
        j = i - 2
        a0, b0, a1, b1 = a[j], b[j], a[j + 1], b[j + 1]
        c = a0 - a1 + _pos(b1) - _neg(b0)
        a[j] = a0 + _pos(b0) + _pos(_pos(b1) - c)
        b[j] = b1 - _pos(c)
        a[j + 1] = a1 + _neg(b1) + _neg(_neg(b0) + c)
        b[j + 1] = b0 + _pos(c)


def _apply_letters(letters: Sequence[int], a: list, b: list, k: int) -> None:
    for x in letters:
        if x > 0:
            _sigma(a, b, x, k)
        else:
            # sigma_i^-1 is sigma_i conjugated by the reflection a -> -a
            for j in range(len(a)):
                a[j] = -a[j]
            _sigma(a, b, -x, k)
            for j in range(len(a)):
                a[j] = -a[j]


def act(w: BraidWord, v: LamVector) -> LamVector:
    """Apply ``w`` letter by letter (leftmost letter first)."""
    if v.punctures != w.strands:
        raise DimensionMismatch(
            f"braid on {w.strands} strands cannot act on a {v.punctures}-punctured disk"
        )
    if v.punctures < 3:
        return v
    a, b = list(v.a), list(v.b)
    _apply_letters(w.letters, a, b, w.strands)
    return LamVector.from_ab(a, b, v.log_scale)


def canonical_seed(k: int) -> LamVector:
    """Curves around consecutive puncture pairs: a = 0, b = 1."""
    return LamVector.from_ab([0] * (k - 2), [1] * (k - 2))


def _test_vectors(k: int) -> list[LamVector]:
    dim = 2 * (k - 2)
    out = [canonical_seed(k)]
    for j in range(dim):
        for s in (1, -1):
            e = [0] * dim
            e[j] = s
            out.append(LamVector(k, tuple(e)))
    rng = random.Random(0x5EED + k)
    out.append(LamVector(k, tuple(rng.randint(-97, 97) or 1 for _ in range(dim))))
    return out


def acts_trivially(w: BraidWord) -> bool:
    """Whether ``w`` fixes the test multicurves (trivial modulo the centre)."""
    if w.strands < 3:
        return True
    return all(act(w, v) == v for v in _test_vectors(w.strands))


def is_trivial(w: BraidWord) -> bool:
    """Word problem: ``w`` equals the identity braid."""
    if w.strands < 3:
        return w.exponent_sum() == 0
    # central elements are full-twist powers with exponent sum t*k*(k-1)
    return w.exponent_sum() == 0 and acts_trivially(w)


def braid_equal(u: BraidWord, v: BraidWord) -> bool:
    return is_trivial(concat(u, power(v, -1)))


def is_periodic(w: BraidWord) -> bool:
    """Whether some power of ``w`` is a power of the full twist.

    A periodic braid on k strands has its k-th or (k-1)-th power equal to a
    full-twist power; the exponent is fixed by the exponent sum.
    """
    k = w.strands
    if k < 3:
        return True
    twist_sum = k * (k - 1)
    e = w.exponent_sum()
    for p in (k, k - 1):
        if (e * p) % twist_sum:
            continue
        t = e * p // twist_sum
        candidate = concat(power(w, p), power(full_twist(k), -t))
        if is_trivial(candidate):
            return True
    return False


class _Run:
    """Iterates of a seed under one braid, with the running log of the l1 norm."""

    def __init__(self, seed: LamVector, mode: str):
        self.exact = mode in ("exact", "auto")
        self.may_switch = mode == "auto"
        cast = int if self.exact else float
        self.a = [cast(x) for x in seed.a]
        self.b = [cast(x) for x in seed.b]
        self.start = (list(self.a), list(self.b)) if self.exact else None
        self.log_scale = 0.0
        self.logs = [math.log(seed.norm1())]
        self.returned = False

    def step(self, letters, k):
        _apply_letters(letters, self.a, self.b, k)
        if self.exact and self.start is not None:
            if self.a == self.start[0] and self.b == self.start[1]:
                self.returned = True
        if self.exact and self.may_switch:
            big = max(max(map(abs, self.a)), max(map(abs, self.b)))
            if big > EXACT_LIMIT:
                self.a = [float(x) for x in self.a]
                self.b = [float(x) for x in self.b]
                self.exact = False
        n1 = sum(map(abs, self.a)) + sum(map(abs, self.b))
        if n1 == 0:
            raise ZeroSeed("iterate collapsed to zero")
        if self.exact:
            self.logs.append(math.log(n1))
        else:
            self.a = [x / n1 for x in self.a]
            self.b = [x / n1 for x in self.b]
            self.log_scale += math.log(n1)
            self.logs.append(self.log_scale)


def _rate(logs: list, m: int) -> float:
    """Exponential rate from a second difference of log-norms.

    For norms behaving like C * m^d * exp(h m), the combination
    L(m) - 2 L(m/2) + L(m/4) equals h m / 4 exactly, so polynomial growth
    (reducible pieces, Dehn twists) cancels instead of decaying like 1/m.
    """
    q = m // 4
    return (logs[m] - 2 * logs[2 * q] + logs[q]) / q


def _entropy_from_seed(w, seed, tol, max_iter, mode, min_iter):
    k = w.strands
    if seed.is_zero():
        raise ZeroSeed("the zero vector carries no multicurve")
    run = _Run(seed, mode)
    history: dict[int, float] = {}
    previous = None
    est = 0.0
    for m in range(1, max_iter + 1):
        run.step(w.letters, k)
        if run.returned:
            # finite orbit: the seed grows at rate zero
            return 0.0, m, True
        if m < min_iter or m % 4:
            continue
        est = _rate(run.logs, m)
        history[m] = est
        # settled against both the previous estimate and the one at m/2
        older = history.get(m // 2)
        if previous is not None and older is not None:
            if abs(est - previous) < tol and abs(est - older) < tol:
                return max(est, 0.0), m, True
        previous = est
    return max(est, 0.0), max_iter, False


def entropy_seeds(k: int, count: int = 3) -> list[LamVector]:
    """The canonical seed followed by deterministic pseudorandom seeds."""
    seeds = [canonical_seed(k)]
    rng = random.Random(1729 * k)
    while len(seeds) < count:
        v = LamVector(k, tuple(rng.randint(-50, 50) for _ in range(2 * (k - 2))))
        if not v.is_zero():
            seeds.append(v)
    return seeds


@dataclass(frozen=True)
class EntropyResult:
    value: float
    iterations: int
    converged: bool
    per_seed: tuple[float, ...]


def entropy_details(
    w: BraidWord,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
    *,
    mode: str = "auto",
    seeds: Sequence[LamVector] | None = None,
    min_iter: int = 16,
) -> EntropyResult:
    """Entropy estimate with diagnostics; never raises on non-convergence.

    ``mode`` is ``"auto"`` (integers until coordinates pass 1e30, then
    renormalised floats), ``"exact"`` (integers throughout) or ``"float"``.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if mode not in ("auto", "exact", "float"):
        raise ValueError(f"unknown mode {mode!r}")
    k = w.strands
    if k < 3 or not w.letters:
        return EntropyResult(0.0, 0, True, ())
    seeds = list(seeds) if seeds is not None else entropy_seeds(k)
    results = [_entropy_from_seed(w, s, tol, max_iter, mode, min_iter) for s in seeds]
    values = tuple(r[0] for r in results)
    converged = [r for r in results if r[2]]
    pool = converged or results
    best = max(pool, key=lambda r: r[0])
    return EntropyResult(best[0], max(r[1] for r in results), bool(converged), values)


def entropy(
    w: BraidWord,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
    *,
    mode: str = "auto",
) -> float:
    """Topological entropy (log of the dilatation) of ``w``.

    Raises :class:`NoConvergence` carrying the last estimate when no seed
    settles within ``max_iter`` applications of ``w``.
    """
    res = entropy_details(w, tol, max_iter, mode=mode)
    if not res.converged:
        raise NoConvergence(
            f"entropy did not settle within {max_iter} iterations",
            estimate=res.value,
            iterations=res.iterations,
        )
    return res.value


class Verdict(str, enum.Enum):
    PERIODIC = "Periodic"
    PSEUDO_ANOSOV_LIKELY = "PseudoAnosovLikely"
    UNDETERMINED = "Undetermined"


@dataclass(frozen=True)
class NTReport:
    verdict: Verdict
    entropy_estimate: float
    iterations: int
    converged: bool

    def as_dict(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "entropy": self.entropy_estimate,
            "iterations": self.iterations,
            "converged": self.converged,
        }


def nt_classify(
    w: BraidWord, tol: float = DEFAULT_TOL, max_iter: int = DEFAULT_MAX_ITER
) -> NTReport:
    """Heuristic Nielsen-Thurston type.

    Periodicity is decided exactly. Otherwise a converged entropy above
    ``10 * tol`` is taken as evidence of a pseudo-Anosov component; reducible
    braids are not detected and fall under ``Undetermined``.
    """
    if is_periodic(w):
        return NTReport(Verdict.PERIODIC, 0.0, 0, True)
    res = entropy_details(w, tol, max_iter)
    if res.converged and res.value > 10 * tol:
        verdict = Verdict.PSEUDO_ANOSOV_LIKELY
    else:
        verdict = Verdict.UNDETERMINED
    return NTReport(verdict, res.value, res.iterations, res.converged)


__all__ = [
    "LamVector",
    "NTReport",
    "Verdict",
    "EntropyResult",
    "act",
    "acts_trivially",
    "braid_equal",
    "canonical_seed",
    "entropy",
    "entropy_details",
    "entropy_seeds",
    "is_periodic",
    "is_trivial",
    "nt_classify",
]
