"""Homology of the double branched cover of a plat.

The 2n-punctured disk is double covered by a surface whose first homology
has the arc basis e_1..e_{2n-1} (e_i lifts the arc from puncture i to i+1)
with skew pairing <e_i, e_{i+1}> = 1. A half twist lifts to the Dehn twist
x -> x + <x, e_i> e_i, which is the reduced Burau matrix at t = -1. The
pairing has a one-dimensional radical spanned by e_1 + e_3 + ... + e_{2n-1};
dividing it out gives the closed genus n-1 Heegaard surface of Y(K).

Standard shadows (arcs 2i-1 to 2i) lift to the odd basis vectors. Their
images under the braid are the curves bounding disks on the other side,
so H_1(Y(K)) is presented by the pairings <alpha_i, beta_j>.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import intlinalg as la
from .braid import BraidWord, canonical_projection
from .errors import NonCanonicalClass, NotAKnot, NotFourStrands
from .plat import is_knot


def skew_form(dim: int) -> list[list[int]]:
    """Pairing matrix J with J[i][i+1] = 1 and J[i+1][i] = -1."""
    j = [[0] * dim for _ in range(dim)]
    for i in range(dim - 1):
        j[i][i + 1] = 1
        j[i + 1][i] = -1
    return j


def generator_matrix(i: int, strands: int, sign: int = 1) -> list[list[int]]:
    """Matrix of sigma_i^sign on the arc basis (columns are images)."""
    dim = strands - 1
    m = la.identity(dim)
    c = i - 1
    # image of e_j is e_j + sign * <e_j, e_i> e_i; only the neighbours pair
    if c - 1 >= 0:
        m[c][c - 1] = sign
    if c + 1 < dim:
        m[c][c + 1] = -sign
    return m


def burau_neg1(w: BraidWord) -> list[list[int]]:
    """Integral reduced Burau matrix at t = -1; M(ab) = M(a) M(b)."""
    dim = w.strands - 1
    m = la.identity(dim)
    for x in w.letters:
        g = generator_matrix(abs(x), w.strands, 1 if x > 0 else -1)
        m = la.matmul(m, g)
    return m


def radical_vector(strands: int) -> list[int]:
    return [1 if i % 2 == 0 else 0 for i in range(strands - 1)]


def _project(v: list[int]) -> list[int]:
    """Arc-basis vector to quotient coordinates on e_1..e_{2n-2}."""
    out = list(v[:-1])
    last = v[-1]
    if last:
        for i in range(0, len(out), 2):
            out[i] -= last
    return out


def quotient_form(strands: int) -> list[list[int]]:
    return skew_form(strands - 2)


def symplectic_lift(w: BraidWord) -> list[list[int]]:
    """Action on H_1 of the closed surface, basis images of e_1..e_{2n-2}."""
    if w.strands % 2:
        raise ValueError("the closed lift needs an even number of punctures")
    m = burau_neg1(w)
    dim = w.strands - 2
    cols = []
    for j in range(dim):
        col = [m[i][j] for i in range(dim + 1)]
        cols.append(_project(col))
    return la.transpose(cols)


def pairing(u, v, form) -> int:
    return sum(u[i] * form[i][j] * v[j] for i in range(len(u)) for j in range(len(v)) if form[i][j])


def alpha_classes(strands: int) -> list[list[int]]:
    """Lifts of the standard shadows, in quotient coordinates."""
    n = strands // 2
    dim = strands - 2
    out = []
    for i in range(n - 1):
        v = [0] * dim
        v[2 * i] = 1
        out.append(v)
    out.append(_project([1 if i == strands - 2 else 0 for i in range(strands - 1)]))
    return out


def lift_shadow_classes(w: BraidWord) -> tuple[list[list[int]], list[list[int]]]:
    alphas = alpha_classes(w.strands)
    s = symplectic_lift(w)
    return alphas, [la.matvec(s, a) for a in alphas]


def h1_presentation(w: BraidWord) -> list[list[int]]:
    """Square matrix <alpha_i, beta_j> over the first n-1 shadows."""
    alphas, betas = lift_shadow_classes(w)
    form = quotient_form(w.strands)
    g = w.strands // 2 - 1
    return [[pairing(alphas[i], betas[j], form) for j in range(g)] for i in range(g)]


def h1_order(w: BraidWord) -> int:
    """|H_1(Y)|, the link determinant; 0 when H_1 is infinite."""
    return abs(la.det(h1_presentation(w)))


def h1_invariants(w: BraidWord) -> list[int]:
    """Invariant factors of H_1(Y); 0 entries are free summands, 1s dropped."""
    return [d for d in la.invariant_factors(h1_presentation(w)) if d != 1]


@dataclass(frozen=True)
class CoverData:
    burau_neg1: list
    symplectic: list
    alpha_classes: list
    beta_classes: list
    h1_presentation: list
    h1_order: int
    h1_invariants: list

    def as_dict(self) -> dict:
        return {
            "burau_neg1": self.burau_neg1,
            "symplectic": self.symplectic,
            "alpha_classes": self.alpha_classes,
            "beta_classes": self.beta_classes,
            "h1_presentation": self.h1_presentation,
            "h1_order": self.h1_order,
            "h1_invariants": self.h1_invariants,
        }


def cover_data(w: BraidWord) -> CoverData:
    alphas, betas = lift_shadow_classes(w)
    pres = h1_presentation(w)
    return CoverData(
        burau_neg1=burau_neg1(w),
        symplectic=symplectic_lift(w),
        alpha_classes=alphas,
        beta_classes=betas,
        h1_presentation=pres,
        h1_order=abs(la.det(pres)),
        h1_invariants=[d for d in la.invariant_factors(pres) if d != 1],
    )


def bottom_left_entry(w: BraidWord) -> int:
    """For B_4: the coefficient of e_2 in the image of alpha = e_1.

    This is the pairing <alpha, beta> of the two compressing curves on the
    genus one splitting torus; it is 3 for the trefoil plat s2^3.
    """
    if w.strands != 4:
        raise NotFourStrands(f"defined on B_4 plats, got B_{w.strands}")
    return symplectic_lift(w)[1][0]


def torus_slope(w: BraidWord) -> tuple[int, int]:
    """(p, q) of the lifted upper compressing curve, with alpha = (0, 1)."""
    s = symplectic_lift(w) if w.strands == 4 else None
    if s is None:
        raise NotFourStrands(f"defined on B_4 plats, got B_{w.strands}")
    return s[1][0], s[0][0]


def is_unknot_2bridge(w: BraidWord) -> bool:
    """Recognise the unknot among 2-bridge knot plats.

    The genus one splitting has Y = S^3 exactly when the two compressing
    curves meet once, i.e. the designated entry is +-1; an entry of 0 means
    the curves coincide and Y = S^1 x S^2, which no knot produces.
    """
    if w.strands != 4:
        raise NotFourStrands(f"defined on B_4 plats, got B_{w.strands}")
    if not is_knot(w):
        raise NotAKnot("the plat closure has more than one component")
    return abs(bottom_left_entry(w)) == 1


@dataclass(frozen=True)
class PunctureClass:
    """Winding numbers of a curve around each puncture (1-based labels)."""

    winding: tuple[int, ...]

    @classmethod
    def around(cls, punctures, total: int) -> "PunctureClass":
        s = set(punctures)
        return cls(tuple(1 if j in s else 0 for j in range(1, total + 1)))

    def is_canonical(self) -> bool:
        return all(x in (0, 1) for x in self.winding) and sum(self.winding) % 2 == 0

    def enclosed(self) -> frozenset[int]:
        return frozenset(j for j, x in enumerate(self.winding, start=1) if x)


def _bridge_pairs(side: str, w: BraidWord) -> list[tuple[int, int]]:
    n = w.strands // 2
    pairs = [(2 * i - 1, 2 * i) for i in range(1, n + 1)]
    if side == "lower":
        return pairs
    if side == "upper":
        p = canonical_projection(w)
        return [(p(u), p(v)) for u, v in pairs]
    raise ValueError(f"side must be 'lower' or 'upper', got {side!r}")


def disk_bound_test(c: PunctureClass, side: str, w: BraidWord) -> bool:
    """Whether ``c`` is a sum of bridge-pair curves on ``side``.

    A curve bounds a disk in the tangle complement exactly when its class is
    a combination of the n curves enclosing one bridge's endpoints.
    """
    if len(c.winding) != w.strands or not c.is_canonical():
        raise NonCanonicalClass(
            f"expected a 0/1 winding vector of even weight over {w.strands} punctures"
        )
    x = c.winding
    return all(x[u - 1] == x[v - 1] for u, v in _bridge_pairs(side, w))


def arc_disk_test(
    endpoints: tuple[int, int],
    side: str,
    w: BraidWord,
    enclosed=(),
    *,
    transport: bool = False,
) -> bool:
    """Disk test for an arc via the boundary of its annular neighbourhood.

    With ``transport`` the arc (and enclosed punctures) are first carried by
    the braid permutation, as for shadows of the upper tangle.
    """
    pts = set(endpoints) | set(enclosed)
    if transport:
        p = canonical_projection(w)
        pts = {p(j) for j in pts}
    return disk_bound_test(PunctureClass.around(pts, w.strands), side, w)
