"""Push-forward dynamics of D-probability measures on finite spaces.

A point map is a total self-map of the atom set. Push-forward moves
atom masses along the map; a measure is invariant when push-forward
fixes it. On a finite space the invariant measures are spanned by
uniform distributions on the cycles of the functional graph, and
Cesaro averages of push-forward orbits converge onto that span.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from .integration import TFunction, integrate
from .measures import TMeasure, probability_variant
from .numbers import Bicomplex, Hyperbolic, lt_d
from .spaces import FiniteSpace, SetMask

__all__ = [
    "PointMap",
    "pushforward",
    "pushforward_iter",
    "is_invariant",
    "CovCheck",
    "change_of_variables_check",
    "convex_combine",
    "CesaroTrace",
    "cesaro_invariant",
    "invariant_basis_bruteforce",
    "in_invariant_hull",
    "ContinuityProbe",
    "continuity_probe",
]

BASIS_CAP = 1 << 16


class PointMap:
    """A total map from atoms to atoms of one finite space.

    Parameters
    ----------
    space : FiniteSpace
    image : array_like of int
        image[x] is the index the atom x maps to.
    """

    __slots__ = ("space", "image")

    def __init__(self, space: FiniteSpace, image) -> None:
        arr = np.array(image, dtype=np.int64)
        if arr.shape != (space.size,):
            raise ValueError("image must assign one target per atom")
        if arr.size and (arr.min() < 0 or arr.max() >= space.size):
            raise ValueError("image indices out of range")
        arr.setflags(write=False)
        object.__setattr__(self, "space", space)
        object.__setattr__(self, "image", arr)

    def __setattr__(self, name, value):
        raise AttributeError("PointMap is immutable")

    @classmethod
    def from_labels(cls, space: FiniteSpace, mapping: Mapping[str, str]) -> "PointMap":
        """Build from a label-to-label mapping; must be total."""
        image = np.empty(space.size, dtype=np.int64)
        seen = np.zeros(space.size, dtype=bool)
        for src, dst in mapping.items():
            i = space.index_of(src)
            image[i] = space.index_of(dst)
            seen[i] = True
        if not seen.all():
            missing = [space.atoms[i] for i in np.flatnonzero(~seen)]
            raise ValueError(f"map is not total; missing {missing}")
        return cls(space, image)

    def apply(self, index: int) -> int:
        return int(self.image[index])

    def preimage(self, a: SetMask) -> SetMask:
        """The exact preimage mask f^{-1}(A)."""
        if a.space != self.space:
            raise ValueError("mask lives on a different space")
        hits = [i for i in range(self.space.size) if a.contains(int(self.image[i]))]
        return self.space.subset_of_indices(hits)

    def pullback(self, phi: TFunction) -> TFunction:
        """The composition phi after this map."""
        if phi.space != self.space:
            raise ValueError("function lives on a different space")
        return TFunction(self.space, phi.e1[self.image], phi.e2[self.image])

    def __repr__(self) -> str:
        pairs = ", ".join(
            f"{self.space.atoms[i]}->{self.space.atoms[int(self.image[i])]}"
            for i in range(self.space.size)
        )
        return f"PointMap({pairs})"


def _push_arrays(
    image: np.ndarray, m1: np.ndarray, m2: np.ndarray, n: int
) -> tuple[np.ndarray, np.ndarray]:
    # bincount accumulates in ascending source index order, which keeps
    # push-forward values bit-reproducible.
    out1 = np.bincount(image, weights=m1, minlength=n)
    out2 = np.bincount(image, weights=m2, minlength=n)
    return out1, out2


def _require_same_space(f: PointMap, mu: TMeasure) -> None:
    if f.space != mu.space:
        raise ValueError("map and measure live on different spaces")


def pushforward(f: PointMap, mu: TMeasure) -> TMeasure:
    """Push a D-probability forward: mass of x moves to f(x).

    Componentwise (f_*mu)({y}) sums mu({x}) over the preimage of y;
    the total mass is preserved.

    Raises
    ------
    ValueError
        On space mismatch or when mu is not a D-probability.
    """
    _require_same_space(f, mu)
    probability_variant(mu)
    out1, out2 = _push_arrays(f.image, mu.e1.real, mu.e2.real, f.space.size)
    return TMeasure(f.space, out1, out2)


def pushforward_iter(f: PointMap, mu: TMeasure, i: int) -> TMeasure:
    """The i-fold push-forward, i >= 1."""
    if i < 1:
        raise ValueError("iteration count must be >= 1")
    _require_same_space(f, mu)
    probability_variant(mu)
    m1 = mu.e1.real
    m2 = mu.e2.real
    n = f.space.size
    for _ in range(i):
        m1, m2 = _push_arrays(f.image, m1, m2, n)
    return TMeasure(f.space, m1, m2)


def is_invariant(f: PointMap, mu: TMeasure, tol: float) -> bool:
    """Whether f_*mu = mu within tol, atomwise.

    Each atom's mass difference must be strictly below tol*(e1+e2) in
    the component-lenient order; on an atomic space this controls
    every subset up to |X|*tol.

    Raises
    ------
    ValueError
        If tol is not positive.
    """
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    nu = pushforward(f, mu)
    g1 = np.abs(nu.e1 - mu.e1)
    g2 = np.abs(nu.e2 - mu.e2)
    ok = (g1 <= tol) & (g2 <= tol) & ~((g1 == tol) & (g2 == tol))
    return bool(np.all(ok))


@dataclass(frozen=True)
class CovCheck:
    """Both sides of the change-of-variables identity."""

    lhs: Bicomplex
    rhs: Bicomplex
    equal: bool


def change_of_variables_check(
    f: PointMap, mu: TMeasure, phi: TFunction, tol: float = 1e-12
) -> CovCheck:
    """Compare the integral of phi against f_*mu with the integral of
    phi after f against mu.

    Both sides are independent finite sums and agree exactly on
    exactly-representable inputs; ``equal`` uses tolerance ``tol``.
    """
    _require_same_space(f, mu)
    if phi.space != f.space:
        raise ValueError("function lives on a different space")
    lhs = integrate(phi, pushforward(f, mu))
    rhs = integrate(f.pullback(phi), mu)
    return CovCheck(lhs=lhs, rhs=rhs, equal=lhs.isclose(rhs, tol))


def convex_combine(a: TMeasure, b: TMeasure, t: float) -> TMeasure:
    """t*a + (1-t)*b for two D-probabilities of the same variant.

    Invariance is preserved: if both inputs are invariant under a map
    then so is the combination.

    Raises
    ------
    ValueError
        If t is outside [0,1], spaces differ, or the inputs have
        different total-mass variants.
    """
    if not 0.0 <= t <= 1.0:
        raise ValueError("t must lie in [0, 1]")
    if a.space != b.space:
        raise ValueError("measures live on different spaces")
    va = probability_variant(a)
    vb = probability_variant(b)
    if va != vb:
        raise ValueError("mismatched total-mass variants")
    return TMeasure(
        a.space,
        t * a.e1.real + (1.0 - t) * b.e1.real,
        t * a.e2.real + (1.0 - t) * b.e2.real,
    )


def _cycle_flags(image: np.ndarray) -> np.ndarray:
    # Peel atoms of in-degree zero until only the cycles remain.
    n = len(image)
    indeg = np.bincount(image, minlength=n)
    stack = [i for i in range(n) if indeg[i] == 0]
    removed = np.zeros(n, dtype=bool)
    while stack:
        x = stack.pop()
        removed[x] = True
        y = int(image[x])
        indeg[y] -= 1
        if indeg[y] == 0 and not removed[y]:
            stack.append(y)
    return ~removed


def _cycles(image: np.ndarray) -> list[list[int]]:
    """Cycles of the functional graph, ordered by smallest member."""
    on_cycle = _cycle_flags(image)
    seen = np.zeros(len(image), dtype=bool)
    cycles: list[list[int]] = []
    for start in range(len(image)):
        if not on_cycle[start] or seen[start]:
            continue
        cycle = []
        x = start
        while not seen[x]:
            seen[x] = True
            cycle.append(x)
            x = int(image[x])
        cycles.append(cycle)
    return cycles


def _tail_depths(image: np.ndarray, on_cycle: np.ndarray) -> np.ndarray:
    """Steps needed to land on a cycle, per atom (0 on cycles)."""
    n = len(image)
    depth = np.full(n, -1, dtype=np.int64)
    depth[on_cycle] = 0
    for i in range(n):
        if depth[i] >= 0:
            continue
        chain = []
        x = i
        while depth[x] < 0:
            chain.append(x)
            x = int(image[x])
        d = int(depth[x])
        for y in reversed(chain):
            d += 1
            depth[y] = d
    return depth


@dataclass(frozen=True)
class CesaroTrace:
    """Trace of the averaged push-forward orbit.

    ``iterates[k]`` is the running average over the first k+1 orbit
    terms, ``gaps[k]`` the total atomwise D-modulus of its invariance
    defect; the two tuples have equal length. ``burn_in`` records how
    many push-forwards were applied before averaging started.
    """

    iterates: tuple[TMeasure, ...]
    gaps: tuple[Hyperbolic, ...]
    converged: bool
    burn_in: int


def cesaro_invariant(
    f: PointMap,
    mu0: TMeasure,
    max_iter: int,
    tol: float,
    burn_in: "int | str" = "auto",
) -> CesaroTrace:
    """Average the push-forward orbit of mu0 until it is invariant.

    Computes running averages mu_n = (1/n) * sum of the first n orbit
    terms and stops once the invariance gap of mu_n falls strictly
    below tol*(e1+e2).

    The literal recurrence started at mu0 has gap
    (1/n)*|f_*^n mu0 - mu0|, which decays like 1/n and cannot reach
    tight tolerances while mu0 holds mass on transient atoms. The
    default ``burn_in="auto"`` therefore first advances mu0 by the
    longest transient-tail length among its support atoms, which puts
    all mass on cycles; averaging then closes the gap exactly at the
    period of the occupied cycles (up to float roundoff). Pass
    ``burn_in=0`` for the literal recurrence, or any nonnegative
    integer to choose the offset yourself.

    Raises
    ------
    ValueError
        If max_iter < 1, tol <= 0, or mu0 is not a D-probability.
    """
    if max_iter < 1:
        raise ValueError("max_iter must be >= 1")
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    _require_same_space(f, mu0)
    probability_variant(mu0)

    n_atoms = f.space.size
    if burn_in == "auto":
        on_cycle = _cycle_flags(f.image)
        depths = _tail_depths(f.image, on_cycle)
        carrying = (mu0.e1.real != 0.0) | (mu0.e2.real != 0.0)
        burn = int(depths[carrying].max()) if carrying.any() else 0
    else:
        burn = int(burn_in)
        if burn < 0:
            raise ValueError("burn_in must be >= 0 or 'auto'")

    cur1 = mu0.e1.real.copy()
    cur2 = mu0.e2.real.copy()
    for _ in range(burn):
        cur1, cur2 = _push_arrays(f.image, cur1, cur2, n_atoms)

    sum1 = np.zeros(n_atoms)
    sum2 = np.zeros(n_atoms)
    bound = Hyperbolic(tol, tol)
    iterates: list[TMeasure] = []
    gaps: list[Hyperbolic] = []
    converged = False
    for n in range(1, max_iter + 1):
        sum1 += cur1
        sum2 += cur2
        avg1 = sum1 / n
        avg2 = sum2 / n
        iterates.append(TMeasure(f.space, avg1, avg2))
        push1, push2 = _push_arrays(f.image, avg1, avg2, n_atoms)
        gap = Hyperbolic(
            float(np.sum(np.abs(push1 - avg1))),
            float(np.sum(np.abs(push2 - avg2))),
        )
        gaps.append(gap)
        if lt_d(gap, bound):
            converged = True
            break
        cur1, cur2 = _push_arrays(f.image, cur1, cur2, n_atoms)
    return CesaroTrace(
        iterates=tuple(iterates),
        gaps=tuple(gaps),
        converged=converged,
        burn_in=burn,
    )


def invariant_basis_bruteforce(f: PointMap) -> list[TMeasure]:
    """Uniform D-probabilities on the cycles of the functional graph.

    These are the extremal invariant measures: every output passes
    is_invariant at tight tolerance, and Cesaro limits lie in their
    componentwise convex hull. Ordered by smallest cycle member.

    Raises
    ------
    ValueError
        If the space exceeds 2**16 atoms.
    """
    if f.space.size > BASIS_CAP:
        raise ValueError(f"space too large for cycle enumeration (> {BASIS_CAP})")
    basis = []
    for cycle in _cycles(f.image):
        mass = np.zeros(f.space.size)
        mass[cycle] = 1.0 / len(cycle)
        basis.append(TMeasure(f.space, mass, mass.copy()))
    return basis


def in_invariant_hull(f: PointMap, mu: TMeasure, tol: float = 1e-9) -> bool:
    """Whether mu lies in the componentwise hull of the cycle basis.

    Componentwise: each component of mu must vanish off the cycles
    (within tol), be constant along each cycle (within tol), with
    nonnegative cycle weights summing to that component's total mass.
    Degenerate variants are covered because a zero component has all
    weights zero.
    """
    _require_same_space(f, mu)
    on_cycle = _cycle_flags(f.image)
    cycles = _cycles(f.image)
    for comp in (mu.e1.real, mu.e2.real):
        off = comp[~on_cycle]
        if off.size and float(np.max(np.abs(off))) > tol:
            return False
        weight_total = 0.0
        for cycle in cycles:
            masses = comp[cycle]
            if float(masses.max() - masses.min()) > tol:
                return False
            if masses.min() < -tol:
                return False
            weight_total += float(masses.sum())
        if abs(weight_total - float(comp.sum())) > tol * max(1.0, len(comp)):
            return False
    return True


@dataclass(frozen=True)
class ContinuityProbe:
    """Finite-prefix witness of weak continuity of push-forward.

    ``holds`` is the implication value: if the tail of the measure
    sequence matches the limit on every test function within tol,
    then the pushed-forward tail must match the pushed-forward limit
    likewise. ``vacuous`` flags a false hypothesis. Truthiness equals
    ``holds``.
    """

    hypothesis_holds: bool
    conclusion_holds: bool
    vacuous: bool
    holds: bool

    def __bool__(self) -> bool:
        return self.holds


def continuity_probe(
    f: PointMap,
    mu_seq: Sequence[TMeasure],
    mu_lim: TMeasure,
    test_fns: Sequence[TFunction],
    tol: float,
) -> ContinuityProbe:
    """Probe continuity of push-forward under weak convergence.

    Checks, at the last sequence term, whether closeness of the test
    integrals to the limit's transfers to the pushed-forward
    measures. A false hypothesis yields a vacuously true probe with
    the ``vacuous`` flag set.

    Raises
    ------
    ValueError
        On an empty sequence, empty test set, space mismatch, or
        non-positive tol.
    """
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    if not mu_seq:
        raise ValueError("measure sequence must be nonempty")
    if not test_fns:
        raise ValueError("need at least one test function")
    last = mu_seq[-1]
    bound = Hyperbolic(tol, tol)

    def close_under(m_a: TMeasure, m_b: TMeasure) -> bool:
        return all(
            lt_d((integrate(phi, m_a) - integrate(phi, m_b)).d_modulus(), bound)
            for phi in test_fns
        )

    hypothesis = close_under(last, mu_lim)
    conclusion = close_under(pushforward(f, last), pushforward(f, mu_lim))
    return ContinuityProbe(
        hypothesis_holds=hypothesis,
        conclusion_holds=conclusion,
        vacuous=not hypothesis,
        holds=(not hypothesis) or conclusion,
    )
