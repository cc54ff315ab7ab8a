"""Bicomplex Lebesgue integration on finite atomic spaces.

A function is an atom-indexed table of bicomplex values; on a finite
discrete space every such table is measurable, so the integral against
a D-measure is the pair of componentwise weighted sums. Summation runs
in ascending atom index order, which makes every integral value
bit-reproducible across runs and threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence, Union

import numpy as np

from .numbers import Bicomplex, Hyperbolic, lt_d
from .measures import TMeasure
from .spaces import FiniteSpace, SetMask

__all__ = [
    "TFunction",
    "unimodular_factor",
    "in_l1",
    "integrate",
    "check_linearity",
    "ModulusCheck",
    "check_modulus_inequality",
    "DCTReport",
    "dct_run",
    "indefinite_integral",
]

_ValueLike = Union[Bicomplex, Hyperbolic, complex, float, int]


def _as_components(value: _ValueLike) -> tuple[complex, complex]:
    if isinstance(value, Bicomplex):
        return value.e1, value.e2
    if isinstance(value, Hyperbolic):
        return complex(value.e1), complex(value.e2)
    value = complex(value)
    return value, value


class TFunction:
    """An atom-indexed table of bicomplex values.

    Parameters
    ----------
    space : FiniteSpace
    e1, e2 : array_like of complex
        Component values per atom, in atom index order.
    """

    __slots__ = ("space", "e1", "e2")

    def __init__(self, space: FiniteSpace, e1, e2) -> None:
        a1 = np.array(e1, dtype=np.complex128)
        a2 = np.array(e2, dtype=np.complex128)
        if a1.shape != (space.size,) or a2.shape != (space.size,):
            raise ValueError("component arrays must have one entry per atom")
        a1.setflags(write=False)
        a2.setflags(write=False)
        object.__setattr__(self, "space", space)
        object.__setattr__(self, "e1", a1)
        object.__setattr__(self, "e2", a2)

    def __setattr__(self, name, value):
        raise AttributeError("TFunction is immutable")

    @classmethod
    def from_atoms(
        cls, space: FiniteSpace, values: Mapping[str, _ValueLike]
    ) -> "TFunction":
        """Build from a label-to-value mapping; omitted atoms get 0."""
        e1 = np.zeros(space.size, dtype=np.complex128)
        e2 = np.zeros(space.size, dtype=np.complex128)
        for label, value in values.items():
            i = space.index_of(label)
            e1[i], e2[i] = _as_components(value)
        return cls(space, e1, e2)

    @classmethod
    def constant(cls, space: FiniteSpace, value: _ValueLike) -> "TFunction":
        c1, c2 = _as_components(value)
        return cls(space, np.full(space.size, c1), np.full(space.size, c2))

    @classmethod
    def indicator(cls, mask: SetMask) -> "TFunction":
        """Characteristic function of a subset, 1 on it and 0 off it."""
        bits = np.zeros(mask.space.size, dtype=np.complex128)
        for i in mask.indices():
            bits[i] = 1.0
        return cls(mask.space, bits, bits.copy())

    def value_at(self, index: int) -> Bicomplex:
        return Bicomplex(complex(self.e1[index]), complex(self.e2[index]))

    def d_modulus(self) -> "TFunction":
        """Atomwise D-modulus; the result is D+-valued."""
        return TFunction(self.space, np.abs(self.e1), np.abs(self.e2))

    def polar_factor(self) -> "TFunction":
        """The unimodular factor alpha with alpha * |f| = f.

        Each component of alpha has modulus 1 at every atom; where a
        component of f vanishes the factor is set to 1, the canonical
        unimodular choice.
        """
        return TFunction(
            self.space, unimodular_factor(self.e1), unimodular_factor(self.e2)
        )

    def is_finite(self) -> bool:
        return bool(
            np.all(np.isfinite(self.e1.real))
            and np.all(np.isfinite(self.e1.imag))
            and np.all(np.isfinite(self.e2.real))
            and np.all(np.isfinite(self.e2.imag))
        )

    def __add__(self, other: "TFunction") -> "TFunction":
        if not isinstance(other, TFunction):
            return NotImplemented
        if other.space != self.space:
            raise ValueError("functions live on different spaces")
        return TFunction(self.space, self.e1 + other.e1, self.e2 + other.e2)

    def __sub__(self, other: "TFunction") -> "TFunction":
        if not isinstance(other, TFunction):
            return NotImplemented
        if other.space != self.space:
            raise ValueError("functions live on different spaces")
        return TFunction(self.space, self.e1 - other.e1, self.e2 - other.e2)

    def __neg__(self) -> "TFunction":
        return TFunction(self.space, -self.e1, -self.e2)

    def scaled(self, c: _ValueLike) -> "TFunction":
        """Pointwise scalar product with a bicomplex scalar."""
        c1, c2 = _as_components(c)
        return TFunction(self.space, c1 * self.e1, c2 * self.e2)

    def __mul__(self, c) -> "TFunction":
        if isinstance(c, (int, float, complex, Hyperbolic, Bicomplex)):
            return self.scaled(c)
        return NotImplemented

    __rmul__ = __mul__

    def isclose(self, other: "TFunction", tol: float = 1e-12) -> bool:
        if other.space != self.space:
            return False
        return bool(
            np.all(np.abs(self.e1 - other.e1) <= tol)
            and np.all(np.abs(self.e2 - other.e2) <= tol)
        )

    def __repr__(self) -> str:
        pairs = ", ".join(
            f"{label}: ({self.e1[i]:.4g}, {self.e2[i]:.4g})"
            for i, label in enumerate(self.space.atoms)
        )
        return f"TFunction({pairs})"


def unimodular_factor(values: np.ndarray) -> np.ndarray:
    """w / |w| entrywise, with 1 substituted where w = 0.

    Axis-aligned entries (purely real or purely imaginary) become
    exact units: complex division can lose an ulp even when the
    quotient is a sign, and sign classification downstream needs the
    literal +-1.
    """
    out = np.ones_like(values)
    re = values.real
    im = values.imag
    real_nz = (im == 0.0) & (re != 0.0)
    imag_nz = (re == 0.0) & (im != 0.0)
    out[real_nz] = np.sign(re[real_nz])
    out[imag_nz] = 1j * np.sign(im[imag_nz])
    mixed = (re != 0.0) & (im != 0.0)
    out[mixed] = values[mixed] / np.abs(values[mixed])
    return out


def _check_integrand(f: TFunction, mu: TMeasure) -> None:
    if f.space != mu.space:
        raise ValueError("function and measure live on different spaces")
    if not mu.is_d_measure():
        raise ValueError("integration needs a D-measure")


def in_l1(f: TFunction, mu: TMeasure) -> bool:
    """Whether both component integrals of |f| are finite.

    On well-formed finite tables this is always true; it fails only
    when non-finite values were ingested.
    """
    _check_integrand(f, mu)
    s1 = float(np.abs(f.e1) @ mu.e1.real)
    s2 = float(np.abs(f.e2) @ mu.e2.real)
    return bool(np.isfinite(s1) and np.isfinite(s2))


def integrate(f: TFunction, mu: TMeasure, e: SetMask | None = None) -> Bicomplex:
    """Integral of f against a D-measure over a subset (default X).

    Computed as componentwise weighted sums in ascending atom index
    order.

    Raises
    ------
    ValueError
        On space mismatch, a non-D measure, or a non-integrable table.
    """
    _check_integrand(f, mu)
    if e is None:
        e = f.space.full()
    elif e.space != f.space:
        raise ValueError("mask does not belong to the integrand's space")
    if not in_l1(f, mu):
        raise ValueError("function is not integrable against this measure")
    m1 = mu.e1.real
    m2 = mu.e2.real
    s1 = 0j
    s2 = 0j
    for i in e.indices():
        s1 += f.e1[i] * m1[i]
        s2 += f.e2[i] * m2[i]
    return Bicomplex(complex(s1), complex(s2))


def check_linearity(
    f: TFunction,
    g: TFunction,
    alpha: Bicomplex,
    beta: Bicomplex,
    mu: TMeasure,
    tol: float = 1e-12,
) -> bool:
    """Whether integration is linear for the given scalars and tables.

    Verifies that alpha*f + beta*g stays integrable and that
    integrate(alpha*f + beta*g) equals alpha*integrate(f) +
    beta*integrate(g) within ``tol`` in both components. Scalars may
    be arbitrary bicomplex numbers; complex scalars are the special
    case with equal components.
    """
    if f.space != g.space:
        raise ValueError("functions live on different spaces")
    combo = f.scaled(alpha) + g.scaled(beta)
    if not in_l1(combo, mu):
        return False
    lhs = integrate(combo, mu)
    rhs = alpha * integrate(f, mu) + beta * integrate(g, mu)
    return lhs.isclose(rhs, tol)


@dataclass(frozen=True)
class ModulusCheck:
    """Both sides of the integral modulus inequality."""

    lhs: Hyperbolic
    rhs: Hyperbolic
    holds: bool


def check_modulus_inequality(
    f: TFunction, mu: TMeasure, tol: float = 1e-12
) -> ModulusCheck:
    """Evaluate |integral of f|_D against the integral of |f|_D.

    ``holds`` reports lhs <= rhs componentwise with an additive slack
    ``tol``: the two sides can tie mathematically (no cancellation)
    and then differ by an ulp in float arithmetic.
    """
    lhs = integrate(f, mu).d_modulus()
    rhs_bc = integrate(f.d_modulus(), mu)
    rhs = Hyperbolic(rhs_bc.e1.real, rhs_bc.e2.real)
    holds = lhs.e1 <= rhs.e1 + tol and lhs.e2 <= rhs.e2 + tol
    return ModulusCheck(lhs=lhs, rhs=rhs, holds=holds)


@dataclass(frozen=True)
class DCTReport:
    """Outcome of a dominated-convergence run.

    ``l1_limit`` traces the integrals of |f_n - f|_D, one entry per
    sequence term; ``integral_trace`` the integrals of f_n;
    ``final_gap`` is the last l1 entry. ``success`` records whether
    the two convergence conclusions hold at the last term within the
    requested tolerance; domination is reported separately and is not
    folded into ``success``.
    """

    domination_ok: bool
    l1_limit: tuple[Hyperbolic, ...]
    integral_trace: tuple[Bicomplex, ...]
    final_gap: Hyperbolic
    success: bool


def dct_run(
    fn_seq: Sequence[TFunction],
    f_limit: TFunction,
    g: TFunction,
    mu: TMeasure,
    tol: float,
) -> DCTReport:
    """Dominated-convergence harness over a finite function sequence.

    Checks the domination hypothesis |f_n,i(x)| <= g_i(x) for every
    term, component and atom (with a 1e-12 slack against float ties),
    and traces the two conclusions: the integrals of |f_n - f|_D
    heading to zero and the integrals of f_n heading to the integral
    of f.

    Raises
    ------
    ValueError
        On an empty sequence, space mismatch, non-positive tol, or a
        non-integrable dominator.
    """
    if not fn_seq:
        raise ValueError("sequence must be nonempty")
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    space = f_limit.space
    for fn in fn_seq:
        if fn.space != space:
            raise ValueError("sequence terms live on different spaces")
    if g.space != space or mu.space != space:
        raise ValueError("dominator, limit and measure must share one space")
    if not in_l1(g, mu):
        raise ValueError("dominator is not integrable")

    g1 = g.e1.real
    g2 = g.e2.real
    slack = 1e-12
    domination_ok = all(
        bool(
            np.all(np.abs(fn.e1) <= g1 + slack)
            and np.all(np.abs(fn.e2) <= g2 + slack)
        )
        for fn in fn_seq
    )

    l1_trace: list[Hyperbolic] = []
    integral_trace: list[Bicomplex] = []
    for fn in fn_seq:
        diff_int = integrate((fn - f_limit).d_modulus(), mu)
        l1_trace.append(Hyperbolic(diff_int.e1.real, diff_int.e2.real))
        integral_trace.append(integrate(fn, mu))

    final_gap = l1_trace[-1]
    bound = Hyperbolic(tol, tol)
    last_int_gap = (integral_trace[-1] - integrate(f_limit, mu)).d_modulus()
    success = lt_d(final_gap, bound) and lt_d(last_int_gap, bound)
    return DCTReport(
        domination_ok=domination_ok,
        l1_limit=tuple(l1_trace),
        integral_trace=tuple(integral_trace),
        final_gap=final_gap,
        success=success,
    )


def indefinite_integral(g: TFunction, mu: TMeasure) -> TMeasure:
    """The measure E -> integral of g over E against mu.

    On an atomic space this is the measure with atom masses
    g_i(x) * mu_i({x}).

    Raises
    ------
    ValueError
        If g is not integrable against mu.
    """
    if not in_l1(g, mu):
        raise ValueError("function is not integrable against this measure")
    return TMeasure(mu.space, g.e1 * mu.e1.real, g.e2 * mu.e2.real)
