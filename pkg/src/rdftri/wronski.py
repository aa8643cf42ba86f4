"""Coefficient polynomials, Wronski systems and the Cox orientation test.

Polynomials live in ``s, t_1, ..., t_m``. The exponent of ``s`` is a
:class:`TwoLevel` value ``a + b·eps`` so that two-level liftings keep their
infinitesimal part as a formal symbol; ``t`` exponents are integers.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .complex import Triangulation
from .errors import (
    LengthMismatch,
    MissingColoring,
    MissingFacets,
    MissingLifting,
    NegativeCoordinates,
    UnsupportedFormat,
)
from .lattice import PointConfiguration
from .lifting import TwoLevel
from .linalg import elementary_divisors, rank_gf2, rank_rational, solvable_gf2

Monomial = tuple[TwoLevel, tuple[int, ...]]


class SparsePolynomial:
    """Exact sparse polynomial ``sum c * s^e * t^v`` with rational coefficients."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        self.terms: dict[Monomial, Fraction] = {}
        for (s_exp, t_exp), c in (terms or {}).items():
            self._add_term(s_exp, t_exp, c)

    def _add_term(self, s_exp, t_exp, coeff):
        t_exp = tuple(int(x) for x in t_exp)
        if len(t_exp) != self.nvars:
            raise ValueError(f"monomial {t_exp} has {len(t_exp)} variables, expected {self.nvars}")
        key = (s_exp if isinstance(s_exp, TwoLevel) else TwoLevel(s_exp), t_exp)
        value = self.terms.get(key, Fraction(0)) + Fraction(coeff)
        if value:
            self.terms[key] = value
        else:
            self.terms.pop(key, None)

    @classmethod
    def monomial(cls, nvars, s_exp=0, t_exp=None, coeff=1) -> "SparsePolynomial":
        return cls(nvars, {(s_exp, t_exp or (0,) * nvars): coeff})

    def __eq__(self, other):
        return isinstance(other, SparsePolynomial) and self.nvars == other.nvars and self.terms == other.terms

    def __add__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        out = SparsePolynomial(self.nvars, self.terms)
        for (s_exp, t_exp), c in other.terms.items():
            out._add_term(s_exp, t_exp, c)
        return out

    def __mul__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        out = SparsePolynomial(self.nvars)
        for (s1, t1), c1 in self.terms.items():
            for (s2, t2), c2 in other.terms.items():
                out._add_term(s1 + s2, tuple(a + b for a, b in zip(t1, t2)), c1 * c2)
        return out

    def scale(self, factor) -> "SparsePolynomial":
        return SparsePolynomial(self.nvars, {k: c * Fraction(factor) for k, c in self.terms.items()})

    def embed(self, offset: int, nvars: int) -> "SparsePolynomial":
        """Same polynomial with its ``t`` variables placed at ``offset`` among ``nvars``."""
        pad = nvars - offset - self.nvars
        return SparsePolynomial(
            nvars, {(s, (0,) * offset + t + (0,) * pad): c for (s, t), c in self.terms.items()}
        )

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (kv[0][0].base, kv[0][0].eps, kv[0][1]))

    def min_s_exponent(self) -> TwoLevel:
        return min((s for s, _ in self.terms), default=TwoLevel())

    def normalized(self) -> "SparsePolynomial":
        """Divide by the smallest power of ``s`` present."""
        low = self.min_s_exponent()
        return SparsePolynomial(self.nvars, {(s - low, t): c for (s, t), c in self.terms.items()})

    def evaluate(self, s, t) -> Fraction:
        """Value at rational ``s > 0`` and ``t``; needs integral, eps-free ``s`` exponents."""
        s = Fraction(s)
        t = [Fraction(x) for x in t]
        total = Fraction(0)
        for (s_exp, t_exp), c in self.terms.items():
            if s_exp.eps or s_exp.base.denominator != 1:
                raise ValueError("evaluation needs integral exponents of s without eps part")
            term = c * s ** int(s_exp.base)
            for x, e in zip(t, t_exp):
                term *= x ** e
            total += term
        return total

    def to_text(self, variable: str = "t") -> str:
        parts = []
        for (s_exp, t_exp), c in self.sorted_terms():
            factors = []
            mag = abs(c)
            if s_exp != TwoLevel():
                factors.append(_format_s(s_exp))
            factors += [
                f"{variable}{i + 1}" + (f"^{e}" if e != 1 else "") for i, e in enumerate(t_exp) if e
            ]
            if mag != 1 or not factors:
                factors.insert(0, str(mag))
            body = "*".join(factors)
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts) or "0"

    def to_json(self) -> list[dict]:
        return [
            {"coefficient": _fraction_text(c), "s": _fraction_text(s_exp.base),
             "s_eps": _fraction_text(s_exp.eps), "t": list(t_exp)}
            for (s_exp, t_exp), c in self.sorted_terms()
        ]

    def __repr__(self):
        return f"SparsePolynomial({self.to_text()!r})"


def _fraction_text(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _format_s(e: TwoLevel) -> str:
    if not e.eps:
        return "s" if e.base == 1 else (f"s^{e.base}" if e.base.denominator == 1 and e.base > 0 else f"s^({e.base})")
    eps = f"{_fraction_text(e.eps)}*eps"
    if not e.base:
        return f"s^({eps})"
    sign = "+" if e.eps > 0 else "-"
    eps = f"{_fraction_text(abs(e.eps))}*eps"
    return f"s^({_fraction_text(e.base)}{sign}{eps})"


@dataclass
class WronskiSystem:
    dim: int
    polynomials: list[SparsePolynomial]
    weights: tuple[Fraction, ...] | None = None
    kushnirenko_bound: int | None = None


def coefficient_polynomials(K: Triangulation, normalize: bool = False, check_orthant: bool = True):
    """One polynomial ``F_i = sum_{c(v) = i} s^lift(v) t^v`` per colour ``i``."""
    if K.coloring is None:
        raise MissingColoring("coefficient polynomials need a colouring")
    if K.lifting is None:
        raise MissingLifting("coefficient polynomials need a lifting")
    pts = K.config.points
    if check_orthant and any(x < 0 for p in pts for x in p):
        raise NegativeCoordinates("the configuration must lie in the nonnegative orthant")
    m = K.dim
    polys = [SparsePolynomial(m) for _ in range(m + 1)]
    for v, p in enumerate(pts):
        polys[K.coloring[v]]._add_term(K.lifting[v], p, 1)
    if normalize:
        polys = [f.normalized() for f in polys]
    return polys


def wronski_system(K: Triangulation, normalize: bool = False, weights=None, check_orthant: bool = True):
    polys = coefficient_polynomials(K, normalize, check_orthant)
    bound = K.config.volume if K.config.volume is not None else int(K.volumes.sum())
    w = tuple(Fraction(a) for a in weights) if weights is not None else None
    if w is not None and len(w) != len(polys):
        raise LengthMismatch(f"{len(w)} weights for {len(polys)} polynomials")
    return WronskiSystem(K.dim, polys, w, bound)


def wronski_polynomial(system: WronskiSystem, a=None) -> SparsePolynomial:
    """``sum_i a_i F_i``; ``a`` defaults to the system's stored weights."""
    a = system.weights if a is None else a
    if a is None or len(a) != len(system.polynomials):
        raise LengthMismatch(f"need {len(system.polynomials)} weights")
    out = SparsePolynomial(system.dim)
    for ai, f in zip(a, system.polynomials):
        out = out + f.scale(ai)
    return out


def product_coefficient_identity_check(K: Triangulation, L: Triangulation, mode: str = "color") -> bool:
    """Whether ``F_{K⊠L, k} = sum_{i+j=k} F_{K,i} F_{L,j} s^{ε 2^((n+1)i + n - j)}`` exactly.

    The product is built with colour consecutive orderings and the product
    lifting of ``mode``; its coefficient polynomials are computed from scratch.
    The identity is only expected for the colour mode.
    """
    from .product import make_ordering, simplicial_product

    ok, ol = make_ordering(K, "color_consecutive"), make_ordering(L, "color_consecutive")
    product = simplicial_product(K, ok, L, ol, lifting=mode)
    lhs = coefficient_polynomials(product, check_orthant=False)
    m, n = K.dim, L.dim
    fk = [f.embed(0, m + n) for f in coefficient_polynomials(K.with_(coloring=ok.colors), check_orthant=False)]
    fl = [f.embed(m, m + n) for f in coefficient_polynomials(L.with_(coloring=ol.colors), check_orthant=False)]
    for k in range(m + n + 1):
        rhs = SparsePolynomial(m + n)
        for i in range(max(0, k - n), min(m, k) + 1):
            j = k - i
            weight = SparsePolynomial.monomial(m + n, TwoLevel(0, 2 ** ((n + 1) * i + (n - j))))
            rhs = rhs + fk[i] * fl[j] * weight
        if rhs != lhs[k]:
            return False
    return True


def emit_system(system: WronskiSystem, fmt: str = "txt", variable: str = "t") -> str:
    """Canonical text or JSON rendering, terms sorted by ``(s, t)`` exponents."""
    if fmt == "txt":
        lines = [f"F{i} = {f.to_text(variable)}" for i, f in enumerate(system.polynomials)]
        return "\n".join(lines) + "\n"
    if fmt == "json":
        doc = {
            "dimension": system.dim,
            "variables": ["s"] + [f"{variable}{i + 1}" for i in range(system.dim)],
            "kushnirenko_bound": system.kushnirenko_bound,
            "polynomials": [{"color": i, "terms": f.to_json()} for i, f in enumerate(system.polynomials)],
        }
        if system.weights is not None:
            doc["weights"] = [_fraction_text(a) for a in system.weights]
        return json.dumps(doc, sort_keys=True, indent=2) + "\n"
    raise UnsupportedFormat(f"unknown format {fmt!r}; use 'txt' or 'json'")


@dataclass(frozen=True)
class CoxReport:
    lattice_index_odd: bool
    saturation_index_odd: bool
    odd_vector_in_span: bool
    elementary_divisors: tuple[int, ...]

    @property
    def oriented(self) -> bool:
        return self.lattice_index_odd and self.saturation_index_odd and self.odd_vector_in_span


def cox_oriented(config: PointConfiguration) -> CoxReport:
    """The three parity conditions on the facet description ``A x + b >= 0``.

    1. the lattice spanned by point differences has odd index in ``Z^m``;
    2. ``A`` has an odd maximal minor, i.e. its rank mod 2 equals its rank;
    3. some vector with all entries odd lies in the integer column span of ``(A | b)``,
       which holds iff the all-ones vector is in the mod-2 column span.
    """
    if config.facets is None:
        raise MissingFacets("Cox orientation needs a facet description")
    p0 = config.points[0]
    diffs = [[a - b for a, b in zip(p, p0)] for p in config.points[1:]]
    divisors = tuple(elementary_divisors(diffs)) if diffs else ()
    lattice_ok = len(divisors) == config.dim and all(d % 2 for d in divisors)
    A = [list(normal) for normal, _ in config.facets]
    Ab = [list(normal) + [offset] for normal, offset in config.facets]
    saturation_ok = rank_gf2(A) == rank_rational(A)
    span_ok = solvable_gf2(Ab, [1] * len(Ab))
    return CoxReport(lattice_ok, saturation_ok, span_ok, divisors)
