"""Exact homogeneous polynomial arithmetic over the rationals.

A polynomial is stored sparsely as a dict mapping exponent tuples to nonzero
``Fraction`` coefficients.  Every stored exponent tuple has the same total
degree, so a :class:`HomogPoly` is a single graded piece of a polynomial ring
and all arithmetic is exact (no rounding, ever).

Example (3 variables x, y, z)::

    x^2*y - (1/2)*z^3   is invalid (mixed degrees)
    x^2*y - (1/2)*y*z^2  ->  {(2, 1, 0): Fraction(1), (0, 1, 2): Fraction(-1, 2)}

The zero polynomial has an empty term dict but still carries a declared
degree so that sums and products stay well typed.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence, Union

Exponent = tuple[int, ...]
Scalar = Union[int, Fraction]

_VAR_NAMES = "xyzwv"


def var_name(index: int, num_vars: int) -> str:
    """Short display name for a variable (x, y, z, w, v for small rings)."""
    if num_vars <= len(_VAR_NAMES):
        return _VAR_NAMES[index]
    return f"x{index}"


@lru_cache(maxsize=None)
def graded_monomials(num_vars: int, degree: int) -> tuple[Exponent, ...]:
    """All exponent tuples with the given total degree, lexicographically
    decreasing.  The count is C(degree + num_vars - 1, num_vars - 1)."""
    if num_vars < 1:
        raise ValueError("need at least one variable")
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    if num_vars == 1:
        return ((degree,),)
    out = []
    for e in range(degree, -1, -1):
        for rest in graded_monomials(num_vars - 1, degree - e):
            out.append((e,) + rest)
    return tuple(out)


class HomogPoly:
    """A homogeneous polynomial with exact rational coefficients."""

    __slots__ = ("num_vars", "degree", "terms")

    def __init__(self, num_vars: int, degree: int,
                 terms: Mapping[Exponent, Scalar]):
        if num_vars < 1:
            raise ValueError("need at least one variable")
        if degree < 0:
            raise ValueError("degree must be nonnegative")
        clean: dict[Exponent, Fraction] = {}
        for exps, coeff in terms.items():
            coeff = Fraction(coeff)
            if coeff == 0:
                continue
            exps = tuple(int(e) for e in exps)
            if len(exps) != num_vars:
                raise ValueError(f"exponent tuple {exps} has wrong length")
            if any(e < 0 for e in exps) or sum(exps) != degree:
                raise ValueError(f"exponent tuple {exps} is not of degree {degree}")
            clean[exps] = coeff
        self.num_vars = num_vars
        self.degree = degree
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, num_vars: int, degree: int = 0) -> HomogPoly:
        return cls(num_vars, degree, {})

    @classmethod
    def constant(cls, num_vars: int, value: Scalar) -> HomogPoly:
        return cls(num_vars, 0, {(0,) * num_vars: value})

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff: Scalar = 1) -> HomogPoly:
        exps = tuple(int(e) for e in exps)
        return cls(len(exps), sum(exps), {exps: coeff})

    @classmethod
    def variable(cls, num_vars: int, index: int) -> HomogPoly:
        if not 0 <= index < num_vars:
            raise ValueError(f"variable index {index} out of range")
        exps = tuple(1 if i == index else 0 for i in range(num_vars))
        return cls(num_vars, 1, {exps: 1})

    @classmethod
    def linear_form(cls, coeffs: Sequence[Scalar]) -> HomogPoly:
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            if Fraction(c) != 0:
                exps = tuple(1 if j == i else 0 for j in range(n))
                terms[exps] = Fraction(c)
        return cls(n, 1, terms)

    # -- basic queries -----------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HomogPoly):
            return NotImplemented
        if self.num_vars != other.num_vars:
            return False
        if not self.terms and not other.terms:
            return True
        return self.degree == other.degree and self.terms == other.terms

    __hash__ = None  # type: ignore[assignment]  # mutable term dict

    def sorted_terms(self) -> list[tuple[Exponent, Fraction]]:
        """Terms in lexicographically decreasing exponent order."""
        return sorted(self.terms.items(), key=lambda t: t[0], reverse=True)

    def degree_in(self, index: int) -> int:
        """Largest exponent of one variable over all terms (0 for zero)."""
        return max((exps[index] for exps in self.terms), default=0)

    def min_degree_in(self, index: int) -> int:
        """Smallest exponent of one variable over all terms (0 for zero)."""
        return min((exps[index] for exps in self.terms), default=0)

    def coefficient_vector(self, monomials: Sequence[Exponent]) -> tuple[Fraction, ...]:
        return tuple(self.terms.get(m, Fraction(0)) for m in monomials)

    # -- arithmetic --------------------------------------------------------

    def _compatible(self, other: HomogPoly) -> None:
        if self.num_vars != other.num_vars:
            raise ValueError("mixed numbers of variables")
        if self.terms and other.terms and self.degree != other.degree:
            raise ValueError("mixed degrees in a homogeneous sum")

    def __add__(self, other: HomogPoly) -> HomogPoly:
        if not isinstance(other, HomogPoly):
            return NotImplemented
        self._compatible(other)
        out = dict(self.terms)
        for exps, c in other.terms.items():
            out[exps] = out.get(exps, Fraction(0)) + c
        degree = self.degree if self.terms else other.degree
        return HomogPoly(self.num_vars, degree, out)

    def __sub__(self, other: HomogPoly) -> HomogPoly:
        return self + (-other)

    def __neg__(self) -> HomogPoly:
        return HomogPoly(self.num_vars, self.degree,
                         {e: -c for e, c in self.terms.items()})

    def __mul__(self, other: Union[HomogPoly, Scalar]) -> HomogPoly:
        if isinstance(other, (int, Fraction)):
            return HomogPoly(self.num_vars, self.degree,
                             {e: c * other for e, c in self.terms.items()})
        if not isinstance(other, HomogPoly):
            return NotImplemented
        if self.num_vars != other.num_vars:
            raise ValueError("mixed numbers of variables")
        out: dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return HomogPoly(self.num_vars, self.degree + other.degree, out)

    def __rmul__(self, other: Scalar) -> HomogPoly:
        return self.__mul__(other)

    def __pow__(self, exponent: int) -> HomogPoly:
        if exponent < 0:
            raise ValueError("negative power of a polynomial")
        result = HomogPoly.constant(self.num_vars, 1)
        for _ in range(exponent):
            result = result * self
        return result

    # -- calculus and substitution -----------------------------------------

    def partial(self, index: int) -> HomogPoly:
        out: dict[Exponent, Fraction] = {}
        for exps, c in self.terms.items():
            e = exps[index]
            if e == 0:
                continue
            key = exps[:index] + (e - 1,) + exps[index + 1:]
            out[key] = out.get(key, Fraction(0)) + c * e
        return HomogPoly(self.num_vars, max(self.degree - 1, 0), out)

    def evaluate(self, point: Sequence[Scalar]) -> Fraction:
        if len(point) != self.num_vars:
            raise ValueError("point has wrong length")
        pt = [Fraction(v) for v in point]
        total = Fraction(0)
        for exps, c in self.terms.items():
            value = c
            for v, e in zip(pt, exps):
                if e:
                    value *= v ** e
            total += value
        return total

    def eliminate(self, pivot: int, replacement: Sequence[Scalar]) -> HomogPoly:
        """Substitute x_pivot by the linear form sum(replacement[j] * x_j)
        and drop the pivot coordinate.  replacement[pivot] must be zero."""
        if not 0 <= pivot < self.num_vars:
            raise ValueError("pivot out of range")
        repl = [Fraction(v) for v in replacement]
        if len(repl) != self.num_vars or repl[pivot] != 0:
            raise ValueError("replacement must be a linear form avoiding the pivot")
        small = repl[:pivot] + repl[pivot + 1:]
        repl_poly = HomogPoly.linear_form(small) if any(small) \
            else HomogPoly.zero(self.num_vars - 1, 1)
        powers: dict[int, HomogPoly] = {0: HomogPoly.constant(self.num_vars - 1, 1)}
        out = HomogPoly.zero(self.num_vars - 1, self.degree)
        for exps, c in self.terms.items():
            e = exps[pivot]
            if e not in powers:
                powers[e] = repl_poly ** e
            base = HomogPoly.monomial(exps[:pivot] + exps[pivot + 1:], c)
            out = out + base * powers[e]
        return out

    # -- display -----------------------------------------------------------

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for exps, c in self.sorted_terms():
            mono = "*".join(
                var_name(i, self.num_vars) + (f"^{e}" if e > 1 else "")
                for i, e in enumerate(exps) if e > 0)
            if not mono:
                pieces.append(str(c))
            elif c == 1:
                pieces.append(mono)
            elif c == -1:
                pieces.append(f"-{mono}")
            else:
                pieces.append(f"{c}*{mono}")
        text = " + ".join(pieces).replace("+ -", "- ")
        return text


# -- division by a single relation ------------------------------------------


def _elim_key(exps: Exponent, elim_var: int) -> tuple[int, ...]:
    """Lex comparison key placing ``elim_var`` first."""
    return (exps[elim_var],) + exps[:elim_var] + exps[elim_var + 1:]


def leading_monomial(poly: HomogPoly, elim_var: int) -> Exponent:
    if not poly:
        raise ValueError("zero polynomial has no leading monomial")
    return max(poly.terms, key=lambda e: _elim_key(e, elim_var))


def poly_divmod(p: HomogPoly, relation: HomogPoly, elim_var: int
                ) -> tuple[HomogPoly, HomogPoly]:
    """Division of p by a single relation F: returns (q, r) with p = q*F + r
    and no term of r divisible by the leading monomial of F.

    The monomial order is lexicographic with ``elim_var`` most significant,
    so when F contains the pure power elim_var^deg(F) this is classical
    division eliminating high powers of that variable.  A single relation is
    its own Groebner basis, so the remainder is unique and depends linearly
    on p.
    """
    if p.num_vars != relation.num_vars:
        raise ValueError("mixed numbers of variables")
    if not relation:
        raise ValueError("division by the zero polynomial")
    lm = leading_monomial(relation, elim_var)
    lc = relation.terms[lm]
    q_degree = max(p.degree - relation.degree, 0)
    q = HomogPoly.zero(p.num_vars, q_degree)
    r = p
    while True:
        divisible = [e for e in r.terms
                     if all(a >= b for a, b in zip(e, lm))]
        if not divisible:
            return q, r
        exps = max(divisible, key=lambda e: _elim_key(e, elim_var))
        shift = tuple(a - b for a, b in zip(exps, lm))
        factor = HomogPoly.monomial(shift, r.terms[exps] / lc)
        q = q + factor
        r = r - factor * relation


def normal_form(p: HomogPoly, relation: HomogPoly, elim_var: int | None = None
                ) -> HomogPoly:
    """Canonical representative of p modulo the principal ideal (relation).

    ``elim_var`` defaults to the last variable.  The result is zero exactly
    when p lies in the ideal, and normal_form is idempotent and linear.
    """
    if elim_var is None:
        elim_var = p.num_vars - 1
    return poly_divmod(p, relation, elim_var)[1]


# -- projective common zeros -------------------------------------------------


def has_projective_common_zero(forms: Sequence[HomogPoly]) -> bool:
    """Decide whether homogeneous forms share a common projective zero.

    Uses the Macaulay bound: n forms of degrees d_i in any number of
    variables have no common projective zero over an algebraically closed
    field if and only if the ideal they generate contains every monomial of
    degree nu = sum(d_i - 1) + 1.  That containment is a full-column-rank
    condition on the matrix of degree-nu multiples of the forms, i.e. the
    nonvanishing of the multivariate resultant of the system, and is decided
    here by exact Gaussian elimination.
    """
    from .linalg import rank

    forms = [f for f in forms if f]
    if not forms:
        return True
    num_vars = forms[0].num_vars
    if any(f.num_vars != num_vars for f in forms):
        raise ValueError("mixed numbers of variables")
    if any(f.degree == 0 for f in forms):
        return False  # a nonzero constant lies in the ideal
    nu = sum(f.degree - 1 for f in forms) + 1
    monos = graded_monomials(num_vars, nu)
    rows = []
    for f in forms:
        for mu in graded_monomials(num_vars, nu - f.degree):
            rows.append((HomogPoly.monomial(mu) * f).coefficient_vector(monos))
    return rank(rows) < len(monos)
