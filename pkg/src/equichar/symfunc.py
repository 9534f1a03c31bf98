"""Symmetric functions with QPoly coefficients in the power-sum or Schur basis.

The power-sum basis is the working basis: the ordinary product is a multiset
union of indices, the Kronecker product is diagonal, plethysm stretches
indices, and the normalized partial derivative acts monomial by monomial.
The Schur basis is the presentation basis; the change of basis runs through
Murnaghan-Nakayama character values, memoized globally.

Plethysm twists the grading variable: p_a composed with q^k p_mu gives
q^(a*k) p_(a*mu), while q-coefficients of the outer operand pass through
untouched (the same convention the Kronecker product uses).
"""

from fractions import Fraction
from functools import cache
from math import factorial

from .partitions import (
    centralizer_order,
    check_partition,
    irrep_dimension,
    partitions_of,
    split_factor,
    union,
)
from .qpoly import QPoly

POWERSUM = "powersum"
SCHUR = "schur"


@cache
def _border_strip_removals(lam, size):
    """Ways to peel a border strip of `size` cells off lam.

    Returns tuples (smaller_partition, height).  Implemented on beta-numbers:
    first-column hook lengths form a strictly decreasing set, and removing a
    strip subtracts `size` from one of them without colliding with another.
    """
    ell = len(lam)
    beta = [lam[i] + ell - 1 - i for i in range(ell)]
    beta_set = set(beta)
    out = []
    for b in beta:
        nb = b - size
        if nb < 0 or nb in beta_set:
            continue
        height = sum(1 for c in beta if nb < c < b)
        newbeta = sorted((c for c in beta if c != b), reverse=True)
        newbeta.append(nb)
        newbeta.sort(reverse=True)
        parts = tuple(
            c - (ell - 1 - i) for i, c in enumerate(newbeta) if c - (ell - 1 - i) > 0
        )
        out.append((parts, height))
    return tuple(out)


@cache
def character_value(lam, mu) -> int:
    """Symmetric-group character chi^lam at cycle type mu (Murnaghan-Nakayama)."""
    if sum(lam) != sum(mu):
        raise ValueError("character requires |lam| == |mu|")
    if not lam:
        return 1
    total = 0
    rest = mu[1:]
    for smaller, height in _border_strip_removals(lam, mu[0]):
        total += -character_value(smaller, rest) if height % 2 else character_value(smaller, rest)
    return total


@cache
def _schur_to_p_row(lam):
    """Coefficients of s_lam on the power sums: mu -> chi^lam(mu)/z_mu."""
    n = sum(lam)
    row = {}
    for mu in partitions_of(n):
        chi = character_value(lam, mu)
        if chi:
            row[mu] = Fraction(chi, centralizer_order(mu))
    return row


@cache
def _p_to_schur_row(mu):
    """Coefficients of p_mu on the Schur basis: lam -> chi^lam(mu)."""
    n = sum(mu)
    row = {}
    for lam in partitions_of(n):
        chi = character_value(lam, mu)
        if chi:
            row[lam] = chi
    return row


def _acc(terms: dict, key, value: QPoly) -> None:
    s = terms.get(key)
    s = value if s is None else s + value
    if s.is_zero():
        terms.pop(key, None)
    else:
        terms[key] = s


class SymFunc:
    """A homogeneous symmetric function over Q[q] in a fixed basis."""

    __slots__ = ("basis", "degree", "terms")

    def __init__(self, basis: str, degree: int, terms=()):
        if basis not in (POWERSUM, SCHUR):
            raise ValueError(f"unknown basis {basis!r}")
        self.basis = basis
        self.degree = int(degree)
        clean: dict[tuple[int, ...], QPoly] = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for lam, c in items:
            lam = tuple(lam)
            if sum(lam) != self.degree:
                raise ValueError(f"term {lam} breaks homogeneity of degree {self.degree}")
            qc = c if isinstance(c, QPoly) else QPoly(c)
            if qc.is_zero():
                continue
            _acc(clean, lam, qc)
        self.terms = clean

    @classmethod
    def zero(cls, degree: int, basis: str = POWERSUM) -> "SymFunc":
        return cls(basis, degree, {})

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, lam) -> QPoly:
        return self.terms.get(tuple(lam), QPoly(0))

    def support(self):
        """Partitions with nonzero coefficient, largest first under compare."""
        from .partitions import sort_key

        return sorted(self.terms, key=sort_key, reverse=True)

    # -- ring structure -------------------------------------------------

    def __add__(self, other: "SymFunc") -> "SymFunc":
        if not isinstance(other, SymFunc):
            return NotImplemented
        if other.basis != self.basis:
            raise ValueError("cannot add across bases; convert first")
        if other.degree != self.degree:
            raise ValueError("cannot add inhomogeneous degrees")
        out = dict(self.terms)
        for lam, c in other.terms.items():
            _acc(out, lam, c)
        res = SymFunc.__new__(SymFunc)
        res.basis, res.degree, res.terms = self.basis, self.degree, out
        return res

    def __neg__(self) -> "SymFunc":
        res = SymFunc.__new__(SymFunc)
        res.basis, res.degree = self.basis, self.degree
        res.terms = {lam: -c for lam, c in self.terms.items()}
        return res

    def __sub__(self, other: "SymFunc") -> "SymFunc":
        return self + (-other)

    def scale(self, c) -> "SymFunc":
        qc = c if isinstance(c, QPoly) else QPoly(c)
        out = {}
        for lam, v in self.terms.items():
            s = v * qc
            if not s.is_zero():
                out[lam] = s
        res = SymFunc.__new__(SymFunc)
        res.basis, res.degree, res.terms = self.basis, self.degree, out
        return res

    def __mul__(self, other):
        """Ordinary product in the ring of symmetric functions; scalars scale."""
        if isinstance(other, (int, Fraction, QPoly)):
            return self.scale(other)
        if not isinstance(other, SymFunc):
            return NotImplemented
        f, g = self.to_powersum(), other.to_powersum()
        out: dict[tuple[int, ...], QPoly] = {}
        for lam, c in f.terms.items():
            for mu, d in g.terms.items():
                _acc(out, union(lam, mu), c * d)
        res = SymFunc.__new__(SymFunc)
        res.basis, res.degree, res.terms = POWERSUM, f.degree + g.degree, out
        return res

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymFunc):
            return NotImplemented
        if self.degree != other.degree:
            return False
        if self.basis == other.basis:
            return self.terms == other.terms
        return self.to_powersum().terms == other.to_powersum().terms

    def __hash__(self):
        p = self.to_powersum()
        return hash((p.degree, frozenset(p.terms.items())))

    # -- basis changes ---------------------------------------------------

    def to_powersum(self) -> "SymFunc":
        if self.basis == POWERSUM:
            return self
        out: dict[tuple[int, ...], QPoly] = {}
        for lam, c in self.terms.items():
            for mu, frac in _schur_to_p_row(lam).items():
                _acc(out, mu, c * frac)
        res = SymFunc.__new__(SymFunc)
        res.basis, res.degree, res.terms = POWERSUM, self.degree, out
        return res

    def to_schur(self) -> "SymFunc":
        if self.basis == SCHUR:
            return self
        out: dict[tuple[int, ...], QPoly] = {}
        for mu, c in self.terms.items():
            for lam, chi in _p_to_schur_row(mu).items():
                _acc(out, lam, c * chi)
        res = SymFunc.__new__(SymFunc)
        res.basis, res.degree, res.terms = SCHUR, self.degree, out
        return res

    # -- the three extra operations --------------------------------------

    def kron(self, other: "SymFunc") -> "SymFunc":
        """Kronecker (internal tensor) product; diagonal on power sums."""
        f, g = self.to_powersum(), other.to_powersum()
        if f.degree != g.degree:
            raise ValueError("Kronecker product needs equal degrees")
        out = {}
        for lam, c in f.terms.items():
            d = g.terms.get(lam)
            if d is not None:
                out[lam] = c * d * centralizer_order(lam)
        res = SymFunc.__new__(SymFunc)
        res.basis, res.degree, res.terms = POWERSUM, f.degree, out
        return res

    def pleth(self, inner: "SymFunc") -> "SymFunc":
        """Plethysm self o inner.

        Indices of the inner operand are stretched along with its q-powers
        (p_a o q^k p_mu = q^(ak) p_(a mu)); outer q-coefficients are inert.
        """
        f, g = self.to_powersum(), inner.to_powersum()
        out_degree = f.degree * g.degree
        out: dict[tuple[int, ...], QPoly] = {}
        power_cache: dict[int, dict] = {}
        for lam, c in f.terms.items():
            running = {(): QPoly(1)}
            for a in lam:
                pa = power_cache.get(a)
                if pa is None:
                    pa = {
                        tuple(x * a for x in mu): qc.stretch(a)
                        for mu, qc in g.terms.items()
                    }
                    power_cache[a] = pa
                nxt: dict[tuple[int, ...], QPoly] = {}
                for k1, c1 in running.items():
                    for k2, c2 in pa.items():
                        _acc(nxt, union(k1, k2), c1 * c2)
                running = nxt
            for key, qc in running.items():
                _acc(out, key, qc * c)
        res = SymFunc.__new__(SymFunc)
        res.basis, res.degree, res.terms = POWERSUM, out_degree, out
        return res

    def pderiv(self, lam) -> "SymFunc":
        """Normalized partial derivative: (prod_i 1/m_i!) d/dp_lam, on monomials
        a marked removal of the sub-multiset lam.  Returns a power-sum result."""
        lam = check_partition(lam) if lam else ()
        f = self.to_powersum()
        out: dict[tuple[int, ...], QPoly] = {}
        for mu, c in f.terms.items():
            hit = split_factor(mu, lam)
            if hit is None:
                continue
            rest, count = hit
            _acc(out, rest, c * count)
        res = SymFunc.__new__(SymFunc)
        res.basis, res.degree, res.terms = POWERSUM, f.degree - sum(lam), out
        return res

    # -- specializations ---------------------------------------------------

    def q_coefficient(self, i: int) -> "SymFunc":
        """The coefficient of q^i, a symmetric function with constant coefficients."""
        out = {}
        for lam, c in self.terms.items():
            v = c.coeff(i)
            if v:
                out[lam] = QPoly(v)
        return SymFunc(self.basis, self.degree, out)

    def dimension_poly(self) -> QPoly:
        """Specialize each basis element to the dimension of its module.

        On the Schur side this is the hook-length dimension; on the power-sum
        side only p_(1^n) survives, with weight n!.  Both give the graded
        dimension of the underlying representation.
        """
        if self.degree == 0:
            return self.terms.get((), QPoly(0))
        if self.basis == SCHUR:
            total = QPoly(0)
            for lam, c in self.terms.items():
                total = total + c * irrep_dimension(lam)
            return total
        ones = self.terms.get((1,) * self.degree)
        if ones is None:
            return QPoly(0)
        return ones * factorial(self.degree)

    # -- serialization -----------------------------------------------------

    def to_json_dict(self) -> dict:
        from .partitions import sort_key

        fs = self.to_schur()
        order = sorted(fs.terms, key=sort_key, reverse=True)
        return {
            "basis": SCHUR,
            "degree": fs.degree,
            "terms": [
                {"part": list(lam), "coeff": fs.terms[lam].to_json_dict()}
                for lam in order
            ],
        }

    @classmethod
    def from_json_dict(cls, data) -> "SymFunc":
        terms = {
            check_partition(t["part"]): QPoly.from_json_dict(t["coeff"])
            for t in data["terms"]
        }
        return cls(data["basis"], data["degree"], terms)

    def __str__(self) -> str:
        from .render import symfunc_text

        return symfunc_text(self)

    def __repr__(self) -> str:
        return f"SymFunc({self.basis}, deg={self.degree}, {len(self.terms)} terms)"


def powersum(lam, coeff=1) -> SymFunc:
    lam = check_partition(lam)
    return SymFunc(POWERSUM, sum(lam), {lam: coeff})


def schur(lam, coeff=1) -> SymFunc:
    lam = check_partition(lam)
    return SymFunc(SCHUR, sum(lam), {lam: coeff})


def one() -> SymFunc:
    """The unit of the ring: the empty partition in degree 0."""
    return SymFunc(POWERSUM, 0, {(): 1})
