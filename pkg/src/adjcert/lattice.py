"""Second homology lattice of mCP^2 # n(-CP^2) with its diagonal intersection form.

Classes are stored in the basis H_1..H_m, E_1..E_n with H_p^2 = +1 and
E_q^2 = -1.  Everything is exact Python integer arithmetic.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence


class LatticeError(ValueError):
    """Raised for malformed lattices or classes dimensioned for another lattice."""


@dataclass(frozen=True)
class IntersectionLattice:
    m: int
    n: int

    def __post_init__(self):
        if self.m < 0 or self.n < 0:
            raise LatticeError(f"negative summand count: m={self.m}, n={self.n}")
        if self.m + self.n < 1:
            raise LatticeError("zero-rank lattice")

    @property
    def rank(self) -> int:
        return self.m + self.n

    @property
    def signature(self) -> int:
        return self.m - self.n

    @property
    def bplus(self) -> int:
        return self.m

    @property
    def bminus(self) -> int:
        return self.n

    def H(self, p: int) -> "HClass":
        """Generator H_p, 1-based."""
        if not 1 <= p <= self.m:
            raise LatticeError(f"H_{p} out of range for m={self.m}")
        h = [0] * self.m
        h[p - 1] = 1
        return HClass(tuple(h), (0,) * self.n)

    def E(self, q: int) -> "HClass":
        """Generator E_q, 1-based."""
        if not 1 <= q <= self.n:
            raise LatticeError(f"E_{q} out of range for n={self.n}")
        e = [0] * self.n
        e[q - 1] = 1
        return HClass((0,) * self.m, tuple(e))

    def zero(self) -> "HClass":
        return HClass((0,) * self.m, (0,) * self.n)

    def cls(self, h: Iterable[int], e: Iterable[int] = ()) -> "HClass":
        """Build a class, padding a short E-part with zeros."""
        h = tuple(int(x) for x in h)
        e = tuple(int(x) for x in e)
        if len(e) < self.n:
            e = e + (0,) * (self.n - len(e))
        x = HClass(h, e)
        self.check(x)
        return x

    def check(self, x: "HClass") -> None:
        if len(x.h) != self.m or len(x.e) != self.n:
            raise LatticeError(
                f"class has shape ({len(x.h)}, {len(x.e)}), lattice is ({self.m}, {self.n})")


@dataclass(frozen=True)
class HClass:
    h: tuple = field(default=())
    e: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "h", tuple(int(x) for x in self.h))
        object.__setattr__(self, "e", tuple(int(x) for x in self.e))

    def _same_shape(self, other: "HClass") -> None:
        if len(self.h) != len(other.h) or len(self.e) != len(other.e):
            raise LatticeError("dimension mismatch between classes")

    def __add__(self, other: "HClass") -> "HClass":
        self._same_shape(other)
        return HClass(tuple(a + b for a, b in zip(self.h, other.h)),
                      tuple(a + b for a, b in zip(self.e, other.e)))

    def __sub__(self, other: "HClass") -> "HClass":
        return self + (-other)

    def __neg__(self) -> "HClass":
        return HClass(tuple(-a for a in self.h), tuple(-a for a in self.e))

    def __mul__(self, k: int) -> "HClass":
        return HClass(tuple(k * a for a in self.h), tuple(k * a for a in self.e))

    __rmul__ = __mul__

    @property
    def coords(self) -> tuple:
        return self.h + self.e

    def to_json(self) -> dict:
        return {"h": list(self.h), "e": list(self.e)}

    def __str__(self) -> str:
        terms = []
        for name, coeffs in (("H", self.h), ("E", self.e)):
            for i, a in enumerate(coeffs, 1):
                if a == 0:
                    continue
                mag = "" if abs(a) == 1 else str(abs(a))
                sign = "-" if a < 0 else "+"
                terms.append(f"{sign}{mag}{name}{i}")
        if not terms:
            return "0"
        s = "".join(terms)
        return s[1:] if s.startswith("+") else s


def make_lattice(m: int, n: int) -> IntersectionLattice:
    return IntersectionLattice(m, n)


def pairing(L: IntersectionLattice, x: HClass, y: HClass) -> int:
    L.check(x)
    L.check(y)
    return (sum(a * b for a, b in zip(x.h, y.h))
            - sum(a * b for a, b in zip(x.e, y.e)))


def square(L: IntersectionLattice, x: HClass) -> int:
    return pairing(L, x, x)


def is_characteristic(L: IntersectionLattice, c: HClass) -> bool:
    # on diag(+1^m, -1^n), c.x = x.x mod 2 for all x iff every coordinate is odd
    L.check(c)
    return all(a % 2 == 1 for a in c.coords)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    index: int | None = None
    values: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {"name": self.name, "passed": self.passed}
        if self.index is not None:
            out["index"] = self.index
        if self.values:
            out["values"] = dict(self.values)
        return out


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple
    c_dot_alpha: tuple

    @property
    def ok(self) -> bool:
        return all(ch.passed for ch in self.checks)

    @property
    def failures(self) -> list:
        return [ch for ch in self.checks if not ch.passed]


def validate_hypotheses(L: IntersectionLattice, c: HClass,
                        alphas: Sequence[HClass]) -> ValidationReport:
    """Check the lattice-level hypotheses shared by every theorem engine.

    Globally: c is characteristic and c^2 > sign(X).  Per class (1-based
    index): alpha_i^2 = 0 and c.alpha_i != 0.  Failures are report entries.
    """
    checks = []
    c2 = square(L, c)
    checks.append(CheckResult("characteristic", is_characteristic(L, c),
                              values={"c": str(c)}))
    checks.append(CheckResult("c_squared_exceeds_signature", c2 > L.signature,
                              values={"c_squared": c2, "signature": L.signature}))
    dots = []
    for i, a in enumerate(alphas, 1):
        a2 = square(L, a)
        ca = pairing(L, c, a)
        dots.append(ca)
        checks.append(CheckResult("self_intersection_zero", a2 == 0, i,
                                  {"alpha_squared": a2}))
        checks.append(CheckResult("c_dot_alpha_nonzero", ca != 0, i,
                                  {"c_dot_alpha": ca}))
    return ValidationReport(tuple(checks), tuple(dots))
