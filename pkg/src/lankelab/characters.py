"""Exact character theory of the symmetric group S_m.

Character values are computed by border-strip recursion on beta-sets; class
functions carry exact rationals and decompose against the irreducible
characters by the standard inner product.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

from .partitions import Partition, hook_length_dimension, partitions_of


class NonCharacterError(ValueError):
    """A class function failed to decompose with nonnegative integer multiplicities."""


def class_size(cycle_type: Partition) -> int:
    """Number of permutations in S_m with the given cycle type."""
    m = cycle_type.weight()
    denom = 1
    mult: dict[int, int] = {}
    for length in cycle_type:
        mult[length] = mult.get(length, 0) + 1
    for length, count in mult.items():
        denom *= length**count * factorial(count)
    return factorial(m) // denom


class ConjugacyClass:
    __slots__ = ("cycle_type", "size")

    def __init__(self, cycle_type: Partition):
        self.cycle_type = cycle_type
        self.size = class_size(cycle_type)

    def __repr__(self) -> str:
        return f"ConjugacyClass({self.cycle_type.parts}, size={self.size})"


@lru_cache(maxsize=None)
def conjugacy_classes(m: int) -> tuple[ConjugacyClass, ...]:
    classes = tuple(ConjugacyClass(mu) for mu in partitions_of(m))
    assert sum(c.size for c in classes) == factorial(m)
    return classes


def _beta_set(lam: tuple[int, ...], length: int) -> tuple[int, ...]:
    return tuple(lam[i] + (length - 1 - i) if i < len(lam) else (length - 1 - i) for i in range(length))


def _partition_from_beta(beta: tuple[int, ...]) -> tuple[int, ...]:
    beta = tuple(sorted(beta, reverse=True))
    length = len(beta)
    parts = tuple(beta[i] - (length - 1 - i) for i in range(length))
    return tuple(p for p in parts if p > 0)


@lru_cache(maxsize=None)
def _mn_value(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    if not mu:
        return 1
    strip = mu[0]
    rest = mu[1:]
    length = max(len(lam), 1)
    beta = set(_beta_set(lam, length))
    total = 0
    for b in sorted(beta):
        lower = b - strip
        if lower < 0 or lower in beta:
            continue
        # height = number of occupied positions strictly between lower and b
        height = sum(1 for x in beta if lower < x < b)
        new_beta = beta - {b} | {lower}
        new_lam = _partition_from_beta(tuple(new_beta))
        total += (-1) ** height * _mn_value(new_lam, rest)
    return total


def irreducible_character(lam: Partition, mu: Partition) -> int:
    """Value of the irreducible character indexed by lam on the class of cycle type mu."""
    if lam.weight() != mu.weight():
        raise ValueError(f"weights differ: |{lam}| = {lam.weight()}, |{mu}| = {mu.weight()}")
    # strips are removed largest-first; any order is valid, this one memoises well
    return _mn_value(lam.parts, tuple(sorted(mu.parts, reverse=True)))


class ClassFunction:
    """Exact rational function on the conjugacy classes of S_m."""

    __slots__ = ("m", "values")

    def __init__(self, m: int, values: dict[Partition, Fraction]):
        self.m = m
        full = {mu: Fraction(values.get(mu, 0)) for mu in partitions_of(m)}
        if set(values) - set(full):
            raise ValueError("values keyed by non-partitions of m")
        self.values = full

    def __getitem__(self, mu: Partition) -> Fraction:
        return self.values[mu]

    def __eq__(self, other) -> bool:
        return isinstance(other, ClassFunction) and self.m == other.m and self.values == other.values

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        self._check(other)
        return ClassFunction(self.m, {mu: self.values[mu] + other.values[mu] for mu in self.values})

    def __sub__(self, other: "ClassFunction") -> "ClassFunction":
        self._check(other)
        return ClassFunction(self.m, {mu: self.values[mu] - other.values[mu] for mu in self.values})

    def scale(self, c) -> "ClassFunction":
        return ClassFunction(self.m, {mu: Fraction(c) * v for mu, v in self.values.items()})

    def _check(self, other: "ClassFunction") -> None:
        if self.m != other.m:
            raise ValueError(f"class functions on different groups: S_{self.m} vs S_{other.m}")

    def __repr__(self) -> str:
        shown = {str(mu): str(v) for mu, v in self.values.items() if v}
        return f"ClassFunction(m={self.m}, {shown})"


def irreducible_class_function(lam: Partition) -> ClassFunction:
    m = lam.weight()
    return ClassFunction(m, {mu: Fraction(irreducible_character(lam, mu)) for mu in partitions_of(m)})


def inner_product(f: ClassFunction, g: ClassFunction) -> Fraction:
    """(1/m!) sum over classes of size * f * g (characters are real here)."""
    f._check(g)
    total = Fraction(0)
    for cls in conjugacy_classes(f.m):
        total += cls.size * f[cls.cycle_type] * g[cls.cycle_type]
    return total / factorial(f.m)


def decompose(f: ClassFunction) -> dict[Partition, int]:
    """Multiplicities of each irreducible in f; rejects non-characters.

    Raises NonCharacterError if any inner product is non-integral or negative,
    which signals a bug in whatever module produced f.
    """
    out: dict[Partition, int] = {}
    for lam in partitions_of(f.m):
        mult = inner_product(f, irreducible_class_function(lam))
        if mult.denominator != 1 or mult < 0:
            raise NonCharacterError(f"multiplicity of {lam} is {mult}, not a nonnegative integer")
        if mult:
            out[lam] = int(mult)
    # exactness cross-check: dimensions must add up
    dim = f[Partition((1,) * f.m)] if f.m else Fraction(1)
    assert sum(c * hook_length_dimension(lam) for lam, c in out.items()) == dim
    return out


def trivial_character(m: int) -> ClassFunction:
    return ClassFunction(m, {mu: Fraction(1) for mu in partitions_of(m)})


def sign_character(m: int) -> ClassFunction:
    return ClassFunction(m, {mu: Fraction((-1) ** (m - len(mu.parts))) for mu in partitions_of(m)})


def regular_character(m: int) -> ClassFunction:
    values = {mu: Fraction(0) for mu in partitions_of(m)}
    values[Partition((1,) * m)] = Fraction(factorial(m))
    return ClassFunction(m, values)
