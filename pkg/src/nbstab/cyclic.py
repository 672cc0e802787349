"""Cyclic codes from defining sets of exponents."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from .additive import AdditiveCode
from .errors import NotCoprime, NotCosetClosed
from .gf import Field, Poly, embedding, nth_root_of_unity, poly_from_roots


def coset_of(x: int, n: int, mult: int) -> tuple[int, ...]:
    """Orbit of ``x`` under multiplication by ``mult`` modulo ``n``, sorted."""
    out, y = set(), x % n
    while y not in out:
        out.add(y)
        y = y * mult % n
    return tuple(sorted(out))


def cyclotomic_cosets(n: int, mult: int) -> list[tuple[int, ...]]:
    """Partition of Z/n into orbits of ``x -> mult * x``, ordered by smallest element."""
    if math.gcd(n, mult) != 1:
        raise NotCoprime(f"gcd({n}, {mult}) != 1")
    seen: set[int] = set()
    out = []
    for x in range(n):
        if x not in seen:
            c = coset_of(x, n, mult)
            seen.update(c)
            out.append(c)
    return out


def union_of_cosets(reps: Iterable[int], n: int, mult: int) -> tuple[int, ...]:
    z: set[int] = set()
    for r in reps:
        z.update(coset_of(r, n, mult))
    return tuple(sorted(z))


def is_coset_closed(z: Iterable[int], n: int, mult: int) -> bool:
    zs = set(x % n for x in z)
    return all(x * mult % n in zs for x in zs)


def hermitian_self_orthogonal(z: Iterable[int], n: int, q: int) -> bool:
    """Defining-set test for a cyclic code over F_{q^2} to contain its
    hermitian dual: ``Z`` and ``-qZ`` are disjoint."""
    zs = set(x % n for x in z)
    return not zs & {(-q * x) % n for x in zs}


def hermitian_self_orthogonal_alt(z: Iterable[int], n: int, q: int) -> bool:
    """Equivalent form: ``Z`` lies in ``-q`` times its complement."""
    zs = set(x % n for x in z)
    comp = set(range(n)) - zs
    return zs <= {(-q * x) % n for x in comp}


def euclidean_self_orthogonal(z: Iterable[int], n: int) -> bool:
    """A cyclic code contains its euclidean dual iff ``Z`` and ``-Z`` are disjoint."""
    zs = set(x % n for x in z)
    return not zs & {(-x) % n for x in zs}


@dataclass(frozen=True)
class CyclicCode:
    """Cyclic code of length ``n`` over ``field`` with zeros ``beta^z`` for z in
    ``defining_set``."""

    n: int
    field: Field
    defining_set: tuple[int, ...]
    ext: Field
    beta: int
    generator: Poly

    @property
    def dimension(self) -> int:
        return self.n - len(self.defining_set)

    def generator_matrix(self) -> list[list[int]]:
        g = list(self.generator.coeffs)
        rows = []
        for i in range(self.dimension):
            row = [0] * self.n
            row[i : i + len(g)] = g
            rows.append(row)
        return rows

    def code(self, flavor: str = "classical") -> AdditiveCode:
        """The code as a linear :class:`AdditiveCode`."""
        return AdditiveCode.linear(self.field, flavor, self.n, self.generator_matrix())

    def to_json(self) -> dict:
        F = self.field
        return {
            "n": self.n,
            "field": F.to_json(),
            "defining_set": list(self.defining_set),
            "generator": [F.coeffs(c) for c in self.generator.coeffs],
        }


def build_cyclic(n: int, field: Field, defining_set: Iterable[int]) -> CyclicCode:
    """Generator polynomial ``prod_{z in Z} (x - beta^z)`` mapped back into
    ``field``; ``Z`` must be closed under multiplication by ``|field|``."""
    z = tuple(sorted(set(x % n for x in defining_set)))
    q = field.order
    if math.gcd(n, q) != 1:
        raise NotCoprime(f"gcd({n}, {q}) != 1")
    if not is_coset_closed(z, n, q):
        raise NotCosetClosed(f"defining set is not a union of cyclotomic cosets mod {n}")
    ext, beta = nth_root_of_unity(field, n)
    g = poly_from_roots(ext, [ext.pow(beta, x) for x in z])
    emb = embedding(field, ext)
    gen = Poly(field, tuple(emb.back(c) for c in g.coeffs))
    return CyclicCode(n, field, z, ext, beta, gen)
