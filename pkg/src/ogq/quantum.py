"""Gromov-Witten invariants of the maximal orthogonal Grassmannian OG(n)_0.

The ambient space is one component OG(n)_0 of the space of maximal isotropic
subspaces of a 2n-dimensional orthogonal vector space.  Its Schubert classes
tau_lambda are indexed by strict partitions lambda inside {1..n-1}, and the
genus-g degree-d invariants with those insertions are computed by a closed
finite sum: writing m = n-1 and zeta = exp(pi*i/m), the sum runs over the 2^m
admissible evaluation tuples zeta^J, each contributing the (g-1)-th power of
the staircase Schur value S_rho(zeta^J) times the product of the Schubert
polynomials P~_lambda(zeta^J) of the insertions.  Everything is exact: zeta^j
lives in the cyclotomic field of order 4m (the exponents j are half-integers
when m is even, so doubled exponents are used throughout).

The same engine yields the genus-0 three-point numbers, hence the structure
constants of the small quantum cohomology ring, the quantum Euler class, and
an independent trace-formula route to every positive-genus invariant, used to
cross-check the direct sum.
"""

from __future__ import annotations

import dataclasses
from fractions import Fraction
from functools import lru_cache

from . import partitions
from .cyclotomic import CycloNum, NotRationalError, root_of_unity
from .partitions import Partition
from .symfunc import _ptilde_from_elem, elementary_values, schur_value


class UnsupportedRankError(ValueError):
    pass


class NegativeDegreeError(ValueError):
    pass


class GenusTooSmallError(ValueError):
    pass


class NonIntegralResultError(ArithmeticError):
    pass


def session_order(n: int) -> int:
    """Cyclotomic order 4(n-1) carrying all evaluation values for OG(n)_0."""
    return 4 * (n - 1)


@dataclasses.dataclass(frozen=True)
class EvalPoint:
    """One admissible evaluation tuple.

    `doubled` holds the strictly increasing doubled exponents 2*j, so the
    k-th coordinate of `point` is w^(2*j_k) = zeta^(j_k) for w the primitive
    root of order 4m.
    """

    doubled: tuple[int, ...]
    point: tuple[CycloNum, ...]


@lru_cache(maxsize=None)
def eval_points(m: int) -> tuple[EvalPoint, ...]:
    """The 2^m evaluation tuples for m >= 1, in deterministic order.

    The admissible window holds 2m consecutive (half-)integer exponents and
    splits into m antipodal pairs (j, j+m); a tuple picks one member of each
    pair, sorted increasingly.  No two chosen exponents may differ by m
    modulo 2m, which is exactly the one-per-pair condition.
    """
    if m < 1:
        raise UnsupportedRankError("need m >= 1")
    order = 4 * m
    base = [-m + 1 + 2 * i for i in range(m)]
    out = []
    for mask in range(1 << m):
        doubled = tuple(
            sorted(b + 2 * m if mask & (1 << i) else b for i, b in enumerate(base))
        )
        point = tuple(root_of_unity(order, t) for t in doubled)
        out.append(EvalPoint(doubled, point))
    return tuple(out)


@dataclasses.dataclass(frozen=True)
class GWQuery:
    """A single invariant: rank parameter n, genus, degree, insertions."""

    n: int
    genus: int
    degree: int
    insertions: tuple[Partition, ...]

    def __post_init__(self):
        if self.n < 2:
            raise UnsupportedRankError(f"n must be >= 2, got {self.n}")
        if self.genus < 0:
            raise ValueError(f"genus must be >= 0, got {self.genus}")
        if self.degree < 0:
            raise NegativeDegreeError(f"degree must be >= 0, got {self.degree}")
        ins = tuple(partitions.validate(lam, self.n - 1) for lam in self.insertions)
        object.__setattr__(self, "insertions", ins)


def degree_ok(query: GWQuery) -> bool:
    """The weight condition selecting the one admissible degree, if any:
    total insertion weight = n(n-1)(1-g)/2 + 2(n-1)d."""
    n, g, d = query.n, query.genus, query.degree
    want = n * (n - 1) * (1 - g) // 2 + 2 * (n - 1) * d
    return sum(partitions.weight(lam) for lam in query.insertions) == want


@dataclasses.dataclass(frozen=True)
class _PointTable:
    ep: EvalPoint
    ptilde: dict
    schur_rho: CycloNum


@lru_cache(maxsize=None)
def _tables(n: int) -> tuple[_PointTable, ...]:
    # Per evaluation point: all P~ values on the Schubert index set, and the
    # staircase Schur value entering as S^(g-1).
    m = n - 1
    basis = partitions.all_strict(m)
    staircase = partitions.rho(m)
    out = []
    for ep in eval_points(m):
        evals = elementary_values(ep.point)
        values = {lam: _ptilde_from_elem(lam, evals) for lam in basis}
        out.append(_PointTable(ep, values, schur_value(staircase, ep.point)))
    return tuple(out)


@lru_cache(maxsize=None)
def _schur_powers(n: int, exponent: int) -> tuple[CycloNum, ...]:
    return tuple(t.schur_rho ** exponent for t in _tables(n))


@lru_cache(maxsize=None)
def _float_tables(n: int) -> tuple[tuple[dict, complex], ...]:
    # Complex-double image of the cached exact tables, for the float path.
    return tuple(
        ({lam: v.embed_complex() for lam, v in t.ptilde.items()},
         t.schur_rho.embed_complex())
        for t in _tables(n)
    )


def _as_count(value: CycloNum, context: str) -> int:
    try:
        rat = value.as_rational()
    except NotRationalError as exc:
        raise NonIntegralResultError(f"{context}: sum is not rational: {value!r}") from exc
    if rat.denominator != 1 or rat < 0:
        raise NonIntegralResultError(f"{context}: expected a nonnegative integer, got {rat}")
    return int(rat)


def gw_invariant(query: GWQuery) -> int:
    """The genus-g degree-d invariant with the given insertions.

    Zero when the weight condition fails; otherwise 4^d times the sum over
    evaluation tuples of S_rho^(g-1) times the product of insertion values.
    The result is checked to be a nonnegative integer.

    >>> gw_invariant(GWQuery(2, 0, 1, ((1,), (1,), (1,))))
    1
    """
    if not degree_ok(query):
        return 0
    tabs = _tables(query.n)
    spows = _schur_powers(query.n, query.genus - 1)
    total = CycloNum.rational(session_order(query.n), 0)
    for tab, sp in zip(tabs, spows):
        term = sp
        for lam in query.insertions:
            term = term * tab.ptilde[lam]
        total = total + term
    total = total * Fraction(4) ** query.degree
    return _as_count(total, f"invariant {query}")


def gw_invariant_float(query: GWQuery) -> float:
    """Float fast path for the same sum, via the complex embedding."""
    if not degree_ok(query):
        return 0.0
    total = 0j
    for values, schur in _float_tables(query.n):
        term = schur ** (query.genus - 1)
        for lam in query.insertions:
            term *= values[lam]
        total += term
    return (total * 4.0 ** query.degree).real


def three_point(n: int, lam, mu, nu, d: int) -> int:
    """Structure-constant invariant: genus 0, insertions lam, mu and the
    Poincare dual of nu."""
    m = n - 1
    ins = (
        partitions.validate(lam, m),
        partitions.validate(mu, m),
        partitions.dual(nu, m),
    )
    return gw_invariant(GWQuery(n, 0, d, ins))


@dataclasses.dataclass(frozen=True)
class TableEntry:
    lam: Partition
    mu: Partition
    nu: Partition
    d: int
    c: int


@lru_cache(maxsize=None)
def structure_table(n: int, max_d: int | None = None) -> tuple[TableEntry, ...]:
    """All nonzero quantum structure constants c^{nu,d}_{lam,mu} for the
    given n, ordered by (lam, mu, d, nu).

    tau_lam * tau_mu = sum over (nu, d) of c q^d tau_nu, where c is the
    genus-0 three-point number against the dual of nu and the admissible d
    satisfy |nu| = |lam| + |mu| - 2(n-1)d.
    """
    if n < 2:
        raise UnsupportedRankError(f"n must be >= 2, got {n}")
    m = n - 1
    basis = partitions.all_strict(m)
    by_weight: dict[int, list[Partition]] = {}
    for lam in basis:
        by_weight.setdefault(partitions.weight(lam), []).append(lam)
    tabs = _tables(n)
    sinv = _schur_powers(n, -1)
    # vec[lam][J] = S^-1 * P~_lam at point J; reused across all pairs.
    vec = {
        lam: tuple(sp * tab.ptilde[lam] for sp, tab in zip(sinv, tabs))
        for lam in basis
    }
    entries = []
    for i, lam in enumerate(basis):
        for mu in basis[i:]:
            pair = tuple(v * tab.ptilde[mu] for v, tab in zip(vec[lam], tabs))
            wsum = partitions.weight(lam) + partitions.weight(mu)
            d = 0
            while True:
                rest = wsum - 2 * m * d
                if rest < 0 or (max_d is not None and d > max_d):
                    break
                for nu in by_weight.get(rest, ()):
                    dualnu = partitions.dual(nu, m)
                    acc = None
                    for v, tab in zip(pair, tabs):
                        term = v * tab.ptilde[dualnu]
                        acc = term if acc is None else acc + term
                    acc = acc * Fraction(4) ** d
                    c = _as_count(acc, f"structure constant ({lam},{mu},{nu},{d})")
                    if c:
                        entries.append(TableEntry(lam, mu, nu, d, c))
                        if mu != lam:
                            entries.append(TableEntry(mu, lam, nu, d, c))
                d += 1
    entries.sort(key=lambda e: (e.lam, e.mu, e.d, e.nu))
    return tuple(entries)


def table_json_dict(n: int, max_d: int | None = None) -> dict:
    """JSON-ready structure table; coefficients as decimal strings."""
    entries = structure_table(n) if max_d is None else structure_table(n, max_d)
    return {
        "schema": "ogq-table/1",
        "n": n,
        "max_d": max_d,
        "entries": [
            {
                "lambda": partitions.format_partition(e.lam),
                "mu": partitions.format_partition(e.mu),
                "nu": partitions.format_partition(e.nu),
                "d": e.d,
                "c": str(e.c),
            }
            for e in entries
        ],
    }


@lru_cache(maxsize=None)
def _product_lookup(n: int) -> dict:
    lookup: dict[tuple[Partition, Partition], list[TableEntry]] = {}
    for e in structure_table(n):
        lookup.setdefault((e.lam, e.mu), []).append(e)
    return lookup


@dataclasses.dataclass
class QuantumElement:
    """A finite combination sum c * q^d * tau_lambda with Fraction c."""

    terms: dict[tuple[Partition, int], Fraction]

    def __post_init__(self):
        clean = {}
        for (lam, d), c in self.terms.items():
            c = Fraction(c)
            if c:
                clean[(tuple(lam), d)] = c
        self.terms = clean

    @staticmethod
    def basis(lam, d: int = 0) -> "QuantumElement":
        return QuantumElement({(tuple(lam), d): Fraction(1)})

    @staticmethod
    def zero() -> "QuantumElement":
        return QuantumElement({})

    def coefficient(self, lam, d: int = 0) -> Fraction:
        return self.terms.get((tuple(lam), d), Fraction(0))

    def __add__(self, other: "QuantumElement") -> "QuantumElement":
        data = dict(self.terms)
        for key, c in other.terms.items():
            data[key] = data.get(key, Fraction(0)) + c
        return QuantumElement(data)

    def scale(self, factor) -> "QuantumElement":
        return QuantumElement({k: c * Fraction(factor) for k, c in self.terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, QuantumElement):
            return NotImplemented
        return self.terms == other.terms

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        chunks = []
        for (lam, d), c in sorted(self.terms.items(), key=lambda kv: (kv[0][1], kv[0][0])):
            factors = []
            if c != 1:
                factors.append(str(c))
            if d == 1:
                factors.append("q")
            elif d > 1:
                factors.append(f"q^{d}")
            factors.append(f"t[{partitions.format_partition(lam)}]")
            chunks.append("*".join(factors))
        return " + ".join(chunks)


def quantum_product(n: int, a: QuantumElement, b: QuantumElement) -> QuantumElement:
    """Bilinear extension of the basis product read off the structure table."""
    lookup = _product_lookup(n)
    data: dict[tuple[Partition, int], Fraction] = {}
    for (lam, da), ca in a.terms.items():
        for (mu, db), cb in b.terms.items():
            for e in lookup.get((lam, mu), ()):
                key = (e.nu, e.d + da + db)
                data[key] = data.get(key, Fraction(0)) + ca * cb * e.c
    return QuantumElement(data)


def euler_class(n: int) -> QuantumElement:
    """Quantum Euler class at q = 1: sum over the basis of tau_nu times the
    basis element dual under the classical Poincare pairing."""
    m = n - 1
    total = QuantumElement.zero()
    for nu in partitions.all_strict(m):
        prod = quantum_product(
            n, QuantumElement.basis(nu), QuantumElement.basis(partitions.dual(nu, m))
        )
        total = total + prod
    # specialize q = 1: collapse the degree grading
    data: dict[tuple[Partition, int], Fraction] = {}
    for (lam, _d), c in total.terms.items():
        key = (lam, 0)
        data[key] = data.get(key, Fraction(0)) + c
    return QuantumElement(data)


@lru_cache(maxsize=None)
def _mult_trace_weights(n: int) -> dict:
    # trace of multiplication by tau_lam on the q = 1 algebra, per lam
    m = n - 1
    basis = partitions.all_strict(m)
    lookup = _product_lookup(n)
    out = {}
    for lam in basis:
        acc = Fraction(0)
        for b in basis:
            for e in lookup.get((lam, b), ()):
                if e.nu == b:
                    acc += e.c
        out[lam] = acc
    return out


def _q1_multiply(n: int, vec: dict, lam: Partition) -> dict:
    lookup = _product_lookup(n)
    out: dict[Partition, Fraction] = {}
    for b, c in vec.items():
        for e in lookup.get((b, lam), ()):
            out[e.nu] = out.get(e.nu, Fraction(0)) + c * e.c
    return out


def trace_invariant(query: GWQuery) -> int:
    """The same invariant through the finite-dimensional Frobenius algebra:
    the trace of multiplication by E^(g-1) * tau_{lam_1} * ... * tau_{lam_k}
    on the q = 1 quantum cohomology, E the quantum Euler class.

    Only defined for genus >= 1; zero when the weight condition fails.
    """
    if query.genus < 1:
        raise GenusTooSmallError("trace route needs genus >= 1")
    if not degree_ok(query):
        return 0
    n = query.n
    euler = {lam: c for (lam, _d), c in euler_class(n).terms.items()}
    vec: dict[Partition, Fraction] = {(): Fraction(1)}
    for _ in range(query.genus - 1):
        nxt: dict[Partition, Fraction] = {}
        for lam, c in euler.items():
            for b, cb in _q1_multiply(n, vec, lam).items():
                nxt[b] = nxt.get(b, Fraction(0)) + c * cb
        vec = nxt
    for lam in query.insertions:
        vec = _q1_multiply(n, vec, lam)
    weights = _mult_trace_weights(n)
    total = sum((c * weights[lam] for lam, c in vec.items()), Fraction(0))
    if total.denominator != 1 or total < 0:
        raise NonIntegralResultError(f"trace route gave {total} for {query}")
    return int(total)


def genus_recursion_check(n: int, genus: int, degree: int, insertions, s: int) -> bool:
    """Appending 4s staircase insertions while raising the degree by s*n must
    not change the invariant; returns whether the two agree."""
    if s < 0:
        raise ValueError("s must be >= 0")
    base = GWQuery(n, genus, degree, tuple(insertions))
    extended = GWQuery(
        n,
        genus,
        degree + s * n,
        tuple(insertions) + (partitions.rho(n - 1),) * (4 * s),
    )
    return gw_invariant(base) == gw_invariant(extended)
