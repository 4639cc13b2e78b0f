"""Exact characters for the symplectic group on m tracks of variables.

Everything lives in the Laurent ring Z[x_1^{+-1}, ..., x_m^{+-1}] with integer
coefficients throughout; there is no floating point anywhere.  The irreducible
characters come from two independent routes (tableau generating sums and the
determinant ratio) so that each can audit the other.
"""

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product

from .crystal import pair_multisets, strip_pair_multisets
from .oscillating import SSOT, enumerate_ssot, enumerate_strips
from .tableaux import (
    Partition,
    Weight,
    conjugate,
    enumerate_king,
    is_horizontal_strip,
    king_weight,
    normalize_partition,
    tableaux_of_shape,
)


@dataclass(frozen=True)
class LaurentCharacter:
    """Integer Laurent polynomial, kept as exponent-vector -> coefficient."""

    terms: dict[Weight, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {tuple(e): int(c) for e, c in self.terms.items() if c}
        object.__setattr__(self, "terms", clean)

    @classmethod
    def monomial(cls, exponent: Weight, coeff: int = 1) -> "LaurentCharacter":
        return cls({tuple(exponent): coeff})

    @classmethod
    def one(cls, m: int) -> "LaurentCharacter":
        return cls.monomial((0,) * m)

    def coeff(self, exponent: Weight) -> int:
        return self.terms.get(tuple(exponent), 0)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __neg__(self) -> "LaurentCharacter":
        return LaurentCharacter({e: -c for e, c in self.terms.items()})

    def __add__(self, other: "LaurentCharacter") -> "LaurentCharacter":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentCharacter(out)

    def __sub__(self, other: "LaurentCharacter") -> "LaurentCharacter":
        return self + (-other)

    def __mul__(self, other) -> "LaurentCharacter":
        if isinstance(other, int):
            return LaurentCharacter({e: c * other for e, c in self.terms.items()})
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentCharacter(out)

    __rmul__ = __mul__

    def total(self) -> int:
        """Sum of all coefficients, i.e. the evaluation at every x_k = 1."""
        return sum(self.terms.values())

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            body = "*".join(
                f"x{k + 1}" + (f"^{v}" if v != 1 else "")
                for k, v in enumerate(e)
                if v
            )
            if not body:
                parts.append(str(c))
            elif c == 1:
                parts.append(body)
            elif c == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{c}*{body}")
        return " + ".join(parts).replace("+ -", "- ")


def _monomial_sum(exponents) -> LaurentCharacter:
    acc: Counter = Counter()
    for e in exponents:
        acc[tuple(e)] += 1
    return LaurentCharacter(acc)


def king_character(lam: Partition, m: int) -> LaurentCharacter:
    """Generating sum of the weights of the King tableaux of this shape."""
    return _monomial_sum(king_weight(t, m) for t in enumerate_king(lam, m))


def _odd_determinant(powers: tuple[int, ...]) -> LaurentCharacter:
    """det( x_j^{a_i} - x_j^{-a_i} ) expanded exactly."""
    m = len(powers)
    out: dict = {}
    for perm in permutations(range(m)):
        sign = 1
        for i in range(m):
            for j in range(i + 1, m):
                if perm[i] > perm[j]:
                    sign = -sign
        for signs in product((1, -1), repeat=m):
            e = [0] * m
            c = sign
            for i in range(m):
                e[perm[i]] += signs[i] * powers[i]
                c *= signs[i]
            key = tuple(e)
            out[key] = out.get(key, 0) + c
    return LaurentCharacter(out)


def _divide_exact(num: LaurentCharacter, den: LaurentCharacter) -> LaurentCharacter:
    """Quotient in the Laurent ring; raises unless the division is exact."""
    lead_d = max(den.terms)
    coeff_d = den.terms[lead_d]
    rem = dict(num.terms)
    quot: dict = {}
    for _ in range(100_000):
        if not rem:
            return LaurentCharacter(quot)
        lead = max(rem)
        c, r = divmod(rem[lead], coeff_d)
        if r:
            raise ValueError("leading coefficients do not divide")
        e = tuple(a - b for a, b in zip(lead, lead_d))
        quot[e] = c
        for de, dc in den.terms.items():
            ne = tuple(a + b for a, b in zip(e, de))
            v = rem.get(ne, 0) - c * dc
            if v:
                rem[ne] = v
            else:
                rem.pop(ne, None)
    raise ValueError("division did not terminate; arguments are not a character ratio")


@lru_cache(maxsize=None)
def weyl_character(lam: Partition, m: int) -> LaurentCharacter:
    """Irreducible character from the determinant ratio, computed exactly."""
    lam = normalize_partition(lam)
    if len(lam) > m:
        raise ValueError(f"{lam} has more than {m} rows")
    padded = lam + (0,) * (m - len(lam))
    num = _odd_determinant(tuple(padded[i] + m - i for i in range(m)))
    den = _odd_determinant(tuple(m - i for i in range(m)))
    return _divide_exact(num, den)


def weyl_dimension(lam: Partition, m: int) -> int:
    """Dimension by the product over positive roots, in exact rationals."""
    lam = normalize_partition(lam)
    if len(lam) > m:
        raise ValueError(f"{lam} has more than {m} rows")
    padded = lam + (0,) * (m - len(lam))
    a = [padded[i] + m - i for i in range(m)]  # shifted by the half-sum
    b = [m - i for i in range(m)]
    dim = Fraction(1)
    for i in range(m):
        dim *= Fraction(a[i], b[i])
        for j in range(i + 1, m):
            dim *= Fraction(a[i] - a[j], b[i] - b[j])
            dim *= Fraction(a[i] + a[j], b[i] + b[j])
    if dim.denominator != 1:
        raise AssertionError(f"dimension product is not an integer: {dim}")
    return int(dim)


def schur_eval(mu: Partition, m: int) -> LaurentCharacter:
    """Schur polynomial on the 2m letters x_1..x_m, x_1^-1..x_m^-1."""

    def exponent(t) -> Weight:
        counts = t.content(2 * m)
        return tuple(counts[k] - counts[m + k] for k in range(m))

    return _monomial_sum(exponent(t) for t in tableaux_of_shape(mu, 2 * m))


def elementary_eval(ell: int, m: int) -> LaurentCharacter:
    return schur_eval((1,) * ell, m)


def homogeneous_eval(k: int, m: int) -> LaurentCharacter:
    return schur_eval((k,), m)


def decompose_sp(f: LaurentCharacter, m: int) -> Counter:
    """Exact multiplicities in the irreducible-character basis.

    Peels the lexicographically largest exponent, which for a signed-symmetric
    polynomial is always a dominant weight; coefficients may be negative.
    """
    rem = dict(f.terms)
    out: Counter = Counter()
    while rem:
        lead = max(rem)
        if any(lead[i] < lead[i + 1] for i in range(m - 1)) or (m and lead[-1] < 0):
            raise ValueError(
                f"leading exponent {lead} is not dominant; "
                "input is not symmetric under signed permutations"
            )
        lam = normalize_partition(lead)
        c = rem[lead]
        out[lam] = c
        for e, d in weyl_character(lam, m).terms.items():
            v = rem.get(e, 0) - c * d
            if v:
                rem[e] = v
            else:
                rem.pop(e, None)
    return out


# ---------------------------------------------------------------------------
# Pieri-type counts


def dual_pieri_count(lam: Partition, ell: int, nu: Partition, g: int) -> int:
    """Oscillating strips between the conjugate shapes, peaks at most g wide."""
    target = conjugate(nu)
    return sum(
        1
        for s in enumerate_strips(conjugate(lam), g, size=ell)
        if s.outside == target
    )


def _subpartitions(cap: Partition):
    if not cap:
        yield ()
        return
    for first in range(cap[0] + 1):
        inner_cap = tuple(min(v, first) for v in cap[1:])
        for rest in _subpartitions(inner_cap):
            yield normalize_partition((first, *rest))


def sundaram_h_count(lam: Partition, k: int, nu: Partition) -> int:
    """Shapes under both that leave a horizontal strip to each, k boxes total."""
    lam = normalize_partition(lam)
    nu = normalize_partition(nu)
    cap = tuple(min(a, b) for a, b in zip(lam, nu))
    count = 0
    for delta in _subpartitions(cap):
        if (
            sum(lam) + sum(nu) - 2 * sum(delta) == k
            and is_horizontal_strip(lam, delta)
            and is_horizontal_strip(nu, delta)
        ):
            count += 1
    return count


# ---------------------------------------------------------------------------
# the product formula harness


def _gl_highest(t: SSOT) -> bool:
    """No junction admits a raise, i.e. every index >= 1 has statistic zero."""
    for i in range(1, len(t.strips)):
        c, d = strip_pair_multisets(t, i)
        if pair_multisets(c, d)[1]:
            return False
    return True


def conjecture_lhs(lam: Partition, mu: Partition, nu: Partition, m: int) -> int:
    """Count chains inside conj(lam), outside conj(nu), strip sizes conj(mu),
    peaks at most m wide, with every junction statistic zero."""
    lam, mu, nu = map(normalize_partition, (lam, mu, nu))
    weight = conjugate(mu)
    if not weight:
        return int(lam == nu)
    chains = enumerate_ssot(
        conjugate(nu), len(weight), m, inside=conjugate(lam), weight=weight
    )
    return sum(1 for t in chains if _gl_highest(t))


def conjecture_table(lam: Partition, mu: Partition, m: int) -> Counter:
    """The tableau side of the product formula, grouped by ending partition."""
    lam, mu = normalize_partition(lam), normalize_partition(mu)
    weight = conjugate(mu)
    out: Counter = Counter()
    if not weight:
        out[lam] = 1
        return out

    def rec(k: int, cur: Partition, acc: list) -> None:
        if k == len(weight):
            if _gl_highest(SSOT(tuple(acc))):
                out[conjugate(cur)] += 1
            return
        for strip in enumerate_strips(cur, m, size=weight[k]):
            acc.append(strip)
            rec(k + 1, strip.outside, acc)
            acc.pop()

    rec(0, conjugate(lam), [])
    return out


@dataclass(frozen=True)
class ConjectureReport:
    """Per-ending-shape comparison of tableau counts against multiplicities."""

    lam: Partition
    mu: Partition
    m: int
    mode: str  # "ASSERT" for the proved range, "REPORT" otherwise
    rows: tuple[tuple[Partition, int, int], ...]  # (nu, tableau count, multiplicity)

    @property
    def ok(self) -> bool:
        return all(a == b for _, a, b in self.rows)


def conjecture_verify(lam: Partition, mu: Partition, m: int) -> ConjectureReport:
    lam, mu = normalize_partition(lam), normalize_partition(mu)
    counted = conjecture_table(lam, mu, m)
    expanded = decompose_sp(king_character(lam, m) * schur_eval(mu, m), m)
    keys = sorted(set(counted) | set(expanded), key=lambda p: (sum(p), p))
    rows = tuple((nu, counted.get(nu, 0), expanded.get(nu, 0)) for nu in keys)
    mode = "ASSERT" if (not mu or mu[0] <= 3 or len(mu) == 1) else "REPORT"
    return ConjectureReport(lam, mu, m, mode, rows)
