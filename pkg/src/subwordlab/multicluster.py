"""Multi-cluster complexes and their combinatorial models.

Covers the almost-positive-root labeling of the letters of c * w0(c), the
induced compatibility relation, the reflection-product facet criterion, the
next-occurrence cyclic action, the polygon bijections in types A and B,
Gale-evenness facets in rank two, and the q-analogue of the facet-count
product formula.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .coxeter import (
    CoxeterError,
    CoxeterSystem,
    Element,
    SignedRoot,
    Word,
    check_coxeter_word,
    element_from_word,
    format_root,
    longest_element,
)
from .sorting import sorting_word_w0
from .subword import Facet, is_face, subword_complex

Diagonal = tuple  # (a, b) vertex labels, a < b


# ---------------------------------------------------------------------------
# Words and labels

def multi_cluster_word(system: CoxeterSystem, cox: Word, k: int) -> Word:
    """k copies of c followed by the sorting word of the longest element."""
    check_coxeter_word(system, cox)
    if k < 0:
        raise CoxeterError("the number of copies must be nonnegative")
    return tuple(cox) * k + sorting_word_w0(system, cox).word


def negative_simple(system: CoxeterSystem, s: int) -> SignedRoot:
    """The almost positive root -alpha_s."""
    if not 1 <= s <= system.rank:
        raise CoxeterError(f"generator s{s} out of range")
    return SignedRoot(s - 1, -1)


def almost_positive_roots(system: CoxeterSystem) -> tuple[SignedRoot, ...]:
    """All N + n almost positive roots: negated simples first, then positives."""
    negatives = [SignedRoot(s, -1) for s in range(system.rank)]
    positives = [SignedRoot(i, 1) for i in range(system.number_of_positive_roots)]
    return tuple(negatives + positives)


@lru_cache(maxsize=None)
def lr_labels(system: CoxeterSystem, cox: Word) -> tuple[SignedRoot, ...]:
    """Almost positive roots labeling the letters of c * w0(c), in word order.

    Prefix letters carry the negated simples; the letter w_i of the sorting
    word carries w_1...w_{i-1}(alpha_{w_i}).
    """
    check_coxeter_word(system, cox)
    labels = [SignedRoot(s - 1, -1) for s in cox]
    prefix = system.identity
    for s in sorting_word_w0(system, cox).word:
        labels.append(prefix.apply(s - 1))
        prefix = prefix * system.generators[s - 1]
    return tuple(labels)


def lr_position(system: CoxeterSystem, cox: Word, root: SignedRoot) -> int:
    """1-based position of an almost positive root among the letters of c*w0(c)."""
    labels = lr_labels(system, cox)
    try:
        return labels.index(root) + 1
    except ValueError:
        raise CoxeterError(f"{root} is not an almost positive root label") from None


@lru_cache(maxsize=None)
def _cluster_complex(system: CoxeterSystem, cox: Word):
    return subword_complex(
        system, multi_cluster_word(system, cox, 1), longest_element(system)
    )


def c_compatible(
    system: CoxeterSystem, cox: Word, root1: SignedRoot, root2: SignedRoot
) -> bool:
    """Compatibility of two almost positive roots relative to a Coxeter word."""
    if root1 == root2:
        raise CoxeterError("compatibility is a relation on distinct roots")
    positions = (lr_position(system, cox, root1), lr_position(system, cox, root2))
    complex_ = _cluster_complex(system, cox)
    return complex_.is_face(positions)


def sigma_involution(
    system: CoxeterSystem, s: int, root: SignedRoot
) -> SignedRoot:
    """Involution on almost positive roots: fix -alpha_t for t != s, else apply s."""
    if root.sign < 0:
        if root.root >= system.rank:
            raise CoxeterError("negated roots must be simple")
        if root.root != s - 1:
            return root
        return SignedRoot(root.root, 1)
    image = system.generators[s - 1].apply(root.root)
    if image.sign < 0:
        # Only alpha_s is sent negative, landing on -alpha_s.
        return SignedRoot(image.root, -1)
    return image


def format_almost_positive(system: CoxeterSystem, root: SignedRoot) -> str:
    return format_root(system, root)


# ---------------------------------------------------------------------------
# Reflection criterion for facets

def reflection_sequence(system: CoxeterSystem, word: Word) -> tuple[Element, ...]:
    """Reflections t_i = q_1...q_{i-1} q_i q_{i-1}...q_1 along a word."""
    out = []
    prefix = system.identity
    for s in word:
        generator = system.generators[s - 1]
        out.append(prefix * generator * prefix.inverse())
        prefix = prefix * generator
    return tuple(out)


def is_facet_by_reflections(
    system: CoxeterSystem, cox: Word, k: int, positions
) -> bool:
    """Facet test: the reflections at the chosen positions, multiplied in
    decreasing position order, must equal c^k."""
    word = multi_cluster_word(system, cox, k)
    chosen = tuple(sorted(positions))
    if len(chosen) != k * system.rank:
        raise CoxeterError(f"a facet candidate needs exactly {k * system.rank} positions")
    if len(set(chosen)) != len(chosen) or chosen and (
        chosen[0] < 1 or chosen[-1] > len(word)
    ):
        raise CoxeterError("bad position set")
    reflections = reflection_sequence(system, word)
    product = system.identity
    for p in reversed(chosen):
        product = product * reflections[p - 1]
    coxeter_element = element_from_word(system, cox)
    power = system.identity
    for _ in range(k):
        power = power * coxeter_element
    return product == power


# ---------------------------------------------------------------------------
# The next-occurrence cyclic action

def theta_permutation(system: CoxeterSystem, cox: Word, k: int) -> tuple[int, ...]:
    """Position permutation: each letter moves to the next occurrence of the
    same generator, wrapping to the first occurrence of psi(s).

    Entry p-1 holds the image of position p (1-based).
    """
    word = multi_cluster_word(system, cox, k)
    out = []
    for p, s in enumerate(word, start=1):
        later = [q for q in range(p + 1, len(word) + 1) if word[q - 1] == s]
        if later:
            out.append(later[0])
        else:
            partner = system.psi_table[s - 1]
            out.append(next(q for q, x in enumerate(word, start=1) if x == partner))
    return tuple(out)


def permutation_order(perm: tuple[int, ...]) -> int:
    order = 1
    current = perm
    identity = tuple(range(1, len(perm) + 1))
    while current != identity:
        current = tuple(perm[p - 1] for p in current)
        order += 1
        if order > len(perm) ** 2 + 1:
            raise CoxeterError("runaway permutation order")
    return order


def theta_order_formula(system: CoxeterSystem, k: int) -> int:
    """k + h/2 when the longest element is central, 2k + h otherwise."""
    h = system.coxeter_number
    if all(system.psi_table[s] == s + 1 for s in range(system.rank)):
        return k + h // 2
    return 2 * k + h


def apply_permutation_to_set(perm: tuple[int, ...], positions) -> Facet:
    return tuple(sorted(perm[p - 1] for p in positions))


def theta_orbits_on_facets(
    system: CoxeterSystem, cox: Word, k: int
) -> tuple[tuple[Facet, ...], ...]:
    """Partition of the facets into orbits of the next-occurrence action."""
    complex_ = subword_complex(
        system, multi_cluster_word(system, cox, k), longest_element(system)
    )
    perm = theta_permutation(system, cox, k)
    facet_set = set(complex_.facets)
    seen: set[Facet] = set()
    orbits = []
    for facet in complex_.facets:
        if facet in seen:
            continue
        orbit = [facet]
        seen.add(facet)
        current = apply_permutation_to_set(perm, facet)
        while current != facet:
            if current not in facet_set:
                raise CoxeterError("the action failed to map a facet to a facet")
            orbit.append(current)
            seen.add(current)
            current = apply_permutation_to_set(perm, current)
        orbits.append(tuple(orbit))
    return tuple(orbits)


# ---------------------------------------------------------------------------
# Polygon models, types A and B

def _copy_indices(word: Word) -> tuple[int, ...]:
    """For each position, how many earlier occurrences of its letter exist."""
    seen: dict[int, int] = {}
    out = []
    for s in word:
        seen[s] = seen.get(s, 0) + 1
        out.append(seen[s])
    return tuple(out)


def _ascent_descent_counts(cox: Word, n: int) -> tuple[list[int], list[int]]:
    position = {s: i for i, s in enumerate(cox)}
    ascents = [0] * (n + 1)
    descents = [0] * (n + 1)
    for i in range(2, n + 1):
        ascents[i] = ascents[i - 1] + (1 if position[i - 1] < position[i] else 0)
        descents[i] = descents[i - 1] + (1 if position[i - 1] > position[i] else 0)
    return ascents, descents


def type_a_bijection(m: int, k: int, cox: Word) -> tuple[Diagonal, ...]:
    """Positions of the type-A multi-cluster word to diagonals of the m-gon.

    The letter s_i seeds the diagonal [a_i, b_i]; its l-th copy is that
    diagonal rotated l-1 steps clockwise (vertex labels +1 mod m).
    """
    n = m - 2 * k - 1
    if n < 1:
        raise CoxeterError("need m >= 2k + 2")
    system = _system_cached(f"A{n}")
    check_coxeter_word(system, cox)
    word = multi_cluster_word(system, cox, k)
    ascents, descents = _ascent_descent_counts(cox, n)
    seeds = {
        i: (ascents[i] % m, (-k - 1 - descents[i]) % m) for i in range(1, n + 1)
    }
    copies = _copy_indices(word)
    out = []
    for p, s in enumerate(word):
        a, b = seeds[s]
        shift = copies[p] - 1
        out.append(_normalize_diagonal((a + shift) % m, (b + shift) % m))
    return tuple(out)


def _normalize_diagonal(a: int, b: int) -> Diagonal:
    return (a, b) if a < b else (b, a)


def diagonal_is_relevant(m: int, k: int, diagonal: Diagonal) -> bool:
    """At least k polygon vertices strictly on each side."""
    a, b = diagonal
    gap = (b - a) % m
    return gap - 1 >= k and m - gap - 1 >= k


def diagonals_cross(m: int, d1: Diagonal, d2: Diagonal) -> bool:
    """Strict crossing: endpoints interleave cyclically, no shared vertex."""
    a, b = d1
    x, y = d2
    if {a, b} & {x, y}:
        return False

    def inside(v: int) -> bool:
        return 0 < (v - a) % m < (b - a) % m

    return inside(x) != inside(y)


def contains_pairwise_crossing(m: int, count: int, diagonals) -> bool:
    """Is there a subset of ``count`` pairwise-crossing diagonals?"""
    items = list(diagonals)
    adjacency = [
        {j for j, e in enumerate(items) if j != i and diagonals_cross(m, d, e)}
        for i, d in enumerate(items)
    ]

    def extend(clique: list[int], candidates: set[int]) -> bool:
        if len(clique) == count:
            return True
        if len(clique) + len(candidates) < count:
            return False
        for j in sorted(candidates):
            if extend(clique + [j], candidates & adjacency[j] & set(range(j + 1, len(items)))):
                return True
        return False

    return extend([], set(range(len(items))))


def type_b_bijection(m: int, k: int, cox: Word) -> tuple[frozenset, ...]:
    """Positions of the type-B multi-cluster word to symmetric diagonal pairs
    of the 2m-gon (a singleton frozenset for diameters)."""
    n = m - k
    if n < 2:
        raise CoxeterError("need m >= k + 2")
    system = _system_cached(f"B{n}")
    check_coxeter_word(system, cox)
    word = multi_cluster_word(system, cox, k)
    ascents, descents = _ascent_descent_counts(cox, n)
    seeds = {i: (ascents[i], m - descents[i]) for i in range(1, n + 1)}
    copies = _copy_indices(word)
    out = []
    for p, s in enumerate(word):
        a, b = seeds[s]
        shift = copies[p] - 1
        pair = frozenset(
            {
                _normalize_diagonal((a + shift) % (2 * m), (b + shift) % (2 * m)),
                _normalize_diagonal((a + m + shift) % (2 * m), (b + m + shift) % (2 * m)),
            }
        )
        out.append(pair)
    return tuple(out)


@lru_cache(maxsize=None)
def _system_cached(name: str) -> CoxeterSystem:
    return CoxeterSystem(name)


# ---------------------------------------------------------------------------
# Rank-two facets by Gale evenness

def gale_facets_rank2(m: int, k: int) -> tuple[Facet, ...]:
    """2k-subsets of 1..2k+m where any two outside positions are separated by
    an even count of inside positions; these are the rank-two facets."""
    total = 2 * k + m
    out = []
    for subset in combinations(range(1, total + 1), 2 * k):
        inside = set(subset)
        outside = [p for p in range(1, total + 1) if p not in inside]
        ok = True
        for i in range(len(outside) - 1):
            for j in range(i + 1, len(outside)):
                between = sum(
                    1 for p in range(outside[i] + 1, outside[j]) if p in inside
                )
                if between % 2:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(subset)
    return tuple(sorted(out))


# ---------------------------------------------------------------------------
# Counting formula and its q-analogue

def facet_count_formula(system: CoxeterSystem, k: int) -> Fraction:
    """Product over degrees: (d_i + h + 2j) / (d_i + 2j) for 0 <= j < k."""
    value = Fraction(1)
    h = system.coxeter_number
    for j in range(k):
        for d in system.degrees:
            value *= Fraction(d + h + 2 * j, d + 2 * j)
    return value


@dataclass(frozen=True)
class CspPolynomial:
    """q-analogue of the count formula; ``coefficients`` is None when the
    quotient of q-integer products is not a polynomial over the integers."""

    coefficients: tuple[int, ...] | None

    @property
    def defined(self) -> bool:
        return self.coefficients is not None

    def evaluate(self, q: complex) -> complex:
        if self.coefficients is None:
            raise CoxeterError("the q-analogue is not a polynomial")
        value: complex = 0
        for c in reversed(self.coefficients):
            value = value * q + c
        return value

    def value_at_one(self) -> int:
        if self.coefficients is None:
            raise CoxeterError("the q-analogue is not a polynomial")
        return sum(self.coefficients)


def _q_integer(m: int) -> list[int]:
    return [1] * m


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_divmod(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    num = list(num)
    quotient = [0] * (len(num) - len(den) + 1)
    lead = den[-1]
    for shift in range(len(quotient) - 1, -1, -1):
        coef, remainder = divmod(num[shift + len(den) - 1], lead)
        if remainder:
            return quotient, num  # not divisible over the integers
        if coef:
            quotient[shift] = coef
            for j, y in enumerate(den):
                num[shift + j] -= coef * y
    while num and num[-1] == 0:
        num.pop()
    return quotient, num


def csp_polynomial(system: CoxeterSystem, k: int) -> CspPolynomial:
    numerator = [1]
    denominator = [1]
    h = system.coxeter_number
    for j in range(k):
        for d in system.degrees:
            numerator = _poly_mul(numerator, _q_integer(d + h + 2 * j))
            denominator = _poly_mul(denominator, _q_integer(d + 2 * j))
    quotient, remainder = _poly_divmod(numerator, denominator)
    if remainder:
        return CspPolynomial(None)
    return CspPolynomial(tuple(quotient))


def csp_fixed_point_table(
    system: CoxeterSystem, cox: Word, k: int
) -> tuple[tuple[int, int], ...]:
    """Rows (fixed facet count of the d-th power, rounded polynomial value).

    The cyclic group has order 2k + h; its d-th element acts as the d-th
    power of the next-occurrence action, and the polynomial is evaluated at
    exp(2 pi i d / (2k + h)) with tolerance 1e-9.
    """
    order = 2 * k + system.coxeter_number
    complex_ = subword_complex(
        system, multi_cluster_word(system, cox, k), longest_element(system)
    )
    perm = theta_permutation(system, cox, k)
    poly = csp_polynomial(system, k)
    rows = []
    power = tuple(range(1, len(perm) + 1))
    for d in range(order):
        fixed = sum(
            1
            for facet in complex_.facets
            if apply_permutation_to_set(power, facet) == facet
        )
        value = poly.evaluate(cmath.exp(2j * cmath.pi * d / order))
        rounded = round(value.real)
        if abs(value - rounded) > 1e-9:
            raise CoxeterError("root-of-unity evaluation is not close to an integer")
        rows.append((fixed, rounded))
        power = tuple(perm[p - 1] for p in power)
    return tuple(rows)
