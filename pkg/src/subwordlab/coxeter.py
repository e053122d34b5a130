"""Finite Coxeter groups with exact root-system arithmetic.

Group elements are stored as signed permutations of the positive roots, so
every group operation is O(N) in the number N of positive roots even for
types whose group order is astronomically larger (E8 has 696729600 elements
but only 120 positive roots).

Conventions:

* generators are named s1..sn and addressed by 1-based index;
* words are tuples of generator indices, positions inside words are 1-based;
* positive roots are addressed by 0-based index, the first ``rank`` of them
  being the simple roots alpha_1..alpha_n;
* in the B family the edge of order four joins s1 and s2.
"""

from __future__ import annotations

import math
import re
from collections import deque
from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .ring import GoldenInt

Word = tuple  # of 1-based generator indices


class CoxeterError(ValueError):
    """Illegal descriptor, or construction data that fails a consistency check."""


class ResourceLimitError(RuntimeError):
    """An enumeration exceeded its configured size cap."""


class SignedRoot(NamedTuple):
    """A positive root index together with a sign, i.e. an element of +-Phi+."""

    root: int
    sign: int


# ---------------------------------------------------------------------------
# Descriptors

_DESCRIPTOR_RE = re.compile(r"^([A-Za-z])\s*(\d+)\s*(?:\(\s*(\d+)\s*\))?$")

_LEGAL_RANKS = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "D": lambda n: n >= 3,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
    "H": lambda n: n in (3, 4),
    "I": lambda n: n == 2,
}


@dataclass(frozen=True)
class GroupDescriptor:
    """An irreducible finite Coxeter type: family, rank, dihedral order for I2."""

    family: str
    rank: int
    dihedral_order: int | None = None

    def name(self) -> str:
        if self.family == "I":
            return f"I2({self.dihedral_order})"
        return f"{self.family}{self.rank}"


def parse_descriptor(text: str) -> GroupDescriptor:
    """Parse a descriptor string such as ``A3``, ``B4``, ``H3`` or ``I2(7)``."""
    match = _DESCRIPTOR_RE.match(text.strip())
    if not match:
        raise CoxeterError(f"cannot parse group descriptor {text!r}")
    family = match.group(1).upper()
    rank = int(match.group(2))
    order = match.group(3)
    if family == "C":
        family = "B"  # identical Coxeter system
    if family == "I":
        if rank != 2 or order is None:
            raise CoxeterError("dihedral descriptors are written I2(m) with m >= 2")
        descriptor = GroupDescriptor("I", 2, int(order))
    else:
        if order is not None:
            raise CoxeterError(f"only I2 takes a parenthesised order: {text!r}")
        descriptor = GroupDescriptor(family, rank)
    validate_descriptor(descriptor)
    return descriptor


def validate_descriptor(descriptor: GroupDescriptor) -> None:
    family, rank = descriptor.family, descriptor.rank
    legal = _LEGAL_RANKS.get(family)
    if legal is None or not legal(rank):
        raise CoxeterError(f"no finite irreducible type {family}{rank}")
    if family == "I":
        if descriptor.dihedral_order is None or descriptor.dihedral_order < 2:
            raise CoxeterError("I2(m) needs m >= 2")
    elif descriptor.dihedral_order is not None:
        raise CoxeterError("only I2 carries a dihedral order")


# ---------------------------------------------------------------------------
# Static type data: graph edges, Cartan entries, degrees, psi

def _graph_edges(d: GroupDescriptor) -> list[tuple[int, int, int]]:
    """Edges (s, t, m(s,t)) with s < t of the Coxeter graph."""
    n = d.rank
    if d.family == "A":
        return [(i, i + 1, 3) for i in range(1, n)]
    if d.family == "B":
        return [(1, 2, 4)] + [(i, i + 1, 3) for i in range(2, n)]
    if d.family == "D":
        return [(i, i + 1, 3) for i in range(1, n - 2)] + [(n - 2, n - 1, 3), (n - 2, n, 3)]
    if d.family == "E":
        if n == 6:
            # Branch node s6; arms s3 | s5,s4 | s2,s1.
            pairs = [(1, 2), (2, 6), (3, 6), (5, 6), (4, 5)]
        elif n == 7:
            pairs = [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (3, 7)]
        else:
            pairs = [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (3, 8)]
        return [(a, b, 3) for a, b in pairs]
    if d.family == "F":
        return [(1, 2, 3), (2, 3, 4), (3, 4, 3)]
    if d.family == "G":
        return [(1, 2, 6)]
    if d.family == "H":
        return [(1, 2, 5)] + [(i, i + 1, 3) for i in range(2, n)]
    if d.family == "I":
        return [(1, 2, d.dihedral_order)]
    raise CoxeterError(f"unknown family {d.family!r}")


def _cartan_pair(m: int):
    """Off-diagonal Cartan entries (a_st, a_ts) for an edge of order m, s < t."""
    if m == 2:
        return 0, 0
    if m == 3:
        return -1, -1
    if m == 4:
        return -2, -1
    if m == 5:
        return -GoldenInt(0, 1), -GoldenInt(0, 1)
    if m == 6:
        return -1, -3
    # General dihedral edge: a_st * a_ts = 4 cos^2(pi/m), floats.
    c = -2.0 * math.cos(math.pi / m)
    return c, c


def _degrees(d: GroupDescriptor) -> tuple[int, ...]:
    n = d.rank
    if d.family == "A":
        return tuple(range(2, n + 2))
    if d.family == "B":
        return tuple(2 * i for i in range(1, n + 1))
    if d.family == "D":
        return tuple(sorted([2 * i for i in range(1, n)] + [n]))
    if d.family == "E":
        return {6: (2, 5, 6, 8, 9, 12),
                7: (2, 6, 8, 10, 12, 14, 18),
                8: (2, 8, 12, 14, 18, 20, 24, 30)}[n]
    if d.family == "F":
        return (2, 6, 8, 12)
    if d.family == "G":
        return (2, 6)
    if d.family == "H":
        return (2, 6, 10) if n == 3 else (2, 12, 20, 30)
    if d.family == "I":
        return tuple(sorted((2, d.dihedral_order)))
    raise CoxeterError(f"unknown family {d.family!r}")


def _psi_table(d: GroupDescriptor) -> tuple[int, ...]:
    n = d.rank
    table = list(range(1, n + 1))
    if d.family == "A":
        table = [n + 1 - i for i in range(1, n + 1)]
    elif d.family == "D" and n % 2 == 1:
        table[n - 2], table[n - 1] = n, n - 1
    elif d.family == "E" and n == 6:
        table = [4, 5, 3, 1, 2, 6]
    elif d.family == "I" and d.dihedral_order % 2 == 1:
        table = [2, 1]
    return tuple(table)


# ---------------------------------------------------------------------------
# Root systems

def _closure_roots(n: int, cartan, expected: int):
    """BFS closure of the simple roots under simple reflections.

    Returns (roots, tables) where tables[t][i] = +-(j+1) encodes
    s_{t+1}(beta_i) = +-beta_j.  Raises if the closure does not have exactly
    ``expected`` elements, which would mean broken Cartan conventions.
    """
    def reflect(vec, t):
        coef = sum(vec[s] * cartan[s][t] for s in range(n) if vec[s])
        out = list(vec)
        out[t] = vec[t] - coef
        return tuple(out)

    simples = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    roots = list(simples)
    index = {root: i for i, root in enumerate(roots)}
    head = 0
    while head < len(roots):
        vec = roots[head]
        for t in range(n):
            if head == t:
                continue  # s_t(alpha_t) = -alpha_t; every other image stays positive
            image = reflect(vec, t)
            if image not in index:
                index[image] = len(roots)
                roots.append(image)
        head += 1
        if len(roots) > expected:
            raise CoxeterError("root closure exceeded the expected count; Cartan conventions are broken")
    if len(roots) != expected:
        raise CoxeterError(f"root closure produced {len(roots)} roots, expected {expected}")

    tables = []
    for t in range(n):
        col = []
        for i, vec in enumerate(roots):
            if i == t:
                col.append(-(t + 1))
            else:
                col.append(index[reflect(vec, t)] + 1)
        tables.append(tuple(col))
    return tuple(roots), tuple(tables)


def _dihedral_root_data(m: int):
    """Roots and reflection tables of I2(m) from the planar angle model.

    Positive roots sit at angles j*pi/m, j = 0..m-1, with alpha_1 at angle 0
    and alpha_2 at angle (m-1)*pi/m.  The reflection tables are exact integer
    data; only the coordinates (in the simple-root basis) are floats.
    """
    theta = math.pi / m
    angles = [0, m - 1] + list(range(1, m - 1))
    pos = {j: p for p, j in enumerate(angles)}
    sin_theta = math.sin(theta)
    coords = {0: (1.0, 0.0), m - 1: (0.0, 1.0)}  # exact simple roots
    for j in range(1, m - 1):
        coords[j] = (
            math.sin((j + 1) * theta) / sin_theta,
            math.sin(j * theta) / sin_theta,
        )
    roots = tuple(coords[j] for j in angles)
    t1, t2 = [], []
    for j in angles:
        t1.append(-(pos[0] + 1) if j == 0 else pos[m - j] + 1)
        t2.append(-(pos[m - 1] + 1) if j == m - 1 else pos[m - 2 - j] + 1)
    return roots, (tuple(t1), tuple(t2))


# ---------------------------------------------------------------------------
# Elements

class Element:
    """A group element as a signed permutation of the positive roots.

    ``image[i] = +-(j+1)`` means the element maps beta_i to +-beta_j.  The
    length function is the number of negative entries.
    """

    __slots__ = ("system", "image")

    def __init__(self, system: "CoxeterSystem", image: tuple[int, ...]):
        self.system = system
        self.image = image

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Element) and self.image == other.image

    def __hash__(self) -> int:
        return hash(self.image)

    def __repr__(self) -> str:
        word = ",".join(f"s{s}" for s in reduced_word(self)) or "e"
        return f"<{self.system.descriptor.name()} element {word}>"

    def __mul__(self, other: "Element") -> "Element":
        a, b = self.image, other.image
        return Element(self.system, tuple(a[v - 1] if v > 0 else -a[-v - 1] for v in b))

    def inverse(self) -> "Element":
        out = [0] * len(self.image)
        for i, v in enumerate(self.image):
            if v > 0:
                out[v - 1] = i + 1
            else:
                out[-v - 1] = -(i + 1)
        return Element(self.system, tuple(out))

    def length(self) -> int:
        return sum(1 for v in self.image if v < 0)

    def is_identity(self) -> bool:
        return all(v == i + 1 for i, v in enumerate(self.image))

    def apply(self, root: int, sign: int = 1) -> SignedRoot:
        v = self.image[root]
        return SignedRoot(abs(v) - 1, sign if v > 0 else -sign)

    def apply_signed(self, signed: SignedRoot) -> SignedRoot:
        return self.apply(signed.root, signed.sign)

    def has_right_descent(self, s: int) -> bool:
        """True iff multiplying by s on the right shortens the element."""
        return self.image[s - 1] < 0

    def times_generator(self, s: int) -> "Element":
        return self * self.system.generators[s - 1]


# ---------------------------------------------------------------------------
# The system

class CoxeterSystem:
    """Immutable bundle of Coxeter matrix, Cartan data, roots and reflection tables."""

    def __init__(self, descriptor: GroupDescriptor | str):
        if isinstance(descriptor, str):
            descriptor = parse_descriptor(descriptor)
        validate_descriptor(descriptor)
        self.descriptor = descriptor
        n = descriptor.rank
        self.rank = n

        edges = _graph_edges(descriptor)
        matrix = [[2] * n for _ in range(n)]
        cartan = [[0] * n for _ in range(n)]
        for i in range(n):
            matrix[i][i] = 1
            cartan[i][i] = 2
        for s, t, m in edges:
            matrix[s - 1][t - 1] = matrix[t - 1][s - 1] = m
            a_st, a_ts = _cartan_pair(m)
            cartan[s - 1][t - 1] = a_st
            cartan[t - 1][s - 1] = a_ts
        self.coxeter_matrix = tuple(tuple(row) for row in matrix)
        self.cartan = tuple(tuple(row) for row in cartan)
        self.neighbors = tuple(
            tuple(t + 1 for t in range(n) if t != s and matrix[s][t] >= 3)
            for s in range(n)
        )

        self.degrees = _degrees(descriptor)
        self.coxeter_number = self.degrees[-1]
        self.number_of_positive_roots = n * self.coxeter_number // 2
        if sum(d - 1 for d in self.degrees) != self.number_of_positive_roots:
            raise CoxeterError("degree table inconsistent with nh/2")

        self.exact = not (
            descriptor.family == "I" and descriptor.dihedral_order not in (2, 3, 4, 5, 6)
        )
        if self.exact:
            self.positive_roots, self.reflection_tables = _closure_roots(
                n, self.cartan, self.number_of_positive_roots
            )
        else:
            self.positive_roots, self.reflection_tables = _dihedral_root_data(
                descriptor.dihedral_order
            )

        self.generators = tuple(
            Element(self, self.reflection_tables[s]) for s in range(n)
        )
        self.identity = Element(
            self, tuple(range(1, self.number_of_positive_roots + 1))
        )
        self.psi_table = _psi_table(descriptor)
        self._w0: Element | None = None
        self._check_psi_table()

    # -- basic queries ------------------------------------------------------

    def generator(self, s: int) -> Element:
        return self.generators[s - 1]

    def root_vector(self, root: int):
        return self.positive_roots[root]

    def commute(self, s: int, t: int) -> bool:
        return self.coxeter_matrix[s - 1][t - 1] == 2

    def simple_root(self, s: int) -> SignedRoot:
        return SignedRoot(s - 1, 1)

    def __repr__(self) -> str:
        return f"CoxeterSystem({self.descriptor.name()!r})"

    def _check_psi_table(self) -> None:
        w0 = longest_element(self)
        w0_inv = w0.inverse()
        for s in range(1, self.rank + 1):
            conjugate = w0_inv * self.generator(s) * w0
            if conjugate != self.generator(self.psi_table[s - 1]):
                raise CoxeterError(
                    f"psi table disagrees with conjugation by the longest element at s{s}"
                )


def build_system(descriptor: GroupDescriptor | str) -> CoxeterSystem:
    """Build the full system for a descriptor (string or GroupDescriptor)."""
    return CoxeterSystem(descriptor)


class RootSystem(NamedTuple):
    """Positive roots (coefficient vectors) and per-generator reflection tables."""

    positive_roots: tuple
    reflection_tables: tuple


def build_root_system(system: CoxeterSystem) -> RootSystem:
    return RootSystem(system.positive_roots, system.reflection_tables)


# ---------------------------------------------------------------------------
# Words and element arithmetic

def parse_word(text: str) -> Word:
    """Parse ``s1,s3,s2`` (or ``1,3,2``) into a word tuple."""
    text = text.strip()
    if not text:
        return ()
    letters = []
    for chunk in text.split(","):
        chunk = chunk.strip().lower()
        if chunk.startswith("s"):
            chunk = chunk[1:]
        if not chunk.isdigit():
            raise CoxeterError(f"bad generator name {chunk!r}")
        letters.append(int(chunk))
    return tuple(letters)


def format_word(word: Word) -> str:
    return ",".join(f"s{s}" for s in word)


def check_word(system: CoxeterSystem, word: Word) -> None:
    for s in word:
        if not 1 <= s <= system.rank:
            raise CoxeterError(f"generator s{s} out of range for {system.descriptor.name()}")


def element_from_word(system: CoxeterSystem, word: Word) -> Element:
    """The product of the letters of ``word``, multiplied left to right."""
    check_word(system, word)
    out = system.identity
    for s in word:
        out = out * system.generators[s - 1]
    return out


def length(w: Element) -> int:
    return w.length()


def is_reduced(system: CoxeterSystem, word: Word) -> bool:
    return element_from_word(system, word).length() == len(word)


def reduced_word(w: Element) -> Word:
    """The canonical reduced word: repeatedly strip the smallest left descent."""
    system = w.system
    out = []
    rest = w.inverse()  # rest = v^{-1} for the still-unwritten suffix v
    while not rest.is_identity():
        for s in range(1, system.rank + 1):
            if rest.image[s - 1] < 0:  # s is a left descent of v
                out.append(s)
                rest = rest * system.generators[s - 1]
                break
        else:
            raise CoxeterError("non-identity element without left descent")
    return tuple(out)


def demazure_product(system: CoxeterSystem, word: Word) -> Element:
    """Greedy ascent-only product: letters are kept only when they lengthen."""
    check_word(system, word)
    out = system.identity
    for s in word:
        if out.image[s - 1] > 0:
            out = out * system.generators[s - 1]
    return out


def longest_element(system: CoxeterSystem) -> Element:
    if system._w0 is None:
        w = system.identity
        for _ in range(system.number_of_positive_roots):
            for s in range(1, system.rank + 1):
                if w.image[s - 1] > 0:
                    w = w * system.generators[s - 1]
                    break
        if w.length() != system.number_of_positive_roots:
            raise CoxeterError("failed to reach the longest element")
        system._w0 = w
    return system._w0


def psi(system: CoxeterSystem, s: int) -> int:
    """The diagram automorphism s -> w0^{-1} s w0."""
    return system.psi_table[s - 1]


def psi_word(system: CoxeterSystem, word: Word) -> Word:
    return tuple(system.psi_table[s - 1] for s in word)


def inversion_set(w: Element) -> frozenset[int]:
    """Indices of the positive roots sent negative by w^{-1}."""
    inv = w.inverse()
    return frozenset(i for i, v in enumerate(inv.image) if v < 0)


def element_order(w: Element) -> int:
    power = w
    order = 1
    while not power.is_identity():
        power = power * w
        order += 1
        if order > 2 * len(w.image) ** 2:
            raise CoxeterError("runaway order computation")
    return order


# ---------------------------------------------------------------------------
# Coxeter words

def enumerate_coxeter_words(system: CoxeterSystem) -> tuple[Word, ...]:
    """One canonical word per acyclic orientation of the Coxeter graph.

    The canonical word is the lexicographically least linear extension of the
    orientation.  The Coxeter graphs here are trees, so every orientation of
    the edges is acyclic and there are 2^(#edges) of them.
    """
    n = system.rank
    edges = [
        (s, t)
        for s in range(1, n + 1)
        for t in system.neighbors[s - 1]
        if s < t
    ]
    words = []
    for mask in range(1 << len(edges)):
        succ = {s: [] for s in range(1, n + 1)}
        indegree = {s: 0 for s in range(1, n + 1)}
        for bit, (s, t) in enumerate(edges):
            a, b = (s, t) if not mask >> bit & 1 else (t, s)
            succ[a].append(b)
            indegree[b] += 1
        avail = sorted(s for s in range(1, n + 1) if indegree[s] == 0)
        word = []
        while avail:
            s = avail.pop(0)
            word.append(s)
            for t in succ[s]:
                indegree[t] -= 1
                if indegree[t] == 0:
                    avail.append(t)
            avail.sort()
        words.append(tuple(word))
    return tuple(sorted(words))


def check_coxeter_word(system: CoxeterSystem, word: Word) -> None:
    check_word(system, word)
    if sorted(word) != list(range(1, system.rank + 1)):
        raise CoxeterError(f"{format_word(word)} is not a word for a Coxeter element")


# ---------------------------------------------------------------------------
# Commutation classes

def commutation_layers(system: CoxeterSystem, word: Word) -> tuple[tuple[int, ...], ...]:
    """Canonical form of the commutation class of ``word``.

    Greedy layering: each letter lands one past the deepest earlier letter it
    fails to commute with (same letters never commute).  Words are equal up
    to commutations iff their layer sequences are equal, so this is a total,
    cap-free decision procedure.
    """
    check_word(system, word)
    level = [0] * (system.rank + 1)
    layers: list[list[int]] = []
    for s in word:
        depth = level[s]
        for t in system.neighbors[s - 1]:
            if level[t] > depth:
                depth = level[t]
        depth += 1
        level[s] = depth
        while len(layers) < depth:
            layers.append([])
        layers[depth - 1].append(s)
    return tuple(tuple(sorted(layer)) for layer in layers)


def equal_up_to_commutations(system: CoxeterSystem, word: Word, other: Word) -> bool:
    """True iff the words are linked by swaps of adjacent commuting letters."""
    if len(word) != len(other):
        return False
    return commutation_layers(system, word) == commutation_layers(system, other)


def commutation_class(
    system: CoxeterSystem, word: Word, max_size: int = 1_000_000
) -> frozenset[Word]:
    """Every word reachable by swaps of adjacent commuting letters (BFS).

    Kept as the brute-force counterpart of ``commutation_layers``; raises
    ResourceLimitError rather than ever returning a truncated answer.
    """
    check_word(system, word)
    seen = {tuple(word)}
    queue = deque(seen)
    while queue:
        current = queue.popleft()
        for i in range(len(current) - 1):
            s, t = current[i], current[i + 1]
            if s != t and system.commute(s, t):
                swapped = current[:i] + (t, s) + current[i + 2:]
                if swapped not in seen:
                    if len(seen) >= max_size:
                        raise ResourceLimitError(
                            f"commutation class exceeds {max_size} words"
                        )
                    seen.add(swapped)
                    queue.append(swapped)
    return frozenset(seen)


def commutation_position_map(
    system: CoxeterSystem, word: Word, other: Word
) -> tuple[int, ...]:
    """Position bijection realizing a commutation equivalence.

    Entry p-1 holds the position in ``other`` of the letter at position p of
    ``word``; letters are matched by their (layer, generator) pair, which is
    injective because a layer never repeats a generator.
    """
    if not equal_up_to_commutations(system, word, other):
        raise CoxeterError("words are not equal up to commutations")

    def keys(w: Word) -> list[tuple[int, int]]:
        level = [0] * (system.rank + 1)
        out = []
        for s in w:
            depth = level[s]
            for t in system.neighbors[s - 1]:
                if level[t] > depth:
                    depth = level[t]
            depth += 1
            level[s] = depth
            out.append((depth, s))
        return out

    target = {key: p + 1 for p, key in enumerate(keys(other))}
    return tuple(target[key] for key in keys(word))


def format_root(system: CoxeterSystem, signed: SignedRoot) -> str:
    """Human-readable form of a signed root, e.g. ``a1+2*a2`` or ``-a1``."""
    vec = system.positive_roots[signed.root]
    parts = []
    for i, c in enumerate(vec):
        if c == 0:
            continue
        name = f"a{i + 1}"
        if c == 1:
            parts.append(name)
        else:
            parts.append(f"{c}*{name}")
    body = "+".join(parts)
    return body if signed.sign > 0 else f"-({body})" if len(parts) > 1 else f"-{body}"


def iter_all_words(system: CoxeterSystem, length_: int) -> Iterator[Word]:
    """All n^length words of a fixed length, lexicographic order."""
    n = system.rank
    word = [1] * length_
    if length_ == 0:
        yield ()
        return
    while True:
        yield tuple(word)
        i = length_ - 1
        while i >= 0 and word[i] == n:
            word[i] = 1
            i -= 1
        if i < 0:
            return
        word[i] += 1
