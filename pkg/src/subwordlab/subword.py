"""Subword complexes: face tests, facet enumeration, root functions, flips.

The complex on a word Q with target element pi has as faces the position
sets whose complement in Q still contains a reduced word for pi.  Positions
are 1-based throughout, facets are sorted position tuples, and the facet
list is sorted lexicographically so all outputs are deterministic.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .coxeter import (
    CoxeterError,
    CoxeterSystem,
    Element,
    ResourceLimitError,
    SignedRoot,
    Word,
    check_word,
    demazure_product,
    longest_element,
    reduced_word,
)

MAX_WORD_LETTERS = 128

Facet = tuple  # of 1-based positions, sorted ascending


def _check_positions(word: Word, positions) -> tuple[int, ...]:
    out = tuple(sorted(positions))
    if len(set(out)) != len(out):
        raise CoxeterError("duplicate positions")
    if out and not (1 <= out[0] and out[-1] <= len(word)):
        raise CoxeterError("position out of range")
    return out


def _complement(word: Word, positions) -> Word:
    drop = set(positions)
    return tuple(s for p, s in enumerate(word, start=1) if p not in drop)


def is_face(system: CoxeterSystem, word: Word, target: Element, positions) -> bool:
    """Does the complement of ``positions`` still contain a reduced word for target?"""
    positions = _check_positions(word, positions)
    rest = _complement(word, positions)
    if target == longest_element(system):
        # The longest element is Bruhat-maximal, so containment is equivalent
        # to the Demazure product already reaching it.
        return demazure_product(system, rest) == target
    return _contains_reduced_word(system, rest, target)


def _contains_reduced_word(system: CoxeterSystem, word: Word, target: Element) -> bool:
    memo: dict[tuple[int, tuple[int, ...]], bool] = {}

    def search(pos: int, rest: Element, rest_length: int) -> bool:
        if rest_length == 0:
            return True
        if len(word) - pos < rest_length:
            return False
        key = (pos, rest.image)
        cached = memo.get(key)
        if cached is not None:
            return cached
        s = word[pos]
        found = False
        inv = rest.inverse()
        if inv.image[s - 1] < 0:  # s starts a reduced word of rest
            found = search(pos + 1, system.generators[s - 1] * rest, rest_length - 1)
        if not found:
            found = search(pos + 1, rest, rest_length)
        memo[key] = found
        return found

    return search(0, target, target.length())


def is_sphere(system: CoxeterSystem, word: Word, target: Element) -> bool:
    return demazure_product(system, word) == target


def enumerate_facets_dfs(
    system: CoxeterSystem, word: Word, target: Element
) -> tuple[Facet, ...]:
    """All facets by depth-first search over positions.

    Walking left to right, each position either joins the candidate facet or
    joins the complement, in which case its letter must lengthen the running
    complement product; a leaf is a facet when that product equals target.
    """
    if len(word) > MAX_WORD_LETTERS:
        raise ResourceLimitError(
            f"words longer than {MAX_WORD_LETTERS} letters are not supported"
        )
    r = len(word)
    target_length = target.length()
    facet_size = r - target_length
    if facet_size < 0:
        return ()
    facets: list[Facet] = []
    face: list[int] = []

    def walk(pos: int, product: Element, product_length: int) -> None:
        if r - pos < target_length - product_length:
            return
        if pos == r:
            if product == target:
                facets.append(tuple(face))
            return
        if len(face) < facet_size:
            face.append(pos + 1)
            walk(pos + 1, product, product_length)
            face.pop()
        s = word[pos]
        if product.image[s - 1] > 0:  # the letter must ascend
            walk(pos + 1, product * system.generators[s - 1], product_length + 1)

    walk(0, system.identity, 0)
    return tuple(sorted(facets))


def root_table(
    system: CoxeterSystem, word: Word, facet
) -> tuple[SignedRoot, ...]:
    """Root function values at every position, for one facet.

    Position q is sent to w(alpha_q) where w multiplies the complement
    letters strictly left of q.
    """
    facet = set(_check_positions(word, facet))
    out = []
    prefix = system.identity
    for p, s in enumerate(word, start=1):
        out.append(prefix.apply(s - 1))
        if p not in facet:
            prefix = prefix * system.generators[s - 1]
    return tuple(out)


def root_function(
    system: CoxeterSystem, word: Word, facet, q: int
) -> SignedRoot:
    if not 1 <= q <= len(word):
        raise CoxeterError(f"position {q} out of range")
    return root_table(system, word, facet)[q - 1]


def flip(
    system: CoxeterSystem, word: Word, facet, q: int
) -> tuple[Facet, int]:
    """Exchange q for the unique outside position carrying the same root.

    Only spherical complexes guarantee existence and uniqueness; both are
    checked and violations raise.
    """
    facet = _check_positions(word, facet)
    if q not in facet:
        raise CoxeterError(f"position {q} is not in the facet")
    table = root_table(system, word, facet)
    wanted = table[q - 1].root
    inside = set(facet)
    matches = [
        p
        for p in range(1, len(word) + 1)
        if p not in inside and table[p - 1].root == wanted
    ]
    if len(matches) != 1:
        raise CoxeterError("flip is not unique; the complex is not spherical")
    q_new = matches[0]
    new_facet = tuple(sorted(inside - {q} | {q_new}))
    return new_facet, q_new


def enumerate_facets_bfs(
    system: CoxeterSystem, word: Word, target: Element, seed
) -> tuple[Facet, ...]:
    """Flip closure of a seed facet; agrees with the DFS enumeration."""
    seed = _check_positions(word, seed)
    if len(seed) != len(word) - target.length() or not is_face(
        system, word, target, seed
    ):
        raise CoxeterError("seed is not a facet")
    seen = {seed}
    queue = deque([seed])
    while queue:
        facet = queue.popleft()
        for q in facet:
            neighbor, _ = flip(system, word, facet, q)
            if neighbor not in seen:
                seen.add(neighbor)
                queue.append(neighbor)
    return tuple(sorted(seen))


@dataclass(frozen=True)
class SubwordComplex:
    """A word, a target element, and the (eagerly enumerated) facet list."""

    system: CoxeterSystem
    word: Word
    target: Element
    facets: tuple[Facet, ...]
    vertices: tuple[int, ...]

    def facet_size(self) -> int:
        return len(self.word) - self.target.length()

    def is_face(self, positions) -> bool:
        return is_face(self.system, self.word, self.target, positions)

    def dimension(self) -> int:
        return self.facet_size() - 1


def subword_complex(
    system: CoxeterSystem, word: Word, target: Element | None = None
) -> SubwordComplex:
    """Build the complex; with no target, the Demazure product is used (sphere)."""
    check_word(system, word)
    if target is None:
        target = demazure_product(system, word)
    facets = enumerate_facets_dfs(system, word, target)
    vertices = tuple(sorted({p for facet in facets for p in facet}))
    return SubwordComplex(system, word, target, facets, vertices)


@dataclass(frozen=True)
class FlipGraph:
    """Facets as nodes; an edge for each flip between adjacent facets."""

    nodes: tuple[Facet, ...]
    neighbors: tuple[tuple[int, ...], ...]  # adjacency by node index

    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(
            (i, j)
            for i, adjacent in enumerate(self.neighbors)
            for j in adjacent
            if i < j
        )


def flip_graph(complex_: SubwordComplex) -> FlipGraph:
    index = {facet: i for i, facet in enumerate(complex_.facets)}
    neighbors: list[set[int]] = [set() for _ in complex_.facets]
    for facet, i in index.items():
        for q in facet:
            other, _ = flip(complex_.system, complex_.word, facet, q)
            neighbors[i].add(index[other])
    return FlipGraph(complex_.facets, tuple(tuple(sorted(adj)) for adj in neighbors))


def flip_graph_dot(graph: FlipGraph) -> str:
    def label(facet: Facet) -> str:
        return "{" + ",".join(map(str, facet)) + "}"

    lines = ["graph flips {"]
    for facet in graph.nodes:
        lines.append(f'  "{label(facet)}";')
    for i, j in graph.edges():
        lines.append(f'  "{label(graph.nodes[i])}" -- "{label(graph.nodes[j])}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def link(system: CoxeterSystem, word: Word, target: Element, face) -> SubwordComplex:
    """The link of a face: same target over the word with the face deleted.

    New positions renumber the surviving positions in increasing order.
    """
    face = _check_positions(word, face)
    if not is_face(system, word, target, face):
        raise CoxeterError("not a face of the complex")
    return subword_complex(system, _complement(word, face), target)


def reduce_to_w0(system: CoxeterSystem, word: Word, target: Element) -> Word:
    """Append a reduced word for target^{-1} w0, moving the target to w0.

    Facets are unchanged as position sets: the appended letters are forced
    into every embedded reduced word.
    """
    completion = reduced_word(target.inverse() * longest_element(system))
    return tuple(word) + completion


def f_vector(complex_: SubwordComplex) -> tuple[int, ...]:
    """Face counts (f_-1, f_0, ..., f_dim)."""
    faces = all_faces(complex_)
    if not faces:
        return (0,)
    top = max(len(face) for face in faces)
    counts = [0] * (top + 1)
    for face in faces:
        counts[len(face)] += 1
    return tuple(counts)


def all_faces(complex_: SubwordComplex) -> frozenset[frozenset[int]]:
    faces: set[frozenset[int]] = set()
    for facet in complex_.facets:
        for size in range(len(facet) + 1):
            for sub in combinations(facet, size):
                faces.add(frozenset(sub))
    return frozenset(faces)


def reduced_euler_characteristic(complex_: SubwordComplex) -> int:
    fv = f_vector(complex_)
    return sum((-1) ** (i + 1) * fv[i] for i in range(len(fv)))


def minimal_nonfaces(complex_: SubwordComplex, max_size: int) -> tuple[Facet, ...]:
    """Inclusion-minimal non-faces of size <= max_size over the vertex set."""
    faces = all_faces(complex_)
    vertices = complex_.vertices
    out: list[Facet] = []
    for size in range(1, max_size + 1):
        for candidate in combinations(vertices, size):
            group = frozenset(candidate)
            if group in faces:
                continue
            if all(group - {v} in faces for v in candidate):
                out.append(candidate)
    return tuple(sorted(out))
