"""Quivers from Coxeter words: orientation quivers, knitted translation
quivers of sorting words, windows of the bi-infinite repetition quiver, root
labels along doubled words, and the mesh relation.

Vertices are (occurrence index, generator) pairs.  The occurrence index
counts occurrences of that generator from the start of the underlying word;
windows may shift the starting value to reproduce two-sided pictures.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coxeter import (
    CoxeterError,
    CoxeterSystem,
    SignedRoot,
    Word,
    check_coxeter_word,
    check_word,
    psi_word,
)
from .sorting import has_sin_property, sorting_word_w0

Vertex = tuple  # (occurrence index, generator)


@dataclass(frozen=True)
class Quiver:
    """Directed graph without loops or two-cycles."""

    vertices: tuple[Vertex, ...]
    arrows: tuple[tuple[Vertex, Vertex], ...]

    def arrow_count(self) -> int:
        return len(self.arrows)


def coxeter_quiver(system: CoxeterSystem, cox: Word) -> Quiver:
    """One vertex per generator; s -> t when the neighbors s, t have s first in c."""
    check_coxeter_word(system, cox)
    position = {s: i for i, s in enumerate(cox)}
    vertices = tuple((0, s) for s in range(1, system.rank + 1))
    arrows = []
    for s in range(1, system.rank + 1):
        for t in system.neighbors[s - 1]:
            if position[s] < position[t]:
                arrows.append(((0, s), (0, t)))
    return Quiver(vertices, tuple(sorted(arrows)))


def knitting_quiver(system: CoxeterSystem, word: Word, origin: int = 1) -> Quiver:
    """Knit a word: arrows join consecutive occurrences of graph neighbors.

    The j-th occurrence of generator s becomes vertex (origin + j - 1, s).
    """
    check_word(system, word)
    vertices, labels = _occurrence_labels(word, origin)
    arrows = []
    for s in range(1, system.rank + 1):
        for t in system.neighbors[s - 1]:
            if t < s:
                continue
            chain = [p for p, x in enumerate(word) if x in (s, t)]
            for a, b in zip(chain, chain[1:]):
                if word[a] != word[b]:
                    arrows.append((labels[a], labels[b]))
    return Quiver(vertices, tuple(sorted(arrows)))


def _occurrence_labels(word: Word, origin: int) -> tuple[tuple[Vertex, ...], list[Vertex]]:
    seen: dict[int, int] = {}
    labels = []
    for s in word:
        seen[s] = seen.get(s, 0) + 1
        labels.append((origin + seen[s] - 1, s))
    return tuple(labels), labels


def ar_quiver(system: CoxeterSystem, cox: Word) -> Quiver:
    """Knitting of the sorting word of the longest element."""
    check_coxeter_word(system, cox)
    return knitting_quiver(system, sorting_word_w0(system, cox).word)


class RepetitionWindow:
    """A finite window of the bi-infinite repetition quiver.

    Blocks alternate between the sorting word of the longest element and its
    psi image; the translate decrements the occurrence index, while the shift
    moves a letter to the same in-block position one block later.
    """

    def __init__(
        self,
        quiver: Quiver,
        blocks: tuple[tuple[Vertex, ...], ...],
    ):
        self.quiver = quiver
        self.blocks = blocks
        self._vertex_set = set(quiver.vertices)
        self._block_position = {
            vertex: (b, j)
            for b, block in enumerate(blocks)
            for j, vertex in enumerate(block)
        }

    def tau(self, vertex: Vertex) -> Vertex | None:
        """Translate: (i, s) -> (i - 1, s) when still inside the window."""
        i, s = vertex
        image = (i - 1, s)
        return image if image in self._vertex_set else None

    def tau_inverse(self, vertex: Vertex) -> Vertex | None:
        i, s = vertex
        image = (i + 1, s)
        return image if image in self._vertex_set else None

    def shift(self, vertex: Vertex) -> Vertex | None:
        """The same block position one block to the right, if present."""
        b, j = self._block_position[vertex]
        if b + 1 >= len(self.blocks):
            return None
        return self.blocks[b + 1][j]


def repetition_window(
    system: CoxeterSystem, cox: Word, copies: int, origin: int = 1
) -> RepetitionWindow:
    """Knit ``copies`` alternating blocks, starting with the sorting word.

    ``origin`` sets the occurrence index given to the first occurrence of
    each generator, which lets callers center the window wherever they like.
    """
    check_coxeter_word(system, cox)
    if copies < 1:
        raise CoxeterError("need at least one block")
    base = sorting_word_w0(system, cox).word
    words = [base if b % 2 == 0 else psi_word(system, base) for b in range(copies)]
    full = tuple(s for w in words for s in w)
    quiver = knitting_quiver(system, full, origin)
    _, labels = _occurrence_labels(full, origin)
    blocks = []
    at = 0
    for w in words:
        blocks.append(tuple(labels[at : at + len(w)]))
        at += len(w)
    return RepetitionWindow(quiver, tuple(blocks))


# ---------------------------------------------------------------------------
# Root labels and the mesh relation

def beta_labels(system: CoxeterSystem, word: Word) -> tuple[SignedRoot, ...]:
    """Signed roots along the doubled word w + psi(w).

    The label at a position applies the product of all earlier letters to the
    simple root of its own letter; beyond the doubled word the labels repeat
    periodically.
    """
    if not has_sin_property(system, word):
        raise CoxeterError("root labels need the strong intervening-neighbors property")
    doubled = tuple(word) + psi_word(system, word)
    labels = []
    prefix = system.identity
    for s in doubled:
        labels.append(prefix.apply(s - 1))
        prefix = prefix * system.generators[s - 1]
    return tuple(labels)


def check_mesh_relation(system: CoxeterSystem, word: Word) -> bool:
    """Between consecutive occurrences of a generator s, the two labels sum
    to the neighbor labels weighted by the negated Cartan entries.

    Sites wrapping past the doubled word are handled by continuing the
    prefix products through a second period: a literal copy of the labels
    would twist every label of the next window by the doubled-word product
    and break the relation at the seam.  Exact over exact systems; general
    dihedral systems compare within 1e-9.
    """
    if not has_sin_property(system, word):
        raise CoxeterError("the mesh relation needs the strong intervening-neighbors property")
    doubled = tuple(word) + psi_word(system, word)
    period = len(doubled)
    extended = doubled + doubled
    vectors = []
    prefix = system.identity
    for s in extended:
        vectors.append(_signed_vector(system, prefix.apply(s - 1)))
        prefix = prefix * system.generators[s - 1]
    cartan = system.cartan
    for s in range(1, system.rank + 1):
        occurrences = [p for p, x in enumerate(extended) if x == s]
        for left, right in zip(occurrences, occurrences[1:]):
            if left >= period:
                break
            total = _vector_add(vectors[left], vectors[right])
            acc = None
            for q in range(left + 1, right):
                entry = cartan[s - 1][extended[q] - 1]
                if entry == 0:
                    continue
                term = _vector_scale(-entry, vectors[q])
                acc = term if acc is None else _vector_add(acc, term)
            if acc is None:
                acc = tuple(0 for _ in range(system.rank))
            if not _vector_close(system, total, acc):
                return False
    return True


def _signed_vector(system: CoxeterSystem, label: SignedRoot):
    vec = system.positive_roots[label.root]
    if label.sign > 0:
        return tuple(vec)
    return tuple(-c for c in vec)


def _vector_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _vector_scale(scalar, vec):
    return tuple(scalar * x for x in vec)


def _vector_close(system: CoxeterSystem, a, b) -> bool:
    if system.exact:
        return a == b
    return all(abs(float(x) - float(y)) < 1e-9 for x, y in zip(a, b))


# ---------------------------------------------------------------------------
# DOT export

def export_dot(quiver: Quiver, name: str = "quiver") -> str:
    """Deterministic DOT rendering with vertices named "(i,s)"."""

    def label(vertex: Vertex) -> str:
        i, s = vertex
        return f"({i},s{s})"

    lines = [f"digraph {name} {{"]
    for vertex in sorted(quiver.vertices):
        lines.append(f'  "{label(vertex)}";')
    for src, dst in sorted(quiver.arrows):
        lines.append(f'  "{label(src)}" -> "{label(dst)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
