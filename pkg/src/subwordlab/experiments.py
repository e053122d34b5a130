"""Experiment harness over desk-scale instances.

Experiments that check proved statements carry a pass/fail verdict and the
whole run is expected to exit nonzero on any failure; experiments probing
conjectures are "report-only" and never assert, they just emit the observed
data.  All instance lists are fixed tuples so reports are deterministic
(apart from the elapsed-time field) for a given seed.
"""

from __future__ import annotations

import random
import time
from collections import deque
from dataclasses import dataclass, field

from .coxeter import (
    CoxeterSystem,
    Word,
    commutation_position_map,
    enumerate_coxeter_words,
    equal_up_to_commutations,
    iter_all_words,
    longest_element,
    parse_descriptor,
)
from .multicluster import (
    almost_positive_roots,
    c_compatible,
    csp_fixed_point_table,
    facet_count_formula,
    multi_cluster_word,
)
from .quivers import check_mesh_relation
from .sorting import has_sin_property, rotate_word, sorting_word_w0
from .subword import (
    SubwordComplex,
    enumerate_facets_bfs,
    enumerate_facets_dfs,
    f_vector,
    flip_graph,
    minimal_nonfaces,
    subword_complex,
)

PASS = "pass"
FAIL = "fail"
REPORT_ONLY = "report-only"


@dataclass
class ExperimentReport:
    name: str
    parameters: dict
    verdict: str
    rows: list[dict] = field(default_factory=list)
    elapsed_ms: float = 0.0

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "parameters": self.parameters,
            "verdict": self.verdict,
            "rows": self.rows,
            "elapsed_ms": round(self.elapsed_ms, 3),
        }


def _timed(report: ExperimentReport, start: float) -> ExperimentReport:
    report.elapsed_ms = (time.perf_counter() - start) * 1000.0
    return report


def _system(name: str) -> CoxeterSystem:
    return CoxeterSystem(parse_descriptor(name))


def _lex_coxeter_word(system: CoxeterSystem) -> Word:
    return enumerate_coxeter_words(system)[0]


def _multi_cluster_complex(system: CoxeterSystem, cox: Word, k: int) -> SubwordComplex:
    return subword_complex(
        system, multi_cluster_word(system, cox, k), longest_element(system)
    )


# ---------------------------------------------------------------------------
# Instance tables

COUNT_INSTANCES: tuple[tuple[str, int], ...] = (
    ("A1", 1), ("A1", 2), ("A1", 3),
    ("A2", 1), ("A2", 2),
    ("A3", 1), ("A3", 2),
    ("B2", 1), ("B2", 2),
    ("B3", 1),
    ("D4", 1),
    ("H3", 1),
    ("H3", 2),
    ("I2(3)", 2),
    ("I2(5)", 1), ("I2(6)", 1), ("I2(7)", 1), ("I2(8)", 1),
)

NONFACE_INSTANCES: tuple[tuple[str, int], ...] = (
    ("A2", 1), ("A2", 2), ("A2", 3),
    ("A3", 1), ("A3", 2),
    ("B2", 1), ("B2", 2), ("B2", 3),
    ("B3", 2),
    ("I2(3)", 1), ("I2(3)", 2), ("I2(3)", 3),
    ("I2(4)", 1), ("I2(4)", 2), ("I2(4)", 3),
    ("I2(5)", 1), ("I2(5)", 2), ("I2(5)", 3),
    ("I2(6)", 1), ("I2(6)", 2), ("I2(6)", 3),
    ("I2(7)", 1), ("I2(7)", 2), ("I2(7)", 3),
)

CSP_INSTANCES: tuple[tuple[str, int], ...] = (
    ("A1", 1), ("A1", 2),
    ("A2", 1), ("A2", 2),
    ("A3", 1), ("A3", 2),
    ("B2", 1), ("B2", 2),
    ("I2(5)", 1), ("I2(5)", 2),
)

MAXIMALITY_EXHAUSTIVE: tuple[tuple[str, int], ...] = (
    ("A2", 1), ("A2", 2), ("B2", 1), ("B2", 2), ("I2(6)", 1),
)

MAXIMALITY_SAMPLED: tuple[tuple[str, int], ...] = (
    ("I2(5)", 1), ("A3", 1),
)

SIN_INSTANCES: tuple[tuple[str, int], ...] = (
    ("A2", 5),  # word length n*k + N with k = 1
    ("B2", 6),
)

MESH_INSTANCES: tuple[tuple[str, int], ...] = (
    ("A3", 1), ("A3", 2),
    ("B2", 1), ("B2", 2),
    ("B3", 1), ("B3", 2),
    ("I2(7)", 1), ("I2(7)", 2),
)

INDEPENDENCE_INSTANCES: tuple[tuple[str, int], ...] = (
    ("A3", 1), ("A3", 2), ("B3", 1), ("B3", 2), ("D4", 1),
)


# ---------------------------------------------------------------------------
# Experiments

def run_count_experiment(instances=COUNT_INSTANCES) -> ExperimentReport:
    """Enumerated facet counts against the degree-product formula.

    Equality is asserted for the A, B and I2 families at every k and for
    k = 1 in all types; other instances are reported without asserting,
    since the product formula is not a count in general.
    """
    start = time.perf_counter()
    rows = []
    verdict = PASS
    for name, k in instances:
        system = _system(name)
        cox = _lex_coxeter_word(system)
        complex_ = _multi_cluster_complex(system, cox, k)
        enumerated = len(complex_.facets)
        bfs = enumerate_facets_bfs(
            system, complex_.word, complex_.target, complex_.facets[0]
        )
        formula = facet_count_formula(system, k)
        asserted = system.descriptor.family in ("A", "B", "I") or k == 1
        agrees = formula == enumerated and len(bfs) == enumerated
        if asserted and not agrees:
            verdict = FAIL
        rows.append(
            {
                "type": name,
                "k": k,
                "facets": enumerated,
                "formula": str(formula),
                "enumerators_agree": len(bfs) == enumerated,
                "asserted": asserted,
                "agrees": agrees,
            }
        )
    return _timed(ExperimentReport("counts", {"instances": len(rows)}, verdict, rows), start)


def run_nonface_experiment(instances=NONFACE_INSTANCES) -> ExperimentReport:
    """Sizes of all inclusion-minimal non-faces (conjectured to be k + 1)."""
    start = time.perf_counter()
    rows = []
    for name, k in instances:
        system = _system(name)
        cox = _lex_coxeter_word(system)
        complex_ = _multi_cluster_complex(system, cox, k)
        found = minimal_nonfaces(complex_, complex_.facet_size() + 1)
        sizes = sorted({len(x) for x in found})
        rows.append(
            {
                "type": name,
                "k": k,
                "count": len(found),
                "sizes": sizes,
                "all_k_plus_1": sizes == [k + 1],
            }
        )
    return _timed(
        ExperimentReport("nonfaces", {"instances": len(rows)}, REPORT_ONLY, rows), start
    )


def run_csp_experiment(instances=CSP_INSTANCES) -> ExperimentReport:
    """Fixed facets of each power of the cyclic action against the
    polynomial evaluated at the matching root of unity (order 2k + h)."""
    start = time.perf_counter()
    rows = []
    for name, k in instances:
        system = _system(name)
        cox = _lex_coxeter_word(system)
        table = csp_fixed_point_table(system, cox, k)
        rows.append(
            {
                "type": name,
                "k": k,
                "group_order": 2 * k + system.coxeter_number,
                "fixed": [fixed for fixed, _ in table],
                "evaluations": [value for _, value in table],
                "matches": all(fixed == value for fixed, value in table),
            }
        )
    return _timed(
        ExperimentReport("csp", {"instances": len(rows)}, REPORT_ONLY, rows), start
    )


def run_maximality_experiment(
    exhaustive=MAXIMALITY_EXHAUSTIVE,
    sampled=MAXIMALITY_SAMPLED,
    seed: int = 0,
    samples: int = 200,
) -> ExperimentReport:
    """Hunt for same-length words beating the multi-cluster facet count.

    Exhaustive instances also record whether every word attaining the
    maximum has the strong intervening-neighbors property.
    """
    start = time.perf_counter()
    rng = random.Random(seed)
    rows = []
    for name, k in exhaustive:
        system = _system(name)
        cox = _lex_coxeter_word(system)
        target = longest_element(system)
        reference = len(_multi_cluster_complex(system, cox, k).facets)
        size = k * system.rank + system.number_of_positive_roots
        best = 0
        winners_all_sin = True
        counterexample = None
        for word in iter_all_words(system, size):
            count = len(enumerate_facets_dfs(system, word, target))
            if count > best:
                best = count
                winners_all_sin = True
            if count == best and best > 0:
                if not has_sin_property(system, word):
                    winners_all_sin = False
            if count > reference and counterexample is None:
                counterexample = list(word)
        rows.append(
            {
                "type": name,
                "k": k,
                "mode": "exhaustive",
                "reference": reference,
                "max_found": best,
                "counterexample": counterexample,
                "max_only_at_sin_words": winners_all_sin and best == reference,
            }
        )
    for name, k in sampled:
        system = _system(name)
        cox = _lex_coxeter_word(system)
        target = longest_element(system)
        reference = len(_multi_cluster_complex(system, cox, k).facets)
        size = k * system.rank + system.number_of_positive_roots
        best = 0
        counterexample = None
        for _ in range(samples):
            word = tuple(rng.randint(1, system.rank) for _ in range(size))
            count = len(enumerate_facets_dfs(system, word, target))
            best = max(best, count)
            if count > reference and counterexample is None:
                counterexample = list(word)
        rows.append(
            {
                "type": name,
                "k": k,
                "mode": f"sample[{samples}]",
                "reference": reference,
                "max_found": best,
                "counterexample": counterexample,
            }
        )
    return _timed(
        ExperimentReport(
            "maximality", {"seed": seed, "samples": samples}, REPORT_ONLY, rows
        ),
        start,
    )


def run_sin_experiment(instances=SIN_INSTANCES) -> ExperimentReport:
    """Exhaustive equivalence: a word has the strong intervening-neighbors
    property iff it equals some c^k * sorting word up to commutations."""
    start = time.perf_counter()
    rows = []
    verdict = PASS
    for name, size in instances:
        system = _system(name)
        n = system.rank
        big_n = system.number_of_positive_roots
        references = []
        if size >= big_n and (size - big_n) % n == 0:
            k = (size - big_n) // n
            references = [
                cox * k + sorting_word_w0(system, cox).word
                for cox in enumerate_coxeter_words(system)
            ]
        mismatches = 0
        sin_count = 0
        for word in iter_all_words(system, size):
            sin = has_sin_property(system, word)
            canonical = any(
                equal_up_to_commutations(system, word, ref) for ref in references
            )
            if sin:
                sin_count += 1
            if sin != canonical:
                mismatches += 1
        if mismatches:
            verdict = FAIL
        rows.append(
            {
                "type": name,
                "length": size,
                "words": system.rank ** size,
                "sin_words": sin_count,
                "mismatches": mismatches,
            }
        )
    return _timed(ExperimentReport("sin", {"instances": len(rows)}, verdict, rows), start)


def run_mesh_experiment(instances=MESH_INSTANCES) -> ExperimentReport:
    """Mesh relation at every consecutive-occurrence site of multi-cluster words."""
    start = time.perf_counter()
    rows = []
    verdict = PASS
    for name, k in instances:
        system = _system(name)
        for cox in enumerate_coxeter_words(system):
            ok = check_mesh_relation(system, multi_cluster_word(system, cox, k))
            if not ok:
                verdict = FAIL
            rows.append(
                {
                    "type": name,
                    "k": k,
                    "cox": list(cox),
                    "holds": ok,
                    "exact": system.exact,
                }
            )
    return _timed(ExperimentReport("mesh", {"instances": len(rows)}, verdict, rows), start)


def run_independence_experiment(instances=INDEPENDENCE_INSTANCES) -> ExperimentReport:
    """Facet counts and f-vectors across all Coxeter words, plus the explicit
    rotation bijection from each word to its initial-letter conjugate."""
    start = time.perf_counter()
    rows = []
    verdict = PASS
    for name, k in instances:
        system = _system(name)
        words = enumerate_coxeter_words(system)
        data = []
        for cox in words:
            complex_ = _multi_cluster_complex(system, cox, k)
            data.append((cox, complex_))
        counts = {len(c.facets) for _, c in data}
        fvecs = {f_vector(c) for _, c in data}
        rotation_ok = all(
            _rotation_step_bijection(system, cox, k) for cox, _ in data
        )
        ok = len(counts) == 1 and len(fvecs) == 1 and rotation_ok
        if not ok:
            verdict = FAIL
        rows.append(
            {
                "type": name,
                "k": k,
                "words": len(words),
                "facets": sorted(counts),
                "distinct_f_vectors": len(fvecs),
                "rotation_bijection": rotation_ok,
            }
        )
    return _timed(
        ExperimentReport("independence", {"instances": len(rows)}, verdict, rows), start
    )


def _rotation_step_bijection(system: CoxeterSystem, cox: Word, k: int) -> bool:
    """Rotating along the initial letter maps facets onto the facets of the
    conjugated multi-cluster word, under the position shift."""
    word = multi_cluster_word(system, cox, k)
    facets = set(enumerate_facets_dfs(system, word, longest_element(system)))
    rotated = rotate_word(system, word)
    conjugate = cox[1:] + (cox[0],)
    target_word = multi_cluster_word(system, conjugate, k)
    if not equal_up_to_commutations(system, rotated, target_word):
        return False
    relabel = commutation_position_map(system, rotated, target_word)
    r = len(word)

    def shift(p: int) -> int:
        return r if p == 1 else p - 1

    target_facets = set(
        enumerate_facets_dfs(system, target_word, longest_element(system))
    )
    for facet in facets:
        image = tuple(sorted(relabel[shift(p) - 1] for p in facet))
        if image not in target_facets:
            return False
    return True


def flip_graph_diameter(complex_: SubwordComplex) -> int:
    """Largest BFS eccentricity over the flip graph."""
    graph = flip_graph(complex_)
    diameter = 0
    for source in range(len(graph.nodes)):
        dist = {source: 0}
        queue = deque([source])
        while queue:
            node = queue.popleft()
            for other in graph.neighbors[node]:
                if other not in dist:
                    dist[other] = dist[node] + 1
                    queue.append(other)
        if len(dist) != len(graph.nodes):
            raise ValueError("flip graph is not connected")
        diameter = max(diameter, max(dist.values()))
    return diameter


def naive_complex_max_face_sizes(system: CoxeterSystem, cox: Word, k: int) -> tuple[int, ...]:
    """Maximal face sizes of the pairwise-compatibility complex.

    Faces are the root sets with no k+1 pairwise-incompatible members; the
    construction fails purity in general, which is why the multi-cluster
    complex is not defined this way.
    """
    roots = almost_positive_roots(system)
    total = len(roots)
    incompatible = [[False] * total for _ in range(total)]
    for i in range(total):
        for j in range(i + 1, total):
            bad = not c_compatible(system, cox, roots[i], roots[j])
            incompatible[i][j] = incompatible[j][i] = bad

    def admissible(members: tuple[int, ...]) -> bool:
        # no k+1 pairwise-incompatible subset
        from itertools import combinations

        for group in combinations(members, k + 1):
            if all(incompatible[a][b] for a in group for b in group if a < b):
                return False
        return True

    faces = set()
    for mask in range(1 << total):
        members = tuple(i for i in range(total) if mask >> i & 1)
        if admissible(members):
            faces.add(frozenset(members))
    maximal_sizes = set()
    for face in faces:
        if not any(face | {v} in faces for v in range(total) if v not in face):
            maximal_sizes.add(len(face))
    return tuple(sorted(maximal_sizes))


EXPERIMENTS = {
    "counts": run_count_experiment,
    "nonfaces": run_nonface_experiment,
    "csp": run_csp_experiment,
    "maximality": run_maximality_experiment,
    "sin": run_sin_experiment,
    "mesh": run_mesh_experiment,
    "independence": run_independence_experiment,
}
