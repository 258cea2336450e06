"""Acceptance suite: one check per numbered criterion, one verdict line each.

Run with -s (or read captured stdout) to see the per-criterion lines.
The clique sweep is marked slow; deselect with -m "not slow" if needed.
"""

import random
from itertools import combinations
from math import comb

import pytest

from conftest import random_graph
from hamconn.bounds import extremal_family, phi, phi_s, reference_bound
from hamconn.cliques import binomial, count_cliques, f_s_formula, g_s_formula, lambda_s
from hamconn.constructions import build_F, build_G, hub_vertices
from hamconn.graph import edge_count, from_edges, induced_subgraph, min_degree
from hamconn.oracle import is_hamiltonian_connected
from hamconn.sufficiency import Outcome, lick_test, ore_test, separator_certificate, size_test
from hamconn.transforms import hc_closure, t_disintegration
from hamconn.verify import exhaustive_clique_extremal, exhaustive_extremal, sample_corollary1

SEED = 20260823

# criterion 4 stores its sweep reports here so criterion 10 can audit them
_SWEEPS: dict[tuple[int, int], object] = {}


def _verdict(num: int, label: str, ok: bool, detail: str = "") -> None:
    line = f"criterion {num:02d} {'PASS' if ok else 'FAIL'}: {label}"
    if detail:
        line += f" [{detail}]"
    print(line)
    assert ok, line


def test_criterion_01_construction_validity():
    bad = []
    for n in range(6, 15):
        for delta in range(3, n // 2 + 1):
            for builder, formula in ((build_F, f_s_formula), (build_G, g_s_formula)):
                g = builder(n, delta)
                if min_degree(g) != delta:
                    bad.append((n, delta, builder.__name__, "degree"))
                if edge_count(g) != formula(n, delta, 2):
                    bad.append((n, delta, builder.__name__, "size"))
                if is_hamiltonian_connected(g):
                    bad.append((n, delta, builder.__name__, "oracle"))
    _verdict(1, "families have exact degree, predicted size, and fail the oracle",
             not bad, f"n=6..14, {'ok' if not bad else bad[:3]}")


def test_criterion_02_piecewise_identity():
    bad = []
    boundaries = 0
    for n in range(6, 201):
        for delta in range(3, n // 2 + 1):
            expect = max(f_s_formula(n, delta, 2), g_s_formula(n, delta, 2))
            if phi(n, delta).value != expect:
                bad.append((n, delta))
        num = n + 13 if n % 2 else n + 10
        if num % 6 == 0:
            delta = num // 6
            if 3 <= delta <= n // 2:
                boundaries += 1
                small = comb(n - delta + 1, 2) + delta * (delta - 1)
                dense = (3 * n * n - 8 * n + 13) // 8 + delta if n % 2 else (
                    3 * n * n - 6 * n
                ) // 8 + delta
                agree = (
                    small == dense == f_s_formula(n, delta, 2)
                    == g_s_formula(n, delta, 2) == phi(n, delta).value
                )
                if not agree:
                    bad.append(("boundary", n, delta))
    _verdict(2, "size threshold equals the pairwise max and both branches meet "
                "at parity boundaries", not bad,
             f"n<=200, {boundaries} boundary points")


def test_criterion_03_flagship_value():
    ho = reference_bound("HO", 16, 4).value
    p = phi(16, 8).value
    g = build_G(16, 8)
    sep = separator_certificate(g, hub_vertices("G", 16, 8))
    ok = (
        ho == 92
        and p == 92
        and edge_count(g) == 92
        and min_degree(g) == 8
        and sep.outcome is Outcome.NHC_CERTIFIED
    )
    _verdict(3, "the 16-vertex record value 92 with its unique-degree-8 witness",
             ok, f"ho={ho} phi={p} edges={edge_count(g)}")


def test_criterion_04_exhaustive_small_orders():
    bad = []
    for n, delta in ((7, 3), (8, 3), (8, 4)):
        rep = exhaustive_extremal(n, delta)
        _SWEEPS[(n, delta)] = rep
        if rep.observed_max != rep.predicted:
            bad.append((n, delta, "value", rep.observed_max, rep.predicted))
        if rep.maximizer_classes != rep.expected_classes:
            bad.append((n, delta, "classes"))
        if not rep.matches_theorem:
            bad.append((n, delta, "flag"))
    _verdict(4, "exhaustive maxima and maximizer classes match the prediction "
                "at orders 7 and 8", not bad,
             "(7,3),(8,3),(8,4)" if not bad else str(bad))


@pytest.mark.slow
def test_criterion_05_clique_sweep():
    rep = exhaustive_clique_extremal(7, 3, 3)
    ok = rep.observed_max == rep.predicted == phi_s(7, 3, 3).value == 16
    _verdict(5, "full labeled sweep reproduces the triangle-count maximum at "
                "order 7", ok,
             f"observed={rep.observed_max} over {rep.graphs_enumerated} graphs")


def test_criterion_06_clique_formulas():
    bad = []
    for n in range(6, 15):
        for delta in range(3, n // 2 + 1):
            for s in (2, 3, 4, 5):
                if count_cliques(build_F(n, delta), s) != f_s_formula(n, delta, s):
                    bad.append(("F", n, delta, s))
                if count_cliques(build_G(n, delta), s) != g_s_formula(n, delta, s):
                    bad.append(("G", n, delta, s))
    _verdict(6, "closed-form clique counts equal enumeration on both families",
             not bad, "n<=14, s=2..5")


def test_criterion_07_closure_properties():
    rng = random.Random(SEED)
    bad = []
    for i in range(1000):
        n = rng.randrange(3, 13)
        g = random_graph(rng, n, rng.choice([0.3, 0.5, 0.7, 0.85]))
        before = is_hamiltonian_connected(g)
        res = hc_closure(g)
        if is_hamiltonian_connected(res.graph) != before:
            bad.append((i, "plain"))
        prot = rng.randrange(n)
        resp = hc_closure(g, protected=prot)
        if is_hamiltonian_connected(resp.graph) != before:
            bad.append((i, "protected"))
        if i < 500:
            pairs = [(a, b) for b in range(n) for a in range(b)]
            rng.shuffle(pairs)
            if hc_closure(g, pair_order=pairs).graph != res.graph:
                bad.append((i, "order"))
    _verdict(7, "closure preserves the oracle verdict and is insertion-order "
                "independent", not bad, "1000 graphs, 500 order trials")


def test_criterion_08_disintegration_properties():
    rng = random.Random(SEED + 1)
    bad = []
    for i in range(500):
        n = rng.randrange(2, 13)
        g = random_graph(rng, n, rng.random())
        for t in range(n):
            tr = t_disintegration(g, t)
            if tr.core.n and min_degree(tr.core) <= t:
                bad.append((i, t, "core-degree"))
            eligible = [v for v in range(n) if g.degree(v) <= t]
            for v in eligible[:3]:
                if t_disintegration(g, t, first_deleted=v).core_vertices != tr.core_vertices:
                    bad.append((i, t, "order"))
            # replay deletions, bounding each step's clique loss
            for s in (2, 3):
                cur, alive = g, list(range(n))
                for v, d in tr.deleted:
                    pos = alive.index(v)
                    nxt = induced_subgraph(cur, [u for u in range(cur.n) if u != pos])
                    lost = count_cliques(cur, s) - count_cliques(nxt, s)
                    if not 0 <= lost <= binomial(d, s - 1):
                        bad.append((i, t, s, "loss"))
                    cur, alive = nxt, [u for u in alive if u != v]
    _verdict(8, "disintegration yields a proper core, is order independent, "
                "and bounds per-step clique loss", not bad,
             "500 graphs, every t")


def test_criterion_09_threshold_probe():
    bad = []
    total_attempts = 0
    for n, delta in ((12, 4), (12, 6), (10, 5)):
        rep = sample_corollary1(n, delta, 10_000, seed=SEED)
        total_attempts += rep.attempts
        if rep.counterexamples:
            bad.append((n, delta, rep.counterexamples, rep.examples[:2]))
    _verdict(9, "no sampled graph above the size threshold fails the oracle",
             not bad, f"3x10^4 trials, {total_attempts} attempts")


def test_criterion_10_certificate_soundness():
    # kernel-audited on the full order-7/8 enumerations of criterion 4
    kernel_violations = sum(
        getattr(rep, "cert_violations", 1) for rep in _SWEEPS.values()
    )
    swept = sorted(_SWEEPS)
    # direct audit over every labeled graph of order 3..6
    bad = []
    for n in range(3, 7):
        pairs = list(combinations(range(n), 2))
        for code in range(1 << len(pairs)):
            g = from_edges(n, [p for j, p in enumerate(pairs) if (code >> j) & 1])
            truth = is_hamiltonian_connected(g)
            for test in (ore_test, lick_test, size_test):
                v = test(g)
                if v.outcome is Outcome.HC_CERTIFIED and not truth:
                    bad.append((n, code, test.__name__))
                if v.outcome is Outcome.NHC_CERTIFIED and truth:
                    bad.append((n, code, test.__name__))
    ok = kernel_violations == 0 and len(swept) == 3 and not bad
    _verdict(10, "no certificate ever contradicts the oracle", ok,
             f"orders 3..6 direct, orders 7..8 via sweeps {swept}")


def test_criterion_11_convexity():
    bad = []
    for n in range(8, 61):
        top = n // 2
        for s in (2, 3, 4):
            for seq in (
                [f_s_formula(n, d, s) for d in range(3, top + 1)],
                [g_s_formula(n, d, s) for d in range(3, top + 1)],
                [lambda_s(n, x, s) for x in range(3, top + 1)],
            ):
                for j in range(len(seq) - 2):
                    if seq[j + 2] - 2 * seq[j + 1] + seq[j] < 0:
                        bad.append((n, s, j))
    _verdict(11, "both clique formulas and the split form are discretely convex",
             not bad, "n<=60, s=2..4")
