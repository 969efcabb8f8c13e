"""End-to-end acceptance run: one test per criterion.

``conftest.py`` prints a pass/fail line for each of them at the end of the
session. The translation criterion takes a few minutes and carries the
``slow`` marker, but it still runs by default.
"""

import random
import time

import pytest

import golden
import tagged
from teamlogic.corpus import MAIN_THEOREM_QUANTIFIERS
from teamlogic.harness import SweepSpec, random_formula, run_sweep
from teamlogic.model import parse_structure, parse_team
from teamlogic.semantics import PAPER, eval_eso, eval_fo, eval_sentence, eval_team
from teamlogic.syntax import Signature, parse_formula
from teamlogic.syntax.ast import GQ, And, Dep, Exists, Forall, Indep, Neg, Or
from teamlogic.syntax.ops import walk

P1 = Signature.parse("P/1")


def sweep(record_property, **kw):
    report = run_sweep(SweepSpec(**kw))
    record_property("summary", report.summary())
    assert report.passed, f"{report.summary()}\n{report.counterexample}"
    return report


def test_criterion_01_golden_suite(record_property):
    start = time.perf_counter()
    kinds = set()
    for _, m, team, text, expected, *rest in golden.TEAM_CASES:
        cfg = PAPER.but(**rest[0]) if rest else PAPER
        phi = parse_formula(text)
        kinds |= {type(n).__name__ for n in walk(phi)}
        assert eval_team(parse_structure(m), parse_team(team), phi, cfg) is expected, text
    for _, m, text, expected in golden.SENTENCE_CASES:
        assert eval_sentence(parse_structure(m), parse_formula(text)) is expected, text
    for _, m, s, text, expected in golden.FO_CASES:
        assert eval_fo(parse_structure(m), s, parse_formula(text)) is expected, text
    for _, m, interp, text, expected in golden.ESO_CASES:
        assert eval_eso(parse_structure(m), parse_formula(text), interp) is expected, text
    failed = [name for name, check in tagged.EXAMPLES if check() is not True]
    elapsed = time.perf_counter() - start
    total = len(golden.TEAM_CASES) + len(golden.SENTENCE_CASES) + len(golden.FO_CASES) + len(golden.ESO_CASES)
    record_property("summary", f"{total} cases + {len(tagged.EXAMPLES)} worked examples, {elapsed:.2f}s")
    assert not failed, failed
    assert total >= 30
    needed = {c.__name__ for c in (And, Or, Exists, Forall, GQ, Dep, Neg, Indep)} | {"Rel", "Eq"}
    assert needed <= kinds, needed - kinds
    assert elapsed < 1.0


def test_criterion_02_basic_properties(record_property):
    start = time.perf_counter()
    lines = []
    for prop in ("empty-team", "downward-closure", "locality", "flatness"):
        for kw in ({"source": "exhaustive", "sizes": (2,)}, {"source": "random", "sizes": (3,), "count": 500}):
            report = run_sweep(SweepSpec(prop, signature=P1, depth=2, quantifiers=("exists", "forall", "most"), **kw))
            lines.append(report.summary())
            assert report.passed, f"{report.summary()}\n{report.counterexample}"
    elapsed = time.perf_counter() - start
    record_property("summary", f"8 sweeps, {elapsed:.1f}s")
    assert elapsed < 120, lines


def test_criterion_03_gq_faithfulness(record_property):
    sweep(record_property, property="gq-faithfulness", sizes=(2,), depth=2)


def test_criterion_04_connective_lemma(record_property):
    sweep(record_property, property="connective-lemma", sizes=(2, 3), depth=1, quantifiers=("most", "atleast2"))


def test_criterion_05_normal_form(record_property):
    report = sweep(record_property, property="normal-form", sizes=(2, 3))
    assert report.wall_time < 300


def test_criterion_06_flattening(record_property):
    sweep(record_property, property="flattening", sizes=(2, 3))


def test_criterion_07_main_theorem(record_property):
    report = sweep(record_property, property="main-theorem", sizes=(2, 3), quantifiers=MAIN_THEOREM_QUANTIFIERS)
    assert report.expected == 3 * 10 * (4 + 8)
    assert report.wall_time < 300


@pytest.mark.slow
def test_criterion_08_translation(record_property):
    d = run_sweep(SweepSpec("translation", sizes=(2,), depth=2, flavor="d"))
    assert d.passed, f"{d.summary()}\n{d.counterexample}"
    rng = random.Random(8)
    formulas = tuple(random_formula(rng, 2, P1, ("exists", "forall", "most"), "iq") for _ in range(200))
    i = run_sweep(SweepSpec("translation", sizes=(2,), source="list", formulas=formulas, flavor="i"))
    record_property("summary", f"{d.summary()}; {i.summary()}")
    assert i.passed, f"{i.summary()}\n{i.counterexample}"


def test_criterion_09_dep_from_indep(record_property):
    sweep(record_property, property="dep-from-indep", sizes=(2,))


def test_criterion_10_dual(record_property):
    sweep(record_property, property="dual", sizes=(1, 2, 3, 4))


def test_criterion_11_small_trick(record_property):
    sweep(record_property, property="small-trick", sizes=(2, 3), quantifier="QS_2")


def test_criterion_12_minimal_witness(record_property):
    sweep(record_property, property="minimal-witness", sizes=(2,), depth=2)
