import json

import pytest

from tokengraphs import FamilySpec, make_family
from tokengraphs import theorems as T


def checks_of(v):
    return v.witness.get("checks", {})


@pytest.mark.parametrize("n", [3, 5, 6, 9, 12])
def test_cycle_theorem_verified(n):
    v = T.check_cycle_theorem(n)
    assert v.claim_id == "thm-cycle" and v.status == T.VERIFIED
    assert v.orders["aut"] == v.orders["induced"] == 2 * n


def test_cycle_four_reports_computed_order():
    v = T.check_cycle_theorem(4)
    assert v.claim_id == "case-cycle-4" and v.kind == "computed-case"
    # computed independently by refinement search and by plain backtracking
    assert v.orders["aut"] == v.orders["oracle"] == 48
    assert v.orders["expected"] == 16
    assert v.status == T.REFUTED


@pytest.mark.parametrize("n", range(3, 13))
def test_cycle_structure(n):
    v = T.check_cycle_structure(n)
    assert v.status == T.VERIFIED, checks_of(v)
    if n >= 6:
        assert checks_of(v)["L1_L2_explicit_map_to_C2n"]
        assert checks_of(v)["ring_descent"]


def test_cycle_rings():
    rings = T.cycle_rings(6)
    assert set(rings) == {1, 2, 3}
    assert len(rings[3]) == 3 and len(rings[1]) == 6
    assert frozenset((6, 1)) in rings[1]


def test_cycle_neighbor_observation():
    assert T.check_cycle_neighbors(4).status == T.REFUTED
    assert T.check_cycle_neighbors(4).witness["max_common_neighbors"] == 4
    for n in range(5, 10):
        assert T.check_cycle_neighbors(n).status == T.VERIFIED


@pytest.mark.parametrize("n,claim,order", [
    (3, "case-star-3", 2), (4, "case-star-4", 12), (5, "thm-star", 24), (7, "thm-star", 720),
])
def test_star(n, claim, order):
    v = T.check_star_theorem(n)
    assert v.claim_id == claim and v.status == T.VERIFIED, checks_of(v)
    assert v.orders["aut"] == order


@pytest.mark.parametrize("rim", range(5, 11))
def test_fan_census(rim):
    assert all(T.fan_degree_census(rim).values())


def test_fan_small_cases():
    v = T.check_fan_theorem(3)
    assert v.claim_id == "case-fan-3"
    assert v.orders["aut"] == 16 and v.orders["base"] == 4
    assert T.check_fan_theorem(4).status == T.VERIFIED


@pytest.mark.parametrize("rim", range(3, 11))
def test_wheel_decomposition(rim):
    assert all(T.wheel_decomposition(rim).values())


def test_wheel_three_is_larger_than_induced():
    v = T.check_wheel_theorem(3)
    assert v.status == T.VERIFIED and v.orders["aut"] == 48 and v.orders["induced"] == 24


@pytest.mark.parametrize("n,k", [(n, k) for n in range(4, 11) for k in range(2, n - 1)])
def test_path_observations(n, k):
    assert all(T.path_observations(n, k).values())


def test_path_half_case_is_conjecture():
    v = T.check_path_theorem(6, 3)
    assert v.claim_id == "conj-path" and v.label == "conjecture-consistent"
    assert checks_of(v)["equals_induced_plus_complement"]


def test_canonical_groups_agree_with_search():
    from tokengraphs import find_automorphism_group
    for spec in [FamilySpec("cycle", (7,)), FamilySpec("star", (6,)), FamilySpec("fan", (6,)),
                 FamilySpec("wheel", (6,)), FamilySpec("path", (5,)), FamilySpec("complete", (5,))]:
        assert T.canonical_base_group(spec).equals(find_automorphism_group(make_family(spec)))
    assert T.canonical_base_group(FamilySpec("grid", (2, 3))) is None


def test_johnson():
    expected = {(5, 2): 120, (6, 2): 720, (6, 3): 1440, (7, 3): 5040}
    for (n, k), order in expected.items():
        v = T.check_johnson(n, k)
        assert v.status == T.VERIFIED and v.orders["aut"] == order


def test_grid_counterexample():
    v = T.check_grid_counterexample()
    assert v.status == T.VERIFIED
    assert (v.orders["base"], v.orders["aut"]) == (4, 8)
    assert "non_induced_automorphism" in v.witness
    assert T.check_grid_counterexample(3, 3, 2).status == T.VERIFIED


def test_conjecture_skips():
    v = T.check_conjecture("star", 6, 3)
    assert v.status == T.SKIPPED and "complement" in v.reason
    assert T.check_conjecture("cycle", 7, 2).status == T.SKIPPED
    assert T.check_conjecture("cycle", 12, 5, max_size=100).status == T.SKIPPED
    assert T.check_conjecture("cycle", 14, 5, time_limit=0.0).status == T.SKIPPED
    with pytest.raises(ValueError):
        T.check_conjecture("grid", 6, 3)


def test_conjecture_consistent():
    for n in (7, 8, 9):
        v = T.check_conjecture("cycle", n, 3)
        assert v.label == "conjecture-consistent"
    v = T.check_conjecture("cycle", 8, 4)
    assert v.orders["aut"] == 2 * v.orders["induced"] == 32


def test_theorem1_indexing_report():
    v = T.check_theorem1_indexing()
    assert v.witness["readings_consistent_with_data"] == ["sections"]
    exceptions = {(c["family"], c["m"]) for c in v.witness["cases"] if not c["equal"]}
    assert exceptions == {("cycle", 4), ("star", 3), ("fan", 3), ("wheel", 3)}


def test_general_facts():
    for claim in ("thm-induced", "obs-degree", "prop-deletion", "thm-complement"):
        verdicts = T.run_claim(claim)
        assert verdicts and all(v.status == T.VERIFIED for v in verdicts), claim


def test_verdict_schema_and_reproducibility():
    verdicts = T.run_claim("thm-fan", ns=[3, 4, 5])
    report = json.loads(T.report_json(verdicts))
    for item in report:
        assert {"claim_id", "params", "status", "orders", "witness"} <= set(item)
        assert "runtime" not in item
    timed = json.loads(T.report_json(verdicts, timing=True))
    assert all("runtime" in item for item in timed)
    again = T.run_claim("thm-fan", ns=[5, 4, 3])
    assert T.report_json(again) == T.report_json(verdicts)


def test_parallel_sweep_is_identical():
    serial = T.run_claim("thm-wheel", ns=range(3, 8))
    parallel = T.run_claim("thm-wheel", ns=range(3, 8), jobs=3)
    assert T.report_json(serial) == T.report_json(parallel)


def test_refutation_rule():
    assert T.any_theorem_refuted([T.check_cycle_theorem(4)])
    conj = T.Verdict("conj-x", "conjecture", {}, T.REFUTED)
    assert not T.any_theorem_refuted([conj])
    assert conj.label == "conjecture-refuted"


def test_unknown_claim():
    with pytest.raises(ValueError):
        T.claim_tasks("thm-nothing")


def test_summary_table():
    text = T.summary_table(T.run_claim("counterexample-grid"))
    assert text.splitlines()[0].split()[0] == "claim"
    assert "counterexample-grid" in text
