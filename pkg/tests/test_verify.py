import pytest

from invsort.machines import MachineConfig
from invsort.verify import (
    SUITES,
    CheckResult,
    basis_equivalence,
    greedy_optimality,
    pop_stack_identities,
    run_suite,
    tree_vs_brute_force,
)


@pytest.mark.parametrize("name", sorted(SUITES))
def test_suites_pass_at_small_size(name):
    results = run_suite(name, 5, 3)
    assert results and all(r.passed for r in results), [r.line() for r in results if not r.passed]
    assert all(r.checked > 0 for r in results)


def test_counterexample_is_reported():
    # give the stack the pop-stack basis; 0,0,2,0,1 is stack sortable but contains 201
    wrong = MachineConfig("stack")
    import invsort.verify as verify

    real = verify.machine_basis
    try:
        verify.machine_basis = lambda m: real(MachineConfig("pop-stack"))
        results = basis_equivalence(inv_max_n=5, word_max_n=4, max_k=2, machines=[wrong])
    finally:
        verify.machine_basis = real
    failed = [r for r in results if not r.passed]
    assert failed
    assert failed[0].counterexample == "0,0,2,0,1 sortable=True avoids=False"
    assert failed[0].line().startswith("FAIL")


def test_check_result_serialises():
    r = CheckResult("x", True, 3)
    assert r.to_dict() == {"name": "x", "passed": True, "checked": 3, "counterexample": None}
    assert r.line() == "PASS x (3 checked)"


def test_other_entry_points():
    assert all(r.passed for r in greedy_optimality(4, 3))
    assert all(r.passed for r in tree_vs_brute_force(6))
    assert all(r.passed for r in pop_stack_identities(5, 3))
    assert len(run_suite("all", 4, 2)) == sum(len(run_suite(s, 4, 2)) for s in SUITES)
    with pytest.raises(ValueError):
        run_suite("nope", 3)
