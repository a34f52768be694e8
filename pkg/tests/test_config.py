import pytest

from unelgamal.config import DEFAULT_BUDGET, EFFORT_CAP_ENV, Budget
from unelgamal.errors import InputError


def test_effort_cap_overrides_work_budgets():
    budget = DEFAULT_BUDGET.with_effort_cap(100)
    assert (budget.rho_iterations, budget.bsgs_table, budget.bruteforce_order) == (100, 100, 100)
    assert budget.units_cap == DEFAULT_BUDGET.units_cap


@pytest.mark.parametrize('cap', [0, -5])
def test_effort_cap_must_be_positive(cap):
    with pytest.raises(InputError):
        Budget().with_effort_cap(cap)


@pytest.mark.parametrize('environ', [{}, {EFFORT_CAP_ENV: ''}, {EFFORT_CAP_ENV: '  '}])
def test_budget_without_environment_override(environ):
    assert Budget.from_environment(environ) == DEFAULT_BUDGET


def test_budget_from_environment():
    assert Budget.from_environment({EFFORT_CAP_ENV: ' 4096 '}).bsgs_table == 4096


@pytest.mark.parametrize('raw', ['many', '1e3', '0'])
def test_budget_rejects_bad_environment(raw):
    with pytest.raises(InputError):
        Budget.from_environment({EFFORT_CAP_ENV: raw})
