import math

import pytest

import isingevo as ie


def test_objective_and_oracle():
    assert ie.raw_value(-1) == 0.0
    assert abs(ie.raw_value(84822) - 1.64e-5) < 1e-7
    cat = ie.enumerate_local_minima()
    assert len(cat) == 318
    assert cat[0].argmin == 84822
    assert 2.0e-3 <= ie.mean_minimum_value(cat) <= 3.0e-3
    assert [m.argmin for m in ie.top_k(cat, 3)] == [84822, 35499, 49322]
    assert cat.to_csv().splitlines()[0] == "rank,argmin,value"


def test_evaluator_budget_and_domain():
    ev = ie.BudgetedEvaluator(ie.ObjectiveSpec(), 2)
    ev.evaluate(3)
    ev.evaluate(3)
    assert ev.used == 2
    with pytest.raises(ie.BudgetExhausted):
        ev.evaluate(3)
    with pytest.raises(ie.DomainViolation):
        ie.BudgetedEvaluator(ie.ObjectiveSpec(), 5).evaluate(-1)


def test_acceptance_probability():
    assert ie.acceptance_probability(0.5, 0.2, 3.0) == 1.0
    assert ie.acceptance_probability(0.2, 0.2, 100.0) == 1.0
    assert math.isclose(ie.acceptance_probability(0.0, 0.01, 100.0), math.exp(-1))


def test_single_runs_spend_the_whole_budget():
    cat = ie.enumerate_local_minima()
    runners = [
        (ie.run_ising, ie.IsingConfig(width=10, height=10)),
        (ie.run_cellular, ie.CellularConfig(width=10, height=10)),
        (ie.run_sim_annealing, ie.AnnealingConfig()),
        (ie.run_mutation, ie.MutationConfig()),
        (ie.run_mixture, ie.MixtureConfig()),
        (ie.run_random_search, ie.RandomSearchConfig()),
    ]
    for run, cfg in runners:
        ev = ie.BudgetedEvaluator(ie.ObjectiveSpec(), 3000)
        r = run(cfg, ev, 5, cat)
        assert r.evals_used == 3000
        assert r.best_f == ie.raw_value(r.best_x)
        values = [f for _, f in r.trace]
        assert values == sorted(values, reverse=True)


def test_replicate_and_coverage():
    cat = ie.enumerate_local_minima()
    plan = ie.ExperimentPlan(ie.IsingConfig(width=10, height=10), n_runs=3, budget=5000,
                             base_seed=1, checkpoints=[100, 1000, 5000])
    rep = ie.replicate(plan, cat)
    assert len(rep.runs) == 3
    assert rep.runs_csv() == ie.replicate(plan, cat).runs_csv()
    curve = [c.mean_best_f for c in rep.stats.per_checkpoint]
    assert curve == sorted(curve, reverse=True)
    cov = ie.ensemble_coverage(plan, cat, 10)
    assert all(0 <= f <= 10 for f in cov.per_run_found)
    with pytest.raises(ValueError):
        ie.ExperimentPlan(ie.RandomSearchConfig(), n_runs=0)


def test_phase_sweep():
    cfg = ie.PhaseSweepConfig()
    cfg.betas = [1.0, 100.0]
    cfg.steps = [0, 1000]
    cfg.snapshot_steps = [0]
    res = ie.phase_sweep(cfg)
    assert abs(res.rel_std_at(1.0, 0) - 1 / math.sqrt(12)) < 0.03
    assert res.phase_csv().splitlines()[0] == "dims,beta,step,rel_std"
    assert len(res.snapshots[0].cells) == 900
