import json
import math

import numpy as np
import pytest

import kout.montecarlo as mc
from kout.deletion import DeletionSpec
from kout.errors import InvalidParameterError, SweepError
from kout.graphs import sample_er
from kout.montecarlo import (
    CSV_HEADER,
    ExperimentConfig,
    compare_er,
    run_sweep,
    run_trial,
)
from kout.seeding import trial_seeds


def small_config(**overrides):
    base = dict(
        model="kout",
        n=40,
        k_values=[2, 3],
        deletion=DeletionSpec(mode="count", value=8),
        trials=10,
        master_seed=4242,
    )
    base.update(overrides)
    return ExperimentConfig(**base)


class TestRunTrial:
    def test_forced_edge_is_connected(self):
        res = run_trial("kout", 2, 1, DeletionSpec(mode="count", value=0, seed=1), 5)
        assert res.connected and res.outside_giant == 0 and res.component_count == 1

    def test_determinism(self):
        spec = DeletionSpec(mode="count", value=10, seed=33)
        a = run_trial("kout", 100, 2, spec, 77)
        b = run_trial("kout", 100, 2, spec, 77)
        assert a == b

    def test_unknown_model(self):
        with pytest.raises(InvalidParameterError):
            run_trial("ws", 10, 2, DeletionSpec(mode="count", value=0, seed=1), 0)

    def test_high_k_half_deletion_connected(self):
        # K=15 is far above the ~7.14 threshold for alpha=0.5 at n=5000
        spec = DeletionSpec(mode="fraction", value=0.5)
        connected = 0
        for i in range(100):
            g_seed, d_seed = trial_seeds(9, "kout", 5000, 15, 2500, i)
            spec_i = DeletionSpec(mode="count", value=2500, seed=d_seed)
            connected += run_trial("kout", 5000, 15, spec_i, g_seed).connected
        assert connected >= 95


class TestRunSweep:
    def test_row_structure(self):
        result = run_sweep(small_config(), workers=1)
        assert [(r.model, r.k) for r in result.rows] == [("kout", 2), ("kout", 3)]
        for row in result.rows:
            assert 0.0 <= row.prob_connected <= 1.0
            assert row.gamma == 8 and row.trials == 10
            assert row.max_outside_giant >= row.p95_outside_giant >= 0
            assert row.mean_outside_giant >= 0
            assert row.prob_giant_within_lambda is None

    def test_worker_count_does_not_change_output(self):
        cfg = small_config(trials=300)  # several chunks
        csv1 = run_sweep(cfg, workers=1).csv_text()
        csv8 = run_sweep(cfg, workers=8).csv_text()
        assert csv1 == csv8

    def test_rerun_is_byte_identical(self):
        cfg = small_config(trials=50)
        assert run_sweep(cfg, workers=1).csv_text() == run_sweep(cfg, workers=1).csv_text()

    def test_estimators_match_manual_recount(self):
        cfg = small_config(k_values=[2], trials=64, lam=3)
        row = run_sweep(cfg, workers=1).rows[0]
        outside = []
        connected = 0
        for i in range(64):
            g_seed, d_seed = trial_seeds(4242, "kout", 40, 2, 8, i)
            res = run_trial("kout", 40, 2, DeletionSpec(mode="count", value=8, seed=d_seed), g_seed)
            outside.append(res.outside_giant)
            connected += res.connected
        assert row.prob_connected == connected / 64
        assert row.mean_outside_giant == np.mean(outside)
        assert row.max_outside_giant == max(outside)
        assert row.p95_outside_giant == np.percentile(outside, 95)
        # strict inequality: outside < lam
        assert row.prob_giant_within_lambda == sum(o < 3 for o in outside) / 64

    def test_fraction_deletion_realizes_gamma(self):
        cfg = small_config(deletion=DeletionSpec(mode="fraction", value=0.25))
        row = run_sweep(cfg, workers=1).rows[0]
        assert row.gamma == 10

    def test_master_seed_changes_results(self):
        a = run_sweep(small_config(trials=40), workers=1)
        b = run_sweep(small_config(trials=40, master_seed=999), workers=1)
        assert a.csv_text() != b.csv_text()

    def test_invalid_configs_rejected(self):
        with pytest.raises(InvalidParameterError):
            run_sweep(small_config(k_values=[]), workers=1)
        with pytest.raises(InvalidParameterError):
            run_sweep(small_config(k_values=[40]), workers=1)
        with pytest.raises(InvalidParameterError):
            run_sweep(small_config(k_values=[2, 2]), workers=1)
        with pytest.raises(InvalidParameterError):
            run_sweep(small_config(trials=0), workers=1)
        with pytest.raises(InvalidParameterError):
            run_sweep(small_config(model="smallworld"), workers=1)
        with pytest.raises(InvalidParameterError):
            run_sweep(small_config(lam=0), workers=1)

    def test_cell_failure_names_cell(self, monkeypatch):
        real = mc.run_trial

        def flaky(model, n, k_or_p, deletion, graph_seed):
            if k_or_p == 3:
                raise RuntimeError("boom")
            return real(model, n, k_or_p, deletion, graph_seed)

        monkeypatch.setattr(mc, "run_trial", flaky)
        with pytest.raises(SweepError, match=r"model=kout k=3 gamma=8"):
            run_sweep(small_config(), workers=1)


class TestCompareEr:
    def test_paired_rows_per_k(self):
        cfg = small_config(model="both", k_values=[2, 4], trials=12)
        rows = compare_er(cfg, workers=1).rows
        assert [(r.model, r.k) for r in rows] == [
            ("kout", 2),
            ("er", 2),
            ("kout", 4),
            ("er", 4),
        ]
        assert all(r.trials == 12 for r in rows)

    def test_er_mean_degree_matches_kout(self):
        # G(n, 2k/n) mean degree is 2k/n * (n-1) ~ 2k, i.e. k edges per node
        n, k = 5000, 5
        g = sample_er(n, 2 * k / n, 31)
        assert abs(g.edge_count / n - k) / k < 0.05

    def test_requires_both(self):
        with pytest.raises(InvalidParameterError):
            compare_er(small_config(model="kout"), workers=1)

    def test_run_sweep_handles_both_model(self):
        cfg = small_config(model="both", trials=8)
        rows = run_sweep(cfg, workers=1).rows
        assert len(rows) == 4


class TestCsvContract:
    def test_header_exact(self):
        assert CSV_HEADER == (
            "model,n,k,gamma,trials,master_seed,prob_connected,mean_outside_giant,"
            "max_outside_giant,p95_outside_giant,mean_components,prob_giant_within_lambda"
        )

    def test_csv_shape_and_line_endings(self, tmp_path):
        cfg = small_config(trials=16)
        result = run_sweep(cfg, workers=1)
        path = tmp_path / "out.csv"
        result.write_csv(str(path))
        raw = path.read_bytes()
        assert b"\r" not in raw
        text = raw.decode("utf-8")
        lines = text.splitlines()
        assert lines[0] == CSV_HEADER
        assert len(lines) == 1 + len(result.rows)
        # lambda unset -> empty last column
        assert lines[1].endswith(",")

    def test_csv_parses_back(self):
        cfg = small_config(trials=16, lam=2)
        result = run_sweep(cfg, workers=1)
        line = result.csv_text().splitlines()[1].split(",")
        assert line[0] == "kout"
        assert int(line[1]) == 40 and int(line[3]) == 8
        assert 0.0 <= float(line[6]) <= 1.0
        assert line[11] != ""


class TestConfigFile:
    def test_load_valid(self, tmp_path):
        doc = {
            "model": "kout",
            "n": 30,
            "k_values": [2],
            "deletion": {"mode": "fraction", "value": 0.2},
            "trials": 5,
            "master_seed": 7,
            "lambda": 4,
        }
        path = tmp_path / "cfg.json"
        path.write_text(json.dumps(doc))
        cfg = ExperimentConfig.load(str(path))
        assert cfg.lam == 4 and cfg.deletion.mode == "fraction"

    def test_unknown_and_missing_fields(self):
        good = {
            "model": "kout",
            "n": 30,
            "k_values": [2],
            "deletion": {"mode": "count", "value": 3},
            "trials": 5,
            "master_seed": 7,
        }
        with pytest.raises(InvalidParameterError, match="unknown"):
            ExperimentConfig.from_json({**good, "spare": 1})
        bad = dict(good)
        del bad["trials"]
        with pytest.raises(InvalidParameterError, match="missing"):
            ExperimentConfig.from_json(bad)
        with pytest.raises(InvalidParameterError):
            ExperimentConfig.from_json({**good, "deletion": {"mode": "count"}})


class TestStatisticalTrend:
    def test_prob_connected_nondecreasing_in_k(self):
        # n=5000, alpha=0.5: monotone up to two combined standard errors
        cfg = ExperimentConfig(
            model="kout",
            n=5000,
            k_values=[2, 4, 6, 8, 10, 12],
            deletion=DeletionSpec(mode="fraction", value=0.5),
            trials=200,
            master_seed=20260811,
        )
        rows = run_sweep(cfg, workers=2).rows
        probs = [r.prob_connected for r in rows]
        for lo, hi in zip(probs[:-1], probs[1:]):
            se = math.sqrt(lo * (1 - lo) / 200) + math.sqrt(hi * (1 - hi) / 200)
            assert hi >= lo - 2 * se
