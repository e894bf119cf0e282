import json
import shutil
import subprocess

import pytest

from koutfigs import (
    SchemaError,
    render_comparison,
    render_connectivity,
    render_outside_giant,
)
from koutfigs.comparison import main as comparison_main
from koutfigs.connectivity import main as connectivity_main
from koutfigs.csvio import read_sweep_csv
from koutfigs.outside_giant import main as outside_giant_main

HEADER = (
    "model,n,k,gamma,trials,master_seed,prob_connected,mean_outside_giant,"
    "max_outside_giant,p95_outside_giant,mean_components,prob_giant_within_lambda"
)


def write_csv(path, rows):
    path.write_text("\n".join([HEADER] + rows) + "\n", encoding="utf-8")
    return str(path)


@pytest.fixture
def transition_csv(tmp_path):
    rows = [
        f"kout,5000,{k},2500,200,7,{p},12.0,80,30.0,4.0," for k, p in
        [(4, 0.0), (5, 0.01), (6, 0.12), (7, 0.45), (8, 0.81), (9, 0.95), (10, 0.99), (11, 1.0)]
    ]
    return write_csv(tmp_path / "transition.csv", rows)


@pytest.fixture
def two_gamma_csv(tmp_path):
    rows = [
        "kout,5000,2,500,100,7,0.1,40.0,90,70.0,9.0,",
        "kout,5000,3,500,100,7,0.6,8.0,30,20.0,3.0,",
        "kout,5000,4,500,100,7,0.97,1.0,6,3.0,1.2,",
        "kout,5000,2,2000,100,7,0.0,160.0,240,200.0,30.0,",
        "kout,5000,3,2000,100,7,0.05,60.0,110,90.0,12.0,",
        "kout,5000,4,2000,100,7,0.55,12.0,40,25.0,4.0,",
    ]
    return write_csv(tmp_path / "two_gamma.csv", rows)


@pytest.fixture
def comparison_csv(tmp_path):
    rows = [
        "kout,5000,3,2000,100,7,0.0,30.0,58,45.0,9.0,",
        "er,5000,3,2000,100,7,0.0,70.0,111,92.0,20.0,",
        "kout,5000,4,2000,100,7,0.2,8.0,15,11.0,3.0,",
        "er,5000,4,2000,100,7,0.1,20.0,36,28.0,6.0,",
        "kout,5000,5,2000,100,7,0.7,2.0,5,4.0,1.4,",
        "er,5000,5,2000,100,7,0.4,7.0,15,10.0,2.2,",
    ]
    return write_csv(tmp_path / "comparison.csv", rows)


class TestConnectivity:
    def test_writes_nonempty_image(self, transition_csv, tmp_path):
        out = tmp_path / "fig.svg"
        fig, written = render_connectivity(transition_csv, str(out))
        assert out.exists() and out.stat().st_size > 0
        assert written == str(out)

    def test_threshold_line_lands_between_gridlines(self, transition_csv, tmp_path):
        # r1 for alpha=0.5, n=5000 is 7.1384...; its line sits in (7, 8)
        overlay = [("r1(0.5, n=5000)", 7.138426281507961)]
        fig, _ = render_connectivity(transition_csv, str(tmp_path / "fig.svg"), overlay)
        ax = fig.axes[0]
        vlines = [
            ln.get_xdata()[0]
            for ln in ax.lines
            if len(set(ln.get_xdata())) == 1 and len(set(ln.get_ydata())) > 1
        ]
        assert len(vlines) == 1
        assert 7.0 < vlines[0] < 8.0

    def test_one_curve_per_gamma(self, two_gamma_csv, tmp_path):
        fig, _ = render_connectivity(two_gamma_csv, str(tmp_path / "fig.svg"))
        ax = fig.axes[0]
        labels = [t.get_text() for t in ax.get_legend().get_texts()]
        assert labels == ["gamma=500", "gamma=2000"]

    def test_axis_ranges_cover_data_and_overlay(self, two_gamma_csv, tmp_path):
        overlay = [("t", 9.7)]
        fig, _ = render_connectivity(two_gamma_csv, str(tmp_path / "fig.svg"), overlay)
        ax = fig.axes[0]
        x0, x1 = ax.get_xlim()
        y0, y1 = ax.get_ylim()
        assert x0 < 2 and x1 > 9.7
        assert y0 < 0.0 and y1 > 1.0

    def test_empty_body_errors_without_writing(self, tmp_path, capsys):
        csv = write_csv(tmp_path / "empty.csv", [])
        out = tmp_path / "fig.svg"
        code = connectivity_main(["--csv", csv, "--out", str(out)])
        assert code != 0
        assert not out.exists()
        assert capsys.readouterr().err.startswith("error:")

    def test_schema_mismatch_errors(self, tmp_path, capsys):
        bad = tmp_path / "bad.csv"
        bad.write_text("a,b,c\n1,2,3\n")
        code = connectivity_main(["--csv", str(bad), "--out", str(tmp_path / "f.svg")])
        assert code != 0 and "header" in capsys.readouterr().err

    def test_thresholds_sidecar(self, transition_csv, tmp_path, capsys):
        sidecar = tmp_path / "thr.json"
        sidecar.write_text(json.dumps([{"label": "r1", "value": 7.139}]))
        out = tmp_path / "fig.png"
        code = connectivity_main(
            ["--csv", transition_csv, "--out", str(out), "--thresholds", str(sidecar)]
        )
        assert code == 0 and out.stat().st_size > 0


class TestOutsideGiant:
    def test_single_curve(self, transition_csv, tmp_path):
        out = tmp_path / "fig.svg"
        fig, _ = render_outside_giant(transition_csv, str(out))
        assert out.stat().st_size > 0
        assert len(fig.axes[0].lines) == 1

    def test_theory_curve_added(self, transition_csv, tmp_path):
        theory = ("bound", [(4, 700.0), (6, 160.0), (8, 40.0), (11, 6.0)])
        fig, _ = render_outside_giant(transition_csv, str(tmp_path / "f.svg"), theory)
        ax = fig.axes[0]
        assert len(ax.lines) == 2
        labels = [t.get_text() for t in ax.get_legend().get_texts()]
        assert "bound" in labels
        assert ax.get_ylim()[1] > 700.0  # theory points inside the axis range

    def test_theory_sidecar_formats(self, transition_csv, tmp_path):
        plain = tmp_path / "plain.json"
        plain.write_text(json.dumps([[4, 700], [8, 40]]))
        labelled = tmp_path / "labelled.json"
        labelled.write_text(json.dumps({"label": "r3 inversion", "points": [[4, 700], [8, 40]]}))
        for sidecar in (plain, labelled):
            out = tmp_path / f"{sidecar.stem}.svg"
            code = outside_giant_main(
                ["--csv", transition_csv, "--out", str(out), "--theory", str(sidecar)]
            )
            assert code == 0 and out.stat().st_size > 0

    def test_missing_theory_is_fine(self, transition_csv, tmp_path):
        code = outside_giant_main(["--csv", transition_csv, "--out", str(tmp_path / "f.svg")])
        assert code == 0


class TestComparison:
    def test_paired_curves(self, comparison_csv, tmp_path):
        out = tmp_path / "fig.svg"
        fig, _ = render_comparison(comparison_csv, str(out))
        assert out.stat().st_size > 0
        ax = fig.axes[0]
        assert len(ax.lines) == 2
        labels = [t.get_text() for t in ax.get_legend().get_texts()]
        assert labels == ["er", "kout"]  # model column verbatim

    def test_kout_only_rejected(self, transition_csv, tmp_path, capsys):
        out = tmp_path / "fig.svg"
        code = comparison_main(["--csv", transition_csv, "--out", str(out)])
        assert code != 0
        assert "er" in capsys.readouterr().err
        assert not out.exists()


class TestOutputFormats:
    def test_default_is_vector(self, transition_csv, tmp_path):
        _, written = render_connectivity(transition_csv, str(tmp_path / "noext"))
        assert written.endswith(".svg")
        assert (tmp_path / "noext.svg").stat().st_size > 0

    def test_raster_flag(self, transition_csv, tmp_path):
        _, written = render_connectivity(transition_csv, str(tmp_path / "noext"), raster=True)
        assert written.endswith(".png")
        assert open(written, "rb").read(8).startswith(b"\x89PNG")

    def test_explicit_extension_wins(self, transition_csv, tmp_path):
        _, written = render_connectivity(transition_csv, str(tmp_path / "f.pdf"), raster=True)
        assert written.endswith(".pdf")


class TestCsvReader:
    def test_reads_lambda_column(self, tmp_path):
        rows = ["kout,100,2,10,50,7,0.5,1.0,3,2.0,1.5,0.9"]
        parsed = read_sweep_csv(write_csv(tmp_path / "l.csv", rows))
        assert parsed[0].prob_giant_within_lambda == 0.9

    def test_column_count_enforced(self, tmp_path):
        bad = tmp_path / "bad.csv"
        bad.write_text(HEADER + "\nkout,1,2\n")
        with pytest.raises(SchemaError):
            read_sweep_csv(str(bad))


@pytest.mark.skipif(shutil.which("kout") is None, reason="primary CLI not installed")
class TestAgainstPrimaryCli:
    def test_renders_real_sweep_output(self, tmp_path):
        config = {
            "model": "both",
            "n": 60,
            "k_values": [2, 3, 4],
            "deletion": {"mode": "count", "value": 12},
            "trials": 20,
            "master_seed": 5,
        }
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps(config))
        csv_path = tmp_path / "sweep.csv"
        subprocess.run(
            ["kout", "sweep", "--config", str(cfg), "--out", str(csv_path), "--workers", "1"],
            check=True,
            capture_output=True,
        )
        for fn, out in [
            (render_connectivity, "conn.svg"),
            (render_outside_giant, "giant.svg"),
            (render_comparison, "cmp.svg"),
        ]:
            _, written = fn(str(csv_path), str(tmp_path / out))
            assert (tmp_path / out).stat().st_size > 0
