import numpy as np
import pytest

from eigenscape import ExperimentConfig, InputError, ParameterError, torus_basis
from eigenscape import config as cfg
from eigenscape import fileio
from eigenscape.landscape import Embedding


def test_matrix_csv_round_trip_exact(tmp_path):
    rng = np.random.default_rng(1)
    A = rng.normal(size=(7, 5))
    path = tmp_path / "m.csv"
    fileio.write_matrix_csv(path, A)
    assert np.array_equal(fileio.read_matrix_csv(path), A)


def test_basis_csv_round_trip(tmp_path):
    b = torus_basis(9)
    path = tmp_path / "basis.csv"
    fileio.write_basis_csv(path, b)
    idx, lams, labels, vecs = fileio.read_basis_vectors(path)
    assert np.array_equal(idx, np.arange(9))
    assert np.array_equal(lams, b.eigenvalues)
    assert np.array_equal(vecs, b.vectors)
    assert labels[1] == ("cos", "1")  # label fields come back as strings


def test_basis_csv_complex_round_trip(tmp_path):
    b = torus_basis(6, mode="complex")
    path = tmp_path / "basis.csv"
    fileio.write_basis_csv(path, b)
    _, _, _, vecs = fileio.read_basis_vectors(path)
    assert np.iscomplexobj(vecs)
    assert np.array_equal(vecs, b.vectors)


def test_embedding_csv_round_trip(tmp_path):
    rng = np.random.default_rng(2)
    coords = rng.normal(size=(5, 3))
    emb = Embedding(coords, (1, 2, 3), np.array([3.0, 2.0, 1.0]), False,
                    labels=tuple((k, k + 1) for k in range(5)))
    lams = rng.uniform(0, 10, 5)
    path = tmp_path / "e.csv"
    fileio.write_embedding_csv(path, emb, lams)
    idx, lams2, labels, coords2 = fileio.read_embedding_csv(path)
    assert np.array_equal(coords2, coords)
    assert np.array_equal(lams2, lams)
    assert labels[3] == ("3", "4")


def test_metadata_round_trip_sorted(tmp_path):
    path = tmp_path / "meta.txt"
    fileio.write_metadata(path, {"zeta": 1.5, "alpha": "torus", "mid": 7})
    text = path.read_text()
    assert text.splitlines()[0].startswith("alpha=")
    meta = fileio.read_metadata(path)
    assert meta == {"zeta": "1.5", "alpha": "torus", "mid": "7"}


def test_points_csv(tmp_path):
    path = tmp_path / "pts.csv"
    path.write_text("0.5,1.0\n-1.25,2.0\n")
    pts = fileio.read_points_csv(path)
    assert np.array_equal(pts, [[0.5, 1.0], [-1.25, 2.0]])
    semi = tmp_path / "pts2.csv"
    semi.write_text("1;2\n3;4\n")
    assert fileio.read_points_csv(semi, delimiter=";").shape == (2, 2)


def test_points_csv_rejects_malformed(tmp_path):
    bad = tmp_path / "bad.csv"
    bad.write_text("1,2\n3\n")
    with pytest.raises(InputError):
        fileio.read_points_csv(bad)
    nan = tmp_path / "nan.csv"
    nan.write_text("1,x\n")
    with pytest.raises(InputError):
        fileio.read_points_csv(nan)
    empty = tmp_path / "empty.csv"
    empty.write_text("")
    with pytest.raises(InputError):
        fileio.read_points_csv(empty)


def test_l1_csv_round_trip(tmp_path):
    path = tmp_path / "l1.csv"
    prof = [(0, 0.0, 8.0), (1, 1.0, 5.652)]
    fileio.write_l1_csv(path, prof)
    assert fileio.read_l1_csv(path) == prof


def test_svg_writers_deterministic(tmp_path):
    rng = np.random.default_rng(3)
    coords = rng.normal(size=(20, 2))
    colors = [k % 4 for k in range(20)]
    a, b = tmp_path / "a.svg", tmp_path / "b.svg"
    fileio.write_scatter_svg(a, coords, colors, title="t")
    fileio.write_scatter_svg(b, coords, colors, title="t")
    assert a.read_bytes() == b.read_bytes()
    grid = rng.normal(size=(6, 9))
    fileio.write_heatmap_svg(a, grid, title="h")
    fileio.write_heatmap_svg(b, grid, title="h")
    assert a.read_bytes() == b.read_bytes()
    assert a.read_text().startswith("<svg ")


# ---------------------------------------------------------------- config

def test_config_round_trip_lossless():
    examples = [
        ExperimentConfig(preset="torus"),
        ExperimentConfig(preset="sphere", seed=3, p=2.5, t0=0.3, lmax=11,
                         axes=(2, 3, 4), scale="small", out="runs/x"),
        ExperimentConfig(preset="custom-pointcloud", input="pts.csv",
                         sigma=0.25, delimiter=";", scale_coords=True),
        ExperimentConfig(preset="kron-product", diag="one", n=64,
                         scale_coords=False),
    ]
    for c in examples:
        assert cfg.loads(cfg.dumps(c)) == c


def test_config_file_round_trip(tmp_path):
    path = tmp_path / "run.cfg"
    c = ExperimentConfig(preset="rectangle", p=4.0, seed=9)
    cfg.dump(c, path)
    assert cfg.load(path) == c


def test_config_defaults_apply():
    c = cfg.loads("preset=torus\n")
    assert c.seed == 7 and c.axes == (1, 2, 3) and c.p is None


def test_config_comments_and_blanks_ignored():
    c = cfg.loads("# comment\n\npreset=torus\nseed=5\n")
    assert c.seed == 5


def test_config_rejects_malformed():
    with pytest.raises(InputError):
        cfg.loads("preset=torus\nbogus_key=1\n")
    with pytest.raises(InputError):
        cfg.loads("seed=3\n")  # no preset
    with pytest.raises(InputError):
        cfg.loads("preset=torus\nseed=abc\n")
    with pytest.raises(InputError):
        cfg.loads("preset=torus\nseed=1\nseed=2\n")
    with pytest.raises(InputError):
        cfg.loads("preset torus\n")
    with pytest.raises(ParameterError):
        cfg.loads("preset=moebius\n")
    with pytest.raises(ParameterError):
        cfg.loads("preset=torus\nscale=tiny\n")


def test_config_override_layers_only_set_flags():
    base = ExperimentConfig(preset="torus", seed=2, p=3.0)
    assert base.override(seed=None, p=None) == base
    bumped = base.override(seed=10)
    assert bumped.seed == 10 and bumped.p == 3.0
