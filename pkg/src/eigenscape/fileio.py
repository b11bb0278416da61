"""Deterministic CSV/SVG artifact writers and readers.

Every writer here produces byte-identical output for identical inputs:
floats are printed with repr-exact precision (17 significant digits),
iteration orders are fixed, and nothing timestamps itself. Golden-file
tests depend on that.
"""

import math

import numpy as np

from .errors import InputError

FLOAT_FMT = "%.17g"


def _fmt(x):
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    if isinstance(x, (complex, np.complexfloating)):
        re = FLOAT_FMT % x.real
        im = FLOAT_FMT % x.imag
        return f"{re}{'+' if not im.startswith('-') else ''}{im}j"
    if isinstance(x, (float, np.floating)):
        return FLOAT_FMT % x
    return str(x)


def _label_fields(label):
    if isinstance(label, tuple):
        return [str(part) for part in label]
    return [str(label)]


def write_basis_csv(path, basis):
    """One row per basis function: index, eigenvalue, label fields, samples."""
    width = max((len(_label_fields(l)) for l in basis.labels), default=1) if basis.labels else 1
    head = ["index", "eigenvalue"] + [f"label_{i}" for i in range(width)]
    head += [f"v{x}" for x in range(basis.n)]
    lines = [",".join(head)]
    for k in range(basis.m):
        fields = _label_fields(basis.labels[k]) if basis.labels else [str(k)]
        fields += [""] * (width - len(fields))
        row = [str(k), _fmt(float(basis.eigenvalues[k]))] + fields
        row += [_fmt(v) for v in basis.vectors[:, k]]
        lines.append(",".join(row))
    _dump(path, lines)


def read_basis_vectors(path):
    """Read back (indices, eigenvalues, labels, vectors) from a basis CSV.

    Quadrature weights are not stored in the CSV, so this does not rebuild
    a full EigenBasis; it serves the query tools, which only need sampled
    values.
    """
    head, rows = _load(path)
    first_v = next((c for c, name in enumerate(head) if name == "v0"), None)
    if first_v is None:
        raise InputError(f"{path}: not a basis CSV (no sample columns)")
    idx = np.array([int(r[0]) for r in rows])
    lams = np.array([float(r[1]) for r in rows])
    labels = tuple(
        tuple(f for f in r[2:first_v] if f != "") for r in rows
    )
    vecs = np.array(
        [[complex(v) if "j" in v else float(v) for v in r[first_v:]] for r in rows]
    ).T
    if not np.iscomplexobj(vecs):
        vecs = vecs.astype(np.float64)
    return idx, lams, labels, vecs


def write_matrix_csv(path, A):
    """Row-major matrix dump, 17 significant digits, no header."""
    lines = [",".join(FLOAT_FMT % v for v in row) for row in np.asarray(A)]
    _dump(path, lines)


def read_matrix_csv(path):
    with open(path, "r", encoding="utf-8") as fh:
        rows = [line.rstrip("\n").split(",") for line in fh if line.strip()]
    return np.array([[float(v) for v in row] for row in rows])


def write_embedding_csv(path, embedding, eigenvalues):
    """One row per function: index, eigenvalue, label fields, coordinates."""
    labels = embedding.labels
    width = max((len(_label_fields(l)) for l in labels), default=1) if labels else 1
    coord_names = ["x", "y", "z", *(f"c{i}" for i in range(3, embedding.coords.shape[1]))]
    head = ["index", "eigenvalue"] + [f"label_{i}" for i in range(width)]
    head += coord_names[: embedding.coords.shape[1]]
    lines = [",".join(head)]
    for k in range(embedding.n):
        fields = _label_fields(labels[k]) if labels else [str(k)]
        fields += [""] * (width - len(fields))
        row = [str(k), _fmt(float(eigenvalues[k]))] + fields
        row += [_fmt(float(c)) for c in embedding.coords[k]]
        lines.append(",".join(row))
    _dump(path, lines)


def read_embedding_csv(path):
    """Read back (indices, eigenvalues, labels, coords) from an embedding CSV."""
    head, rows = _load(path)
    first_c = next((c for c, name in enumerate(head) if name == "x"), None)
    if first_c is None:
        raise InputError(f"{path}: not an embedding CSV (no coordinate columns)")
    idx = np.array([int(r[0]) for r in rows])
    lams = np.array([float(r[1]) for r in rows])
    labels = tuple(tuple(f for f in r[2:first_c] if f != "") for r in rows)
    coords = np.array([[float(v) for v in r[first_c:]] for r in rows])
    return idx, lams, labels, coords


def write_l1_csv(path, profile):
    lines = ["index,eigenvalue,l1_norm"]
    for k, lam, l1 in profile:
        lines.append(f"{k},{_fmt(lam)},{_fmt(l1)}")
    _dump(path, lines)


def read_l1_csv(path):
    _, rows = _load(path)
    return [(int(r[0]), float(r[1]), float(r[2])) for r in rows]


def write_metadata(path, mapping):
    """Flat key=value metadata, keys sorted; values stringified losslessly."""
    lines = [f"{k}={_fmt(mapping[k])}" for k in sorted(mapping)]
    _dump(path, lines)


def read_metadata(path):
    out = {}
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.rstrip("\n")
            if not line:
                continue
            key, _, value = line.partition("=")
            out[key] = value
    return out


def read_points_csv(path, delimiter=","):
    """Point cloud: one row per point, columns are coordinates, no header."""
    with open(path, "r", encoding="utf-8") as fh:
        rows = [line.strip() for line in fh if line.strip()]
    if not rows:
        raise InputError(f"{path}: empty point-cloud file")
    pts = []
    for r, line in enumerate(rows):
        try:
            pts.append([float(v) for v in line.split(delimiter)])
        except ValueError:
            raise InputError(f"{path}: non-numeric value on row {r}") from None
    width = len(pts[0])
    if any(len(p) != width for p in pts):
        raise InputError(f"{path}: inconsistent column count")
    return np.array(pts)


def _color_for(value, palette):
    return palette[value]


def _build_palette(values):
    """Sorted distinct values -> evenly spaced hues. Deterministic."""
    distinct = sorted(set(values), key=lambda v: (isinstance(v, str), v))
    k = len(distinct)
    return {
        v: f"hsl({(360.0 * i / max(k, 1)):.1f},70%,45%)"
        for i, v in enumerate(distinct)
    }


def write_scatter_svg(path, coords, color_values=None, title="", size=640):
    """2D scatter of the first two embedding coordinates.

    ``color_values`` assigns one hashable value per point; distinct values
    get distinct hues. Output is deterministic: fixed canvas, fixed point
    order, fixed numeric formatting.
    """
    coords = np.asarray(coords, dtype=np.float64)
    if coords.ndim != 2 or coords.shape[1] < 2:
        raise InputError("scatter needs at least two coordinate columns")
    xy = coords[:, :2]
    margin = 48.0
    lo = xy.min(axis=0)
    hi = xy.max(axis=0)
    span = np.where(hi > lo, hi - lo, 1.0)
    pos = margin + (xy - lo) / span * (size - 2 * margin)
    # svg y grows downward; flip so larger y plots higher
    pos[:, 1] = size - pos[:, 1]
    if color_values is None:
        color_values = [0] * len(xy)
    palette = _build_palette(color_values)
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" fill="white"/>',
    ]
    if title:
        lines.append(
            f'<text x="{size / 2:.1f}" y="24" text-anchor="middle" '
            f'font-family="sans-serif" font-size="14">{title}</text>'
        )
    for k in range(len(xy)):
        lines.append(
            f'<circle cx="{pos[k, 0]:.2f}" cy="{pos[k, 1]:.2f}" r="4" '
            f'fill="{_color_for(color_values[k], palette)}" fill-opacity="0.85"/>'
        )
    lines.append("</svg>")
    _dump(path, lines)


def write_heatmap_svg(path, grid, title=""):
    """Diverging red/blue heat map of a 2D array; white at zero."""
    grid = np.asarray(grid)
    if np.iscomplexobj(grid):
        grid = grid.real
    if grid.ndim != 2:
        raise InputError(f"heat map needs a 2D array, got shape {grid.shape}")
    rows, cols = grid.shape
    vmax = float(np.abs(grid).max())
    if vmax == 0.0 or not math.isfinite(vmax):
        vmax = 1.0
    cell = max(2, 600 // max(rows, cols))
    width, height = cols * cell, rows * cell + (28 if title else 0)
    top = 28 if title else 0
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">'
    ]
    if title:
        lines.append(
            f'<text x="{width / 2:.1f}" y="18" text-anchor="middle" '
            f'font-family="sans-serif" font-size="13">{title}</text>'
        )
    for r in range(rows):
        for c in range(cols):
            s = float(grid[r, c]) / vmax
            if s >= 0:
                red, green, blue = 255, round(255 * (1 - s)), round(255 * (1 - s))
            else:
                red, green, blue = round(255 * (1 + s)), round(255 * (1 + s)), 255
            lines.append(
                f'<rect x="{c * cell}" y="{top + r * cell}" width="{cell}" '
                f'height="{cell}" fill="rgb({red},{green},{blue})"/>'
            )
    lines.append("</svg>")
    _dump(path, lines)


def _dump(path, lines):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines))
        fh.write("\n")


def _load(path):
    with open(path, "r", encoding="utf-8") as fh:
        rows = [line.rstrip("\n").split(",") for line in fh if line.strip()]
    if not rows:
        raise InputError(f"{path}: empty CSV")
    return rows[0], rows[1:]
