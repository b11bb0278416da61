"""Experiment configuration with a lossless flat key=value text form.

A config can round-trip through its text serialization bit-exactly, so a
run's metadata file doubles as a replay input.
"""

from dataclasses import dataclass, fields, replace

from .errors import InputError, ParameterError

PRESETS = (
    "torus",
    "sphere",
    "rectangle",
    "gauss-product",
    "er-normalized",
    "er-unnormalized",
    "kron-product",
    "custom-pointcloud",
    "custom-edgelist",
)

_INT_KEYS = {"seed", "n", "lmax"}
_FLOAT_KEYS = {"p", "t0", "sigma"}
_BOOL_KEYS = {"scale_coords"}
_AXES_KEYS = {"axes"}


@dataclass(frozen=True)
class ExperimentConfig:
    """Everything a preset run needs; None means "use the preset default".

    ``scale`` switches ER and sphere presets between full size and a small
    CI-friendly size; ``scale_coords`` stretches embedding axes by their
    affinity eigenvalue magnitudes.
    """

    preset: str
    seed: int = 7
    p: float = None
    t0: float = None
    axes: tuple = (1, 2, 3)
    out: str = ""
    scale: str = "full"
    diag: str = "natural"
    n: int = None
    lmax: int = None
    sigma: float = None
    input: str = None
    delimiter: str = ","
    scale_coords: bool = None

    def __post_init__(self):
        if self.preset not in PRESETS:
            raise ParameterError(
                f"unknown preset {self.preset!r}; choose from {', '.join(PRESETS)}"
            )
        if self.scale not in ("full", "small"):
            raise ParameterError(f"scale must be 'full' or 'small', got {self.scale!r}")
        if self.diag not in ("natural", "one"):
            raise ParameterError(f"diag must be 'natural' or 'one', got {self.diag!r}")

    def override(self, **kwargs):
        """Copy with the given non-None fields replaced (CLI flag layering)."""
        updates = {k: v for k, v in kwargs.items() if v is not None}
        return replace(self, **updates) if updates else self


def dumps(cfg):
    """Serialize to sorted key=value lines; None fields are omitted."""
    parts = {}
    for f in fields(cfg):
        value = getattr(cfg, f.name)
        if value is None:
            continue
        if f.name in _AXES_KEYS:
            parts[f.name] = ",".join(str(a) for a in value)
        elif f.name in _BOOL_KEYS:
            parts[f.name] = "true" if value else "false"
        elif f.name in _FLOAT_KEYS:
            parts[f.name] = "%.17g" % value
        else:
            parts[f.name] = str(value)
    return "\n".join(f"{k}={parts[k]}" for k in sorted(parts)) + "\n"


def loads(text):
    """Parse key=value lines back into an ExperimentConfig.

    Unknown keys and malformed values are input errors; a missing preset
    key is too. loads(dumps(cfg)) == cfg for every valid config.
    """
    known = {f.name for f in fields(ExperimentConfig)}
    raw = {}
    for ln, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise InputError(f"line {ln}: expected key=value, got {line!r}")
        key = key.strip()
        if key not in known:
            raise InputError(f"line {ln}: unknown config key {key!r}")
        if key in raw:
            raise InputError(f"line {ln}: duplicate key {key!r}")
        raw[key] = value
    if "preset" not in raw:
        raise InputError("config is missing the preset key")
    converted = {}
    for key, value in raw.items():
        try:
            if key in _INT_KEYS:
                converted[key] = int(value)
            elif key in _FLOAT_KEYS:
                converted[key] = float(value)
            elif key in _BOOL_KEYS:
                if value not in ("true", "false"):
                    raise ValueError(value)
                converted[key] = value == "true"
            elif key in _AXES_KEYS:
                converted[key] = tuple(int(a) for a in value.split(","))
            else:
                converted[key] = value
        except ValueError:
            raise InputError(f"config key {key!r} has malformed value {value!r}") from None
    return ExperimentConfig(**converted)


def load(path):
    with open(path, "r", encoding="utf-8") as fh:
        return loads(fh.read())


def dump(cfg, path):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(dumps(cfg))
