"""Parameter sweeps, figure presets, threshold search and file emitters.

A sweep walks a one- or two-axis lattice of parameter values, evaluates
the steady-state entanglement summary at every grid point and collects
the results in a :class:`SweepGrid` that downstream emitters render as
CSV or as a self-contained SVG heatmap. Axis values use the natural
units of the problem (rates in units of the first cavity linewidth,
temperatures in kelvin); see :data:`PARAMETER_PATHS`.
"""

from __future__ import annotations

import io
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from ._version import __version__
from .cvgaussian import partial_transpose, reduce, symplectic_eigenvalues
from .errors import NoEntanglementError
from .model import BASELINE, SystemParams, entanglement_report

OUTPUT_COLUMNS = (
    "E_aa",
    "E_mm",
    "E_a1m1",
    "E_a2m2",
    "E_mm_over_E_aa",
    "N_am",
    "max_real_part",
)

DEFAULT_RESOLUTION_2D = 61
DEFAULT_RESOLUTION_1D = 121


# ---------------------------------------------------------------------------
# parameter paths


def _set_scalar(field):
    def setter(params: SystemParams, value: float) -> SystemParams:
        return params.replace(**{field: value})

    return setter


def _set_detuning(field, index):
    def setter(params: SystemParams, value: float) -> SystemParams:
        freqs = list(getattr(params, field))
        freqs[index] = params.omega_drive[index] + value * params.kappa_a[0]
        return params.replace(**{field: tuple(freqs)})

    return setter


def _set_rate(field, index):
    def setter(params: SystemParams, value: float) -> SystemParams:
        rates = list(getattr(params, field))
        if index is None:
            rates = [value * params.kappa_a[0]] * 2
        else:
            rates[index] = value * params.kappa_a[0]
        return params.replace(**{field: tuple(rates)})

    return setter


def _set_coupling_ratio(params: SystemParams, value: float) -> SystemParams:
    return params.replace(g=(params.g[0], value * params.g[0]))


def _set_kappa_a_hz(params: SystemParams, value: float) -> SystemParams:
    kappa = 2.0 * math.pi * value
    return params.replace(kappa_a=(kappa, kappa))


def _set_omega_a_hz(params: SystemParams, value: float) -> SystemParams:
    omega = 2.0 * math.pi * value
    pair = (omega, omega)
    return params.replace(omega_a=pair, omega_m=pair, omega_drive=pair)


# Knobs addressable from sweep axes, config files and the command line.
# Detunings, couplings and linewidths are expressed in units of the first
# cavity linewidth (the natural figure coordinates); temperature is in
# kelvin, theta in radians, r dimensionless. The two _hz paths move the
# absolute scale: kappa_a_hz sets both cavity linewidths from a Hz value,
# omega_a_hz re-pins all mode and drive frequencies to resonance at the
# given frequency. Paths apply in sequence, each resolving ratios against
# the parameters produced by the previous one.
PARAMETER_PATHS = {
    "r": _set_scalar("r"),
    "theta": _set_scalar("theta"),
    "temperature": _set_scalar("temperature"),
    "delta_a1": _set_detuning("omega_a", 0),
    "delta_a2": _set_detuning("omega_a", 1),
    "delta_m1": _set_detuning("omega_m", 0),
    "delta_m2": _set_detuning("omega_m", 1),
    "g1": _set_rate("g", 0),
    "g2": _set_rate("g", 1),
    "g": _set_rate("g", None),
    "g2_over_g1": _set_coupling_ratio,
    "kappa_m1": _set_rate("kappa_m", 0),
    "kappa_m2": _set_rate("kappa_m", 1),
    "kappa_m": _set_rate("kappa_m", None),
    "kappa_a2": _set_rate("kappa_a", 1),
    "kappa_a_hz": _set_kappa_a_hz,
    "omega_a_hz": _set_omega_a_hz,
}


def apply_parameter(params: SystemParams, path: str, value: float) -> SystemParams:
    """Return a copy of ``params`` with one named knob set to ``value``."""
    if path not in PARAMETER_PATHS:
        known = ", ".join(sorted(PARAMETER_PATHS))
        raise ValueError(f"unknown parameter path {path!r}; known paths: {known}")
    value = float(value)
    if not math.isfinite(value):
        raise ValueError(f"value for {path!r} must be finite")
    return PARAMETER_PATHS[path](params, value)


def parse_config(text: str) -> dict[str, float]:
    """Parse a flat ``params.key = value`` config file into a path map.

    Blank lines and ``#`` comment lines are ignored. Only the ``params``
    section is recognized and every key must be a known parameter path.
    """
    overrides: dict[str, float] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ValueError(f"config line {line_no}: expected 'section.key = value'")
        key, _, value_text = line.partition("=")
        key = key.strip()
        value_text = value_text.strip()
        section, dot, name = key.partition(".")
        if not dot:
            raise ValueError(f"config line {line_no}: key must be 'section.key', got {key!r}")
        if section != "params":
            raise ValueError(f"config line {line_no}: unknown section {section!r}")
        if name not in PARAMETER_PATHS:
            raise ValueError(f"config line {line_no}: unknown parameter path {name!r}")
        try:
            overrides[name] = float(value_text)
        except ValueError:
            raise ValueError(f"config line {line_no}: not a number: {value_text!r}") from None
    return overrides


# ---------------------------------------------------------------------------
# sweep definition and grid


@dataclass(frozen=True)
class SweepAxis:
    """One sweep axis: a parameter path and its strictly monotone values."""

    path: str
    values: tuple[float, ...]

    def __post_init__(self):
        if self.path not in PARAMETER_PATHS:
            known = ", ".join(sorted(PARAMETER_PATHS))
            raise ValueError(f"unknown parameter path {self.path!r}; known paths: {known}")
        values = tuple(float(v) for v in self.values)
        if len(values) == 0:
            raise ValueError("axis must hold at least one value")
        if not all(math.isfinite(v) for v in values):
            raise ValueError("axis values must be finite")
        diffs = np.diff(values)
        if len(values) > 1 and not (np.all(diffs > 0) or np.all(diffs < 0)):
            raise ValueError("axis values must be strictly monotone")
        object.__setattr__(self, "values", values)


@dataclass(frozen=True)
class SweepSpec:
    """Everything needed to run one sweep.

    ``base`` supplies the fixed parameters, ``axis1`` (and optionally
    ``axis2``) the lattice, ``outputs`` the summary columns to emit.
    ``name`` tags figure presets for provenance.
    """

    base: SystemParams
    axis1: SweepAxis
    axis2: SweepAxis | None
    outputs: tuple[str, ...]
    name: str = ""

    def __post_init__(self):
        outputs = tuple(self.outputs)
        if len(outputs) == 0:
            raise ValueError("at least one output column is required")
        if len(set(outputs)) != len(outputs):
            raise ValueError("output columns must be unique")
        unknown = [c for c in outputs if c not in OUTPUT_COLUMNS]
        if unknown:
            raise ValueError(
                f"unknown output columns {unknown}; valid columns: {', '.join(OUTPUT_COLUMNS)}"
            )
        if self.axis2 is not None and self.axis2.path == self.axis1.path:
            raise ValueError("axis2 must sweep a different parameter path than axis1")
        object.__setattr__(self, "outputs", outputs)

    @property
    def shape(self) -> tuple[int, ...]:
        if self.axis2 is None:
            return (len(self.axis1.values),)
        return (len(self.axis1.values), len(self.axis2.values))


@dataclass(frozen=True)
class CellSummary:
    """Entanglement summary of a single grid cell.

    Value fields are NaN when the cell is unstable. ``E_mm_over_E_aa`` is
    NaN where E_aa is zero (the ratio is undefined there). ``N_am`` is
    the unclamped -ln(2 nu_min) of the (cavity1, magnon1) pair and is
    negative for separable pairs.
    """

    stable: bool
    max_real_part: float
    E_aa: float
    E_mm: float
    E_a1m1: float
    E_a2m2: float
    E_mm_over_E_aa: float
    N_am: float
    min_symplectic_eigenvalue: float


@dataclass(frozen=True)
class SweepGrid:
    """Dense sweep results in row-major axis order (axis1 outer)."""

    spec: SweepSpec
    cells: tuple[CellSummary, ...]
    provenance: tuple[str, ...]

    def __post_init__(self):
        expected = int(np.prod(self.spec.shape))
        if len(self.cells) != expected:
            raise ValueError(f"expected {expected} cells, got {len(self.cells)}")

    @property
    def shape(self) -> tuple[int, ...]:
        return self.spec.shape

    def value_array(self, column: str) -> np.ndarray:
        """Values of one summary column, shaped like the grid."""
        if column == "stable":
            data = np.array([c.stable for c in self.cells], dtype=bool)
        else:
            if column not in OUTPUT_COLUMNS and column != "min_symplectic_eigenvalue":
                raise ValueError(f"unknown column {column!r}")
            data = np.array([getattr(c, column) for c in self.cells], dtype=float)
        return data.reshape(self.shape)


def _cell_parameters(spec: SweepSpec, i: int, j: int | None) -> SystemParams:
    params = apply_parameter(spec.base, spec.axis1.path, spec.axis1.values[i])
    if spec.axis2 is not None and j is not None:
        params = apply_parameter(params, spec.axis2.path, spec.axis2.values[j])
    return params


def summarize_point(params: SystemParams) -> CellSummary:
    """Entanglement summary of a single parameter point."""
    report = entanglement_report(params)
    max_real = report.stability.max_real_part
    if report.cm is None:
        nan = float("nan")
        return CellSummary(
            stable=False,
            max_real_part=max_real,
            E_aa=nan,
            E_mm=nan,
            E_a1m1=nan,
            E_a2m2=nan,
            E_mm_over_E_aa=nan,
            N_am=nan,
            min_symplectic_eigenvalue=nan,
        )
    cm = report.cm
    min_nu = float(symplectic_eigenvalues(cm)[0])
    pair = reduce(cm, (0, 2))
    nu_min_pt = float(symplectic_eigenvalues(partial_transpose(pair, 0))[0])
    n_am = -math.log(2.0 * nu_min_pt)
    if report.E_aa > 0.0:
        ratio = report.E_mm / report.E_aa
    else:
        ratio = float("nan")
    return CellSummary(
        stable=True,
        max_real_part=max_real,
        E_aa=report.E_aa,
        E_mm=report.E_mm,
        E_a1m1=report.E_a1m1,
        E_a2m2=report.E_a2m2,
        E_mm_over_E_aa=ratio,
        N_am=n_am,
        min_symplectic_eigenvalue=min_nu,
    )


def _fmt(value: float) -> str:
    if math.isnan(value):
        return "NaN"
    return f"{value:.9g}"


def _provenance_lines(spec: SweepSpec) -> tuple[str, ...]:
    lines = [f"cavmag {__version__}"]
    if spec.name:
        lines.append(f"preset: {spec.name}")
    axes = [("axis1", spec.axis1)] + ([("axis2", spec.axis2)] if spec.axis2 else [])
    for tag, axis in axes:
        lines.append(
            f"{tag}: {axis.path} = {_fmt(axis.values[0])} .. {_fmt(axis.values[-1])}"
            f" ({len(axis.values)} points)"
        )
    lines.append("outputs: " + ",".join(spec.outputs))
    p = spec.base
    pairs = [
        ("omega_a", p.omega_a),
        ("omega_m", p.omega_m),
        ("omega_drive", p.omega_drive),
        ("kappa_a", p.kappa_a),
        ("kappa_m", p.kappa_m),
        ("g", p.g),
    ]
    for name, (first, second) in pairs:
        lines.append(f"base.{name} = ({_fmt(first)}, {_fmt(second)}) rad/s")
    lines.append(f"base.r = {_fmt(p.r)}")
    lines.append(f"base.theta = {_fmt(p.theta)}")
    lines.append(f"base.temperature = {_fmt(p.temperature)} K")
    return tuple(lines)


def run_sweep(spec: SweepSpec, workers: int = 1) -> SweepGrid:
    """Evaluate the sweep lattice and return the assembled grid.

    ``workers`` > 1 evaluates cells in a thread pool; results are always
    assembled by grid index, so worker count never changes the output.
    """
    if workers < 1:
        raise ValueError("workers must be at least 1")
    if spec.axis2 is None:
        points = [_cell_parameters(spec, i, None) for i in range(len(spec.axis1.values))]
    else:
        points = [
            _cell_parameters(spec, i, j)
            for i in range(len(spec.axis1.values))
            for j in range(len(spec.axis2.values))
        ]
    if workers == 1:
        cells = [summarize_point(p) for p in points]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            cells = list(pool.map(summarize_point, points))
    return SweepGrid(spec=spec, cells=tuple(cells), provenance=_provenance_lines(spec))


# ---------------------------------------------------------------------------
# figure presets


def _lin(lo: float, hi: float, n: int) -> tuple[float, ...]:
    return tuple(float(v) for v in np.linspace(lo, hi, n))


def _pin_common(base: SystemParams, r: float, temperature: float) -> SystemParams:
    params = base.replace(
        omega_a=base.omega_drive,
        omega_m=base.omega_drive,
        r=r,
        theta=0.0,
        temperature=temperature,
    )
    params = apply_parameter(params, "kappa_m", 0.2)
    return params


def _preset_detuning_grid(base, n, which):
    params = apply_parameter(_pin_common(base, r=1.0, temperature=0.1), "g", 5.0)
    span = _lin(-1.0, 1.0, n)
    return SweepSpec(
        base=params,
        axis1=SweepAxis(f"delta_a{which}", span),
        axis2=SweepAxis(f"delta_m{which}", span),
        outputs=("E_mm",),
        name=f"fig2{'a' if which == 1 else 'b'}",
    )


def _preset_fig2c(base, n):
    params = apply_parameter(_pin_common(base, r=1.0, temperature=0.0), "g", 5.0)
    return SweepSpec(
        base=params,
        axis1=SweepAxis("r", _lin(0.0, 2.0, n)),
        axis2=SweepAxis("temperature", _lin(0.0, 1.0, n)),
        outputs=("E_mm",),
        name="fig2c",
    )


def _preset_fig3a(base, n):
    params = apply_parameter(_pin_common(base, r=1.0, temperature=0.1), "g", 5.0)
    return SweepSpec(
        base=params,
        axis1=SweepAxis("r", _lin(0.0, 2.0, n)),
        axis2=SweepAxis("g2_over_g1", _lin(0.0, 2.0, n)),
        outputs=("E_mm",),
        name="fig3a",
    )


def _preset_fig3b(base, n):
    params = _pin_common(base, r=1.0, temperature=0.1)
    return SweepSpec(
        base=params,
        axis1=SweepAxis("r", _lin(0.0, 2.0, n)),
        axis2=SweepAxis("g", (0.5, 1.0, 2.0)),
        outputs=("E_aa", "E_mm", "E_mm_over_E_aa"),
        name="fig3b",
    )


def _preset_fig4(base, n):
    params = apply_parameter(_pin_common(base, r=1.0, temperature=0.0), "g", 0.0)
    return SweepSpec(
        base=params,
        axis1=SweepAxis("r", _lin(0.0, 2.0, n)),
        axis2=None,
        outputs=("E_aa",),
        name="fig4",
    )


def _preset_coupling_grid(base, n, name, outputs):
    params = _pin_common(base, r=1.0, temperature=0.0)
    return SweepSpec(
        base=params,
        axis1=SweepAxis("kappa_m", _lin(0.01, 1.0, n)),
        axis2=SweepAxis("g", _lin(0.0, 10.0, n)),
        outputs=outputs,
        name=name,
    )


_PRESET_BUILDERS = {
    "fig2a": lambda base, n: _preset_detuning_grid(base, n or DEFAULT_RESOLUTION_2D, 1),
    "fig2b": lambda base, n: _preset_detuning_grid(base, n or DEFAULT_RESOLUTION_2D, 2),
    "fig2c": lambda base, n: _preset_fig2c(base, n or DEFAULT_RESOLUTION_2D),
    "fig3a": lambda base, n: _preset_fig3a(base, n or DEFAULT_RESOLUTION_2D),
    "fig3b": lambda base, n: _preset_fig3b(base, n or DEFAULT_RESOLUTION_1D),
    "fig4": lambda base, n: _preset_fig4(base, n or DEFAULT_RESOLUTION_1D),
    "fig5a": lambda base, n: _preset_coupling_grid(
        base, n or DEFAULT_RESOLUTION_2D, "fig5a", ("E_aa",)
    ),
    "fig5b": lambda base, n: _preset_coupling_grid(
        base, n or DEFAULT_RESOLUTION_2D, "fig5b", ("E_mm",)
    ),
    "fig6": lambda base, n: _preset_coupling_grid(
        base, n or DEFAULT_RESOLUTION_2D, "fig6", ("N_am", "E_a1m1", "E_a2m2")
    ),
}

PRESET_NAMES = tuple(sorted(_PRESET_BUILDERS))

PRESET_DESCRIPTIONS = {
    "fig2a": "magnon entanglement vs first-subsystem cavity and magnon detunings",
    "fig2b": "magnon entanglement vs second-subsystem cavity and magnon detunings",
    "fig2c": "magnon entanglement vs drive squeezing and bath temperature",
    "fig3a": "magnon entanglement vs squeezing and coupling asymmetry g2/g1",
    "fig3b": "transfer ratio E_mm/E_aa vs squeezing for three matched couplings",
    "fig4": "cavity-pair entanglement vs squeezing at zero coupling",
    "fig5a": "cavity-pair entanglement vs linewidth ratio and coupling",
    "fig5b": "magnon-pair entanglement vs linewidth ratio and coupling",
    "fig6": "cavity-magnon negativity indicator vs linewidth ratio and coupling",
}


def figure_preset(
    name: str, resolution: int | None = None, base: SystemParams | None = None
) -> SweepSpec:
    """Named sweep covering one of the standard figure panels.

    ``resolution`` overrides the default number of points per continuous
    axis (61 for two-dimensional grids, 121 for lines; the three-coupling
    comparison keeps its fixed coupling values). ``base`` replaces the
    built-in operating point; preset-pinned values are applied on top of
    it, so only the absolute frequency and linewidth scale carry over.
    """
    if name not in _PRESET_BUILDERS:
        raise ValueError(f"unknown preset {name!r}; available: {', '.join(PRESET_NAMES)}")
    if resolution is not None and (not isinstance(resolution, int) or resolution < 1):
        raise ValueError("resolution must be a positive integer")
    return _PRESET_BUILDERS[name](base if base is not None else BASELINE, resolution)


# ---------------------------------------------------------------------------
# temperature threshold


def find_temperature_threshold(
    params: SystemParams, t_max: float = 2.0, tol: float = 1e-3
) -> float | None:
    """Temperature at which the magnon-pair entanglement vanishes.

    Bisects E_mm(T) = 0 over [0, t_max] to an accuracy of ``tol`` kelvin
    (E_mm is non-increasing in temperature). Returns None when
    entanglement still survives at ``t_max``.

    Raises
    ------
    NoEntanglementError
        If E_mm is already zero at T = 0, where no threshold exists.
    """
    if not (math.isfinite(t_max) and t_max > 0):
        raise ValueError("t_max must be positive and finite")
    if not (math.isfinite(tol) and 0 < tol < t_max):
        raise ValueError("tol must satisfy 0 < tol < t_max")

    def entangled(temperature: float) -> bool:
        report = entanglement_report(params.replace(temperature=temperature))
        return report.E_mm is not None and report.E_mm > 0.0

    if not entangled(0.0):
        raise NoEntanglementError(
            "magnon pair is not entangled at zero temperature; nothing to bisect"
        )
    if entangled(t_max):
        return None
    lo, hi = 0.0, t_max
    for _ in range(int(math.ceil(math.log2(t_max / tol)))):
        mid = 0.5 * (lo + hi)
        if entangled(mid):
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


# ---------------------------------------------------------------------------
# CSV emitter


def emit_csv(grid: SweepGrid, destination) -> None:
    """Write the grid as deterministic CSV.

    Provenance lines prefixed ``#`` come first, then the column header
    ``axis1[,axis2],<outputs...>,stable`` and one row per cell in
    row-major order. Values carry 9 significant digits; unstable cells
    show NaN outputs and ``false`` in the stable column. Bytes are
    identical across repeated runs of the same spec.
    """
    text = _csv_text(grid)
    _write_text(destination, text)


def _csv_text(grid: SweepGrid) -> str:
    buf = io.StringIO()
    for line in grid.provenance:
        buf.write(f"# {line}\n")
    spec = grid.spec
    columns = ["axis1"] + (["axis2"] if spec.axis2 else []) + list(spec.outputs) + ["stable"]
    buf.write(",".join(columns) + "\n")
    n2 = len(spec.axis2.values) if spec.axis2 else 1
    for idx, cell in enumerate(grid.cells):
        i, j = divmod(idx, n2)
        row = [_fmt(spec.axis1.values[i])]
        if spec.axis2:
            row.append(_fmt(spec.axis2.values[j]))
        row.extend(_fmt(getattr(cell, column)) for column in spec.outputs)
        row.append("true" if cell.stable else "false")
        buf.write(",".join(row) + "\n")
    return buf.getvalue()


def _write_text(destination, text: str) -> None:
    if hasattr(destination, "write"):
        destination.write(text)
        return
    with open(destination, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


# ---------------------------------------------------------------------------
# SVG emitters

# Fixed perceptual colormap: a dark-violet to yellow ramp sampled at 17
# anchors, linearly interpolated in RGB. Chosen over a plotting library
# so emitted bytes cannot drift with library versions.
COLOR_ANCHORS = (
    (68, 1, 84),
    (72, 26, 108),
    (71, 47, 125),
    (65, 68, 135),
    (59, 82, 139),
    (52, 96, 141),
    (47, 108, 142),
    (42, 120, 142),
    (38, 130, 142),
    (33, 145, 140),
    (31, 158, 137),
    (37, 172, 130),
    (53, 183, 121),
    (83, 197, 105),
    (115, 208, 86),
    (158, 217, 59),
    (253, 231, 37),
)

NAN_FILL = "#9e9e9e"


def color_for(fraction: float) -> str:
    """Hex color of the fixed colormap at ``fraction`` in [0, 1].

    Out-of-range values clamp to the endpoints; NaN maps to the fill
    used for unavailable cells.
    """
    if math.isnan(fraction):
        return NAN_FILL
    f = min(max(float(fraction), 0.0), 1.0)
    scaled = f * (len(COLOR_ANCHORS) - 1)
    low = int(math.floor(scaled))
    high = min(low + 1, len(COLOR_ANCHORS) - 1)
    t = scaled - low
    rgb = [
        int(round((1.0 - t) * COLOR_ANCHORS[low][k] + t * COLOR_ANCHORS[high][k]))
        for k in range(3)
    ]
    return "#{:02x}{:02x}{:02x}".format(*rgb)


def _svg_header(width: int, height: int, title: str) -> list[str]:
    return [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="#ffffff"/>',
        f'<text x="{width / 2:.1f}" y="24" font-family="monospace" font-size="15" '
        f'text-anchor="middle">{title}</text>',
    ]


def _tick_label(x: float) -> str:
    return f"{x:.6g}"


def emit_heatmap(grid: SweepGrid, column: str | None, destination) -> None:
    """Render a two-axis grid as a self-contained SVG heatmap.

    ``column`` selects the output to plot; ``None`` means the grid's
    first output. One colored rectangle per cell (axis1 horizontal,
    axis2 vertical and increasing upward), a colorbar legend with the
    value range, and axis labels taken from the parameter paths.
    Unstable (NaN) cells are gray. Output bytes are a pure function of
    the grid contents.

    Raises ValueError for one-dimensional grids; use
    :func:`emit_lineplot` for those.
    """
    spec = grid.spec
    if spec.axis2 is None:
        raise ValueError("heatmap requires a two-axis grid; use emit_lineplot for lines")
    if column is None:
        column = spec.outputs[0]
    if column not in spec.outputs:
        raise ValueError(f"column {column!r} is not among the grid outputs {spec.outputs}")
    values = grid.value_array(column)
    n1, n2 = values.shape
    finite = values[np.isfinite(values)]
    if finite.size:
        vmin, vmax = float(np.min(finite)), float(np.max(finite))
    else:
        vmin, vmax = 0.0, 0.0
    span = vmax - vmin

    left, top = 70, 40
    plot_w, plot_h = 480, 480
    right_pad, bottom_pad = 110, 60
    width, height = left + plot_w + right_pad, top + plot_h + bottom_pad
    cw, ch = plot_w / n1, plot_h / n2

    title = f"{spec.name or 'sweep'}: {column}"
    parts = _svg_header(width, height, title)
    for i in range(n1):
        for j in range(n2):
            v = values[i, j]
            if math.isnan(v):
                fill = NAN_FILL
            elif span == 0.0:
                fill = color_for(0.5)
            else:
                fill = color_for((v - vmin) / span)
            x = left + i * cw
            y = top + (n2 - 1 - j) * ch
            parts.append(
                f'<rect x="{x:.2f}" y="{y:.2f}" width="{cw + 0.05:.2f}" '
                f'height="{ch + 0.05:.2f}" fill="{fill}"/>'
            )
    parts.append(
        f'<rect x="{left}" y="{top}" width="{plot_w}" height="{plot_h}" '
        f'fill="none" stroke="#000000" stroke-width="1"/>'
    )

    a1, a2 = spec.axis1.values, spec.axis2.values
    x_ticks = [a1[0], a1[len(a1) // 2], a1[-1]]
    y_ticks = [a2[0], a2[len(a2) // 2], a2[-1]]
    x_pos = [left + cw / 2, left + plot_w / 2, left + plot_w - cw / 2]
    y_pos = [top + plot_h - ch / 2, top + plot_h / 2, top + ch / 2]
    if len(a1) == 1:
        x_ticks, x_pos = [a1[0]], [left + plot_w / 2]
    if len(a2) == 1:
        y_ticks, y_pos = [a2[0]], [top + plot_h / 2]
    for value, x in zip(x_ticks, x_pos):
        parts.append(
            f'<text x="{x:.1f}" y="{top + plot_h + 18}" font-family="monospace" '
            f'font-size="11" text-anchor="middle">{_tick_label(value)}</text>'
        )
    for value, y in zip(y_ticks, y_pos):
        parts.append(
            f'<text x="{left - 6}" y="{y + 4:.1f}" font-family="monospace" '
            f'font-size="11" text-anchor="end">{_tick_label(value)}</text>'
        )
    parts.append(
        f'<text x="{left + plot_w / 2:.1f}" y="{height - 14}" font-family="monospace" '
        f'font-size="13" text-anchor="middle">{spec.axis1.path}</text>'
    )
    parts.append(
        f'<text x="16" y="{top + plot_h / 2:.1f}" font-family="monospace" font-size="13" '
        f'text-anchor="middle" transform="rotate(-90 16 {top + plot_h / 2:.1f})">'
        f"{spec.axis2.path}</text>"
    )

    bar_x = left + plot_w + 24
    bar_w, bar_h = 18, plot_h
    steps = 32
    for s in range(steps):
        frac = (s + 0.5) / steps
        y = top + bar_h - (s + 1) * (bar_h / steps)
        parts.append(
            f'<rect x="{bar_x}" y="{y:.2f}" width="{bar_w}" '
            f'height="{bar_h / steps + 0.05:.2f}" fill="{color_for(frac)}"/>'
        )
    parts.append(
        f'<rect x="{bar_x}" y="{top}" width="{bar_w}" height="{bar_h}" '
        f'fill="none" stroke="#000000" stroke-width="1"/>'
    )
    parts.append(
        f'<text x="{bar_x + bar_w + 6}" y="{top + 10}" font-family="monospace" '
        f'font-size="11">{_tick_label(vmax)}</text>'
    )
    parts.append(
        f'<text x="{bar_x + bar_w + 6}" y="{top + bar_h}" font-family="monospace" '
        f'font-size="11">{_tick_label(vmin)}</text>'
    )
    parts.append("</svg>")
    _write_text(destination, "\n".join(parts) + "\n")


LINE_COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#8c564b", "#e377c2")


def emit_lineplot(grid: SweepGrid, destination, columns: tuple[str, ...] | None = None) -> None:
    """Render a one-axis grid as a self-contained SVG line plot.

    For two-axis grids with a small second axis (such as the fixed
    three-coupling comparison) one polyline is drawn per second-axis
    value, labeled in the legend. NaN samples break the polyline.
    """
    spec = grid.spec
    if columns is None:
        columns = (spec.outputs[0],)
    for column in columns:
        if column not in spec.outputs:
            raise ValueError(f"column {column!r} is not among the grid outputs {spec.outputs}")

    xs = np.asarray(spec.axis1.values)
    series: list[tuple[str, np.ndarray]] = []
    for column in columns:
        values = grid.value_array(column)
        if spec.axis2 is None:
            series.append((column, values))
        else:
            for j, second in enumerate(spec.axis2.values):
                label = f"{column} @ {spec.axis2.path}={_tick_label(second)}"
                series.append((label, values[:, j]))

    finite = np.concatenate([s[np.isfinite(s)] for _, s in series]) if series else np.array([])
    if finite.size:
        vmin, vmax = float(np.min(finite)), float(np.max(finite))
    else:
        vmin, vmax = 0.0, 1.0
    if vmax == vmin:
        vmax = vmin + 1.0

    left, top = 70, 40
    plot_w, plot_h = 520, 380
    width, height = left + plot_w + 40, top + plot_h + 60
    x_lo, x_hi = float(xs[0]), float(xs[-1])
    x_span = x_hi - x_lo if x_hi != x_lo else 1.0

    def sx(x: float) -> float:
        return left + (x - x_lo) / x_span * plot_w

    def sy(v: float) -> float:
        return top + plot_h - (v - vmin) / (vmax - vmin) * plot_h

    title = f"{spec.name or 'sweep'}: {', '.join(columns)}"
    parts = _svg_header(width, height, title)
    parts.append(
        f'<rect x="{left}" y="{top}" width="{plot_w}" height="{plot_h}" '
        f'fill="none" stroke="#000000" stroke-width="1"/>'
    )
    for k, (label, ys) in enumerate(series):
        color = LINE_COLORS[k % len(LINE_COLORS)]
        points: list[str] = []
        chunks: list[list[str]] = [points]
        for x, y in zip(xs, ys):
            if math.isnan(y):
                if chunks[-1]:
                    chunks.append([])
                continue
            chunks[-1].append(f"{sx(float(x)):.2f},{sy(float(y)):.2f}")
        for chunk in chunks:
            if len(chunk) >= 2:
                parts.append(
                    f'<polyline points="{" ".join(chunk)}" fill="none" '
                    f'stroke="{color}" stroke-width="1.5"/>'
                )
        parts.append(
            f'<text x="{left + 8}" y="{top + 16 + 14 * k}" font-family="monospace" '
            f'font-size="11" fill="{color}">{label}</text>'
        )
    for value, x in ((x_lo, left), (x_hi, left + plot_w)):
        parts.append(
            f'<text x="{x}" y="{top + plot_h + 18}" font-family="monospace" '
            f'font-size="11" text-anchor="middle">{_tick_label(value)}</text>'
        )
    for value, y in ((vmin, top + plot_h), (vmax, top + 10)):
        parts.append(
            f'<text x="{left - 6}" y="{y:.1f}" font-family="monospace" font-size="11" '
            f'text-anchor="end">{_tick_label(value)}</text>'
        )
    parts.append(
        f'<text x="{left + plot_w / 2:.1f}" y="{height - 14}" font-family="monospace" '
        f'font-size="13" text-anchor="middle">{spec.axis1.path}</text>'
    )
    parts.append("</svg>")
    _write_text(destination, "\n".join(parts) + "\n")
