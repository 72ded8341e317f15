"""Assembled spectral bounds and the genus-scaling study.

One report gathers, for a single surface: the shortest separating
system restricted to pants curves (L1), the Cheeger-type lower bound
min(1/4, L1^2 / (4 vol^2)), the network surrogate's spectral gap, a
Rayleigh-quotient upper bound from an explicit cut, and the exact
Dirichlet eigenvalue of each thin collar.  Consistency flags record
whether the rigorous bounds are ordered and whether the surrogate
lands between them; the surrogate band is reported, never enforced.

The scaling study runs the chain family across a genus list at fixed
core length and emits one CSV row per genus with the normalization
lambda1 * g^2 / L1 that the two-sided gap comparison predicts to stay
within constant factors.
"""
from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from ..cuts import Multicut, min_separating_length, make_multicut
from ..surfaces import (
    ChainFamilyParams,
    PantsSurface,
    build_chain_family,
    chain_central_join_label,
    total_volume,
)
from ..thickthin import DEFAULT_EPSILON, decompose
from .collar_ode import DEFAULT_N_RHO, collar_dirichlet_lambda1
from .network import NetworkBuildError, build_network, network_lambda1, rayleigh_upper_bound

THREADS_ENV_VAR = "HYPSPEC_THREADS"

_CSV_COLUMNS = (
    "genus",
    "L1",
    "volume",
    "cheeger_lower",
    "network_lambda1",
    "rayleigh_upper",
    "lambda1_times_g2_over_L1",
)


def cheeger_lower_bound(l1: float, vol: float) -> float:
    """min(1/4, L1^2 / (4 vol^2)): lower bound for the gap via isoperimetry."""
    if not (math.isfinite(l1) and l1 > 0.0):
        raise ValueError(f"L1 must be positive and finite, got {l1}")
    if not (math.isfinite(vol) and vol > 0.0):
        raise ValueError(f"vol must be positive and finite, got {vol}")
    return min(0.25, l1 * l1 / (4.0 * vol * vol))


@dataclass(frozen=True)
class CollarMode:
    """First Dirichlet eigenvalue of one thin collar."""

    label: str
    core_length: float
    half_width: float
    lambda1: float


@dataclass(frozen=True)
class SpectralReport:
    """All bounds for one surface, plus consistency flags."""

    genus: int
    epsilon: float
    forced_epsilon: bool
    l1_restricted: float
    cut_labels: tuple[str, ...]
    volume: float
    cheeger_lower: float
    network_lambda1: float | None
    network_note: str
    rayleigh_upper: float
    collar_modes: tuple[CollarMode, ...]
    consistency_flags: dict

    def to_dict(self) -> dict:
        return {
            "genus": self.genus,
            "epsilon": self.epsilon,
            "forced_epsilon": self.forced_epsilon,
            "L1_restricted": self.l1_restricted,
            "cut": list(self.cut_labels),
            "volume": self.volume,
            "cheeger_lower": self.cheeger_lower,
            "network_lambda1": self.network_lambda1,
            "network_note": self.network_note,
            "rayleigh_upper": self.rayleigh_upper,
            "collar_ode_lambda1": {m.label: m.lambda1 for m in self.collar_modes},
            "consistency_flags": dict(self.consistency_flags),
        }


def assemble_report(
    surface: PantsSurface,
    epsilon: float = DEFAULT_EPSILON,
    *,
    force: bool = False,
    n_rho: int = DEFAULT_N_RHO,
    rayleigh_cut: Multicut | None = None,
) -> SpectralReport:
    """Run the full bounds pipeline on one surface.

    Uses the minimal 2-component cut for the Rayleigh bound unless an
    explicit ``rayleigh_cut`` is given.  The network surrogate is
    skipped (with the reason recorded) when the decomposition has no
    two-sided thin part.  Collar eigenvalues are deduplicated across
    collars sharing (length, width); zero-width collars have no
    interior and are skipped.

    Flags: ``cheeger_le_rayleigh`` orders the two rigorous bounds;
    ``collar_modes_above_quarter`` checks every collar eigenvalue
    exceeds 1/4; ``network_in_sanity_band`` reports (never enforces)
    whether the surrogate lies in [cheeger/2, rayleigh + tol].
    """
    ttd = decompose(surface, epsilon, force=force)
    cut = min_separating_length(surface, 1)
    l1 = cut.total_length
    volume = total_volume(surface)
    cheeger = cheeger_lower_bound(l1, volume)

    network_value: float | None
    try:
        network_value = network_lambda1(build_network(ttd))
        network_note = ""
    except NetworkBuildError as exc:
        network_value = None
        network_note = str(exc)

    rayleigh = rayleigh_upper_bound(surface, rayleigh_cut if rayleigh_cut is not None else cut)

    mode_cache: dict[tuple[float, float], float] = {}
    modes = []
    for tc in ttd.thin_collars:
        w = tc.collar.half_width
        if w == 0.0:
            continue
        key = (tc.collar.core_length, w)
        if key not in mode_cache:
            mode_cache[key] = collar_dirichlet_lambda1(key[0], key[1], n=n_rho)
        modes.append(
            CollarMode(
                label=tc.label,
                core_length=key[0],
                half_width=w,
                lambda1=mode_cache[key],
            )
        )

    tol = 1e-9 * max(1.0, rayleigh)
    flags = {
        "cheeger_le_rayleigh": bool(cheeger <= rayleigh + tol),
        "collar_modes_above_quarter": all(m.lambda1 > 0.25 for m in modes),
        "network_in_sanity_band": (
            None
            if network_value is None
            else bool(0.5 * cheeger - tol <= network_value <= rayleigh + tol)
        ),
    }
    return SpectralReport(
        genus=surface.genus,
        epsilon=epsilon,
        forced_epsilon=ttd.forced,
        l1_restricted=l1,
        cut_labels=cut.edge_labels,
        volume=volume,
        cheeger_lower=cheeger,
        network_lambda1=network_value,
        network_note=network_note,
        rayleigh_upper=rayleigh,
        collar_modes=tuple(modes),
        consistency_flags=flags,
    )


# -------------------------------------------------------------------
# scaling study
# -------------------------------------------------------------------

@dataclass(frozen=True)
class ScalingRow:
    """One chain-family data point of the genus-scaling study."""

    genus: int
    l1: float
    volume: float
    cheeger_lower: float
    network_lambda1: float
    rayleigh_upper: float

    @property
    def normalized_gap(self) -> float:
        """network lambda1 * g^2 / L1 — the quantity predicted to be ~constant."""
        return self.network_lambda1 * self.genus**2 / self.l1


def resolve_threads(threads: int | None = None) -> int:
    """Worker count: explicit argument, else HYPSPEC_THREADS (0 = auto), else 1."""
    if threads is None:
        raw = os.environ.get(THREADS_ENV_VAR, "1")
        try:
            threads = int(raw)
        except ValueError as exc:
            raise ValueError(f"{THREADS_ENV_VAR} must be an integer, got {raw!r}") from exc
    if threads == 0:
        return os.cpu_count() or 1
    if threads < 0:
        raise ValueError(f"thread count must be >= 0, got {threads}")
    return threads


def _scaling_row(genus: int, core_length: float, epsilon: float, force: bool) -> ScalingRow:
    surface = build_chain_family(ChainFamilyParams(genus=genus, core_length=core_length))
    ttd = decompose(surface, epsilon, force=force)
    cut = min_separating_length(surface, 1)
    volume = total_volume(surface)
    lam = network_lambda1(build_network(ttd))
    central = make_multicut(surface, [chain_central_join_label(genus)])
    rayleigh = rayleigh_upper_bound(surface, central)
    return ScalingRow(
        genus=genus,
        l1=cut.total_length,
        volume=volume,
        cheeger_lower=cheeger_lower_bound(cut.total_length, volume),
        network_lambda1=lam,
        rayleigh_upper=rayleigh,
    )


def scaling_study(
    genus_list: list[int],
    core_length: float,
    epsilon: float = DEFAULT_EPSILON,
    *,
    force: bool = False,
    threads: int | None = None,
) -> list[ScalingRow]:
    """Chain-family rows for each genus, in the given order.

    The Rayleigh bound uses the balanced central cut (tightest of the
    single-join cuts for long chains); rows are returned in input
    order regardless of worker count, and every numeric is a pure
    function of (genus, core_length, epsilon), so output is
    reproducible bit for bit.
    """
    if not genus_list:
        raise ValueError("genus_list must be non-empty")
    workers = resolve_threads(threads)
    if workers == 1 or len(genus_list) == 1:
        return [_scaling_row(g, core_length, epsilon, force) for g in genus_list]
    with ThreadPoolExecutor(max_workers=min(workers, len(genus_list))) as pool:
        return list(
            pool.map(lambda g: _scaling_row(g, core_length, epsilon, force), genus_list)
        )


def scaling_rows_to_csv(rows: list[ScalingRow]) -> str:
    """CSV text (12 significant digits, '.' decimal, trailing newline)."""
    lines = [",".join(_CSV_COLUMNS)]
    for r in rows:
        lines.append(
            ",".join(
                [
                    str(r.genus),
                    f"{r.l1:.12g}",
                    f"{r.volume:.12g}",
                    f"{r.cheeger_lower:.12g}",
                    f"{r.network_lambda1:.12g}",
                    f"{r.rayleigh_upper:.12g}",
                    f"{r.normalized_gap:.12g}",
                ]
            )
        )
    return "\n".join(lines) + "\n"
