"""Discrete mode-sum realization of the density correlator.

A periodic box of side L supports the phonon modes q = (2 pi / L) n
with integer vectors n in [-N/2, N/2)^3, zero mode excluded (a uniform
density offset is not a fluctuation).  Summing the per-mode spectral
weight with exponential damping gives the finite-volume counterpart of
the spectral integral,

    (hbar rho0 / 2 L^3 cs^2)  sum_q  Omega_q cos(q . dx) e^{-eps q},

with linear dispersion Omega_q = cs |q|.  The cosine form is real term
by term, and the damping matches ``fluctus.spectral`` so that
lattice-vs-continuum comparisons sit at an identical regulator and
isolate the finite-box effects.

The convergence study holds the box fixed at L = 16 r (the standard
study geometry) and raises the modes-per-axis count N, which pushes the
covered wavenumber cube outward; the error against the continuum value
falls monotonically over the standard N ladder.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import AliasingError, IllPosedStudyError
from .medium import HBAR, FluidMedium
from .spectral import regulated_integrand_reduction

__all__ = [
    "ModeGrid",
    "lattice_correlator",
    "ConvergenceStudy",
    "convergence_study",
    "STUDY_DIRECTION",
]

#: Generic direction used by the convergence study.  A rational unit
#: vector off every lattice axis and diagonal; axis-aligned displacements
#: couple anomalously to the cubic Brillouin zone boundary.
STUDY_DIRECTION = (2.0 / 7.0, 3.0 / 7.0, 6.0 / 7.0)


@dataclass(frozen=True)
class ModeGrid:
    """Wavevector lattice of a periodic box: side L (m), N modes per axis.

    Modes are q = (2 pi / L) n for integer n in [-N/2, N/2)^3 without
    the zero mode, so there are N^3 - 1 of them and the largest
    wavenumber component is (pi N / L)(1 - 2/N).
    """

    L: float
    N: int

    def __post_init__(self):
        if not self.L > 0.0:
            raise ValueError(f"box side must be positive, got {self.L}")
        if self.N < 8 or self.N % 2 != 0:
            raise ValueError(f"modes per axis must be even and >= 8, got {self.N}")

    @property
    def mode_count(self) -> int:
        return self.N**3 - 1

    @property
    def spacing(self) -> float:
        """Real-space lattice spacing a = L/N."""
        return self.L / self.N

    @property
    def max_component(self) -> float:
        return math.pi * self.N / self.L * (1.0 - 2.0 / self.N)


def _wrap_to_box(dx: np.ndarray, L: float) -> np.ndarray:
    # Nearest periodic image; a shift of any component by L is an exact
    # symmetry of the mode sum, so fold before the aliasing check.
    return dx - L * np.round(dx / L)


def lattice_correlator(medium: FluidMedium, grid: ModeGrid, dx, eps: float) -> float:
    """Damped mode sum at displacement ``dx`` (3-vector, m); kg^2/m^6.

    Deterministic: modes are accumulated slab by slab along the first
    axis in a fixed order, with the slab partial sums combined by exact
    compensated summation, so the result does not depend on how the work
    would be chunked.

    Raises
    ------
    AliasingError
        If the nearest-image displacement has |dx| >= L/2.
    """
    if not eps > 0.0:
        raise ValueError(f"damping length must be positive, got {eps}")
    dx = _wrap_to_box(np.asarray(dx, dtype=float).reshape(3), grid.L)
    if float(np.linalg.norm(dx)) >= grid.L / 2.0:
        raise AliasingError(
            f"|dx| = {float(np.linalg.norm(dx)):.3e} m reaches L/2 = {grid.L / 2.0:.3e} m; "
            "the periodic box cannot resolve this separation"
        )
    dq = 2.0 * math.pi / grid.L
    n1 = np.arange(-grid.N // 2, grid.N // 2)
    qy = dq * n1
    qz = dq * n1
    QY, QZ = np.meshgrid(qy, qz, indexing="ij")
    phase_yz = QY * dx[1] + QZ * dx[2]
    q_yz_sq = QY * QY + QZ * QZ
    slab_sums = []
    for nx in n1:
        qx = dq * nx
        qmag = np.sqrt(qx * qx + q_yz_sq)
        w = qmag * np.exp(-eps * qmag) * np.cos(qx * dx[0] + phase_yz)
        if nx == 0:
            w[grid.N // 2, grid.N // 2] = 0.0  # zero mode excluded
        slab_sums.append(float(w.sum()))
    total = math.fsum(slab_sums)
    # Omega_q = cs |q| cancels one cs of the 1/cs^2 normalization.
    return HBAR * medium.rho0 * total / (2.0 * grid.L**3 * medium.cs)


@dataclass(frozen=True)
class ConvergenceStudy:
    """Outcome of a lattice-vs-continuum convergence study.

    ``rows`` holds (N, relative error against the continuum value at the
    same damping); ``slope`` is the fitted log-log exponent of the error
    versus a/r where a = L/N.
    """

    L: float
    r: float
    eps: float
    continuum: float
    rows: tuple[tuple[int, float], ...]
    slope: float

    @property
    def monotone(self) -> bool:
        errs = [e for _, e in self.rows]
        return all(a > b for a, b in zip(errs, errs[1:]))


def convergence_study(medium: FluidMedium, r: float, eps_over_r: float = 0.125,
                      ns=(64, 128, 256), box_side: float | None = None,
                      direction=STUDY_DIRECTION) -> ConvergenceStudy:
    """Quantify the approach of the mode sum to the continuum integral.

    The box defaults to the standard study geometry L = 16 r; the
    displacement points along ``direction`` with length r and the
    damping is eps_over_r * r on both sides of the comparison.

    Raises
    ------
    IllPosedStudyError
        If any geometry fails a <= r/4 (with a = L/N) or r <= L/8.
    """
    if not r > 0.0:
        raise ValueError(f"separation must be positive, got {r}")
    ns = tuple(int(n) for n in ns)
    if any(b <= a for a, b in zip(ns, ns[1:])):
        raise ValueError("mode counts must be strictly increasing")
    L = 16.0 * r if box_side is None else float(box_side)
    if r > L / 8.0:
        raise IllPosedStudyError(
            f"r = {r:.3e} m exceeds L/8 = {L / 8.0:.3e} m: separation not small "
            "against the box"
        )
    for n in ns:
        if L / n > r / 4.0:
            raise IllPosedStudyError(
                f"lattice spacing a = L/{n} = {L / n:.3e} m exceeds r/4 = {r / 4.0:.3e} m: "
                "separation not resolved"
            )
    eps = eps_over_r * r
    d = np.asarray(direction, dtype=float)
    dx = r * d / np.linalg.norm(d)
    continuum = regulated_integrand_reduction(medium, r, 0.0, eps)
    rows = []
    for n in ns:
        lat = lattice_correlator(medium, ModeGrid(L=L, N=n), dx, eps)
        rows.append((n, abs(lat - continuum) / abs(continuum)))
    log_aor = np.log([L / n / r for n, _ in rows])
    log_err = np.log([e for _, e in rows])
    slope = float(np.polyfit(log_aor, log_err, 1)[0])
    return ConvergenceStudy(L=L, r=r, eps=eps, continuum=continuum,
                            rows=tuple(rows), slope=slope)
