"""Fruchterman-Reingold force-directed layout in the unit square."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graph import UndirectedView
from .validation import check_random_state

_MIN_DIST = 1e-9


@dataclass(frozen=True)
class LayoutResult:
    positions: dict
    iterations: int
    seed: int

    def as_array(self, vertices) -> np.ndarray:
        return np.array([self.positions[v] for v in vertices], dtype=float)


def _forces(pos: np.ndarray, edges: np.ndarray, k: float) -> np.ndarray:
    delta = pos[:, None, :] - pos[None, :, :]
    dist = np.sqrt((delta ** 2).sum(axis=-1))
    np.fill_diagonal(dist, 1.0)
    dist = np.maximum(dist, _MIN_DIST)
    # repulsion k^2/d along the unit vector delta/d
    disp = (delta * (k * k / dist ** 2)[:, :, None]).sum(axis=1)
    if len(edges):
        d = pos[edges[:, 0]] - pos[edges[:, 1]]
        length = np.maximum(np.sqrt((d ** 2).sum(axis=1)), _MIN_DIST)
        # attraction d^2/k along the unit vector
        pull = d * (length / k)[:, None]
        np.add.at(disp, edges[:, 0], -pull)
        np.add.at(disp, edges[:, 1], pull)
    return disp


def layout_energy(pos: np.ndarray, edges: np.ndarray, k: float) -> float:
    """Potential whose negative gradient is the FR force field."""
    n = len(pos)
    iu = np.triu_indices(n, 1)
    dist = np.sqrt(((pos[:, None, :] - pos[None, :, :]) ** 2).sum(axis=-1))[iu]
    energy = -k * k * float(np.log(np.maximum(dist, _MIN_DIST)).sum())
    if len(edges):
        d = np.sqrt(((pos[edges[:, 0]] - pos[edges[:, 1]]) ** 2).sum(axis=1))
        energy += float((d ** 3).sum()) / (3.0 * k)
    return energy


def layout_fruchterman_reingold(view: UndirectedView, iterations: int = 500, seed: int = 7,
                                initial_temperature: float = 0.1, settle_fraction: float = 0.1,
                                history: list = None) -> LayoutResult:
    """Spring embedding with ideal edge length ``k = sqrt(1 / |V|)``.

    Each iteration moves every vertex along its net force by at most the
    current temperature, which cools linearly to zero; positions are then
    clamped to ``[0, 1]**2``. During the last ``settle_fraction`` of the
    iterations a step that would raise the layout energy is halved until it
    does not (or dropped), so the cooled layout settles instead of
    oscillating. Starting positions come from ``seed``. A lone vertex is
    placed at the centre. When ``history`` is a list, the position array
    after every iteration is appended to it.
    """
    n = view.n_vertices
    if n == 0:
        return LayoutResult({}, iterations, seed)
    if n == 1:
        return LayoutResult({view.vertices[0]: (0.5, 0.5)}, iterations, seed)
    rng = check_random_state(seed)
    pos = rng.random((n, 2))
    k = math.sqrt(1.0 / n)
    edges = np.asarray(view.edges, dtype=np.int64).reshape(-1, 2)
    settle_from = iterations - int(math.ceil(settle_fraction * iterations))
    energy = None
    for it in range(iterations):
        temp = initial_temperature * (1.0 - it / iterations)
        disp = _forces(pos, edges, k)
        length = np.sqrt((disp ** 2).sum(axis=1))
        scale = np.where(length > 0, np.minimum(length, temp) / np.maximum(length, _MIN_DIST), 0.0)
        step = disp * scale[:, None]
        if it < settle_from:
            pos = np.clip(pos + step, 0.0, 1.0)
        else:
            if energy is None:
                energy = layout_energy(pos, edges, k)
            for _ in range(40):
                trial = np.clip(pos + step, 0.0, 1.0)
                trial_energy = layout_energy(trial, edges, k)
                if trial_energy <= energy:
                    pos, energy = trial, trial_energy
                    break
                step = step / 2.0
        if history is not None:
            history.append(pos.copy())
    positions = {v: (float(x), float(y)) for v, (x, y) in zip(view.vertices, pos)}
    return LayoutResult(positions, iterations, seed)
