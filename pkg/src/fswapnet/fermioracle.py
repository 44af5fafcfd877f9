"""Dense-matrix fermion oracle for checking networks at small sizes.

Convention: a computational basis index ``x`` encodes occupations bitwise,
bit ``q`` of ``x`` being the occupation (1 = occupied) of the mode at line
position ``q``. Jordan-Wigner strings run over the lower positions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, Tuple

import numpy as np
from scipy.linalg import expm

from .errors import InvalidArgument, SizeExceeded
from .isoperimetry import LinearOrder
from .lattice import HubbardModel, Term, interaction_graph
from .network import SwapLayer, SwapNetwork

MAX_MODES = 10
MAX_TROTTER_MODES = 8
_NOISE_FLOOR = 1e-12

_LOWER = np.array([[0, 1], [0, 0]], dtype=complex)
_Z = np.diag([1, -1]).astype(complex)
_I2 = np.eye(2, dtype=complex)


def jw_ladder(p: int, n_modes: int) -> np.ndarray:
    """Annihilation operator ``a_p`` on ``n_modes`` modes."""
    if not 0 < n_modes <= MAX_MODES:
        raise InvalidArgument(f"n_modes must be in 1..{MAX_MODES}, got {n_modes}")
    if not 0 <= p < n_modes:
        raise InvalidArgument(f"mode {p} out of range for {n_modes} modes")
    out = np.ones((1, 1), dtype=complex)
    for q in reversed(range(n_modes)):
        factor = _Z if q < p else _LOWER if q == p else _I2
        out = np.kron(out, factor)
    return out


def number_op(p: int, n_modes: int) -> np.ndarray:
    a = jw_ladder(p, n_modes)
    return a.conj().T @ a


def fswap_unitary() -> np.ndarray:
    """Fermionic swap on two adjacent modes, basis index ``occ_0 + 2 occ_1``."""
    return np.array(
        [[1, 0, 0, 0],
         [0, 0, 1, 0],
         [0, 1, 0, 0],
         [0, 0, 0, -1]],
        dtype=complex,
    )


def _local_term(kind: Term, U: float, t: float) -> np.ndarray:
    """Generator of one record on its own positions (4x4 or 2x2)."""
    if kind is Term.NUMBER_OP:
        return U * np.diag([0, 1]).astype(complex)
    a0, a1 = jw_ladder(0, 2), jw_ladder(1, 2)
    if kind is Term.HOP:
        hop = a0.conj().T @ a1
        return -t * (hop + hop.conj().T)
    if kind is Term.ONSITE_PAIR:
        return U * (a0.conj().T @ a0) @ (a1.conj().T @ a1)
    raise InvalidArgument(f"unknown term {kind}")


def hubbard_matrix(m: HubbardModel, order: LinearOrder) -> np.ndarray:
    """Hamiltonian with the mode of vertex ``v`` at position ``order.rank[v]``.

    Hopping edges contribute ``-t (a_u^dag a_w + h.c.)``, on-site pairs
    ``U n_u n_w`` and, in the spinless model, each site ``U n_v``.
    """
    ig = interaction_graph(m)
    n = m.n_modes
    if n > MAX_MODES:
        raise SizeExceeded(n, MAX_MODES, "mode count")
    order.check_covers(ig.vertices)
    rank = order.rank
    a = [jw_ladder(p, n) for p in range(n)]
    num = [x.conj().T @ x for x in a]
    H = np.zeros((1 << n, 1 << n), dtype=complex)
    for (u, w), kind in ig.edge_terms.items():
        p, q = rank[u], rank[w]
        if kind is Term.HOP:
            hop = a[p].conj().T @ a[q]
            H -= m.t * (hop + hop.conj().T)
        else:
            H += m.U * num[p] @ num[q]
    for v, _ in ig.site_terms:
        H += m.U * num[rank[v]]
    return H


def _apply_local(mat: np.ndarray, gate: np.ndarray, p: int, n: int) -> np.ndarray:
    """Left-multiply ``mat`` by ``gate`` acting on positions ``p ..``."""
    k = 2 if gate.shape[0] == 4 else 1
    view = mat.reshape(1 << (n - p - k), gate.shape[0], 1 << p, mat.shape[1])
    return np.einsum("ab,xbyc->xayc", gate, view).reshape(mat.shape)


def _check_positions(net: SwapNetwork, limit: int) -> int:
    net.check_structure()
    n = net.num_positions
    if n > limit:
        raise SizeExceeded(n, limit, "position count")
    return n


def fswap_circuit(net: SwapNetwork) -> np.ndarray:
    """Unitary of the network's swap layers alone."""
    n = _check_positions(net, MAX_MODES)
    F = fswap_unitary()
    out = np.eye(1 << n, dtype=complex)
    for layer in net.layers:
        if isinstance(layer, SwapLayer):
            for i in layer.at:
                out = _apply_local(out, F, i, n)
    return out


def _net_permutation(net: SwapNetwork) -> list:
    """``perm[j]``: final position of the mode that started at position ``j``."""
    n = net.num_positions
    where = list(range(n))  # where[i] = starting position of what sits at i
    for layer in net.layers:
        if isinstance(layer, SwapLayer):
            for i in layer.at:
                where[i], where[i + 1] = where[i + 1], where[i]
    perm = [0] * n
    for i, j in enumerate(where):
        perm[j] = i
    return perm


def mode_permutation_check(net: SwapNetwork, tol: float = 1e-9) -> bool:
    """Whether the swap circuit permutes modes with the correct fermionic sign.

    Each occupation basis state must go to the state with occupations carried
    along by the net permutation, times (-1) to the number of inversions among
    the occupied modes.
    """
    n = _check_positions(net, MAX_MODES)
    W = fswap_circuit(net)
    perm = _net_permutation(net)
    expected = np.zeros_like(W)
    for x in range(1 << n):
        occ = [j for j in range(n) if x >> j & 1]
        y = sum(1 << perm[j] for j in occ)
        inv = sum(1 for i, j in enumerate(occ) for k in occ[i + 1:] if perm[j] > perm[k])
        expected[y, x] = -1 if inv % 2 else 1
    return bool(np.max(np.abs(W - expected), initial=0.0) <= tol)


def trotter_unitary(m: HubbardModel, net: SwapNetwork, dt: float) -> np.ndarray:
    """First-order product formula read off the network, in the initial frame.

    Gates are applied in layer order: fermionic swaps for swap layers and
    ``exp(-i h dt)`` for every interaction record on its positions. The
    accumulated swaps are undone at the end.
    """
    n = _check_positions(net, MAX_TROTTER_MODES)
    F = fswap_unitary()
    gates: Dict[Term, np.ndarray] = {k: expm(-1j * dt * _local_term(k, m.U, m.t)) for k in Term}
    circ = np.eye(1 << n, dtype=complex)
    for layer in net.layers:
        if isinstance(layer, SwapLayer):
            for i in layer.at:
                circ = _apply_local(circ, F, i, n)
        else:
            for rec in layer.pairs:
                circ = _apply_local(circ, gates[rec.term], rec.at, n)
    return fswap_circuit(net).conj().T @ circ


@dataclass
class TrotterReport:
    err: float
    err_half: float
    ratio: float
    passed: bool

    def to_json(self) -> dict:
        ratio = self.ratio if math.isfinite(self.ratio) else None
        return {"err": self.err, "ratio": ratio, "pass": self.passed}


def trotter_error(m: HubbardModel, net: SwapNetwork, dt: float) -> float:
    """Spectral-norm distance between ``exp(-i H dt)`` and the product formula."""
    if dt <= 0:
        raise InvalidArgument(f"time step must be positive, got {dt}")
    H = hubbard_matrix(m, net.initial_order)
    exact = expm(-1j * dt * H)
    return float(np.linalg.norm(exact - trotter_unitary(m, net, dt), ord=2))


def trotter_error_check(m: HubbardModel, net: SwapNetwork, dt: float,
                        band: Tuple[float, float] = (3.2, 4.8)) -> TrotterReport:
    """Trotter error at ``dt`` and its ratio to the error at ``dt / 2``.

    A first-order formula has one-step error quadratic in ``dt``, so the
    ratio should sit near 4. When the error vanishes (commuting terms) the
    ratio is undefined and reported as NaN, which fails the check.
    """
    if m.n_modes > MAX_TROTTER_MODES:
        raise SizeExceeded(m.n_modes, MAX_TROTTER_MODES, "mode count")
    err = trotter_error(m, net, dt)
    half = trotter_error(m, net, dt / 2)
    # below round-off the ratio is noise, not a scaling
    ratio = err / half if half > _NOISE_FLOOR else math.nan
    passed = band[0] <= ratio <= band[1]
    return TrotterReport(err, half, ratio, passed)
