"""Figure rendering for the verify report path.

Writes four PNGs next to the delimited report output: the truncated
shift matrix as a heatmap, the weight sequence g_n across several q0,
the diagonal Gram spectrum of the integral pairing, and the spherical
component dimension staircase.  Everything is deterministic in the
options, so reruns reproduce identical figures.
"""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from .modalg import ExtElement
from .fock import fock_matrix, weight
from .integral import gram_diagonal
from .flag import component_rank


def _fock_heatmap(path: Path, N: int, q0: float) -> None:
    m = fock_matrix(ExtElement.pol_mono(1, 0), N).to_float_orthonormal(q0)
    fig, ax = plt.subplots(figsize=(5.2, 4.4))
    im = ax.imshow(np.abs(m), cmap="viridis", origin="upper")
    ax.set_title(f"shift generator, orthonormal basis (N={N}, q0={q0})")
    ax.set_xlabel("source index")
    ax.set_ylabel("target index")
    fig.colorbar(im, ax=ax, label="|entry|")
    fig.tight_layout()
    fig.savefig(path, dpi=110)
    plt.close(fig)


def _weight_curves(path: Path, N: int) -> None:
    ns = list(range(N + 1))
    fig, ax = plt.subplots(figsize=(5.2, 4.4))
    for q0 in (0.25, 0.5, 0.9):
        gs = [float(weight(n).eval_at_q(Fraction(q0).limit_denominator(100)))
              for n in ns]
        ax.plot(ns, gs, marker=".", label=f"q0 = {q0}")
    ax.axhline(1.0, color="gray", lw=0.8, ls="--")
    ax.set_title("basis weights g_n = prod (1 - q^2k)")
    ax.set_xlabel("n")
    ax.set_ylabel("g_n")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=110)
    plt.close(fig)


def _gram_spectrum(path: Path, bound: int, q0: Fraction) -> None:
    diag = gram_diagonal(bound)
    vals = sorted((float(v.eval_at_q(q0)) for v in diag.values()),
                  reverse=True)
    fig, ax = plt.subplots(figsize=(5.2, 4.4))
    ax.semilogy(range(1, len(vals) + 1), vals, marker="o", ls="")
    ax.set_title(f"Gram diagonal of the invariant pairing (q0 = {q0})")
    ax.set_xlabel("index (sorted)")
    ax.set_ylabel("value")
    fig.tight_layout()
    fig.savefig(path, dpi=110)
    plt.close(fig)


def _spherical_staircase(path: Path, nmax: int) -> None:
    ns = list(range(nmax + 1))
    ranks = [component_rank(n) for n in ns]
    fig, ax = plt.subplots(figsize=(5.2, 4.4))
    ax.bar(ns, ranks, color="#4878a8")
    ax.plot(ns, [2 * n + 1 for n in ns], color="#b1521f", marker="x", ls="--",
            label="2n + 1")
    ax.set_title("spherical component dimensions")
    ax.set_xlabel("degree n")
    ax.set_ylabel("rank")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=110)
    plt.close(fig)


def render_figures(outdir: Path, N: int = 24, q0: Fraction = Fraction(1, 2),
                   gram_bound: int = 6, nmax: int = 8) -> list[str]:
    """Renders the four report figures into outdir; returns the file names."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    N = min(N, 48)
    jobs = [
        ("fock_heatmap.png", lambda p: _fock_heatmap(p, N, float(q0))),
        ("weights.png", lambda p: _weight_curves(p, min(N, 32))),
        ("gram_spectrum.png", lambda p: _gram_spectrum(p, gram_bound, q0)),
        ("spherical_ranks.png", lambda p: _spherical_staircase(p, nmax)),
    ]
    written = []
    for name, job in jobs:
        job(outdir / name)
        written.append(name)
    return written
