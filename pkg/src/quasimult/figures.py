"""Optional figure rendering for the report path (connection graph, V-parts)."""

from __future__ import annotations

import math

from .algebra import ConcreteAlgebra
from .connections import ConnectionPartition, arg_packs, eval_mu
from .decomposition import Decomposition
from .symbols import Ext


def _one_step_edges(alg: ConcreteAlgebra) -> set[tuple[str, str]]:
    sym = alg.symbolic()
    packs = arg_packs(sym)
    edges: set[tuple[str, str]] = set()
    for i in sym.index_ids:
        reached: set[str] = set()
        for head in (Ext(i, False), Ext(i, True)):
            for pack in packs:
                reached |= {x.name for x in eval_mu(sym, head, pack) if x.is_index}
        for j in reached:
            if j != i:
                edges.add((min(i, j), max(i, j)))
    return edges


def render_figure(alg: ConcreteAlgebra, partition: ConnectionPartition, path: str,
                  decomp: Decomposition | None = None, label: str = "") -> None:
    """Draw the index set on a circle, one color per connection class, with
    single-step transport edges; decomposition data is annotated underneath."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    ids = sorted(alg.w_ids)
    n = len(ids)
    pos = {
        i: (math.cos(2 * math.pi * k / n - math.pi / 2), math.sin(2 * math.pi * k / n - math.pi / 2))
        for k, i in enumerate(ids)
    }
    class_of = {i: c for c, cls in enumerate(partition.classes) for i in cls}
    cmap = plt.get_cmap("tab10")

    fig, ax = plt.subplots(figsize=(5, 5))
    for a, b in sorted(_one_step_edges(alg)):
        ax.plot([pos[a][0], pos[b][0]], [pos[a][1], pos[b][1]], color="0.7", zorder=1)
    for i in ids:
        x, y = pos[i]
        ax.scatter([x], [y], s=600, color=cmap(class_of[i] % 10), zorder=2)
        ax.annotate(i, (x, y), ha="center", va="center", zorder=3)
    caption = [f"classes: {partition.describe()}"]
    if decomp is not None:
        for cls, ideal in zip(decomp.partition.classes, decomp.ideals):
            caption.append("class {" + ",".join(sorted(cls)) + f"}}: V-dim {ideal.v_dim}")
        caption.append(f"U dim: {decomp.u_dim}")
    ax.set_title(label or "connection classes")
    ax.text(0.5, -0.02, "\n".join(caption), transform=ax.transAxes, ha="center", va="top", fontsize=8)
    ax.set_xlim(-1.4, 1.4)
    ax.set_ylim(-1.4, 1.4)
    ax.set_aspect("equal")
    ax.axis("off")
    fig.savefig(path, bbox_inches="tight", dpi=150)
    plt.close(fig)
