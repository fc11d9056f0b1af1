"""Matplotlib renderings of the computed structures, written to files.

Everything here draws from computed data only and uses deterministic
layouts, so repeated runs produce identical figures.
"""

from __future__ import annotations

import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt


def save_incidence_figure(D, path: str):
    """Heatmap of the 0/1 incidence grid with block/point labels."""
    grid = D.matrix()
    fig, ax = plt.subplots(figsize=(5, 5))
    ax.imshow(grid, cmap="Greys", vmin=0, vmax=1)
    ax.set_xticks(range(D.n_points), D.points, rotation=90, fontsize=8)
    ax.set_yticks(range(D.n_blocks), D.block_labels, fontsize=8)
    ax.set_title("incidence grid (rows = blocks)")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_bipartite_figure(G, path: str):
    """Two-column drawing of the bipartite incidence graph."""
    fig, ax = plt.subplots(figsize=(6, max(3, 0.5 * max(
        len(G.block_vertices), len(G.point_vertices)))))
    ypos = {}
    for i, b in enumerate(G.block_vertices):
        ypos[b] = (0.0, -float(i))
    for j, p in enumerate(G.point_vertices):
        ypos[p] = (1.0, -float(j))
    for b, p in G.edges:
        (x1, y1), (x2, y2) = ypos[b], ypos[p]
        ax.plot([x1, x2], [y1, y2], color="0.6", lw=0.8, zorder=1)
    for b in G.block_vertices:
        x, y = ypos[b]
        ax.scatter([x], [y], marker="s", s=160, color="tab:red", zorder=2)
        ax.annotate(b, (x, y), ha="right", va="center", fontsize=8,
                    xytext=(-8, 0), textcoords="offset points")
    for p in G.point_vertices:
        x, y = ypos[p]
        ax.scatter([x], [y], marker="o", s=160, color="tab:blue", zorder=2)
        ax.annotate(p, (x, y), ha="left", va="center", fontsize=8,
                    xytext=(8, 0), textcoords="offset points")
    ax.set_xlim(-0.4, 1.4)
    ax.axis("off")
    ax.set_title(f"bipartite incidence graph "
                 f"({'connected' if G.connected else f'{G.n_components} components'})")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_component_figure(comps, path: str, title: str = "2-complex components"):
    """Grouped bar chart of V/E/F counts per component."""
    fig, ax = plt.subplots(figsize=(max(4, 1.5 * len(comps)), 4))
    xs = range(len(comps))
    width = 0.25
    ax.bar([x - width for x in xs], [c.n_vertices for c in comps],
           width, label="V", color="tab:blue")
    ax.bar(list(xs), [c.n_edges for c in comps],
           width, label="E", color="tab:orange")
    ax.bar([x + width for x in xs], [c.n_faces for c in comps],
           width, label="F", color="tab:green")
    for x, c in zip(xs, comps):
        ax.annotate(f"chi={c.euler_characteristic}",
                    (x, max(c.n_vertices, c.n_edges, c.n_faces)),
                    ha="center", va="bottom", fontsize=8)
    ax.set_xticks(list(xs), [f"comp {i+1}" for i in xs])
    ax.set_title(title)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_square_census_figure(census: dict, path: str):
    """Singular vs non-singular square counts per D-class."""
    per_dclass: dict[int, list] = {}
    for sq in census["squares"]:
        per_dclass.setdefault(sq["dclass"], [0, 0])
        per_dclass[sq["dclass"]][0 if sq.get("singular") else 1] += 1
    dclasses = sorted(per_dclass)
    fig, ax = plt.subplots(figsize=(max(4, 1.5 * len(dclasses)), 4))
    xs = range(len(dclasses))
    ax.bar([x - 0.15 for x in xs], [per_dclass[d][0] for d in dclasses],
           0.3, label="singular", color="tab:green")
    ax.bar([x + 0.15 for x in xs], [per_dclass[d][1] for d in dclasses],
           0.3, label="not singular", color="0.6")
    ax.set_xticks(list(xs), [f"D{d}" for d in dclasses])
    ax.set_title("E-square census")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_report_figures(art, out_dir: str) -> list:
    """All figures for one reproduction run; returns the written paths."""
    from .biorder import square_census
    from .complexes import components
    from .incidence import bipartite_graph, incidence_of_dclass

    os.makedirs(out_dir, exist_ok=True)
    written = []

    D = incidence_of_dclass(art.S, art.indices["f_R1_L1"])
    path = os.path.join(out_dir, "incidence_grid.png")
    save_incidence_figure(D, path)
    written.append(path)

    path = os.path.join(out_dir, "bipartite_graph.png")
    save_bipartite_figure(bipartite_graph(D), path)
    written.append(path)

    path = os.path.join(out_dir, "gh_components.png")
    save_component_figure(components(art.GH), path,
                          "Graham-Houghton complex components")
    written.append(path)

    path = os.path.join(out_dir, "square_census.png")
    save_square_census_figure(square_census(art.B), path)
    written.append(path)
    return written
