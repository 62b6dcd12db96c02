"""Matplotlib summary figures for the batch report paths."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt


def graphsearch_figure(records: list[dict], path: str) -> None:
    """Two-panel summary of a candidate search: how candidates were ruled
    out, and the face-degree census across all candidates."""
    reasons: dict[str, int] = {}
    census: dict[int, int] = {}
    for rec in records:
        reasons[rec["outcome"]] = reasons.get(rec["outcome"], 0) + 1
        for deg, count in rec["census"].items():
            census[int(deg)] = census.get(int(deg), 0) + count
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9, 3.6))
    labels = sorted(reasons)
    ax1.barh(labels, [reasons[k] for k in labels], color="#4878a8")
    ax1.set_xlabel("candidates")
    ax1.set_title("rule-out reasons")
    degs = sorted(census)
    ax2.bar([str(x) for x in degs], [census[x] for x in degs], color="#a85448")
    ax2.set_xlabel("face degree")
    ax2.set_ylabel("faces")
    ax2.set_title("face census over all candidates")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def trace_figure(steps: list[dict], path: str) -> None:
    """Crossing count along a reduction trace."""
    counts = []
    for s in steps:
        counts.append(s["before_pd"].count("X("))
    if steps:
        counts.append(steps[-1]["after_pd"].count("X("))
    fig, ax = plt.subplots(figsize=(5, 3.2))
    ax.plot(range(len(counts)), counts, marker="o", color="#4878a8")
    ax.set_xlabel("step")
    ax.set_ylabel("crossings")
    ax.set_title("reduction trace")
    ax.grid(alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
