"""TSV tables and PNG figures for the verify, explore and cayley commands."""

from __future__ import annotations

import csv
import itertools
import os
from typing import Iterable, List, Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def write_tsv(path: str, header: Sequence[str], rows: Iterable[Sequence]) -> str:
    os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, delimiter="\t", lineterminator="\n")
        w.writerow(header)
        for row in rows:
            w.writerow(["" if v is None else v for v in row])
    return path


def _fmt_set(s) -> str:
    return "{" + ",".join(str(i) for i in s) + "}"


def _save(fig, path: str) -> str:
    os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
    # fixed metadata keeps the files byte-stable across runs
    fig.savefig(path, dpi=110, bbox_inches="tight", metadata={"Software": None})
    plt.close(fig)
    return path


# verify --------------------------------------------------------------------------

def verify_report(results, outdir: str, stem: str) -> List[str]:
    rows = []
    for r in results:
        p = r.params
        rows.append([r.name, p.get("framework"), p.get("m"), p.get("n"), p.get("r"),
                     _fmt_set(p.get("I", [])), _fmt_set(p.get("J", [])), p.get("s", 0),
                     int(r.hypotheses_hold), int(r.is_zero), r.term_count,
                     r.lhs_terms, r.rhs_terms, int(r.ok)])
    header = ["name", "framework", "m", "n", "r", "I", "J", "s", "hypotheses_hold",
              "residual_is_zero", "residual_terms", "lhs_terms", "rhs_terms", "ok"]
    paths = [write_tsv(os.path.join(outdir, f"{stem}.tsv"), header, rows)]

    fig, ax = plt.subplots(figsize=(7, 3.6))
    xs = range(len(rows))
    colors = ["tab:green" if r.ok else "tab:red" for r in results]
    ax.bar(xs, [r.lhs_terms for r in results], color=colors, width=0.8)
    ax.set_xlabel("case")
    ax.set_ylabel("words on the left side")
    ax.set_title(f"{stem}: {sum(r.ok for r in results)}/{len(results)} cases as expected")
    ax.spines["right"].set_visible(False)
    ax.spines["top"].set_visible(False)
    paths.append(_save(fig, os.path.join(outdir, f"{stem}.png")))
    return paths


# explore ---------------------------------------------------------------------------

def explore_report(reports, outdir: str, stem: str) -> List[str]:
    from .explorer import _eval, conditions, residual_f

    rows = []
    for rep in reports:
        d = rep.as_dict()
        rows.append([d["scenario"], d["n"], d["framework"], d["h2_relation"], d["symA"], d["symB"],
                     ";".join("(" + ",".join(map(str, s)) + ")" for s in rep.solutions),
                     f"{rep.c_range[0]}..{rep.c_range[1]}", rep.candidates, rep.f_terms,
                     rep.n_conditions,
                     "" if rep.matches_expected is None else int(rep.matches_expected)])
    header = ["scenario", "n", "framework", "h2", "symA", "symB", "solutions", "c_range",
              "candidates", "f_terms", "conditions", "matches_published"]
    paths = [write_tsv(os.path.join(outdir, f"{stem}.tsv"), header, rows)]

    fig, ax = plt.subplots(figsize=(7, 3.6))
    labels = [rep.scenario.label() for rep in reports]
    ax.bar(range(len(reports)), [rep.f_terms for rep in reports], color="tab:blue")
    ax.set_xticks(range(len(reports)))
    ax.set_xticklabels(labels, rotation=30, ha="right")
    ax.set_ylabel("words in f")
    ax.set_title(f"residual size, n = {reports[0].scenario.n}" if reports else "")
    paths.append(_save(fig, os.path.join(outdir, f"{stem}_terms.png")))

    # for n = 2 show how many conditions each candidate violates
    two = [rep for rep in reports if rep.scenario.n == 2]
    if two:
        cols = min(4, len(two))
        nrows = (len(two) + cols - 1) // cols
        fig, axes = plt.subplots(nrows, cols, figsize=(3.2 * cols, 3.0 * nrows), squeeze=False)
        for ax, rep in itertools.zip_longest(axes.flat, two):
            if rep is None:
                ax.axis("off")
                continue
            conds = conditions(rep.scenario, residual_f(rep.scenario))
            lo, hi = rep.c_range
            vals = list(range(lo, hi + 1))
            grid = [[sum(1 for p in conds if _eval(p, (c1, c2))) for c1 in vals] for c2 in vals]
            im = ax.imshow(grid, origin="lower", cmap="viridis",
                           extent=(lo - 0.5, hi + 0.5, lo - 0.5, hi + 0.5))
            for s in rep.solutions:
                ax.plot(s[0], s[1], "r*", markersize=12)
            ax.set_title(rep.scenario.label(), fontsize=9)
            ax.set_xlabel("c1")
            ax.set_ylabel("c2")
            fig.colorbar(im, ax=ax, shrink=0.8)
        fig.tight_layout()
        paths.append(_save(fig, os.path.join(outdir, f"{stem}_grid.png")))
    return paths


# cayley ----------------------------------------------------------------------------

def cayley_report(results, outdir: str, stem: str) -> List[str]:
    rows = [[r.n, r.s, _fmt_set(r.I), _fmt_set(r.J), len(r.I), int(r.is_zero),
             len(r.lhs), len(r.rhs), len(r.residual)] for r in results]
    header = ["n", "s", "I", "J", "k", "residual_is_zero", "lhs_terms", "rhs_terms",
              "residual_terms"]
    paths = [write_tsv(os.path.join(outdir, f"{stem}.tsv"), header, rows)]

    fig, ax = plt.subplots(figsize=(6, 3.6))
    for n in sorted({r.n for r in results}):
        full = sorted((r.s, len(r.lhs)) for r in results if r.n == n and len(r.I) == n)
        if full:
            ax.plot([s for s, _ in full], [t for _, t in full], "o-", label=f"n = {n}")
    ax.set_xlabel("s")
    ax.set_ylabel("terms in det(d) (det X)^s")
    ax.set_yscale("log")
    ax.legend(frameon=False)
    paths.append(_save(fig, os.path.join(outdir, f"{stem}.png")))
    return paths
