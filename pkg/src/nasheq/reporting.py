"""Text rendering of solve results: payoff blocks, EE lines, components.

The line grammar is normative, the column padding is not:

    EE k P1: (i) p1 ... pm EP= u P2: (j) q1 ... qn EP= v
    Connected component c:
    {i, ...}  x  {j, ...}

Rational values print as exact fractions.  The decimal block re-renders the
same equilibria rounded half-away-from-zero to four decimal places, with
trailing zeros trimmed (at least one decimal digit kept), "0" for exact
zero and "n.0" for other exact integers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .components import Component, connected_components
from .enumeration import ExtremeEquilibrium, enumerate_extreme_equilibria
from .strategic import BimatrixGame


def render_decimal(value: Fraction) -> str:
    if value == 0:
        return "0"
    if value.denominator == 1:
        return f"{value.numerator}.0"
    sign = "-" if value < 0 else ""
    scaled = abs(value) * 10_000
    units = scaled.numerator // scaled.denominator
    if 2 * (scaled.numerator - units * scaled.denominator) >= scaled.denominator:
        units += 1
    digits = f"{units:05d}"
    whole, frac = digits[:-4], digits[-4:].rstrip("0")
    if not frac:
        frac = "0"
    return f"{sign}{int(whole)}.{frac}"


@dataclass
class EquilibriumReport:
    game: BimatrixGame
    equilibria: list[ExtremeEquilibrium]
    components: list[Component] = field(default_factory=list)


def solve_enumerate(game: BimatrixGame, should_stop=None) -> EquilibriumReport:
    """Full pipeline: extreme equilibria plus component/clique structure."""
    equilibria = enumerate_extreme_equilibria(game, should_stop=should_stop)
    return EquilibriumReport(game, equilibria, connected_components(equilibria))


def payoff_blocks(game: BimatrixGame) -> str:
    lines = ["Strategic form: "]
    for player, matrix in ((1, game.a), (2, game.b)):
        lines.append(f"{game.m} x {game.n} Payoff player {player}")
        lines.append("")
        cells = [[str(v) for v in row] for row in matrix]
        name_w = max(len(n) for n in game.row_names)
        widths = [
            max(len(game.col_names[j]), max(len(cells[i][j]) for i in range(game.m)))
            for j in range(game.n)
        ]
        header = " " * name_w + " " + " ".join(
            game.col_names[j].rjust(widths[j]) for j in range(game.n)
        )
        lines.append(header)
        for i in range(game.m):
            row = game.row_names[i].ljust(name_w) + " " + " ".join(
                cells[i][j].rjust(widths[j]) for j in range(game.n)
            )
            lines.append(row)
        lines.append("")
    return "\n".join(lines[:-1])


def _ee_lines(equilibria, fmt) -> list[str]:
    if not equilibria:
        return []
    rows = []
    for ee in equilibria:
        rows.append(
            (
                str(ee.idx1),
                f"({ee.idx1})",
                [fmt(p) for p in ee.x],
                fmt(ee.u),
                f"({ee.idx2})",
                [fmt(q) for q in ee.y],
                fmt(ee.v),
            )
        )
    m = len(equilibria[0].x)
    n = len(equilibria[0].y)
    k_w = len(str(len(rows)))
    tag1_w = max(len(r[1]) for r in rows)
    tag2_w = max(len(r[4]) for r in rows)
    x_w = [max(len(r[2][i]) for r in rows) for i in range(m)]
    y_w = [max(len(r[5][j]) for r in rows) for j in range(n)]
    u_w = max(len(r[3]) for r in rows)
    v_w = max(len(r[6]) for r in rows)
    out = []
    for k, r in enumerate(rows, 1):
        xs = " ".join(r[2][i].rjust(x_w[i]) for i in range(m))
        ys = " ".join(r[5][j].rjust(y_w[j]) for j in range(n))
        out.append(
            f"EE {str(k).rjust(k_w)} P1: {r[1].rjust(tag1_w)} {xs} EP= {r[3].rjust(u_w)} "
            f"P2: {r[4].rjust(tag2_w)} {ys} EP= {r[6].rjust(v_w)} "
        )
    return out


def component_lines(components) -> list[str]:
    lines = []
    for k, comp in enumerate(components, 1):
        if k > 1:
            lines.append("")
        lines.append(f"Connected component {k}:")
        for u, v in comp.cliques:
            left = "{" + ", ".join(str(i) for i in u) + "}"
            right = "{" + ", ".join(str(j) for j in v) + "}"
            lines.append(f"{left}  x  {right}")
    return lines


def render(report: EquilibriumReport, mode: str = "both", header: bool = True) -> str:
    """The full text block: payoff header, EE lines, components."""
    if mode not in ("rational", "decimal", "both"):
        raise ValueError(f"unknown render mode {mode!r}")
    parts = []
    if header:
        parts.append(payoff_blocks(report.game))
        parts.append("")
    parts.append("EE = Extreme Equilibrium, EP = Expected Payoffs")
    if report.equilibria:
        if mode in ("rational", "both"):
            parts.append("")
            parts.append("Rational:")
            parts.extend(_ee_lines(report.equilibria, str))
        if mode in ("decimal", "both"):
            parts.append("")
            parts.append("Decimal:")
            parts.extend(_ee_lines(report.equilibria, render_decimal))
        parts.append("")
        parts.extend(component_lines(report.components))
    return "\n".join(parts) + "\n"


def single_equilibrium_report(game, ee, mode="both") -> str:
    """EE lines for one path-following result, without component analysis."""
    parts = ["EE = Extreme Equilibrium, EP = Expected Payoffs"]
    if mode in ("rational", "both"):
        parts += ["", "Rational:"] + _ee_lines([ee], str)
    if mode in ("decimal", "both"):
        parts += ["", "Decimal:"] + _ee_lines([ee], render_decimal)
    return "\n".join(parts) + "\n"


def structured(report: EquilibriumReport) -> dict:
    """Machine-readable encoding: exact fraction strings and index sets."""
    return {
        "rows": report.game.m,
        "cols": report.game.n,
        "row_names": list(report.game.row_names),
        "col_names": list(report.game.col_names),
        "equilibria": [
            {
                "ee": k,
                "p1": {
                    "index": ee.idx1,
                    "probs": [str(p) for p in ee.x],
                    "payoff": str(ee.u),
                },
                "p2": {
                    "index": ee.idx2,
                    "probs": [str(q) for q in ee.y],
                    "payoff": str(ee.v),
                },
            }
            for k, ee in enumerate(report.equilibria, 1)
        ],
        "components": [
            {
                "index": k,
                "cliques": [
                    {"p1": list(u), "p2": list(v)} for u, v in comp.cliques
                ],
            }
            for k, comp in enumerate(report.components, 1)
        ],
    }
