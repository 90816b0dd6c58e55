"""Cover diagrams and cross-implication arrows as Graphviz DOT text."""

from __future__ import annotations

import numpy as np

from .algebra import Algebra
from .implication import CrossImplication, _bool_matmul


def _node_id(side: int, mask: int) -> str:
    return f"n{side}_{mask}"


def _hasse_lines(algebra: Algebra, side: int) -> list[str]:
    lines = []
    for mask in range(algebra.full_mask + 1):
        from .algebra import Prop

        label = algebra.formula_text(Prop(algebra, mask))
        lines.append(f'  {_node_id(side, mask)} [label="{label}"];')
    for mask in range(algebra.full_mask + 1):
        for i in range(algebra.model_count):
            bit = 1 << i
            if mask & bit == 0:
                lines.append(
                    f"  {_node_id(side, mask)} -> {_node_id(side, mask | bit)};"
                )
    return lines


def algebra_dot(algebra: Algebra, side: int = 1) -> str:
    """The cover (Hasse) diagram of one algebra."""
    lines = [f'digraph "{algebra.name}" {{', "  rankdir=BT;"]
    lines.extend(_hasse_lines(algebra, side))
    lines.append("}")
    return "\n".join(lines) + "\n"


def _strict_within(n_models: int) -> np.ndarray:
    masks = np.arange(1 << n_models, dtype=np.int64)
    grid = (masks[:, None] & ~masks[None, :]) == 0
    np.fill_diagonal(grid, False)
    return grid


def _reduced_cross(rows: np.ndarray, m_src: int, m_dst: int) -> np.ndarray:
    """Drop cross pairs that factor through a strictly finer step on either
    side; what remains is the transitive reduction restricted to props."""
    block = rows[: 1 << m_src, : 1 << m_dst]
    via_src = _bool_matmul(_strict_within(m_src), block)
    via_dst = _bool_matmul(block, _strict_within(m_dst))
    return block & ~via_src & ~via_dst


def cross_dot(r: CrossImplication, full: bool = False) -> str:
    """Both cover diagrams plus the cross arrows (reduced unless ``full``);
    mutually implied pairs are drawn once, double-headed."""
    a1, a2 = r.algebra1, r.algebra2
    lines = ['digraph cross {', "  rankdir=BT;"]
    lines.append(f'  subgraph cluster_1 {{ label="{a1.name}";')
    lines.extend("  " + l for l in _hasse_lines(a1, 1))
    lines.append("  }")
    lines.append(f'  subgraph cluster_2 {{ label="{a2.name}";')
    lines.extend("  " + l for l in _hasse_lines(a2, 2))
    lines.append("  }")
    if full:
        fwd = r.rows12[: a1.full_mask + 1, : a2.full_mask + 1]
        back = r.rows21[: a2.full_mask + 1, : a1.full_mask + 1]
    else:
        fwd = _reduced_cross(r.rows12, a1.model_count, a2.model_count)
        back = _reduced_cross(r.rows21, a2.model_count, a1.model_count)
    style = 'color=forestgreen, style=bold'
    for x, y in np.argwhere(fwd):
        if back[y, x]:
            lines.append(
                f"  {_node_id(1, int(x))} -> {_node_id(2, int(y))} "
                f"[{style}, dir=both];"
            )
        else:
            lines.append(
                f"  {_node_id(1, int(x))} -> {_node_id(2, int(y))} [{style}];"
            )
    for y, x in np.argwhere(back):
        if not fwd[x, y]:
            lines.append(
                f"  {_node_id(2, int(y))} -> {_node_id(1, int(x))} [{style}];"
            )
    lines.append("}")
    return "\n".join(lines) + "\n"
