"""Static ASCII and SVG drawings of paths and trees.

Output is deterministic byte-for-byte for a given input, which makes the
drawings usable in golden tests.  The ASCII path grid approximates a
down-step of drop k by a backslash over the top unit and pipes below;
level steps are underscores sitting on their height line.  Labels, when
requested, are listed in a legend line keyed by block start index (for
paths) or drawn inside the nodes (for trees).
"""

from __future__ import annotations

from .core import LatticePath, NodeLabel, PositionalTree, height_profile


# ---------------------------------------------------------------------------
# paths
# ---------------------------------------------------------------------------

def render_path_ascii(path: LatticePath,
                      labels: dict[int, NodeLabel] | None = None) -> str:
    heights = height_profile(path)
    cells: dict[tuple[int, int], str] = {}
    x = 0
    for i, step in enumerate(path.steps):
        h = heights[i]
        if step.kind == "u":
            cells[h, x] = "/"
            x += 1
        elif step.kind == "d":
            cells[h - 1, x] = "\\"
            for row in range(heights[i + 1], h - 1):
                cells[row, x] = "|"
            x += 1
        else:
            for dx in range(step.length):
                cells[h, x + dx] = "_"
            x += step.length
    lines = []
    if cells:
        top = max(r for r, _ in cells)
        width = max(c for _, c in cells) + 1
        for row in range(top, -1, -1):
            line = "".join(cells.get((row, col), " ") for col in range(width))
            lines.append(line.rstrip())
    if labels:
        legend = " ".join(f"{i}={labels[i].display()}" for i in sorted(labels))
        lines.append(f"labels: {legend}")
    return "\n".join(lines)


def render_path_svg(path: LatticePath,
                    labels: dict[int, NodeLabel] | None = None,
                    unit: int = 20) -> str:
    heights = height_profile(path)
    margin = unit
    top = max(heights) if heights else 0
    width = path.path_length * unit + 2 * margin
    height = (top - min(heights) + 1) * unit + 2 * margin

    def xy(x_units: int, h: int) -> tuple[int, int]:
        return margin + x_units * unit, margin + (top - h) * unit

    points = []
    x = 0
    points.append(xy(0, heights[0]))
    for i, step in enumerate(path.steps):
        x += step.length
        points.append(xy(x, heights[i + 1]))
    point_str = " ".join(f"{px},{py}" for px, py in points)
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">',
        f'<polyline points="{point_str}" fill="none" stroke="black" '
        'stroke-width="2"/>',
    ]
    if labels:
        # each label belongs to the vertex after its block start step
        offsets = [0]
        for step in path.steps:
            offsets.append(offsets[-1] + step.length)
        for i in sorted(labels):
            px, py = xy(offsets[i + 1], heights[i + 1])
            parts.append(f'<text x="{px + 3}" y="{py - 4}" '
                         f'font-size="{unit // 2 + 2}">'
                         f"{labels[i].display()}</text>")
    parts.append("</svg>")
    return "\n".join(parts)


# ---------------------------------------------------------------------------
# trees
# ---------------------------------------------------------------------------

def _node_text(node: PositionalTree) -> str:
    return node.label.display() if node.label is not None else "*"


def render_tree_ascii(tree: PositionalTree | None) -> str:
    if tree is None:
        return ""
    lines = [_node_text(tree)]

    def rec(node: PositionalTree, depth: int) -> None:
        for pos, child in node.children:
            lines.append("  " * depth + f"{pos}: {_node_text(child)}")
            rec(child, depth + 1)

    rec(tree, 1)
    return "\n".join(lines)


def render_tree_svg(tree: PositionalTree | None, unit: int = 40) -> str:
    if tree is None:
        return ('<svg xmlns="http://www.w3.org/2000/svg" width="0" '
                'height="0" viewBox="0 0 0 0"></svg>')
    # leaves take consecutive horizontal slots; parents sit midway
    positions: dict[int, tuple[float, int]] = {}
    next_slot = [0]

    def place(node: PositionalTree, depth: int) -> float:
        if not node.children:
            x = float(next_slot[0])
            next_slot[0] += 1
        else:
            xs = [place(child, depth + 1) for _, child in node.children]
            x = sum(xs) / len(xs)
        positions[id(node)] = (x, depth)
        return x

    depth_of = {}

    def depth_max(node: PositionalTree, depth: int) -> int:
        depth_of[id(node)] = depth
        if not node.children:
            return depth
        return max(depth_max(c, depth + 1) for _, c in node.children)

    place(tree, 0)
    deepest = depth_max(tree, 0)
    margin = unit
    width = int((next_slot[0] - 1) * unit + 2 * margin) if next_slot[0] > 1 \
        else 2 * margin
    height = deepest * unit + 2 * margin

    def xy(node: PositionalTree) -> tuple[int, int]:
        x, d = positions[id(node)]
        return int(margin + x * unit), margin + d * unit

    edges = []
    nodes = []

    def draw(node: PositionalTree) -> None:
        px, py = xy(node)
        for pos, child in node.children:
            cx, cy = xy(child)
            edges.append(f'<line x1="{px}" y1="{py}" x2="{cx}" y2="{cy}" '
                         'stroke="black"/>')
            edges.append(f'<text x="{(px + cx) // 2 + 2}" '
                         f'y="{(py + cy) // 2}" font-size="10">{pos}</text>')
            draw(child)
        r = unit // 3
        nodes.append(f'<circle cx="{px}" cy="{py}" r="{r}" fill="white" '
                     'stroke="black"/>')
        text = _node_text(node)
        if text != "*":
            nodes.append(f'<text x="{px}" y="{py + 4}" font-size="11" '
                         f'text-anchor="middle">{text}</text>')

    draw(tree)
    parts = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
             f'height="{height}" viewBox="0 0 {width} {height}">']
    parts.extend(edges)
    parts.extend(nodes)
    parts.append("</svg>")
    return "\n".join(parts)
