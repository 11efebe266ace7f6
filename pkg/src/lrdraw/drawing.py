"""Grid drawings: integer points per node, optional apex pair."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

LR = "LR"
BELL_LIKE = "BELL_LIKE"
FLAT = "FLAT"
OUTERPLANAR = "OUTERPLANAR"


@dataclass
class GridDrawing:
    points: dict  # id -> (x, y); y decreases downward
    kind: str
    apexes: Optional[tuple] = None  # ((x, y), (x, y)) when present

    def bbox(self, with_apexes: bool = False):
        pts = list(self.points.values())
        if with_apexes and self.apexes is not None:
            pts += list(self.apexes)
        xs = [p[0] for p in pts]
        ys = [p[1] for p in pts]
        return min(xs), min(ys), max(xs), max(ys)

    @property
    def width(self) -> int:
        x0, _, x1, _ = self.bbox()
        return x1 - x0 + 1

    @property
    def height(self) -> int:
        _, y0, _, y1 = self.bbox()
        return y1 - y0 + 1

    def area(self, with_apexes: bool = False) -> int:
        x0, y0, x1, y1 = self.bbox(with_apexes)
        return (x1 - x0 + 1) * (y1 - y0 + 1)

    def translated(self, dx: int, dy: int) -> "GridDrawing":
        pts = {v: (x + dx, y + dy) for v, (x, y) in self.points.items()}
        ap = None
        if self.apexes is not None:
            ap = tuple((x + dx, y + dy) for x, y in self.apexes)
        return GridDrawing(pts, self.kind, ap)

    def to_json(self) -> str:
        doc = {
            "kind": self.kind,
            "points": [
                {"id": v, "x": x, "y": y}
                for v, (x, y) in sorted(self.points.items())
            ],
        }
        if self.apexes is not None:
            doc["apexes"] = [list(p) for p in self.apexes]
        return json.dumps(doc)


def drawing_from_json(text: str) -> GridDrawing:
    doc = json.loads(text)
    points = {rec["id"]: (rec["x"], rec["y"]) for rec in doc["points"]}
    apexes = None
    if doc.get("apexes") is not None:
        apexes = tuple((int(x), int(y)) for x, y in doc["apexes"])
    return GridDrawing(points, doc["kind"], apexes)
