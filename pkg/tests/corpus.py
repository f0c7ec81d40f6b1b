"""Ideals shared by the route-agreement checks."""

from regseq.polycore import parse_polynomial
from regseq.symfun import SymFamily, generate


def _fam(spec, n):
    return [generate(SymFamily(tok[0], int(tok[1:]), n)) for tok in spec.split()]


def _poly(texts, n):
    return [parse_polynomial(t, n) for t in texts]


def hilbert_corpus():
    """25 homogeneous ideals: (label, generators, nvars)."""
    items = [
        ("p1 p2 p3", 3), ("p1 p2 p4", 3), ("p1 p3 p5", 3), ("p2 p3 p4", 3),
        ("h1 h4 h5", 3), ("h1 h2 h6", 3), ("h2 h3 h5", 3), ("h2 h3 h8", 3),
        ("h1 h3 h4", 3), ("p2 p4", 3), ("h3 h5", 3), ("p1 p5", 3),
        ("e1 e2", 3), ("p2 p3", 4), ("p1 p2 p5", 4), ("h2 h3 h4", 4),
        ("p1 p2 p3 p5", 4), ("h1 h2 h4 h6", 4), ("p1 p3 p4", 4),
    ]
    out = [(label, _fam(label, n), n) for label, n in items]
    raw = [
        (["x1^2 - x2*x3", "x2^2 - x1*x3", "x3^2 - x1*x2"], 3),
        (["x1*x2", "x2*x3", "x1*x3"], 3),
        (["x1^3 - x2^3", "x1^2*x3"], 3),
        (["x1^2*x2 + x3^3", "x1*x2*x3 - x2^3"], 3),
        (["x1*x4 - x2*x3", "x1^3 - x2^2*x4"], 4),
        (["x1^2 + x2^2 - 2*x3^2", "x1*x2 - x3*x4", "x4^3"], 4),
    ]
    out += [(" ; ".join(t), _poly(t, n), n) for t, n in raw]
    assert len(out) == 25
    return out
