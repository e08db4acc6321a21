"""Convolutional-layer workloads and loop-dimension algebra.

A layer is a 7D iteration space over B, K, C, OY, OX, FY, FX.  Each of the
three operands (W, I, O) spans a 4D slice of that space, so every loop
dimension is relevant (r), irrelevant (ir) or partially relevant (pr) to
each operand.  The pr dimensions come in the fixed pairs (OX, FX) and
(OY, FY): they address the Input feature map jointly via
ix = sx*ox + fx (and likewise for y).
"""

from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Tuple

DIMS: Tuple[str, ...] = ("B", "K", "C", "OY", "OX", "FY", "FX")
OPERANDS: Tuple[str, ...] = ("W", "I", "O")

# pr pairs as (output dim, filter dim) per spatial axis
PR_PAIRS: Dict[str, Tuple[str, str]] = {"x": ("OX", "FX"), "y": ("OY", "FY")}

_RELEVANT = {
    "W": frozenset({"K", "C", "FY", "FX"}),
    "I": frozenset({"B", "C"}),
    "O": frozenset({"B", "K", "OY", "OX"}),
}
_PARTIAL = {
    "W": frozenset(),
    "I": frozenset({"OY", "OX", "FY", "FX"}),
    "O": frozenset(),
}


def classify(dim: str, op: str) -> str:
    """Relevance of a loop dimension to an operand: 'r', 'ir' or 'pr'."""
    if dim not in DIMS:
        raise ValueError(f"unknown loop dimension {dim!r}")
    if op not in OPERANDS:
        raise ValueError(f"unknown operand {op!r}")
    if dim in _RELEVANT[op]:
        return "r"
    if dim in _PARTIAL[op]:
        return "pr"
    return "ir"


@dataclass(frozen=True)
class LayerSpec:
    """Loop bounds, operand precisions and strides of one layer.

    Input feature sizes are derived, never stored:
    IX = SX*(OX-1) + FX, IY = SY*(OY-1) + FY.
    """

    dims: Dict[str, int]
    precision: Dict[str, int] = field(
        default_factory=lambda: {"W": 16, "I": 16, "O_partial": 16, "O_final": 16}
    )
    stride_x: int = 1
    stride_y: int = 1
    name: str = ""

    def __post_init__(self):
        full = dict.fromkeys(DIMS, 1)
        for d, v in self.dims.items():
            if d not in DIMS:
                raise ValueError(f"unknown dimension {d!r}")
            if int(v) < 1:
                raise ValueError(f"dimension {d} must be >= 1, got {v}")
            full[d] = int(v)
        object.__setattr__(self, "dims", full)
        for key in ("W", "I", "O_partial", "O_final"):
            if key not in self.precision or int(self.precision[key]) < 1:
                raise ValueError(f"precision {key!r} missing or < 1")
        if self.precision["O_partial"] < self.precision["O_final"]:
            raise ValueError("O_partial precision must be >= O_final")
        if self.stride_x < 1 or self.stride_y < 1:
            raise ValueError("strides must be >= 1")

    def __getitem__(self, dim: str) -> int:
        return self.dims[dim]

    @property
    def ix(self) -> int:
        return self.stride_x * (self.dims["OX"] - 1) + self.dims["FX"]

    @property
    def iy(self) -> int:
        return self.stride_y * (self.dims["OY"] - 1) + self.dims["FY"]

    @property
    def total_macs(self) -> int:
        n = 1
        for d in DIMS:
            n *= self.dims[d]
        return n


def prime_factors(n: int) -> List[int]:
    """Ascending prime factorization of n (empty for n == 1)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    out = []
    p = 2
    while p * p <= n:
        while n % p == 0:
            out.append(p)
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out.append(n)
    return out


def lpf_factorize(spec: LayerSpec) -> List[Tuple[str, int]]:
    """Atomic (dimension, prime factor) blocking units of a layer.

    The product of the returned factors of each dimension equals its loop
    bound; dimensions of size 1 contribute nothing.
    """
    lpfs = []
    for d in DIMS:
        for p in prime_factors(spec.dims[d]):
            lpfs.append((d, p))
    return lpfs


def pr_span(out_extent: int, filt_extent: int, stride: int) -> int:
    """Distinct input coordinates covered by {stride*o + f} over the two
    contiguous extents.  Consecutive output windows overlap only when the
    filter extent exceeds the stride."""
    if filt_extent >= stride:
        return stride * (out_extent - 1) + filt_extent
    return out_extent * filt_extent


def operand_size(spec: LayerSpec, op: str) -> int:
    """Total element count of one operand of the layer."""
    d = spec.dims
    if op == "W":
        return d["K"] * d["C"] * d["FY"] * d["FX"]
    if op == "O":
        return d["B"] * d["K"] * d["OY"] * d["OX"]
    if op == "I":
        return d["B"] * d["C"] * spec.ix * spec.iy
    raise ValueError(f"unknown operand {op!r}")


def iter_dims(spec: LayerSpec) -> Iterator[Tuple[str, int]]:
    for d in DIMS:
        yield d, spec.dims[d]
