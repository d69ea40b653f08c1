"""Multihomogeneous polynomials over the Gaussian rationals.

A polynomial lives on a fixed tuple of variable blocks, for example
``(("x", "y"), ("z", "w"))`` for a bihomogeneous form on a product of two
projective lines.  Terms are stored densely: each key is one exponent per
declared variable, in declaration order across all blocks.  Per-block degrees
are recomputed from the terms after every operation; a block whose term
degrees disagree is marked inhomogeneous (``None``).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple, Union

from .errors import StructureError
from .gaussian import ONE, ZERO, GaussianRational, RatLike

Blocks = Tuple[Tuple[str, ...], ...]
Exponents = Tuple[int, ...]


def _normalize_blocks(blocks: Iterable[Iterable[str]]) -> Blocks:
    normalized = tuple(tuple(block) for block in blocks)
    flat = [v for block in normalized for v in block]
    if len(set(flat)) != len(flat):
        raise StructureError("variable names must be distinct across blocks")
    if not flat:
        raise StructureError("at least one variable is required")
    return normalized


class MultiHomPoly:
    """Polynomial with exact coefficients on declared variable blocks."""

    __slots__ = ("blocks", "terms", "_vars", "_multidegree")

    def __init__(
        self,
        blocks: Iterable[Iterable[str]],
        terms: Mapping[Sequence[int], RatLike] = (),
    ):
        self.blocks = _normalize_blocks(blocks)
        self._vars = tuple(v for block in self.blocks for v in block)
        nvars = len(self._vars)
        clean: Dict[Exponents, GaussianRational] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exponents, coeff in items:
            key = tuple(exponents)
            if len(key) != nvars:
                raise StructureError(
                    f"exponent vector {key} has length {len(key)}, expected {nvars}"
                )
            if any(not isinstance(e, int) or e < 0 for e in key):
                raise StructureError(f"exponents must be nonnegative integers: {key}")
            value = clean.get(key, ZERO) + GaussianRational.coerce(coeff)
            if value.is_zero():
                clean.pop(key, None)
            else:
                clean[key] = value
        self.terms = clean
        self._multidegree = self._compute_multidegree()

    # ---------------------------------------------------------------- basics

    @classmethod
    def zero(cls, blocks: Iterable[Iterable[str]]) -> "MultiHomPoly":
        return cls(blocks)

    @classmethod
    def constant(cls, blocks: Iterable[Iterable[str]], value: RatLike) -> "MultiHomPoly":
        blocks = _normalize_blocks(blocks)
        nvars = sum(len(b) for b in blocks)
        return cls(blocks, {(0,) * nvars: value})

    @classmethod
    def variable(cls, blocks: Iterable[Iterable[str]], name: str) -> "MultiHomPoly":
        blocks = _normalize_blocks(blocks)
        flat = [v for block in blocks for v in block]
        if name not in flat:
            raise StructureError(f"unknown variable {name!r}")
        expo = tuple(1 if v == name else 0 for v in flat)
        return cls(blocks, {expo: 1})

    @property
    def variables(self) -> Tuple[str, ...]:
        return self._vars

    def var_index(self, name: str) -> int:
        try:
            return self._vars.index(name)
        except ValueError:
            raise StructureError(f"unknown variable {name!r}") from None

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def _compute_multidegree(self) -> Tuple[Optional[int], ...]:
        if not self.terms:
            return (None,) * len(self.blocks)
        degrees = []
        offset = 0
        for block in self.blocks:
            width = len(block)
            sums = {sum(key[offset : offset + width]) for key in self.terms}
            degrees.append(sums.pop() if len(sums) == 1 else None)
            offset += width
        return tuple(degrees)

    @property
    def multidegree(self) -> Tuple[Optional[int], ...]:
        """Per-block degree, with None marking an inhomogeneous block."""
        return self._multidegree

    def is_multihomogeneous(self) -> bool:
        return bool(self.terms) and all(d is not None for d in self._multidegree)

    def total_degree(self) -> int:
        if not self.terms:
            return 0
        return max(sum(key) for key in self.terms)

    # ------------------------------------------------------------ arithmetic

    def _check_blocks(self, other: "MultiHomPoly") -> None:
        if self.blocks != other.blocks:
            raise StructureError(
                f"block mismatch: {self.blocks} vs {other.blocks}"
            )

    def __add__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = MultiHomPoly.constant(self.blocks, other)
        if not isinstance(other, MultiHomPoly):
            return NotImplemented
        self._check_blocks(other)
        merged = dict(self.terms)
        for key, coeff in other.terms.items():
            merged[key] = merged.get(key, ZERO) + coeff
        return MultiHomPoly(self.blocks, merged)

    __radd__ = __add__

    def __neg__(self):
        return MultiHomPoly(
            self.blocks, {key: -coeff for key, coeff in self.terms.items()}
        )

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = MultiHomPoly.constant(self.blocks, other)
        if not isinstance(other, MultiHomPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            scalar = GaussianRational.coerce(other)
            return MultiHomPoly(
                self.blocks,
                {key: scalar * coeff for key, coeff in self.terms.items()},
            )
        if not isinstance(other, MultiHomPoly):
            return NotImplemented
        self._check_blocks(other)
        product: Dict[Exponents, GaussianRational] = {}
        for key_a, coeff_a in self.terms.items():
            for key_b, coeff_b in other.terms.items():
                key = tuple(a + b for a, b in zip(key_a, key_b))
                value = product.get(key, ZERO) + coeff_a * coeff_b
                if value.is_zero():
                    product.pop(key, None)
                else:
                    product[key] = value
        return MultiHomPoly(self.blocks, product)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise StructureError("exponent must be a nonnegative integer")
        result = MultiHomPoly.constant(self.blocks, 1)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, MultiHomPoly):
            return NotImplemented
        return self.blocks == other.blocks and self.terms == other.terms

    __hash__ = None  # mutable-ish container semantics, not for dict keys

    # ------------------------------------------------------- transformations

    def partial(self, name: str) -> "MultiHomPoly":
        """Formal partial derivative in one variable."""
        idx = self.var_index(name)
        out: Dict[Exponents, GaussianRational] = {}
        for key, coeff in self.terms.items():
            e = key[idx]
            if e == 0:
                continue
            new_key = key[:idx] + (e - 1,) + key[idx + 1 :]
            value = out.get(new_key, ZERO) + coeff * e
            if value.is_zero():
                out.pop(new_key, None)
            else:
                out[new_key] = value
        return MultiHomPoly(self.blocks, out)

    def substitute(
        self, images: Mapping[str, Union["MultiHomPoly", RatLike]]
    ) -> "MultiHomPoly":
        """Simultaneously replace variables by polynomials on the same blocks.

        Unmapped variables are left alone.  Images given as scalars are read
        as constant polynomials.
        """
        table: Dict[int, MultiHomPoly] = {}
        for name, image in images.items():
            idx = self.var_index(name)
            if not isinstance(image, MultiHomPoly):
                image = MultiHomPoly.constant(self.blocks, image)
            else:
                self._check_blocks(image)
            table[idx] = image
        result = MultiHomPoly.zero(self.blocks)
        for key, coeff in self.terms.items():
            term = MultiHomPoly.constant(self.blocks, coeff)
            for idx, e in enumerate(key):
                if e == 0:
                    continue
                if idx in table:
                    term = term * table[idx] ** e
                else:
                    mono = MultiHomPoly(
                        self.blocks,
                        {
                            tuple(e if k == idx else 0 for k in range(len(key))): 1,
                        },
                    )
                    term = term * mono
            result = result + term
        return result

    def evaluate(self, assignment: Mapping[str, RatLike]) -> GaussianRational:
        """Evaluate at a full assignment of exact values; partial ones error."""
        values = []
        for v in self._vars:
            if v not in assignment:
                raise StructureError(f"missing assignment for variable {v!r}")
            values.append(GaussianRational.coerce(assignment[v]))
        total = ZERO
        for key, coeff in self.terms.items():
            term = coeff
            for idx, e in enumerate(key):
                if e:
                    term = term * values[idx] ** e
            total = total + term
        return total

    def homogenize(self, name: str) -> "MultiHomPoly":
        """Homogenize within the block containing ``name``.

        The variable must not occur in any term yet; each term is padded with
        the power of ``name`` bringing its block degree up to the maximum.
        """
        idx = self.var_index(name)
        offset = 0
        block_range = None
        for block in self.blocks:
            width = len(block)
            if offset <= idx < offset + width:
                block_range = (offset, offset + width)
                break
            offset += width
        assert block_range is not None
        lo, hi = block_range
        if any(key[idx] != 0 for key in self.terms):
            raise StructureError(f"homogenization variable {name!r} already occurs")
        if not self.terms:
            return self
        target = max(sum(key[lo:hi]) for key in self.terms)
        out: Dict[Exponents, GaussianRational] = {}
        for key, coeff in self.terms.items():
            pad = target - sum(key[lo:hi])
            new_key = key[:idx] + (key[idx] + pad,) + key[idx + 1 :]
            out[new_key] = coeff
        return MultiHomPoly(self.blocks, out)

    def scalar_multiple_of(self, other: "MultiHomPoly") -> Optional[GaussianRational]:
        """Return the nonzero scalar c with self == c * other, or None.

        The zero polynomial is a scalar multiple of nothing (and nothing of
        it) except itself, for which 1 is returned; this keeps the projective
        reading of "the same equation up to scale" strict.
        """
        self._check_blocks(other)
        if self.is_zero() and other.is_zero():
            return ONE
        if self.is_zero() or other.is_zero():
            return None
        if set(self.terms) != set(other.terms):
            return None
        ratio = None
        for key, coeff in self.terms.items():
            current = coeff / other.terms[key]
            if ratio is None:
                ratio = current
            elif ratio != current:
                return None
        return ratio

    # ----------------------------------------------------------------- text

    def to_text(self) -> str:
        """Deterministic rendering: terms in descending exponent order."""
        if not self.terms:
            return "(0)"
        parts = []
        for key in sorted(self.terms, reverse=True):
            coeff = self.terms[key]
            factors = [
                v if e == 1 else f"{v}^{e}"
                for v, e in zip(self._vars, key)
                if e > 0
            ]
            if factors:
                parts.append(f"({coeff})*" + "*".join(factors))
            else:
                parts.append(f"({coeff})")
        return " + ".join(parts)

    __str__ = to_text

    def __repr__(self) -> str:
        return f"MultiHomPoly({self.to_text()})"


def parse_poly(blocks: Iterable[Iterable[str]], text: str) -> MultiHomPoly:
    """Parse the rendering produced by ``to_text``."""
    blocks = _normalize_blocks(blocks)
    flat = [v for block in blocks for v in block]
    index = {v: i for i, v in enumerate(flat)}
    text = text.strip()
    if text == "(0)":
        return MultiHomPoly.zero(blocks)
    terms: Dict[Exponents, GaussianRational] = {}
    for raw_term in text.split(" + "):
        raw_term = raw_term.strip()
        if not raw_term.startswith("("):
            raise StructureError(f"malformed term {raw_term!r}")
        close = raw_term.index(")")
        coeff = GaussianRational.parse(raw_term[1:close])
        rest = raw_term[close + 1 :]
        exponents = [0] * len(flat)
        if rest:
            if not rest.startswith("*"):
                raise StructureError(f"malformed term {raw_term!r}")
            for factor in rest[1:].split("*"):
                if "^" in factor:
                    name, power_text = factor.split("^", 1)
                    power = int(power_text)
                else:
                    name, power = factor, 1
                if name not in index:
                    raise StructureError(f"unknown variable {name!r}")
                exponents[index[name]] += power
        key = tuple(exponents)
        terms[key] = terms.get(key, ZERO) + coeff
    return MultiHomPoly(blocks, terms)


def jacobian(
    polys: Sequence[MultiHomPoly], variables: Sequence[str]
) -> Tuple[Tuple[MultiHomPoly, ...], ...]:
    """Matrix of partial derivatives, one row per polynomial."""
    if not polys:
        raise StructureError("jacobian of an empty system")
    blocks = polys[0].blocks
    for p in polys:
        if p.blocks != blocks:
            raise StructureError("jacobian polynomials must share blocks")
    return tuple(tuple(p.partial(v) for v in variables) for p in polys)
