"""Exact scalars over Q, Q(i) and the rational quaternions."""

from __future__ import annotations

from fractions import Fraction

FIELDS = ("R", "C", "H")
FIELD_DIM = {"R": 1, "C": 2, "H": 4}

_ZERO = Fraction(0)
_ONE = Fraction(1)


class TagMismatchError(TypeError):
    pass


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floating point values are not accepted; pass ints, Fractions or strings")
    return Fraction(x)


class Scalar:
    """Element of R, C or H with rational components ``a + b i + c j + d k``.

    Components beyond the field dimension are always zero.  Instances are
    immutable and hashable.
    """

    __slots__ = ("tag", "comps")

    def __init__(self, tag: str, *comps):
        if tag not in FIELD_DIM:
            raise ValueError(f"unknown field tag {tag!r}")
        dim = FIELD_DIM[tag]
        if len(comps) == 1 and isinstance(comps[0], (tuple, list)):
            comps = tuple(comps[0])
        if len(comps) > dim:
            if any(_frac(c) != 0 for c in comps[dim:]):
                raise ValueError(f"too many nonzero components for field {tag}")
            comps = comps[:dim]
        vals = [_frac(c) for c in comps]
        vals += [_ZERO] * (4 - len(vals))
        object.__setattr__(self, "tag", tag)
        object.__setattr__(self, "comps", tuple(vals))

    @classmethod
    def _raw(cls, tag, comps):
        obj = object.__new__(cls)
        object.__setattr__(obj, "tag", tag)
        object.__setattr__(obj, "comps", comps)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    @classmethod
    def zero(cls, tag):
        return cls._raw(tag, (_ZERO, _ZERO, _ZERO, _ZERO))

    @classmethod
    def one(cls, tag):
        return cls._raw(tag, (_ONE, _ZERO, _ZERO, _ZERO))

    @classmethod
    def unit(cls, tag, index):
        """The basis unit 1, i, j or k (index 0..3)."""
        if index >= FIELD_DIM[tag]:
            raise ValueError(f"unit {index} does not exist in field {tag}")
        vals = [_ZERO] * 4
        vals[index] = _ONE
        return cls._raw(tag, tuple(vals))

    @property
    def dim(self) -> int:
        return FIELD_DIM[self.tag]

    def components(self):
        """The meaningful components (1, 2 or 4 of them)."""
        return self.comps[: FIELD_DIM[self.tag]]

    def _check(self, other):
        if not isinstance(other, Scalar):
            return NotImplemented
        if other.tag != self.tag:
            raise TagMismatchError(f"cannot combine {self.tag} with {other.tag}")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return Scalar._raw(self.tag, tuple(x + y for x, y in zip(self.comps, other.comps)))

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return Scalar._raw(self.tag, tuple(x - y for x, y in zip(self.comps, other.comps)))

    def __neg__(self):
        return Scalar._raw(self.tag, tuple(-x for x in self.comps))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._check(other)
        if other is NotImplemented:
            return other
        a1, b1, c1, d1 = self.comps
        a2, b2, c2, d2 = other.comps
        if self.tag == "R":
            return Scalar._raw("R", (a1 * a2, _ZERO, _ZERO, _ZERO))
        if self.tag == "C":
            return Scalar._raw("C", (a1 * a2 - b1 * b2, a1 * b2 + b1 * a2, _ZERO, _ZERO))
        return Scalar._raw(
            "H",
            (
                a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
                a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
                a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
                a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
            ),
        )

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def scale(self, r) -> "Scalar":
        r = _frac(r)
        return Scalar._raw(self.tag, tuple(r * x for x in self.comps))

    def conj(self) -> "Scalar":
        a, b, c, d = self.comps
        return Scalar._raw(self.tag, (a, -b, -c, -d))

    def norm2(self) -> Fraction:
        return sum((x * x for x in self.comps), _ZERO)

    def real(self) -> Fraction:
        return self.comps[0]

    def inverse(self) -> "Scalar":
        n = self.norm2()
        if n == 0:
            raise ZeroDivisionError("inverse of zero scalar")
        return self.conj().scale(1 / n)

    def __truediv__(self, other):
        """Right division ``self * other^-1``."""
        if isinstance(other, (int, Fraction)):
            return self.scale(1 / _frac(other))
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def is_zero(self) -> bool:
        return not any(self.comps)

    def __bool__(self):
        return any(self.comps)

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.tag == other.tag and self.comps == other.comps
        if isinstance(other, (int, Fraction)):
            return self.comps == (_frac(other), _ZERO, _ZERO, _ZERO)
        return NotImplemented

    def __hash__(self):
        return hash((self.tag, self.comps))

    def __repr__(self):
        return f"Scalar({self.tag!r}, {', '.join(str(c) for c in self.components())})"

    def __str__(self):
        parts = []
        for c, unit in zip(self.components(), ("", "i", "j", "k")):
            if c:
                parts.append(f"{c}{unit}")
        return " + ".join(parts) if parts else "0"

    def to_json(self):
        return [str(c) for c in self.components()]


def scalar_mul(x: Scalar, y: Scalar) -> Scalar:
    """Product ``x * y``; the left operand comes first."""
    if x.tag != y.tag:
        raise TagMismatchError(f"cannot multiply {x.tag} by {y.tag}")
    return x * y


def as_scalar(tag: str, value) -> Scalar:
    """Coerce ints, Fractions, component sequences or strings into a Scalar."""
    if isinstance(value, Scalar):
        if value.tag != tag:
            raise TagMismatchError(f"expected tag {tag}, got {value.tag}")
        return value
    if isinstance(value, (list, tuple)):
        return Scalar(tag, *value)
    return Scalar(tag, value)


def vector(tag: str, values) -> tuple:
    return tuple(as_scalar(tag, v) for v in values)
