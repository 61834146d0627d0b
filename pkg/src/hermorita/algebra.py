"""Division algebras over the rationals with their standard involution.

Three families are supported, each with a fixed involution:

* the field ``Q`` itself (identity),
* quadratic fields ``Q(sqrt d)`` (Galois conjugation ``sqrt d -> -sqrt d``),
* quaternion algebras ``(a, b)_Q`` with ``i^2 = a``, ``j^2 = b``, ``k = ij = -ji``
  (quaternion conjugation).

Whether ``(a, b)_Q`` is actually a division algebra is not decided up front.
Inverting a nonzero element of reduced norm zero raises :class:`NotDivision`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import DescriptorMismatch, DivisionByZero, NotDivision, ParseError
from .scalars import ZERO, ExactRational, format_rational, is_rational_like, parse_rational, rat

RATIONAL = "rational"
QUADRATIC = "quadratic"
QUATERNION = "quaternion"

_DIMENSION = {RATIONAL: 1, QUADRATIC: 2, QUATERNION: 4}
_BASIS_NAMES = {RATIONAL: ("",), QUADRATIC: ("", "√d"), QUATERNION: ("", "i", "j", "k")}

_MAX_D = 2 ** 63


def is_squarefree(d: int) -> bool:
    m = abs(d)
    if m == 0:
        return False
    p = 2
    while p * p <= m:
        if m % (p * p) == 0:
            return False
        if m % p == 0:
            m //= p
        p += 1 if p == 2 else 2
    return True


@dataclass(frozen=True)
class AlgebraDescriptor:
    """Which division algebra ``D`` is in play.

    Use :func:`rational_field`, :func:`quadratic_field` or
    :func:`quaternion_algebra` rather than the constructor.
    """

    kind: str
    d: Optional[int] = None
    a: Optional[ExactRational] = None
    b: Optional[ExactRational] = None

    def __post_init__(self):
        if self.kind not in _DIMENSION:
            raise ValueError(f"unknown algebra kind {self.kind!r}")
        if self.kind == QUADRATIC:
            d = self.d
            if not isinstance(d, int) or isinstance(d, bool):
                raise TypeError("quadratic parameter d must be an integer")
            if abs(d) >= _MAX_D:
                raise ValueError("quadratic parameter d out of range")
            if d in (0, 1) or not is_squarefree(d):
                raise ValueError(f"d = {d} is not a squarefree non-square")
        if self.kind == QUATERNION:
            if self.a is None or self.b is None or self.a == 0 or self.b == 0:
                raise ValueError("quaternion parameters a and b must be nonzero")

    @property
    def dimension(self) -> int:
        return _DIMENSION[self.kind]

    @property
    def is_commutative(self) -> bool:
        return self.kind != QUATERNION

    def __str__(self):
        if self.kind == RATIONAL:
            return "Q"
        if self.kind == QUADRATIC:
            return f"Q(sqrt({self.d}))"
        return f"({format_rational(self.a)},{format_rational(self.b)})_Q"

    # element factories

    def element(self, coords: Iterable) -> "AlgebraElement":
        return AlgebraElement(self, tuple(rat(c) for c in coords))

    def zero(self) -> "AlgebraElement":
        return AlgebraElement(self, (ZERO,) * self.dimension)

    def one(self) -> "AlgebraElement":
        return self.scalar(1)

    def scalar(self, q) -> "AlgebraElement":
        return AlgebraElement(self, (rat(q),) + (ZERO,) * (self.dimension - 1))

    def basis(self) -> list["AlgebraElement"]:
        n = self.dimension
        return [self.element([int(i == j) for j in range(n)]) for i in range(n)]

    def gen(self, name: str) -> "AlgebraElement":
        """``"sqrt"`` for quadratic fields; ``"i"``, ``"j"``, ``"k"`` for quaternions."""
        names = {QUADRATIC: {"sqrt": 1}, QUATERNION: {"i": 1, "j": 2, "k": 3}}.get(self.kind, {})
        if name not in names:
            raise ValueError(f"{self} has no generator {name!r}")
        coords = [0] * self.dimension
        coords[names[name]] = 1
        return self.element(coords)

    def to_json(self) -> dict:
        if self.kind == RATIONAL:
            return {"kind": RATIONAL}
        if self.kind == QUADRATIC:
            return {"kind": QUADRATIC, "d": self.d}
        return {"kind": QUATERNION, "a": format_rational(self.a), "b": format_rational(self.b)}

    @classmethod
    def from_json(cls, doc) -> "AlgebraDescriptor":
        try:
            kind = doc["kind"]
            if kind == RATIONAL:
                return rational_field()
            if kind == QUADRATIC:
                return quadratic_field(int(doc["d"]))
            if kind == QUATERNION:
                return quaternion_algebra(parse_rational(str(doc["a"])), parse_rational(str(doc["b"])))
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad algebra descriptor {doc!r}: {exc}") from exc
        raise ParseError(f"unknown algebra kind {kind!r}")


def rational_field() -> AlgebraDescriptor:
    return AlgebraDescriptor(RATIONAL)


def quadratic_field(d: int) -> AlgebraDescriptor:
    return AlgebraDescriptor(QUADRATIC, d=d)


def quaternion_algebra(a, b) -> AlgebraDescriptor:
    return AlgebraDescriptor(QUATERNION, a=rat(a), b=rat(b))


class AlgebraElement:
    """An element of ``D`` in coordinates over the standard basis.

    Supports ``+``, ``-``, ``*`` (with other elements or rationals) and
    ``==``. Instances are immutable.
    """

    __slots__ = ("descriptor", "coords")

    def __init__(self, descriptor: AlgebraDescriptor, coords: tuple):
        if len(coords) != descriptor.dimension:
            raise ValueError(
                f"{descriptor} needs {descriptor.dimension} coordinates, got {len(coords)}"
            )
        object.__setattr__(self, "descriptor", descriptor)
        object.__setattr__(self, "coords", coords)

    def __setattr__(self, name, value):
        raise AttributeError("AlgebraElement is immutable")

    def _coerce(self, other) -> "AlgebraElement":
        if isinstance(other, AlgebraElement):
            if other.descriptor != self.descriptor:
                raise DescriptorMismatch(f"{self.descriptor} vs {other.descriptor}")
            return other
        if is_rational_like(other):
            return self.descriptor.scalar(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return AlgebraElement(self.descriptor, tuple(x + y for x, y in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement(self.descriptor, tuple(-x for x in self.coords))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return AlgebraElement(self.descriptor, tuple(x - y for x, y in zip(self.coords, other.coords)))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return AlgebraElement(self.descriptor, _multiply(self.descriptor, self.coords, other.coords))

    def __rmul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self

    def __eq__(self, other):
        if isinstance(other, AlgebraElement):
            return self.descriptor == other.descriptor and self.coords == other.coords
        if is_rational_like(other):
            return self.coords == self.descriptor.scalar(other).coords
        return NotImplemented

    def __hash__(self):
        return hash((self.descriptor, self.coords))

    def __bool__(self):
        return any(self.coords)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def conj(self) -> "AlgebraElement":
        return elem_conj(self)

    def norm(self) -> ExactRational:
        return reduced_norm(self)

    def inverse(self) -> "AlgebraElement":
        return elem_inv(self)

    def is_central(self) -> bool:
        return elem_is_central(self)

    def to_json(self) -> list:
        return [format_rational(c) for c in self.coords]

    def __repr__(self):
        return f"AlgebraElement({self.descriptor}, {self})"

    def __str__(self):
        names = _BASIS_NAMES[self.descriptor.kind]
        terms = []
        for c, name in zip(self.coords, names):
            if c == 0:
                continue
            text = format_rational(c)
            if name:
                text = name if c == 1 else ("-" + name if c == -1 else f"{text}*{name}")
            terms.append(text)
        if not terms:
            return "0"
        return " + ".join(terms).replace("+ -", "- ")


def _multiply(desc: AlgebraDescriptor, x: tuple, y: tuple) -> tuple:
    if desc.kind == RATIONAL:
        return (x[0] * y[0],)
    if desc.kind == QUADRATIC:
        d = desc.d
        return (x[0] * y[0] + d * x[1] * y[1], x[0] * y[1] + x[1] * y[0])
    a, b = desc.a, desc.b
    x0, x1, x2, x3 = x
    y0, y1, y2, y3 = y
    # structure constants: i^2=a, j^2=b, k^2=-ab, ik=aj, ki=-aj, jk=-bi, kj=bi
    return (
        x0 * y0 + a * x1 * y1 + b * x2 * y2 - a * b * x3 * y3,
        x0 * y1 + x1 * y0 - b * x2 * y3 + b * x3 * y2,
        x0 * y2 + x2 * y0 + a * x1 * y3 - a * x3 * y1,
        x0 * y3 + x3 * y0 + x1 * y2 - x2 * y1,
    )


def _check(x: AlgebraElement, y: AlgebraElement):
    if not isinstance(x, AlgebraElement) or not isinstance(y, AlgebraElement):
        raise TypeError("expected AlgebraElement operands")
    if x.descriptor != y.descriptor:
        raise DescriptorMismatch(f"{x.descriptor} vs {y.descriptor}")


def elem_add(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    _check(x, y)
    return x + y


def elem_neg(x: AlgebraElement) -> AlgebraElement:
    return -x


def elem_mul(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    _check(x, y)
    return x * y


def elem_from_rational(q, descriptor: AlgebraDescriptor) -> AlgebraElement:
    return descriptor.scalar(q)


def elem_is_central(x: AlgebraElement) -> bool:
    if x.descriptor.is_commutative:
        return True
    return x.coords[1] == x.coords[2] == x.coords[3] == 0


def elem_conj(x: AlgebraElement) -> AlgebraElement:
    c = x.coords
    return AlgebraElement(x.descriptor, (c[0],) + tuple(-v for v in c[1:]))


def reduced_norm(x: AlgebraElement) -> ExactRational:
    """``x * conj(x)`` as a rational (the field norm for quadratic fields)."""
    desc = x.descriptor
    c = x.coords
    if desc.kind == RATIONAL:
        return c[0] * c[0]
    if desc.kind == QUADRATIC:
        return c[0] * c[0] - desc.d * c[1] * c[1]
    a, b = desc.a, desc.b
    return c[0] * c[0] - a * c[1] * c[1] - b * c[2] * c[2] + a * b * c[3] * c[3]


def elem_inv(x: AlgebraElement) -> AlgebraElement:
    if x.is_zero():
        raise DivisionByZero(f"inverse of zero in {x.descriptor}")
    n = reduced_norm(x)
    if n == 0:
        raise NotDivision(f"{x} has reduced norm 0 in {x.descriptor}")
    inv = 1 / n
    return AlgebraElement(x.descriptor, tuple(v * inv for v in elem_conj(x).coords))


def parse_element(doc, descriptor: AlgebraDescriptor) -> AlgebraElement:
    if isinstance(doc, (int, str)) and not isinstance(doc, bool):
        doc = [doc] + ["0"] * (descriptor.dimension - 1)
    if not isinstance(doc, list) or len(doc) != descriptor.dimension:
        raise ParseError(f"element {doc!r} does not have {descriptor.dimension} coordinates")
    return AlgebraElement(descriptor, tuple(parse_rational(str(c)) for c in doc))
