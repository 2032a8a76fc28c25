"""Second-order forward jets of array-valued fields.

A jet holds the value of a field at a point together with its first and
(optionally) second partial derivatives with respect to the n coordinates.
Derivative axes always trail the value axes:

    value     shape S
    gradient  shape S + (n,)
    hessian   shape S + (n, n)

Arithmetic, elementwise functions and einsum-style contractions propagate
all three parts exactly by the chain and product rules.
"""
from typing import Iterable, Optional, Sequence, Tuple, Union

import numpy as np

ArrayLike = Union[float, np.ndarray]


class Jet:
    """Truncated Taylor jet of order 1 (no hessian) or 2."""

    __slots__ = ('value', 'gradient', 'hessian')
    # Let numpy operands defer to the reflected Jet operators.
    __array_ufunc__ = None

    def __init__(self, value: ArrayLike, gradient: ArrayLike,
                 hessian: Optional[ArrayLike] = None):
        self.value = np.asarray(value, dtype=float)
        self.gradient = np.asarray(gradient, dtype=float)
        self.hessian = None if hessian is None else np.asarray(hessian, dtype=float)

    @classmethod
    def variable(cls, point: Sequence[float], index: int, order: int = 2) -> "Jet":
        """Seed jet of the coordinate function x_index."""
        n = len(point)
        gradient = np.zeros(n)
        gradient[index] = 1.0
        hessian = np.zeros((n, n)) if order == 2 else None
        return cls(float(point[index]), gradient, hessian)

    @classmethod
    def constant(cls, value: ArrayLike, dim: int, order: int = 2) -> "Jet":
        value = np.asarray(value, dtype=float)
        hessian = np.zeros(value.shape + (dim, dim)) if order == 2 else None
        return cls(value, np.zeros(value.shape + (dim,)), hessian)

    @property
    def order(self) -> int:
        return 1 if self.hessian is None else 2

    @property
    def shape(self) -> Tuple[int, ...]:
        return self.value.shape

    @property
    def dim(self) -> int:
        return self.gradient.shape[-1]

    def truncated(self, order: int) -> "Jet":
        if order >= self.order:
            return self
        return Jet(self.value, self.gradient)

    def derivative(self) -> Union["Jet", np.ndarray]:
        """Jet of the gradient field, with the derivative index appended last."""
        if self.hessian is None:
            return self.gradient
        return Jet(self.gradient, self.hessian)

    def __getitem__(self, index) -> "Jet":
        if not isinstance(index, tuple):
            index = (index,)
        if any(i is Ellipsis or i is None for i in index):
            raise IndexError("Jet indexing supports integers and slices only")
        hessian = None if self.hessian is None else self.hessian[index]
        return Jet(self.value[index], self.gradient[index], hessian)

    def __repr__(self) -> str:
        return f"Jet(order={self.order}, shape={self.shape}, dim={self.dim})"

    # elementwise arithmetic

    def _broadcast_parts(self, shape: Tuple[int, ...]) -> "Jet":
        if shape == self.shape:
            return self
        n = self.dim
        hessian = None
        if self.hessian is not None:
            hessian = np.broadcast_to(self.hessian, shape + (n, n))
        return Jet(np.broadcast_to(self.value, shape),
                   np.broadcast_to(self.gradient, shape + (n,)), hessian)

    def __add__(self, other) -> "Jet":
        if isinstance(other, Jet):
            order = min(self.order, other.order)
            a, b = self.truncated(order), other.truncated(order)
            hessian = None if order == 1 else a.hessian + b.hessian
            return Jet(a.value + b.value, a.gradient + b.gradient, hessian)
        other = np.asarray(other, dtype=float)
        value = self.value + other
        parts = self._broadcast_parts(value.shape)
        return Jet(value, parts.gradient, parts.hessian)

    __radd__ = __add__

    def __neg__(self) -> "Jet":
        hessian = None if self.hessian is None else -self.hessian
        return Jet(-self.value, -self.gradient, hessian)

    def __sub__(self, other) -> "Jet":
        return self + (-other)

    def __rsub__(self, other) -> "Jet":
        return (-self) + other

    def __mul__(self, other) -> "Jet":
        if isinstance(other, Jet):
            order = min(self.order, other.order)
            a, b = self.truncated(order), other.truncated(order)
            av, bv = a.value[..., None], b.value[..., None]
            gradient = av * b.gradient + a.gradient * bv
            hessian = None
            if order == 2:
                cross = a.gradient[..., :, None] * b.gradient[..., None, :]
                hessian = (av[..., None] * b.hessian + bv[..., None] * a.hessian
                           + (cross + np.swapaxes(cross, -1, -2)))
            return Jet(a.value * b.value, gradient, hessian)
        other = np.asarray(other, dtype=float)
        hessian = None if self.hessian is None else self.hessian * other[..., None, None]
        return Jet(self.value * other, self.gradient * other[..., None], hessian)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Jet":
        if isinstance(other, Jet):
            return self * other.reciprocal()
        return self * (1.0 / np.asarray(other, dtype=float))

    def __rtruediv__(self, other) -> "Jet":
        return self.reciprocal() * np.asarray(other, dtype=float)

    # elementwise functions

    def apply(self, f0: np.ndarray, f1: np.ndarray, f2: np.ndarray) -> "Jet":
        """Compose with a scalar function given its value and first two derivatives."""
        f0, f1, f2 = np.asarray(f0), np.asarray(f1), np.asarray(f2)
        gradient = f1[..., None] * self.gradient
        hessian = None
        if self.hessian is not None:
            outer = self.gradient[..., :, None] * self.gradient[..., None, :]
            hessian = f1[..., None, None] * self.hessian + f2[..., None, None] * outer
        return Jet(f0, gradient, hessian)

    def reciprocal(self) -> "Jet":
        v = self.value
        inv = 1.0 / v
        return self.apply(inv, -inv * inv, 2.0 * inv * inv * inv)

    def sqrt(self) -> "Jet":
        s = np.sqrt(self.value)
        return self.apply(s, 0.5 / s, -0.25 / (s * self.value))

    def exp(self) -> "Jet":
        e = np.exp(self.value)
        return self.apply(e, e, e)

    def log(self) -> "Jet":
        inv = 1.0 / self.value
        return self.apply(np.log(self.value), inv, -inv * inv)

    def sin(self) -> "Jet":
        s, c = np.sin(self.value), np.cos(self.value)
        return self.apply(s, c, -s)

    def cos(self) -> "Jet":
        s, c = np.sin(self.value), np.cos(self.value)
        return self.apply(c, -s, -c)

    def sinh(self) -> "Jet":
        s, c = np.sinh(self.value), np.cosh(self.value)
        return self.apply(s, c, s)

    def cosh(self) -> "Jet":
        s, c = np.sinh(self.value), np.cosh(self.value)
        return self.apply(c, s, c)

    def tanh(self) -> "Jet":
        t = np.tanh(self.value)
        d = 1.0 - t * t
        return self.apply(t, d, -2.0 * t * d)

    def is_finite(self) -> bool:
        parts = [self.value, self.gradient] + ([] if self.hessian is None else [self.hessian])
        return all(np.all(np.isfinite(p)) for p in parts)

    def max_abs(self) -> float:
        """Largest magnitude over value and derivative parts."""
        parts = [self.value, self.gradient] + ([] if self.hessian is None else [self.hessian])
        return max(float(np.max(np.abs(p))) if p.size else 0.0 for p in parts)


Jet2 = Jet  # a scalar second-order jet, as returned by eval_jet2

_DERIVATIVE_LETTERS = 'YZ'


def _split(subscripts: str) -> Tuple[str, str, str]:
    inputs, output = subscripts.replace(' ', '').split('->')
    left, right = inputs.split(',')
    if set(_DERIVATIVE_LETTERS) & set(inputs + output):
        raise ValueError(f"Subscripts may not use reserved letters {_DERIVATIVE_LETTERS}")
    return left, right, output


def contract(subscripts: str, a: Union[Jet, np.ndarray], b: Union[Jet, np.ndarray]) -> Jet:
    """Bilinear einsum of two jets (or a jet and a constant array)."""
    left, right, out = _split(subscripts)
    y, z = _DERIVATIVE_LETTERS

    if not isinstance(a, Jet) and not isinstance(b, Jet):
        raise TypeError("contract needs at least one Jet operand")

    if not isinstance(b, Jet):
        b = np.asarray(b, dtype=float)
        hessian = None
        if a.hessian is not None:
            hessian = np.einsum(f'{left}{y}{z},{right}->{out}{y}{z}', a.hessian, b)
        return Jet(np.einsum(f'{left},{right}->{out}', a.value, b),
                   np.einsum(f'{left}{y},{right}->{out}{y}', a.gradient, b), hessian)

    if not isinstance(a, Jet):
        a = np.asarray(a, dtype=float)
        hessian = None
        if b.hessian is not None:
            hessian = np.einsum(f'{left},{right}{y}{z}->{out}{y}{z}', a, b.hessian)
        return Jet(np.einsum(f'{left},{right}->{out}', a, b.value),
                   np.einsum(f'{left},{right}{y}->{out}{y}', a, b.gradient), hessian)

    order = min(a.order, b.order)
    a, b = a.truncated(order), b.truncated(order)
    value = np.einsum(f'{left},{right}->{out}', a.value, b.value)
    gradient = (np.einsum(f'{left}{y},{right}->{out}{y}', a.gradient, b.value)
                + np.einsum(f'{left},{right}{y}->{out}{y}', a.value, b.gradient))
    hessian = None
    if order == 2:
        cross = np.einsum(f'{left}{y},{right}{z}->{out}{y}{z}', a.gradient, b.gradient)
        hessian = (np.einsum(f'{left}{y}{z},{right}->{out}{y}{z}', a.hessian, b.value)
                   + np.einsum(f'{left},{right}{y}{z}->{out}{y}{z}', a.value, b.hessian)
                   + (cross + np.swapaxes(cross, -1, -2)))
    return Jet(value, gradient, hessian)


def stack(jets: Iterable[Jet], axis: int = 0) -> Jet:
    """Stack jets of equal value shape along a new value axis."""
    jets = list(jets)
    order = min(j.order for j in jets)
    jets = [j.truncated(order) for j in jets]
    ndim = jets[0].value.ndim
    if axis < 0:
        axis += ndim + 1
    if not 0 <= axis <= ndim:
        raise ValueError(f"axis {axis} out of range for value rank {ndim}")
    hessian = None
    if order == 2:
        hessian = np.stack([j.hessian for j in jets], axis=axis)
    return Jet(np.stack([j.value for j in jets], axis=axis),
               np.stack([j.gradient for j in jets], axis=axis), hessian)


def directional(gradient: np.ndarray, frame: np.ndarray) -> np.ndarray:
    """Derivatives along frame vectors: result[..., mu] = frame[alpha, mu] d_alpha f."""
    return np.einsum('...a,am->...m', gradient, frame)
