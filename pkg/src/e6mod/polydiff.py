"""Sparse polynomials over Q, first-order differential operators with a scalar
(multiplication) part, the transpose involution on the linear fragment, and the
exterior algebra action by theta_i d/dtheta_j."""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Dict, Iterable, Iterator, Mapping, Tuple

Monomial = Tuple[int, ...]

VARSETS = {"x": 16, "y": 10, "z": 16}


def _check_varset(name: str) -> int:
    try:
        return VARSETS[name]
    except KeyError:
        raise ValueError(f"unknown variable family {name!r}") from None


class VarsetMismatch(ValueError):
    pass


class Poly:
    """Immutable sparse polynomial: {exponent tuple: Fraction}."""

    __slots__ = ("varset", "n", "terms")

    def __init__(self, terms: Mapping[Monomial, object] | None = None, varset: str = "x"):
        self.varset = varset
        self.n = _check_varset(varset)
        clean: Dict[Monomial, Fraction] = {}
        if terms:
            for m, c in terms.items():
                if len(m) != self.n:
                    raise ValueError("exponent arity does not match the variable family")
                c = c if isinstance(c, Fraction) else Fraction(c)
                if c:
                    clean[m] = c
        self.terms = clean

    @classmethod
    def _raw(cls, terms: Dict[Monomial, Fraction], varset: str, n: int) -> "Poly":
        p = cls.__new__(cls)
        p.varset, p.n, p.terms = varset, n, terms
        return p

    # constructors
    @classmethod
    def const(cls, c, varset: str = "x") -> "Poly":
        n = _check_varset(varset)
        return cls({(0,) * n: c}, varset)

    @classmethod
    def var(cls, i: int, varset: str = "x", power: int = 1) -> "Poly":
        n = _check_varset(varset)
        if not 1 <= i <= n:
            raise ValueError("variable index out of range")
        e = [0] * n
        e[i - 1] = power
        return cls({tuple(e): 1}, varset)

    @classmethod
    def monomial(cls, exps: Monomial, coeff=1, varset: str = "x") -> "Poly":
        return cls({tuple(exps): coeff}, varset)

    @classmethod
    def zero(cls, varset: str = "x") -> "Poly":
        return cls(None, varset)

    # helpers
    def _same(self, other: "Poly") -> None:
        if self.varset != other.varset:
            raise VarsetMismatch(f"{self.varset} vs {other.varset}")

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            self._same(other)
            return other
        return Poly.const(other, self.varset)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.varset == other.varset and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == Poly.const(other, self.varset)
        return NotImplemented

    def __hash__(self):
        return hash((self.varset, frozenset(self.terms.items())))

    def __add__(self, other) -> "Poly":
        other = self._coerce(other)
        if not other.terms:
            return self
        t = dict(self.terms)
        for m, c in other.terms.items():
            v = t.get(m)
            if v is None:
                t[m] = c
            else:
                v += c
                if v:
                    t[m] = v
                else:
                    del t[m]
        return Poly._raw(t, self.varset, self.n)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._raw({m: -c for m, c in self.terms.items()}, self.varset, self.n)

    def __sub__(self, other) -> "Poly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Poly":
        return self._coerce(other) - self

    def scale(self, s) -> "Poly":
        s = Fraction(s)
        if not s:
            return Poly.zero(self.varset)
        return Poly._raw({m: c * s for m, c in self.terms.items()}, self.varset, self.n)

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            return self.scale(other)
        self._same(other)
        t: Dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                v = t.get(m, 0) + c1 * c2
                if v:
                    t[m] = v
                else:
                    t.pop(m, None)
        return Poly._raw(t, self.varset, self.n)

    def __rmul__(self, other) -> "Poly":
        return self.scale(other)

    def __pow__(self, k: int) -> "Poly":
        out = Poly.const(1, self.varset)
        for _ in range(k):
            out = out * self
        return out

    def diff(self, i: int) -> "Poly":
        """Partial derivative in variable i (1-based)."""
        k = i - 1
        t: Dict[Monomial, Fraction] = {}
        for m, c in self.terms.items():
            e = m[k]
            if e:
                mm = m[:k] + (e - 1,) + m[k + 1:]
                t[mm] = c * e
        return Poly._raw(t, self.varset, self.n)

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def coeff(self, m: Monomial) -> Fraction:
        return self.terms.get(tuple(m), Fraction(0))

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.n, Fraction(0))

    def evaluate(self, point) -> float:
        total = 0.0
        for m, c in self.terms.items():
            v = float(c)
            for x, e in zip(point, m):
                if e:
                    v *= x ** e
            total += v
        return total

    def evaluate_exact(self, point) -> Fraction:
        total = Fraction(0)
        for m, c in self.terms.items():
            v = c
            for x, e in zip(point, m):
                if e:
                    v *= Fraction(x) ** e
            total += v
        return total

    def sorted_terms(self):
        """Graded lexicographic order, highest first."""
        return sorted(self.terms.items(), key=lambda mc: (-sum(mc[0]), tuple(-e for e in mc[0])))

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            mono = "*".join(
                f"{self.varset}{i + 1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(m) if e
            )
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            parts.append((sign, body))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s

    __repr__ = render


def monomials(n: int, degree: int) -> Iterator[Monomial]:
    """All exponent tuples of the given total degree, in a fixed order."""
    for combo in combinations_with_replacement(range(n), degree):
        e = [0] * n
        for i in combo:
            e[i] += 1
        yield tuple(e)


class DiffOp:
    """sum_i f_i d/dx_i + g with polynomial f_i, g."""

    __slots__ = ("varset", "n", "vec", "scalar")

    def __init__(self, vec: Mapping[int, Poly] | None = None, scalar: Poly | None = None, varset: str = "x"):
        self.varset = varset
        self.n = _check_varset(varset)
        v = {}
        if vec:
            for i, f in vec.items():
                if not 1 <= i <= self.n:
                    raise ValueError("derivative index out of range")
                if not isinstance(f, Poly):
                    f = Poly.const(f, varset)
                if f.varset != varset:
                    raise VarsetMismatch("coefficient in a different variable family")
                if f:
                    v[i] = f
        self.vec = v
        if scalar is None:
            scalar = Poly.zero(varset)
        elif not isinstance(scalar, Poly):
            scalar = Poly.const(scalar, varset)
        if scalar.varset != varset:
            raise VarsetMismatch("scalar part in a different variable family")
        self.scalar = scalar

    @classmethod
    def partial(cls, i: int, varset: str = "x") -> "DiffOp":
        return cls({i: Poly.const(1, varset)}, None, varset)

    @classmethod
    def mult(cls, f: Poly) -> "DiffOp":
        return cls(None, f, f.varset)

    @classmethod
    def euler(cls, varset: str = "x") -> "DiffOp":
        n = _check_varset(varset)
        return cls({i: Poly.var(i, varset) for i in range(1, n + 1)}, None, varset)

    @classmethod
    def zero(cls, varset: str = "x") -> "DiffOp":
        return cls(None, None, varset)

    def is_zero(self) -> bool:
        return not self.vec and not self.scalar

    def __eq__(self, other) -> bool:
        if not isinstance(other, DiffOp):
            return NotImplemented
        return self.varset == other.varset and self.vec == other.vec and self.scalar == other.scalar

    def __hash__(self):
        return hash((self.varset, frozenset(self.vec.items()), self.scalar))

    def _same(self, other: "DiffOp") -> None:
        if self.varset != other.varset:
            raise VarsetMismatch(f"{self.varset} vs {other.varset}")

    def __add__(self, other: "DiffOp") -> "DiffOp":
        self._same(other)
        vec = dict(self.vec)
        for i, f in other.vec.items():
            vec[i] = vec[i] + f if i in vec else f
        return DiffOp(vec, self.scalar + other.scalar, self.varset)

    def __neg__(self) -> "DiffOp":
        return self.scale(-1)

    def __sub__(self, other: "DiffOp") -> "DiffOp":
        return self + (-other)

    def scale(self, s) -> "DiffOp":
        return DiffOp({i: f.scale(s) for i, f in self.vec.items()}, self.scalar.scale(s), self.varset)

    def __rmul__(self, s) -> "DiffOp":
        if isinstance(s, Poly):
            return self.left_mul(s)
        return self.scale(s)

    def left_mul(self, f: Poly) -> "DiffOp":
        """The operator g -> f * op(g)."""
        return DiffOp({i: f * g for i, g in self.vec.items()}, f * self.scalar, self.varset)

    def compose_mult(self, f: Poly) -> "DiffOp":
        """The operator g -> op(f * g) = f op(g) + (vector part of op)(f) g."""
        return DiffOp({i: f * g for i, g in self.vec.items()}, f * self.scalar + self.derive(f), self.varset)

    def derive(self, f: Poly) -> Poly:
        """Vector-field part applied to f (no scalar part)."""
        if self.varset != f.varset:
            raise VarsetMismatch(f"{self.varset} vs {f.varset}")
        out = Poly.zero(self.varset)
        for i, g in self.vec.items():
            d = f.diff(i)
            if d:
                out = out + g * d
        return out

    def coefficient(self, i: int) -> Poly:
        return self.vec.get(i, Poly.zero(self.varset))

    def max_degree(self) -> int:
        return max([f.degree() for f in self.vec.values()] + [self.scalar.degree()])

    def render(self) -> str:
        parts = []
        for i in sorted(self.vec):
            parts.append(f"({self.vec[i].render()})*d{self.varset}{i}")
        if self.scalar:
            parts.append(f"({self.scalar.render()})")
        return " + ".join(parts) if parts else "0"

    __repr__ = render


def apply(op: DiffOp, f: Poly) -> Poly:
    if op.varset != f.varset:
        raise VarsetMismatch(f"{op.varset} vs {f.varset}")
    out = op.derive(f)
    if op.scalar:
        out = out + op.scalar * f
    return out


def commutator(a: DiffOp, b: DiffOp) -> DiffOp:
    """[a, b] = ab - ba, again first order plus a scalar part."""
    a._same(b)
    vec: Dict[int, Poly] = {}
    for i, f in b.vec.items():
        d = a.derive(f)
        if d:
            vec[i] = d
    for i, f in a.vec.items():
        d = b.derive(f)
        if d:
            vec[i] = vec[i] - d if i in vec else -d
    scalar = a.derive(b.scalar) - b.derive(a.scalar)
    return DiffOp(vec, scalar, a.varset)


class OutOfFragment(ValueError):
    pass


def tau(op: DiffOp) -> DiffOp:
    """x^b d^g -> x^g d^b on the fragment with |b|, |g| <= 1."""
    vs, n = op.varset, op.n
    out = DiffOp.zero(vs)
    zero = (0,) * n
    for i, f in op.vec.items():
        for m, c in f.terms.items():
            d = sum(m)
            if d == 0:
                out = out + DiffOp(None, Poly.var(i, vs).scale(c), vs)
            elif d == 1:
                j = m.index(1) + 1
                out = out + DiffOp({j: Poly.var(i, vs).scale(c)}, None, vs)
            else:
                raise OutOfFragment("coefficient of degree > 1")
    for m, c in op.scalar.terms.items():
        d = sum(m)
        if d == 0:
            out = out + DiffOp(None, Poly.const(c, vs), vs)
        elif d == 1:
            j = m.index(1) + 1
            out = out + DiffOp({j: Poly.const(c, vs)}, None, vs)
        else:
            raise OutOfFragment("scalar part of degree > 1")
    return out


# ------------------------------------------------------------------ exterior algebra

class ExteriorElt:
    """Element of the exterior algebra on theta_1..theta_10: {sorted index tuple: Fraction}."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Tuple[int, ...], object] | None = None):
        clean: Dict[Tuple[int, ...], Fraction] = {}
        for idx, c in (terms or {}).items():
            sign, key = normalize_wedge(idx)
            if sign:
                clean[key] = clean.get(key, 0) + sign * Fraction(c)
        self.terms = {k: v for k, v in clean.items() if v}

    @classmethod
    def basis(cls, *idx: int) -> "ExteriorElt":
        return cls({tuple(idx): 1})

    def __add__(self, other: "ExteriorElt") -> "ExteriorElt":
        t = dict(self.terms)
        for k, v in other.terms.items():
            t[k] = t.get(k, 0) + v
        return ExteriorElt(t)

    def scale(self, s) -> "ExteriorElt":
        return ExteriorElt({k: v * s for k, v in self.terms.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, ExteriorElt) and self.terms == other.terms

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{v}*th{''.join('_' + str(i) for i in k)}" for k, v in sorted(self.terms.items()))

    def wedge_left(self, i: int) -> "ExteriorElt":
        return ExteriorElt({(i,) + k: v for k, v in self.terms.items()})

    def contract(self, j: int) -> "ExteriorElt":
        """Left derivation d/dtheta_j."""
        out: Dict[Tuple[int, ...], Fraction] = {}
        for k, v in self.terms.items():
            if j in k:
                pos = k.index(j)
                key = k[:pos] + k[pos + 1:]
                out[key] = out.get(key, 0) + (-v if pos % 2 else v)
        return ExteriorElt(out)


def normalize_wedge(idx: Iterable[int]) -> Tuple[int, Tuple[int, ...]]:
    """Sort a product of thetas, returning (sign, sorted tuple); sign 0 if repeated."""
    seq = list(idx)
    if len(set(seq)) != len(seq):
        return 0, ()
    sign = 1
    for a in range(len(seq)):
        for b in range(a + 1, len(seq)):
            if seq[a] > seq[b]:
                sign = -sign
    return sign, tuple(sorted(seq))


def exterior_act(i: int, j: int, w: ExteriorElt) -> ExteriorElt:
    """E_{i,j} acts as theta_i d/dtheta_j."""
    if not (1 <= i <= 10 and 1 <= j <= 10):
        raise ValueError("exterior indices lie in 1..10")
    return w.contract(j).wedge_left(i)
