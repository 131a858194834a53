"""Homology of the four-punctured torus and sphere, and monodromy words on them.

Torus basis is (a0, a1, a2, a3, b0): a_i is the meridian class between
punctures i and i+1 (a0 sits between punctures 4 and 1), b0 the plain
longitude. Sphere basis is (x1, x2, x3), loops around the first three
punctures, with x4 = -x1 - x2 - x3.

Words are written left to right and composed right to left as functions, so
the matrix of ``w1 w2 ... wn`` is ``M(w1) M(w2) ... M(wn)`` acting on column
vectors.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .errors import ParseError, ShapeError
from .exactla import MatrixQ

# Sign in the transvection x -> x + TWIST_SIGN * <x, c> c. Only +1 makes the
# ten-twist expansion of Push(tau_i) agree with T_{b_i} T_{b_{i-1}}^{-1} for
# b_i = a0 + b0 - a_i; see calibration_candidates for the reference-matrix check.
TWIST_SIGN = 1


@dataclass(frozen=True)
class SurfaceModel:
    name: str
    genus: int
    punctures: int
    basis_labels: tuple[str, ...]
    pairing: MatrixQ

    @property
    def h1_rank(self) -> int:
        return 2 * self.genus + self.punctures - 1

    def __post_init__(self):
        if self.punctures < 1:
            raise ValueError("closed fibers are not supported; need at least one puncture")
        if len(self.basis_labels) != self.h1_rank or self.pairing.shape != (self.h1_rank,) * 2:
            raise ShapeError("basis labels and pairing must match the first Betti number")
        if self.pairing.T != -self.pairing:
            raise ValueError("intersection pairing must be antisymmetric")


def _torus4_pairing() -> MatrixQ:
    rows = [[0] * 5 for _ in range(5)]
    for i in range(4):
        rows[i][4] = 1
        rows[4][i] = -1
    return MatrixQ(rows)


TORUS4 = SurfaceModel("torus4", 1, 4, ("a0", "a1", "a2", "a3", "b0"), _torus4_pairing())
SPHERE4 = SurfaceModel("sphere4", 0, 4, ("x1", "x2", "x3"), MatrixQ.zeros(3, 3))
SURFACES = {s.name: s for s in (TORUS4, SPHERE4)}


def get_surface(name: str) -> SurfaceModel:
    try:
        return SURFACES[name]
    except KeyError:
        raise ValueError(f"unknown surface {name!r}; expected one of {sorted(SURFACES)}") from None


@dataclass(frozen=True)
class CurveClass:
    """An integral homology class, given by coordinates in the surface basis."""

    coefficients: tuple[int, ...]

    def __add__(self, other: CurveClass) -> CurveClass:
        return CurveClass(tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def __sub__(self, other: CurveClass) -> CurveClass:
        return self + (-other)

    def __neg__(self) -> CurveClass:
        return CurveClass(tuple(-a for a in self.coefficients))


def basis_curve(label: str, s: SurfaceModel = TORUS4) -> CurveClass:
    idx = s.basis_labels.index(label)
    return CurveClass(tuple(int(k == idx) for k in range(s.h1_rank)))


def meridian(i: int) -> CurveClass:
    """a_i on the torus, with a4 identified with a0."""
    return basis_curve(f"a{i % 4}")


def longitude(i: int) -> CurveClass:
    """b_i = a0 + b0 - a_i, the longitude passing over punctures 1..i."""
    return meridian(0) + basis_curve("b0") - meridian(i)


def pair(x: Sequence, y: Sequence, s: SurfaceModel) -> int:
    """Algebraic intersection number <x, y>."""
    Px = s.pairing.apply(y)
    return sum(a * b for a, b in zip(x, Px))


def dehn_twist_matrix(c: CurveClass, s: SurfaceModel, sign: int = TWIST_SIGN) -> MatrixQ:
    """Homology action of the Dehn twist along c: x -> x + sign * <x, c> c."""
    if len(c.coefficients) != s.h1_rank:
        raise ShapeError(f"curve has {len(c.coefficients)} coordinates, surface has rank {s.h1_rank}")
    cvec = c.coefficients
    Pc = s.pairing.apply(cvec)
    n = s.h1_rank
    return MatrixQ([[int(i == j) + sign * cvec[i] * Pc[j] for j in range(n)] for i in range(n)])


def _require(s: SurfaceModel, name: str, i: int, hi: int) -> None:
    if s.name != name:
        raise ValueError(f"generator only exists on {name}, not {s.name}")
    if not 1 <= i <= hi:
        raise IndexError(f"generator index {i} outside 1..{hi}")


def push_rho_matrix(i: int, s: SurfaceModel = TORUS4, sign: int = TWIST_SIGN) -> MatrixQ:
    """Push(rho_i) = T_{a_{i-1}} T_{a_i}^{-1}."""
    _require(s, "torus4", i, 4)
    T = lambda c: dehn_twist_matrix(c, s, sign)  # noqa: E731
    return T(meridian(i - 1)) * T(meridian(i)).inverse()


def push_tau_matrix(i: int, s: SurfaceModel = TORUS4, sign: int = TWIST_SIGN) -> MatrixQ:
    """Push(tau_i) written with twists along basis curves only (ten factors)."""
    _require(s, "torus4", i, 4)
    T = lambda c: dehn_twist_matrix(c, s, sign)  # noqa: E731
    A_prev, A_i, A_0, B = T(meridian(i - 1)), T(meridian(i)), T(meridian(0)), T(basis_curve("b0"))
    inv = MatrixQ.inverse
    factors = [A_prev, B, inv(A_0), inv(B), inv(A_prev), A_i, B, A_0, inv(B), inv(A_i)]
    out = MatrixQ.identity(s.h1_rank)
    for f in factors:
        out = out * f
    return out


def push_tau_longitude_matrix(i: int, s: SurfaceModel = TORUS4, sign: int = TWIST_SIGN) -> MatrixQ:
    """Push(tau_i) = T_{b_i} T_{b_{i-1}}^{-1}, twisting along the combined longitude classes."""
    _require(s, "torus4", i, 4)
    return dehn_twist_matrix(longitude(i), s, sign) * dehn_twist_matrix(longitude(i - 1), s, sign).inverse()


def braid_sigma_matrix(i: int, s: SurfaceModel = SPHERE4) -> MatrixQ:
    """Half-twist exchanging punctures i and i+1, acting on (x1, x2, x3)."""
    _require(s, "sphere4", i, 3)
    loops = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, -1, -1)]
    swap = {i - 1: i, i: i - 1}
    return MatrixQ.from_columns([loops[swap.get(j, j)] for j in range(3)])


class Letter(NamedTuple):
    gen: str
    exponent: int = 1

    def inverse(self) -> Letter:
        return Letter(self.gen, -self.exponent)

    def __str__(self) -> str:
        return self.gen if self.exponent == 1 else f"{self.gen}^{self.exponent}"


@dataclass(frozen=True)
class MCGWord:
    surface: SurfaceModel
    letters: tuple[Letter, ...] = ()

    def __str__(self) -> str:
        return " ".join(map(str, self.letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: MCGWord) -> MCGWord:
        if other.surface != self.surface:
            raise ValueError("cannot concatenate words on different surfaces")
        return MCGWord(self.surface, self.letters + other.letters)

    def inverse(self) -> MCGWord:
        return MCGWord(self.surface, tuple(l.inverse() for l in reversed(self.letters)))


_GEN = re.compile(
    r"(?P<rt>[rt])(?P<i>\d)$|s(?P<s>\d)$|T(?P<curve>a[0-3]|b0)$|(?P<ac>[AC])(?P<j>\d)(?P<k>\d)$"
)
_TOKEN = re.compile(r"\S+")


def parse_word(text: str, s: SurfaceModel = TORUS4) -> MCGWord:
    """Parse a whitespace-separated word such as ``"t1^-1 C12 r2"``.

    >>> str(parse_word("r1 t2^-3"))
    'r1 t2^-3'
    """
    letters = []
    for m in _TOKEN.finditer(text):
        tok, pos = m.group(), m.start()
        gen, caret, exp = tok.partition("^")
        if caret:
            if not re.fullmatch(r"[+-]?\d+", exp) or int(exp) == 0:
                raise ParseError(f"malformed exponent in {tok!r}", pos + len(gen) + 1)
            e = int(exp)
        else:
            e = 1
        g = _GEN.match(gen)
        if not g:
            raise ParseError(f"unknown token {tok!r}", pos)
        if g["rt"] or g["curve"] or g["ac"]:
            if s.name != "torus4":
                raise ParseError(f"{gen!r} is a torus generator, surface is {s.name}", pos)
        if g["rt"]:
            _check_index(int(g["i"]), 4, pos)
        elif g["s"]:
            if s.name != "sphere4":
                raise ParseError(f"{gen!r} is a braid generator, surface is {s.name}", pos)
            _check_index(int(g["s"]), 3, pos)
        elif g["ac"]:
            i, j = int(g["j"]), int(g["k"])
            _check_index(i, 4, pos)
            _check_index(j, 4, pos)
            if not i < j:
                raise ParseError(f"{gen!r} needs i < j", pos)
        letters.append(Letter(gen, e))
    return MCGWord(s, tuple(letters))


def _check_index(i: int, hi: int, pos: int) -> None:
    if not 1 <= i <= hi:
        raise ParseError(f"index {i} outside 1..{hi}", pos)


def _relation(gen: str) -> list[Letter]:
    i, j = gen[1], gen[2]
    if gen[0] == "A":  # A_ij = rho_i tau_j^-1 rho_i^-1 tau_j
        return [Letter(f"r{i}"), Letter(f"t{j}", -1), Letter(f"r{i}", -1), Letter(f"t{j}")]
    # C_ij = tau_i rho_j^-1 tau_i^-1 rho_j
    return [Letter(f"t{i}"), Letter(f"r{j}", -1), Letter(f"t{i}", -1), Letter(f"r{j}")]


def expand_relations(w: MCGWord) -> MCGWord:
    """Replace each A_ij / C_ij letter by its four-letter expansion, without reducing."""
    out: list[Letter] = []
    for letter in w.letters:
        if letter.gen[0] not in "AC":
            out.append(letter)
            continue
        block = _relation(letter.gen)
        if letter.exponent < 0:
            block = [l.inverse() for l in reversed(block)]
        out.extend(block * abs(letter.exponent))
    return MCGWord(w.surface, tuple(out))


def free_reduce(w: MCGWord) -> MCGWord:
    """Merge adjacent powers of the same generator and drop trivial ones."""
    stack: list[Letter] = []
    for letter in w.letters:
        if stack and stack[-1].gen == letter.gen:
            e = stack.pop().exponent + letter.exponent
            if e:
                stack.append(Letter(letter.gen, e))
        else:
            stack.append(letter)
    return MCGWord(w.surface, tuple(stack))


def generator_matrix(gen: str, s: SurfaceModel, sign: int = TWIST_SIGN) -> MatrixQ:
    kind = gen[0]
    if kind == "r":
        return push_rho_matrix(int(gen[1]), s, sign)
    if kind == "t":
        return push_tau_matrix(int(gen[1]), s, sign)
    if kind == "s":
        return braid_sigma_matrix(int(gen[1]), s)
    if kind == "T":
        return dehn_twist_matrix(basis_curve(gen[1:], s), s, sign)
    out = MatrixQ.identity(s.h1_rank)
    for letter in _relation(gen):
        out = out * generator_matrix(letter.gen, s, sign) ** letter.exponent
    return out


@dataclass(frozen=True)
class HomologyAction:
    on_h1: MatrixQ
    on_h1_dual: MatrixQ


def evaluate_word(w: MCGWord, sign: int = TWIST_SIGN, reverse: bool = False) -> HomologyAction:
    """Homology action f_* of the word, plus f* = transpose(f_*) on H^1.

    ``reverse`` reads the letters in the opposite order; it exists only for
    convention calibration.
    """
    cache: dict[str, MatrixQ] = {}
    out = MatrixQ.identity(w.surface.h1_rank)
    letters = reversed(w.letters) if reverse else w.letters
    for letter in letters:
        if letter.gen not in cache:
            cache[letter.gen] = generator_matrix(letter.gen, w.surface, sign)
        out = out * cache[letter.gen] ** letter.exponent
    return HomologyAction(out, out.T)


def is_torelli(w: MCGWord) -> bool:
    return evaluate_word(w).on_h1.is_identity()


def calibration_candidates(
    words: Iterable[MCGWord], target_minus_identity: MatrixQ
) -> list[tuple[int, bool, str]]:
    """All (twist sign, reversed reading, dual form) making every word's f* - 1 equal the target.

    The dual form is ``"transpose"`` (f* = f_*^T) or ``"inverse_transpose"``.
    """
    words = list(words)
    hits = []
    for sign in (1, -1):
        for rev in (False, True):
            actions = [evaluate_word(w, sign, rev).on_h1 for w in words]
            for form in ("transpose", "inverse_transpose"):
                ok = True
                for f in actions:
                    dual = f.T if form == "transpose" else f.inverse().T
                    if dual - MatrixQ.identity(f.rows) != target_minus_identity:
                        ok = False
                        break
                if ok:
                    hits.append((sign, rev, form))
    return hits


# Monodromies of the three fibrations of the Borromean-rings-plus-axis complement.
SPHERICAL_MONODROMY = "s1^-1 s2 s1^-1 s2 s1^-1 s2"
TOROIDAL_MONODROMY_1 = "t3^-1 t2^-1 t1^-1 r1^-1 r2^-1 t1^-1 r2 t4^-1 r4^-1 t3^-1"
TOROIDAL_MONODROMY_2 = "r2^-1 t1 r2^-1 t1^-1 t4^-1 r3^-2 t2^-1 r4^-1 r1^-1"
