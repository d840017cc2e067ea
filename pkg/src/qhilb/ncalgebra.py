"""Cubic AS-regular algebras on two generators, in low degree.

Both algebras of interest are written with the same pair of relations

    f1 = a y²x + b yxy + a xy² + c x³
    f2 = a x²y + b xyx + a yx² + c y³

where the "H_c" algebra is the special case ``(a, b, c) = (1, -2, 0)``.
Words are strings over ``"xy"``; degree three words are reduced with the
rewriting rules ``y²x -> ...`` and ``x²y -> ...`` read off ``f1`` and ``f2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .fields import QQ, Field
from .linalg import Matrix


@dataclass(frozen=True)
class AlgebraSpec:
    kind: str  # "Hc" or "TypeA"
    a: Fraction = Fraction(1)
    b: Fraction = Fraction(-2)
    c: Fraction = Fraction(0)

    def __post_init__(self):
        if self.kind not in ("Hc", "TypeA"):
            raise ValueError(f"unknown algebra kind {self.kind!r}")
        for name in "abc":
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.a == 0:
            raise ValueError("a = 0 leaves no leading word to rewrite")

    @classmethod
    def hc(cls) -> "AlgebraSpec":
        return cls("Hc")

    @classmethod
    def type_a(cls, a, b, c) -> "AlgebraSpec":
        return cls("TypeA", a, b, c)

    @classmethod
    def parse(cls, text: str) -> "AlgebraSpec":
        """``"hc"`` or ``"typea:a,b,c"``."""
        t = text.strip().lower()
        if t == "hc":
            return cls.hc()
        if t.startswith("typea:"):
            parts = t[6:].split(",")
            if len(parts) != 3:
                raise ValueError(f"expected typea:a,b,c, got {text!r}")
            return cls.type_a(*(Fraction(p) for p in parts))
        raise ValueError(f"unknown algebra {text!r}; expected 'hc' or 'typea:a,b,c'")

    def tag(self) -> str:
        if self.kind == "Hc":
            return "hc"
        return f"typea:{self.a},{self.b},{self.c}"

    def relations(self) -> tuple[dict[str, Fraction], dict[str, Fraction]]:
        a, b, c = self.a, self.b, self.c
        f1 = {"yyx": a, "yxy": b, "xyy": a, "xxx": c}
        f2 = {"xxy": a, "xyx": b, "yxx": a, "yyy": c}
        return ({w: v for w, v in f1.items() if v}, {w: v for w, v in f2.items() if v})

    def rewriting_rules(self) -> dict[str, dict[str, Fraction]]:
        """Leading word of each relation mapped to its normal-form replacement."""
        rules = {}
        for lead, rel in zip(("yyx", "xxy"), self.relations()):
            rules[lead] = {w: -v / rel[lead] for w, v in rel.items() if w != lead}
        return rules


def words(degree: int) -> list[str]:
    return ["".join(w) for w in product("xy", repeat=degree)]


def basis(degree: int, spec: AlgebraSpec) -> list[str]:
    """Normal words of the given degree (at most three)."""
    if degree > 3:
        raise ValueError("normal forms are implemented through degree three")
    leads = spec.rewriting_rules()
    return [w for w in words(degree) if w not in leads]


def normal_form(word: str, spec: AlgebraSpec) -> dict[str, Fraction]:
    """Expansion of ``word`` in the normal-word basis of its degree."""
    if len(word) > 3 or set(word) - set("xy"):
        raise ValueError(f"only words in x, y of length <= 3 are supported, got {word!r}")
    rules = spec.rewriting_rules()
    if word in rules:
        return dict(rules[word])
    return {word: Fraction(1)}


def normal_form_vector(word: str, spec: AlgebraSpec, field: Field = QQ) -> list:
    nf = normal_form(word, spec)
    return [field(nf.get(w, 0)) for w in basis(len(word), spec)]


def e_equation(spec: AlgebraSpec, p, field: Field = QQ):
    """The bihomogeneous form cutting out the point scheme, at ``p = ((x0, y0), (x1, y1))``."""
    (x0, y0), (x1, y1) = ((field(u), field(v)) for u, v in p)
    F = field
    if spec.kind == "Hc":
        d = F.sub(F.mul(x0, y1), F.mul(x1, y0))
        return F.mul(d, d)
    a, b, c = F(spec.a), F(spec.b), F(spec.c)
    t1 = F.mul(F.sub(F.mul(c, c), F.mul(b, b)), F.mul(F.mul(x0, y0), F.mul(x1, y1)))
    t2 = F.mul(F.mul(a, F.mul(x0, x0)), F.sub(F.mul(c, F.mul(x1, x1)), F.mul(b, F.mul(y1, y1))))
    t3 = F.mul(F.mul(a, F.mul(y0, y0)), F.sub(F.mul(c, F.mul(y1, y1)), F.mul(b, F.mul(x1, x1))))
    return F.add(F.add(t1, t2), t3)


def relation_matrix(spec: AlgebraSpec, X: Matrix, Y: Matrix, Xp: Matrix, Yp: Matrix) -> Matrix:
    """Block matrix ``B`` with the relations reading ``(X'' Y'') B = 0``.

    Each cubic monomial ``u1 u2 u3`` of relation ``j`` contributes
    ``coeff * U2' U1`` to block ``(u3, j)``: quadratic words are substituted by
    ``x² -> X'X``, ``xy -> Y'X``, ``yx -> X'Y``, ``y² -> Y'Y`` (first letter
    acts first) and the last letter picks the arrow ``X''`` or ``Y''``.
    """
    F = X.field
    first = {"x": X, "y": Y}
    second = {"x": Xp, "y": Yp}
    m, n = Xp.nrows, X.ncols
    blocks = [[Matrix.zeros(F, m, n) for _ in range(2)] for _ in range(2)]
    for j, rel in enumerate(spec.relations()):
        for w, coeff in rel.items():
            row = "xy".index(w[2])
            term = (second[w[1]] @ first[w[0]]).scale(F(coeff))
            blocks[row][j] = blocks[row][j] + term
    return Matrix.block(blocks)


ma_substituted = relation_matrix


# representations attached to lines, conics and points


def _quotient_multiplication(generator: dict[str, Fraction], field: Field):
    """Left multiplication by ``x`` and ``y`` on ``A / A g`` in degrees 0..2.

    Each quotient ``(A/Ag)_m`` gets the basis of words that are not pivots of
    the reduced echelon form of ``(A g)_m``.  Returns the three quotient
    dimensions and ``maps[(m, letter)]``, the matrix of ``letter·`` from
    degree ``m`` to degree ``m + 1``.
    """
    deg = len(next(iter(generator)))
    # (A g)_m is spanned by u·g for words u of degree m - deg
    quotients = {}
    for m in range(3):
        ws = words(m)
        if m < deg:
            sub = Matrix.zeros(field, 0, len(ws))
        else:
            rows = []
            for u in words(m - deg):
                vec = {w: Fraction(0) for w in ws}
                for g, c in generator.items():
                    vec[u + g] += c
                rows.append([field(vec[w]) for w in ws])
            sub = Matrix(field, rows, len(ws))
        R, pivots = sub.rref()
        kept = [i for i in range(len(ws)) if i not in pivots]
        quotients[m] = (ws, R.submatrix(range(len(pivots)), range(len(ws))), pivots, kept)

    def reduce(m, vec):
        ws, R, pivots, kept = quotients[m]
        v = list(vec)
        for r, pc in enumerate(pivots):
            if not field.is_zero(v[pc]):
                f = v[pc]
                v = [field.sub(x, field.mul(f, y)) for x, y in zip(v, R.rows[r])]
        return [v[i] for i in kept]

    maps = {}
    for m in range(2):
        ws_m, _, _, kept_m = quotients[m]
        ws_next = quotients[m + 1][0]
        for letter in "xy":
            cols = []
            for i in kept_m:
                img = [field.zero] * len(ws_next)
                img[ws_next.index(letter + ws_m[i])] = field.one
                cols.append(reduce(m + 1, img))
            dim_next = len(quotients[m + 1][3])
            maps[(m, letter)] = Matrix(field, cols, dim_next).T if cols else Matrix.zeros(field, dim_next, 0)
    dims = [len(quotients[m][3]) for m in range(3)]
    return dims, maps


def _dual_representation(generator, field):
    from .quiver import QuiverRep

    dims, maps = _quotient_multiplication(generator, field)
    # vertex -3 carries degree 2, vertex -1 carries degree 0; arrows are transposes
    X3, Y3 = maps[(1, "x")].T, maps[(1, "y")].T
    X2, Y2 = maps[(0, "x")].T, maps[(0, "y")].T
    Z = Matrix.zeros(field, 0, dims[0])
    return QuiverRep(field, (dims[2], dims[1], dims[0], 0), (X3, Y3, X2, Y2, Z, Z))


def line_rep(u, spec: AlgebraSpec, field: Field = QQ):
    """Dual representation of ``A / A u`` for a nonzero linear form ``u = (u_x, u_y)``.

    Only degrees up to two enter, where the cubic relations impose nothing,
    so ``spec`` does not change the result.
    """
    ux, uy = (Fraction(v) for v in u)
    if ux == 0 and uy == 0:
        raise ValueError("the linear form must be nonzero")
    return _dual_representation({"x": ux, "y": uy}, field)


def conic_rep(w, spec: AlgebraSpec, field: Field = QQ):
    """Dual representation of ``A / A w`` for a nonzero quadratic form.

    ``w`` lists coefficients on ``x², xy, yx, y²``.
    """
    coeffs = [Fraction(v) for v in w]
    if len(coeffs) != 4 or not any(coeffs):
        raise ValueError("a conic is a nonzero vector of four coefficients on x², xy, yx, y²")
    return _dual_representation(dict(zip(("xx", "xy", "yx", "yy"), coeffs)), field)


def point_rep(orbit, field: Field = QQ):
    """Scalar representation with arrows ``X_i = alpha_i``, ``Y_i = beta_i``.

    ``orbit`` lists projective points ``(alpha_i, beta_i)`` for ``i = -3, -2, -1``;
    a fourth entry (the point at vertex ``0``) is accepted and ignored since
    no arrow leaves vertex ``0``.
    """
    from .quiver import QuiverRep

    pts = list(orbit)
    if len(pts) not in (3, 4):
        raise ValueError("an orbit segment has three or four points")
    mats = []
    for al, be in pts[:3]:
        if Fraction(al) == 0 and Fraction(be) == 0:
            raise ValueError("(0:0) is not a projective point")
        mats += [Matrix(field, [[al]]), Matrix(field, [[be]])]
    return QuiverRep(field, (1, 1, 1, 1), tuple(mats))
