"""Independent rank oracle: textbook Gaussian elimination over Q or Q(alpha)
written directly on Fraction pairs, sharing no code with the package's
elimination engine."""
from fractions import Fraction


def naive_rank(rows, c1=Fraction(0), c0=Fraction(0)):
    """rows: list of lists of (a, b) Fraction pairs with alpha^2 = c1 a + c0."""
    rows = [list(r) for r in rows]
    if not rows:
        return 0
    ncols = len(rows[0])

    def is_zero(p):
        return p[0] == 0 and p[1] == 0

    def mul(p, q):
        a, b = p
        c, d = q
        return (a * c + c0 * b * d, a * d + b * c + c1 * b * d)

    def sub(p, q):
        return (p[0] - q[0], p[1] - q[1])

    def inv(p):
        a, b = p
        n = a * a + c1 * a * b - c0 * b * b
        return ((a + c1 * b) / n, -b / n)

    rank = 0
    row = 0
    for col in range(ncols):
        piv = None
        for r in range(row, len(rows)):
            if not is_zero(rows[r][col]):
                piv = r
                break
        if piv is None:
            continue
        rows[row], rows[piv] = rows[piv], rows[row]
        pinv = inv(rows[row][col])
        rows[row] = [mul(pinv, x) for x in rows[row]]
        for r in range(len(rows)):
            if r != row and not is_zero(rows[r][col]):
                f = rows[r][col]
                rows[r] = [sub(x, mul(f, y)) for x, y in zip(rows[r], rows[row])]
        row += 1
        rank += 1
    return rank
