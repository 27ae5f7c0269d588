"""Pure-Python integer polynomial kernels.

A polynomial is a list of Python ints, lowest degree first, with no
trailing zeros; the zero polynomial is the empty list. The compiled module
``_ckernels`` exposes the same functions with the same semantics.
"""

from math import gcd


def strip(a):
    n = len(a)
    while n and not a[n - 1]:
        n -= 1
    return a[:n] if n != len(a) else a


def add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return strip(out)


def sub(a, b):
    out = list(a)
    if len(b) > len(out):
        out.extend([0] * (len(b) - len(out)))
    for i, c in enumerate(b):
        out[i] -= c
    return strip(out)


def lincomb(a, ca, b, cb):
    """Return ca*a + cb*b."""
    n = max(len(a), len(b))
    out = [0] * n
    if ca:
        for i, c in enumerate(a):
            out[i] = ca * c
    if cb:
        for i, c in enumerate(b):
            out[i] += cb * c
    return strip(out)


def scale(a, c):
    if not c:
        return []
    return [c * x for x in a]


def mul(a, b):
    if not a or not b:
        return []
    if len(a) < len(b):
        a, b = b, a
    out = [0] * (len(a) + len(b) - 1)
    for j, bj in enumerate(b):
        if bj:
            for i, ai in enumerate(a):
                out[i + j] += ai * bj
    return out


def diff(a):
    return [i * a[i] for i in range(1, len(a))]


def content(a):
    g = 0
    for c in a:
        g = gcd(g, c)
        if g == 1:
            break
    return g


def divexact(a, b):
    """Quotient of a by b in Z[x] if b divides a there, else None.

    For primitive b this decides divisibility over Q as well (Gauss).
    """
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    db = len(b) - 1
    da = len(a) - 1
    if da < db:
        return [] if not a else None
    lc = b[db]
    r = list(a)
    q = [0] * (da - db + 1)
    for k in range(da - db, -1, -1):
        t = r[k + db]
        if t:
            qk, rem = divmod(t, lc)
            if rem:
                return None
            q[k] = qk
            for i in range(db):
                r[k + i] -= qk * b[i]
    for i in range(db):
        if r[i]:
            return None
    return q


def pdivrem(a, b):
    """Pseudo-division: lc(b)**k * a = q*b + r with deg r < deg b.

    Returns (q, r, k).
    """
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    db = len(b) - 1
    da = len(a) - 1
    if da < db:
        return [], list(a), 0
    lc = b[db]
    r = list(a)
    q = [0] * (da - db + 1)
    k = 0
    for j in range(da - db, -1, -1):
        t = r[j + db]
        if not t:
            continue
        if t % lc:
            # scale everything so the leading term divides exactly
            r = [lc * c for c in r]
            q = [lc * c for c in q]
            k += 1
            t = r[j + db]
        qj = t // lc
        q[j] = qj
        for i in range(db + 1):
            r[j + i] -= qj * b[i]
    return strip(q), strip(r[:db]), k


def rem_mod(a, b, p):
    """Remainder of a modulo b over GF(p); lc(b) must be a unit mod p."""
    db = len(b) - 1
    inv = pow(b[db] % p, -1, p)
    r = [c % p for c in a]
    bb = [c % p for c in b]
    for j in range(len(r) - 1 - db, -1, -1):
        t = r[j + db]
        if t:
            t = t * inv % p
            for i in range(db + 1):
                r[j + i] = (r[j + i] - t * bb[i]) % p
    return strip(r[:db])
