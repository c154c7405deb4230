"""NIST P-256 ECDSA with deterministic (RFC 6979 style) nonces.

Signatures are raw 64-byte ``r || s``; public keys are 65-byte SEC1
uncompressed points. Nonce derivation is deterministic so a given
(key, message) pair always produces the same signature.
"""

from __future__ import annotations

import hashlib
import hmac

# FIPS 186-4 D.1.2.3 / RFC 5903 curve parameters
P = 0xFFFFFFFF00000001000000000000000000000000FFFFFFFFFFFFFFFFFFFFFFFF
A = P - 3
B = 0x5AC635D8AA3A93E7B3EBBD55769886BC651D06B0CC53B0F63BCE3C3E27D2604B
N = 0xFFFFFFFF00000000FFFFFFFFFFFFFFFFBCE6FAADA7179E84F3B9CAC2FC632551
GX = 0x6B17D1F2E12C4247F8BCE6E563A440F277037D812DEB33A0F4A13945D898C296
GY = 0x4FE342E2FE1A7F9B8EE7EB4A7C0F9E162BCE33576B315ECECBB6406837BF51F5

Point = tuple[int, int] | None  # None is the point at infinity


def is_on_curve(x: int, y: int) -> bool:
    if not (0 <= x < P and 0 <= y < P):
        return False
    return (y * y - (x * x * x + A * x + B)) % P == 0


def point_add(p1: Point, p2: Point) -> Point:
    if p1 is None:
        return p2
    if p2 is None:
        return p1
    x1, y1 = p1
    x2, y2 = p2
    if x1 == x2:
        if (y1 + y2) % P == 0:
            return None
        lam = (3 * x1 * x1 + A) * pow(2 * y1, -1, P) % P
    else:
        lam = (y2 - y1) * pow(x2 - x1, -1, P) % P
    x3 = (lam * lam - x1 - x2) % P
    y3 = (lam * (x1 - x3) - y1) % P
    return (x3, y3)


def scalar_mult(k: int, point: Point) -> Point:
    result: Point = None
    addend = point
    while k:
        if k & 1:
            result = point_add(result, addend)
        addend = point_add(addend, addend)
        k >>= 1
    return result


def derive_public(d: int) -> tuple[int, int]:
    if not 1 <= d <= N - 1:
        raise ValueError("private scalar out of range")
    q = scalar_mult(d, (GX, GY))
    assert q is not None
    return q


def encode_public(x: int, y: int) -> bytes:
    return b"\x04" + x.to_bytes(32, "big") + y.to_bytes(32, "big")


def decode_public(data: bytes) -> tuple[int, int]:
    """Parse a SEC1 uncompressed point, rejecting anything off the curve."""
    if len(data) != 65 or data[0] != 0x04:
        raise ValueError("public key must be 65 bytes, uncompressed")
    x = int.from_bytes(data[1:33], "big")
    y = int.from_bytes(data[33:65], "big")
    if not is_on_curve(x, y):
        raise ValueError("point is not on the curve")
    return (x, y)


def scalar_from_stream(read: "callable") -> int:
    """Draw a uniform scalar in [1, n-1] by rejection sampling 32-byte reads."""
    while True:
        d = int.from_bytes(read(32), "big")
        if 1 <= d <= N - 1:
            return d


def _int2octets(x: int) -> bytes:
    return x.to_bytes(32, "big")


def _bits2int(data: bytes) -> int:
    v = int.from_bytes(data, "big")
    if len(data) * 8 > 256:
        v >>= len(data) * 8 - 256
    return v


def _nonce_rfc6979(d: int, digest: bytes) -> "generator":
    """Yield candidate nonces per RFC 6979 section 3.2."""
    prv_and_h = _int2octets(d) + _int2octets(_bits2int(digest) % N)
    v = b"\x01" * 32
    k = b"\x00" * 32
    k = hmac.new(k, v + b"\x00" + prv_and_h, hashlib.sha256).digest()
    v = hmac.new(k, v, hashlib.sha256).digest()
    k = hmac.new(k, v + b"\x01" + prv_and_h, hashlib.sha256).digest()
    v = hmac.new(k, v, hashlib.sha256).digest()
    while True:
        v = hmac.new(k, v, hashlib.sha256).digest()
        candidate = _bits2int(v)
        if 1 <= candidate <= N - 1:
            yield candidate
        k = hmac.new(k, v + b"\x00", hashlib.sha256).digest()
        v = hmac.new(k, v, hashlib.sha256).digest()


def sign_digest(d: int, digest: bytes) -> bytes:
    """ECDSA signature (raw r || s) over a message digest."""
    if not 1 <= d <= N - 1:
        raise ValueError("private scalar out of range")
    e = _bits2int(digest) % N
    for k in _nonce_rfc6979(d, digest):
        point = scalar_mult(k, (GX, GY))
        assert point is not None
        r = point[0] % N
        if r == 0:
            continue
        s = pow(k, -1, N) * (e + r * d) % N
        if s == 0:
            continue
        return r.to_bytes(32, "big") + s.to_bytes(32, "big")
    raise AssertionError("unreachable")


def verify_digest(public: tuple[int, int], digest: bytes, signature: bytes) -> bool:
    if len(signature) != 64:
        return False
    r = int.from_bytes(signature[:32], "big")
    s = int.from_bytes(signature[32:], "big")
    if not (1 <= r <= N - 1 and 1 <= s <= N - 1):
        return False
    if not is_on_curve(*public):
        return False
    e = _bits2int(digest) % N
    s_inv = pow(s, -1, N)
    u1 = e * s_inv % N
    u2 = r * s_inv % N
    point = point_add(scalar_mult(u1, (GX, GY)), scalar_mult(u2, public))
    if point is None:
        return False
    return point[0] % N == r
