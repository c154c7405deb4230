# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: SHA-256, HMAC-SHA256 and AES-128-CBC.

Same contract as the pure module; used by the accelerator-labeled backend
and selected at import when the extension built.
"""

from libc.stdint cimport uint8_t, uint32_t, uint64_t
from libc.string cimport memcpy, memset

COMPILED = True

cdef uint32_t[64] SHA_K
SHA_K[:] = [
    0x428A2F98, 0x71374491, 0xB5C0FBCF, 0xE9B5DBA5, 0x3956C25B, 0x59F111F1,
    0x923F82A4, 0xAB1C5ED5, 0xD807AA98, 0x12835B01, 0x243185BE, 0x550C7DC3,
    0x72BE5D74, 0x80DEB1FE, 0x9BDC06A7, 0xC19BF174, 0xE49B69C1, 0xEFBE4786,
    0x0FC19DC6, 0x240CA1CC, 0x2DE92C6F, 0x4A7484AA, 0x5CB0A9DC, 0x76F988DA,
    0x983E5152, 0xA831C66D, 0xB00327C8, 0xBF597FC7, 0xC6E00BF3, 0xD5A79147,
    0x06CA6351, 0x14292967, 0x27B70A85, 0x2E1B2138, 0x4D2C6DFC, 0x53380D13,
    0x650A7354, 0x766A0ABB, 0x81C2C92E, 0x92722C85, 0xA2BFE8A1, 0xA81A664B,
    0xC24B8B70, 0xC76C51A3, 0xD192E819, 0xD6990624, 0xF40E3585, 0x106AA070,
    0x19A4C116, 0x1E376C08, 0x2748774C, 0x34B0BCB5, 0x391C0CB3, 0x4ED8AA4A,
    0x5B9CCA4F, 0x682E6FF3, 0x748F82EE, 0x78A5636F, 0x84C87814, 0x8CC70208,
    0x90BEFFFA, 0xA4506CEB, 0xBEF9A3F7, 0xC67178F2,
]


cdef inline uint32_t rotr(uint32_t x, int n) nogil:
    return (x >> n) | (x << (32 - n))


cdef void sha_compress(uint32_t *st, const uint8_t *block) nogil:
    cdef uint32_t w[64]
    cdef uint32_t a, b, c, d, e, f, g, h, s0, s1, t1, t2
    cdef int i
    for i in range(16):
        w[i] = (<uint32_t>block[4 * i] << 24) | (<uint32_t>block[4 * i + 1] << 16) | \
               (<uint32_t>block[4 * i + 2] << 8) | <uint32_t>block[4 * i + 3]
    for i in range(16, 64):
        s0 = rotr(w[i - 15], 7) ^ rotr(w[i - 15], 18) ^ (w[i - 15] >> 3)
        s1 = rotr(w[i - 2], 17) ^ rotr(w[i - 2], 19) ^ (w[i - 2] >> 10)
        w[i] = w[i - 16] + s0 + w[i - 7] + s1
    a = st[0]; b = st[1]; c = st[2]; d = st[3]
    e = st[4]; f = st[5]; g = st[6]; h = st[7]
    for i in range(64):
        s1 = rotr(e, 6) ^ rotr(e, 11) ^ rotr(e, 25)
        t1 = h + s1 + ((e & f) ^ (~e & g)) + SHA_K[i] + w[i]
        s0 = rotr(a, 2) ^ rotr(a, 13) ^ rotr(a, 22)
        t2 = s0 + ((a & b) ^ (a & c) ^ (b & c))
        h = g; g = f; f = e; e = d + t1
        d = c; c = b; b = a; a = t1 + t2
    st[0] += a; st[1] += b; st[2] += c; st[3] += d
    st[4] += e; st[5] += f; st[6] += g; st[7] += h


def sha256(data):
    """SHA-256 digest of ``data``."""
    cdef bytes buf = bytes(data)
    cdef uint64_t n = len(buf)
    cdef uint32_t st[8]
    st[0] = 0x6A09E667; st[1] = 0xBB67AE85; st[2] = 0x3C6EF372; st[3] = 0xA54FF53A
    st[4] = 0x510E527F; st[5] = 0x9B05688C; st[6] = 0x1F83D9AB; st[7] = 0x5BE0CD19
    cdef const uint8_t *p = buf
    cdef uint64_t off = 0
    while n - off >= 64:
        sha_compress(st, p + off)
        off += 64
    cdef uint8_t tail[128]
    cdef uint64_t rest = n - off
    memset(tail, 0, 128)
    if rest > 0:
        memcpy(tail, p + off, rest)
    tail[rest] = 0x80
    cdef uint64_t bits = n * 8
    cdef int tlen = 64 if rest < 56 else 128
    cdef int i
    for i in range(8):
        tail[tlen - 1 - i] = <uint8_t>(bits >> (8 * i))
    sha_compress(st, tail)
    if tlen == 128:
        sha_compress(st, tail + 64)
    cdef uint8_t out[32]
    for i in range(8):
        out[4 * i] = <uint8_t>(st[i] >> 24)
        out[4 * i + 1] = <uint8_t>(st[i] >> 16)
        out[4 * i + 2] = <uint8_t>(st[i] >> 8)
        out[4 * i + 3] = <uint8_t>st[i]
    return bytes(out[:32])


def hmac_sha256(key, message):
    """HMAC-SHA256 tag; keys longer than the block size are hashed first."""
    cdef bytes k = bytes(key)
    if len(k) > 64:
        k = sha256(k)
    k = k + b"\x00" * (64 - len(k))
    cdef bytes ipad = bytes([b ^ 0x36 for b in k])
    cdef bytes opad = bytes([b ^ 0x5C for b in k])
    return sha256(opad + sha256(ipad + bytes(message)))


cdef uint8_t[256] SBOX
cdef uint8_t[256] INV_SBOX
cdef uint8_t[256] XT
cdef bint TABLES_READY = False


cdef void init_tables():
    # generate the S-box from GF(2^8) inverses instead of a literal table
    global TABLES_READY
    cdef int p = 1, q = 1
    cdef int xformed
    SBOX[0] = 0x63
    while True:
        # p iterates over GF(2^8)* via multiplication by 3
        p = p ^ ((p << 1) & 0xFF) ^ (0x1B if p & 0x80 else 0)
        # q is the inverse chain via division by 3
        q ^= q << 1
        q ^= q << 2
        q ^= q << 4
        q &= 0xFF
        if q & 0x80:
            q ^= 0x09
        xformed = q ^ ((q << 1) | (q >> 7)) ^ ((q << 2) | (q >> 6)) ^ \
            ((q << 3) | (q >> 5)) ^ ((q << 4) | (q >> 4))
        SBOX[p] = <uint8_t>((xformed ^ 0x63) & 0xFF)
        if p == 1:
            break
    cdef int i
    for i in range(256):
        INV_SBOX[SBOX[i]] = <uint8_t>i
        XT[i] = <uint8_t>(((i << 1) ^ 0x1B if i & 0x80 else i << 1) & 0xFF)
    TABLES_READY = True


cdef void expand_key(const uint8_t *key, uint8_t *rk) nogil:
    cdef uint8_t rcon = 1
    cdef int i
    memcpy(rk, key, 16)
    for i in range(16, 176, 4):
        if i % 16 == 0:
            rk[i] = rk[i - 16] ^ SBOX[rk[i - 3]] ^ rcon
            rk[i + 1] = rk[i - 15] ^ SBOX[rk[i - 2]]
            rk[i + 2] = rk[i - 14] ^ SBOX[rk[i - 1]]
            rk[i + 3] = rk[i - 13] ^ SBOX[rk[i - 4]]
            rcon = XT[rcon]
        else:
            rk[i] = rk[i - 16] ^ rk[i - 4]
            rk[i + 1] = rk[i - 15] ^ rk[i - 3]
            rk[i + 2] = rk[i - 14] ^ rk[i - 2]
            rk[i + 3] = rk[i - 13] ^ rk[i - 1]


cdef void encrypt_block(const uint8_t *rk, const uint8_t *inp, uint8_t *outp) nogil:
    cdef uint8_t s[16]
    cdef uint8_t t[16]
    cdef int i, r, c
    cdef uint8_t x, a0, a1, a2, a3
    for i in range(16):
        s[i] = inp[i] ^ rk[i]
    for r in range(1, 11):
        for i in range(16):
            t[i] = SBOX[s[(i + 4 * (i & 3)) & 15]]
        if r < 10:
            for c in range(0, 16, 4):
                a0 = t[c]; a1 = t[c + 1]; a2 = t[c + 2]; a3 = t[c + 3]
                x = a0 ^ a1 ^ a2 ^ a3
                s[c] = a0 ^ x ^ XT[a0 ^ a1]
                s[c + 1] = a1 ^ x ^ XT[a1 ^ a2]
                s[c + 2] = a2 ^ x ^ XT[a2 ^ a3]
                s[c + 3] = a3 ^ x ^ XT[a3 ^ a0]
        else:
            for i in range(16):
                s[i] = t[i]
        for i in range(16):
            s[i] ^= rk[16 * r + i]
    memcpy(outp, s, 16)


cdef void decrypt_block(const uint8_t *rk, const uint8_t *inp, uint8_t *outp) nogil:
    cdef uint8_t s[16]
    cdef uint8_t t[16]
    cdef int i, r, c
    cdef uint8_t x, u, v, a0, a1, a2, a3
    for i in range(16):
        s[i] = inp[i] ^ rk[160 + i]
    for r in range(9, -1, -1):
        for i in range(16):
            t[(i + 4 * (i & 3)) & 15] = INV_SBOX[s[i]]
        for i in range(16):
            s[i] = t[i] ^ rk[16 * r + i]
        if r > 0:
            for c in range(0, 16, 4):
                a0 = s[c]; a1 = s[c + 1]; a2 = s[c + 2]; a3 = s[c + 3]
                u = XT[XT[a0 ^ a2]]
                v = XT[XT[a1 ^ a3]]
                a0 ^= u; a2 ^= u; a1 ^= v; a3 ^= v
                x = a0 ^ a1 ^ a2 ^ a3
                s[c] = a0 ^ x ^ XT[a0 ^ a1]
                s[c + 1] = a1 ^ x ^ XT[a1 ^ a2]
                s[c + 2] = a2 ^ x ^ XT[a2 ^ a3]
                s[c + 3] = a3 ^ x ^ XT[a3 ^ a0]
    memcpy(outp, s, 16)


cdef int check_args(key, iv, data) except -1:
    if not TABLES_READY:
        init_tables()
    if len(key) != 16:
        raise ValueError("AES-128 key must be 16 bytes")
    if len(iv) != 16:
        raise ValueError("IV must be 16 bytes")
    if len(data) % 16 != 0:
        raise ValueError("data length must be a multiple of 16")
    return 0


def aes128_cbc_encrypt(key, iv, plaintext):
    """AES-128-CBC without padding; plaintext must be a block multiple."""
    cdef bytes k = bytes(key)
    cdef bytes v = bytes(iv)
    cdef bytes pt = bytes(plaintext)
    check_args(k, v, pt)
    cdef uint8_t rk[176]
    expand_key(<const uint8_t *>k, rk)
    cdef Py_ssize_t n = len(pt)
    cdef bytearray out = bytearray(n)
    cdef uint8_t *op = out
    cdef const uint8_t *ip = pt
    cdef uint8_t prev[16]
    cdef uint8_t block[16]
    cdef Py_ssize_t off
    cdef int i
    memcpy(prev, <const uint8_t *>v, 16)
    for off in range(0, n, 16):
        for i in range(16):
            block[i] = ip[off + i] ^ prev[i]
        encrypt_block(rk, block, prev)
        memcpy(op + off, prev, 16)
    return bytes(out)


def aes128_cbc_decrypt(key, iv, ciphertext):
    cdef bytes k = bytes(key)
    cdef bytes v = bytes(iv)
    cdef bytes ct = bytes(ciphertext)
    check_args(k, v, ct)
    cdef uint8_t rk[176]
    expand_key(<const uint8_t *>k, rk)
    cdef Py_ssize_t n = len(ct)
    cdef bytearray out = bytearray(n)
    cdef uint8_t *op = out
    cdef const uint8_t *ip = ct
    cdef uint8_t prev[16]
    cdef uint8_t plain[16]
    cdef Py_ssize_t off
    cdef int i
    memcpy(prev, <const uint8_t *>v, 16)
    for off in range(0, n, 16):
        decrypt_block(rk, ip + off, plain)
        for i in range(16):
            op[off + i] = plain[i] ^ prev[i]
        memcpy(prev, ip + off, 16)
    return bytes(out)
