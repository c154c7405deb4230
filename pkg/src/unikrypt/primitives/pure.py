"""Pure-Python reference kernels: SHA-256, HMAC-SHA256 and AES-128-CBC.

This is the transparent reference implementation the rest of the library is
checked against. It favors clarity over speed; the compiled module in
``_speed`` provides the same functions for the accelerator-labeled backend.
"""

from __future__ import annotations

SHA256_BLOCK = 64

_SHA256_K = (
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
)

_SHA256_H0 = (
    0x6A09E667, 0xBB67AE85, 0x3C6EF372, 0xA54FF53A,
    0x510E527F, 0x9B05688C, 0x1F83D9AB, 0x5BE0CD19,
)

_MASK = 0xFFFFFFFF


def _rotr(x: int, n: int) -> int:
    return ((x >> n) | (x << (32 - n))) & _MASK


def _sha256_compress(state: list[int], block: bytes) -> None:
    w = list(int.from_bytes(block[i:i + 4], "big") for i in range(0, 64, 4))
    for i in range(16, 64):
        s0 = _rotr(w[i - 15], 7) ^ _rotr(w[i - 15], 18) ^ (w[i - 15] >> 3)
        s1 = _rotr(w[i - 2], 17) ^ _rotr(w[i - 2], 19) ^ (w[i - 2] >> 10)
        w.append((w[i - 16] + s0 + w[i - 7] + s1) & _MASK)

    a, b, c, d, e, f, g, h = state
    for i in range(64):
        s1 = _rotr(e, 6) ^ _rotr(e, 11) ^ _rotr(e, 25)
        ch = (e & f) ^ (~e & g)
        t1 = (h + s1 + ch + _SHA256_K[i] + w[i]) & _MASK
        s0 = _rotr(a, 2) ^ _rotr(a, 13) ^ _rotr(a, 22)
        maj = (a & b) ^ (a & c) ^ (b & c)
        t2 = (s0 + maj) & _MASK
        a, b, c, d, e, f, g, h = (t1 + t2) & _MASK, a, b, c, (d + t1) & _MASK, e, f, g
    state[0] = (state[0] + a) & _MASK
    state[1] = (state[1] + b) & _MASK
    state[2] = (state[2] + c) & _MASK
    state[3] = (state[3] + d) & _MASK
    state[4] = (state[4] + e) & _MASK
    state[5] = (state[5] + f) & _MASK
    state[6] = (state[6] + g) & _MASK
    state[7] = (state[7] + h) & _MASK


def sha256(data: bytes) -> bytes:
    """SHA-256 digest of ``data``."""
    state = list(_SHA256_H0)
    padded = data + b"\x80"
    padded += b"\x00" * ((56 - len(padded)) % 64)
    padded += (len(data) * 8).to_bytes(8, "big")
    for i in range(0, len(padded), 64):
        _sha256_compress(state, padded[i:i + 64])
    return b"".join(v.to_bytes(4, "big") for v in state)


def hmac_sha256(key: bytes, message: bytes, sha=None) -> bytes:
    """HMAC-SHA256 tag; keys longer than the block size are hashed first."""
    if sha is None:
        sha = sha256
    if len(key) > SHA256_BLOCK:
        key = sha(key)
    key = key + b"\x00" * (SHA256_BLOCK - len(key))
    ipad = bytes(k ^ 0x36 for k in key)
    opad = bytes(k ^ 0x5C for k in key)
    return sha(opad + sha(ipad + message))


# --- AES-128 ---

_SBOX = bytes.fromhex(
    "637c777bf26b6fc53001672bfed7ab76ca82c97dfa5947f0add4a2af9ca472c0"
    "b7fd9326363ff7cc34a5e5f171d8311504c723c31896059a071280e2eb27b275"
    "09832c1a1b6e5aa0523bd6b329e32f8453d100ed20fcb15b6acbbe394a4c58cf"
    "d0efaafb434d338545f9027f503c9fa851a3408f929d38f5bcb6da2110fff3d2"
    "cd0c13ec5f974417c4a77e3d645d197360814fdc222a908846eeb814de5e0bdb"
    "e0323a0a4906245cc2d3ac629195e479e7c8376d8dd54ea96c56f4ea657aae08"
    "ba78252e1ca6b4c6e8dd741f4bbd8b8a703eb5664803f60e613557b986c11d9e"
    "e1f8981169d98e949b1e87e9ce5528df8ca1890dbfe6426841992d0fb054bb16"
)

_INV_SBOX = bytes.fromhex(
    "52096ad53036a538bf40a39e81f3d7fb7ce339829b2fff87348e4344c4dee9cb"
    "547b9432a6c2233dee4c950b42fac34e082ea16628d924b2765ba2496d8bd125"
    "72f8f66486689816d4a45ccc5d65b6926c704850fdedb9da5e154657a78d9d84"
    "90d8ab008cbcd30af7e45805b8b34506d02c1e8fca3f0f02c1afbd0301138a6b"
    "3a9111414f67dcea97f2cfcef0b4e67396ac7422e7ad3585e2f937e81c75df6e"
    "47f11a711d29c5896fb7620eaa18be1bfc563e4bc6d279209adbc0fe78cd5af4"
    "1fdda8338807c731b11210592780ec5f60517fa919b54a0d2de57a9f93c99cef"
    "a0e03b4dae2af5b0c8ebbb3c83539961172b047eba77d626e169146355210c7d"
)

# xtime (multiply by 2 in GF(2^8)) lookup
_XT = bytes(((x << 1) ^ 0x1B if x & 0x80 else x << 1) & 0xFF for x in range(256))

_RCON = (0x01, 0x02, 0x04, 0x08, 0x10, 0x20, 0x40, 0x80, 0x1B, 0x36)


def aes128_expand_key(key: bytes) -> list[bytes]:
    """Expand a 16-byte key into the 11 round keys."""
    if len(key) != 16:
        raise ValueError("AES-128 key must be 16 bytes")
    words = [key[i:i + 4] for i in range(0, 16, 4)]
    for r in range(10):
        t = words[-1]
        t = bytes((_SBOX[t[1]] ^ _RCON[r], _SBOX[t[2]], _SBOX[t[3]], _SBOX[t[0]]))
        for _ in range(4):
            t = bytes(a ^ b for a, b in zip(t, words[-4]))
            words.append(t)
    return [b"".join(words[i:i + 4]) for i in range(0, 44, 4)]


def _mix_single_column(a0: int, a1: int, a2: int, a3: int) -> tuple[int, int, int, int]:
    t = a0 ^ a1 ^ a2 ^ a3
    return (
        a0 ^ t ^ _XT[a0 ^ a1],
        a1 ^ t ^ _XT[a1 ^ a2],
        a2 ^ t ^ _XT[a2 ^ a3],
        a3 ^ t ^ _XT[a3 ^ a0],
    )


def aes128_encrypt_block(round_keys: list[bytes], block: bytes) -> bytes:
    s = bytearray(a ^ b for a, b in zip(block, round_keys[0]))
    for rnd in range(1, 10):
        s = bytearray(_SBOX[b] for b in s)
        # ShiftRows on column-major state: row r rotates left by r
        s = bytearray(
            s[(i + 4 * (i % 4)) % 16] for i in range(16)
        )
        for c in range(0, 16, 4):
            s[c], s[c + 1], s[c + 2], s[c + 3] = _mix_single_column(
                s[c], s[c + 1], s[c + 2], s[c + 3]
            )
        rk = round_keys[rnd]
        s = bytearray(a ^ b for a, b in zip(s, rk))
    s = bytearray(_SBOX[b] for b in s)
    s = bytearray(s[(i + 4 * (i % 4)) % 16] for i in range(16))
    return bytes(a ^ b for a, b in zip(s, round_keys[10]))


def _inv_mix_single_column(a0: int, a1: int, a2: int, a3: int):
    # decompose the 9/11/13/14 multipliers into xtime chains
    u = _XT[_XT[a0 ^ a2]]
    v = _XT[_XT[a1 ^ a3]]
    a0 ^= u
    a1 ^= v
    a2 ^= u
    a3 ^= v
    return _mix_single_column(a0, a1, a2, a3)


def aes128_decrypt_block(round_keys: list[bytes], block: bytes) -> bytes:
    s = bytearray(a ^ b for a, b in zip(block, round_keys[10]))
    s = bytearray(s[(i - 4 * (i % 4)) % 16] for i in range(16))
    s = bytearray(_INV_SBOX[b] for b in s)
    for rnd in range(9, 0, -1):
        rk = round_keys[rnd]
        s = bytearray(a ^ b for a, b in zip(s, rk))
        for c in range(0, 16, 4):
            s[c], s[c + 1], s[c + 2], s[c + 3] = _inv_mix_single_column(
                s[c], s[c + 1], s[c + 2], s[c + 3]
            )
        s = bytearray(s[(i - 4 * (i % 4)) % 16] for i in range(16))
        s = bytearray(_INV_SBOX[b] for b in s)
    return bytes(a ^ b for a, b in zip(s, round_keys[0]))


def aes128_cbc_encrypt(key: bytes, iv: bytes, plaintext: bytes) -> bytes:
    """AES-128-CBC without padding; plaintext must be a block multiple."""
    if len(iv) != 16:
        raise ValueError("IV must be 16 bytes")
    if len(plaintext) % 16 != 0:
        raise ValueError("plaintext length must be a multiple of 16")
    rks = aes128_expand_key(key)
    out = bytearray()
    prev = iv
    for i in range(0, len(plaintext), 16):
        block = bytes(a ^ b for a, b in zip(plaintext[i:i + 16], prev))
        prev = aes128_encrypt_block(rks, block)
        out += prev
    return bytes(out)


def aes128_cbc_decrypt(key: bytes, iv: bytes, ciphertext: bytes) -> bytes:
    if len(iv) != 16:
        raise ValueError("IV must be 16 bytes")
    if len(ciphertext) % 16 != 0:
        raise ValueError("ciphertext length must be a multiple of 16")
    rks = aes128_expand_key(key)
    out = bytearray()
    prev = iv
    for i in range(0, len(ciphertext), 16):
        block = ciphertext[i:i + 16]
        out += bytes(a ^ b for a, b in zip(aes128_decrypt_block(rks, block), prev))
        prev = block
    return bytes(out)
