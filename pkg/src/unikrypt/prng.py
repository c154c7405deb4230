"""Random sources: a deterministic SHA-256 PRNG and a system-entropy source.

The deterministic generator is the default so repeated runs produce
identical byte streams (same IVs, same generated keys), which keeps
processing times constant and measurements reproducible. Seeding is
explicit; the stream is SHA-256 over (seed || block counter), buffered so
successive reads continue the stream without overlap.
"""

from __future__ import annotations

import hashlib
import os
import threading

SEED_BYTES = 32


class UnseededError(Exception):
    """Raised when bytes are requested before a seed was provided."""


class DeterministicPrng:
    """SHA-256 counter-mode pseudo random generator."""

    def __init__(self, seed: bytes | None = None):
        self._lock = threading.Lock()
        self._seed: bytes | None = None
        self._counter = 0
        self._buffer = b""
        if seed is not None:
            self.reseed(seed)

    def reseed(self, seed: bytes) -> None:
        if len(seed) != SEED_BYTES:
            raise ValueError("seed must be %d bytes" % SEED_BYTES)
        with self._lock:
            self._seed = bytes(seed)
            self._counter = 0
            self._buffer = b""

    @property
    def seeded(self) -> bool:
        return self._seed is not None

    def generate(self, n: int) -> bytes:
        """Return the next ``n`` bytes of the stream."""
        if n < 0:
            raise ValueError("negative byte count")
        with self._lock:
            if self._seed is None:
                raise UnseededError("PRNG used before seeding")
            if n == 0:
                return b""
            chunks = [self._buffer]
            have = len(self._buffer)
            while have < n:
                block = hashlib.sha256(
                    self._seed + self._counter.to_bytes(8, "big")
                ).digest()
                self._counter += 1
                chunks.append(block)
                have += len(block)
            stream = b"".join(chunks)
            self._buffer = stream[n:]
            return stream[:n]


class SystemRng:
    """OS entropy source with the same interface as the deterministic PRNG."""

    seeded = True

    def reseed(self, seed: bytes) -> None:  # entropy pool needs no seeding
        pass

    def generate(self, n: int) -> bytes:
        if n < 0:
            raise ValueError("negative byte count")
        return os.urandom(n)
