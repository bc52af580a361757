"""Keys and the element-wise tanh maps F (encode) and G (decode).

For a key of length Nc + n_e, position i of the output is

    tanh(key[i] * x[i] + key[Nc + (i mod n_e)])

so the first Nc key entries act as per-position gains and the trailing n_e = Nq + 1 entries as
cyclically reused offsets.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from .exceptions import ConfigurationError, DataError

FloatArray = npt.NDArray[np.float64]


def offset_key_length(num_qubits: int) -> int:
    """Number of offset entries n_e = Nq + 1 at the tail of a key."""
    if num_qubits < 1:
        raise ConfigurationError(f"num_qubits must be positive, got {num_qubits}")
    return num_qubits + 1


def key_length(length_nc: int, num_qubits: int) -> int:
    return length_nc + offset_key_length(num_qubits)


def generate_key(length_nc: int, num_qubits: int, rng: np.random.Generator) -> FloatArray:
    """Key of length Nc + Nq + 1 with entries drawn from Uniform[-1, 1)."""
    if length_nc < 1:
        raise ConfigurationError(f"plaintext length must be positive, got {length_nc}")
    return rng.uniform(-1.0, 1.0, size=key_length(length_nc, num_qubits))


def generate_plaintext(length_nc: int, rng: np.random.Generator) -> FloatArray:
    """Plaintext of length Nc with entries drawn from Uniform[-1, 1)."""
    if length_nc < 1:
        raise ConfigurationError(f"plaintext length must be positive, got {length_nc}")
    return rng.uniform(-1.0, 1.0, size=length_nc)


def _tanh_map(key: npt.ArrayLike, values: npt.ArrayLike, what: str) -> FloatArray:
    k = np.asarray(key, dtype=np.float64)
    x = np.asarray(values, dtype=np.float64)
    if k.ndim != 1 or x.ndim != 1:
        raise DataError(f"{what}: key and input must be vectors")
    nc = x.size
    n_e = k.size - nc
    if nc < 1 or n_e < 1:
        raise DataError(
            f"{what}: key of length {k.size} cannot address an input of length {nc}"
        )
    offsets = k[nc + np.arange(nc) % n_e]
    return np.tanh(k[:nc] * x + offsets)


def encode_f(key: npt.ArrayLike, plaintext: npt.ArrayLike) -> FloatArray:
    """F(k, C). Raises `DataError` if the key is too short for the plaintext."""
    return _tanh_map(key, plaintext, "encode_f")


def decode_g(secret: npt.ArrayLike, encoded: npt.ArrayLike) -> FloatArray:
    """G(s, e), the same map as F keyed by a secret key."""
    return _tanh_map(secret, encoded, "decode_g")


@dataclass(frozen=True, eq=False)
class KeySet:
    """Distributed keys A, B and secret keys alpha, beta for one plaintext length."""

    a: FloatArray
    b: FloatArray
    alpha: FloatArray
    beta: FloatArray

    @classmethod
    def generate(cls, length_nc: int, num_qubits: int, rng: np.random.Generator) -> KeySet:
        return cls(
            a=generate_key(length_nc, num_qubits, rng),
            b=generate_key(length_nc, num_qubits, rng),
            alpha=generate_key(length_nc, num_qubits, rng),
            beta=generate_key(length_nc, num_qubits, rng),
        )
