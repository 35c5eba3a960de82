"""Versioned little-endian binary container for models, features and embeddings.

Layout: 8 magic bytes, u32 format version, u64 record count, then one
record per named array: u16 name length, UTF-8 name, u8 dtype code,
u8 rank, u64 extents, raw little-endian payload.  Round trips are
bit-exact for every supported dtype.
"""

import struct
from collections import OrderedDict

import numpy as np

from .errors import ContainerFormatError

MAGIC = b"XVFORGE\x00"
VERSION = 1

# dtype code -> numpy little-endian dtype
_DTYPES = {
    0: np.dtype("<f8"),
    1: np.dtype("<f4"),
    2: np.dtype("<i8"),
    3: np.dtype("u1"),
}
_CODES = {v: k for k, v in _DTYPES.items()}


def _dtype_code(arr):
    dt = arr.dtype.newbyteorder("<") if arr.dtype.byteorder == ">" else arr.dtype
    key = np.dtype(dt.str.replace(">", "<").replace("=", "<"))
    if key not in _CODES:
        raise ContainerFormatError(f"unsupported dtype {arr.dtype} for container record")
    return _CODES[key], key


def write_container(path, records):
    """Write named arrays to `path`.

    `records` maps names to numpy arrays (float64/float32/int64/uint8) or
    raw `bytes` (stored as uint8). Insertion order is preserved.
    """
    names = list(records)
    if len(set(names)) != len(names):
        raise ContainerFormatError("duplicate record names in container")
    with open(path, "wb") as fh:
        fh.write(MAGIC)
        fh.write(struct.pack("<IQ", VERSION, len(names)))
        for name in names:
            value = records[name]
            if isinstance(value, (bytes, bytearray)):
                arr = np.frombuffer(bytes(value), dtype=np.uint8)
            else:
                arr = np.asarray(value)
            code, dt = _dtype_code(arr)
            data = np.ascontiguousarray(arr, dtype=dt)
            encoded = name.encode("utf-8")
            if len(encoded) > 0xFFFF:
                raise ContainerFormatError(f"record name too long: {name!r}")
            fh.write(struct.pack("<H", len(encoded)))
            fh.write(encoded)
            fh.write(struct.pack("<BB", code, arr.ndim))
            for extent in arr.shape:
                fh.write(struct.pack("<Q", extent))
            fh.write(data.tobytes())


def read_container(path):
    """Read a container written by `write_container`; returns an ordered dict."""
    out = OrderedDict()
    with open(path, "rb") as fh:
        magic = fh.read(len(MAGIC))
        if magic != MAGIC:
            raise ContainerFormatError(f"{path}: bad magic bytes (not a container file)")
        version, count = struct.unpack("<IQ", _read_exact(fh, 12))
        if version != VERSION:
            raise ContainerFormatError(f"{path}: unsupported container version {version}")
        for _ in range(count):
            (name_len,) = struct.unpack("<H", _read_exact(fh, 2))
            name = _read_exact(fh, name_len).decode("utf-8")
            code, ndim = struct.unpack("<BB", _read_exact(fh, 2))
            if code not in _DTYPES:
                raise ContainerFormatError(f"{path}: unknown dtype code {code}")
            shape = tuple(
                struct.unpack("<Q", _read_exact(fh, 8))[0] for _ in range(ndim)
            )
            dt = _DTYPES[code]
            nbytes = dt.itemsize * int(np.prod(shape, dtype=np.int64)) if shape else dt.itemsize
            if ndim == 0:
                arr = np.frombuffer(_read_exact(fh, dt.itemsize), dtype=dt)[0]
                out[name] = np.asarray(arr)
            else:
                arr = np.frombuffer(_read_exact(fh, nbytes), dtype=dt).reshape(shape)
                out[name] = arr.copy()
        if name in out and fh.read(1):
            raise ContainerFormatError(f"{path}: trailing bytes after last record")
    return out


def record_bytes(record):
    """Return a uint8 record's payload as `bytes`."""
    arr = np.asarray(record)
    if arr.dtype != np.uint8:
        raise ContainerFormatError("record is not a byte record")
    return arr.tobytes()


def _read_exact(fh, n):
    data = fh.read(n)
    if len(data) != n:
        raise ContainerFormatError("container truncated")
    return data
