import logging
import struct
from pathlib import Path

import numpy as np

from ..exceptions import DumpFormatError, InvalidForest
from ..namespaces import files_ns
from ..utils import PATH, create_directory
from .peano import PeanoCurve

# magic, two pad bytes, side, origin index
HEADER = struct.Struct("<6s2xII")
VERTEX_DTYPE = np.dtype("<u4")


def write_curve_dump(curve: PeanoCurve, path: PATH) -> Path:
    """
    Writes the curve in the PEANO1 format: a 16-byte little-endian header
    followed by the 32-bit vertex ids in curve order.
    """
    side = curve.shape[0]
    if curve.shape[1] != side:
        raise DumpFormatError(f"only square curves can be dumped, got {curve.shape}")
    path = Path(path)
    create_directory(path)
    header = HEADER.pack(files_ns.PEANO_MAGIC, side, curve.origin_index)
    with open(path, "wb") as file:
        file.write(header)
        file.write(curve.order.astype(VERTEX_DTYPE).tobytes())
    logging.info(f"curve dump saved -- {path}")
    return path


def read_curve_dump(path: PATH) -> PeanoCurve:
    data = Path(path).read_bytes()
    if len(data) < HEADER.size:
        raise DumpFormatError(f"{path} is shorter than the dump header")
    magic, side, origin_index = HEADER.unpack_from(data)
    if magic != files_ns.PEANO_MAGIC:
        raise DumpFormatError(f"{path} has magic {magic!r}, expected PEANO1")

    body = data[HEADER.size :]
    if len(body) != side * side * VERTEX_DTYPE.itemsize:
        raise DumpFormatError(f"{path} holds {len(body)} bytes for a {side}-box")
    order = np.frombuffer(body, dtype=VERTEX_DTYPE).astype(np.int64)
    try:
        return PeanoCurve(order=order, shape=(side, side), origin_index=origin_index)
    except (InvalidForest, IndexError) as error:
        raise DumpFormatError(f"{path} does not hold a valid curve: {error}") from error
