"""JSON file formats for fields and ideals.

All unbounded integers are written as decimal strings so files survive
readers with 64-bit integer parsers; readers accept both plain ints and
strings. Matrices are row-major.
"""

import json

from .nf import Ideal, NumberField


def encode_int(x):
    return str(int(x))


def decode_int(v):
    if isinstance(v, bool):
        raise ValueError("expected an integer, got a boolean")
    if isinstance(v, int):
        return v
    if isinstance(v, str):
        return int(v, 10)
    raise ValueError(f"expected an integer or decimal string, got {type(v).__name__}")


def field_to_dict(K):
    return {"defining_poly": [encode_int(c) for c in K.poly]}


def field_from_dict(data):
    if "defining_poly" not in data:
        raise ValueError("field file needs a 'defining_poly' entry")
    return NumberField([decode_int(c) for c in data["defining_poly"]])


def load_field(path):
    with open(path) as fh:
        return field_from_dict(json.load(fh))


def store_field(K, path):
    with open(path, "w") as fh:
        json.dump(field_to_dict(K), fh, indent=1)
        fh.write("\n")


def ideal_to_dict(I):
    return {"hnf": [[encode_int(x) for x in row] for row in I.hnf_matrix()]}


def ideal_from_dict(data, K):
    if "generators" in data:
        gens = [
            K.element([decode_int(x) for x in coords]) for coords in data["generators"]
        ]
        return Ideal.from_generators(K, gens)
    if "hnf" in data:
        rows = [[decode_int(x) for x in row] for row in data["hnf"]]
        return Ideal.from_hnf_matrix(K, rows)
    raise ValueError("ideal file needs 'generators' or 'hnf'")


def load_ideal(path, K):
    with open(path) as fh:
        return ideal_from_dict(json.load(fh), K)


def store_ideal(I, path):
    if I.denom != 1:
        raise ValueError("only integral ideals are serialized")
    with open(path, "w") as fh:
        json.dump(ideal_to_dict(I), fh, indent=1)
        fh.write("\n")
