"""Declarative schemas for the JSON payloads the CLI emits.

Each schema maps a field name to a type spec: a Python type, a tuple of
admissible types, a list [spec] for homogeneous arrays, or a nested dict.
validate() raises ValueError on the first mismatch, so tests and scripts
can lock the wire format without an external dependency.
"""

PROFILE_SCHEMA = {
    "q": int, "s": int, "u1": int, "u2": int, "ell": int,
    "t": [int], "r": [int], "t_ghw": [int], "r_ghw": [int],
}

SIMULATION_SCHEMA = {
    "decoder": str, "q": int, "s": int, "u1": int, "u2": int,
    "delta": (int, float), "trials": int, "failures": int,
    "failure_rate": (int, float), "queries": int, "error_weight": int,
    "t1": int, "t2": (int, type(None)), "r1": int,
    "queries_above_t1": bool, "single_symbol_leak": (bool, type(None)),
}

TABLE_SCHEMA = {
    "id": str, "title": str, "headers": [str],
    "rows": [[(int, str)]], "notes": [str],
}

HIERARCHY_SCHEMA = {
    "q": int, "s": int, "u1": int, "u2": int, "ell": int, "weights": [int],
}


def validate(payload, schema, path="$"):
    if isinstance(schema, dict):
        if not isinstance(payload, dict):
            raise ValueError(f"{path}: expected object, got {type(payload).__name__}")
        missing = set(schema) - set(payload)
        extra = set(payload) - set(schema)
        if missing or extra:
            raise ValueError(f"{path}: missing {sorted(missing)}, extra {sorted(extra)}")
        for key, sub in schema.items():
            validate(payload[key], sub, f"{path}.{key}")
        return
    if isinstance(schema, list):
        if not isinstance(payload, list):
            raise ValueError(f"{path}: expected array, got {type(payload).__name__}")
        for i, item in enumerate(payload):
            validate(item, schema[0], f"{path}[{i}]")
        return
    if isinstance(schema, tuple):
        if not isinstance(payload, schema) or isinstance(payload, bool) and bool not in schema:
            raise ValueError(f"{path}: expected one of {schema}, got {payload!r}")
        return
    if schema is int and isinstance(payload, bool):
        raise ValueError(f"{path}: expected int, got bool")
    if not isinstance(payload, schema):
        raise ValueError(f"{path}: expected {schema.__name__}, got {type(payload).__name__}")
