"""Built-in reference tables: weight hierarchies and scheme thresholds.

Every table is regenerated from the production code paths at call time, so
a table that renders identically across runs certifies the whole pipeline.
Numeric cells are ints; blank cells are the string "-".
"""

from dataclasses import dataclass

from itertools import product

from .closedform import ghw2, rghw2
from .monomials import antilex_key, degree
from .scheme import profile
from .weights import CodePair, ghw, rghw


@dataclass(frozen=True)
class TableSpec:
    table_id: str
    title: str
    headers: tuple
    rows: tuple
    notes: tuple = ()

    def as_dict(self):
        return {"id": self.table_id, "title": self.title,
                "headers": list(self.headers),
                "rows": [list(r) for r in self.rows],
                "notes": list(self.notes)}


_SMALL_PAIRS = {1: (2, 1), 2: (3, 2), 3: (4, 3), 4: (5, 4), 5: (6, 5)}

_SCHEME_PAIRS = {7: (8, 6, 5), 8: (8, 6, 4), 9: (8, 5, 4), 10: (8, 5, 3),
                 11: (8, 5, 2), 12: (8, 4, 3), 13: (16, 14, 13),
                 14: (16, 13, 12), 15: (16, 12, 11), 16: (16, 11, 10),
                 17: (16, 10, 9), 18: (16, 9, 8)}


def _small_hierarchy_table(idx):
    u1, u2 = _SMALL_PAIRS[idx]
    pair = CodePair(5, 2, u1, u2)
    rows = tuple((m, ghw(u1, 2, 5, m), rghw(pair, m))
                 for m in range(1, pair.codim + 1))
    return TableSpec(
        table_id=f"t{idx}",
        title=f"weights of RM_5({u1},2) relative to RM_5({u2},2)",
        headers=("r=m", "d_r", "M_m"),
        rows=rows)


def _fig1_table():
    q, u1, u2 = 5, 5, 3
    cube = sorted(product(range(q), repeat=2), key=antilex_key)
    rows = []
    r_count = 0
    m_count = 0
    for t, a in enumerate(cube, start=1):
        d = degree(a)
        if d <= u1:
            r_count += 1
            r_val, d_val = r_count, t
        else:
            r_val, d_val = "-", "-"
        if u2 < d <= u1:
            m_count += 1
            m_val, big_m = m_count, t - r_count + m_count
        else:
            m_val, big_m = "-", "-"
        rows.append((f"({a[0]},{a[1]})", t, r_val, m_val, d_val, big_m))
    return TableSpec(
        table_id="fig1",
        title="positions and weights over the full exponent grid, "
              "RM_5(5,2) relative to RM_5(3,2)",
        headers=("element", "t", "r", "m", "d_r", "M_m"),
        rows=tuple(rows))


def _special_family_table():
    q = 16
    rows = []
    for m in range(1, q + 1):
        big_m = rghw2(q, q - 2, 1, m)
        d = ghw2(q, q - 1, m)
        rows.append((m, big_m - d, big_m))
    return TableSpec(
        table_id="t6",
        title="one-step pair at the top order, q=16: "
              "RM_16(15,2) relative to RM_16(14,2)",
        headers=("m", "diff", "M_m"),
        rows=tuple(rows),
        notes=("M_m follows the closed form m(2q-m+1)/2, which matches the "
               "exhaustive minimum-shadow search; listings of this family "
               "that read 15m+1 (46, 61, ...) from m=3 on fail both checks.",))


def query_note(q, u1):
    """How many line queries local correction needs for order u1 over GF(q)."""
    if u1 + 1 == q - 1:
        return f"local correction needs {q - 1} queries"
    return (f"local correction needs {u1 + 1} or {q - 1} queries, "
            f"depending on the error probability")


def _scheme_table(idx):
    q, u1, u2 = _SCHEME_PAIRS[idx]
    prof = profile(CodePair(q, 2, u1, u2))
    rows = tuple(
        (m + 1, prof.t[m], prof.t_ghw[m], prof.r[m], prof.r_ghw[m])
        for m in range(prof.ell))
    return TableSpec(
        table_id=f"t{idx}",
        title=f"ramp scheme on RM_{q}({u1},2) / RM_{q}({u2},2)",
        headers=("m", "t_m", "t'_m", "r_m", "r'_m"),
        rows=rows,
        notes=(query_note(q, u1),))


def list_tables():
    return ["t1", "t2", "t3", "t4", "t5", "t6", "fig1"] + \
        [f"t{i}" for i in range(7, 19)]


def build_table(table_id):
    if table_id in ("t1", "t2", "t3", "t4", "t5"):
        return _small_hierarchy_table(int(table_id[1:]))
    if table_id == "t6":
        return _special_family_table()
    if table_id == "fig1":
        return _fig1_table()
    if table_id.startswith("t") and table_id[1:].isdigit() \
            and int(table_id[1:]) in _SCHEME_PAIRS:
        return _scheme_table(int(table_id[1:]))
    raise KeyError(table_id)
