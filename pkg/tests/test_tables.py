"""Table rendering against the golden transcriptions."""

from __future__ import annotations

import time
from pathlib import Path

from tcorelab import tables
from tcorelab.partitions import Partition

GOLDEN = Path(__file__).parent / "golden"


def test_table1_matches_golden():
    assert tables.render_table1(9) == (GOLDEN / "table1.txt").read_text()


def test_table2_matches_golden():
    assert tables.render_table2(9) == (GOLDEN / "table2.txt").read_text()


def test_tables_render_quickly():
    start = time.perf_counter()
    tables.render_table1(9)
    tables.render_table2(9)
    assert time.perf_counter() - start < 1.0


def test_freq_notation():
    assert tables.freq_notation(Partition((5, 1, 1, 1, 1))) == "(1^4,5^1)"
    assert tables.freq_notation(Partition()) == "()"


def test_table1_structure():
    data = tables.table1_data(9)
    assert data["total"] == 30
    for k in range(5):
        assert len(data["cells"][(0, k)]) == 4
        assert len(data["cells"][(2, k)]) == 2
    assert Partition((3, 3, 3)) in data["cells"][(0, 0)]


def test_table2_structure():
    data = tables.table2_data(9)
    assert len(data["orbits"]) == 6
    first = data["orbits"][0]
    assert first["all_cores"]
    assert len(first["members"]) == 5
    # the single-cell quotient image of (9) sits in slot 3
    by_member = {
        tuple(m): a
        for ob in data["orbits"]
        for m, a in zip(ob["members"], ob["annotations"])
    }
    assert tuple(by_member[(9,)]["core"]) == (4,)
    assert by_member[(9,)]["slot"] == 3


def test_table_json_shapes():
    t1 = tables.table1_json(9)
    assert t1["total"] == 30
    assert len(t1["rows"]) == 10
    t2 = tables.table2_json(9)
    assert len(t2["orbits"]) == 6
    assert all(ob["c5"] == [0, 1, 2, 3, 4] for ob in t2["orbits"])


def test_table2_other_weight():
    data = tables.table2_data(14)
    members = [m for ob in data["orbits"] for m in ob["members"]]
    assert len(members) == 135
    assert len(set(members)) == 135
