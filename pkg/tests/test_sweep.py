import json
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from xyentangle.errors import DomainError, SchemaError
from xyentangle.sweep import (CSV_HEADER, ResultRow, SweepSpec, evaluate_point, format_csv,
                              parse_values, read_csv, rows_to_array, run_sweep, write_csv)


class TestParseValues:
    def test_inclusive_range(self):
        assert parse_values("0:1:0.25") == [0.0, 0.25, 0.5, 0.75, 1.0]

    def test_range_values_are_clean(self):
        vals = parse_values("0:3:0.005")
        assert len(vals) == 601
        assert vals[-1] == 3.0
        assert all(repr(v) == repr(round(v, 3)) for v in vals)

    def test_list_and_scalar(self):
        assert parse_values("1,2.5") == [1.0, 2.5]
        assert parse_values(3) == [3.0]
        assert parse_values([0, 1]) == [0.0, 1.0]

    @pytest.mark.parametrize("bad", ["0:1", "0:1:0", "1:0:0.1", "", "0:1:-1"])
    def test_rejects(self, bad):
        with pytest.raises(ValueError):
            parse_values(bad)


class TestSpec:
    def test_build(self):
        s = SweepSpec.build("1", "0:1:0.5", "0", "2,1,2", "concurrence,eof")
        assert s.r_list == (1, 2)
        assert list(s.points()) == [(1.0, 0.0, 0.0), (1.0, 0.5, 0.0), (1.0, 1.0, 0.0)]

    @pytest.mark.parametrize("kw", [
        dict(gamma="1.5", lam="1"),
        dict(gamma="1", lam="-1"),
        dict(gamma="1", lam="1", temperature="-0.1"),
        dict(gamma="1", lam="1", r="0"),
        dict(gamma="1", lam="1", quantities="bogus"),
        dict(gamma="0.5", lam="1", quantities="entropy_ground"),
        dict(gamma="1", lam="1", temperature="0.5", quantities="sx"),
    ])
    def test_invalid(self, kw):
        with pytest.raises(ValueError):
            SweepSpec.build(**kw)

    def test_job_file(self, tmp_path):
        job = tmp_path / "job.json"
        job.write_text(json.dumps({"gamma": 1, "lambda": "0:2:1", "r": [1],
                                   "quantities": ["concurrence"], "description": "x"}))
        assert SweepSpec.from_job(job).lambdas == (0.0, 1.0, 2.0)
        job.write_text(json.dumps({"gamma": 1, "lambda": 1, "colour": "red"}))
        with pytest.raises(ValueError):
            SweepSpec.from_job(job)


class TestRows:
    def test_consistency(self):
        with pytest.raises(SchemaError):
            ResultRow(1, 1, 0, 1, "sz", 0.5)
        with pytest.raises(SchemaError):
            ResultRow(1, 1, 0, 0, "concurrence", 0.5)
        with pytest.raises(SchemaError):
            ResultRow(1, 1, 0, 1, "concurrence", math.nan)

    def test_point_quantities(self):
        rows = {(r.quantity, r.r): r.value for r in evaluate_point(1, 0, 0, [1])}
        assert rows[("sz", 0)] == 1.0
        assert rows[("entropy_ground", 0)] == 0.0
        assert rows[("concurrence", 1)] == pytest.approx(0.0, abs=1e-15)
        assert rows[("sx", 0)] == 0.0

    def test_strict(self):
        with pytest.raises(DomainError):
            evaluate_point(0.5, 1, 0, [1], ("entropy_ground",))
        assert evaluate_point(0.5, 1, 0, [1], ("entropy_ground",), strict=False) == []


class TestCsv:
    def test_schema_and_round_trip(self, tmp_path):
        rows = run_sweep(SweepSpec.build(1, "0.5,1", "0,0.5", "1,2", "sz,concurrence,xx"))
        text = format_csv(rows)
        lines = text.split("\n")
        assert lines[0] == ",".join(CSV_HEADER)
        assert text.endswith("\n") and "\r" not in text
        assert len(lines) == 1 + len(rows) + 1
        path = tmp_path / "out.csv"
        write_csv(text, path)
        back = read_csv(path)
        assert back == rows
        for a, b in zip(back, rows):
            assert a.value == pytest.approx(b.value, rel=1e-11, abs=1e-300)

    def test_row_order(self):
        rows = run_sweep(SweepSpec.build("0.5,1", "1,0.5", "0.5,0", "2,1", "zz,concurrence"))
        keys = [(r.gamma, r.lam, r.temperature, r.r, r.quantity) for r in rows]
        assert keys == sorted(keys)
        assert len(keys) == 2 * 2 * 2 * 2 * 2

    def test_parallel_byte_identical(self):
        sweep = SweepSpec.build(1, "0:2:0.1", "0,0.3", "1,2", "concurrence,eof,zz")
        serial = format_csv(run_sweep(sweep, jobs=1))
        assert format_csv(run_sweep(sweep, jobs=2)) == serial
        assert format_csv(run_sweep(sweep, jobs=1)) == serial

    def test_extra_column(self):
        rows = evaluate_point(1, 1, 0, [1], ("sz",))
        assert format_csv(rows, {"n_sites": [8]}).split("\n")[1].endswith(",8")

    @pytest.mark.parametrize("body", [
        "a,b,c\n",
        "gamma,lambda,temperature,r,quantity,value\n1,1,0,1,nonsense,0.5\n",
        "gamma,lambda,temperature,r,quantity,value\n1,1,0,x,concurrence,0.5\n",
        "gamma,lambda,temperature,r,quantity,value\n1,1,0,1,concurrence\n",
        "",
    ])
    def test_bad_csv(self, tmp_path, body):
        path = tmp_path / "bad.csv"
        path.write_text(body)
        with pytest.raises(SchemaError):
            read_csv(path)

    def test_write_leaves_nothing_on_failure(self, tmp_path):
        with pytest.raises(TypeError):
            write_csv(None, tmp_path / "x.csv")
        assert list(tmp_path.iterdir()) == []

    def test_rows_to_array(self):
        rows = run_sweep(SweepSpec.build(1, "1,0", "0", "1", "concurrence"))
        lam, c = rows_to_array(rows, "concurrence", 1)
        np.testing.assert_array_equal(lam, [0.0, 1.0])
        assert c[0] == pytest.approx(0.0, abs=1e-15) and c[1] == pytest.approx(0.1946, abs=1e-4)


@settings(max_examples=30, deadline=None)
@given(st.floats(0, 1), st.floats(0, 3), st.floats(0, 2))
def test_point_rows_finite_and_bounded(gamma, lam, temp):
    for row in evaluate_point(gamma, lam, temp, [1, 2], strict=False):
        if row.quantity in ("concurrence", "eof", "entropy_thermal", "entropy_ground"):
            assert 0.0 <= row.value <= 1.0
        else:
            assert -1.0 - 1e-12 <= row.value <= 1.0 + 1e-12
