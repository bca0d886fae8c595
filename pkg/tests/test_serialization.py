import json

import pytest

from naq.algebra.diffops import DiffOperator
from naq.algebra.polynomial import Polynomial
from naq.core.errors import ConfigError
from naq.core.products.flexible_product import make_flexible
from naq.core.products.gauge import GaugeTransform
from naq.core.products.moyal_product import make_moyal
from naq.utils.serialization import (bivector_from_records, bivector_to_records,
                                     gauge_from_records, gauge_to_records, load_corrections,
                                     operator_from_records, operator_to_records,
                                     product_from_records, product_record)


def test_bivector_records(su2):
    record = bivector_to_records(su2)
    assert record == {
        "name": "su2",
        "dimension": 3,
        "entries": [
            {"indices": [1, 2], "expr": "x3"},
            {"indices": [1, 3], "expr": "-x2"},
            {"indices": [2, 3], "expr": "x1"},
        ],
    }
    assert bivector_from_records(json.loads(json.dumps(record))) == su2


def test_operator_records(plane):
    records = operator_to_records(plane.bracket_operator)
    assert records == [
        {"coeff": "-1", "alpha": [0, 1], "beta": [1, 0]},
        {"coeff": "1", "alpha": [1, 0], "beta": [0, 1]},
    ]
    assert operator_from_records(records, 2) == plane.bracket_operator


def test_operator_records_merge_and_validate():
    records = [{"coeff": "x1", "alpha": [1, 0], "beta": [0, 0]},
               {"coeff": 2, "alpha": [1, 0], "beta": [0, 0]}]
    op = operator_from_records(records, 2)
    assert op.mapping() == {((1, 0), (0, 0)): Polynomial.variable(2, 0) + 2}
    with pytest.raises(ConfigError):
        operator_from_records([{"coeff": 0.5, "alpha": [1, 0], "beta": [0, 0]}], 2)
    with pytest.raises(ConfigError):
        operator_from_records([{"coeff": "1", "alpha": [1], "beta": [0, 0]}], 2)


def test_product_record_round_trip(su2, plane):
    S = make_flexible(su2, 2)
    record = json.loads(json.dumps(product_record(S)))
    assert record["family"] == "flexible"
    assert record["corrections"][1] == []
    assert product_from_records(record) == S

    M = make_moyal(plane, 3)
    assert product_from_records(product_record(M), bivector=plane) == M


def test_gauge_records():
    x2 = Polynomial.variable(2, 1)
    D = GaugeTransform(2, [DiffOperator(2, {(2, 0): 1, (1, 0): x2})], 2)
    records = gauge_to_records(D)
    assert records == [[{"coeff": "x2", "alpha": [1, 0]}, {"coeff": "1", "alpha": [2, 0]}], []]
    assert gauge_from_records(records, 2, 2) == D


def test_load_corrections(tmp_path, plane):
    path = tmp_path / "corrections.json"
    path.write_text(json.dumps({"corrections": [operator_to_records(plane.bracket_operator)]}))
    assert load_corrections(path, 2) == [plane.bracket_operator]

    path.write_text(json.dumps([[{"coeff": "1", "alpha": [1, 0]}]]))
    with pytest.raises(ConfigError):
        load_corrections(path, 2)

    path.write_text(json.dumps([[{"coeff": "x7", "alpha": [1, 0], "beta": [0, 1]}]]))
    with pytest.raises(ConfigError):
        load_corrections(path, 2)

    path.write_text(json.dumps({"other": 1}))
    with pytest.raises(ConfigError):
        load_corrections(path, 2)
