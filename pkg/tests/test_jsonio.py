import json

from tametransfer import char, derive_tower, field_level, level, orbit_of, regularize, zsigmondy_prime
from tametransfer.jsonio import (
    certificate_from_json,
    certificate_to_json,
    char_from_json,
    char_to_json,
    lift_to_json,
    orbit_from_json,
    orbit_to_json,
)


def test_char_round_trip():
    for Q, deg, a in [(2, 3, 5), (3, 14, 3**13), (5, 2, 17)]:
        chi = char(field_level(Q, deg), a)
        doc = json.loads(json.dumps(char_to_json(chi)))
        assert char_from_json(doc) == chi


def test_char_json_uses_decimal_strings():
    chi = char(field_level(3, 14), 3**13 + 1)
    doc = char_to_json(chi)
    assert doc == {"level_deg": 14, "M": str(3**14 - 1), "a": str(3**13 + 1)}


def test_orbit_round_trip():
    lvl = field_level(2, 3)
    orbit = orbit_of(char(lvl, 1))
    doc = json.loads(json.dumps(orbit_to_json(orbit)))
    assert doc == {"rep": "1", "size": 3, "members": ["1", "2", "4"]}
    assert orbit_from_json(doc, lvl) == orbit


def test_certificate_round_trip():
    _, cert = zsigmondy_prime(2, 14)
    doc = json.loads(json.dumps(certificate_to_json(cert)))
    assert certificate_from_json(doc) == cert
    none_hit = zsigmondy_prime(2, 6)
    assert none_hit is None


def test_lift_document_shape():
    params = derive_tower(3, 3, 1, 1, 2, 1)
    lift = regularize(char(level(params, 2), 0), params)
    doc = lift_to_json(lift)
    assert doc["a"] == 7
    assert doc["ell"] == "547"
    assert doc["beta"]["M"] == str(3**14 - 1)
    assert doc["certificate"]["ell"] == "547"
