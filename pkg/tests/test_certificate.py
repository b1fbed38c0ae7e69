import json

import pytest

from ocover import certificate
from ocover.certificate import CertificateError, cover_from_dict, cover_to_dict, unoriented_to_dict
from ocover.cover import iter_cycle_covers


def test_round_trip(petersen_o6c4c, tmp_path):
    doc = cover_to_dict(petersen_o6c4c, "pet")
    assert set(doc) == {"schema", "name", "graph6", "k", "m", "oriented", "cycles"}
    assert doc["cycles"][0][0]["vertices"]
    p = certificate.write(doc, tmp_path / "a" / "c.json")
    back = certificate.read(p)
    assert back == doc
    oc = cover_from_dict(back)
    assert oc.cycles == petersen_o6c4c.cycles
    assert certificate.graph_of(back).edges == petersen_o6c4c.graph.edges


def test_dumps_is_deterministic(petersen_o6c4c):
    a = certificate.dumps(cover_to_dict(petersen_o6c4c))
    assert a == certificate.dumps(json.loads(a))


def test_unoriented(petersen):
    (cover,) = list(iter_cycle_covers(petersen, 6, 4))
    doc = unoriented_to_dict(cover, "pet")
    assert doc["oriented"] is False
    assert cover_from_dict(doc).cover.multiset_key() == cover.multiset_key()


def test_rejects_invalid(petersen_o6c4c, tmp_path):
    doc = cover_to_dict(petersen_o6c4c)
    doc["cycles"][0][0]["vertices"] = list(reversed(doc["cycles"][0][0]["vertices"]))
    with pytest.raises(CertificateError, match="does not verify"):
        cover_from_dict(doc)
    cover_from_dict(doc, verify=False)
    bad = dict(doc, k=5)
    with pytest.raises(CertificateError, match="k=5"):
        cover_from_dict(bad)
    with pytest.raises(CertificateError, match="malformed"):
        cover_from_dict({"graph6": "I????"})
    p = tmp_path / "x.json"
    p.write_text("{nope")
    with pytest.raises(CertificateError):
        certificate.read(p)
