import copy

from hypheron import angleparam, sideparam
from hypheron.certificate import angle_certificate, side_certificate, verify_certificate
from hypheron.exactnum import rat_sqrt


def _side_cert(family_half_one):
    T = angleparam.enumerate_heron(family_half_one, 3)[0].triangle
    ea, eb, ec = T.exp_sides
    F = sideparam.build_family(eb, ec)
    P = sideparam.forward_map(F, ea, rat_sqrt(sideparam.side_quartic(F, ea)))
    return side_certificate(F, P, sideparam.triangle_from_point(F, P))


def test_side_certificate_verifies(family_half_one):
    cert = _side_cert(family_half_one)
    assert "k" not in cert
    assert verify_certificate(cert) == []


def test_side_certificate_tampering(family_half_one):
    cert = _side_cert(family_half_one)
    bad = copy.deepcopy(cert)
    bad["triangle"]["expA"] = "3"
    assert verify_certificate(bad)
    bad = copy.deepcopy(cert)
    bad["family"]["v"] = "5"
    assert verify_certificate(bad)


def test_angle_certificate_fields(family_half_one):
    found = angleparam.enumerate_heron(family_half_one, 3)[0]
    cert = angle_certificate(family_half_one, found)
    assert set(cert) == {"kind", "family", "point", "triangle", "report", "version", "k", "translate"}
    assert verify_certificate(cert) == []
    bad = copy.deepcopy(cert)
    bad["translate"] = "(0, 0)"
    assert "point != k*generator + translate" in verify_certificate(bad)
    assert verify_certificate({"kind": "nope"})
    bad = copy.deepcopy(cert)
    bad["kind"] = "triangle"
    assert verify_certificate(bad) == ["unknown certificate kind 'triangle'"]
