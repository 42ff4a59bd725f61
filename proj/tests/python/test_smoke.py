import pytest

import qct


def test_identity_registry():
    names = {info["name"] for info in qct.identities()}
    assert "q-morris" in names
    assert "ct-oracle" in names
    info = next(i for i in qct.identities() if i["name"] == "q-morris")
    assert set(info["parameters"]) == {"k", "a", "b", "c"}


def test_verify_small_grid():
    out = qct.verify("q-morris", {"k": (1, 2), "a": (0, 1), "b": (1, 1), "c": (1, 1)})
    assert out["total"] == 4
    assert out["passed"] == 4
    assert out["failed"] == 0
    assert out["exit_code"] == 0
    assert len(out["reports"]) == 4
    assert all(r["pass"] for r in out["reports"])
    assert out["reports"][0]["identity"] == "q-morris"


def test_evaluate_and_closed_product():
    assert qct.evaluate("CT[z0] poch(q * z0, 2) * z0^-1") == "(-q - q^2)"
    assert qct.evaluate("q^k", {"k": 3}) == "(q^3)"

    kernel = """
    CT[z[1,*]]
      prod(i=1..k; poch(z0 * z[1,i]^-1, a) * poch(q * z[1,i] * z0^-1, b))
    * prod(i=1..k; prod(j=i+1..k;
        poch(z[1,i] * z[1,j]^-1, c) * poch(q * z[1,j] * z[1,i]^-1, c)))
    """
    binds = {"k": 2, "a": 2, "b": 1, "c": 1}
    assert qct.evaluate(kernel, binds) == qct.morris(2, 2, 1, 1)


def test_error_mapping():
    with pytest.raises(qct.ParseError):
        qct.evaluate("1 +")
    with pytest.raises(ValueError):
        qct.evaluate("q^missing")
    with pytest.raises(RuntimeError, match="budget"):
        qct.evaluate("poch(x * y^-1, 4) * poch(y * x^-1, 4)", budget=2)
    with pytest.raises(ValueError):
        qct.verify("no-such-identity")
