"""Smoke checks of the Python wrapper: every entry point, both error types.

Run directly (PYTHONPATH must contain the built enecalc package):
    python3 tests/python/test_smoke.py
"""

import enecalc


def main():
    assert enecalc.__version__

    v = enecalc.evaluate("(1 - z/2)*(1 + z/2)")
    assert v["kind"] == "rational"
    assert v["den"] == ["1"]

    s = enecalc.series("exp(z)", order=6)
    assert s["low"] == 0
    assert s["coeffs"][3] == "1/6"

    v = enecalc.evaluate("zinf(2, 3)")
    assert v["kind"] == "symbol"
    assert v["symbol_kind"] == "infinite-zero"
    assert v["parameter"] == "9"

    v = enecalc.evaluate("exp(z/(1 - z))")
    assert v["kind"] == "transalgebraic"
    assert v["divisor"]["transcendental"][0]["point"] == "1"

    p = enecalc.ene("1 - z/2", "1 - z/3", order=8)
    assert p["kind"] == "series"
    assert p["coeffs"][1] == "-1/6"
    assert set(p["coeffs"][2:]) == {"0"}

    p = enecalc.ene("exp(R(1, 1))", "exp(-Li(2))", order=10)
    assert p["coeffs"][1] == "-1"
    assert set(p["coeffs"][2:]) == {"0"}

    assert enecalc.render("1+2 * z^-2") == "1 + 2*z^(-2)"

    t = enecalc.euler_table(4)
    assert [r["numerator"] for r in t["rows"]] == [["1"], ["1"], ["1", "1"], ["1", "4", "1"]]
    assert "k" in enecalc.euler_table(3, as_text=True).splitlines()[0]

    r = enecalc.verify("polylog", order=10, max_k=8, trials=10, seed=7)
    assert r["pass"] is True
    assert all(c["pass"] for c in r["checks"])

    r = enecalc.limit("exp(z)", k_min=8, k_max=32, grid="circle:0,0,0.5,32")
    assert r["k"] == [8, 16, 32]
    assert r["sup_error"][2] < r["sup_error"][0]

    r = enecalc.collapse("exp(1/(1 - z))", k=20)
    w = r["witnesses"][0]
    assert w["zeros"][0]["multiplicity"] == 20
    assert w["poles"][0]["distance"] == 0.0

    try:
        enecalc.evaluate("1 -")
    except enecalc.ParseError as e:
        assert "line 1, column 4" in str(e)
    else:
        raise AssertionError("expected ParseError")

    try:
        enecalc.series("exp(1/(1 - z))")
    except enecalc.EneError:
        pass
    else:
        raise AssertionError("expected EneError")

    # ParseError must also be catchable as the base error type
    try:
        enecalc.evaluate("(")
    except enecalc.EneError:
        pass
    else:
        raise AssertionError("expected EneError base catch")

    print("python smoke ok")


if __name__ == "__main__":
    main()
