"""Smoke test for the `riordan` extension module.

Build first, e.g. `maturin develop -m crates/py/Cargo.toml`, then run
`python python/smoke_test.py`.
"""

from fractions import Fraction

import riordan


def main():
    order = 10

    phi = riordan.alpha_log_phi(1, order)
    params = riordan.InvolutionParams(phi, riordan.Series([0, -1], order), 1)
    t = riordan.build_involution(params)
    assert t.is_involution()
    assert t.f.coeffs == [Fraction(-1)] + [Fraction(0)] * order
    assert t.g.coeffs[:2] == [Fraction(-1), Fraction(1)]

    back = riordan.decompose_involution(t)
    assert back.sign == 1
    assert back.u.parity() in ("odd", "zero")
    assert riordan.build_involution(back) == t

    pascal = riordan.RiordanArray.preset("pascal", 5)
    assert pascal.is_pseudo_involution()
    assert pascal.matrix()[4] == [1, 4, 6, 4, 1]
    assert (pascal @ pascal.inverse()).is_identity()
    assert riordan.RiordanArray.from_json(pascal.to_json()) == pascal

    a = riordan.a_sequence(riordan.Series([1, -1], 6))
    assert a.coeffs[:3] == [1, 1, 0]

    lag = riordan.laguerre(4)
    assert lag.polynomial(2) == [Fraction(1), Fraction(-2), Fraction(1, 2)]
    h = riordan.Weight.preset("exp", 6)
    assert riordan.laguerre(6).n_fold(2, h).is_neutral(h)
    assert riordan.prop1_equivalence(riordan.RiordanArray.preset("pascal", 6), 2, h) == (False, False)

    try:
        riordan.InvolutionParams(riordan.Series([0, 1]), riordan.Series([0]), 1)
    except ValueError as e:
        assert "phi constant term must be nonzero" in str(e)
    else:
        raise AssertionError("expected ValueError")

    print("smoke test: ok")


if __name__ == "__main__":
    main()
