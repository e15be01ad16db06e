"""Smoke test for the qcalc_py extension.

Build and install first:  cd crates/py && maturin build --release && pip install ../../target/wheels/qcalc_py-*.whl
"""

import pathlib

import qcalc_py

FIXTURE = pathlib.Path(__file__).resolve().parents[1] / "crates" / "core" / "fixtures" / "frame_f.qws"


def main() -> None:
    x = qcalc_py.frame_example()
    assert x.objects == ["x", "y"] and len(x) == 2
    assert x.hom("x", "y") == "p" and x.hom("y", "x") == "q"

    rows = x.presheaves()
    assert len(rows) == 9
    assert rows[-1] == ("μ(x)=μ(y)=k", ["q", "p"], ["k", "k"])

    assert x.check("m-cocomplete")
    assert not x.check("cocomplete")
    assert not x.check("cauchy-complete")

    completion, members = x.cauchy_completion()
    assert members == ["(p,q)", "(p,k)", "(k,q)", "(k,k)"], members
    assert completion.check("cauchy-complete")
    assert x.morita_equivalent(completion)

    ws = qcalc_py.Workspace.load(str(FIXTURE))
    assert ws.categories() == ["X", "Star", "D"]
    mu = ws.distributor("Mu")
    assert mu.is_left_adjoint() and mu.cells() == [["k"], ["k"]]
    eta, laws_hold = mu.free_extension(uniqueness=True)
    assert laws_hold and len(eta.domain) == 9
    assert qcalc_py.Workspace.parse(ws.to_text()).to_text() == ws.to_text()

    try:
        qcalc_py.Workspace.parse("lattice L\n  elements a\n")
    except ValueError as e:
        assert "line" in str(e)
    else:
        raise AssertionError("unterminated block accepted")

    code, out, _ = qcalc_py.run(["check", str(FIXTURE), "X", "--property", "m-cocomplete"])
    assert code == 0 and "true" in out.lower(), out
    print("smoke test passed")


if __name__ == "__main__":
    main()
