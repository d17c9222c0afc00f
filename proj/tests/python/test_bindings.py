import pytest

import toricdeg as td


def elliptic():
    return td.parse_ideal("vars: x, y, z\ny^2*z - x^3 + x*z^2\n")


def test_family_and_fibers():
    I = elliptic()
    fam = td.family_ideal(I, [1, 0, 3])
    assert fam["vars"][-1] == "t"
    assert fam["gens"] == ["x*z^2*t^4 - x^3 + y^2*z"]
    assert td.fiber(I, [1, 0, 3], "0") == td.Ideal(["x", "y", "z"], ["y^2*z - x^3"])
    assert td.fiber(I, [1, 0, 3], "1") == I


def test_groebner_and_toric():
    tc = td.toric_ideal([[1, 1, 1, 1], [3, 2, 1, 0]], ["u3", "u2", "u1", "u0"])
    assert len(tc.gens) == 3
    assert td.groebner_basis(tc, order="lex") == ["u3*u1 - u2^2", "u3*u0 - u2*u1", "u2*u0 - u1^2"]
    init = td.initial_ideal(elliptic(), [1, 0, 3])
    assert init == td.Ideal(["x", "y", "z"], ["y^2*z - x^3"])


def test_embedding_report(validate):
    rep = td.embed_value_semigroup(elliptic(), [[1, 1, 1], [1, 0, 3]])
    validate(rep, "embedding.schema.json")
    assert rep["images"] == {"x": "y^2*z", "y": "y^3", "z": "z^3"}
    assert rep["N"] == 3
    assert all(a == b for _, a, b in rep["dims_checked"])


def test_projection_report(validate):
    I = td.Ideal(["x", "y", "z"], ["x*y - z^2"])
    rep = td.projection_limit(I, ["x", "z"])
    validate(rep, "projection.schema.json")
    assert rep["limit_text"] == "(x*y)"
    assert rep["cone_part_text"] == "(x)"
    assert rep["closure_text"] == "(0)"


def test_moment():
    assert td.moment([[1, 0, 3]], [1, 1, 1]) == pytest.approx([4 / 3])
    a = td.sample_moment_image([[1, 0, 3]], 200, seed=5)
    b = td.sample_moment_image([[1, 0, 3]], 200, seed=5)
    assert a == b
    assert all(-1e-9 <= s[0] <= 3 + 1e-9 for s in a)


def test_errors():
    with pytest.raises(td.ToricdegError, match="homogeneous"):
        td.family_ideal(td.Ideal(["x", "y"], ["x - 1"]), [1, 0])
    with pytest.raises(td.ToricdegError):
        td.parse_ideal("vars: x\nx +* 1\n")
    with pytest.raises(td.VerificationFailed):
        td.embed_value_semigroup(elliptic(), [[1, 1, 1], [0, 0, 0]])


def test_fixtures_via_bindings():
    names = td.fixture_names()
    assert "gr25_family" in names
    rep = td.run_fixture("twisted_cubic")
    assert rep["passed"], rep["checks"]
