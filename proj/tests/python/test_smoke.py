import _core as bt


def test_builtin_models_validate():
    assert set(bt.builtin_model_names()) == {"scalar", "flip", "perm3", "m2-inner"}
    for name in bt.builtin_model_names():
        m = bt.builtin_model(name, 2)
        rep = bt.validate_bimodule(m.bimodule)
        assert rep.passed(), rep.summary()


def test_ladder_and_creation():
    m = bt.builtin_model("flip", 2)
    lad = m.ladder
    assert lad.range == 4
    assert lad.level_dim(2) == 2
    y = [1.0 + 0j, 0.5j]
    T = bt.creation_left(lad, 1, y, 0)
    eta = bt.extract_symbol(T)
    assert abs(eta[0] - 1.0) < 1e-12 and abs(eta[1] - 0.5j) < 1e-12
    assert abs(T.norm() - m.bimodule.module_norm(y)) < 1e-9


def test_lambda_is_toeplitz_and_synthesis_round_trips():
    m = bt.builtin_model("m2-inner", 2)
    f = bt.CrossSection(m.ladder)
    f.set(0, [1, 0, 0, 1])
    f.set(1, [0, 1, 1, 0])
    M = bt.lambda_rep(f, 2)
    assert bt.is_toeplitz(M).is_toeplitz
    syn = bt.synthesize_section(M, m.ladder.range)
    assert syn.consistent
    assert max(abs(a - b) for a, b in zip(syn.section.get(1), f.get(1))) < 1e-9


def test_property_suite():
    m = bt.builtin_model("scalar", 2)
    rep = bt.run_property_suite(m, 7)
    assert rep.passed(), rep.summary()
