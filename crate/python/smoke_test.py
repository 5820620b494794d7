"""Smoke test for the powersdim extension module.

Build and install first:  pip install --no-build-isolation -e .
"""

import json

import powersdim


def main():
    d12 = powersdim.Group("D12")
    assert d12.order == 12 and len(d12) == 12
    r = d12.sdim()
    assert (r.value, r.omega_reduced, r.method) == (9, 3, "ClosedFormDihedral"), r
    assert r.verified and len(r.witness) == 9

    assert powersdim.sdim_group("Z12").value == 9
    assert powersdim.sigma(12) == 3 and powersdim.sigma(8) == 1

    a4 = powersdim.Group("A4")
    assert a4.sdim_oracle().value == 10
    assert a4.classify()[0] == "iii"
    assert a4.alpha_p(2) == 2 and len(a4.clique_witness(3)) == 2
    assert powersdim.Group("Z2xZ4").classify() is None

    q8 = powersdim.Group("Q8")
    assert q8.power_graph_graph6() and powersdim.sdim_oracle(q8.power_graph_graph6()).value == 6
    edges = json.loads(q8.power_graph_json())
    assert edges["n"] == 8
    assert powersdim.sdim_oracle(q8.power_graph_json()).value == 6

    orders, elements = powersdim.clique_witness_cyclic(30)
    assert orders == [5, 15, 30] and len(elements) == 3

    for spec in powersdim.corpus():
        g = powersdim.Group(spec)
        assert g.sdim().value == g.order - g.omega_reduced(), spec

    try:
        powersdim.Group("D7")
    except powersdim.SdimError:
        pass
    else:
        raise AssertionError("odd dihedral order accepted")

    print("powersdim smoke test passed")


if __name__ == "__main__":
    main()
