import itertools

import pytest

from revarith.gates import (GateKind, Permutation, apply_gate, gate_permutation,
                            gate_spec, lookup, pack, unpack)

# Reference mappings written with Python booleans, independent of the
# xor/and forms in the catalog.
REFERENCE = {
    GateKind.NOT: lambda a: (not a,),
    GateKind.FG: lambda a, b: (a, a != b),
    GateKind.TOFFOLI: lambda a, b, c: (a, b, (a and b) != c),
    GateKind.PERES: lambda a, b, c: (a, a != b, (a and b) != c),
    GateKind.FREDKIN: lambda a, b, c: (a, c if a else b, b if a else c),
    GateKind.TR: lambda a, b, c: (a, a != b, (a and not b) != c),
}


def reference(kind, bits):
    return tuple(int(bool(x)) for x in REFERENCE[kind](*map(bool, bits)))


class TestCatalog:
    def test_six_kinds(self):
        assert len(GateKind) == 6
        assert {gate_spec(k).kind for k in GateKind} == set(GateKind)

    @pytest.mark.parametrize("kind,arity,cost", [
        (GateKind.NOT, 1, 0),
        (GateKind.FG, 2, 1),
        (GateKind.TOFFOLI, 3, 5),
        (GateKind.PERES, 3, 4),
        (GateKind.FREDKIN, 3, 5),
        (GateKind.TR, 3, 6),
    ])
    def test_arity_and_cost(self, kind, arity, cost):
        spec = gate_spec(kind)
        assert spec.arity == arity
        assert spec.quantum_cost == cost

    def test_aliases(self):
        assert lookup("F") is GateKind.FREDKIN
        assert lookup("fredkin") is GateKind.FREDKIN
        assert lookup("FG") is GateKind.FG
        assert lookup("CNOT") is GateKind.FG
        assert lookup("TOF") is GateKind.TOFFOLI
        assert lookup("PG") is GateKind.PERES
        with pytest.raises(KeyError):
            lookup("XYZ")


class TestApplyGate:
    @pytest.mark.parametrize("kind", list(GateKind))
    def test_matches_reference(self, kind):
        n = gate_spec(kind).arity
        for bits in itertools.product((0, 1), repeat=n):
            assert apply_gate(kind, bits) == reference(kind, bits)

    @pytest.mark.parametrize("kind,inp,out", [
        (GateKind.FG, (1, 1), (1, 0)),
        (GateKind.TR, (1, 0, 0), (1, 1, 1)),
        (GateKind.FREDKIN, (1, 0, 1), (1, 1, 0)),
        (GateKind.PERES, (1, 1, 0), (1, 0, 1)),
        (GateKind.NOT, (0,), (1,)),
    ])
    def test_examples(self, kind, inp, out):
        assert apply_gate(kind, inp) == out

    def test_arity_mismatch(self):
        with pytest.raises(ValueError):
            apply_gate(GateKind.FG, (1, 0, 1))
        with pytest.raises(ValueError):
            apply_gate(GateKind.TR, (1,))

    def test_non_binary(self):
        with pytest.raises(ValueError):
            apply_gate(GateKind.FG, (2, 0))


class TestProperties:
    @pytest.mark.parametrize("kind", list(GateKind))
    def test_bijective(self, kind):
        n = gate_spec(kind).arity
        images = {apply_gate(kind, b)
                  for b in itertools.product((0, 1), repeat=n)}
        assert len(images) == 2 ** n

    @pytest.mark.parametrize("kind", [GateKind.NOT, GateKind.FG,
                                      GateKind.TOFFOLI, GateKind.FREDKIN])
    def test_self_inverse(self, kind):
        n = gate_spec(kind).arity
        for b in itertools.product((0, 1), repeat=n):
            assert apply_gate(kind, apply_gate(kind, b)) == b

    @pytest.mark.parametrize("kind", [GateKind.PERES, GateKind.TR])
    def test_not_self_inverse(self, kind):
        twice_differs = [
            b for b in itertools.product((0, 1), repeat=3)
            if apply_gate(kind, apply_gate(kind, b)) != b]
        assert twice_differs

    def test_tr_is_peres_with_b_complemented_in_product(self):
        for a, b, c in itertools.product((0, 1), repeat=3):
            tr_r = apply_gate(GateKind.TR, (a, b, c))[2]
            peres_r = apply_gate(GateKind.PERES, (a, 1 - b, c))[2]
            assert tr_r == peres_r

    @pytest.mark.parametrize("kind", [k for k in GateKind
                                      if gate_spec(k).arity == 3])
    def test_first_output_passes_through(self, kind):
        for b in itertools.product((0, 1), repeat=3):
            assert apply_gate(kind, b)[0] == b[0]


class TestPermutation:
    def test_fg(self):
        # enumerated by hand: index = A + 2B
        # 0:(0,0)->(0,0)=0  1:(1,0)->(1,1)=3  2:(0,1)->(0,1)=2  3:(1,1)->(1,0)=1
        assert gate_permutation(GateKind.FG).table == (0, 3, 2, 1)

    def test_not(self):
        assert gate_permutation(GateKind.NOT).table == (1, 0)

    def test_toffoli_top_state(self):
        assert gate_permutation(GateKind.TOFFOLI).table[7] == 3

    @pytest.mark.parametrize("kind", list(GateKind))
    def test_pointwise_agreement(self, kind):
        n = gate_spec(kind).arity
        perm = gate_permutation(kind)
        assert perm.size == 2 ** n
        assert perm.is_bijection()
        for i in range(2 ** n):
            assert unpack(perm(i), n) == apply_gate(kind, unpack(i, n))

    def test_pack_unpack(self):
        assert unpack(6, 3) == (0, 1, 1)
        assert pack((0, 1, 1)) == 6

    def test_inverse_and_compose(self):
        p = gate_permutation(GateKind.PERES)
        assert p.compose(p.inverse()).is_identity()
        assert not p.compose(p).is_identity()
        assert Permutation((1, 1)).is_bijection() is False
