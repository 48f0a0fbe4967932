import pytest
from classic.lcs.concept import (
    BOTTOM, TOP, All, And, AtLeast, AtMost, Name, SameAs, Signature, conjoin,
    concept_size, in_s_fragment, print_concept, signature_of,
    value_restriction
)
from classic.lcs.constants import BOTTOM_ROLE
from classic.lcs.errors import SignatureError
from .. import families


class TestConcept(object):
    """Concept data model tests."""

    def test_signature_disjoint(self):
        with pytest.raises(SignatureError):
            Signature({'a'}, set(), {'a'})

    def test_declare(self):
        sig = Signature().declare('attribute', 'a').declare('role', 'r')
        assert sig.kind('a') == 'attribute', "a kind incorrect: %s" % sig.kind('a')
        assert sig.kind('r') == 'role', "r kind incorrect: %s" % sig.kind('r')
        assert sig.kind(BOTTOM_ROLE) == 'role', "The BOTTOM role is not a role"
        assert sig.kind('x') is None, "Undeclared x has a kind"
        with pytest.raises(SignatureError):
            sig.declare('concept', 'a')

    def test_join(self):
        sig = Signature({'A'}).join(Signature(set(), {'r'}))
        assert sig.concept_names == {'A'}, "Concepts incorrect: %s" % sig
        assert sig.role_names == {'r'}, "Roles incorrect: %s" % sig
        with pytest.raises(SignatureError):
            sig.join(Signature(set(), set(), {'A'}))

    def test_invalid_terms(self):
        with pytest.raises(ValueError):
            AtLeast(-1, 'r')
        with pytest.raises(ValueError):
            And(())

    def test_conjoin(self):
        assert conjoin([]) == TOP, "Empty conjunction is not TOP"
        assert conjoin([Name('A')]) == Name('A'), "Singleton not unwrapped"
        expected = And((Name('A'), Name('B')))
        assert conjoin([Name('A'), Name('B')]) == expected

    def test_value_restriction(self):
        actual = value_restriction(('a', 'b'), Name('A'))
        expected = All('a', All('b', Name('A'), True), True)
        assert actual == expected, "Value restriction incorrect: %s" % actual
        assert value_restriction((), Name('A')) == Name('A')

    def test_print(self):
        assert print_concept(TOP) == 'TOP'
        assert print_concept(BOTTOM) == 'BOTTOM'
        actual = print_concept(SameAs((), ('a', 'a')))
        assert actual == '(same-as () (a a))', "Print incorrect: %s" % actual
        concept = And((Name('Car'), AtLeast(10, 'repairs'),
                       AtMost(2, 'repairs'),
                       All('repairs', Name('Report'))))
        expected = ("(and Car (at-least 10 repairs) (at-most 2 repairs)"
                    " (all repairs Report))")
        assert str(concept) == expected, "Print incorrect: %s" % concept

    def test_s_fragment(self):
        assert in_s_fragment(SameAs(('a',), ('b',)))
        assert in_s_fragment(families.d0()), "D0 is not a same-as conjunction"
        assert in_s_fragment(TOP), "TOP is not the empty conjunction"
        assert not in_s_fragment(Name('Car'))
        assert not in_s_fragment(And((SameAs((), ()), AtLeast(1, 'r'))))

    def test_signature_of(self):
        sig = signature_of(families.lemon())
        assert sig == families.LEMON_SIGNATURE, "Signature incorrect: %s" % sig
        assert BOTTOM_ROLE in signature_of(BOTTOM).role_names

    def test_size(self):
        concept = And((Name('A'), SameAs(('a',), ('a', 'b'))))
        assert concept_size(concept) == 6, \
            "Size incorrect: %d" % concept_size(concept)


if __name__ == "__main__":
    pytest.main([__file__])
