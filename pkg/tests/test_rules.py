import io
import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crs.errors import DuplicateRuleId, InvalidPattern, ParseError
from crs.normalizer import DEFAULT_SUBSTITUTIONS, normalize
from crs.rules import CLASSES, classes_of, load_ruleset, scan


def _ruleset_bytes(rules):
    return json.dumps({"version": "t1", "rules": rules}).encode()


def _rule(rid, pattern, classes=("Personal",), **extra):
    doc = {"id": rid, "pattern": pattern, "classes": list(classes),
           "severity": "mild", "applies_to": "both"}
    doc.update(extra)
    return doc


def test_default_ruleset_loads_with_enough_coverage(engine):
    rs = engine.ruleset
    assert len(rs.patterns) >= 60
    covered = set()
    for p in rs.patterns:
        covered |= p.classes
    assert covered == set(CLASSES)


def test_duplicate_rule_ids_rejected():
    data = _ruleset_bytes([_rule("p01", "foo"), _rule("p01", "bar")])
    with pytest.raises(DuplicateRuleId):
        load_ruleset(io.BytesIO(data))


def test_empty_file_rejected():
    with pytest.raises(ParseError):
        load_ruleset(io.BytesIO(b""))


def test_ruleset_without_rules_rejected():
    with pytest.raises(ParseError):
        load_ruleset(io.BytesIO(_ruleset_bytes([])))


def test_lookaround_rejected():
    with pytest.raises(InvalidPattern):
        load_ruleset(io.BytesIO(_ruleset_bytes([_rule("p01", "a(?=b)")])))


def test_backreference_rejected():
    with pytest.raises(InvalidPattern):
        load_ruleset(io.BytesIO(_ruleset_bytes([_rule("p01", r"(a)\1")])))


def test_capturing_group_rejected():
    with pytest.raises(InvalidPattern):
        load_ruleset(io.BytesIO(_ruleset_bytes([_rule("p01", "(ab)+")])))


def test_simple_insult_matches(engine):
    matches = scan(normalize("you are an idiot"), engine.ruleset)
    assert len(matches) == 1
    assert matches[0].classes == frozenset({"Personal"})
    assert matches[0].surface == "idiot"


def test_empty_text_has_no_matches(engine):
    assert scan(normalize(""), engine.ruleset) == []


def test_obfuscated_term_maps_back_to_original_span(engine):
    body = "what an a$$hole"
    matches = scan(normalize(body), engine.ruleset)
    assert len(matches) == 1
    m = matches[0]
    assert m.classes == frozenset({"Swearing"})
    assert body.encode()[m.start:m.end].decode() == "a$$hole"


def test_word_boundary_blocks_substring_hits(engine):
    # the Scunthorpe case: embedded substrings must not fire
    assert scan(normalize("classic assessment"), engine.ruleset) == []


def test_classes_of_is_set_union():
    class M:
        def __init__(self, classes):
            self.classes = frozenset(classes)

    assert classes_of([M({"Personal"}), M({"Swearing"})]) == \
        {"Personal", "Swearing"}
    assert classes_of([]) == set()
    assert classes_of([M({"Swearing"})] * 3) == {"Swearing"}


def test_scan_is_deterministic(engine):
    body = "you idiot, what an a$$hole move, total bullshit"
    first = scan(normalize(body), engine.ruleset)
    assert first == scan(normalize(body), engine.ruleset)
    starts = [m.start for m in first]
    assert starts == sorted(starts)


def _obfuscate(term, variant):
    inverse = {}
    for src, dst in DEFAULT_SUBSTITUTIONS.items():
        inverse.setdefault(dst, src)
    out = []
    for i, ch in enumerate(term):
        if ch in inverse and (i + variant) % 2 == 0:
            out.append(inverse[ch])
        else:
            out.append(ch)
    return "".join(out)


def test_obfuscation_closure(engine, scored_terms):
    for term, _ in scored_terms:
        clean_ids = {m.rule_id for m in scan(normalize(term), engine.ruleset)}
        for variant in (0, 1):
            obfuscated = _obfuscate(term, variant)
            hit_ids = {m.rule_id
                       for m in scan(normalize(obfuscated), engine.ruleset)}
            assert clean_ids & hit_ids, (term, obfuscated)


@settings(max_examples=100)
@given(st.sampled_from(["idiot", "moron", "stupid", "a$$hole", "bull$hit"]),
       st.text(alphabet="abcdefgh ,.", max_size=30))
def test_span_soundness(engine, term, padding):
    body = f"{padding} {term} {padding}"
    raw = body.encode()
    for m in scan(normalize(body), engine.ruleset):
        assert raw[m.start:m.end].decode() == m.surface
