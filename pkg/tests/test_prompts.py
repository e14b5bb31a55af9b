"""Prompt records, filtering, and the packaged seed set."""

from __future__ import annotations

import pytest

from kateb.errors import AlreadySeededError, NotFoundError, ParseError, ValidationError
from kateb.prompts import Prompt, PromptFilter, PromptStore, load_seed_file, seed_prompts
from kateb.scoring import CefrLevel


def make_prompt(**overrides) -> Prompt:
    fields = dict(
        id="",
        level=CefrLevel.A1,
        topic="Family",
        genre="informal",
        body_ar="اكتب عن عائلتك.",
        min_words=50,
    )
    fields.update(overrides)
    return Prompt(**fields)


def test_seed_defaults_loads_five_prompts():
    store = PromptStore()
    seeds = seed_prompts(store)
    assert len(seeds) == 5
    assert len(store) == 5
    levels = [p.level for p in store.list()]
    assert levels == sorted(levels)
    ids = {p.id for p in seeds}
    assert len(ids) == 5
    for p in seeds:
        assert p.body_ar.strip()
        assert p.body_en


def test_seeding_twice_is_rejected():
    store = PromptStore()
    seed_prompts(store)
    with pytest.raises(AlreadySeededError):
        seed_prompts(store)


def test_add_assigns_id_and_fires_hook():
    added = []
    store = PromptStore(on_add=added.append)
    pid = store.add(make_prompt())
    assert pid
    assert store.get(pid).id == pid
    assert [p.id for p in added] == [pid]


def test_restore_skips_hook():
    added = []
    store = PromptStore(on_add=added.append)
    store.restore(make_prompt(id="p1"))
    assert added == []
    assert store.get("p1").topic == "Family"


def test_add_validations():
    store = PromptStore()
    pid = store.add(make_prompt(id="dup"))
    with pytest.raises(ValidationError):
        store.add(make_prompt(id=pid))
    with pytest.raises(ValidationError):
        store.add(make_prompt(genre="poem"))
    with pytest.raises(ValidationError):
        store.add(make_prompt(body_ar="   "))
    with pytest.raises(ValidationError):
        store.add(make_prompt(min_words=51))
    with pytest.raises(ValidationError):
        store.add(make_prompt(level=CefrLevel.B1, min_words=50))


def test_get_unknown_prompt():
    with pytest.raises(NotFoundError):
        PromptStore().get("missing")


def test_filters():
    store = PromptStore()
    seed_prompts(store)
    a1 = store.list(PromptFilter(level=CefrLevel.A1))
    assert a1 and all(p.level is CefrLevel.A1 for p in a1)
    by_topic = store.list(PromptFilter(topic="spring"))
    assert [p.id for p in by_topic] == ["seed-spring-break"]
    formal = store.list(PromptFilter(genre="formal"))
    assert [p.genre for p in formal] == ["formal"]
    none = store.list(PromptFilter(level=CefrLevel.C2))
    assert none == []


def test_list_order_is_stable():
    store = PromptStore()
    store.add(make_prompt(id="b", level=CefrLevel.A2))
    store.add(make_prompt(id="a", level=CefrLevel.A1))
    store.add(make_prompt(id="c", level=CefrLevel.A1))
    assert [p.id for p in store.list()] == ["a", "c", "b"]


def test_prompt_dict_round_trip():
    p = make_prompt(id="p9", body_en="About family.", media_ref="img-1")
    assert Prompt.from_dict(p.to_dict()) == p


def test_seed_file_parser_defaults_min_words(tmp_path):
    f = tmp_path / "seeds.txt"
    f.write_text(
        "# comment\nid: x1\nlevel: B1\ntopic: T\ngenre: formal\nbody_ar: نص\n",
        encoding="utf-8",
    )
    prompts = load_seed_file(f)
    assert prompts[0].min_words == 100
    assert prompts[0].body_en is None


def test_seed_file_parser_reports_bad_line_number(tmp_path):
    f = tmp_path / "seeds.txt"
    f.write_text("id: x1\nlevel: B1\njunk line\n", encoding="utf-8")
    with pytest.raises(ParseError) as err:
        load_seed_file(f)
    assert err.value.line_no == 3


def test_seed_file_parser_reports_record_start_on_missing_key(tmp_path):
    f = tmp_path / "seeds.txt"
    f.write_text("\n\nid: x1\nlevel: B1\ntopic: T\n", encoding="utf-8")
    with pytest.raises(ParseError) as err:
        load_seed_file(f)
    assert err.value.line_no == 3


def test_seed_file_parser_bad_level(tmp_path):
    f = tmp_path / "seeds.txt"
    f.write_text("id: x1\nlevel: Q7\ntopic: T\ngenre: formal\nbody_ar: نص\n", encoding="utf-8")
    with pytest.raises(ParseError):
        load_seed_file(f)
