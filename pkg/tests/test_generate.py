import pytest

from triptalk.nlu import (
    GrammarError,
    SlotKey,
    SlotLexicon,
    SplitError,
    Template,
    TemplateCategory,
    collapse_bio,
    expand_templates,
    load_lexicon,
    load_templates,
    make_splits,
    read_dataset,
    write_dataset,
)
from triptalk.resources import data_path


def lex(**kw):
    return SlotLexicon({SlotKey(k): tuple(v) for k, v in kw.items()})


def test_paper_example_block():
    template = Template("t001", "i want to go to {ALOC} at {TIME} by {TRANSIT}")
    lexicon = lex(ALOC=["pittsburgh international airport"], TIME=["7 am"], TRANSIT=["transit"])
    (ex,) = expand_templates([template], lexicon)
    assert list(ex.tokens) == [
        "i", "want", "to", "go", "to",
        "pittsburgh", "international", "airport",
        "at", "7", "am", "by", "transit",
    ]
    assert list(ex.tags) == [
        "O", "O", "O", "O", "O",
        "B-ALOC", "I-ALOC", "I-ALOC",
        "O", "B-TIME", "I-TIME", "O", "B-TRANSIT",
    ]


def test_no_placeholder_template_all_other():
    (ex,) = expand_templates([Template("t001", "hello")], lex())
    assert list(ex.tokens) == ["hello"]
    assert list(ex.tags) == ["O"]


def test_exhaustive_yes_template():
    # hand enumeration: 3 values -> 3 examples, in lexicon order
    lexicon = lex(YES=["yes", "sure", "of course"])
    examples = expand_templates([Template("t001", "{YES}")], lexicon)
    assert len(examples) == 3
    assert list(examples[0].tags) == ["B-YES"]
    assert list(examples[1].tokens) == ["sure"]
    # "of course" is two tokens, so one begin plus one inside
    assert list(examples[2].tokens) == ["of", "course"]
    assert list(examples[2].tags) == ["B-YES", "I-YES"]
    # a three-token value yields begin plus two insides
    (long_ex,) = expand_templates([Template("t001", "{YES}")], lex(YES=["yes of course"]))
    assert list(long_ex.tags) == ["B-YES", "I-YES", "I-YES"]


def test_missing_lexicon_key_names_template_and_key():
    with pytest.raises(GrammarError) as err:
        expand_templates([Template("t009", "{YES}")], lex(NO=["no"]))
    assert "t009" in str(err.value)
    assert "YES" in str(err.value)


def test_sampling_is_deterministic_and_bounded():
    lexicon = lex(DLOC=[f"place {i}" for i in range(10)], ALOC=[f"spot {i}" for i in range(10)])
    t = Template("t001", "from {DLOC} to {ALOC}")
    a = expand_templates([t], lexicon, samples_per_template=7, seed=42)
    b = expand_templates([t], lexicon, samples_per_template=7, seed=42)
    c = expand_templates([t], lexicon, samples_per_template=7, seed=43)
    assert a == b
    assert len(a) == 7
    assert a != c


def test_roundtrip_collapse_recovers_inserted_values():
    lexicon = lex(
        DLOC=["cmu", "penn and 26th"],
        ALOC=["airport", "baker st at butler st"],
        TIME=["7 am", "right now"],
    )
    t = Template("t001", "i'm leaving from {DLOC} and going to {ALOC} at {TIME}")
    for ex in expand_templates([t], lexicon):
        fills = collapse_bio(list(ex.tokens), list(ex.tags))
        assert [f.key for f in fills] == [SlotKey.DLOC, SlotKey.ALOC, SlotKey.TIME]
        for f in fills:
            assert f.surface in lexicon.get(f.key)


def test_shipped_grammar_composition():
    templates = load_templates(data_path("templates.txt"))
    assert len(templates) == 55
    info = [t for t in templates if t.category is TemplateCategory.INFO_GIVING]
    simple = [t for t in templates if t.category is TemplateCategory.SIMPLE]
    assert len(info) == 43
    assert len(simple) == 12
    lexicon = load_lexicon(data_path("lexicon.json"))
    for t in templates:
        for key in t.placeholders():
            assert lexicon.get(key)


def test_make_splits_leakage_and_sizes():
    templates = load_templates(data_path("templates.txt"))
    lexicon = load_lexicon(data_path("lexicon.json"))
    splits = make_splits(templates, lexicon, seed=7, train_samples_per_template=20, test_samples_per_template=5)

    train_values = set()
    for ex in splits["train"]:
        for f in collapse_bio(list(ex.tokens), list(ex.tags)):
            train_values.add(f.surface)
    test_values = set()
    for name in ("unseen_slots", "unseen_templates"):
        assert splits[name]
        for ex in splits[name]:
            for f in collapse_bio(list(ex.tokens), list(ex.tags)):
                test_values.add(f.surface)
    assert train_values
    assert not train_values & test_values


def test_make_splits_deterministic():
    templates = load_templates(data_path("templates.txt"))
    lexicon = load_lexicon(data_path("lexicon.json"))
    a = make_splits(templates, lexicon, seed=3, train_samples_per_template=10, test_samples_per_template=3)
    b = make_splits(templates, lexicon, seed=3, train_samples_per_template=10, test_samples_per_template=3)
    assert a == b


def test_make_splits_rejects_unsplittable_key():
    templates = [Template("t001", "{YES}"), Template("t002", "{YES} please")]
    with pytest.raises(SplitError) as err:
        make_splits(templates, lex(YES=["yes"]))
    assert "YES" in str(err.value)


def test_make_splits_rejects_single_template():
    with pytest.raises(SplitError):
        make_splits([Template("t001", "{YES}")], lex(YES=["yes", "sure"]))


def test_dataset_file_roundtrip(tmp_path):
    lexicon = lex(YES=["yes", "of course"])
    examples = expand_templates([Template("t001", "{YES}")], lexicon)
    path = tmp_path / "data.jsonl"
    write_dataset(examples, path)
    assert read_dataset(path) == examples
    first = path.read_text().splitlines()[0]
    assert '"tokens"' in first and '"tags"' in first
