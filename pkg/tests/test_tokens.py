from clonefinder.config import PipelineConfig
from clonefinder.tokens import KIND_COMMENT, Token, filter_tokens, scan


def kinds(tokens):
    return [t.kind for t in tokens]


def texts(tokens):
    return [t.text for t in tokens]


def test_c_family_basic_statement():
    tokens = scan("int a = 5;", PipelineConfig())
    assert texts(tokens) == ["int", "a", "=", "5", ";"]
    assert kinds(tokens) == ["keyword", "identifier", "operator", "literal", "punctuation"]


def test_empty_file():
    assert scan("", PipelineConfig()) == []


def test_generic_lines_mode():
    config = PipelineConfig(language="generic-lines")
    tokens = scan("MOVE A TO B\n\n   DISPLAY X\nSTOP RUN\n", config)
    assert texts(tokens) == ["MOVE A TO B", "DISPLAY X", "STOP RUN"]
    assert [t.line for t in tokens] == [1, 3, 4]


def test_generic_words_mode():
    config = PipelineConfig(language="generic-words")
    tokens = scan("foo bar\nbaz", config)
    assert texts(tokens) == ["foo", "bar", "baz"]


def test_reconstruction_property():
    source = 'if (x <= 10) { y = "a\\"b"; /* note */ } // done\nz++;\n'
    tokens = scan(source, PipelineConfig())
    rebuilt = "".join(t.text for t in tokens)
    squeezed = "".join(source.split())
    assert "".join(rebuilt.split()) == squeezed


def test_comments_tagged_not_dropped_by_scan():
    tokens = scan("a; // trailing\n/* block */ b;", PipelineConfig())
    assert KIND_COMMENT in kinds(tokens)


def test_positions_are_one_based():
    tokens = scan("a\n  b", PipelineConfig())
    assert (tokens[0].line, tokens[0].column) == (1, 1)
    assert (tokens[1].line, tokens[1].column) == (2, 3)


def test_filter_removes_comments():
    config = PipelineConfig()
    tokens = scan("a; /*x*/ b;", config)
    filtered = filter_tokens(tokens, config)
    assert texts(filtered) == ["a", ";", "b", ";"]


def test_filter_exclusion_region():
    config = PipelineConfig(exclusion_patterns=["GENERATED BEGIN", "GENERATED END"])
    source = "a;\n// GENERATED BEGIN\ngen1;\ngen2;\n// GENERATED END\nb;\n"
    filtered = filter_tokens(scan(source, config), config)
    assert texts(filtered) == ["a", ";", "b", ";"]


def test_unterminated_exclusion_region_warns():
    config = PipelineConfig(exclusion_patterns=["GENERATED BEGIN", "GENERATED END"])
    warnings = []
    filtered = filter_tokens(scan("a;\n// GENERATED BEGIN\nx;\n", config), config, warnings)
    assert texts(filtered) == ["a", ";"]
    assert warnings


def test_no_patterns_only_comments_removed():
    config = PipelineConfig()
    tokens = scan("a; // c\nb;", config)
    assert texts(filter_tokens(tokens, config)) == ["a", ";", "b", ";"]


def test_token_invariants():
    import pytest

    with pytest.raises(ValueError):
        Token("identifier", "", "f", 1, 1)
    with pytest.raises(ValueError):
        Token("identifier", "x", "f", 0, 1)
