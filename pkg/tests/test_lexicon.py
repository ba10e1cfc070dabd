import itertools
import random

import pytest

from geolex.errors import LexiconFormatError
from geolex.lexicon import (
    Category,
    Lexicon,
    Matcher,
    Pattern,
    compile_matcher,
    match_token,
    parse_dic,
    parse_theme_list,
    serialize_dic,
)

from oracles import naive_match


def random_lexicon(rng: random.Random, alphabet: str, max_stem: int = 4) -> Lexicon:
    cats = []
    for cid in range(1, rng.randint(2, 6)):
        patterns = set()
        for _ in range(rng.randint(1, 12)):
            stem = "".join(
                rng.choice(alphabet) for _ in range(rng.randint(1, max_stem))
            )
            patterns.add(Pattern(rng.choice(("exact", "prefix")), stem))
        cats.append(Category(cid, f"c{cid}", frozenset(patterns)))
    return Lexicon("rand", tuple(cats))


# ----------------------------------------------------------------------------
# parse_dic

DIC = """%
1\tMoney
2\tPositive Feelings
%
dollar\t1
remunerat*\t1
happy\t1\t1
celebrat*\t2
"""


def test_parse_dic_basic():
    lex = parse_dic(DIC)
    money = lex.category_by_name("Money")
    assert money.id == 1
    assert Pattern("exact", "dollar") in money.patterns
    assert Pattern("prefix", "remunerat") in money.patterns
    # duplicate ids on one word line collapse
    assert sum(1 for p in money.patterns if p.stem == "happy") == 1
    pos = lex.category_by_name("Positive Feelings")
    assert pos.patterns == frozenset({Pattern("prefix", "celebrat")})


def test_parse_dic_case_folds_stems():
    lex = parse_dic("%\n1\tA\n%\nDoLLar\t1\n")
    assert Pattern("exact", "dollar") in lex.categories[0].patterns


def test_parse_dic_multiple_spaces_accepted():
    lex = parse_dic("%\n1  A\n%\ndollar  1\n")
    assert lex.categories[0].patterns == frozenset({Pattern("exact", "dollar")})


@pytest.mark.parametrize("text,fragment", [
    ("%\n1\tA\n1\tB\n%\nx\t1\n", "duplicate category id"),
    ("%\n1\tA\n2\tA\n%\nx\t1\n", "duplicate category name"),
    ("%\n1\tA\n%\nx\t9\n", "unknown category id"),
    ("%\n%\n", "empty lexicon"),
    ("%\n1\tA\n%\n", "without any word"),
    ("%\n1\tA\n%\nnew york\t1\n", "multi-word"),
    ("%\n1\tA\n%\nab*c\t1\n", "non-suffix wildcard"),
    ("%\n1\tA\n%\nx\n", "without category ids"),
    ("x\t1\n", "header"),
    ("%\n1\tA\n", "never closed"),
])
def test_parse_dic_format_errors(text, fragment):
    with pytest.raises(LexiconFormatError) as err:
        parse_dic(text)
    assert fragment in str(err.value)


def test_format_error_carries_line_number():
    with pytest.raises(LexiconFormatError) as err:
        parse_dic("%\n1\tA\n1\tB\n%\nx\t1\n")
    assert err.value.line == 3


def test_round_trip():
    lex = parse_dic(DIC)
    again = parse_dic(serialize_dic(lex))
    assert again == lex


# ----------------------------------------------------------------------------
# parse_theme_list

def test_theme_list():
    cat = parse_theme_list("# note\ngod\nbible\nchurch\n", "Religion")
    assert cat.name == "Religion"
    assert cat.patterns == frozenset({
        Pattern("exact", "god"),
        Pattern("exact", "bible"),
        Pattern("exact", "church"),
    })


def test_theme_list_wildcards_and_comments():
    cat = parse_theme_list("work*  # all work words\nJOB\n", "Hard Work")
    assert Pattern("prefix", "work") in cat.patterns
    assert Pattern("exact", "job") in cat.patterns


def test_theme_list_empty_is_error():
    with pytest.raises(LexiconFormatError):
        parse_theme_list("# note\n\n", "Empty")


# ----------------------------------------------------------------------------
# matcher semantics

def one_cat(*patterns):
    lex = Lexicon("t", (Category(1, "C", frozenset(patterns)),))
    return lex, compile_matcher(lex)


def test_exact_is_not_prefix():
    _, m = one_cat(Pattern("exact", "dollar"))
    assert m.match("dollar") == frozenset({1})
    assert m.match("dollars") == frozenset()


def test_prefix_matches_extensions_and_itself():
    _, m = one_cat(Pattern("prefix", "dollar"))
    assert m.match("dollars") == frozenset({1})
    assert m.match("dollar") == frozenset({1})
    assert m.match("dolla") == frozenset()


def test_category_counted_once_for_multiple_hits():
    _, m = one_cat(Pattern("exact", "work"), Pattern("prefix", "work"))
    assert m.match("work") == frozenset({1})
    _, m2 = one_cat(
        Pattern("exact", "happy"),
        Pattern("exact", "cheerful"),
        Pattern("exact", "celebration"),
    )
    assert m2.match("celebration") == frozenset({1})
    assert m2.match("zzzz") == frozenset()


def test_cross_category_membership_allowed():
    lex = Lexicon("t", (
        Category(1, "A", frozenset({Pattern("exact", "work")})),
        Category(2, "B", frozenset({Pattern("prefix", "wor")})),
    ))
    m = compile_matcher(lex)
    assert match_token(m, "work") == frozenset({1, 2})


def test_matcher_equals_naive_scan_exhaustive():
    # Every token over {a,b,c} up to length 4, against randomized lexicons.
    alphabet = "abc"
    tokens = [""]
    for n in (1, 2, 3, 4):
        tokens.extend("".join(t) for t in itertools.product(alphabet, repeat=n))
    rng = random.Random(99)
    for _ in range(30):
        lex = random_lexicon(rng, alphabet)
        m = compile_matcher(lex)
        for tok in tokens:
            assert m.match(tok) == naive_match(lex, tok), (lex, tok)


def test_matcher_equals_naive_scan_random():
    rng = random.Random(7)
    alphabet = "abcdefg"
    for _ in range(20):
        lex = random_lexicon(rng, alphabet, max_stem=6)
        m = compile_matcher(lex)
        for _ in range(500):
            tok = "".join(rng.choice(alphabet) for _ in range(rng.randint(0, 8)))
            assert m.match(tok) == naive_match(lex, tok)
