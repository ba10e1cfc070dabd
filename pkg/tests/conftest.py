import random
from pathlib import Path

import pytest

from geolex.index import build_index
from geolex.ingest import Profile, TokenizedPost, iter_tokenized_posts, load_profiles
from geolex.lexicon import load_lexicon_dir
from geolex.states import by_usps

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def fixture_index():
    profiles, rejections = load_profiles(FIXTURES / "profiles.jsonl")
    assert not rejections
    return build_index(profiles, iter_tokenized_posts(FIXTURES / "posts.jsonl"))


@pytest.fixture(scope="session")
def matchers():
    return load_lexicon_dir(FIXTURES / "lexicons")


@pytest.fixture(scope="session")
def liwc_matcher(matchers):
    return matchers["liwc_small"]


def profile(user_id, usps, blogs=(), gender=None, industry=None, city=None):
    return Profile(
        user_id=user_id,
        state=by_usps(usps),
        city=city,
        gender=gender,
        industry=industry,
        blog_ids=tuple(blogs),
    )


def post(blog_id, post_id, tokens):
    return TokenizedPost(blog_id=blog_id, post_id=post_id, tokens=tuple(tokens))


_USPS_POOL = ("TX", "CA", "NY", "OR", "HI", "MN", "UT", "DE", "GA", "WA")
_VOCAB = (
    "lake maui happy money dollar payment work hard job god bible church "
    "sun rain road river coffee music game night city home snow beach hill"
).split()


def random_corpus(rng: random.Random, max_tokens: int = 10_000):
    """A randomized synthetic corpus: (profiles, posts), <= max_tokens tokens."""
    n_users = rng.randint(1, 25)
    profiles = []
    posts = []
    budget = rng.randint(0, max_tokens)
    blog_no = 0
    for u in range(n_users):
        usps = rng.choice(_USPS_POOL)
        n_blogs = rng.randint(1, 3)
        blogs = []
        for _ in range(n_blogs):
            blog_no += 1
            blogs.append(f"blog{blog_no}")
        gender = rng.choice(("male", "female", None))
        industry = rng.choice(("tourism", "automotive", None))
        city = rng.choice(("Springfield", "Riverton", None))
        profiles.append(profile(f"user{u}", usps, blogs, gender, industry, city))
        for b in blogs:
            for p in range(rng.randint(0, 3)):
                n_tok = min(rng.randint(0, 40), budget)
                budget -= n_tok
                posts.append(post(b, f"post{p}", rng.choices(_VOCAB, k=n_tok)))
    return profiles, posts
