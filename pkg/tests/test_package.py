"""The package's public face."""

import affordances
from affordances import RelationSelector, Sort, load_structure, poss, sample_path


def test_all_names_resolve():
    assert len(set(affordances.__all__)) == len(affordances.__all__)
    for name in affordances.__all__:
        assert hasattr(affordances, name), name


def test_readme_walkthrough():
    structure, sets = load_structure(sample_path("dunk"))
    spots = poss(structure, RelationSelector.RAW, Sort.E,
                 sets["TallPros"].members, sets["Balls"].members)
    assert spots == {"e1", "e2", "e3", "e4", "e9"}


def test_sample_paths_exist():
    for name in ("tv", "actors", "playgrounds", "dunk"):
        assert sample_path(name).is_dir(), name
