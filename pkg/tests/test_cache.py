import json
import logging

from satake_kit.cache import CACHE_ENV, ResultCache, cache_key, canonical_json, default_cache_dir


def test_canonical_json_is_order_independent():
    assert canonical_json({"b": 1, "a": [1, 2]}) == '{"a":[1,2],"b":1}'
    assert cache_key({"b": 1, "a": 2}) == cache_key({"a": 2, "b": 1})
    assert cache_key({"a": 1}) != cache_key({"a": 2})


def test_store_and_lookup(tmp_path):
    cache = ResultCache(tmp_path)
    cfg = {"command": "kostka", "lam": [2, 0]}
    assert cache.lookup(cfg) is None
    cache.store(cfg, {"poly": "q"})
    assert cache.lookup(cfg) == {"poly": "q"}
    assert cache.lookup({"command": "kostka", "lam": [1, 1]}) is None
    assert [p.name for p in tmp_path.iterdir()] == [f"{cache_key(cfg)}.json"]


def test_get_or_compute_calls_once(tmp_path):
    cache = ResultCache(tmp_path)
    calls = []

    def compute():
        calls.append(1)
        return [1, 2, 3]

    assert cache.get_or_compute({"k": 1}, compute) == [1, 2, 3]
    assert cache.get_or_compute({"k": 1}, compute) == [1, 2, 3]
    assert len(calls) == 1


def test_disabled_cache(tmp_path):
    cache = ResultCache(tmp_path, enabled=False)
    cache.store({"k": 1}, 5)
    assert cache.lookup({"k": 1}) is None
    assert list(tmp_path.iterdir()) == []


def test_corrupt_entry_warns_and_misses(tmp_path, caplog):
    cache = ResultCache(tmp_path)
    cfg = {"k": 1}
    cache.store(cfg, 5)
    path = tmp_path / f"{cache_key(cfg)}.json"
    path.write_text("{not json", encoding="utf-8")
    with caplog.at_level(logging.WARNING):
        assert cache.lookup(cfg) is None
    assert "corrupt" in caplog.text
    path.write_text(json.dumps({"key": "other", "payload": 5}), encoding="utf-8")
    assert cache.lookup(cfg) is None
    cache.store(cfg, 6)
    assert cache.lookup(cfg) == 6


def test_default_dir_from_environment(tmp_path, monkeypatch):
    monkeypatch.setenv(CACHE_ENV, str(tmp_path / "c"))
    assert default_cache_dir() == tmp_path / "c"
    assert ResultCache().directory == tmp_path / "c"
