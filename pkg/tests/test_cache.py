import json

import pytest

from platknots.braid import BraidWord, parse_braid
from platknots.cache import Cache, cache_get, cache_key, cache_put, resolve_cache_dir
from platknots.errors import CorruptCache
from platknots.report import cached_invariants, invariants


def test_put_then_get(tmp_path):
    c = Cache(tmp_path)
    rec = {"invariants": {"components": 1}, "created": 1.0}
    cache_put(c, "ab" * 32, rec)
    assert cache_get(c, "ab" * 32) == rec


def test_miss(tmp_path):
    assert Cache(tmp_path).get("00" * 32) is None


def test_key_normalises_free_reduction():
    a = parse_braid("s1 s2 s2^-1 s3", 4)
    b = parse_braid("s1 s3 s1^-1 s1", 4)
    assert cache_key(a) == cache_key(b) == cache_key(BraidWord(4, (1, 3)))
    assert cache_key(BraidWord(4, (1, 3))) != cache_key(BraidWord(6, (1, 3)))


def test_checksum_mismatch(tmp_path):
    c = Cache(tmp_path)
    key = "cd" * 32
    c.put(key, {"invariants": {"h1_order": 3}})
    path = c._path(key)
    sealed = json.loads(path.read_text())
    sealed["record"]["invariants"]["h1_order"] = 5
    path.write_text(json.dumps(sealed))
    with pytest.raises(CorruptCache):
        c.get(key)
    path.write_text("not json")
    with pytest.raises(CorruptCache):
        c.get(key)


def test_corrupt_entry_is_recomputed(tmp_path):
    c = Cache(tmp_path)
    w = parse_braid("s2^3", 4)
    first = cached_invariants(w, c)
    c._path(cache_key(w)).write_text("garbage")
    assert cached_invariants(w, c) == first
    assert c.get(cache_key(w))["invariants"] == first


def test_hit_equals_recomputation(tmp_path):
    c = Cache(tmp_path)
    w = parse_braid("s2^2 s4 s1 s3 s5 s2", 6)
    cached_invariants(w, c)
    assert cached_invariants(w, c) == invariants(w)


def test_no_temporary_files_left(tmp_path):
    c = Cache(tmp_path)
    c.put("ef" * 32, {"x": 1})
    assert [p.name for p in (tmp_path / "ef").iterdir()] == ["ef" * 32 + ".json"]


def test_resolve_cache_dir(monkeypatch, tmp_path):
    monkeypatch.delenv("PLATKNOTS_CACHE_DIR", raising=False)
    assert resolve_cache_dir(None) is None
    monkeypatch.setenv("PLATKNOTS_CACHE_DIR", str(tmp_path))
    assert resolve_cache_dir(None) == tmp_path
    assert resolve_cache_dir("/elsewhere").as_posix() == "/elsewhere"
