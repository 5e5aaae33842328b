use std::cell::Cell;
use std::fs;

use critline::cache::{CacheStatus, TableCache};
use critline_core::critline::{line_zeros, FunctionId};

const T_MAX: f64 = 40.0;

#[test]
fn second_lookup_is_a_byte_identical_hit() {
    let dir = tempfile::tempdir().unwrap();
    let cache = TableCache::new(dir.path());
    let (first, a) = cache.get_or_compute(FunctionId::Tplus, T_MAX, || line_zeros(FunctionId::Tplus, T_MAX)).unwrap();
    assert_eq!(first, CacheStatus::Missing);
    let bytes = fs::read(cache.path(FunctionId::Tplus, T_MAX)).unwrap();

    let (second, b) = cache.get_or_compute(FunctionId::Tplus, T_MAX, || panic!("recomputed a cached table")).unwrap();
    assert_eq!(second, CacheStatus::Hit);
    assert_eq!(a, b);
    cache.store(FunctionId::Tplus, T_MAX, &b).unwrap();
    assert_eq!(fs::read(cache.path(FunctionId::Tplus, T_MAX)).unwrap(), bytes);
}

#[test]
fn version_change_forces_recompute() {
    let dir = tempfile::tempdir().unwrap();
    let old = TableCache::with_version(dir.path(), "0.0.0-old");
    old.get_or_compute(FunctionId::Tminus, T_MAX, || line_zeros(FunctionId::Tminus, T_MAX)).unwrap();

    // a different version is a different key, so the old entry is ignored
    let new = TableCache::with_version(dir.path(), "0.0.0-new");
    assert_ne!(old.key(FunctionId::Tminus, T_MAX), new.key(FunctionId::Tminus, T_MAX));
    let ran = Cell::new(false);
    let (status, _) = new
        .get_or_compute(FunctionId::Tminus, T_MAX, || {
            ran.set(true);
            line_zeros(FunctionId::Tminus, T_MAX)
        })
        .unwrap();
    assert!(ran.get());
    assert_eq!(status, CacheStatus::Missing);

    // an entry stamped with another version under this key is stale
    let text = fs::read_to_string(new.path(FunctionId::Tminus, T_MAX)).unwrap();
    let forged = text.replace("# code_version = 0.0.0-new", "# code_version = 0.0.0-old");
    fs::write(new.path(FunctionId::Tminus, T_MAX), &forged).unwrap();
    let digest = {
        use sha2::{Digest, Sha256};
        hex::encode(Sha256::digest(forged.as_bytes()))
    };
    let mut sidecar = new.path(FunctionId::Tminus, T_MAX).into_os_string();
    sidecar.push(".sha256");
    fs::write(&sidecar, format!("{digest}\n")).unwrap();
    assert_eq!(new.load(FunctionId::Tminus, T_MAX).unwrap().0, CacheStatus::Stale);
}

#[test]
fn tampered_table_is_corrupt_and_rewritten() {
    let dir = tempfile::tempdir().unwrap();
    let cache = TableCache::new(dir.path());
    let (_, good) = cache.get_or_compute(FunctionId::Tplus, T_MAX, || line_zeros(FunctionId::Tplus, T_MAX)).unwrap();
    let path = cache.path(FunctionId::Tplus, T_MAX);
    let clean = fs::read(&path).unwrap();
    let mut bad = clean.clone();
    let last = bad.len() - 2;
    bad[last] = if bad[last] == b'1' { b'2' } else { b'1' };
    fs::write(&path, &bad).unwrap();
    assert_eq!(cache.load(FunctionId::Tplus, T_MAX).unwrap().0, CacheStatus::Corrupt);

    let (status, again) = cache.get_or_compute(FunctionId::Tplus, T_MAX, || line_zeros(FunctionId::Tplus, T_MAX)).unwrap();
    assert_eq!(status, CacheStatus::Corrupt);
    assert_eq!(again, good);
    assert_eq!(fs::read(&path).unwrap(), clean);
}

#[test]
fn missing_sidecar_is_corrupt() {
    let dir = tempfile::tempdir().unwrap();
    let cache = TableCache::new(dir.path());
    cache.get_or_compute(FunctionId::ZetaLine, 20.0, || line_zeros(FunctionId::ZetaLine, 20.0)).unwrap();
    let mut sidecar = cache.path(FunctionId::ZetaLine, 20.0).into_os_string();
    sidecar.push(".sha256");
    fs::remove_file(sidecar).unwrap();
    assert_eq!(cache.load(FunctionId::ZetaLine, 20.0).unwrap().0, CacheStatus::Corrupt);
}
