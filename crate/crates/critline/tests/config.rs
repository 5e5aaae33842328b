use std::path::PathBuf;

use critline::config::{ConfigFile, Layers};

fn file(text: &str) -> ConfigFile {
    ConfigFile::parse(text).unwrap()
}

#[test]
fn flag_beats_file_beats_default() {
    let mut l = Layers::new(file("tmax = 250\nn = 12\n"), None);
    assert_eq!(l.get("tmax", Some(100.0), 1000.0).unwrap(), 100.0);
    assert_eq!(l.get("n", None, 1500usize).unwrap(), 12);
    assert_eq!(l.get("t0", None, 0.5).unwrap(), 0.5);
    let used = l.effective();
    assert_eq!(used["tmax"], "100");
    assert_eq!(used["n"], "12");
    assert_eq!(used["t0"], "0.5");
}

#[test]
fn cache_dir_layers() {
    let env = Some("/env/cache".to_string());
    let flag = Some(PathBuf::from("/flag/cache"));
    assert_eq!(Layers::new(file("cache_dir = /file/cache"), env.clone()).cache_dir(flag.clone()), flag.clone().unwrap());
    assert_eq!(Layers::new(file("cache-dir = /file/cache"), env.clone()).cache_dir(None), PathBuf::from("/file/cache"));
    assert_eq!(Layers::new(file(""), env).cache_dir(None), PathBuf::from("/env/cache"));
    assert_eq!(Layers::new(file(""), None).cache_dir(None), PathBuf::from("./cache"));
}

#[test]
fn hash_tracks_effective_values_only() {
    let mut a = Layers::new(file("n = 12\nunused = 1\n"), None);
    let mut b = Layers::new(file("n = 12\n"), Some("/elsewhere".into()));
    a.get("n", None, 0usize).unwrap();
    b.get("n", None, 0usize).unwrap();
    assert_eq!(a.hash(), b.hash());
    b.get("t0", Some(1.0), 0.0).unwrap();
    assert_ne!(a.hash(), b.hash());
}

#[test]
fn bad_values_name_the_key() {
    let mut l = Layers::new(file("tmax = lots"), None);
    let err = l.get::<f64>("tmax", None, 1.0).unwrap_err();
    assert!(err.to_string().contains("tmax"), "{err}");
    assert_eq!(err.exit_code(), 2);
    assert!(ConfigFile::parse("tmax = 1\ntmax = 2\n").is_err());
    assert!(ConfigFile::parse("no equals sign here").is_err());
}
