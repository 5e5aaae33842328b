use std::path::Path;
use std::process::{Command, Output};

use critline::fixtures::{check_fixtures, read_fixtures};

fn critline(args: &[&str], cache: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_critline"))
        .args(args)
        .env("CRITLINE_CACHE", cache)
        .output()
        .unwrap()
}

#[test]
fn eval_w_at_one_half() {
    let dir = tempfile::tempdir().unwrap();
    let out = critline(&["eval", "--fn", "W", "--s", "0.5,0"], dir.path());
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "-1");
}

#[test]
fn zeros_prints_a_headed_table_and_caches_it() {
    let dir = tempfile::tempdir().unwrap();
    let first = critline(&["zeros", "--fn", "Tplus", "--tmax", "30"], dir.path());
    assert!(first.status.success(), "{}", String::from_utf8_lossy(&first.stderr));
    let text = String::from_utf8(first.stdout).unwrap();
    assert!(text.starts_with("# critline zero table\n"));
    assert!(text.contains("function,index,t,residual,width\n"));
    let rows: Vec<&str> = text.lines().filter(|l| l.starts_with("Tplus,")).collect();
    assert!(!rows.is_empty());
    let t1: f64 = rows[0].split(',').nth(2).unwrap().parse().unwrap();
    assert!((t1 - 6.97468).abs() < 1e-4, "{t1}");

    let csvs = std::fs::read_dir(dir.path()).unwrap().filter(|e| {
        e.as_ref().unwrap().path().extension().is_some_and(|x| x == "csv")
    });
    assert_eq!(csvs.count(), 1);
    let second = critline(&["zeros", "--fn", "Tplus", "--tmax", "30"], dir.path());
    assert_eq!(String::from_utf8(second.stdout).unwrap(), text);
}

#[test]
fn config_errors_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let out = critline(&["eval", "--fn", "nonsense", "--s", "0.5,0"], dir.path());
    assert_eq!(out.status.code(), Some(2));

    let cfg = dir.path().join("bad.conf");
    std::fs::write(&cfg, "tmax = 1\ntmax = 2\n").unwrap();
    let out = critline(&["--config", cfg.to_str().unwrap(), "zeros", "--fn", "Tplus"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("tmax"));
}

#[test]
fn config_file_supplies_missing_flags() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.conf");
    std::fs::write(&cfg, "# point evaluation\nfn = W\ns = 0.5,0\n").unwrap();
    let out = critline(&["--config", cfg.to_str().unwrap(), "eval"], dir.path());
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "-1");
}

#[test]
fn point_functions_match_the_oracle_fixtures() {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/tests/fixtures/oracle.csv");
    let rows = read_fixtures(&path).unwrap();
    let checks = check_fixtures(&rows);
    let evaluated: Vec<_> = checks.iter().filter(|c| c.got.is_some()).collect();
    assert!(evaluated.len() >= 50, "only {} evaluable rows", evaluated.len());
    for c in evaluated {
        let tol = 10f64.powi(-(c.row.digits.min(10) as i32)) * 10.0;
        assert!(c.rel_err < tol.max(1e-9), "{} at {}: rel err {:.1e}", c.row.function, c.row.input, c.rel_err);
    }
}
