use std::path::PathBuf;
use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_ziegler"))
}

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn stdout(args: &[&str]) -> (bool, String, String) {
    let out = bin().args(args).output().expect("binary runs");
    (
        out.status.success(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn betti_of_b() {
    let (ok, out, _) = stdout(&["betti", fixture("B.arr").to_str().unwrap()]);
    assert!(ok);
    assert_eq!(out.trim(), "d=(6_6), c=(7_4)");
}

#[test]
fn computational_errors_exit_nonzero() {
    let dir = std::env::temp_dir().join(format!("ziegler-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.arr");
    std::fs::write(&bad, "P 2 over Q\nx\ny\n2x\n").unwrap();
    let (ok, _, err) = stdout(&["betti", bad.to_str().unwrap()]);
    assert!(!ok);
    assert!(err.contains("lines 2 and 4"), "{err}");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn regress_matches_golden_files() {
    let (ok, out, err) = stdout(&["regress"]);
    assert!(ok, "{err}");
    assert!(out.lines().all(|l| l.starts_with("PASS ")), "{out}");
}

#[test]
fn regress_is_deterministic() {
    let base = std::env::temp_dir().join(format!("ziegler-golden-{}", std::process::id()));
    let (a, b) = (base.join("a"), base.join("b"));
    for d in [&a, &b] {
        let (ok, _, err) = stdout(&["regress", "--bless", "--golden", d.to_str().unwrap()]);
        assert!(ok, "{err}");
    }
    let mut names: Vec<_> = std::fs::read_dir(&a).unwrap().map(|e| e.unwrap().file_name()).collect();
    names.sort();
    assert!(!names.is_empty());
    for n in names {
        assert_eq!(std::fs::read(a.join(&n)).unwrap(), std::fs::read(b.join(&n)).unwrap(), "{n:?}");
    }
    std::fs::remove_dir_all(&base).unwrap();
}
