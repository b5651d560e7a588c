use std::io::Write;
use std::process::{Command, Output, Stdio};

fn kshape(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_kshape"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    if let Some(s) = stdin {
        child.stdin.take().unwrap().write_all(s.as_bytes()).unwrap();
    }
    drop(child.stdin.take());
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn poset_counts_and_dot() {
    let dir = std::env::temp_dir().join(format!("kshape-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let dot = dir.join("p.dot");
    let o = kshape(&["poset", "--k", "3", "--size", "5", "--dot", dot.to_str().unwrap()], None);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("k=3 N=5: 10 vertices"));
    let text = std::fs::read_to_string(&dot).unwrap();
    assert!(text.starts_with("digraph"));
    assert!(text.contains("\"5,3,1\""));
}

#[test]
fn paths_and_classes() {
    let o = kshape(&["paths", "--k", "3", "--from", "3,1,1,1", "--to", "4,2,1,1"], None);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 2);
    let o = kshape(&["paths", "--k", "3", "--from", "3,1,1,1", "--to", "4,2,1,1", "--classes"], None);
    assert!(stdout(&o).starts_with("2 paths in 1 classes"));
}

#[test]
fn charge_from_stdin() {
    let o = kshape(&["charge", "--k", "2", "--tableau", "-", "--cocharge"], Some("1 2 3 / 3\n"));
    assert!(o.status.success());
    assert_eq!(stdout(&o), "charge 2\ncocharge 0\n");
}

#[test]
fn bijection_and_descent() {
    let o = kshape(&["bijection", "--k", "2", "--tableau", "-"], Some("1 2 3 / 3"));
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("lower 1 2 3 / 2 3 / 3"), "{s}");
    assert!(s.contains("charge 2 cocharge 0"));

    let o = kshape(&["bijection", "--tableau", "-", "--descend", "--json"], Some("1 2 3"));
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["total_charge"], 3);
}

#[test]
fn verify_writes_report() {
    let path = std::env::temp_dir().join(format!("kshape-report-{}.json", std::process::id()));
    let o = kshape(&["verify", "--check", "worked-examples", "--report", path.to_str().unwrap()], None);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("PASS [theorem] worked-examples"));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["failures"], 0);
}

#[test]
fn exit_codes() {
    assert_eq!(kshape(&["verify", "--check", "nope"], None).status.code(), Some(2));
    assert_eq!(kshape(&["paths", "--k", "3", "--from", "3,3", "--to", "4"], None).status.code(), Some(2));
    assert_eq!(kshape(&["charge", "--k", "2", "--tableau", "-"], Some("2 1")).status.code(), Some(2));
    assert_eq!(kshape(&["bogus"], None).status.code(), Some(2));
    let o = kshape(&["verify", "--check", "sigma-commutation", "--k-max", "3", "--n-max", "6", "--vars", "4"], None);
    assert_eq!(o.status.code(), Some(1));
}
