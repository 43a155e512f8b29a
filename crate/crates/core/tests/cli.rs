use std::process::{Command, Output};

fn ajs(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ajs")).args(args).output().expect("run ajs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn build_q0_in_a2_has_six_alcoves() {
    let o = ajs(&["build", "--type", "A2", "--word", "", "--base", "Q0", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["components"].as_array().unwrap().len(), 6);
    let t = ajs(&["build", "--type", "A2", "--word", "", "--base", "Q0"]);
    assert!(stdout(&t).starts_with("Q0: 6 alcoves"));
}

#[test]
fn translated_unit_in_a1_is_shaped_like_q0() {
    let a = ajs(&["build", "--type", "A1", "--word", "s0", "--base", "P0", "--format", "json"]);
    let b = ajs(&["build", "--type", "A1", "--base", "Q0", "--format", "json"]);
    let (a, b): (serde_json::Value, serde_json::Value) =
        (serde_json::from_str(&stdout(&a)).unwrap(), serde_json::from_str(&stdout(&b)).unwrap());
    assert_eq!(a["components"], b["components"]);
    assert_eq!(a["edges"].as_array().unwrap().len(), b["edges"].as_array().unwrap().len());
}

#[test]
fn bad_input_exits_2() {
    assert_eq!(ajs(&["build", "--type", "A2", "--word", "s0 s7"]).status.code(), Some(2));
    assert_eq!(ajs(&["build", "--type", "A2", "--word", "t1"]).status.code(), Some(2));
    assert_eq!(ajs(&["build", "--type", "E8"]).status.code(), Some(2));
    assert_eq!(ajs(&["build", "--field", "F2"]).status.code(), Some(2));
    assert_eq!(ajs(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(ajs(&["verify", "kipptrans", "--tilt-by", "sA"]).status.code(), Some(2));
    assert_eq!(ajs(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn verify_exit_codes() {
    let o = ajs(&["verify", "alcove-lemmas", "--type", "A2", "--window", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("PASS alcove-lemmas"));
    assert_eq!(ajs(&["verify", "q0dual", "--type", "A1"]).status.code(), Some(0));
    let k = ajs(&["verify", "kipptrans", "--type", "A2", "--tilt-by", "e", "--max-word", "1", "--format", "json"]);
    assert_eq!(k.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&k)).unwrap();
    assert_eq!(v["passed"], false);
    assert!(v["results"][0]["report"]["clauses"]["kipptrans equality"]["failed"].as_u64().unwrap() > 0);
}

#[test]
fn dump_load_round_trip_and_corruption() {
    let dir = std::env::temp_dir().join(format!("ajs-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("m.json");
    let p = path.to_str().unwrap();
    for (ty, word, base) in [("A1", "", "P0"), ("A2", "s0 s1 sA", "P0"), ("A2", "s1", "Q0")] {
        let d = ajs(&["dump", "--type", ty, "--word", word, "--base", base, "--field", "F7", "--out", p]);
        assert_eq!(d.status.code(), Some(0));
        let original = std::fs::read_to_string(&path).unwrap();
        let l = ajs(&["load", p, "--format", "json"]);
        assert_eq!(l.status.code(), Some(0), "{}", String::from_utf8_lossy(&l.stderr));
        assert_eq!(stdout(&l).trim(), original.trim());
    }
    // a matrix entry that is not a power of the edge root
    let text = std::fs::read_to_string(&path).unwrap();
    let mut v: serde_json::Value = serde_json::from_str(&text).unwrap();
    v["edges"][0]["columns"][0][0] = serde_json::Value::String("(a1+a2)^(".into());
    std::fs::write(&path, v.to_string()).unwrap();
    assert_eq!(ajs(&["load", p]).status.code(), Some(2));
    v["edges"][0]["columns"][0][0] = serde_json::Value::String("a1+a2".into());
    std::fs::write(&path, v.to_string()).unwrap();
    assert_eq!(ajs(&["load", p]).status.code(), Some(2));
    std::fs::write(&path, "{\"format\": 3}").unwrap();
    assert_eq!(ajs(&["load", p]).status.code(), Some(2));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn witness_dump_carries_shift_and_verdict() {
    let o = ajs(&["dump", "--type", "A2", "--word", "s0", "--base", "Q0", "--witness"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["shift"], -8);
    assert_eq!(v["verdict"]["backward_after_forward_is_id"], true);
    assert!(!v["forward"].as_array().unwrap().is_empty());
}
