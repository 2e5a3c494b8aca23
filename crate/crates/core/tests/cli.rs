use std::process::{Command, Output};

use hfroot::report::module_from_json;

fn hf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hf"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn hf_json_for_sigma_2_7_17() {
    let o = hf(&["hf", "brieskorn", "2", "7", "17", "--json"]);
    assert!(o.status.success());
    let (name, m) = module_from_json(&stdout(&o)).unwrap();
    assert_eq!(name, "-Sigma(2,7,17)");
    assert_eq!(m.d, 0);
    let towers: Vec<_> = m.towers().map(|(t, k)| (t.bottom, t.length, k)).collect();
    assert_eq!(towers, vec![(0, 1, 3), (2, 1, 2), (6, 1, 2)]);
}

#[test]
fn json_round_trip() {
    let dir = std::env::temp_dir().join(format!("hf-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    for args in [
        &["brieskorn", "2", "7", "17"][..],
        &["brieskorn", "3", "5", "31"],
        &["surgery", "2", "7", "2", "+"],
        &["surgery", "3", "4", "2", "-"],
    ] {
        let mut a = vec!["hf"];
        a.extend(args);
        a.push("--json");
        let first = stdout(&hf(&a));
        let path = dir.join("m.json");
        std::fs::write(&path, &first).unwrap();
        let again = hf(&["hf", "--from-json", path.to_str().unwrap(), "--json"]);
        assert!(again.status.success());
        assert_eq!(stdout(&again), first);
    }
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn dot_outputs_parse() {
    for args in [
        vec!["root", "brieskorn", "2", "7", "17", "--dot"],
        vec!["root", "seifert", "e0=-2", "arms=2/1,5/3,9/8", "--dot"],
        vec!["plumb", "brieskorn", "2", "3", "5", "--dot"],
        vec!["plumb", "surgery", "2", "5", "3", "-", "--dot"],
    ] {
        let o = hf(&args);
        assert!(o.status.success(), "{args:?}");
        hfroot::dot::check(&stdout(&o)).unwrap();
    }
}

#[test]
fn extrema_table() {
    let o = hf(&["tau", "brieskorn", "2", "5", "9", "--extrema"]);
    let text = stdout(&o);
    assert!(text.contains("reduced: [0, 1, 0, 1, 0]"), "{text}");
    assert!(text.contains("min  1  8  10  0"), "{text}");
}

#[test]
fn compare_surgery_family() {
    let o = hf(&["compare", "--family", "2,5,minus1", "--n", "1..3", "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 3);
    assert!(rows
        .iter()
        .all(|r| r["equal"] == true && r["source"] == "thm_minus"));
}

#[test]
fn compare_table_reports_offset_and_domain_edge() {
    let o = hf(&[
        "compare",
        "--family",
        "2,5,minus1",
        "--n",
        "2",
        "--table",
        "--json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[0]["equal"], false);
    assert_eq!(v[0]["grading_offsets"]["indexed"], 2);
    let o = hf(&["compare", "--family", "2,7,minus5", "--n", "1..2", "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v[0]["domain_edge"].is_string());
    assert_eq!(v[1]["equal"], true);
}

#[test]
fn sweep_is_sorted_csv() {
    let o = hf(&[
        "sweep",
        "--family",
        "2,7,plus3",
        "--family",
        "2,5,minus1",
        "--n",
        "1..3",
    ]);
    assert!(o.status.success());
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("family,n,d,tower_bottom,tower_len,mult"));
    let rows: Vec<&str> = lines.collect();
    assert!(rows[0].starts_with("\"2,5,minus1\",1,-2,-2,1,2"), "{text}");
    assert!(
        rows.last().unwrap().starts_with("\"2,7,plus3\",3,"),
        "{text}"
    );
    let again = stdout(&hf(&[
        "sweep",
        "--family",
        "2,5,minus1",
        "--family",
        "2,7,plus3",
        "--n",
        "1..3",
    ]));
    assert_eq!(again, text);
}

#[test]
fn exit_codes() {
    let code = |a: &[&str]| hf(a).status.code().unwrap();
    assert_eq!(code(&["hf", "brieskorn", "2", "3", "5"]), 0);
    assert_eq!(code(&["hf", "brieskorn", "2", "4", "5"]), 1);
    assert_eq!(code(&["delta", "--cover", "6", "--knot", "5,7"]), 1);
    assert_eq!(code(&["compare", "--family", "2,9,plus7", "--n", "1"]), 1);
    assert_eq!(
        code(&["hf", "brieskorn", "2", "3", "5", "--json", "--dot"]),
        2
    );
    assert_eq!(code(&["tau"]), 2);
    assert_eq!(code(&["sweep", "--n", "0..2"]), 2);
    assert_eq!(code(&[]), 2);
}

#[test]
fn sigma_2_3_5_has_d_minus_two() {
    let text = stdout(&hf(&["hf", "brieskorn", "2", "3", "5"]));
    assert!(text.contains("d = -2"), "{text}");
}
