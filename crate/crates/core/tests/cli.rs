use std::process::{Command, Output};

fn qshuffle(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qshuffle")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let o = qshuffle(&full);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn dims_and_rank() {
    assert_eq!(stdout(&qshuffle(&["dims", "--name", "A2", "--weight", "2,1"])).trim(), "3");
    assert_eq!(stdout(&qshuffle(&["rank", "--name", "A2", "--weight", "2,1"])).trim(), "2");
    let o = qshuffle(&["rank", "--name", "G2", "--weight", "4,1", "--oracle"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("agree"));
}

#[test]
fn datum_from_file() {
    let dir = std::env::temp_dir().join(format!("qshuffle-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join("b2.json");
    std::fs::write(&p, r#"{"cartan": [[2, -2], [-1, 2]], "d": [1, 2]}"#).unwrap();
    let o = qshuffle(&["serre-check", "--datum", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    std::fs::write(&p, r#"{"cartan": [[2, -1], [-2, 2]], "d": [1, 1]}"#).unwrap();
    assert_eq!(qshuffle(&["dims", "--weight", "1,1", "--datum", p.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(qshuffle(&["dims", "--weight", "1,1", "--datum", "/nonexistent.json"]).status.code(), Some(2));
}

#[test]
fn pairing_of_a_root() {
    let v = json(&["pair", "--name", "A1", "--x", "w[1]", "--y", "w[1]"]);
    assert_eq!(v["slots"][0], "v");
    let text = stdout(&qshuffle(&["pair", "--name", "A1", "--x", "w[1]", "--y", "w[1]"]));
    assert_eq!(text, "q/(q - 1)\n");
    assert_eq!(stdout(&qshuffle(&["pair", "--name", "A2", "--x", "w[1]", "--y", "w[2]"])).trim(), "0");
}

#[test]
fn serre_image_is_zero() {
    let o = qshuffle(&["iota", "--name", "A2", "--expr", "serre(1,2)"]);
    assert_eq!(stdout(&o).trim(), "0");
    let v = json(&["iota", "--name", "B2", "--expr", "serre(2,1)", "--normalized"]);
    assert!(v["element"].as_object().unwrap().is_empty());
}

#[test]
fn shuffle_matches_iota_of_product() {
    let a = json(&["shuffle", "--name", "G2", "--x", "w[1]", "--y", "w[2,1]"]);
    let b = json(&["iota", "--name", "G2", "--expr", "w[1]*w[2,1]"]);
    assert_eq!(a, b);
}

#[test]
fn coproduct_has_primitive_terms() {
    let v = json(&["coproduct", "--name", "A2", "--expr", "w[1]"]);
    let keys: Vec<_> = v["element"].as_object().unwrap().keys().cloned().collect();
    assert_eq!(keys, vec!["1|", "|1"]);
}

#[test]
fn braid_t_and_vanishing() {
    let o = qshuffle(&["braid-t", "--name", "A2", "--i", "1", "--expr", "w[2]"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(qshuffle(&["braid-t", "--name", "A2", "--i", "1", "--expr", "w[1]"]).status.code(), Some(2));
    let v = json(&["vanishing", "--name", "B2", "--i", "2", "--expr", "w[1]"]);
    let t = v["threshold"].as_u64().unwrap() as usize;
    let vals = v["values"].as_array().unwrap();
    assert_eq!(vals.len(), t + 2);
    assert_eq!(vals[t]["zero"], false);
    assert_eq!(vals[t + 1]["zero"], true);
}

#[test]
fn verma_action() {
    let o = qshuffle(&["verma-act", "--name", "A1", "--expr", "E(1)*F(1)"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&["verma-act", "--name", "A2", "--punctures", "2", "--expr", "K(1)", "--weight", "1,0"]);
    assert_eq!(v["results"].as_array().unwrap().len(), 2);
    assert_eq!(v["slots"].as_array().unwrap().len(), 5);
}

#[test]
fn checks_exit_zero() {
    for args in [
        vec!["split-check", "--name", "A2", "--truncate", "3"],
        vec!["adjoint-check", "--name", "B2", "--truncate", "3"],
        vec!["ybe", "--name", "A1", "--truncate", "2"],
        vec!["verify", "parser"],
        vec!["verify", "ring-axioms", "--seed", "7"],
    ] {
        let o = qshuffle(&args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stdout(&o));
    }
}

#[test]
fn rmatrix_blocks() {
    let v = json(&["rmatrix", "--name", "A1", "--truncate", "1", "--full-system"]);
    let blocks = v["blocks"].as_array().unwrap();
    assert_eq!(blocks.len(), 2);
    assert_eq!(blocks[1]["full_nullity"], 1);
    assert_eq!(blocks[1]["matrix"].as_array().unwrap().len(), 2);
}

#[test]
fn braid_words() {
    let o = qshuffle(&["ybe", "--name", "A1", "--truncate", "1", "--word", "1,-1", "--strands", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("[1, 0]") && text.contains("[0, 1]"), "{text}");
    let bad = qshuffle(&["ybe", "--name", "A1", "--truncate", "1", "--word", "1", "--groups", "1,2,1"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn parse_eval_prints_canonical_form() {
    let text = stdout(&qshuffle(&["parse-eval", "--name", "A2", "--expr", "(w[1])*(w[2]) - -w[1,2]"]));
    assert_eq!(text, "w[1]*w[2] - -w[1,2]\n= 2*w[1,2]\n");
    let o = qshuffle(&["parse-eval", "--name", "A2", "--expr", "F(1,2) *\n  )"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    let o = qshuffle(&["parse-eval", "--name", "A2", "--expr", "E(1)*F(1)", "--carrier", "operator"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(qshuffle(&["parse-eval", "--name", "A2", "--expr", "E(1)"]).status.code(), Some(2));
    assert_eq!(qshuffle(&["parse-eval", "--name", "A2", "--expr", "w[3]"]).status.code(), Some(2));
}

#[test]
fn exit_codes() {
    assert_eq!(qshuffle(&["dims", "--weight", "1"]).status.code(), Some(2));
    assert_eq!(qshuffle(&["nosuch"]).status.code(), Some(2));
    let big = qshuffle(&["gram", "--name", "A2", "--weight", "5,5"]);
    assert_eq!(big.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&big.stderr).contains("words"));
    let ok = qshuffle(&["gram", "--name", "A1", "--weight", "9", "--max-weight", "9"]);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(qshuffle(&["rmatrix", "--name", "A1", "--truncate", "6"]).status.code(), Some(3));
}
