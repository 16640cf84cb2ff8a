//! Command-line behavior: verbs, exit codes, and text/JSON agreement.

use std::process::Command;

fn run(args: &[&str]) -> (Option<i32>, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_aligncount"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code(),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

#[test]
fn count_verb() {
    let (code, stdout, _) = run(&["count", "--steps", "{(1,1),(1,2),(2,1)}", "--lengths", "4,5"]);
    assert_eq!(code, Some(0));
    assert_eq!(stdout.trim(), "7");
    let (code, stdout, _) = run(&["count", "--steps", "unit(3)", "--lengths", "1,2,3"]);
    assert_eq!(code, Some(0));
    assert_eq!(stdout.trim(), "239");
    let (code, stdout, _) = run(&["count", "--steps", "box(1..2,3)", "--lengths", "10,10,10"]);
    assert_eq!(code, Some(0));
    assert_eq!(stdout.trim(), "68933");
}

#[test]
fn parts_verb() {
    let (code, stdout, _) =
        run(&["parts", "--steps", "{(1,1),(1,2),(2,1)}", "--lengths", "4,5", "-k", "3"]);
    assert_eq!(code, Some(0));
    assert_eq!(stdout.trim(), "3");
}

#[test]
fn enumerate_agrees_with_count() {
    let (code, listing, _) = run(&["enumerate", "--steps", "unit(2)", "--lengths", "3,3"]);
    assert_eq!(code, Some(0));
    let (_, total, _) = run(&["count", "--steps", "unit(2)", "--lengths", "3,3"]);
    assert_eq!(listing.lines().count().to_string(), total.trim());
}

#[test]
fn enumerate_cap_exit_code() {
    let (code, _, stderr) =
        run(&["enumerate", "--steps", "unit(2)", "--lengths", "8,8", "--cap", "10"]);
    assert_eq!(code, Some(3));
    assert!(stderr.contains("265729"), "stderr: {}", stderr);
}

#[test]
fn usage_errors_exit_2() {
    let (code, _, stderr) = run(&["count", "--steps", "cube(2)", "--lengths", "1,1"]);
    assert_eq!(code, Some(2));
    assert!(stderr.contains("cube"));
    let (code, _, _) = run(&["count", "--steps", "unit(2)", "--lengths", "1,2,3"]);
    assert_eq!(code, Some(2));
    let (code, _, _) = run(&["count", "--steps", "{(0,0)}", "--lengths", "1,1"]);
    assert_eq!(code, Some(2));
    let (code, _, _) = run(&["bogus-verb"]);
    assert_eq!(code, Some(2));
    // Formula arity errors name the problem.
    let (code, _, stderr) = run(&["formula", "--id", "star", "--lengths", "1,2,3"]);
    assert_eq!(code, Some(2));
    assert!(stderr.contains("dimension"));
}

#[test]
fn json_and_text_agree() {
    let (_, text, _) = run(&["count", "--steps", "halfopen2", "--lengths", "4,4"]);
    let (_, json, _) = run(&["count", "--steps", "halfopen2", "--lengths", "4,4", "--json"]);
    let doc: serde_json::Value = serde_json::from_str(json.trim()).unwrap();
    assert_eq!(doc["rows"][0]["count"].as_str().unwrap(), text.trim());
    assert_eq!(doc["command"], "count");

    let (_, text5, _) = run(&["table5", "--max", "3"]);
    let (_, json5, _) = run(&["table5", "--max", "3", "--json"]);
    let doc5: serde_json::Value = serde_json::from_str(json5.trim()).unwrap();
    let line: Vec<&str> =
        text5.lines().find(|l| l.starts_with("3 ")).unwrap().split_whitespace().collect();
    let row = &doc5["rows"][2];
    assert_eq!(line[1], row["exact"].as_str().unwrap());
    let approx_text: f64 = line[2].parse().unwrap();
    assert!((approx_text - row["approx"].as_f64().unwrap()).abs() < 0.005);
}

#[test]
fn sample_verb_is_deterministic() {
    let args = ["sample", "--steps", "{(1,1),(1,2),(2,1)}", "--lengths", "4,5", "--seed", "9", "-n", "5"];
    let (code, first, _) = run(&args);
    assert_eq!(code, Some(0));
    assert_eq!(first.lines().count(), 5);
    let (_, second, _) = run(&args);
    assert_eq!(first, second);
}

#[test]
fn sample_impossible_lengths_is_usage_error() {
    let (code, _, stderr) = run(&["sample", "--steps", "{(2,2)}", "--lengths", "3,3"]);
    assert_eq!(code, Some(2));
    assert!(stderr.contains("no alignment"));
}

#[test]
fn diagonal_verb() {
    let (code, stdout, _) = run(&["diagonal", "--steps", "unit(3)", "--max", "4"]);
    assert_eq!(code, Some(0));
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(lines, vec!["1 13", "2 409", "3 16081", "4 699121"]);
}

#[test]
fn formula_and_approx_verbs() {
    let (code, stdout, _) = run(&["formula", "--id", "slowinski", "--lengths", "1,2,3"]);
    assert_eq!(code, Some(0));
    assert_eq!(stdout.trim(), "239");

    let (code, stdout, _) = run(&["formula", "--list"]);
    assert_eq!(code, Some(0));
    assert!(stdout.contains("slowinski"));
    assert!(stdout.contains("box12_asym"));

    let (code, stdout, _) = run(&["approx", "--id", "box12_asym", "--lengths", "10,10,10"]);
    assert_eq!(code, Some(0));
    let v: f64 = stdout.trim().parse().unwrap();
    assert!((v - 72418.85).abs() < 0.01);

    let (code, stdout, _) =
        run(&["approx", "--id", "comp_boundedM_asym", "--lengths", "20", "--m", "2"]);
    assert_eq!(code, Some(0));
    let v: f64 = stdout.trim().parse().unwrap();
    assert!((v - 10946.0).abs() / 10946.0 < 0.01);

    let (code, stdout, _) = run(&["approx", "--id", "unitcube3_growth"]);
    assert_eq!(code, Some(0));
    let v: f64 = stdout.trim().parse().unwrap();
    assert!((v - 56.9476).abs() < 0.001);

    // Exact id under approx (and vice versa) is a usage error.
    let (code, _, _) = run(&["approx", "--id", "star", "--lengths", "4,5"]);
    assert_eq!(code, Some(2));
    let (code, _, _) = run(&["formula", "--id", "whitney_asym", "--lengths", "4,4"]);
    assert_eq!(code, Some(2));
}

#[test]
fn gf_verb() {
    let (code, stdout, _) = run(&["gf", "--steps", "unit(2)", "--box", "2,2"]);
    assert_eq!(code, Some(0));
    assert!(stdout.lines().any(|l| l == "(2,2) 13"));
    assert!(stdout.lines().any(|l| l == "(0,0) 1"));

    let (code, stdout, _) = run(&["gf", "--steps", "unit(2)", "--box", "2,2", "-k", "2"]);
    assert_eq!(code, Some(0));
    assert!(stdout.lines().any(|l| l == "(1,1) 2"));
}

#[test]
fn verify_verb_exits_zero() {
    let (code, stdout, _) = run(&["verify", "--max-len", "5"]);
    assert_eq!(code, Some(0));
    assert!(stdout.contains("0 failed"), "output: {}", stdout);
    let (code_seq, stdout_seq, _) = run(&["verify", "--max-len", "4", "--sequential"]);
    assert_eq!(code_seq, Some(0));
    assert!(stdout_seq.contains("0 failed"));
}
