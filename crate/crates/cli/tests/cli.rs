use std::process::{Command, Output};

use serde_json::Value;

fn markov(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_markov"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn slope_records() {
    let out = markov(&["slope", "1/2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["markov"], "5");
    let v = json(&markov(&["slope", "2/3"]));
    assert_eq!(v["schema"], "markov.slope/1");
    assert_eq!(v["markov"], "29");
    assert_eq!(v["word"], "aabab");
    assert_eq!(v["trace"], "87");
    assert_eq!(markov(&["slope", "2/4"]).status.code(), Some(2));
    assert_eq!(markov(&["slope", "3/2"]).status.code(), Some(2));
    assert_eq!(markov(&["slope", "x"]).status.code(), Some(2));
}

#[test]
fn big_values_are_strings() {
    let v = json(&markov(&["slope", "37/100"]));
    let m = v["markov"].as_str().unwrap();
    assert!(m.len() > 20 && m.bytes().all(|b| b.is_ascii_digit()));
}

#[test]
fn verify_exit_codes() {
    for family in ["numerator", "denominator", "sum"] {
        let out = markov(&["verify", family, "--max", "100"]);
        assert_eq!(out.status.code(), Some(0), "{family}");
        let v = json(&out);
        assert_eq!(v["violations"].as_array().unwrap().len(), 0);
        assert!(v["cases"].as_u64().unwrap() > 0);
    }
    assert_eq!(
        markov(&["verify", "numerator", "--max", "1"]).status.code(),
        Some(2)
    );
    assert_eq!(
        markov(&["verify", "product", "--max", "10"]).status.code(),
        Some(2)
    );
}

#[test]
fn ball_csv_and_svg() {
    let out = markov(&["ball", "--max-q", "1", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("x,y"));
    assert_eq!(lines.count(), 12);

    let svg =
        String::from_utf8(markov(&["ball", "--max-q", "30", "--format", "svg"]).stdout).unwrap();
    assert!(svg.starts_with("<svg") && svg.trim_end().ends_with("</svg>"));
    assert_eq!(svg.matches("<polyline").count(), 1);
    assert_eq!(svg.matches("<line").count(), 0);

    let args = [
        "ball",
        "--max-q",
        "5",
        "--format",
        "svg",
        "--witness",
        "2,1",
    ];
    let svg = String::from_utf8(markov(&args).stdout).unwrap();
    assert_eq!(svg.matches("<line").count(), 3);

    assert_eq!(
        markov(&["ball", "--max-q", "1", "--format", "pdf"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(markov(&["ball", "--max-q", "0"]).status.code(), Some(2));
}

#[test]
fn output_is_reproducible_and_goes_to_file() {
    let dir = std::env::temp_dir().join(format!("markov-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("ball.csv");
    let path = file.to_str().unwrap();
    let out = markov(&["ball", "--max-q", "6", "--out", path]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let first = std::fs::read(&file).unwrap();
    markov(&["ball", "--max-q", "6", "--out", path]);
    assert_eq!(first, std::fs::read(&file).unwrap());
    assert_eq!(first, markov(&["ball", "--max-q", "6"]).stdout);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn other_subcommands() {
    let v = json(&markov(&["count", "29"]));
    assert_eq!(v["count"], 5);
    assert_eq!(v["r"], "29");
    let v = json(&markov(&["count", "100000000", "--lattice"]));
    assert_eq!(v["count"], v["lattice"]);
    assert_eq!(markov(&["count", "0"]).status.code(), Some(2));

    let v = json(&markov(&["norm", "2", "1"]));
    assert!(v["lo"].as_f64().unwrap() <= 2.703575830931402);
    assert!(v["hi"].as_f64().unwrap() >= 2.703575830931402);
    assert_eq!(markov(&["norm", "0", "0"]).status.code(), Some(2));

    let v = json(&markov(&["tree", "--depth", "2"]));
    let nodes = v["nodes"].as_array().unwrap();
    assert_eq!(nodes.len(), 7);
    assert_eq!(nodes[3]["triple"], serde_json::json!(["1", "13", "34"]));

    let out = markov(&["frobenius", "--bound", "1000", "--list"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["count"], 13);
    assert_eq!(v["numbers"][12]["markov"], "985");
}
