use std::io::Write;
use std::process::{Command, Output};

use quartic_trig::cli::Report;
use serde_json::Value;

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quartic-trig"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_str(stdout(o).trim()).unwrap()
}

fn floats(v: &Value) -> Vec<f64> {
    v.as_array().unwrap().iter().map(|x| x.as_f64().unwrap()).collect()
}

#[test]
fn general_form_json() {
    let o = bin(&["--coeffs", "1,0,-25,-60,-36", "--json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v = json(&o);
    assert_eq!(v["classification"]["n_real_distinct"], 4);
    assert_eq!(v["classification"]["case"], "FourReal");
    let roots: Vec<f64> = v["roots"].as_array().unwrap().iter().map(|r| r["value"].as_f64().unwrap()).collect();
    for (got, want) in roots.iter().zip([-3.0, -2.0, -1.0, 6.0]) {
        assert!((got - want).abs() <= 1e-8, "{roots:?}");
    }
    // top-level key order is fixed
    let text = stdout(&o);
    let pos: Vec<usize> = ["\"input\"", "\"depressed\"", "\"trig\"", "\"classification\"", "\"roots\""]
        .iter()
        .map(|k| text.find(k).unwrap())
        .collect();
    assert!(pos.windows(2).all(|w| w[0] < w[1]), "{text}");
}

#[test]
fn shifted_general_form() {
    // (z - 1)(z - 2)(z - 3)(z - 4) = z^4 - 10z^3 + 35z^2 - 50z + 24, scaled by 2
    let o = bin(&["--coeffs", "2,-20,70,-100,48", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["depressed"]["shift"].as_f64().unwrap(), -2.5);
    let z: Vec<f64> = v["roots"].as_array().unwrap().iter().map(|r| r["z"].as_f64().unwrap()).collect();
    for (got, want) in z.iter().zip([1.0, 2.0, 3.0, 4.0]) {
        assert!((got - want).abs() <= 1e-9, "{z:?}");
    }
}

#[test]
fn all_complex_text() {
    let o = bin(&["--depressed", "-2,0,3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("all four roots complex (Theorem: b > |a|+1)"), "{}", stdout(&o));
}

#[test]
fn verify_mode_agrees() {
    let o = bin(&["--depressed", "-4,1,1", "--verify", "--json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v = json(&o);
    assert_eq!(v["oracle"]["agrees"], true);
    assert_eq!(v["oracle"]["sturm_count"], 4);
    assert_eq!(v["classification"]["n_real_distinct"], 4);
    assert_eq!(v["oracle"]["roots"].as_array().unwrap().len(), 4);
    assert_eq!(v["oracle"]["discriminant_consistent"], true);

    let o = bin(&["--depressed", "-4,1,1", "--verify"]);
    assert!(stdout(&o).contains("agrees"));
}

#[test]
fn degenerate_status_and_hint() {
    // (t^2 - 1)^2
    let o = bin(&["--depressed", "-2,0,1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("Degenerate"));
    assert!(stderr(&o).contains("--verify"));
    let o = bin(&["--depressed", "-2,0,1", "--verify", "--json"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(json(&o)["oracle"]["multiple_roots"], true);
}

#[test]
fn nonnegative_m_has_null_trig() {
    let o = bin(&["--depressed", "0,0,-1", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert!(v["trig"].is_null());
    assert!(v["classification"]["n_int"].is_null());
    assert_eq!(v["classification"]["case"], "MNonNegConvex");
    assert_eq!(v["classification"]["n_real_distinct"], 2);
}

#[test]
fn input_errors() {
    let o = bin(&["--depressed", "-2,abc,3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("'abc'"), "{}", stderr(&o));
    assert_eq!(bin(&["--coeffs", "0,1,2,3,4"]).status.code(), Some(1));
    assert_eq!(bin(&["--depressed", "1,2"]).status.code(), Some(1));
    assert_eq!(bin(&[]).status.code(), Some(1));
    assert_eq!(bin(&["--bogus"]).status.code(), Some(1));
    assert_eq!(bin(&["--depressed", "-1,0,0", "--tol-scale", "-1"]).status.code(), Some(1));
    assert_eq!(bin(&["--help"]).status.code(), Some(0));
}

#[test]
fn json_round_trip_is_byte_identical() {
    for args in [
        vec!["--depressed", "-25,-60,-36", "--json", "--verify"],
        vec!["--depressed", "-0.3,0.1,0.0123456789", "--json", "--verify"],
        vec!["--coeffs", "3,1e-7,-2,0.1,1e5", "--json"],
        vec!["--depressed", "2,0,0", "--json", "--verify"],
    ] {
        let text = stdout(&bin(&args));
        let line = text.trim_end();
        let report: Report = serde_json::from_str(line).unwrap();
        assert_eq!(report.to_json(), line);
    }
}

#[test]
fn sample_f_csv() {
    let o = bin(&["--depressed", "-8,0,8", "--sample-f", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("theta,f"));
    let rows: Vec<(f64, f64)> = lines
        .map(|l| {
            let (t, f) = l.split_once(',').unwrap();
            (t.parse().unwrap(), f.parse().unwrap())
        })
        .collect();
    assert_eq!(rows.len(), 3);
    for (k, (theta, f)) in rows.iter().enumerate() {
        assert!((theta - std::f64::consts::PI * k as f64 / 2.0).abs() <= 1e-15);
        assert!((f - 1.0).abs() <= 1e-14);
    }

    let o = bin(&["--depressed", "-25,-60,-36", "--sample-f", "2"]);
    let rows: Vec<String> = stdout(&o).lines().skip(1).map(String::from).collect();
    let f: Vec<f64> = rows.iter().map(|r| r.split_once(',').unwrap().1.parse().unwrap()).collect();
    assert!((f[0] + 4.3008).abs() <= 1e-12 && (f[1] - 3.3792).abs() <= 1e-12);

    let o = bin(&["--depressed", "-2,0,3", "--sample-f", "5"]);
    let f: Vec<f64> = stdout(&o).lines().skip(1).map(|r| r.split_once(',').unwrap().1.parse().unwrap()).collect();
    assert!(f.iter().all(|v| (4.0..=6.0).contains(v)));

    let o = bin(&["--depressed", "1,0,1", "--sample-f", "4"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("trigonometric reduction requires m < 0"));
    assert_eq!(bin(&["--depressed", "-1,0,0", "--sample-f", "1"]).status.code(), Some(1));
}

#[test]
fn batch_mode() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "-25,-60,-36\n-2,0,3\n1,0,-4,1,1\nx,y,z\n\n-1,0.125,-0.0625").unwrap();
    let o = bin(&["--batch", file.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let records: Vec<Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(records.len(), 6);
    let n: Vec<Value> = records.iter().map(|r| r["classification"]["n_real_distinct"].clone()).collect();
    assert_eq!(n[..3], [Value::from(4), Value::from(0), Value::from(4)]);
    assert_eq!(records[3]["line"], 4);
    assert!(records[3]["error"].as_str().unwrap().contains("'x'"));
    assert_eq!(records[4]["line"], 5);
    assert_eq!(records[5]["classification"]["case"], "TwoReal_c");
    assert_eq!(floats(&records[2]["input"]["coeffs"]), [1.0, 0.0, -4.0, 1.0, 1.0]);
}

#[test]
fn batch_edge_cases() {
    let empty = tempfile::NamedTempFile::new().unwrap();
    let o = bin(&["--batch", empty.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).is_empty());

    assert_eq!(bin(&["--batch", "/nonexistent/quartics.txt"]).status.code(), Some(1));

    // order is preserved under parallel evaluation
    let mut file = tempfile::NamedTempFile::new().unwrap();
    for k in 0..200 {
        writeln!(file, "-1,0,{}", k as f64 / 100.0 - 1.0).unwrap();
    }
    let o = bin(&["--batch", file.path().to_str().unwrap(), "--verify"]);
    assert_eq!(o.status.code(), Some(0));
    let qs: Vec<f64> = stdout(&o)
        .lines()
        .map(|l| serde_json::from_str::<Value>(l).unwrap()["input"]["coeffs"][2].as_f64().unwrap())
        .collect();
    assert_eq!(qs.len(), 200);
    assert!(qs.windows(2).all(|w| w[0] < w[1]));
}
