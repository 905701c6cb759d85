use std::path::PathBuf;

use sqfree_ara::cli::json::{AnalysisJson, IdealJson, VerifyJson};
use sqfree_ara::cli::run;
use sqfree_ara::fixtures::example1;
use sqfree_ara::sv::Method;

struct Output {
    code: u8,
    stdout: String,
    stderr: String,
}

fn cli(args: &[&str], stdin: &str) -> Output {
    let argv = std::iter::once("sqfree-ara").chain(args.iter().copied()).map(String::from);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(argv, &mut stdin.as_bytes(), &mut out, &mut err);
    Output { code, stdout: String::from_utf8(out).unwrap(), stderr: String::from_utf8(err).unwrap() }
}

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "data", name].iter().collect();
    p.to_string_lossy().into_owned()
}

#[test]
fn analyze_text_report() {
    let o = cli(&["analyze", &data("example1.ideal")], "");
    assert_eq!(o.code, 0, "{}", o.stderr);
    for needle in ["mu = 8", "|M_i|: x1:2 x2:3 x3:1 x4:3", "tau = 5", "nu = 3", "ara = 5", "37/5", "conjectural"] {
        assert!(o.stdout.contains(needle), "missing {needle:?} in\n{}", o.stdout);
    }
}

#[test]
fn analyze_json_from_stdin() {
    let text = std::fs::read_to_string(data("example2.ideal")).unwrap();
    let o = cli(&["analyze", "--json", "-"], &text);
    assert_eq!(o.code, 0);
    let doc: AnalysisJson = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(doc.schema, 1);
    assert_eq!(doc.bounds.exact, Some(6));
    assert_eq!(doc.primes.r, 6);
    assert_eq!(doc.pd.as_ref().unwrap().pd, 6);
    assert!(doc.certificates.iter().all(|c| c.verified));
}

#[test]
fn analysis_output_is_valid_ideal_input() {
    let first = cli(&["analyze", "--json", "--no-search"], "n=4; x1*x2, x3*x4");
    let second = cli(&["analyze", "--json", "--no-search"], &first.stdout);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn json_ideal_input() {
    let o = cli(&["pd", "--json"], r#"{"n": 3, "generators": ["x1*x2", "x2*x3"]}"#);
    assert_eq!(o.code, 0);
    assert!(o.stdout.contains("\"pd\": 2"), "{}", o.stdout);
}

#[test]
fn verify_accepts_known_partitions() {
    for name in ["example1.partition", "example2.partition"] {
        let o = cli(&["verify", &data(name)], "");
        assert_eq!(o.code, 0, "{name}: {}", o.stdout);
        assert!(o.stdout.starts_with("ok"));
    }
    let o = cli(&["verify", &data("example1.partition"), "--ideal", &data("example1.ideal"), "--json"], "");
    let v: VerifyJson = serde_json::from_str(&o.stdout).unwrap();
    assert!(v.ok);
    assert_eq!(v.polynomials, ["x1*x2", "x1*x3 + x2*x4", "x2*x7 + x4*x6", "x4*x5 + x6*x8", "x6*x9"]);
}

#[test]
fn verify_reports_violation() {
    let o = cli(&["verify"], "n=9;\n[x1*x3, x2*x4]\n[x1*x2]\n[x2*x7, x4*x6]\n[x4*x5, x6*x8]\n[x6*x9]\n");
    assert_eq!(o.code, 1);
    assert!(o.stdout.contains("violation: P_0 is not a singleton"), "{}", o.stdout);

    let o = cli(&["verify", &data("example1.partition"), "--ideal", &data("example2.ideal")], "");
    assert_eq!(o.code, 1);
    assert!(o.stdout.contains("uncovered generators: x6*x7"), "{}", o.stdout);
}

#[test]
fn emitted_partitions_verify() {
    let ideal = std::fs::read_to_string(data("example1.ideal")).unwrap();
    for method in ["prop1", "lcm", "search"] {
        let o = cli(&["construct", "--method", method, "--emit-partition"], &ideal);
        assert_eq!(o.code, 0);
        let v = cli(&["verify", "--ideal", &data("example1.ideal")], &o.stdout);
        assert_eq!(v.code, 0, "{method}: {}", v.stdout);
    }
}

#[test]
fn construct_json_and_power() {
    let o = cli(&["construct", "--method", "search", "--json", "--power", "2"], "n=2; x1, x2");
    assert_eq!(o.code, 0);
    let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["method"], "search");
    assert_eq!(v["polynomials"], serde_json::json!(["x1^2", "x2^2"]));
}

#[test]
fn parse_errors_exit_two_with_position() {
    let o = cli(&["analyze"], "n=3;\nx1*x2,\n  x1*y3\n");
    assert_eq!(o.code, 2);
    assert!(o.stderr.contains("line 3, column 6"), "{}", o.stderr);

    let o = cli(&["analyze"], "n=2; x1*x2, x3");
    assert_eq!(o.code, 2);
    assert!(o.stderr.contains("out of range"), "{}", o.stderr);

    let o = cli(&["analyze"], "n=2; x1^2");
    assert_eq!(o.code, 2);
    assert!(o.stderr.contains("not squarefree"), "{}", o.stderr);

    assert_eq!(cli(&["analyze"], "n=2; 1").code, 2);
    assert_eq!(cli(&["frobnicate"], "").code, 2);
    assert_eq!(cli(&["analyze", "/nonexistent/ideal"], "").code, 2);
}

#[test]
fn dropped_generators_warn() {
    let o = cli(&["pd"], "n=3; x1*x2, x1*x2, x1*x2*x3");
    assert_eq!(o.code, 0);
    assert!(o.stderr.contains("warning: duplicate generator x1*x2 dropped"));
    assert!(o.stderr.contains("multiple of x1*x2"));
}

#[test]
fn guards_and_budgets_exit_three() {
    let eleven: Vec<String> = (1..=11).map(|i| format!("x{i}")).collect();
    let o = cli(&["construct", "--method", "search"], &format!("n=11; {}", eleven.join(", ")));
    assert_eq!(o.code, 3, "{}", o.stderr);

    let o = cli(&["construct", "--method", "lcm", "--max-steps", "1", &data("example1.ideal")], "");
    assert_eq!(o.code, 3);
    assert!(o.stderr.contains("budget"));

    let o = cli(&["construct", "--method", "search", "--budget", "3", &data("example1.ideal")], "");
    assert_eq!(o.code, 3);
    assert!(o.stdout.contains("budget exhausted"));

    let wide: Vec<String> = (1..=21).map(|i| format!("x{i}")).collect();
    let o = cli(&["pd"], &format!("n=21; {}", wide.join("*")));
    assert_eq!(o.code, 3);
}

#[test]
fn help_and_version() {
    let o = cli(&["--help"], "");
    assert_eq!(o.code, 0);
    assert!(o.stdout.contains("analyze"));
    assert_eq!(cli(&["--version"], "").code, 0);
}

#[test]
fn bench_json_summary() {
    let o = cli(&["bench", "--json", "--samples", "1", "--exhaustive-max-n", "2"], "");
    assert_eq!(o.code, 0);
    let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["summary"]["ideals"], 1 + 3 + 3);
    assert_eq!(v["summary"]["lyubeznik_exceeded"], 0);
}

#[test]
fn ideal_json_round_trip_through_cli() {
    let doc = IdealJson::new(&example1(), Some("ex1"));
    let o = cli(&["analyze", "--json", "--no-pd", "--no-search"], &serde_json::to_string(&doc).unwrap());
    let back: AnalysisJson = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(back.ideal, doc);
    assert!(back.bounds.certificate_uppers.contains_key(&Method::Prop1));
}

#[test]
fn construct_search_on_example1() {
    let o = cli(&["construct", "--method", "search", &data("example1.ideal")], "");
    assert_eq!(o.code, 0);
    assert!(o.stdout.starts_with("certificate search (5 polynomials, verified)"), "{}", o.stdout);
}
