use popkit::cli::{run, EXIT_LIMIT, EXIT_OK, EXIT_USAGE, EXIT_VALIDATION};
use popkit::decode;
use serde_json::Value;

struct Output {
    code: i32,
    stdout: Vec<u8>,
    stderr: String,
}

fn popkit(args: &[&str], stdin: &[u8]) -> Output {
    let mut argv = vec!["popkit"];
    argv.extend_from_slice(args);
    let mut input = stdin;
    let (mut stdout, mut stderr) = (Vec::new(), Vec::new());
    let code = run(argv, &mut input, &mut stdout, &mut stderr);
    Output { code, stdout, stderr: String::from_utf8(stderr).unwrap() }
}

fn ok(args: &[&str], stdin: &[u8]) -> Vec<u8> {
    let out = popkit(args, stdin);
    assert_eq!(out.code, EXIT_OK, "{args:?}: {}", out.stderr);
    out.stdout
}

fn json(bytes: &[u8]) -> Value {
    serde_json::from_slice(bytes).unwrap()
}

#[test]
fn gen_then_check() {
    let doc = ok(&["gen", "alternating", "--x", "2,3,1", "--y", "3,2,1", "--sigma", "++---+"], b"");
    let p = decode(&doc).unwrap();
    assert_eq!(p.len(), 6);
    let report = json(&ok(&["check"], &doc));
    assert_eq!(report["simple"], true);
    assert_eq!(report["convex"], false);
}

#[test]
fn p2_is_not_simple() {
    let doc = ok(&["gen", "p2", "--k", "4"], b"");
    assert_eq!(json(&ok(&["check"], &doc))["simple"], false);
}

#[test]
fn p1_search_is_proven_impossible() {
    let doc = ok(&["gen", "p1", "--k", "3"], b"");
    let outcome = json(&ok(&["search", "--max-depth", "100"], &doc));
    assert_eq!(outcome["status"], "ProvenImpossible");
    assert_eq!(outcome["sequence"], Value::Null);
}

#[test]
fn depth_limit_exits_with_limit_code() {
    let doc = ok(&["gen", "p1", "--k", "3"], b"");
    let out = popkit(&["search", "--max-depth", "1"], &doc);
    assert_eq!(out.code, EXIT_LIMIT);
    assert_eq!(json(&out.stdout)["status"], "DepthExhausted");
}

#[test]
fn apply_is_deterministic() {
    let doc = ok(&["gen", "p1", "--k", "3"], b"");
    let a = ok(&["apply", "pop", "--vertex", "1"], &doc);
    let b = ok(&["apply", "pop", "--vertex", "1"], &doc);
    assert_eq!(a, b);
    // metadata from the input is carried along
    assert!(json(&a)["metadata"]["name"].is_string());
}

#[test]
fn three_pop_chain_through_cli() {
    let mut doc = ok(&["gen", "alternating", "--x", "2,3,1", "--y", "3,2,1", "--sigma", "++---+"], b"");
    for v in ["1", "0", "5"] {
        doc = ok(&["apply", "pop", "--vertex", v], &doc);
    }
    let expected = ok(&["gen", "alternating", "--x", "2,3,1", "--y", "3,2,1", "--sigma", "------"], b"");
    assert_eq!(json(&doc)["vertices"], json(&expected)["vertices"]);
}

#[test]
fn pockets_and_flip() {
    let doc = br#"{"vertices": [["0","0"],["4","0"],["4","4"],["2","1"],["0","4"]]}"#;
    let pockets = json(&ok(&["pockets"], doc));
    assert_eq!(pockets["pockets"].as_array().unwrap().len(), 1);
    let flipped = ok(&["apply", "flip", "--pocket", "0"], doc);
    assert_eq!(json(&ok(&["check"], &flipped))["convex"], true);
}

#[test]
fn convexify_reports_on_stderr() {
    let doc = br#"{"vertices": [["0","0"],["4","0"],["4","4"],["2","1"],["0","4"]]}"#;
    let out = popkit(&["convexify", "--mode", "flipturn", "--strategy", "largest-lid"], doc);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    assert!(!out.stderr.is_empty());
    assert!(decode(&out.stdout).unwrap().is_convex(false));
}

#[test]
fn family_search_counts() {
    let out = json(&ok(&["family-search", "--x", "1,2", "--y", "1,2"], b""));
    assert_eq!(out["convex_states"].as_array().unwrap().len(), 4);
    let out = json(&ok(&["family-search", "--x", "3,1,2", "--y", "3,1,2", "--sequential"], b""));
    assert_eq!(out["convex_states"].as_array().unwrap().len(), 0);
}

#[test]
fn render_outputs_svg() {
    let doc = ok(&["gen", "p1", "--k", "3"], b"");
    let svg = String::from_utf8(ok(&["render", "--no-axes"], &doc)).unwrap();
    assert!(svg.starts_with("<?xml"));
    assert!(!svg.contains("class=\"axis\""));
    let strip = String::from_utf8(ok(&["render", "--pops", "1,0,5"], &doc)).unwrap();
    assert_eq!(strip.matches("<path").count(), 4);
}

#[test]
fn files_in_and_out() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p.json");
    let path = path.to_str().unwrap();
    ok(&["gen", "p1", "--k", "4", "-o", path], b"");
    let report = json(&ok(&["check", "-i", path], b""));
    assert_eq!(report["simple"], true);
    let missing = dir.path().join("missing.json");
    assert_eq!(popkit(&["check", "-i", missing.to_str().unwrap()], b"").code, popkit::cli::EXIT_IO);
}

#[test]
fn usage_and_validation_codes() {
    assert_eq!(popkit(&["check", "--bogus"], b"").code, EXIT_USAGE);
    assert_eq!(popkit(&["nonsense"], b"").code, EXIT_USAGE);
    assert_eq!(popkit(&["--help"], b"").code, EXIT_OK);

    let out = popkit(&["check"], br#"{"vertices": [["1","0"],["1/0","0"],["0","1"]]}"#);
    assert_eq!(out.code, EXIT_VALIDATION);
    assert!(out.stderr.contains("vertices[1][0]"), "{}", out.stderr);

    assert_eq!(popkit(&["check"], b"not json").code, EXIT_VALIDATION);
    let doc = ok(&["gen", "p1", "--k", "3"], b"");
    assert_eq!(popkit(&["apply", "pop", "--vertex", "99"], &doc).code, EXIT_VALIDATION);
    let sq = br#"{"vertices": [["0","0"],["1","0"],["1","1"],["0","1"]]}"#;
    assert_eq!(popkit(&["apply", "flip", "--pocket", "0"], sq).code, EXIT_VALIDATION);
    assert_eq!(
        popkit(&["gen", "alternating", "--x", "1,1", "--y", "1,2", "--sigma", "++++"], b"").code,
        EXIT_VALIDATION
    );
}
