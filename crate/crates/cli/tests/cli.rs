use std::process::{Command, Output};

fn aci(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_aci"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

#[test]
fn build_json() {
    let o = aci(&["build", "--n", "5", "--parity", "odd", "--variant", "generic", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["n"], 5);
    assert_eq!(v["parity"], "odd");
    assert_eq!(v["d1"][0].as_array().unwrap().len(), 4);
    assert_eq!(v["d2"].as_array().unwrap().len(), 4);
    assert_eq!(v["d3"].as_array().unwrap().len(), 5);
    assert_eq!(v["d1"][0][3], "t_4_5");
}

#[test]
fn build_rejects_bad_sizes() {
    assert_eq!(code(&aci(&["build", "--n", "4", "--parity", "odd"])), 2);
    assert_eq!(code(&aci(&["build", "--n", "6", "--parity", "odd"])), 2);
    assert_eq!(code(&aci(&["build", "--n", "5", "--variant", "other"])), 2);
}

#[test]
fn build_latex_and_text() {
    let o = aci(&["build", "--n", "6", "--parity", "even", "--format", "latex"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).matches("\\begin{pmatrix}").count(), 3);
    let o = aci(&["build", "--n", "6"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.contains("d1 (1x4):"));
    assert!(text.contains("d3 (6x3):"));
}

#[test]
fn build_to_file() {
    let path = std::env::temp_dir().join(format!("aci-build-{}.json", std::process::id()));
    let o = aci(&["build", "--n", "7", "--format", "json", "--output", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["n"], 7);
    std::fs::remove_file(path).unwrap();
}

#[test]
fn verify_complex() {
    let o = aci(&["verify", "--suite", "complex", "--n", "5,6,7,8"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.lines().last().unwrap().starts_with("OK complex"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn verify_appendix_a() {
    let o = aci(&["verify", "--suite", "appendix-a", "--n", "6"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("PASS appendix-a n=6 zero-block six-letter-even"));
}

#[test]
fn verify_output_is_sorted_and_deterministic() {
    let args = ["verify", "--suite", "schubert", "--n", "8,5,6", "--format", "json"];
    let (a, b) = (aci(&args), aci(&args));
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(v["passed"], true);
    let ns: Vec<u64> = v["checks"].as_array().unwrap().iter().map(|c| c["n"].as_u64().unwrap()).collect();
    assert!(ns.windows(2).all(|w| w[0] <= w[1]));
    assert_eq!(v["options"]["sizes"], serde_json::json!([8, 5, 6]));
}

#[test]
fn specialized_minor_products_skip_the_warning() {
    let o = aci(&["verify", "--suite", "minor-product", "--n", "9", "--specialize"]);
    assert_eq!(code(&o), 0);
    assert!(!String::from_utf8_lossy(&o.stderr).contains("warning"));
    assert!(stdout(&o).contains("336 cases"));
}

#[test]
fn verify_usage_errors() {
    assert_eq!(code(&aci(&["verify", "--suite", "nope", "--n", "5"])), 2);
    assert_eq!(code(&aci(&["verify", "--suite", "complex", "--n", "4"])), 2);
    assert_eq!(code(&aci(&["verify", "--suite", "complex", "--n", "8..5"])), 2);
    assert_eq!(code(&aci(&["verify", "--suite", "complex", "--n", "5", "--prime", "10"])), 2);
}

#[test]
fn verify_all_skips_small_sizes() {
    let o = aci(&["verify", "--suite", "all", "--n", "4"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.contains("SKIP complex n=4"));
    assert!(text.contains("PASS schubert n=4 even subsets reference diagram"));
}

#[test]
fn rank_examples() {
    let o = aci(&["rank", "--n", "7", "--parity", "odd", "--prime", "32003", "--seed", "42", "--votes", "5"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "(4, 3, 1)\n");
    let o = aci(&["rank", "--n", "6", "--parity", "even"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "(3, 3, 1)\n");
    assert_eq!(code(&aci(&["rank", "--n", "6", "--prime", "4"])), 2);
    assert_eq!(code(&aci(&["rank", "--n", "7", "--prime", "47"])), 2);
}

#[test]
fn schubert_poset_dot() {
    let o = aci(&["schubert", "--n", "4", "--poset", "--format", "dot"]);
    assert_eq!(code(&o), 0);
    let dot = stdout(&o);
    assert!(dot.starts_with("digraph PE4 {"));
    assert_eq!(dot.matches(" -> ").count(), 8);
    assert_eq!(dot.lines().filter(|l| l.trim_end().ends_with("\";")).count(), 8);
    assert!(dot.contains("\"{3,4}\" -> \"∅\" [label=\"s4\"];"));
}

#[test]
fn schubert_generators() {
    let o = aci(&["schubert", "--n", "5", "--ideal", "w2"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 4);
    assert!(text.lines().last().unwrap().ends_with("t_4_5"));

    let o = aci(&["schubert", "--n", "6", "--ideal", "w1"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 6);
    assert!(text.lines().next().unwrap().ends_with("(redundant)"));
    assert_eq!(text.matches("(redundant)").count(), 1);

    let o = aci(&["schubert", "--n", "6", "--ideal", "w1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["redundant"], serde_json::json!([1]));
}

#[test]
fn schubert_mapping_cone() {
    let o = aci(&["schubert", "--n", "7", "--mapping-cone"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("aci: 0 -> R^4(-6) -> R^7(-5) -> R(-2) + R^3(-3) -> R"));
}

#[test]
fn schubert_usage_errors() {
    assert_eq!(code(&aci(&["schubert", "--n", "4", "--ideal", "w2"])), 2);
    assert_eq!(code(&aci(&["schubert", "--n", "5"])), 2);
    assert_eq!(code(&aci(&["schubert", "--n", "5", "--ideal", "w2", "--format", "dot"])), 2);
    assert_eq!(code(&aci(&["schubert", "--n", "13", "--poset"])), 2);
    assert_eq!(code(&aci(&["schubert", "--n", "5", "--ideal", "w3"])), 2);
}
