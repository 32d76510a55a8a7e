use std::io::Write;
use std::process::{Command, Output, Stdio};

fn data(name: &str) -> String {
    format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn coxout(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_coxout"))
        .args(args)
        .env_remove("COXOUT_SEED")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn classify_g_va() {
    let o = coxout(&["classify", "--input", &data("g_va.graph")], None);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().next(), Some("virtually-abelian-infinite"));

    let o = coxout(&["classify", "--json", "--input", &data("g_va.graph")], None);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["verdict"], "virtually-abelian-infinite");
    assert_eq!(v["witness"], serde_json::json!({"kind": "sil", "x1": "x", "x2": "y", "component": ["z"]}));
}

#[test]
fn json_output_is_stable() {
    let a = coxout(&["classify", "--json", "--input", &data("disc4.graph")], None);
    let b = coxout(&["classify", "--json"], Some(&std::fs::read_to_string(data("disc4.graph")).unwrap()));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["verdict"], "large");
    assert_eq!(v["witness"]["kind"], "fsil");
}

#[test]
fn malformed_input_exits_one() {
    let o = coxout(&["classify", "--input", &data("malformed.graph")], None);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));

    let o = coxout(&["classify", "--input", "/nonexistent/graph"], None);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("--input"));

    let o = coxout(&["verify", "--suite", "noncommute", "--trials", "many"], None);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("--trials"));
}

#[test]
fn presentation_forms() {
    let o = coxout(&["presentation", "--stil", "x1,x2,x3,x4", "--input", &data("stil.graph"), "--simplify"], None);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(stdout(&o).lines().next(), Some("form: Z2*Z2*Z2"));

    let args = ["presentation", "--stil", "x1,x2,x3,x4", "--input", &data("two_separations.graph")];
    let o = coxout(&[&args[..], &["--standard-quotient", "--simplify"]].concat(), None);
    assert_eq!(stdout(&o).lines().next(), Some("form: (Z2xZ2)*Z2"));
    let o = coxout(&[&args[..], &["--kill", "chi1_2,chi2_1", "--simplify", "--json"]].concat(), None);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["form"], "(Z2xZ2)*Z2");

    // every star separates on the discrete graph, so the triple is an FSIL
    let o = coxout(&["presentation", "--stil", "x1,x2,x3,x4", "--input", &data("disc4.graph")], None);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("FSIL"));

    let o = coxout(&["presentation", "--input", &data("g_va.graph")], None);
    assert!(stdout(&o).contains("gen chi[x;z]"));
}

#[test]
fn witness_and_sils() {
    let o = coxout(&["witness", "--input", &data("g_va.graph")], None);
    assert_eq!(stdout(&o), "none\n");
    let o = coxout(&["witness", "--input", &data("disc4.graph")], None);
    assert_eq!(stdout(&o), "FSIL {x1, x2, x3}\n");
    let o = coxout(&["sils", "--json", "--input", &data("g_va.graph")], None);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 1);
}

#[test]
fn random_graph_pipes_into_classify() {
    let g1 = coxout(&["random-graph", "--seed", "42", "--vertices", "7"], None);
    let g2 = coxout(&["random-graph", "--seed", "42", "--vertices", "7"], None);
    assert_eq!(g1.stdout, g2.stdout);
    let c1 = coxout(&["classify"], Some(&stdout(&g1)));
    let c2 = coxout(&["classify"], Some(&stdout(&g2)));
    assert_eq!(c1.status.code(), Some(0));
    assert_eq!(c1.stdout, c2.stdout);

    let env = Command::new(env!("CARGO_BIN_EXE_coxout"))
        .args(["random-graph", "--vertices", "7"])
        .env("COXOUT_SEED", "42")
        .output()
        .unwrap();
    assert_eq!(env.stdout, g1.stdout);
}

#[test]
fn verify_reports_and_replays() {
    let o = coxout(&["verify", "--suite", "stilfind", "--trials", "20", "--seed", "1", "--json"], None);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["suite"], "stilfind");
    assert_eq!(v["failures"].as_array().unwrap().len(), 0);

    let o = coxout(&["verify", "--suite", "bogus"], None);
    assert_eq!(o.status.code(), Some(1));

    // a stored record whose claim is false replays as a failure, exit 2
    let bad = serde_json::json!({
        "suite": "noncommute", "bound": 8, "graphs": 1, "instances": 1, "passed": 0,
        "inconclusive": [], "skipped": 0,
        "failures": [{
            "graph": std::fs::read_to_string(data("g_va.graph")).unwrap(),
            "check": {"kind": "non_commute",
                      "a": {"multiplier": "x", "support": ["z"]},
                      "b": {"multiplier": "y", "support": ["z"]},
                      "expect_noncommuting": false},
            "outcome": {"outcome": "fail", "detail": "stored"}
        }]
    });
    let path = std::env::temp_dir().join(format!("coxout-replay-{}.json", std::process::id()));
    std::fs::write(&path, bad.to_string()).unwrap();
    let o = coxout(&["verify", "--replay", path.to_str().unwrap()], None);
    std::fs::remove_file(&path).unwrap();
    assert_eq!(o.status.code(), Some(2), "{}", stdout(&o));
    assert!(stdout(&o).contains("not inner"));
}
