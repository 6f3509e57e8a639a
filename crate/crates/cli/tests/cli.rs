use balcolor_cli::{parse_cgf, run};

fn data(name: &str) -> String {
    format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

struct Out {
    code: i32,
    stdout: String,
    stderr: String,
}

fn call_with(args: &[&str], stdin: &str) -> Out {
    let mut full = vec!["balcolor"];
    full.extend_from_slice(args);
    let mut input = stdin.as_bytes();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(full, &mut input, &mut out, &mut err);
    Out { code, stdout: String::from_utf8(out).unwrap(), stderr: String::from_utf8(err).unwrap() }
}

fn call(args: &[&str]) -> Out {
    call_with(args, "")
}

#[test]
fn transcribed_five_vertex_graph_parses() {
    let cg = parse_cgf(&std::fs::read_to_string(data("five_g_prime.cgf")).unwrap()).unwrap();
    assert_eq!(cg.n(), 5);
    assert_eq!(cg.graph().edge_count(), 6);
    assert_eq!(cg.coloring().colors(), &[2, 1, 1, 2, 2]);
}

#[test]
fn cdm_output() {
    let o = call(&["cdm", &data("five_g_prime.cgf")]);
    assert_eq!((o.code, o.stdout.as_str()), (0, "1 1 2\n1 2 1\n1 1 1\n1 1 2\n1 2 2\n"));
    let o = call(&["cdm", "--letters", &data("five_g_prime.cgf")]);
    assert_eq!(o.stdout, "1 1 B\n1 2 R\n1 1 R\n1 1 B\n1 2 B\n");
    let o = call(&["cdm", "--family", "path:3", "--colors", "1,3,1"]);
    assert_eq!(o.stdout, "0 0 1 1\n2 0 0 3\n0 0 1 1\n");
}

#[test]
fn cdm_equality() {
    let o = call(&["cdm-equal", &data("five_g_prime.cgf"), &data("five_h_prime.cgf")]);
    assert_eq!((o.code, o.stdout.as_str()), (0, "equal\n"));
    let o = call(&["cdm-equal", &data("five_g.cgf"), &data("five_h.cgf")]);
    assert_eq!((o.code, o.stdout.as_str()), (1, "different\n"));
}

#[test]
fn realizability_commands() {
    let o = call(&["realizable", &data("ok.cdm")]);
    assert_eq!((o.code, o.stdout.as_str()), (0, "realizable\n"));
    let o = call(&["realizable", &data("bad.cdm")]);
    assert_eq!(o.code, 1);
    assert!(o.stdout.starts_with("not realizable: "));
    let o = call(&["realize", &data("ok.cdm")]);
    assert_eq!(o.code, 0);
    let cg = parse_cgf(&o.stdout).unwrap();
    let back = call_with(&["cdm", "-"], &o.stdout);
    assert_eq!(cg.n(), 5);
    let original: String = std::fs::read_to_string(data("ok.cdm")).unwrap().lines().skip(1).map(|l| format!("{l}\n")).collect();
    assert_eq!(back.stdout, original);
    assert_eq!(call(&["realize", &data("bad.cdm")]).code, 1);
}

#[test]
fn switch_commands() {
    let o = call_with(&["switch-apply", &data("five_g_prime.cgf"), "-"], "2 5 3 4\n");
    assert_eq!(o.code, 0);
    assert_eq!(parse_cgf(&o.stdout).unwrap(), parse_cgf(&std::fs::read_to_string(data("five_h_prime.cgf")).unwrap()).unwrap());
    let o = call_with(&["switch-apply", &data("five_g.cgf"), "-"], "2 5 3 4\n");
    assert_eq!(o.code, 1);
    assert!(o.stderr.contains("color mismatch"));
    let o = call(&["switch-seq", &data("five_g.cgf"), &data("five_h.cgf")]);
    assert_eq!(o.code, 1);
    assert!(o.stderr.contains("not co-realizable"));
}

#[test]
fn switch_sequence_pipeline_replays() {
    for (g, h) in [("twelve_g.cgf", "twelve_g_prime.cgf"), ("eight_g.cgf", "eight_g_prime.cgf"), ("five_g_prime.cgf", "five_h_prime.cgf")] {
        let seq = call(&["switch-seq", &data(g), &data(h)]);
        assert_eq!(seq.code, 0);
        let applied = call_with(&["switch-apply", &data(g), "-"], &seq.stdout);
        assert_eq!(applied.code, 0);
        let target = parse_cgf(&std::fs::read_to_string(data(h)).unwrap()).unwrap();
        assert_eq!(parse_cgf(&applied.stdout).unwrap(), target);
    }
}

#[test]
fn beta_petersen_three_colors() {
    for kind in ["open", "closed", "local"] {
        let o = call(&["beta", "--kind", kind, "-k", "3", &data("petersen.cgf")]);
        assert_eq!(o.code, 0);
        let lines: Vec<&str> = o.stdout.lines().collect();
        assert_eq!(lines[0], "2");
        assert_eq!(lines[1], format!("kind {kind}"));
        assert!(lines[2].starts_with("witness "));
        assert_eq!(lines[3], "exhausted 1");
    }
}

#[test]
fn beta_is_thread_independent() {
    let one = call(&["beta", "--kind", "closed", "--family", "petersen"]);
    let three = call(&["--threads", "3", "beta", "--kind", "closed", "--family", "petersen"]);
    assert_eq!(one.stdout, three.stdout);
    let c1 = call(&["classify", "--family", "wheel:6"]);
    let c3 = call(&["classify", "--threads", "3", "--family", "wheel:6"]);
    assert_eq!(c1.stdout, c3.stdout);
}

#[test]
fn beta_size_guard_and_bad_kind() {
    let o = call(&["beta", "--kind", "open", "--family", "cycle:30"]);
    assert_eq!(o.code, 1);
    assert!(o.stderr.contains("too large"));
    let o = call(&["beta", "--kind", "parity", "--family", "cycle:5"]);
    assert_eq!(o.code, 2);
    let o = call(&["beta", "--kind", "sideways", "--family", "cycle:5"]);
    assert_eq!(o.code, 2);
}

#[test]
fn balance_check() {
    let o = call(&["balance-check", "--kind", "closed", &data("five_g.cgf")]);
    assert_eq!((o.code, o.stdout.as_str()), (0, "balanced\n"));
    let o = call(&["balance-check", "--kind", "open", "--report", &data("five_g.cgf")]);
    assert_eq!(o.code, 1);
    assert!(o.stdout.starts_with("unbalanced\nvertex 1 open 2 closed 1\n"));
    let o = call(&["balance-check", "--kind", "open", "--lambda", "0", &data("twelve_g.cgf")]);
    assert_eq!(o.code, 0);
}

#[test]
fn classify_and_family_agree_on_wheel_six() {
    let exhaustive = call(&["classify", "--family", "wheel:6"]);
    let closed = call(&["family", "wheel:6"]);
    let verdicts = |s: &str| -> Vec<String> { s.lines().map(|l| l.split(' ').take(2).collect::<Vec<_>>().join(" ")).collect() };
    assert_eq!(verdicts(&exhaustive.stdout), verdicts(&closed.stdout));
    assert!(closed.stdout.contains("CSB yes witness"));
    assert!(closed.stdout.contains("OSB no\n"));
    assert_eq!(call(&["family", "wheel:6", "--class", "osb"]).code, 1);
    assert_eq!(call(&["family", "wheel:6", "--class", "csb"]).code, 0);
    assert_eq!(call(&["family", "petersen"]).code, 2);
    assert_eq!(call(&["family", "wheel:2"]).code, 2);
}

#[test]
fn family_graph_output() {
    let o = call(&["family", "bipartite:1,2", "--graph"]);
    assert_eq!(o.stdout, "cgf 1\nn 3\nk 2\ncolors 1 1 1\nedge 1 2\nedge 1 3\n");
}

#[test]
fn caterpillar_command() {
    let o = call(&["caterpillar", "0,2,1,1,0,0,3,1,0,2,2,0,3,0,2,1,0,0,1,0", "--class", "csb"]);
    assert_eq!(o.code, 0);
    assert!(o.stdout.starts_with("spine 20\nvertices 39\nPB no\nCSB yes witness 2 1 1 2 2 1 1 1 2 2 2 1 1 1 2 2 1 2 2 1"));
    let o = call(&["caterpillar", "0,5,0"]);
    assert_eq!(o.stdout, "spine 3\nvertices 8\nPB no\nCSB no\n");
    assert_eq!(call(&["caterpillar", "0,5,0", "--class", "pb"]).code, 1);
    assert_eq!(call(&["caterpillar", "1,0"]).code, 2);
    let g = call(&["caterpillar", "0,1,0", "--graph"]);
    let cg = parse_cgf(&g.stdout).unwrap();
    assert_eq!(cg.n(), 4);
}

#[test]
fn count_table() {
    let o = call(&["count", "--to", "10"]);
    let a: Vec<&str> = o.stdout.lines().map(|l| l.split(' ').nth(1).unwrap()).collect();
    assert_eq!(a, ["1", "1", "10", "46", "244", "1252", "6472", "33400", "172432"]);
    let o = call(&["count", "--to", "8"]);
    let b: Vec<&str> = o.stdout.lines().map(|l| l.split(' ').nth(2).unwrap()).collect();
    assert_eq!(b, ["0", "3", "12", "66", "336", "1740", "8976"]);
    let rec = call(&["count", "--from", "3", "--to", "25"]);
    let mat = call(&["count", "--from", "3", "--to", "25", "--method", "matrix"]);
    assert_eq!(rec.stdout, mat.stdout);
    let o = call(&["count", "--from", "30", "--to", "31", "--method", "closed-form"]);
    assert_eq!(o.code, 2);
    assert!(o.stderr.contains("closed form is supported"));
    assert_eq!(call(&["count", "--from", "2", "--to", "3", "--method", "closed-form"]).code, 2);
}

#[test]
fn reduce_command() {
    let o = call(&["reduce", "--family", "bipartite:2,2", "--colors", "1,2,1,2"]);
    assert_eq!(o.stdout, "remove 1 2\nremove 3 4\ncgf 1\n# kept\nn 0\nk 2\ncolors\n");
    let o = call(&["reduce", "--check", "--family", "cycle:5", "--colors", "1,2,1,2,1"]);
    assert_eq!(o.code, 2);
    let o = call(&["reduce", "--family", "path:3", "--colors", "1,2,1", "--palette", "3"]);
    assert_eq!(o.code, 2);
}

#[test]
fn usage_errors() {
    assert_eq!(call(&[]).code, 2);
    assert_eq!(call(&["frobnicate"]).code, 2);
    assert_eq!(call(&["cdm", "/nonexistent.cgf"]).code, 2);
    let o = call_with(&["cdm", "-"], "cgf 1\nn 2\nk 2\ncolors 1 2\nedge 1 1\n");
    assert_eq!(o.code, 2);
    assert!(o.stderr.contains("line 5: self-loop"));
    let o = call(&["--help"]);
    assert_eq!(o.code, 0);
    for cmd in ["cdm", "cdm-equal", "realizable", "realize", "switch-apply", "switch-seq", "balance-check", "beta", "classify", "family", "caterpillar", "count", "reduce"] {
        assert!(o.stdout.contains(cmd), "{cmd} missing from help");
    }
    assert_eq!(call(&["--threads", "0", "count"]).code, 2);
    assert_eq!(call(&["cdm", "--colors", "1,2", "x.cgf"]).code, 2);
}

#[test]
fn output_is_deterministic() {
    let args = ["classify", "--family", "multipartite:3,3,2"];
    assert_eq!(call(&args).stdout, call(&args).stdout);
    let args = ["reduce", "--family", "multipartite:3,3,3", "--colors", "1,1,2,1,1,2,1,2,2"];
    assert_eq!(call(&args).stdout, call(&args).stdout);
}
