use std::path::{Path, PathBuf};

use neutro_cli::run_cli;

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn run(catalog: &Path, args: &[&str]) -> Run {
    let mut argv = vec!["neutro".to_string(), "--catalog".into(), catalog.display().to_string()];
    argv.extend(args.iter().map(|s| s.to_string()));
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run_cli(argv, &mut out, &mut err);
    Run {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
        .display()
        .to_string()
}

fn loaded_catalog() -> tempfile::TempDir {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(run(dir.path(), &["load", "R", &fixture("example2_R.nrel")]).code, 0);
    assert_eq!(run(dir.path(), &["load", "S", &fixture("example2_S.nrel")]).code, 0);
    dir
}

#[test]
fn load_list_show_check() {
    let dir = loaded_catalog();
    let list = run(dir.path(), &["list"]);
    assert_eq!(list.code, 0);
    assert_eq!(
        list.out,
        "R\t<X{a,b,c}, Y{a,b,c}>\t6 stored\nS\t<Y{a,b,c}, Z{a,b,c}>\t3 stored\n"
    );
    let show = run(dir.path(), &["show", "S"]);
    assert_eq!(
        show.out,
        "scheme: Y{a,b,c} Z{a,b,c}\nY  Z  belief  doubt\na  c  1       0\nb  a  1       1\nc  b  0       1\n(3 rows)\n"
    );
    let check = run(dir.path(), &["check", "R"]);
    assert_eq!(check.code, 0);
    assert!(check.out.contains("consistent: false\n"));
    assert!(check.out.contains("functional: true\n"));
    assert!(check.out.contains("total: false\n"));
}

#[test]
fn eval_robust_and_raw() {
    let dir = loaded_catalog();
    let t3 = run(dir.path(), &["eval", "SELECT[NOT(X = Z)](PROJECT[X,Z](R JOIN S))"]);
    assert_eq!(t3.code, 0, "{}", t3.err);
    assert!(t3.out.starts_with("scheme: X{a,b,c} Z{a,b,c}\n"));
    assert!(t3.out.ends_with("(7 rows)\n"));

    let raw = run(dir.path(), &["eval", "--raw", "SPLIT(R) JOIN S"]);
    assert_eq!(raw.code, 2);
    assert!(raw.err.contains("not functional"), "{}", raw.err);
    let raw_ok = run(dir.path(), &["eval", "--raw", "R UNION R"]);
    assert_eq!(raw_ok.code, 0);
    assert!(raw_ok.out.ends_with("(6 rows)\n"));
}

#[test]
fn error_exit_codes() {
    let dir = loaded_catalog();
    let bogus = run(dir.path(), &["eval", "BOGUS UNION R"]);
    assert_eq!(bogus.code, 2);
    assert!(bogus.err.contains("unknown relation `BOGUS`"), "{}", bogus.err);

    let syntax = run(dir.path(), &["eval", "R UNION"]);
    assert_eq!(syntax.code, 2);
    assert!(syntax.err.contains("syntax error at 1:8"));

    assert_eq!(run(dir.path(), &["frobnicate"]).code, 1);
    assert_eq!(run(dir.path(), &["eval"]).code, 1);
    assert_eq!(run(dir.path(), &["demo", "nope"]).code, 1);
    assert_eq!(run(dir.path(), &["load", "UNION", &fixture("example2_R.nrel")]).code, 1);
    assert_eq!(run(dir.path(), &["show", "Missing"]).code, 2);
    assert_eq!(run(dir.path(), &["load", "Q", "/nonexistent/file.nrel"]).code, 2);

    let help = run(dir.path(), &["--help"]);
    assert_eq!(help.code, 0);
    assert!(help.out.contains("verify"));
}

#[test]
fn bad_documents_are_data_errors() {
    let dir = tempfile::tempdir().unwrap();
    let doc = dir.path().join("bad.nrel");
    std::fs::write(&doc, "scheme: X{a}\nrow: a | 1.5, 0\n").unwrap();
    let r = run(&dir.path().join("cat"), &["load", "B", doc.to_str().unwrap()]);
    assert_eq!(r.code, 2);
    assert!(r.err.contains("line 2"), "{}", r.err);
    assert!(r.err.contains("out of range"), "{}", r.err);
}

#[test]
fn demos_succeed() {
    let dir = tempfile::tempdir().unwrap();
    let ex = run(dir.path(), &["demo", "example2"]);
    assert_eq!(ex.code, 0, "{}", ex.err);
    assert!(ex.out.contains("(15 rows)"));
    assert!(ex.out.contains("(5 rows)"));
    assert!(ex.out.contains("(7 rows)"));
    assert!(!ex.out.contains("MISMATCH"));

    let tanks = run(dir.path(), &["demo", "tanks"]);
    assert_eq!(tanks.code, 0, "{}", tanks.err);
    assert!(tanks.out.contains("o2         T-80    0       0.05"));
    assert!(tanks.out.contains("warning: low confidence"));
}

#[test]
fn verify_reports_every_case() {
    let dir = tempfile::tempdir().unwrap();
    // Tiny budget: only one-tuple operands are enumerated, the rest skip.
    let v = run(dir.path(), &["verify", "--grid", "1", "--budget", "1"]);
    assert_eq!(v.code, 0, "{}\n{}", v.out, v.err);
    assert!(v.out.contains("strong union on <X{a}> x <X{a}>: holds (9 instances)"));
    assert!(v.out.contains("skipped"));
    assert!(v.out.lines().last().unwrap().ends_with("skipped"));

    let v = run(dir.path(), &["verify", "--grid", "1", "--budget", "2"]);
    assert_eq!(v.code, 0);
    assert!(v.out.contains("strong join on <X{a,b}, Y{a}> x <X{a,b}, Y{a}>: holds (81 instances)"));
    assert!(v.out.contains("strong join on <X{a,b}> x <Y{a,b}>: skipped"));

    // At the default budget the joins that fan one operand tuple out to
    // several result tuples produce counterexamples.
    let v = run(dir.path(), &["verify", "--grid", "1"]);
    assert_eq!(v.code, 3);
    assert!(v.out.contains("strong join on <X{a,b}> x <Y{a,b}>: COUNTEREXAMPLE after 1 instances"));
    assert!(v.out.contains("  operand 1:\n    scheme: X{a,b}\n  operand 2:\n    scheme: Y{a,b}\n"));
    assert!(v.out.contains("weak   join on <X{a,b}> x <Y{a,b}>: holds"));
    assert!(v.err.contains("check(s) found counterexamples"));

    assert_eq!(run(dir.path(), &["verify", "--grid", "0"]).code, 1);
}
