use std::path::PathBuf;
use std::process::{Command, Output};

use matval::closedform::InvariantId;
use matval::master::{Value, ValueKind};
use matval::stressed::from_cyclic_flat_bounds;
use matval::MvError;
use matval_cli::{cmd_classify, cmd_invariant, exit_code, parse_flat, Format, MatroidSpec};

fn matval(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_matval")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap().trim_end().to_string()
}

fn tmp(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name)
}

#[test]
fn tutte_of_u24() {
    let o = matval(&["invariant", "uniform:2,4", "--name", "tutte"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "x^2 + 2*x + 2*y + y^2");
}

#[test]
fn kl_z_of_cab_matches_uniform() {
    let a = matval(&["invariant", "cab:4,6", "--name", "kl_z"]);
    let b = matval(&["invariant", "uniform:7,8", "--name", "kl_z"]);
    assert!(a.status.success() && b.status.success());
    assert_eq!(stdout(&a), stdout(&b));
    let oracle = matval(&["invariant", "cab:4,6", "--name", "kl_z", "--route", "oracle"]);
    assert_eq!(stdout(&oracle), stdout(&b));
}

#[test]
fn routes_agree_on_graham_sloane() {
    let p = matval(&["invariant", "gs:3,7", "--name", "ehrhart", "--route", "profile"]);
    let o = matval(&["invariant", "gs:3,7", "--name", "ehrhart", "--route", "oracle"]);
    assert!(p.status.success() && o.status.success());
    assert_eq!(stdout(&p), stdout(&o));
}

#[test]
fn json_output_round_trips() {
    for (spec, name) in [("uniform:3,6", "spectrum"), ("minimal:3,6", "volume"), ("gs:3,7", "kl_p"), ("uniform:2,4", "g_invariant"), ("cuspidal:1,2,2,4", "beta")] {
        let o = matval(&["invariant", spec, "--name", name, "--format", "json"]);
        assert!(o.status.success(), "{spec} {name}");
        let j: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        assert_eq!(j["invariant"], name);
        let id: InvariantId = name.parse().unwrap();
        let v = Value::from_json(ValueKind::of(id), &j["value"]).unwrap();
        let text = cmd_invariant(spec, name, "auto", Format::Text).unwrap();
        assert_eq!(v.to_text(id), text);
    }
}

#[test]
fn classify_outputs() {
    let o = matval(&["classify", "minimal:6,9"]);
    let text = stdout(&o);
    assert!(text.starts_with("ElementarySplit"), "{text}");
    assert_eq!(text.lines().skip(2).collect::<Vec<_>>(), ["1\t3\t1"]);
    assert_eq!(stdout(&matval(&["classify", "uniform:3,6"])), "Uniform U_{3,6}");

    let path = tmp("nested_cyclic_flats.json");
    let m = from_cyclic_flat_bounds(6, 3, &[(0b11, 1), (0b1111, 2)]).unwrap();
    std::fs::write(&path, m.to_json()).unwrap();
    let spec = format!("file:{}", path.display());
    let text = stdout(&matval(&["classify", &spec]));
    assert!(text.starts_with("NotElementarySplit"), "{text}");
    assert!(text.contains("witness: comparable proper cyclic flats {0,1} < {0,1,2,3}"), "{text}");
}

#[test]
fn sums_and_paths() {
    let s = cmd_classify("sum:(uniform:1,2)+(uniform:1,2)").unwrap();
    assert!(s.starts_with("ElementarySplit"), "{s}");
    let t = cmd_invariant("sum:(uniform:1,2)+(uniform:1,2)", "tutte", "auto", Format::Text).unwrap();
    assert_eq!(t, "x^2 + 2*x*y + y^2");
    assert_eq!(cmd_invariant("lpm:EENN,NNEE", "speyer_g", "auto", Format::Text).unwrap(), "t^2 + 2*t");
    assert!(matches!(MatroidSpec::parse("sum:(uniform:1,2)+"), Err(MvError::Parse(_))));
    assert!(matches!(MatroidSpec::parse("petersen:10"), Err(MvError::Parse(_))));
    let nested = MatroidSpec::parse("sum:(sum:(uniform:1,1)+(uniform:0,1))+(cab:2,3)").unwrap().build().unwrap();
    assert_eq!((nested.n(), nested.rank()), (6, 3));
}

#[test]
fn subdivision_check() {
    let o = matval(&["check", "subdivision", "uniform:2,4", "--flat", "2,3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.ends_with("PASS"), "{text}");
    assert!(text.contains("P(N2):       4 vertices"), "{text}");
    let bad = matval(&["check", "subdivision", "uniform:2,4", "--flat", "2,x"]);
    assert_eq!(bad.status.code(), Some(2));
    assert_eq!(matval(&["check", "subdivision", "uniform:2,4", "--flat", "4"]).status.code(), Some(2));
    assert!(parse_flat("0,1", 2).is_ok());
}

#[test]
fn sweep_check() {
    let report = tmp("sweep.jsonl");
    let o = matval(&["check", "sweep", "--max-n", "6", "--report", report.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("-> PASS"), "{}", stdout(&o));
    let lines = std::fs::read_to_string(&report).unwrap();
    assert!(lines.lines().count() > 100);
    assert!(lines.lines().all(|l| serde_json::from_str::<serde_json::Value>(l).is_ok()));
}

#[test]
fn exit_codes() {
    assert_eq!(matval(&["invariant", "uniform:5,3", "--name", "tutte"]).status.code(), Some(2));
    assert_eq!(matval(&["invariant", "uniform:2,4", "--name", "nonsense"]).status.code(), Some(2));
    assert_eq!(matval(&["invariant", "uniform:2,4", "--name", "tutte", "--route", "fast"]).status.code(), Some(2));
    assert_eq!(matval(&["frobnicate"]).status.code(), Some(2));
    let big = matval(&["invariant", "gs:2,13", "--name", "tutte", "--route", "oracle"]);
    assert_eq!(big.status.code(), Some(3));
    assert!(!big.stderr.is_empty());
    let unresolvable = matval(&["invariant", "cuspidal:1,2,2,4", "--name", "denham", "--route", "profile"]);
    assert_eq!(unresolvable.status.code(), Some(3), "{}", String::from_utf8_lossy(&unresolvable.stderr));
    assert_eq!(exit_code(&MvError::TooLarge("x".into())), 3);
    assert_eq!(exit_code(&MvError::Parse("x".into())), 2);
}

#[test]
fn one_based_files_are_rejected() {
    let path = tmp("one_based.json");
    std::fs::write(&path, r#"{"n":2,"rank":1,"bases":[[1],[2]]}"#).unwrap();
    let o = matval(&["classify", &format!("file:{}", path.display())]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("0-based"));
}
