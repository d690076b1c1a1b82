use std::io::Write as _;
use std::path::PathBuf;
use std::process::Command;

use cwx_cli::{run, Outcome};

fn cwx(args: &str) -> Outcome {
    run(std::iter::once("cwx").chain(args.split_whitespace()))
}

fn temp_input(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

const GOLDEN_COMMANDS: &[&str] = &[
    "info",
    "betti --field f2",
    "betti --field q",
    "spectrum --kind lower",
    "expansion",
    "cheeger",
    "orient",
];

fn golden_transcript(source: &str) -> String {
    let mut out = String::new();
    for cmd in GOLDEN_COMMANDS {
        let o = cwx(&format!("{cmd} {source} --format machine"));
        out.push_str(&format!("# {cmd} (exit {})\n", o.code));
        out.push_str(&o.stdout);
    }
    out
}

#[test]
fn golden_machine_outputs() {
    let cases = [
        ("path_2", "--zoo path --param 2"),
        ("cycle_3", "--zoo cycle --param 3"),
        ("tetra_minus_face", "--zoo tetra_minus_face"),
        ("rp2_6", "--zoo rp2_6"),
        ("simplex_boundary_3", "--zoo simplex_boundary --param 3"),
    ];
    let bless = std::env::var_os("CWX_BLESS").is_some();
    for (file, source) in cases {
        let got = golden_transcript(source);
        // byte-stable across repeated runs
        assert_eq!(got, golden_transcript(source), "{file}");
        let path = golden_dir().join(format!("{file}.txt"));
        if bless {
            std::fs::create_dir_all(golden_dir()).unwrap();
            std::fs::write(&path, &got).unwrap();
        }
        let want = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        assert_eq!(got, want, "{file} differs from {}", path.display());
    }
}

#[test]
fn cheeger_text_for_path_two() {
    let o = cwx("cheeger --zoo path --param 2");
    assert_eq!(o.code, 0);
    for needle in ["lambda_d = 1\n", "h_d = 1 (= 2/2)", "m = 2\n"] {
        assert!(o.stdout.contains(needle), "missing {needle:?} in\n{}", o.stdout);
    }
    assert_eq!(o.stdout.matches("HOLDS").count(), 2);
}

#[test]
fn cheeger_machine_for_path_two() {
    let o = cwx("cheeger --zoo path --param 2 --format machine");
    for line in ["h_d 1/1", "lambda_d 1.00000000000", "m 2"] {
        assert!(o.stdout.lines().any(|l| l == line), "missing {line:?}");
    }
}

#[test]
fn expansion_machine_for_cycle_three() {
    let o = cwx("expansion --zoo cycle --param 3 --format machine");
    assert!(o.stdout.lines().any(|l| l == "h 0/3"));
    assert!(o.stdout.lines().any(|l| l == "witness 1 1 1"));
}

#[test]
fn betti_of_projective_plane() {
    assert!(cwx("betti --zoo rp2_6 --dim 2 --field f2 --format machine").stdout.contains("b_2 1\n"));
    assert!(cwx("betti --zoo rp2_6 --dim 2 --field q --format machine").stdout.contains("b_2 0\n"));
    assert_eq!(cwx("betti --zoo rp2_6 --dim 2 --field f2").stdout, "b_2(F2) = 1\n");
}

#[test]
fn coboundary_at_zero_is_the_graph_constant() {
    let o = cwx("expansion --zoo cycle --param 4 --dim 0 --variant coboundary --reduced --format machine");
    assert_eq!(o.code, 0);
    assert!(o.stdout.contains("h_reduced 1/1\n"));
}

#[test]
fn parse_errors_exit_2() {
    let f = temp_input("cwx 1\ndim 1\ncells 0 2\ncells 1 1\nfrobnicate 3\n");
    let o = cwx(&format!("info --input {}", f.path().display()));
    assert_eq!(o.code, 2);
    assert!(o.stdout.is_empty());
    assert!(o.stderr.contains("line 5"), "{}", o.stderr);
    let f = temp_input("0 1\n1 two\n");
    assert_eq!(cwx(&format!("info --input {}", f.path().display())).code, 2);
    assert_eq!(cwx("info --input /nonexistent/file.cwx").code, 2);
    assert_eq!(cwx("info").code, 2);
    assert_eq!(cwx("info --zoo path --param 2 --input x").code, 2);
}

#[test]
fn validation_failures_exit_3() {
    // filled triangle with an inconsistent face boundary
    let bad = "cwx 1\ndim 2\ncells 0 3\ncells 1 3\ncells 2 1\n\
               inc 1 0 0 -1\ninc 1 1 0 1\ninc 1 1 1 -1\ninc 1 2 1 1\ninc 1 0 2 -1\ninc 1 2 2 1\n\
               inc 2 0 0 1\ninc 2 1 0 1\ninc 2 2 0 1\n";
    let f = temp_input(bad);
    let o = cwx(&format!("validate --input {}", f.path().display()));
    assert_eq!(o.code, 3);
    assert!(o.stdout.contains("n=1, row=0, col=0"), "{}", o.stdout);
    let o = cwx(&format!("cheeger --input {}", f.path().display()));
    assert_eq!(o.code, 3);
    assert!(o.stdout.is_empty());
    let f = temp_input("cwx 1\ndim 1\ncells 0 2\ncells 1 1\ninc 1 5 0 1\n");
    assert_eq!(cwx(&format!("info --input {}", f.path().display())).code, 3);
    let f = temp_input("cwx 1\ndim 1\ncells 0 2\ncells 1 1\nregular true\ninc 1 0 0 2\ninc 1 1 0 -2\n");
    assert_eq!(cwx(&format!("validate --input {}", f.path().display())).code, 3);
}

#[test]
fn good_file_validates() {
    let good = "cwx 1\ndim 2\ncells 0 3\ncells 1 3\ncells 2 1\n\
                inc 1 0 0 -1\ninc 1 1 0 1\ninc 1 1 1 -1\ninc 1 2 1 1\ninc 1 0 2 -1\ninc 1 2 2 1\n\
                inc 2 0 0 1\ninc 2 1 0 1\ninc 2 2 0 -1\n";
    let f = temp_input(good);
    let o = cwx(&format!("validate --input {}", f.path().display()));
    assert_eq!((o.code, o.stdout.as_str()), (0, "ok\n"));
}

#[test]
fn budget_exceeded_exits_4() {
    let o = cwx("expansion --zoo torus_7 --budget 8");
    assert_eq!(o.code, 4);
    assert!(o.stdout.is_empty());
}

#[test]
fn inapplicable_exits_5_without_output() {
    let o = cwx("spectrum --zoo filled_simplex --param 2 --dim 2 --kind upper --format machine");
    assert_eq!(o.code, 5);
    assert!(o.stdout.is_empty());
    assert_eq!(cwx("spectrum --zoo path --param 2 --dim 0 --kind lower").code, 5);
    assert_eq!(cwx("info --zoo sphere").code, 5);
    assert_eq!(cwx("betti --zoo path --param 2 --dim 7").code, 5);
    assert_eq!(cwx("sweep --zoo path --param 2 --values 1,x").code, 5);
}

#[test]
fn binary_reports_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_cwx");
    let out = Command::new(bin).args(["cheeger", "--zoo", "tetra_minus_face"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().contains("h_d = 1 (= 3/3)"));
    let out = Command::new(bin).args(["expansion", "--zoo", "torus_7", "--budget", "4"]).output().unwrap();
    assert_eq!(out.status.code(), Some(4));
    assert!(out.stdout.is_empty());
    assert!(!out.stderr.is_empty());
}

#[test]
fn facet_files_are_sniffed() {
    let f = temp_input("# two triangles\n0 1 2\n1 2 3\n");
    let o = cwx(&format!("info --input {} --format machine", f.path().display()));
    assert_eq!(o.code, 0);
    assert!(o.stdout.contains("cells 4 5 2\n"));
}

#[test]
fn sweep_with_explicit_values() {
    let o = cwx("sweep --zoo path --param 2 --values 0.5,-1 --format machine");
    assert_eq!(o.code, 0, "{}", o.stderr);
    assert!(o.stdout.contains("cuts 2 2\n"));
    assert!(o.stdout.contains("H 1/1\n"));
}

#[test]
fn every_fixture_survives_a_file_round_trip() {
    for (label, complex) in cwx_core::fixtures() {
        let mut words = label.split_whitespace();
        let name = words.next().unwrap();
        let params: String = words.map(|p| format!(" --param {p}")).collect();
        let f = temp_input(&cwx_core::write_cwx(&complex));
        for cmd in ["info", "betti --field f2", "orient"] {
            let from_file = cwx(&format!("{cmd} --input {} --format machine", f.path().display()));
            let from_zoo = cwx(&format!("{cmd} --zoo {name}{params} --format machine"));
            assert_eq!(from_file.code, 0, "{label}: {}", from_file.stderr);
            assert_eq!(from_file, from_zoo, "{label}: {cmd}");
        }
    }
}
