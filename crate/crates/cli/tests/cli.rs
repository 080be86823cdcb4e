use std::path::PathBuf;
use std::process::{Command, Output};

fn hyperfree(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperfree"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("hyperfree-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn analyze_prints_table_and_record() {
    let o = hyperfree(&["analyze", "--pattern", "k4"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("k-density          5/2"));
    let record = text.lines().last().unwrap();
    assert!(record.contains("k_density=5/2"), "{record}");
    assert!(record.contains("strictly_balanced=true"), "{record}");
    let only = stdout(&hyperfree(&[
        "analyze",
        "--pattern",
        "builtin:diamond",
        "--record",
    ]));
    assert_eq!(only.lines().count(), 1);
    assert!(only.contains("strictly_balanced=false"));
}

#[test]
fn analyze_reads_pattern_files() {
    let path = scratch("tri.txt");
    std::fs::write(&path, "# a triangle\n2 3\n0 1\n1 2\n0 2\n").unwrap();
    let o = hyperfree(&["analyze", "--pattern", path.to_str().unwrap(), "--record"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("pattern=tri "), "{}", stdout(&o));
}

#[test]
fn run_reports_and_verifies() {
    let traj = scratch("traj.csv");
    let o = hyperfree(&[
        "run",
        "--pattern",
        "triangle",
        "--n",
        "10",
        "--seed",
        "4",
        "--verify",
        "--trajectory",
        traj.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let line = stdout(&o);
    assert!(line.contains("examined=45"));
    assert!(line.contains("f_free=true maximal=true"));
    let csv = std::fs::read_to_string(&traj).unwrap();
    assert!(csv.starts_with("steps_examined,accepted,max_codegree\n"));
    assert!(csv.lines().last().unwrap().starts_with("45,"));
}

#[test]
fn sweep_is_reproducible_and_fits() {
    let args = [
        "sweep",
        "--pattern",
        "triangle",
        "--n-list",
        "8,16,32",
        "--trials",
        "3",
        "--seed",
        "9",
    ];
    let a = hyperfree(&args);
    let b = hyperfree(&[&args[..], &["--threads", "1"]].concat());
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let csv = stdout(&a);
    assert_eq!(
        csv.lines().next().unwrap(),
        "pattern,n,seed,accepted_edges,max_codegree,runtime_ms"
    );
    assert_eq!(csv.lines().count(), 10);

    let path = scratch("sweep.csv");
    std::fs::write(&path, &csv).unwrap();
    let svg = scratch("fit.svg");
    let f = hyperfree(&[
        "fit",
        "--input",
        path.to_str().unwrap(),
        "--pattern",
        "triangle",
        "--svg",
        svg.to_str().unwrap(),
    ]);
    assert!(f.status.success());
    let out = stdout(&f);
    assert!(out.starts_with("quantity=edges slope="));
    assert!(out.contains("predicted=3/2"));
    assert!(std::fs::read_to_string(&svg).unwrap().starts_with("<svg"));
}

#[test]
fn empty_sweep_succeeds() {
    let o = hyperfree(&[
        "sweep",
        "--pattern",
        "triangle",
        "--n-list",
        "5",
        "--trials",
        "0",
    ]);
    assert!(o.status.success());
    assert_eq!(
        stdout(&o),
        "pattern,n,seed,accepted_edges,max_codegree,runtime_ms\n"
    );
}

#[test]
fn gnp_and_clusters() {
    let o = hyperfree(&["gnp", "--pattern", "triangle", "--n", "4", "--p", "1"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("base_edges=6 reduced_edges=0 removed_edges=6"));
    let d = hyperfree(&["gnp", "--pattern", "triangle", "--n", "30", "--c2", "1"]);
    assert!(d.status.success());
    let c = hyperfree(&[
        "clusters",
        "--pattern",
        "triangle",
        "--n",
        "4",
        "--p",
        "1",
        "--r",
        "3",
    ]);
    let text = stdout(&c);
    assert_eq!(text.lines().count(), 6);
    assert!(text
        .lines()
        .all(|l| l.contains("z1=2 max_cluster=2 exact=true")));
}

#[test]
fn errors_are_one_line_with_nonzero_exit() {
    let cases: [&[&str]; 4] = [
        &["analyze", "--pattern", "nonsense"],
        &[
            "run",
            "--pattern",
            "triangle",
            "--n",
            "5000",
            "--mem-budget",
            "1000",
        ],
        &["gnp", "--pattern", "cycle:1:3:3", "--n", "10", "--c2", "1"],
        &["run", "--pattern", "triangle", "--n", "5", "--p-stop", "2"],
    ];
    for args in cases {
        let o = hyperfree(args);
        assert!(!o.status.success(), "{args:?}");
        let err = String::from_utf8(o.stderr).unwrap();
        assert_eq!(err.lines().count(), 1, "{err}");
        assert!(err.starts_with("error: "), "{err}");
    }
}
