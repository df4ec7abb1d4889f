use std::path::Path;
use std::process::{Command, Output};

const FANO: &str = r#"{"n":7,"k":3,"sets":[[1,2,3],[3,4,5],[5,6,1],[2,4,6],[1,4,7],[3,6,7],[2,5,7]]}"#;

fn domdodom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_domdodom")).args(args).env_remove("DOMDODOM_THREADS").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn beta_on_fano() {
    let dir = tempfile::tempdir().unwrap();
    let fano = write(dir.path(), "fano.json", FANO);
    let o = domdodom(&["beta", "--in", &fano, "-p", "0", "-q", "2"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "{\"value\":2,\"witness_A\":[],\"witness_B\":[1,2]}\n");
    let text = domdodom(&["beta", "--in", &fano, "-p", "0", "-q", "2", "--format", "text"]);
    assert_eq!(stdout(&text), "value 2\nA -\nB 1,2\n");
}

#[test]
fn construct_fano_lists_seven_lines() {
    let o = domdodom(&["construct", "fano"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["n"], 7);
    assert_eq!(v["k"], 3);
    let mut lines: Vec<Vec<u64>> = serde_json::from_value(v["sets"].clone()).unwrap();
    lines.sort();
    assert_eq!(
        lines,
        vec![vec![1, 2, 3], vec![1, 4, 7], vec![1, 5, 6], vec![2, 4, 6], vec![2, 5, 7], vec![3, 4, 5], vec![3, 6, 7]]
    );
    assert!(stdout(&o).starts_with("{\"n\":7,\"k\":3,"));
}

#[test]
fn construct_round_trips_through_beta() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("lift.json");
    let o = domdodom(&["construct", "fano-lift", "--n", "12", "--k", "5", "--out", out.to_str().unwrap()]);
    assert!(o.status.success());
    let b = domdodom(&["beta", "--in", out.to_str().unwrap(), "-p", "0", "-q", "2"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&b)).unwrap();
    assert_eq!(v["value"], 41);
}

#[test]
fn generators_file() {
    let dir = tempfile::tempdir().unwrap();
    let gens = write(dir.path(), "g.txt", "1,2\n2,3\n1,3\n");
    let o = domdodom(&["construct", "lift", "--n", "5", "--k", "3", "--generators", &gens]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["sets"].as_array().unwrap().len(), 7);
}

#[test]
fn verify_lemma_charact_passes() {
    let o = domdodom(&["verify", "lemma-charact"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["pass"], true);
    assert_eq!(v["observed"]["beta_2"], 2);
}

#[test]
fn verify_subcommands() {
    for args in [
        &["verify", "ekr", "--n", "7", "--k", "3"][..],
        &["verify", "cover-bound", "--n", "6", "--k", "3"],
        &["verify", "tau", "--random", "30", "--seed", "5"],
        &["verify", "thm02", "--part", "1", "--n", "7", "--k", "3"],
    ] {
        let o = domdodom(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stdout(&o));
    }
}

#[test]
fn output_is_identical_across_thread_counts() {
    let dir = tempfile::tempdir().unwrap();
    let fano = write(dir.path(), "fano.json", FANO);
    let runs: [&[&str]; 4] = [
        &["enumerate", "maximal", "--n", "7", "--k", "3", "-p", "0", "-q", "1"],
        &["enumerate", "tau-full", "--q", "2", "--max-vertices", "7"],
        &["search-beta-constant", "--q", "2", "--max-vertices", "7"],
        &["beta", "--in", &fano, "-p", "1", "-q", "2"],
    ];
    for args in runs {
        let outputs: Vec<String> = ["1", "2", "4"]
            .iter()
            .map(|t| {
                let mut a = args.to_vec();
                a.extend(["--threads", t]);
                let o = domdodom(&a);
                assert!(o.status.success(), "{a:?}");
                stdout(&o)
            })
            .collect();
        assert!(outputs.windows(2).all(|w| w[0] == w[1]), "{args:?}");
    }
}

#[test]
fn naive_flag_agrees_with_default() {
    let dir = tempfile::tempdir().unwrap();
    let fano = write(dir.path(), "fano.json", FANO);
    let f23 = dir.path().join("f23.json");
    assert!(domdodom(&["construct", "f23", "--n", "9", "--k", "4", "--out", f23.to_str().unwrap()]).status.success());
    for input in [fano.as_str(), f23.to_str().unwrap()] {
        for (p, q) in [("0", "0"), ("0", "2"), ("1", "1"), ("2", "1"), ("2", "2")] {
            let a = domdodom(&["beta", "--in", input, "-p", p, "-q", q]);
            let b = domdodom(&["beta", "--in", input, "-p", p, "-q", q, "--naive"]);
            assert_eq!(stdout(&a), stdout(&b));
        }
    }
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let fano = write(dir.path(), "fano.json", FANO);
    let o = domdodom(&["beta", "--in", &fano, "-p", "0", "-q", "2", "--variant", "intersection"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("p >= 1"));
    assert_eq!(domdodom(&["enumerate", "maximal", "--n", "10", "--k", "4"]).status.code(), Some(2));
    assert_eq!(domdodom(&["beta", "--in", &fano, "-p", "5", "-q", "5"]).status.code(), Some(2));
    assert_eq!(domdodom(&["construct", "nonsense"]).status.code(), Some(2));
    let bad = write(dir.path(), "bad.json", r#"{"n":4,"k":2,"sets":[[1,2,3]]}"#);
    assert_eq!(domdodom(&["covers", "--in", &bad]).status.code(), Some(2));
    assert_eq!(domdodom(&["enumerate", "tau-full", "--q", "2", "--max-vertices", "9"]).status.code(), Some(2));
}

#[test]
fn force_warns() {
    let o = domdodom(&["enumerate", "maximal", "--n", "8", "--k", "3", "--force"]);
    assert!(o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("warning"));
}

#[test]
fn tau_full_checkpoint_resumes() {
    let dir = tempfile::tempdir().unwrap();
    let ckpt = dir.path().join("run.json");
    let args = ["enumerate", "tau-full", "--q", "2", "--max-vertices", "7", "--checkpoint", ckpt.to_str().unwrap()];
    let first = domdodom(&args);
    assert!(first.status.success());
    assert!(ckpt.exists());
    let second = domdodom(&args);
    assert_eq!(stdout(&first), stdout(&second));
}

#[test]
fn covers_defaults_to_k() {
    let dir = tempfile::tempdir().unwrap();
    let fano = write(dir.path(), "fano.json", FANO);
    let o = domdodom(&["covers", "--in", &fano]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["tau"], 3);
    assert_eq!(v["minimal_covers"].as_array().unwrap().len(), 7);
}
