use std::process::{Command, Output};

fn starkcheck(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_starkcheck"));
    cmd.args(args).env_clear();
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn eval_prints_canonical_values() {
    let o = starkcheck(&["eval", "gamma-p", "--p", "5", "--z", "3"], &[]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "-2 + O(5^12)\n");

    let o = starkcheck(&["eval", "stark-unit", "--m", "4", "--a", "1"], &[]);
    assert_eq!(stdout(&o), "2\n");

    let o = starkcheck(&["eval", "gamma", "--z", "1/2", "--digits", "30"], &[]);
    assert!(stdout(&o).starts_with("1.77245385090551602"), "{}", stdout(&o));
}

#[test]
fn eval_reads_the_prime_from_the_environment() {
    let o = starkcheck(&["eval", "gamma-p", "--z", "3"], &[("STARKCHECK_P", "5"), ("STARKCHECK_PRECISION", "4")]);
    assert_eq!(stdout(&o), "-2 + O(5^4)\n");
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["eval", "gamma-p", "--z", "3"][..],
        &["eval", "gamma-p", "--p", "4", "--z", "3"],
        &["eval", "no-such-function"],
        &["verify", "no-such-suite"],
        &["verify", "hurwitz", "--digits", "5"],
        &["verify", "btog2", "--m", "1..2"],
        &["frobnicate"],
    ] {
        let o = starkcheck(args, &[]);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn verify_json_lines_carry_the_config() {
    let o = starkcheck(&["verify", "rec-exact", "--m", "5"], &[("STARKCHECK_SEED", "3")]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<serde_json::Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    // m = 3, 4, 5 with every unit t.
    assert_eq!(lines.len(), 2 + 2 + 4);
    let hash = lines[0]["config_hash"].as_str().unwrap();
    assert_eq!(hash.len(), 64);
    for l in &lines {
        assert_eq!(l["check"], "rec-exact/galois");
        assert_eq!(l["status"], "pass");
        assert_eq!(l["config_hash"], hash);
        assert_eq!(l["config"]["seed"], 3);
    }
    let stderr = String::from_utf8(o.stderr).unwrap();
    assert!(stderr.contains("8 passed, 0 failed, 0 refused"), "{stderr}");
}

#[test]
fn verify_formats() {
    let tsv = starkcheck(&["verify", "hurwitz", "--m", "3", "--format", "tsv"], &[]);
    let text = stdout(&tsv);
    let mut rows = text.lines();
    assert_eq!(rows.next().unwrap(), "check\tparams\tstatus\tresidual\tobserved\tdetail\tconfig_hash");
    assert!(rows.all(|r| r.split('\t').count() == 7));

    let txt = starkcheck(&["verify", "hurwitz", "--m", "3"], &[("STARKCHECK_FORMAT", "text")]);
    assert!(stdout(&txt).lines().all(|l| l.starts_with("PASS")), "{}", stdout(&txt));
}

#[test]
fn suite_filters_apply() {
    let o = starkcheck(&["verify", "--suite", "btog2", "--p", "5", "--m", "3", "--i", "1", "--j", "1"], &[]);
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 2, "{out}");
    assert!(out.contains("btog2/part-i") && out.contains("bpvsbc/scalar"));
}

#[test]
fn seeds_change_samples_but_not_structure() {
    let run = |seed: &str| stdout(&starkcheck(&["verify", "padic-core", "--p", "3", "--samples", "2", "--seed", seed], &[]));
    let (a, b, c) = (run("1"), run("1"), run("2"));
    assert_eq!(a, b);
    assert_ne!(a, c);
    assert_eq!(a.lines().count(), c.lines().count());
}

#[test]
fn stark_table_lists_admissible_residues() {
    let o = starkcheck(&["stark-table", "--m", "5..6"], &[]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let rows: Vec<Vec<&str>> = out.lines().skip(1).map(|l| l.split('\t').collect()).collect();
    let keys: Vec<(&str, &str)> = rows.iter().map(|r| (r[0], r[1])).collect();
    assert_eq!(keys, [("5", "1"), ("5", "2"), ("6", "1")]);
    assert_eq!(rows[0][3], "x^2 - 5x + 5");
    assert_eq!(rows[2][2], "1");
}
