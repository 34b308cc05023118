use assert_cmd::Command;
use predicates::prelude::*;
use tempfile::tempdir;

fn cli() -> Command {
    Command::cargo_bin("hilbert-points").unwrap()
}

#[test]
fn goettsche_golden() {
    cli()
        .args(["goettsche", "--surface", "p2", "--order", "2"])
        .assert()
        .success()
        .stdout("n\tpoincare\n0\t1\n1\t1 + t^2 + t^4\n2\t1 + 2t^2 + 3t^4 + 2t^6 + t^8\n");
}

#[test]
fn euler_golden() {
    cli()
        .args(["euler", "--surface", "k3", "--order", "3"])
        .assert()
        .success()
        .stdout("n\teuler\n0\t1\n1\t24\n2\t324\n3\t3200\n");
}

#[test]
fn strata_golden() {
    cli()
        .args(["strata", "--n", "3", "--h", "2"])
        .assert()
        .success()
        .stdout("stratum\n(3)\n");
    cli()
        .args(["strata", "--n", "3"])
        .assert()
        .success()
        .stdout("stratum\th=0\th=1\th=2\n(3)\t1\t1\t1\n(2,1)\t1\t1\t0\n(1,1,1)\t1\t0\t0\n");
}

#[test]
fn single_row_with_n() {
    cli()
        .args(["punctual", "--n", "4"])
        .assert()
        .success()
        .stdout("n\tpoincare\n4\t1 + t^2 + 2t^4 + t^6\n");
    cli()
        .args(["hodge", "--surface", "p2", "--n", "2"])
        .assert()
        .success()
        .stdout("n\thodge\n2\t1 + 2xy + 3x^2y^2 + 2x^3y^3 + x^4y^4\n");
    cli()
        .args(["ktheory", "--surface", "p2", "--n", "2"])
        .assert()
        .success()
        .stdout("n\tdim_k\ttotal_betti\n2\t9\t9\n");
}

#[test]
fn fock_and_sym() {
    cli()
        .args(["fock", "--surface", "delta", "--order", "3"])
        .assert()
        .success()
        .stdout("n\tcharacter\n0\t1\n1\t1\n2\t1 + t^2\n3\t1 + t^2 + t^4\n");
    cli()
        .args(["sym", "--surface", "p1xp1", "--order", "1"])
        .assert()
        .success()
        .stdout("n\tpoincare\n0\t1\n1\t1 + 2t^2 + t^4\n");
}

#[test]
fn output_file_and_determinism() {
    let dir = tempdir().unwrap();
    let path = dir.path().join("k3.tsv");
    cli()
        .args([
            "goettsche",
            "--surface",
            "k3",
            "--order",
            "3",
            "--format",
            "tsv",
            "--output",
        ])
        .arg(&path)
        .assert()
        .success()
        .stdout("");
    let written = std::fs::read_to_string(&path).unwrap();
    let again = cli()
        .args(["goettsche", "--surface", "k3", "--order", "3"])
        .output()
        .unwrap();
    assert_eq!(written.as_bytes(), again.stdout.as_slice());
    assert!(written.starts_with("n\tpoincare\n0\t1\n1\t1 + 22t^2 + t^4\n"));
}

#[test]
fn surface_config_file() {
    let dir = tempdir().unwrap();
    let path = dir.path().join("k3.cfg");
    std::fs::write(&path, "# K3\nname=my-k3\nbetti=1,0,22,0,1\neuler=24\n").unwrap();
    cli()
        .args(["euler", "--order", "2", "--surface"])
        .arg(&path)
        .assert()
        .success()
        .stdout("n\teuler\n0\t1\n1\t24\n2\t324\n");

    std::fs::write(&path, "betti=1,0,22,0,1\neuler=23\n").unwrap();
    cli()
        .args(["euler", "--surface"])
        .arg(&path)
        .assert()
        .code(2)
        .stderr(predicate::str::contains("euler"));

    std::fs::write(&path, "betti=1,0,22\n").unwrap();
    cli()
        .args(["goettsche", "--surface"])
        .arg(&path)
        .assert()
        .code(2)
        .stderr(predicate::str::contains("betti"));
}

#[test]
fn adhm_triple_file() {
    let dir = tempdir().unwrap();
    let path = dir.path().join("pair.txt");
    std::fs::write(&path, "2\n1/2, 0\n0, 1/3 i\n0, 0\n0, 1/2-1/2 i\n1, 1\n").unwrap();
    cli()
        .args(["adhm", "--triple"])
        .arg(&path)
        .assert()
        .success()
        .stdout(predicate::str::contains("commuting\ttrue\n"))
        .stdout(predicate::str::contains("stable\ttrue\n"))
        .stdout(predicate::str::contains(
            "support\t(1/3 i, 1/2-1/2 i) + (1/2, 0)\n",
        ))
        .stdout(predicate::str::contains("in_bidisk\ttrue\n"));

    std::fs::write(&path, "2\n1, 0\n0, 1\n").unwrap();
    cli()
        .args(["adhm", "--triple"])
        .arg(&path)
        .assert()
        .code(2)
        .stderr(predicate::str::contains("--triple"));
}

#[test]
fn adhm_monomial_listing() {
    cli().args(["adhm", "--n", "2"]).assert().success().stdout(
        "partition\tcommuting\tstable\tsupport\tin_bidisk\tstaircase\n\
             (2)\ttrue\ttrue\t2*(0, 0)\ttrue\t(2)\n\
             (1,1)\ttrue\ttrue\t2*(0, 0)\ttrue\t(1,1)\n",
    );
}

#[test]
fn commutators_and_selfcheck_pass() {
    cli()
        .args(["commutators", "--surface", "abelian", "--samples", "50"])
        .assert()
        .success()
        .stdout(predicate::str::contains(
            "[R,P]=c\tabelian\t50 samples\t0\n",
        ));
    cli()
        .args(["selfcheck", "--order", "6"])
        .assert()
        .success()
        .stdout(predicate::str::contains("FAIL").not())
        .stdout(predicate::str::contains("goettsche\tk3\t6\tpass\n"));
}

#[test]
fn usage_errors_exit_2() {
    cli().assert().code(2);
    cli()
        .args(["goettsche"])
        .assert()
        .code(2)
        .stderr(predicate::str::contains("--surface"));
    cli()
        .args(["goettsche", "--surface", "enriques"])
        .assert()
        .code(2)
        .stderr(predicate::str::contains("--surface"));
    cli()
        .args(["strata"])
        .assert()
        .code(2)
        .stderr(predicate::str::contains("--n"));
    cli()
        .args(["euler", "--surface", "k3", "--format", "json"])
        .assert()
        .code(2);
    cli()
        .args(["hodge", "--surface", "delta", "--n", "1", "--order", "1"])
        .assert()
        .code(2);
    cli().arg("--help").assert().success();
}
