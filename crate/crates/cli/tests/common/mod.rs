#![allow(dead_code)]

use std::path::PathBuf;
use std::process::Command;

pub fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

/// Runs the binary from the workspace root; returns (exit code, stdout, stderr).
pub fn hlysa(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_hlysa"))
        .args(args)
        .current_dir(root())
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

/// Machine-format invocations with committed golden outputs.
pub const GOLDEN: &[(&str, &[&str])] = &[
    ("verify_a0", &["verify", "fixtures/a0.json"]),
    ("verify_a1", &["verify", "fixtures/a1.json"]),
    ("verify_a2", &["verify", "fixtures/a2.json"]),
    ("verify_a3", &["verify", "fixtures/a3.json"]),
    ("verify_broken_skew", &["verify", "fixtures/a1_broken_skew.json"]),
    ("derivations_a1_tower", &["derivations", "fixtures/a1.json", "--check-tower", "--kmax", "1"]),
    ("derivations_a3_der_k1", &["derivations", "fixtures/a3.json", "--family", "der", "--k", "1"]),
    ("cohomology_a0", &["cohomology", "fixtures/a0.json"]),
    ("cohomology_a1", &["cohomology", "fixtures/a1.json"]),
    ("cohomology_sl2", &["cohomology", "fixtures/sl2_triple.json"]),
    ("rep_a1_adjoint", &["rep", "fixtures/a1.json", "fixtures/a1_adjoint_rep.json"]),
    ("rep_a0_zero", &["rep", "fixtures/a0.json", "fixtures/a0_zero_rep.json"]),
    ("rep_a1_random", &["rep", "fixtures/a1.json", "--random", "1:1", "--samples", "5", "--seed", "3"]),
    ("deform_verify_a0_a1", &["deform", "verify", "fixtures/a0.json", "fixtures/a0_a1_deformation.json"]),
    ("deform_trivialize_a0_a1", &["deform", "trivialize", "fixtures/a0.json", "fixtures/a0_a1_deformation.json"]),
    (
        "deform_trivialize_coboundary",
        &["deform", "trivialize", "fixtures/a1.json", "fixtures/a1_coboundary_deformation.json"],
    ),
    (
        "deform_compare",
        &[
            "deform",
            "compare",
            "fixtures/a1.json",
            "fixtures/a1_null_deformation.json",
            "fixtures/a1_coboundary_deformation.json",
        ],
    ),
    (
        "deform_transport",
        &["deform", "transport", "fixtures/a1.json", "fixtures/a1_null_deformation.json", "fixtures/a1_iso.json"],
    ),
    ("center_a1", &["center", "fixtures/a1.json"]),
];

pub fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(format!("{name}.json"))
}

pub fn machine(args: &[&str]) -> (i32, String) {
    let mut full = vec!["--format", "machine"];
    full.extend_from_slice(args);
    let (code, out, _) = hlysa(&full);
    (code, out)
}
